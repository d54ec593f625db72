// Command-line front end: enumerate radical classes, print the type
// table, sweep families of radicals into report files, restate equations
// in recurrence form, and verify the index-shift identity.
//
// Exit codes: 0 success, 1 verification failure, 2 usage error,
// 3 arithmetic overflow, 4 I/O failure.

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "abceq/abceq.hpp"

namespace fs = std::filesystem;
using nlohmann::ordered_json;
using namespace abceq;

namespace {

constexpr const char* kFormatVersion = "v1";

int exit_io_failure(const std::string& what) {
  std::cerr << "abceq: " << what << "\n";
  return 4;
}

std::string joined(const PrimeSet& s, char sep) {
  std::string out;
  for (Natural p : s.primes()) {
    if (!out.empty()) out += sep;
    out += std::to_string(p);
  }
  return out;
}

std::string quality_str(double q) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.4f", q);
  return buf;
}

double quality_rounded(double q) { return std::round(q * 1e4) / 1e4; }

unsigned default_workers() {
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : hw;
}

// ---------------------------------------------------------------------
// report serialization

std::string to_csv(const ClassReport& report) {
  std::string out = "a,b,c,radical,type,quality\n";
  const std::string rad = joined(report.radical, '.');
  for (const auto& row : report.rows) {
    out += std::to_string(row.triple.a) + "," + std::to_string(row.triple.b) +
           "," + std::to_string(row.triple.c) + "," + rad + "," +
           render_type(row.type) + "," + quality_str(row.quality) + "\n";
  }
  return out;
}

ordered_json to_json(const ClassReport& report) {
  ordered_json j;
  j["radical"] = report.radical.primes();
  j["bound"] = report.bound;
  j["count"] = report.total;
  ordered_json per_type = ordered_json::object();
  for (const auto& [type, count] : report.per_type) {
    per_type[render_type(type)] = count;
  }
  j["per_type"] = std::move(per_type);
  ordered_json triples = ordered_json::array();
  for (const auto& row : report.rows) {
    triples.push_back({{"a", row.triple.a},
                       {"b", row.triple.b},
                       {"c", row.triple.c},
                       {"type", render_type(row.type)},
                       {"quality", quality_rounded(row.quality)}});
  }
  j["triples"] = std::move(triples);
  j["stabilization"] = {{"full", report.total},
                        {"half", report.at_half},
                        {"quarter", report.at_quarter}};
  return j;
}

std::string to_table(const ClassReport& report) {
  std::ostringstream out;
  out << "class C_" << joined(report.radical, '.') << "  bound "
      << report.bound << "\n";
  std::size_t wa = 1, wb = 1, wc = 1, wt = 4;
  for (const auto& row : report.rows) {
    wa = std::max(wa, std::to_string(row.triple.a).size());
    wb = std::max(wb, std::to_string(row.triple.b).size());
    wc = std::max(wc, std::to_string(row.triple.c).size());
    wt = std::max(wt, render_type(row.type).size());
  }
  auto pad = [](const std::string& s, std::size_t w) {
    return s + std::string(w - s.size() + 2, ' ');
  };
  out << pad("a", wa) << pad("b", wb) << pad("c", wc) << pad("type", wt)
      << "quality\n";
  for (const auto& row : report.rows) {
    out << pad(std::to_string(row.triple.a), wa)
        << pad(std::to_string(row.triple.b), wb)
        << pad(std::to_string(row.triple.c), wc)
        << pad(render_type(row.type), wt) << quality_str(row.quality) << "\n";
  }
  out << "total " << report.total << "\n";
  for (const auto& [type, count] : report.per_type) {
    out << "  " << render_type(type) << "  " << count << "\n";
  }
  out << "stabilization full=" << report.total << " half=" << report.at_half
      << " quarter=" << report.at_quarter << "\n";
  if (!report.note.empty()) out << "note: " << report.note << "\n";
  return out.str();
}

std::string serialize(const ClassReport& report, const std::string& format) {
  if (format == "csv") return to_csv(report);
  if (format == "json") return to_json(report).dump(2) + "\n";
  return to_table(report);
}

// ---------------------------------------------------------------------
// result cache: stores the exact serialized bytes, keyed by radical,
// bound, format, and format version

fs::path resolve_cache_dir(const std::string& flag_value) {
  if (!flag_value.empty()) return flag_value;
  if (const char* env = std::getenv("ABC_CACHE_DIR"); env && *env) return env;
  return ".abc-cache";
}

std::string cache_key(const PrimeSet& radical, Natural bound,
                      const std::string& format) {
  return "class_" + std::string(kFormatVersion) + "_" + joined(radical, '-') +
         "_" + std::to_string(bound) + "." + format;
}

std::optional<std::string> cache_read(const fs::path& dir,
                                      const std::string& key) {
  std::ifstream in(dir / key, std::ios::binary);
  if (!in) return std::nullopt;
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

// Best effort: a failed cache write only costs the next run time.
void cache_write(const fs::path& dir, const std::string& key,
                 const std::string& bytes) {
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec) return;
  std::ofstream out(dir / key, std::ios::binary | std::ios::trunc);
  out << bytes;
}

// Serialized report, through the cache.
std::string class_bytes(const PrimeSet& radical, Natural bound,
                        const std::string& format, const fs::path& cache_dir,
                        unsigned workers) {
  const std::string key = cache_key(radical, bound, format);
  if (auto hit = cache_read(cache_dir, key)) return *hit;
  const RadicalClass cls = radical.contains(2)
                               ? enumerate_class(radical, bound, workers)
                               : RadicalClass{radical, bound, {}};
  const std::string bytes = serialize(build_report(cls), format);
  cache_write(cache_dir, key, bytes);
  return bytes;
}

int emit(const std::string& bytes, const std::string& output_path) {
  if (output_path.empty()) {
    std::cout << bytes;
    return 0;
  }
  std::ofstream out(output_path, std::ios::binary | std::ios::trunc);
  if (!out) return exit_io_failure("cannot open " + output_path);
  out << bytes;
  out.close();
  if (!out) return exit_io_failure("write failed: " + output_path);
  return 0;
}

// ---------------------------------------------------------------------
// subcommands

int cmd_types(unsigned omega_value) {
  for (const EquationType& t : enumerate_types(omega_value)) {
    std::cout << render_type(t) << "\n";
  }
  std::cout << "count: " << enumerate_types(omega_value).size() << "\n";
  std::cout << "formula: " << count_types(omega_value) << "\n";
  return 0;
}

int cmd_class(const std::vector<Natural>& primes, Natural bound,
              const std::string& format, const std::string& output_path,
              const std::string& cache_flag, unsigned workers) {
  const PrimeSet radical = PrimeSet::from_values(primes);
  if (radical.size() < 2) {
    throw DomainError("need at least 2 primes");
  }
  const std::string bytes = class_bytes(radical, bound, format,
                                        resolve_cache_dir(cache_flag),
                                        workers);
  if (!radical.contains(2)) {
    std::cerr << "empty: radical lacks prime 2\n";
  }
  return emit(bytes, output_path);
}

int cmd_sweep(Natural max_prime, unsigned max_omega, Natural bound,
              const std::string& out_dir, const std::string& cache_flag,
              unsigned workers) {
  std::vector<Natural> pool;
  for (Natural p = 2; p <= max_prime; ++p) {
    if (is_prime(p)) pool.push_back(p);
  }
  std::vector<Radical> targets;
  if (pool.size() >= 2) targets = sweep_targets(pool, max_omega);

  const fs::path dir(out_dir);
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec || !fs::is_directory(dir)) {
    return exit_io_failure("cannot create output directory " + out_dir);
  }
  const fs::path cache_dir = resolve_cache_dir(cache_flag);

  ordered_json summary;
  summary["bound"] = bound;
  summary["max_prime"] = max_prime;
  summary["max_omega"] = max_omega;
  ordered_json entries = ordered_json::array();
  for (const Radical& r : targets) {
    const std::string bytes = class_bytes(r, bound, "json", cache_dir,
                                          workers);
    const fs::path file = dir / ("class_" + joined(r, '-') + ".json");
    std::ofstream out(file, std::ios::binary | std::ios::trunc);
    if (!out) return exit_io_failure("cannot write " + file.string());
    out << bytes;
    out.close();
    if (!out) return exit_io_failure("write failed: " + file.string());

    const ordered_json report = ordered_json::parse(bytes);
    double max_quality = 0.0;
    for (const auto& row : report["triples"]) {
      max_quality = std::max(max_quality, row["quality"].get<double>());
    }
    ordered_json entry;
    entry["radical"] = joined(r, '.');
    entry["count"] = report["count"];
    if (report["count"].get<Natural>() > 0) {
      entry["max_quality"] = max_quality;
    } else {
      entry["max_quality"] = nullptr;
    }
    entry["searched"] = r.contains(2);
    entries.push_back(std::move(entry));
  }
  summary["classes"] = std::move(entries);

  const fs::path summary_file = dir / "summary.json";
  std::ofstream out(summary_file, std::ios::binary | std::ios::trunc);
  if (!out) return exit_io_failure("cannot write " + summary_file.string());
  out << summary.dump(2) << "\n";
  out.close();
  if (!out) return exit_io_failure("write failed: " + summary_file.string());

  std::cout << "wrote " << targets.size() << " class reports and summary.json"
            << "\n";
  return 0;
}

int cmd_verify_recurrence(Natural a_max, Natural n_max) {
  const RecurrenceCheck r = verify_recurrence(a_max, n_max);
  if (r.ok) {
    std::cout << "OK: " << r.checks << " identities checked\n";
    return 0;
  }
  std::cout << "FAIL: P(n + phi(a)) = a + P(n) broken at a=" << r.a
            << " n=" << r.n << ": expected " << r.expected << ", got "
            << r.actual << "\n";
  return 1;
}

int cmd_rewrite(Natural a, Natural b) {
  const AbcTriple t = make_abc_triple(a, b);
  const RecurrenceForm form = rewrite(t);
  const Natural phi = totient(t.a);
  std::cout << "equation: " << t.a << " + " << t.b << " = " << t.c << "\n"
            << "phi(" << t.a << ") = " << phi << "\n"
            << "b = P(" << form.n << "), c = P(" << form.n + phi << ")\n"
            << "recurrence: P(n + " << phi << ") = " << t.a
            << " + P(n) at n = " << form.n << "\n"
            << "radical: " << joined(recurrence_radical(t), '.') << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"bounded-complete enumeration of abc-equations c = a + b "
               "classified by the radical of abc"};
  app.require_subcommand(1);

  unsigned omega_value = 0;
  auto* types =
      app.add_subcommand("types", "list every equation type for a fixed "
                                  "number of radical primes");
  types->add_option("--omega", omega_value, "total distinct primes of abc")
      ->required()
      ->check(CLI::Range(2u, 2000u));

  std::vector<Natural> primes;
  Natural bound = 0;
  std::string format = "table";
  std::string output_path;
  std::string cache_flag;
  unsigned workers = default_workers();
  auto* cls = app.add_subcommand(
      "class", "enumerate every equation with the given exact radical");
  cls->add_option("--primes", primes, "radical primes, e.g. 2,3,5")
      ->required()
      ->delimiter(',');
  cls->add_option("--bound", bound, "largest admitted c")
      ->required()
      ->check(CLI::Range(Natural{3}, kNaturalMax));
  cls->add_option("--format", format, "csv, json, or table")
      ->check(CLI::IsMember({"csv", "json", "table"}));
  cls->add_option("--output", output_path, "write to file instead of stdout");
  cls->add_option("--cache-dir", cache_flag,
                  "result cache (default $ABC_CACHE_DIR or ./.abc-cache)");
  cls->add_option("--workers", workers, "parallel partition scanners")
      ->check(CLI::Range(1u, 4096u));

  Natural max_prime = 0;
  unsigned max_omega = 0;
  std::string out_dir;
  auto* sweep_cmd = app.add_subcommand(
      "sweep", "enumerate every radical over a prime pool into report files");
  sweep_cmd->add_option("--max-prime", max_prime, "pool is all primes <= P")
      ->required()
      ->check(CLI::Range(Natural{2}, Natural{100000}));
  sweep_cmd->add_option("--max-omega", max_omega, "largest radical size")
      ->required()
      ->check(CLI::Range(2u, 64u));
  sweep_cmd->add_option("--bound", bound, "largest admitted c")
      ->required()
      ->check(CLI::Range(Natural{3}, kNaturalMax));
  sweep_cmd->add_option("--out-dir", out_dir, "report directory")->required();
  sweep_cmd->add_option("--cache-dir", cache_flag,
                        "result cache (default $ABC_CACHE_DIR or "
                        "./.abc-cache)");
  sweep_cmd->add_option("--workers", workers, "parallel partition scanners")
      ->check(CLI::Range(1u, 4096u));

  Natural a_max = 0, n_max = 0;
  auto* verify = app.add_subcommand(
      "verify-recurrence", "check P(n + phi(a)) = a + P(n) on a grid");
  verify->add_option("--a-max", a_max, "largest modulus")
      ->required()
      ->check(CLI::Range(Natural{1}, kNaturalMax));
  verify->add_option("--n-max", n_max, "largest index")
      ->required()
      ->check(CLI::Range(Natural{1}, kNaturalMax));

  Natural rw_a = 0, rw_b = 0;
  auto* rw = app.add_subcommand(
      "rewrite", "restate c = a + b as P(n + phi(a)) = a + P(n)");
  rw->add_option("--a", rw_a, "smaller summand")
      ->required()
      ->check(CLI::Range(Natural{1}, kNaturalMax));
  rw->add_option("--b", rw_b, "larger summand")
      ->required()
      ->check(CLI::Range(Natural{1}, kNaturalMax));

  try {
    app.parse(argc, argv);
    if (types->parsed()) return cmd_types(omega_value);
    if (cls->parsed()) {
      return cmd_class(primes, bound, format, output_path, cache_flag,
                       workers);
    }
    if (sweep_cmd->parsed()) {
      return cmd_sweep(max_prime, max_omega, bound, out_dir, cache_flag,
                       workers);
    }
    if (verify->parsed()) return cmd_verify_recurrence(a_max, n_max);
    if (rw->parsed()) return cmd_rewrite(rw_a, rw_b);
    return 2;
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  } catch (const OverflowError& e) {
    std::cerr << "abceq: overflow: " << e.what() << "\n";
    return 3;
  } catch (const DomainError& e) {
    std::cerr << "abceq: " << e.what() << "\n";
    return 2;
  } catch (const fs::filesystem_error& e) {
    return exit_io_failure(e.what());
  } catch (const std::exception& e) {
    std::cerr << "abceq: internal error: " << e.what() << "\n";
    return 4;
  }
}
