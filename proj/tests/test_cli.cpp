#include <catch2/catch_amalgamated.hpp>
#include <json.hpp>

#include "subprocess.hpp"

using testutil::RunResult;
using testutil::TempDir;
using testutil::cli_path;
using testutil::run_command;
using testutil::slurp;

namespace {

RunResult cli(const std::string& args) {
  return run_command(cli_path() + " " + args);
}

// class runs in tests get their own cold cache unless stated otherwise
RunResult cli_cold(const std::string& args, const TempDir& cache) {
  return cli(args + " --cache-dir " + cache.path().string());
}

}  // namespace

TEST_CASE("types prints the column for a fixed omega") {
  const RunResult r = cli("types --omega 3");
  CHECK(r.exit_code == 0);
  CHECK(r.out ==
        "(p,1,pp)\n(p,p,p)\n(pp,1,p)\ncount: 3\nformula: 3\n");

  const RunResult two = cli("types --omega 2");
  CHECK(two.exit_code == 0);
  CHECK(two.out == "(p,1,p)\ncount: 1\nformula: 1\n");

  CHECK(cli("types --omega 1").exit_code == 2);
  CHECK(cli("types").exit_code == 2);
}

TEST_CASE("class emits the frozen CSV layout") {
  const TempDir cache;
  const RunResult r =
      cli_cold("class --primes 2,3 --bound 1000000 --format csv", cache);
  REQUIRE(r.exit_code == 0);
  CHECK(r.out ==
        "a,b,c,radical,type,quality\n"
        "1,2,3,2.3,(p,1,p),0.6131\n"
        "1,3,4,2.3,(p,1,p),0.7737\n"
        "1,8,9,2.3,(p,1,p),1.2263\n");
}

TEST_CASE("class rejects invalid primes with exit 2") {
  const RunResult r = cli("class --primes 2,4 --bound 1000");
  CHECK(r.exit_code == 2);
  CHECK(r.err.find("4 is not prime") != std::string::npos);

  CHECK(cli("class --primes 2 --bound 1000").exit_code == 2);
  CHECK(cli("class --primes 2,3 --bound 2").exit_code == 2);
  CHECK(cli("class --primes 2,3 --bound 1000 --format xml").exit_code == 2);
}

TEST_CASE("an odd radical yields an empty report plus a parity note") {
  const TempDir cache;
  const RunResult r =
      cli_cold("class --primes 3,5 --bound 1000 --format csv", cache);
  CHECK(r.exit_code == 0);
  CHECK(r.out == "a,b,c,radical,type,quality\n");
  CHECK(r.err.find("empty: radical lacks prime 2") != std::string::npos);
}

TEST_CASE("class json carries the full report") {
  const TempDir cache;
  const RunResult r =
      cli_cold("class --primes 2,3 --bound 1000000 --format json", cache);
  REQUIRE(r.exit_code == 0);
  CHECK(r.out.find("{\n  \"radical\"") == 0);  // two-space indent
  CHECK(r.out.back() == '\n');

  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["radical"] == nlohmann::json({2, 3}));
  CHECK(j["bound"] == 1000000);
  CHECK(j["count"] == 3);
  CHECK(j["per_type"]["(p,1,p)"] == 3);
  REQUIRE(j["triples"].size() == 3);
  CHECK(j["triples"][0]["a"] == 1);
  CHECK(j["triples"][0]["b"] == 2);
  CHECK(j["triples"][0]["c"] == 3);
  CHECK(j["triples"][0]["type"] == "(p,1,p)");
  CHECK(j["triples"][0]["quality"] == 0.6131);
  CHECK(j["triples"][2]["quality"] == 1.2263);
  CHECK(j["stabilization"]["full"] == 3);
  CHECK(j["stabilization"]["half"] == 3);
  CHECK(j["stabilization"]["quarter"] == 3);

  // stable key order
  const auto radical_pos = r.out.find("\"radical\"");
  const auto bound_pos = r.out.find("\"bound\"");
  const auto stab_pos = r.out.find("\"stabilization\"");
  CHECK(radical_pos < bound_pos);
  CHECK(bound_pos < stab_pos);
}

TEST_CASE("cached and fresh outputs are byte-identical") {
  const TempDir cache;
  const std::string args =
      "class --primes 2,3,5 --bound 20000 --format json";
  const RunResult cold = cli_cold(args, cache);
  REQUIRE(cold.exit_code == 0);
  // cache file now exists
  bool have_cache_file = false;
  for (const auto& entry :
       std::filesystem::directory_iterator(cache.path())) {
    have_cache_file |= entry.path().filename().string().find("class_v1_") !=
                       std::string::npos;
  }
  CHECK(have_cache_file);

  const RunResult warm = cli_cold(args, cache);
  REQUIRE(warm.exit_code == 0);
  CHECK(warm.out == cold.out);

  const TempDir other_cache;
  const RunResult fresh = cli_cold(args, other_cache);
  CHECK(fresh.out == cold.out);
}

TEST_CASE("the cache honors ABC_CACHE_DIR with the flag winning") {
  const TempDir env_dir;
  const TempDir flag_dir;
  const std::string base = "class --primes 2,3 --bound 1000 --format csv";

  const RunResult via_env = run_command("ABC_CACHE_DIR=" +
                                        env_dir.path().string() + " " +
                                        cli_path() + " " + base);
  REQUIRE(via_env.exit_code == 0);
  CHECK(!std::filesystem::is_empty(env_dir.path()));

  const RunResult via_flag = run_command(
      "ABC_CACHE_DIR=" + env_dir.path().string() + " " + cli_path() +
      " class --primes 2,3 --bound 2000 --format csv --cache-dir " +
      flag_dir.path().string());
  REQUIRE(via_flag.exit_code == 0);
  bool flag_dir_used = false;
  for (const auto& entry :
       std::filesystem::directory_iterator(flag_dir.path())) {
    flag_dir_used |= entry.path().filename().string().find("2000") !=
                     std::string::npos;
  }
  CHECK(flag_dir_used);
}

TEST_CASE("worker count never changes the bytes") {
  const TempDir cache_a;
  const TempDir cache_b;
  const std::string args =
      "class --primes 2,3,5,7 --bound 50000 --format csv";
  const RunResult one = cli_cold(args + " --workers 1", cache_a);
  const RunResult eight = cli_cold(args + " --workers 8", cache_b);
  REQUIRE(one.exit_code == 0);
  REQUIRE(eight.exit_code == 0);
  CHECK(one.out == eight.out);
}

TEST_CASE("--output writes the same bytes to a file") {
  const TempDir dir;
  const TempDir cache;
  const auto file = dir.path() / "report.csv";
  const RunResult direct =
      cli_cold("class --primes 2,3 --bound 1000 --format csv", cache);
  const RunResult to_file =
      cli_cold("class --primes 2,3 --bound 1000 --format csv --output " +
                   file.string(),
               cache);
  REQUIRE(to_file.exit_code == 0);
  CHECK(to_file.out.empty());
  CHECK(slurp(file) == direct.out);
}

TEST_CASE("sweep writes one report per radical plus a summary") {
  const TempDir out;
  const TempDir cache;
  const std::string args = "sweep --max-prime 5 --max-omega 3 --bound 10000 "
                           "--out-dir " +
                           out.path().string();
  const RunResult r = cli_cold(args, cache);
  REQUIRE(r.exit_code == 0);

  for (const char* name : {"class_2-3.json", "class_2-5.json",
                           "class_3-5.json", "class_2-3-5.json",
                           "summary.json"}) {
    CHECK(std::filesystem::exists(out.path() / name));
  }

  const auto summary =
      nlohmann::json::parse(slurp(out.path() / "summary.json"));
  CHECK(summary["bound"] == 10000);
  REQUIRE(summary["classes"].size() == 4);
  CHECK(summary["classes"][0]["radical"] == "2.3");
  CHECK(summary["classes"][0]["searched"] == true);
  // {3,5} is reported empty without search
  for (const auto& entry : summary["classes"]) {
    if (entry["radical"] == "3.5") {
      CHECK(entry["count"] == 0);
      CHECK(entry["searched"] == false);
      CHECK(entry["max_quality"].is_null());
    }
  }

  const auto c23 = nlohmann::json::parse(slurp(out.path() / "class_2-3.json"));
  CHECK(c23["count"] == 3);  // 1+2=3, 1+3=4, 1+8=9; oracle-checked in units

  // warm rerun reproduces every byte
  std::map<std::string, std::string> before;
  for (const auto& entry : std::filesystem::directory_iterator(out.path())) {
    before[entry.path().filename().string()] = slurp(entry.path());
  }
  const RunResult again = cli_cold(args, cache);
  REQUIRE(again.exit_code == 0);
  for (const auto& [name, bytes] : before) {
    CHECK(slurp(out.path() / name) == bytes);
  }
}

TEST_CASE("sweep fails with exit 4 when the directory cannot be made") {
  const TempDir dir;
  const auto blocker = dir.path() / "not-a-dir";
  std::ofstream(blocker) << "x";
  const RunResult r = cli("sweep --max-prime 5 --max-omega 2 --bound 1000 "
                          "--out-dir " +
                          (blocker / "sub").string());
  CHECK(r.exit_code == 4);
}

TEST_CASE("verify-recurrence reports the check count") {
  const RunResult r = cli("verify-recurrence --a-max 1 --n-max 1");
  CHECK(r.exit_code == 0);
  CHECK(r.out == "OK: 1 identities checked\n");

  const RunResult grid = cli("verify-recurrence --a-max 40 --n-max 60");
  CHECK(grid.exit_code == 0);
  CHECK(grid.out == "OK: 2400 identities checked\n");
}

TEST_CASE("rewrite prints the recurrence form") {
  const RunResult r = cli("rewrite --a 4 --b 5");
  REQUIRE(r.exit_code == 0);
  CHECK(r.out.find("equation: 4 + 5 = 9") != std::string::npos);
  CHECK(r.out.find("phi(4) = 2") != std::string::npos);
  CHECK(r.out.find("b = P(3), c = P(5)") != std::string::npos);
  CHECK(r.out.find("P(n + 2) = 4 + P(n) at n = 3") != std::string::npos);
  CHECK(r.out.find("radical: 2.3.5") != std::string::npos);

  CHECK(cli("rewrite --a 6 --b 9").exit_code == 2);
  CHECK(cli("rewrite --a 5 --b 3").exit_code == 2);
}

TEST_CASE("arithmetic overflow maps to exit 3") {
  // a + b tops 2^63 - 1
  const RunResult r = cli("rewrite --a 4611686018427387904 "
                          "--b 4611686018427387905");
  CHECK(r.exit_code == 3);
}
