#pragma once

#include "abceq/arith.hpp"
#include "abceq/classes.hpp"
#include "abceq/coprime.hpp"
#include "abceq/smooth.hpp"
#include "abceq/types.hpp"
