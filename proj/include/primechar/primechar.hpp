#pragma once

#include "binomial.hpp"
#include "characterization.hpp"
#include "core_arith.hpp"
#include "errors.hpp"
#include "natural.hpp"
#include "prime_power_theorem.hpp"
#include "scan.hpp"
