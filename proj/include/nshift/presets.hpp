#pragma once

#include <string>

#include "nshift/attack.hpp"
#include "nshift/kex.hpp"
#include "nshift/platform.hpp"

namespace nshift {

// Named configurations:
//   kls2x2         M_2(GF(2^127)), phi = conjugation by H
//   kls2x2-power4  M_2(GF(2^127)), phi = entries to the 4th power, then conjugation
//   hkks3x3        M_3(GF(7)[A5]), phi = conjugation by H
//   toy:p,d,n      M_n(GF(p^d)), phi = conjugation by H
struct PlatformChoice {
  std::string name;
  PlatformRef spec;
  bool power4 = false;
};

PlatformChoice parse_platform_choice(const std::string& name);

struct RunConfig {
  std::string platform = "kls2x2";
  bool masked = false;
  BigInt exp_bound = BigInt(1) << 64;  // m, n uniform in [2, exp_bound]
  std::uint64_t seed = 1;
};

Endomorphism make_phi(const PlatformChoice& choice, const Instance& inst);
// Attack method the workbench uses for a configuration by default.
Method default_method(const PlatformChoice& choice, bool masked);

// Samples public parameters and private exponents from cfg.seed, then runs
// the honest exchange.
Session simulate_session(const RunConfig& cfg);

}  // namespace nshift
