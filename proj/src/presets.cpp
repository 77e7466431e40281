#include "nshift/presets.hpp"

#include <sstream>

#include "nshift/errors.hpp"

namespace nshift {

PlatformChoice parse_platform_choice(const std::string& name) {
  if (name == "kls2x2") return {name, make_field_platform(FieldSpec::gf2_127(), 2), false};
  if (name == "kls2x2-power4") return {name, make_field_platform(FieldSpec::gf2_127(), 2), true};
  if (name == "hkks3x3") return {name, make_group_algebra_platform(FieldSpec::prime(7), build_a5(), 3), false};
  if (name.rfind("toy:", 0) == 0) {
    std::istringstream in(name.substr(4));
    std::uint64_t p = 0;
    unsigned d = 0;
    std::size_t n = 0;
    char c1 = 0, c2 = 0;
    if (!(in >> p >> c1 >> d >> c2 >> n) || c1 != ',' || c2 != ',' || !in.eof())
      throw ValidationError("toy platform must be toy:p,d,n");
    if (n == 0 || n > 16) throw ValidationError("toy matrix size must be in 1..16");
    return {name, make_field_platform(FieldSpec::standard(p, d), n), false};
  }
  throw ValidationError("unknown platform '" + name + "'");
}

Endomorphism make_phi(const PlatformChoice& choice, const Instance& inst) {
  if (choice.power4) return Endomorphism::compose(4, inst.H, inst.H_inv);
  return Endomorphism::inner(inst.H, inst.H_inv);
}

Method default_method(const PlatformChoice& choice, bool masked) {
  if (masked) return Method::Masked;
  if (choice.power4 || !choice.spec->over_field()) return Method::General;
  return Method::Conjugation;
}

Session simulate_session(const RunConfig& cfg) {
  const PlatformChoice choice = parse_platform_choice(cfg.platform);
  if (cfg.exp_bound < 2) throw ValidationError("exponent bound must be >= 2");
  if (cfg.masked && choice.power4) throw ValidationError("masked sessions use the inner automorphism");
  Rng rng(cfg.seed);
  InstanceVariant variant = cfg.masked ? InstanceVariant::Masked
                            : choice.power4 ? InstanceVariant::Composite
                                            : InstanceVariant::Inner;
  Instance inst = sample_instance(choice.spec, variant, rng);
  Endomorphism phi = make_phi(choice, inst);
  const BigInt m = rng.between(2, cfg.exp_bound);
  const BigInt n = rng.between(2, cfg.exp_bound);
  return run_session(phi, inst.M, m, n, cfg.masked, rng);
}

}  // namespace nshift
