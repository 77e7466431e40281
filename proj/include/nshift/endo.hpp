#pragma once

#include <optional>

#include "nshift/bigint.hpp"
#include "nshift/platform.hpp"

namespace nshift {

// Symbolic platform endomorphism. Every variant is the map
//   x -> H^{-1} * psi_e(x) * H
// where psi_e raises entries to the e-th power (e = 1 means no power map)
// and H = I means no conjugation. The variant records which parts are
// present: Compose applies the entry power first, then conjugates.
class Endomorphism {
 public:
  enum class Kind { Identity, Inner, EntryPower, Compose };

  static Endomorphism identity(PlatformRef platform);
  static Endomorphism inner(PlatformElement H, PlatformElement H_inv);
  static Endomorphism entry_power(PlatformRef platform, const BigInt& e);
  static Endomorphism compose(const BigInt& e, PlatformElement H, PlatformElement H_inv);

  Kind kind() const { return kind_; }
  const PlatformRef& platform() const { return platform_; }
  bool has_power() const { return kind_ == Kind::EntryPower || kind_ == Kind::Compose; }
  bool has_conjugation() const { return kind_ == Kind::Inner || kind_ == Kind::Compose; }
  // Reduced exponent in [1, p^d - 1]; 1 when there is no power map.
  const BigInt& exponent() const { return e_; }
  const PlatformElement& H() const;
  const PlatformElement& H_inv() const;

  PlatformElement apply(const PlatformElement& x) const;
  // this map followed by `next`
  Endomorphism then(const Endomorphism& next) const;
  Endomorphism power(const BigInt& k) const;
  // Largest field over which apply() is linear.
  FieldRef scalar_field() const;

 private:
  Endomorphism(Kind kind, PlatformRef platform, BigInt e, std::optional<PlatformElement> H,
               std::optional<PlatformElement> H_inv);

  Kind kind_;
  PlatformRef platform_;
  BigInt e_;
  std::optional<PlatformElement> H_;
  std::optional<PlatformElement> H_inv_;
};

inline PlatformElement endo_apply(const Endomorphism& phi, const PlatformElement& x) { return phi.apply(x); }
inline Endomorphism endo_power(const Endomorphism& phi, const BigInt& k) { return phi.power(k); }
inline FieldRef endo_scalar_field(const Endomorphism& phi) { return phi.scalar_field(); }

}  // namespace nshift
