#pragma once

#include <optional>

#include "nshift/endo.hpp"
#include "nshift/platform.hpp"
#include "nshift/rng.hpp"

namespace nshift {

// (phi^exponent, part) in the semidirect product G x| sgp(phi).
struct SemidirectElement {
  BigInt exponent;
  PlatformElement part;

  bool operator==(const SemidirectElement& o) const { return exponent == o.exponent && part == o.part; }
};

// (phi^r, f) * (phi^s, h) = (phi^{r+s}, phi^s(f) h)
SemidirectElement sd_mul(const SemidirectElement& x, const SemidirectElement& y, const Endomorphism& phi);

// Second component of (phi, g)^k, k >= 1: a_1 = g, a_{k+1} = phi(a_k) g.
// Square-and-multiply over the semidirect product; logarithmic in k.
PlatformElement orbit_element(const PlatformElement& g, const Endomorphism& phi, const BigInt& k);

// Public data of one session.
struct Transcript {
  PlatformRef platform;
  Endomorphism phi;
  PlatformElement g;
  PlatformElement alice;  // a_m, or a_m + R when masked
  PlatformElement bob;    // a_n, or a_n + S when masked
  bool masked = false;
};

struct SessionSecrets {
  BigInt m;
  BigInt n;
  std::optional<PlatformElement> R;
  std::optional<PlatformElement> S;
  PlatformElement true_key;
};

struct Session {
  Transcript transcript;
  SessionSecrets secrets;
};

// Runs the honest exchange and checks that both parties derive a_{m+n}.
// Masked sessions need phi with a conjugating H such that HM is singular and
// nonzero; R, S are uniform nonzero elements of the left annihilator of HM.
Session run_session(const Endomorphism& phi, const PlatformElement& g, const BigInt& m, const BigInt& n, bool masked,
                    Rng& rng);
Session run_session(const Endomorphism& phi, const PlatformElement& g, const BigInt& m, const BigInt& n, bool masked,
                    std::uint64_t seed);

// Uniform random nonzero combination of a basis.
PlatformElement random_nonzero_combination(const std::vector<PlatformElement>& basis, Rng& rng);

}  // namespace nshift
