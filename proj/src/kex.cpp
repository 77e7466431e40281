#include "nshift/kex.hpp"

#include "nshift/errors.hpp"

namespace nshift {

namespace {

// y = (s, h) with phi^s already resolved
SemidirectElement sd_mul_resolved(const SemidirectElement& x, const SemidirectElement& y, const Endomorphism& phi_s) {
  return {x.exponent + y.exponent, phi_s.apply(x.part) * y.part};
}

}  // namespace

SemidirectElement sd_mul(const SemidirectElement& x, const SemidirectElement& y, const Endomorphism& phi) {
  if (!(*x.part.spec() == *y.part.spec()) || !(*x.part.spec() == *phi.platform()))
    throw SpecMismatch("semidirect product over different platforms");
  return sd_mul_resolved(x, y, phi.power(y.exponent));
}

PlatformElement orbit_element(const PlatformElement& g, const Endomorphism& phi, const BigInt& k) {
  if (k < 1) throw PreconditionError("orbit index must be >= 1");
  if (!(*g.spec() == *phi.platform())) throw SpecMismatch("g and phi on different platforms");
  // Ladder over bits of k from the least significant end:
  // base = (phi, g)^(2^j) with its phi^(2^j) descriptor cached.
  Endomorphism base_phi = phi;
  PlatformElement base = g;
  std::optional<PlatformElement> acc;
  const auto top = boost::multiprecision::msb(k);
  for (std::size_t j = 0; j <= top; ++j) {
    if (boost::multiprecision::bit_test(k, j)) {
      // acc = acc * base = phi^(2^j)(acc) * base
      acc = acc ? base_phi.apply(*acc) * base : base;
    }
    if (j == top) break;
    base = base_phi.apply(base) * base;
    base_phi = base_phi.then(base_phi);
  }
  return *acc;
}

PlatformElement random_nonzero_combination(const std::vector<PlatformElement>& basis, Rng& rng) {
  if (basis.empty()) throw PreconditionError("empty basis has no nonzero combination");
  FieldRef f = basis.front().spec()->field();
  for (;;) {
    PlatformElement x = PlatformElement::zero(basis.front().spec());
    for (const auto& b : basis) x += b.scaled(random_field_element(f, rng));
    if (!x.is_zero()) return x;
  }
}

Session run_session(const Endomorphism& phi, const PlatformElement& g, const BigInt& m, const BigInt& n, bool masked,
                    Rng& rng) {
  if (m < 1 || n < 1) throw PreconditionError("private exponents must be >= 1");
  const PlatformElement a_m = orbit_element(g, phi, m);
  const PlatformElement a_n = orbit_element(g, phi, n);
  const PlatformElement a_mn = orbit_element(g, phi, m + n);

  Session s{Transcript{phi.platform(), phi, g, a_m, a_n, masked}, SessionSecrets{m, n, std::nullopt, std::nullopt, a_mn}};

  if (masked) {
    if (phi.kind() != Endomorphism::Kind::Inner) throw PreconditionError("masked sessions need an inner automorphism");
    const PlatformElement hm = phi.H() * g;
    if (hm.is_zero()) throw PreconditionError("masked sessions need HM != 0");
    const auto ann = left_annihilator(hm);
    if (ann.empty()) throw PreconditionError("masked sessions need HM singular");
    s.secrets.R = random_nonzero_combination(ann, rng);
    s.secrets.S = random_nonzero_combination(ann, rng);
    s.transcript.alice = a_m + *s.secrets.R;
    s.transcript.bob = a_n + *s.secrets.S;
  }

  // Alice holds m and a_m, receives bob; Bob symmetric.
  const PlatformElement k_alice = phi.power(m).apply(s.transcript.bob) * a_m;
  const PlatformElement k_bob = phi.power(n).apply(s.transcript.alice) * a_n;
  if (k_alice != k_bob) throw InvariantViolation("parties derived different keys");
  if (k_alice != a_mn) throw InvariantViolation("derived key differs from a_{m+n}");
  return s;
}

Session run_session(const Endomorphism& phi, const PlatformElement& g, const BigInt& m, const BigInt& n, bool masked,
                    std::uint64_t seed) {
  Rng rng(seed);
  return run_session(phi, g, m, n, masked, rng);
}

}  // namespace nshift
