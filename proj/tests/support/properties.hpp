#pragma once

// Property suites shared by the unit tests and the acceptance binary.

#include <cstdint>
#include <string>

#include "nshift/endo.hpp"
#include "nshift/field.hpp"
#include "nshift/platform.hpp"

namespace props {

struct Result {
  std::string name;
  std::size_t cases = 0;
  std::size_t failures = 0;
  std::string first_failure;

  bool ok() const { return cases > 0 && failures == 0; }
  void check(bool cond, const std::string& what) {
    ++cases;
    if (!cond && failures++ == 0) first_failure = what;
  }
};

// Associativity, commutativity, distributivity, identities, inverses.
Result field_axioms(nshift::FieldRef f, std::size_t samples, std::uint64_t seed);
// a^(q-1) = 1 for sampled a != 0.
Result field_fermat(nshift::FieldRef f, std::size_t samples, std::uint64_t seed);
// (a + b)^p = a^p + b^p.
Result field_frobenius(nshift::FieldRef f, std::size_t samples, std::uint64_t seed);
// a * a^{-1} = 1: exhaustive when |F| <= 2^10, sampled otherwise.
Result field_inverse_roundtrip(nshift::FieldRef f, std::size_t samples, std::uint64_t seed);

// Ring axioms for matrix addition/multiplication on random triples.
Result ring_axioms(const nshift::PlatformRef& spec, std::size_t samples, std::uint64_t seed);
// flatten is a linear bijection onto vectors of length D.
Result flatten_linear(const nshift::PlatformRef& spec, nshift::FieldRef scalar, std::size_t samples,
                      std::uint64_t seed);

enum class EndoVariant { Identity, Inner, EntryPower, Compose };
nshift::Endomorphism random_endo(const nshift::PlatformRef& spec, EndoVariant v, std::uint64_t seed);

// Multiplicativity, additivity, linearity over endo_scalar_field and
// semilinearity x -> lambda^e over the full field for entry powers.
Result endo_laws(const nshift::PlatformRef& spec, EndoVariant v, std::size_t samples, std::uint64_t seed);
// endo_power(phi, a + b) = endo_power(phi, a) then endo_power(phi, b), and
// endo_power(phi, k) agrees with k-fold application for k <= 8.
Result endo_power_laws(const nshift::PlatformRef& spec, EndoVariant v, std::size_t samples, std::uint64_t seed);

// Once a_{k+1} is dependent on a_1..a_k, a_{k+j} stays dependent (j <= 20).
Result prefix_lemma(const nshift::PlatformRef& spec, EndoVariant v, std::size_t trials, std::uint64_t seed);
// monomial_closure span contains H^{-k}(HM)^l (full) / H^{-k}(HM)^k (diagonal) for k, l <= 10.
Result span_closure(const nshift::PlatformRef& spec, std::size_t trials, std::uint64_t seed);
// Every annihilator basis element kills A, basis independent, dim = n(n - rank A).
Result annihilator_dimension(const nshift::PlatformRef& spec, std::size_t trials, std::uint64_t seed);
// Echelon membership agrees with a from-scratch rank computation (D <= 8).
Result span_membership_vs_rank(nshift::FieldRef f, std::size_t dim, std::size_t trials, std::uint64_t seed);
// phi^j(a_i) a_j = phi^i(a_j) a_i = a_{i+j} for i, j <= limit.
Result orbit_identity(const nshift::PlatformRef& spec, EndoVariant v, std::size_t limit, std::uint64_t seed);

}  // namespace props
