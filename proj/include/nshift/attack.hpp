#pragma once

#include <optional>
#include <string>
#include <vector>

#include "nshift/endo.hpp"
#include "nshift/kex.hpp"
#include "nshift/linalg.hpp"
#include "nshift/platform.hpp"

namespace nshift {

enum class Method { General, Conjugation, Masked, Commutant };

std::string method_name(Method m);
Method parse_method(const std::string& name);

struct PhaseTimes {
  double offline_ms = 0;   // basis construction, depends only on (g, phi)
  double express_ms = 0;   // decomposing the intercepted value
  double assemble_ms = 0;  // rebuilding the key from the coefficients
};

struct AttackReport {
  Method method = Method::General;
  std::optional<PlatformElement> key;
  std::size_t basis_dim = 0;
  double elapsed_ms = 0;
  bool success = false;
  std::string note;  // diagnostic for failures
  PhaseTimes phases;
};

// Maximal independent prefix {a_1, ..., a_k} of the orbit sequence, flattened
// over the scalar field of phi. Every later a_j lies in its span.
struct OrbitBasis {
  SpanBasis<std::size_t> basis;  // tag = orbit index i
  std::vector<PlatformElement> originals;  // a_1 .. a_k
  std::size_t k = 0;
};

// Throws InvariantViolation if max_dim independent elements are found and
// a_{max_dim + 1} is still independent (impossible when max_dim >= D).
OrbitBasis orbit_prefix_basis(const PlatformElement& g, const Endomorphism& phi, std::size_t max_dim);
OrbitBasis orbit_prefix_basis(const PlatformElement& g, const Endomorphism& phi);

enum class ClosureMode {
  Full,      // all H^{-k} (HM)^l, k, l >= 0
  Diagonal,  // H^{-k} (HM)^k, k >= 1
};

struct BasisTag {
  enum class Part { W, U } part = Part::W;
  std::size_t k = 0;  // W: power of H^{-1}; U: annihilator basis index
  std::size_t l = 0;  // W: power of HM
};

// Basis of W (monomials) optionally followed by annihilator vectors f_j, so
// expressed coefficients split as (eta over W, nu over U).
struct MonomialBasis {
  SpanBasis<BasisTag> basis;
  std::vector<PlatformElement> elements;  // parallel to basis order
  std::size_t w_count = 0;
  std::size_t u_count = 0;
};

MonomialBasis monomial_closure(const PlatformElement& H, const PlatformElement& H_inv, const PlatformElement& M,
                               ClosureMode mode);
// Inverts H itself (field platforms); throws SingularMatrix.
MonomialBasis monomial_closure(const PlatformElement& H, const PlatformElement& M, ClosureMode mode);

// Z = W + U with W from the diagonal closure and U = left annihilator of HM.
MonomialBasis masked_basis(const PlatformElement& H, const PlatformElement& H_inv, const PlatformElement& M);

AttackReport attack_general(const Transcript& t);
AttackReport attack_conjugation(const Transcript& t);
AttackReport attack_masked(const Transcript& t);

struct CommutantOptions {
  std::size_t random_trials = 64;
  std::size_t enumeration_limit = 4096;  // enumerate when |solution space| <= this
  std::uint64_t seed = 0x5eed;
};

struct CommutantCandidate {
  std::optional<PlatformElement> key;
  std::size_t solution_dim = 0;
};

// The linearised commutant search on arbitrary published values: finds an
// invertible Y' with Y'(HM) = (HM)Y' and (pub_m Y')H = H(pub_m Y') and
// returns (pub_m Y') pub_n Y'^{-1}. Field platforms only.
CommutantCandidate commutant_candidate(const PlatformElement& H, const PlatformElement& M,
                                       const PlatformElement& pub_m, const PlatformElement& pub_n,
                                       const CommutantOptions& opts = {});

// Reports failure on masked transcripts: the published values are not orbit
// elements, so a candidate key cannot be justified.
AttackReport attack_commutant(const Transcript& t, const CommutantOptions& opts = {});

AttackReport run_attack(Method method, const Transcript& t);

}  // namespace nshift
