#pragma once

#include <memory>
#include <optional>
#include <vector>

#include "nshift/field.hpp"
#include "nshift/group.hpp"
#include "nshift/linalg.hpp"
#include "nshift/rng.hpp"

namespace nshift {

// n x n matrices over a base ring: either a field F or a group algebra F[G].
class PlatformSpec {
 public:
  PlatformSpec(FieldRef field, std::size_t n, GroupRef group = nullptr);

  FieldRef field() const { return field_; }
  const GroupRef& group() const { return group_; }
  std::size_t n() const { return n_; }
  bool over_field() const { return group_ == nullptr; }
  // Base-field coefficients per matrix entry.
  std::size_t width() const { return group_ ? group_->order() : 1; }
  std::size_t coeff_count() const { return n_ * n_ * width(); }
  // Length of flatten() over `scalar` (the base field or its prime subfield).
  std::size_t flat_dim(FieldRef scalar) const;

  bool operator==(const PlatformSpec& o) const {
    return field_ == o.field_ && n_ == o.n_ && group_ == o.group_;
  }

 private:
  FieldRef field_;
  std::size_t n_;
  GroupRef group_;
};

using PlatformRef = std::shared_ptr<const PlatformSpec>;

PlatformRef make_field_platform(FieldRef field, std::size_t n);
PlatformRef make_group_algebra_platform(FieldRef field, GroupRef group, std::size_t n);

// Square matrix over the platform's base ring. Storage is the base-field
// coefficient list: entries row-major, and within a group-algebra entry the
// coefficient of group element k at offset k.
class PlatformElement {
 public:
  PlatformElement(PlatformRef spec, std::vector<FieldElement> coeffs);

  static PlatformElement zero(PlatformRef spec);
  static PlatformElement identity(PlatformRef spec);
  // Field platforms only: entries row-major.
  static PlatformElement from_entries(PlatformRef spec, const std::vector<FieldElement>& entries);
  static PlatformElement from_ints(PlatformRef spec, const std::vector<std::uint64_t>& entries);
  static PlatformElement from_group_entries(PlatformRef spec, const std::vector<GroupAlgebraElement>& entries);

  const PlatformRef& spec() const { return spec_; }
  std::size_t n() const { return spec_->n(); }
  const std::vector<FieldElement>& coeffs() const { return coeffs_; }

  const FieldElement& at(std::size_t i, std::size_t j) const;  // field platforms
  void set(std::size_t i, std::size_t j, const FieldElement& v);
  GroupAlgebraElement ga_at(std::size_t i, std::size_t j) const;  // group-algebra platforms
  void ga_set(std::size_t i, std::size_t j, const GroupAlgebraElement& v);

  bool is_zero() const;
  bool is_identity() const;

  PlatformElement operator+(const PlatformElement& o) const;
  PlatformElement operator-(const PlatformElement& o) const;
  PlatformElement operator*(const PlatformElement& o) const;
  PlatformElement& operator+=(const PlatformElement& o) { return *this = *this + o; }
  // Multiply by a scalar from the base field or its prime subfield.
  PlatformElement scaled(const FieldElement& s) const;
  // Entry-wise x -> x^e (field platforms).
  PlatformElement entry_pow(const BigInt& e) const;
  PlatformElement pow(const BigInt& k) const;

  bool operator==(const PlatformElement& o) const { return *spec_ == *o.spec_ && coeffs_ == o.coeffs_; }
  bool operator!=(const PlatformElement& o) const { return !(*this == o); }

 private:
  void check_same(const PlatformElement& o) const;
  PlatformElement mul_field(const PlatformElement& o) const;
  PlatformElement mul_group_algebra(const PlatformElement& o) const;

  PlatformRef spec_;
  std::vector<FieldElement> coeffs_;
};

inline PlatformElement mat_mul(const PlatformElement& a, const PlatformElement& b) { return a * b; }

// Gauss-Jordan inverse over a field platform. Throws SingularMatrix.
PlatformElement mat_inverse(const PlatformElement& a);
std::optional<PlatformElement> try_inverse(const PlatformElement& a);

// Inverse on any platform via the minimal polynomial of `a` over the base
// field: if a^r = sum_{i<r} c_i a^i with c_0 != 0 then
// a^{-1} = (a^{r-1} - sum_{i>=1} c_i a^{i-1}) / c_0. Throws SingularMatrix
// when c_0 = 0 (a is a zero divisor).
PlatformElement inverse_via_minimal_polynomial(const PlatformElement& a);

std::size_t matrix_rank(const PlatformElement& a);

// Coordinates over `scalar`, which must be the base field or its prime
// subfield (restriction of scalars expands each coefficient into d digits).
Vector flatten(const PlatformElement& a, FieldRef scalar);
PlatformElement unflatten(const PlatformRef& spec, const Vector& v, FieldRef scalar);

// Basis of {X : X a = 0} over the base field (field platforms).
std::vector<PlatformElement> left_annihilator(const PlatformElement& a);

enum class InstanceVariant { Inner, Composite, Masked };

struct Instance {
  PlatformElement H;
  PlatformElement H_inv;
  PlatformElement M;
};

PlatformElement random_element(const PlatformRef& spec, Rng& rng);
FieldElement random_field_element(FieldRef field, Rng& rng);
FieldElement random_nonzero(FieldRef field, Rng& rng);

// Deterministic sample of public parameters. Inner/Composite: H invertible,
// M uniform. Masked (field platforms, n >= 2): additionally M singular and
// HM != 0. Group-algebra platforms build H from elementary and monomial
// factors so that H^{-1} is known by construction.
Instance sample_instance(const PlatformRef& spec, InstanceVariant variant, Rng& rng);
Instance sample_instance(const PlatformRef& spec, InstanceVariant variant, std::uint64_t seed);

}  // namespace nshift
