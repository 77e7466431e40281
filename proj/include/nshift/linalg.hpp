#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "nshift/errors.hpp"
#include "nshift/field.hpp"

namespace nshift {

using Vector = std::vector<FieldElement>;
using Matrix = std::vector<Vector>;  // row-major

Vector zero_vector(FieldRef field, std::size_t dim);
bool is_zero(const Vector& v);
// y <- y - c * x over columns [from, size)
void sub_scaled(Vector& y, const FieldElement& c, const Vector& x, std::size_t from = 0);
Vector mat_vec(const Matrix& a, const Vector& x);

// Incremental row-echelon basis over a scalar field.
//
// Rows are stored in insertion order; each stored echelon row has a leading
// 1 at its pivot column and pivots are distinct. transform(i) gives the
// coefficients of echelon row i over the original vectors 0..i, so any
// reduction can be translated back to a combination of originals.
class Echelon {
 public:
  struct Outcome {
    bool added = false;
    std::optional<Vector> coeffs;  // set when the vector was dependent
  };

  Echelon(FieldRef scalar, std::size_t dim);

  FieldRef scalar() const { return scalar_; }
  std::size_t dim() const { return dim_; }
  std::size_t size() const { return rows_.size(); }

  Outcome insert(const Vector& v);
  // Coefficients over the originals if v lies in the span; no mutation.
  std::optional<Vector> express(const Vector& v) const;
  bool contains(const Vector& v) const { return express(v).has_value(); }

  const Vector& original(std::size_t i) const { return originals_[i]; }
  const Vector& row(std::size_t i) const { return rows_[i]; }
  std::size_t pivot(std::size_t i) const { return pivots_[i]; }
  const Vector& transform(std::size_t i) const { return transform_[i]; }
  // Row indices sorted by pivot column.
  const std::vector<std::size_t>& pivot_order() const { return order_; }

 private:
  void check_dim(const Vector& v) const;
  // Reduces v in place; returns the multiplier used for each stored row.
  Vector reduce(Vector& v) const;
  Vector combine_transforms(const Vector& row_coeffs) const;

  FieldRef scalar_;
  std::size_t dim_;
  std::vector<Vector> rows_;
  std::vector<std::size_t> pivots_;
  std::vector<Vector> transform_;
  std::vector<Vector> originals_;
  std::vector<std::size_t> order_;
};

// Echelon basis whose originals carry an opaque tag (for example the exponent
// pair that produced a basis element).
template <class Tag>
class SpanBasis {
 public:
  struct InsertResult {
    bool added = false;
    std::optional<Vector> coeffs;
  };

  SpanBasis(FieldRef scalar, std::size_t dim) : core_(scalar, dim) {}

  InsertResult insert(const Vector& v, Tag tag) {
    auto out = core_.insert(v);
    if (out.added) tags_.push_back(std::move(tag));
    return {out.added, std::move(out.coeffs)};
  }

  std::optional<Vector> express(const Vector& v) const { return core_.express(v); }
  bool contains(const Vector& v) const { return core_.contains(v); }

  std::size_t size() const { return core_.size(); }
  std::size_t dim() const { return core_.dim(); }
  FieldRef scalar() const { return core_.scalar(); }
  const Tag& tag(std::size_t i) const { return tags_[i]; }
  const std::vector<Tag>& tags() const { return tags_; }
  const Echelon& core() const { return core_; }

 private:
  Echelon core_;
  std::vector<Tag> tags_;
};

template <class Tag>
typename SpanBasis<Tag>::InsertResult span_insert(SpanBasis<Tag>& b, const Vector& v, Tag tag) {
  return b.insert(v, std::move(tag));
}

template <class Tag>
std::optional<Vector> express(const SpanBasis<Tag>& b, const Vector& v) {
  return b.express(v);
}

struct LinearSolution {
  Vector particular;
  std::vector<Vector> nullspace;
};

// Full solution set of A x = rhs by Gauss-Jordan elimination. Pivots are the
// first nonzero entry in ascending column order; nullspace vectors set one
// free variable to 1 and the others to 0, in ascending free-column order.
// Returns nullopt for an inconsistent system.
std::optional<LinearSolution> solve_linear(const Matrix& a, const Vector& rhs, FieldRef field,
                                           std::size_t cols);
std::optional<LinearSolution> solve_linear(const Matrix& a, const Vector& rhs);

std::size_t rank(const Matrix& a, FieldRef field, std::size_t cols);

}  // namespace nshift
