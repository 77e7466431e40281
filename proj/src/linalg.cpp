#include "nshift/linalg.hpp"

#include <algorithm>

namespace nshift {

Vector zero_vector(FieldRef field, std::size_t dim) { return Vector(dim, field->zero()); }

bool is_zero(const Vector& v) {
  return std::all_of(v.begin(), v.end(), [](const FieldElement& x) { return x.is_zero(); });
}

void sub_scaled(Vector& y, const FieldElement& c, const Vector& x, std::size_t from) {
  if (c.is_zero()) return;
  if (c.is_one()) {
    for (std::size_t j = from; j < y.size(); ++j)
      if (!x[j].is_zero()) y[j] -= x[j];
    return;
  }
  for (std::size_t j = from; j < y.size(); ++j)
    if (!x[j].is_zero()) y[j] -= c * x[j];
}

Vector mat_vec(const Matrix& a, const Vector& x) {
  if (a.empty()) return {};
  Vector out;
  out.reserve(a.size());
  for (const auto& row : a) {
    if (row.size() != x.size()) throw DimensionMismatch("mat_vec: row length");
    FieldElement acc = x.empty() ? row.front().spec()->zero() : x.front().spec()->zero();
    for (std::size_t j = 0; j < x.size(); ++j)
      if (!row[j].is_zero() && !x[j].is_zero()) acc += row[j] * x[j];
    out.push_back(acc);
  }
  return out;
}

// ---------------------------------------------------------------------------

Echelon::Echelon(FieldRef scalar, std::size_t dim) : scalar_(scalar), dim_(dim) {}

void Echelon::check_dim(const Vector& v) const {
  if (v.size() != dim_) throw DimensionMismatch("vector length does not match ambient dimension");
  for (const auto& x : v)
    if (x.spec() != scalar_) throw SpecMismatch("vector entry over the wrong scalar field");
}

Vector Echelon::reduce(Vector& v) const {
  Vector mult(rows_.size(), scalar_->zero());
  for (std::size_t r : order_) {
    const std::size_t p = pivots_[r];
    if (v[p].is_zero()) continue;
    mult[r] = v[p];
    sub_scaled(v, mult[r], rows_[r], p);
  }
  return mult;
}

Vector Echelon::combine_transforms(const Vector& row_coeffs) const {
  Vector out(originals_.size(), scalar_->zero());
  for (std::size_t r = 0; r < row_coeffs.size(); ++r) {
    if (row_coeffs[r].is_zero()) continue;
    const Vector& t = transform_[r];
    for (std::size_t j = 0; j < t.size(); ++j)
      if (!t[j].is_zero()) out[j] += row_coeffs[r] * t[j];
  }
  return out;
}

Echelon::Outcome Echelon::insert(const Vector& v) {
  check_dim(v);
  Vector w = v;
  Vector mult = reduce(w);
  auto lead = std::find_if(w.begin(), w.end(), [](const FieldElement& x) { return !x.is_zero(); });
  if (lead == w.end()) return {false, combine_transforms(mult)};

  const std::size_t pivot = static_cast<std::size_t>(lead - w.begin());
  const FieldElement s = lead->inv();
  for (std::size_t j = pivot; j < dim_; ++j) w[j] *= s;

  // echelon row = (v - sum mult[r] row_r) * s, expressed over originals
  const std::size_t idx = rows_.size();
  originals_.push_back(v);
  Vector t = combine_transforms(mult);
  for (auto& x : t) x = -x * s;
  t[idx] = s;

  rows_.push_back(std::move(w));
  pivots_.push_back(pivot);
  transform_.push_back(std::move(t));
  auto pos = std::lower_bound(order_.begin(), order_.end(), pivot,
                              [this](std::size_t r, std::size_t p) { return pivots_[r] < p; });
  order_.insert(pos, idx);
  return {true, std::nullopt};
}

std::optional<Vector> Echelon::express(const Vector& v) const {
  check_dim(v);
  Vector w = v;
  Vector mult = reduce(w);
  if (!is_zero(w)) return std::nullopt;
  return combine_transforms(mult);
}

// ---------------------------------------------------------------------------

std::optional<LinearSolution> solve_linear(const Matrix& a_in, const Vector& rhs_in, FieldRef field,
                                           std::size_t cols) {
  if (a_in.size() != rhs_in.size()) throw DimensionMismatch("solve_linear: rhs length");
  for (const auto& row : a_in)
    if (row.size() != cols) throw DimensionMismatch("solve_linear: ragged matrix");

  Matrix a = a_in;
  Vector rhs = rhs_in;
  const std::size_t m = a.size();
  std::vector<std::size_t> pivot_cols;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < m; ++c) {
    std::size_t sel = r;
    while (sel < m && a[sel][c].is_zero()) ++sel;
    if (sel == m) continue;
    std::swap(a[sel], a[r]);
    std::swap(rhs[sel], rhs[r]);
    const FieldElement s = a[r][c].inv();
    for (std::size_t j = c; j < cols; ++j) a[r][j] *= s;
    rhs[r] *= s;
    for (std::size_t i = 0; i < m; ++i) {
      if (i == r || a[i][c].is_zero()) continue;
      const FieldElement f = a[i][c];
      sub_scaled(a[i], f, a[r], c);
      rhs[i] -= f * rhs[r];
    }
    pivot_cols.push_back(c);
    ++r;
  }
  for (std::size_t i = r; i < m; ++i)
    if (!rhs[i].is_zero()) return std::nullopt;

  LinearSolution sol;
  sol.particular = zero_vector(field, cols);
  for (std::size_t i = 0; i < pivot_cols.size(); ++i) sol.particular[pivot_cols[i]] = rhs[i];

  std::vector<bool> is_pivot(cols, false);
  for (auto c : pivot_cols) is_pivot[c] = true;
  for (std::size_t f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    Vector x = zero_vector(field, cols);
    x[f] = field->one();
    for (std::size_t i = 0; i < pivot_cols.size(); ++i) x[pivot_cols[i]] = -a[i][f];
    sol.nullspace.push_back(std::move(x));
  }
  return sol;
}

std::optional<LinearSolution> solve_linear(const Matrix& a, const Vector& rhs) {
  if (a.empty()) throw DimensionMismatch("solve_linear: empty system needs explicit field and width");
  return solve_linear(a, rhs, a.front().front().spec(), a.front().size());
}

std::size_t rank(const Matrix& a, FieldRef field, std::size_t cols) {
  Echelon e(field, cols);
  for (const auto& row : a) e.insert(row);
  return e.size();
}

}  // namespace nshift
