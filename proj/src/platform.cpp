#include "nshift/platform.hpp"

#include <algorithm>

#include "nshift/errors.hpp"

namespace nshift {

PlatformSpec::PlatformSpec(FieldRef field, std::size_t n, GroupRef group)
    : field_(field), n_(n), group_(std::move(group)) {
  if (n_ == 0) throw ValidationError("matrix size must be positive");
}

std::size_t PlatformSpec::flat_dim(FieldRef scalar) const {
  if (scalar == field_) return coeff_count();
  if (scalar == field_->prime_subfield()) return coeff_count() * field_->degree();
  throw SpecMismatch("scalar field is neither the base field nor its prime subfield");
}

PlatformRef make_field_platform(FieldRef field, std::size_t n) {
  return std::make_shared<const PlatformSpec>(field, n);
}

PlatformRef make_group_algebra_platform(FieldRef field, GroupRef group, std::size_t n) {
  if (!group) throw ValidationError("group table required");
  return std::make_shared<const PlatformSpec>(field, n, std::move(group));
}

// ---------------------------------------------------------------------------

PlatformElement::PlatformElement(PlatformRef spec, std::vector<FieldElement> coeffs)
    : spec_(std::move(spec)), coeffs_(std::move(coeffs)) {
  if (coeffs_.size() != spec_->coeff_count()) throw DimensionMismatch("platform element coefficient count");
  for (const auto& c : coeffs_)
    if (c.spec() != spec_->field()) throw SpecMismatch("platform element entry over the wrong field");
}

PlatformElement PlatformElement::zero(PlatformRef spec) {
  std::vector<FieldElement> c(spec->coeff_count(), spec->field()->zero());
  return PlatformElement(std::move(spec), std::move(c));
}

PlatformElement PlatformElement::identity(PlatformRef spec) {
  PlatformElement e = zero(spec);
  const std::size_t w = spec->width();
  const std::size_t id = spec->over_field() ? 0 : spec->group()->identity();
  for (std::size_t i = 0; i < spec->n(); ++i) e.coeffs_[(i * spec->n() + i) * w + id] = spec->field()->one();
  return e;
}

PlatformElement PlatformElement::from_entries(PlatformRef spec, const std::vector<FieldElement>& entries) {
  if (!spec->over_field()) throw PreconditionError("from_entries needs a field platform");
  return PlatformElement(std::move(spec), entries);
}

PlatformElement PlatformElement::from_ints(PlatformRef spec, const std::vector<std::uint64_t>& entries) {
  std::vector<FieldElement> c;
  c.reserve(entries.size());
  for (auto v : entries) c.push_back(spec->field()->from_int(v));
  return from_entries(std::move(spec), c);
}

PlatformElement PlatformElement::from_group_entries(PlatformRef spec, const std::vector<GroupAlgebraElement>& entries) {
  if (spec->over_field()) throw PreconditionError("from_group_entries needs a group-algebra platform");
  if (entries.size() != spec->n() * spec->n()) throw DimensionMismatch("entry count");
  std::vector<FieldElement> c;
  c.reserve(spec->coeff_count());
  for (const auto& e : entries) {
    if (e.table() != spec->group() || e.field() != spec->field()) throw SpecMismatch("entry ring mismatch");
    c.insert(c.end(), e.coeffs().begin(), e.coeffs().end());
  }
  return PlatformElement(std::move(spec), std::move(c));
}

const FieldElement& PlatformElement::at(std::size_t i, std::size_t j) const {
  if (!spec_->over_field()) throw PreconditionError("at() needs a field platform");
  return coeffs_.at(i * n() + j);
}

void PlatformElement::set(std::size_t i, std::size_t j, const FieldElement& v) {
  if (!spec_->over_field()) throw PreconditionError("set() needs a field platform");
  if (v.spec() != spec_->field()) throw SpecMismatch("entry over the wrong field");
  coeffs_.at(i * n() + j) = v;
}

GroupAlgebraElement PlatformElement::ga_at(std::size_t i, std::size_t j) const {
  if (spec_->over_field()) throw PreconditionError("ga_at() needs a group-algebra platform");
  const std::size_t w = spec_->width();
  auto first = coeffs_.begin() + static_cast<std::ptrdiff_t>((i * n() + j) * w);
  return GroupAlgebraElement(spec_->group(), std::vector<FieldElement>(first, first + static_cast<std::ptrdiff_t>(w)));
}

void PlatformElement::ga_set(std::size_t i, std::size_t j, const GroupAlgebraElement& v) {
  if (spec_->over_field()) throw PreconditionError("ga_set() needs a group-algebra platform");
  if (v.table() != spec_->group() || v.field() != spec_->field()) throw SpecMismatch("entry ring mismatch");
  std::copy(v.coeffs().begin(), v.coeffs().end(), coeffs_.begin() + static_cast<std::ptrdiff_t>((i * n() + j) * spec_->width()));
}

bool PlatformElement::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const FieldElement& c) { return c.is_zero(); });
}

bool PlatformElement::is_identity() const { return *this == identity(spec_); }

void PlatformElement::check_same(const PlatformElement& o) const {
  if (!(*spec_ == *o.spec_)) throw SpecMismatch("platform elements over different platforms");
}

PlatformElement PlatformElement::operator+(const PlatformElement& o) const {
  check_same(o);
  PlatformElement r = *this;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) r.coeffs_[i] += o.coeffs_[i];
  return r;
}

PlatformElement PlatformElement::operator-(const PlatformElement& o) const {
  check_same(o);
  PlatformElement r = *this;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) r.coeffs_[i] -= o.coeffs_[i];
  return r;
}

PlatformElement PlatformElement::operator*(const PlatformElement& o) const {
  check_same(o);
  return spec_->over_field() ? mul_field(o) : mul_group_algebra(o);
}

PlatformElement PlatformElement::mul_field(const PlatformElement& o) const {
  const std::size_t n = this->n();
  PlatformElement r = zero(spec_);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < n; ++k) {
      const FieldElement& a = coeffs_[i * n + k];
      if (a.is_zero()) continue;
      for (std::size_t j = 0; j < n; ++j) {
        const FieldElement& b = o.coeffs_[k * n + j];
        if (!b.is_zero()) r.coeffs_[i * n + j] += a * b;
      }
    }
  }
  return r;
}

PlatformElement PlatformElement::mul_group_algebra(const PlatformElement& o) const {
  const std::size_t n = this->n();
  const std::size_t w = spec_->width();
  const GroupTable& table = *spec_->group();
  FieldRef field = spec_->field();
  if (field->is_prime_field()) {
    const std::uint64_t p = field->characteristic();
    std::vector<std::uint64_t> a(coeffs_.size()), b(coeffs_.size());
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
      a[i] = coeffs_[i].words()[0];
      b[i] = o.coeffs_[i].words()[0];
    }
    std::vector<FieldElement> out;
    out.reserve(coeffs_.size());
    std::vector<std::uint64_t> acc(w);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        std::fill(acc.begin(), acc.end(), 0);
        for (std::size_t k = 0; k < n; ++k)
          ga_convolve_accumulate(table, &a[(i * n + k) * w], &b[(k * n + j) * w], p, acc.data());
        for (std::size_t g = 0; g < w; ++g) out.push_back(field->from_int(acc[g] % p));
      }
    }
    return PlatformElement(spec_, std::move(out));
  }
  PlatformElement r = zero(spec_);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      GroupAlgebraElement acc(spec_->group(), field);
      for (std::size_t k = 0; k < n; ++k) acc = acc + ga_at(i, k) * o.ga_at(k, j);
      r.ga_set(i, j, acc);
    }
  }
  return r;
}

PlatformElement PlatformElement::scaled(const FieldElement& s) const {
  const FieldElement k = embed(s, spec_->field());
  PlatformElement r = *this;
  for (auto& c : r.coeffs_) c *= k;
  return r;
}

PlatformElement PlatformElement::entry_pow(const BigInt& e) const {
  if (!spec_->over_field()) throw PreconditionError("entry powers need a field platform");
  PlatformElement r = *this;
  for (auto& c : r.coeffs_) c = c.pow(e);
  return r;
}

PlatformElement PlatformElement::pow(const BigInt& k) const {
  if (k < 0) throw ValidationError("negative matrix power; use an inverse");
  PlatformElement result = identity(spec_);
  if (k == 0) return result;
  const auto top = boost::multiprecision::msb(k);
  for (std::size_t i = top + 1; i-- > 0;) {
    result = result * result;
    if (boost::multiprecision::bit_test(k, i)) result = result * *this;
  }
  return result;
}

// ---------------------------------------------------------------------------

std::optional<PlatformElement> try_inverse(const PlatformElement& a) {
  const PlatformRef& spec = a.spec();
  if (!spec->over_field()) throw PreconditionError("mat_inverse needs a field platform");
  const std::size_t n = spec->n();
  FieldRef f = spec->field();
  // augmented [a | I]
  Matrix aug(n, zero_vector(f, 2 * n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug[i][j] = a.at(i, j);
    aug[i][n + i] = f->one();
  }
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t sel = c;
    while (sel < n && aug[sel][c].is_zero()) ++sel;
    if (sel == n) return std::nullopt;
    std::swap(aug[sel], aug[c]);
    const FieldElement s = aug[c][c].inv();
    for (auto& x : aug[c]) x *= s;
    for (std::size_t i = 0; i < n; ++i) {
      if (i == c || aug[i][c].is_zero()) continue;
      const FieldElement factor = aug[i][c];
      sub_scaled(aug[i], factor, aug[c]);
    }
  }
  std::vector<FieldElement> inv;
  inv.reserve(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv.push_back(aug[i][n + j]);
  return PlatformElement(spec, std::move(inv));
}

PlatformElement mat_inverse(const PlatformElement& a) {
  auto inv = try_inverse(a);
  if (!inv) throw SingularMatrix("matrix is singular");
  return *inv;
}

PlatformElement inverse_via_minimal_polynomial(const PlatformElement& a) {
  const PlatformRef& spec = a.spec();
  FieldRef f = spec->field();
  Echelon span(f, spec->coeff_count());
  std::vector<PlatformElement> powers;
  PlatformElement cur = PlatformElement::identity(spec);
  for (;;) {
    auto out = span.insert(flatten(cur, f));
    if (!out.added) {
      const Vector& c = *out.coeffs;  // cur = a^r = sum c_i a^i
      if (c[0].is_zero()) throw SingularMatrix("element is a zero divisor");
      PlatformElement acc = powers.back();  // a^{r-1}
      for (std::size_t i = 1; i < powers.size(); ++i) acc = acc - powers[i - 1].scaled(c[i]);
      return acc.scaled(c[0].inv());
    }
    powers.push_back(cur);
    cur = cur * a;
  }
}

std::size_t matrix_rank(const PlatformElement& a) {
  if (!a.spec()->over_field()) throw PreconditionError("rank needs a field platform");
  const std::size_t n = a.n();
  Matrix rows(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) rows[i].push_back(a.at(i, j));
  return rank(rows, a.spec()->field(), n);
}

Vector flatten(const PlatformElement& a, FieldRef scalar) {
  FieldRef base = a.spec()->field();
  if (scalar == base) return a.coeffs();
  if (scalar != base->prime_subfield()) throw SpecMismatch("flatten: unsupported scalar field");
  const unsigned d = base->degree();
  Vector out;
  out.reserve(a.coeffs().size() * d);
  for (const auto& c : a.coeffs())
    for (unsigned i = 0; i < d; ++i) out.push_back(scalar->from_int(c.coeff(i)));
  return out;
}

PlatformElement unflatten(const PlatformRef& spec, const Vector& v, FieldRef scalar) {
  FieldRef base = spec->field();
  if (v.size() != spec->flat_dim(scalar)) throw DimensionMismatch("unflatten: wrong length");
  if (scalar == base) return PlatformElement(spec, v);
  const unsigned d = base->degree();
  std::vector<FieldElement> c;
  c.reserve(spec->coeff_count());
  std::vector<std::uint64_t> digits(d);
  for (std::size_t k = 0; k < spec->coeff_count(); ++k) {
    for (unsigned i = 0; i < d; ++i) {
      if (v[k * d + i].spec() != scalar) throw SpecMismatch("unflatten: entry field");
      digits[i] = v[k * d + i].words()[0];
    }
    c.push_back(base->from_coeffs(digits));
  }
  return PlatformElement(spec, std::move(c));
}

std::vector<PlatformElement> left_annihilator(const PlatformElement& a) {
  const PlatformRef& spec = a.spec();
  if (!spec->over_field()) throw PreconditionError("left_annihilator needs a field platform");
  const std::size_t n = spec->n();
  FieldRef f = spec->field();
  // unknown X_{ik} at column i*n+k; equation (XA)_{ij} = sum_k X_{ik} A_{kj}
  Matrix sys(n * n, zero_vector(f, n * n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) sys[i * n + j][i * n + k] = a.at(k, j);
  auto sol = solve_linear(sys, zero_vector(f, n * n), f, n * n);
  std::vector<PlatformElement> basis;
  for (auto& v : sol->nullspace) basis.emplace_back(spec, std::move(v));
  return basis;
}

// ---------------------------------------------------------------------------

FieldElement random_field_element(FieldRef field, Rng& rng) {
  std::vector<std::uint64_t> c(field->degree());
  for (auto& x : c) x = rng.below(field->characteristic());
  return field->from_coeffs(c);
}

FieldElement random_nonzero(FieldRef field, Rng& rng) {
  for (;;) {
    FieldElement x = random_field_element(field, rng);
    if (!x.is_zero()) return x;
  }
}

PlatformElement random_element(const PlatformRef& spec, Rng& rng) {
  std::vector<FieldElement> c;
  c.reserve(spec->coeff_count());
  for (std::size_t i = 0; i < spec->coeff_count(); ++i) c.push_back(random_field_element(spec->field(), rng));
  return PlatformElement(spec, std::move(c));
}

namespace {

GroupAlgebraElement random_ga(const PlatformRef& spec, Rng& rng) {
  std::vector<FieldElement> c;
  for (std::size_t i = 0; i < spec->width(); ++i) c.push_back(random_field_element(spec->field(), rng));
  return GroupAlgebraElement(spec->group(), std::move(c));
}

// Invertible factor with its inverse: elementary I + c E_ij, or a monomial
// matrix whose nonzero entries are scalar multiples of group elements.
std::pair<PlatformElement, PlatformElement> random_unit_factor(const PlatformRef& spec, Rng& rng, bool elementary) {
  const std::size_t n = spec->n();
  FieldRef f = spec->field();
  const GroupRef& g = spec->group();
  PlatformElement fwd = PlatformElement::identity(spec);
  PlatformElement back = PlatformElement::identity(spec);
  if (elementary && n > 1) {
    const std::size_t i = rng.below(n);
    std::size_t j = rng.below(n - 1);
    if (j >= i) ++j;
    GroupAlgebraElement c = random_ga(spec, rng);
    fwd.ga_set(i, j, c);
    back.ga_set(i, j, GroupAlgebraElement(g, f) - c);
    return {fwd, back};
  }
  std::vector<std::size_t> sigma(n);
  for (std::size_t i = 0; i < n; ++i) sigma[i] = i;
  for (std::size_t i = n; i > 1; --i) std::swap(sigma[i - 1], sigma[rng.below(i)]);
  fwd = PlatformElement::zero(spec);
  back = PlatformElement::zero(spec);
  for (std::size_t i = 0; i < n; ++i) {
    const FieldElement lambda = random_nonzero(f, rng);
    const std::size_t elem = rng.below(g->order());
    fwd.ga_set(i, sigma[i], GroupAlgebraElement::basis(g, f, elem).scaled(lambda));
    back.ga_set(sigma[i], i, GroupAlgebraElement::basis(g, f, g->inverse(elem)).scaled(lambda.inv()));
  }
  return {fwd, back};
}

}  // namespace

Instance sample_instance(const PlatformRef& spec, InstanceVariant variant, Rng& rng) {
  const std::size_t n = spec->n();
  if (!spec->over_field()) {
    if (variant == InstanceVariant::Masked) throw PreconditionError("masked variant needs a field platform");
    if (variant == InstanceVariant::Composite) throw PreconditionError("entry-power maps need a field platform");
    PlatformElement H = PlatformElement::identity(spec);
    PlatformElement H_inv = PlatformElement::identity(spec);
    for (int t = 0; t < 4; ++t) {
      auto [fwd, back] = random_unit_factor(spec, rng, t % 2 == 0);
      H = H * fwd;
      H_inv = back * H_inv;
    }
    if (!(H * H_inv).is_identity()) throw InvariantViolation("constructed inverse is wrong");
    return {H, H_inv, random_element(spec, rng)};
  }

  PlatformElement H = random_element(spec, rng);
  std::optional<PlatformElement> H_inv = try_inverse(H);
  while (!H_inv) {
    H = random_element(spec, rng);
    H_inv = try_inverse(H);
  }
  if (variant != InstanceVariant::Masked) return {H, *H_inv, random_element(spec, rng)};

  if (n < 2) throw PreconditionError("masked variant needs n >= 2");
  for (;;) {
    PlatformElement M = random_element(spec, rng);
    // last row := random combination of the others, so M is singular
    std::vector<FieldElement> combo;
    for (std::size_t i = 0; i + 1 < n; ++i) combo.push_back(random_field_element(spec->field(), rng));
    for (std::size_t j = 0; j < n; ++j) {
      FieldElement s = spec->field()->zero();
      for (std::size_t i = 0; i + 1 < n; ++i) s += combo[i] * M.at(i, j);
      M.set(n - 1, j, s);
    }
    if (!(H * M).is_zero()) return {H, *H_inv, M};
  }
}

Instance sample_instance(const PlatformRef& spec, InstanceVariant variant, std::uint64_t seed) {
  Rng rng(seed);
  return sample_instance(spec, variant, rng);
}

}  // namespace nshift
