#include "nshift/group.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "nshift/errors.hpp"

namespace nshift {

Permutation compose(const Permutation& p, const Permutation& q) {
  Permutation r(q.size());
  for (std::size_t x = 0; x < q.size(); ++x) r[x] = p[q[x]];
  return r;
}

bool is_even(const Permutation& p) {
  std::size_t inversions = 0;
  for (std::size_t i = 0; i < p.size(); ++i)
    for (std::size_t j = i + 1; j < p.size(); ++j)
      if (p[i] > p[j]) ++inversions;
  return inversions % 2 == 0;
}

GroupTable::GroupTable(std::string name, std::vector<Permutation> elements)
    : name_(std::move(name)), elements_(std::move(elements)) {
  const std::size_t n = elements_.size();
  if (n == 0 || n > 65535) throw ValidationError("group order out of range");
  std::map<Permutation, std::size_t> index;
  for (std::size_t i = 0; i < n; ++i) index[elements_[i]] = i;
  if (index.size() != n) throw ValidationError("duplicate group elements");

  Permutation id(elements_[0].size());
  std::iota(id.begin(), id.end(), 0);
  auto it = index.find(id);
  if (it == index.end()) throw ValidationError("group lacks the identity");
  identity_ = it->second;

  cayley_.resize(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      auto c = index.find(compose(elements_[i], elements_[j]));
      if (c == index.end()) throw ValidationError("elements not closed under composition");
      cayley_[i * n + j] = static_cast<std::uint16_t>(c->second);
    }
  }
  inverse_.resize(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (cayley_[i * n + j] == identity_) inverse_[i] = j;
}

std::size_t GroupTable::index_of(const Permutation& p) const {
  auto it = std::find(elements_.begin(), elements_.end(), p);
  if (it == elements_.end()) throw ValidationError("permutation not in group");
  return static_cast<std::size_t>(it - elements_.begin());
}

GroupRef build_a5() {
  static const GroupRef a5 = [] {
    std::vector<Permutation> even;
    Permutation p{0, 1, 2, 3, 4};
    do {
      if (is_even(p)) even.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
    return std::make_shared<const GroupTable>("A5", std::move(even));
  }();
  return a5;
}

GroupRef build_c2() {
  static const GroupRef c2 =
      std::make_shared<const GroupTable>("C2", std::vector<Permutation>{{0, 1}, {1, 0}});
  return c2;
}

GroupRef group_by_name(const std::string& name) {
  if (name == "A5") return build_a5();
  if (name == "C2") return build_c2();
  throw ValidationError("unknown group '" + name + "'");
}

// ---------------------------------------------------------------------------

GroupAlgebraElement::GroupAlgebraElement(GroupRef table, FieldRef field)
    : table_(std::move(table)), field_(field), coeffs_(table_->order(), field->zero()) {}

GroupAlgebraElement::GroupAlgebraElement(GroupRef table, std::vector<FieldElement> coeffs)
    : table_(std::move(table)), coeffs_(std::move(coeffs)) {
  if (coeffs_.size() != table_->order()) throw DimensionMismatch("group algebra coefficient count");
  field_ = coeffs_.front().spec();
  for (const auto& c : coeffs_)
    if (c.spec() != field_) throw SpecMismatch("mixed coefficient fields");
}

GroupAlgebraElement GroupAlgebraElement::basis(GroupRef table, FieldRef field, std::size_t index) {
  GroupAlgebraElement e(std::move(table), field);
  e.coeffs_.at(index) = field->one();
  return e;
}

bool GroupAlgebraElement::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const FieldElement& c) { return c.is_zero(); });
}

void GroupAlgebraElement::check_same(const GroupAlgebraElement& o) const {
  if (table_ != o.table_ || field_ != o.field_) throw SpecMismatch("group algebra elements over different tables");
}

GroupAlgebraElement GroupAlgebraElement::operator+(const GroupAlgebraElement& o) const {
  check_same(o);
  GroupAlgebraElement r = *this;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) r.coeffs_[i] += o.coeffs_[i];
  return r;
}

GroupAlgebraElement GroupAlgebraElement::operator-(const GroupAlgebraElement& o) const {
  check_same(o);
  GroupAlgebraElement r = *this;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) r.coeffs_[i] -= o.coeffs_[i];
  return r;
}

void ga_convolve_accumulate(const GroupTable& table, const std::uint64_t* a, const std::uint64_t* b,
                            std::uint64_t p, std::uint64_t* acc) {
  const std::size_t n = table.order();
  const bool small = p < (std::uint64_t{1} << 16);
  for (std::size_t u = 0; u < n; ++u) {
    if (a[u] == 0) continue;
    for (std::size_t v = 0; v < n; ++v) {
      if (b[v] == 0) continue;
      const std::uint64_t prod = a[u] * b[v];
      acc[table.cayley(u, v)] += small ? prod : prod % p;
    }
  }
}

GroupAlgebraElement GroupAlgebraElement::operator*(const GroupAlgebraElement& o) const {
  check_same(o);
  const std::size_t n = table_->order();
  if (field_->is_prime_field()) {
    const std::uint64_t p = field_->characteristic();
    std::vector<std::uint64_t> a(n), b(n), acc(n, 0);
    for (std::size_t i = 0; i < n; ++i) {
      a[i] = coeffs_[i].words()[0];
      b[i] = o.coeffs_[i].words()[0];
    }
    ga_convolve_accumulate(*table_, a.data(), b.data(), p, acc.data());
    GroupAlgebraElement r(table_, field_);
    for (std::size_t i = 0; i < n; ++i) r.coeffs_[i] = field_->from_int(acc[i] % p);
    return r;
  }
  GroupAlgebraElement r(table_, field_);
  for (std::size_t u = 0; u < n; ++u) {
    if (coeffs_[u].is_zero()) continue;
    for (std::size_t v = 0; v < n; ++v) r.coeffs_[table_->cayley(u, v)] += coeffs_[u] * o.coeffs_[v];
  }
  return r;
}

GroupAlgebraElement GroupAlgebraElement::scaled(const FieldElement& s) const {
  const FieldElement k = embed(s, field_);
  GroupAlgebraElement r = *this;
  for (auto& c : r.coeffs_) c *= k;
  return r;
}

bool GroupAlgebraElement::operator==(const GroupAlgebraElement& o) const {
  return table_ == o.table_ && field_ == o.field_ && coeffs_ == o.coeffs_;
}

}  // namespace nshift
