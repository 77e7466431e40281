#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "nshift/field.hpp"

namespace nshift {

using Permutation = std::vector<std::uint8_t>;  // one-line notation on {0..k-1}

// Finite permutation group with a precomputed Cayley table.
// cayley(i, j) is the index of elements[i] ∘ elements[j], where
// (p ∘ q)(x) = p(q(x)).
class GroupTable {
 public:
  // elements must be closed under composition and contain the identity.
  GroupTable(std::string name, std::vector<Permutation> elements);

  const std::string& name() const { return name_; }
  std::size_t order() const { return elements_.size(); }
  const std::vector<Permutation>& elements() const { return elements_; }
  std::size_t identity() const { return identity_; }
  std::size_t inverse(std::size_t i) const { return inverse_[i]; }
  std::size_t cayley(std::size_t i, std::size_t j) const { return cayley_[i * order() + j]; }
  std::size_t index_of(const Permutation& p) const;

 private:
  std::string name_;
  std::vector<Permutation> elements_;
  std::vector<std::uint16_t> cayley_;
  std::vector<std::size_t> inverse_;
  std::size_t identity_ = 0;
};

using GroupRef = std::shared_ptr<const GroupTable>;

Permutation compose(const Permutation& p, const Permutation& q);
bool is_even(const Permutation& p);

// The 60 even permutations of {0..4} in lexicographic order. Shared instance.
GroupRef build_a5();
// Cyclic group of order 2 acting on two points (toy tests).
GroupRef build_c2();
// Looks up a group by name ("A5", "C2").
GroupRef group_by_name(const std::string& name);

// Element of the group algebra F[G]: coefficient of group element i at index i.
class GroupAlgebraElement {
 public:
  GroupAlgebraElement(GroupRef table, FieldRef field);  // zero
  GroupAlgebraElement(GroupRef table, std::vector<FieldElement> coeffs);

  static GroupAlgebraElement basis(GroupRef table, FieldRef field, std::size_t index);
  static GroupAlgebraElement one(GroupRef table, FieldRef field) {
    return basis(table, field, table->identity());
  }

  const GroupRef& table() const { return table_; }
  FieldRef field() const { return field_; }
  const std::vector<FieldElement>& coeffs() const { return coeffs_; }
  const FieldElement& operator[](std::size_t i) const { return coeffs_[i]; }
  bool is_zero() const;

  GroupAlgebraElement operator+(const GroupAlgebraElement& o) const;
  GroupAlgebraElement operator-(const GroupAlgebraElement& o) const;
  GroupAlgebraElement operator*(const GroupAlgebraElement& o) const;
  GroupAlgebraElement scaled(const FieldElement& s) const;

  bool operator==(const GroupAlgebraElement& o) const;

 private:
  void check_same(const GroupAlgebraElement& o) const;

  GroupRef table_;
  FieldRef field_;
  std::vector<FieldElement> coeffs_;
};

inline GroupAlgebraElement ga_mul(const GroupAlgebraElement& a, const GroupAlgebraElement& b) {
  return a * b;
}

// Convolution accumulate: acc[g] += sum over uv = g of a[u] b[v], on raw
// prime-field residues (unreduced). Used by the matrix product fast path.
void ga_convolve_accumulate(const GroupTable& table, const std::uint64_t* a, const std::uint64_t* b,
                            std::uint64_t p, std::uint64_t* acc);

}  // namespace nshift
