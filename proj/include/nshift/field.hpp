#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <vector>

#include "nshift/bigint.hpp"
#include "nshift/poly.hpp"

namespace nshift {

class FieldSpec;
class FieldElement;

// Field specs are interned: one object per (p, modulus), never destroyed.
// Two elements belong to the same field iff their FieldRef pointers match.
using FieldRef = const FieldSpec*;

// GF(p^d) with a fixed monic irreducible modulus of degree d.
//
// Storage limits: p = 2 allows d <= 255 (bit-packed); odd p requires
// p < 2^32 and d <= 4 (one coefficient per word).
class FieldSpec {
 public:
  static constexpr unsigned kWords = 4;

  static FieldRef prime(std::uint64_t p);
  // modulus: monic coefficients, x^i at index i, length d + 1.
  static FieldRef extension(std::uint64_t p, const poly::Poly& modulus);
  // GF(p^d) with the first irreducible modulus in lexicographic order.
  static FieldRef standard(std::uint64_t p, unsigned d);
  // GF(2^127) mod x^127 + x + 1.
  static FieldRef gf2_127();

  std::uint64_t characteristic() const { return p_; }
  unsigned degree() const { return d_; }
  const poly::Poly& modulus() const { return modulus_; }
  bool is_prime_field() const { return d_ == 1; }
  FieldRef prime_subfield() const { return prime_sub_; }
  const BigInt& order() const { return order_; }  // p^d

  FieldElement zero() const;
  FieldElement one() const;
  FieldElement from_int(std::uint64_t v) const;
  // Coefficient vector of length <= d, entries reduced mod p.
  FieldElement from_coeffs(std::span<const std::uint64_t> coeffs) const;
  // Element with integer code sum c_i p^i (c_i coefficient of x^i); code < p^d.
  FieldElement from_index(std::uint64_t code) const;

  FieldSpec(const FieldSpec&) = delete;
  FieldSpec& operator=(const FieldSpec&) = delete;

 private:
  FieldSpec(std::uint64_t p, poly::Poly modulus);
  friend class FieldRegistry;
  friend class FieldElement;

  std::uint64_t p_;
  unsigned d_;
  poly::Poly modulus_;
  FieldRef prime_sub_ = nullptr;
  BigInt order_;
  // p = 2, d > 1: modulus minus its leading term, bit-packed
  std::array<std::uint64_t, kWords> low_mask_{};
};

class FieldElement {
 public:
  using Words = std::array<std::uint64_t, FieldSpec::kWords>;

  FieldElement(FieldRef spec, const Words& words) : spec_(spec), w_(words) {}

  FieldRef spec() const { return spec_; }
  std::uint64_t coeff(unsigned i) const;
  std::vector<std::uint64_t> coeffs() const;
  // Raw storage; for prime fields words()[0] is the residue.
  const Words& words() const { return w_; }

  bool is_zero() const;
  bool is_one() const;

  FieldElement operator+(const FieldElement& o) const;
  FieldElement operator-(const FieldElement& o) const;
  FieldElement operator-() const;
  FieldElement operator*(const FieldElement& o) const;
  FieldElement operator/(const FieldElement& o) const { return *this * o.inv(); }
  FieldElement& operator+=(const FieldElement& o) { return *this = *this + o; }
  FieldElement& operator-=(const FieldElement& o) { return *this = *this - o; }
  FieldElement& operator*=(const FieldElement& o) { return *this = *this * o; }

  FieldElement inv() const;
  FieldElement pow(const BigInt& e) const;
  FieldElement pow(std::uint64_t e) const;

  bool operator==(const FieldElement& o) const { return spec_ == o.spec_ && w_ == o.w_; }
  bool operator!=(const FieldElement& o) const { return !(*this == o); }

 private:
  void check_same(const FieldElement& o) const;
  FieldElement mul_gf2x(const FieldElement& o) const;
  FieldElement mul_odd_ext(const FieldElement& o) const;

  FieldRef spec_;
  Words w_{};
};

inline FieldElement ff_add(const FieldElement& a, const FieldElement& b) { return a + b; }
inline FieldElement ff_mul(const FieldElement& a, const FieldElement& b) { return a * b; }
inline FieldElement ff_inv(const FieldElement& a) { return a.inv(); }
inline FieldElement ff_pow(const FieldElement& a, const BigInt& e) { return a.pow(e); }

// Embed an element of the prime subfield of `target` into `target`.
FieldElement embed(const FieldElement& x, FieldRef target);

}  // namespace nshift
