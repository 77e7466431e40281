#include "nshift/field.hpp"

#include <map>
#include <memory>
#include <mutex>

#include "nshift/errors.hpp"

namespace nshift {

class FieldRegistry {
  static std::mutex& mutex() {
    static std::mutex mu;
    return mu;
  }
  static std::map<std::pair<std::uint64_t, poly::Poly>, std::unique_ptr<FieldSpec>>& table() {
    static std::map<std::pair<std::uint64_t, poly::Poly>, std::unique_ptr<FieldSpec>> t;
    return t;
  }

 public:
  static FieldRef find(std::uint64_t p, const poly::Poly& modulus) {
    std::lock_guard<std::mutex> lock(mutex());
    auto it = table().find(std::make_pair(p, modulus));
    return it == table().end() ? nullptr : it->second.get();
  }

  // prime_sub == nullptr registers a prime field (its own prime subfield).
  static FieldRef get(std::uint64_t p, const poly::Poly& modulus, FieldRef prime_sub) {
    std::lock_guard<std::mutex> lock(mutex());
    auto key = std::make_pair(p, modulus);
    auto it = table().find(key);
    if (it != table().end()) return it->second.get();
    std::unique_ptr<FieldSpec> spec(new FieldSpec(p, modulus));
    spec->prime_sub_ = prime_sub ? prime_sub : spec.get();
    FieldRef ref = spec.get();
    table().emplace(std::move(key), std::move(spec));
    return ref;
  }
};

FieldSpec::FieldSpec(std::uint64_t p, poly::Poly modulus) : p_(p), modulus_(std::move(modulus)) {
  d_ = static_cast<unsigned>(poly::degree(modulus_));
  order_ = boost::multiprecision::pow(BigInt(p_), d_);
  if (p_ == 2 && d_ > 1) {
    for (unsigned i = 0; i < d_; ++i)
      if (modulus_[i]) low_mask_[i / 64] |= std::uint64_t{1} << (i % 64);
  }
}

FieldRef FieldSpec::prime(std::uint64_t p) {
  if (!poly::is_prime(p)) throw ValidationError("field characteristic " + std::to_string(p) + " is not prime");
  if (p >= (std::uint64_t{1} << 32)) throw ValidationError("characteristic must be below 2^32");
  return FieldRegistry::get(p, poly::Poly{0, 1}, nullptr);
}

FieldRef FieldSpec::extension(std::uint64_t p, const poly::Poly& modulus_in) {
  poly::Poly modulus = modulus_in;
  poly::trim(modulus);
  FieldRef base = prime(p);
  for (auto c : modulus)
    if (c >= p) throw ValidationError("modulus coefficient out of range");
  if (modulus.size() < 2 || modulus.back() != 1) throw ValidationError("modulus must be monic of degree >= 1");
  const unsigned d = static_cast<unsigned>(poly::degree(modulus));
  if (d == 1) {
    // GF(p) itself; any monic linear modulus describes the same field
    return base;
  }
  if (p == 2 && d > 255) throw ValidationError("GF(2^d) supports d <= 255");
  if (p != 2 && d > kWords) throw ValidationError("odd-characteristic extensions support degree <= 4");
  if (FieldRef known = FieldRegistry::find(p, modulus)) return known;
  if (!poly::irreducible(p, modulus)) throw ValidationError("modulus is reducible");
  return FieldRegistry::get(p, modulus, base);
}

FieldRef FieldSpec::standard(std::uint64_t p, unsigned d) {
  if (d == 1) return prime(p);
  static std::mutex mu;
  static std::map<std::pair<std::uint64_t, unsigned>, FieldRef> cache;
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find({p, d});
    if (it != cache.end()) return it->second;
  }
  FieldRef f = extension(p, poly::first_irreducible(p, d));
  std::lock_guard<std::mutex> lock(mu);
  cache[{p, d}] = f;
  return f;
}

FieldRef FieldSpec::gf2_127() {
  static const FieldRef f = [] {
    poly::Poly m(128, 0);
    m[0] = m[1] = m[127] = 1;
    return extension(2, m);
  }();
  return f;
}

FieldElement FieldSpec::zero() const { return FieldElement(this, {}); }

FieldElement FieldSpec::one() const { return from_int(1); }

FieldElement FieldSpec::from_int(std::uint64_t v) const {
  FieldElement::Words w{};
  w[0] = v % p_;
  return FieldElement(this, w);
}

FieldElement FieldSpec::from_coeffs(std::span<const std::uint64_t> coeffs) const {
  if (coeffs.size() > d_) throw ValidationError("too many coefficients for field degree");
  FieldElement::Words w{};
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    const std::uint64_t c = coeffs[i] % p_;
    if (p_ == 2)
      w[i / 64] |= c << (i % 64);
    else
      w[i] = c;
  }
  return FieldElement(this, w);
}

FieldElement FieldSpec::from_index(std::uint64_t code) const {
  std::vector<std::uint64_t> c(d_, 0);
  for (unsigned i = 0; i < d_; ++i) {
    c[i] = code % p_;
    code /= p_;
  }
  return from_coeffs(c);
}

// ---------------------------------------------------------------------------

void FieldElement::check_same(const FieldElement& o) const {
  if (spec_ != o.spec_) throw SpecMismatch("field elements from different fields");
}

std::uint64_t FieldElement::coeff(unsigned i) const {
  if (i >= spec_->degree()) return 0;
  if (spec_->characteristic() == 2) return (w_[i / 64] >> (i % 64)) & 1;
  return w_[i];
}

std::vector<std::uint64_t> FieldElement::coeffs() const {
  std::vector<std::uint64_t> c(spec_->degree());
  for (unsigned i = 0; i < c.size(); ++i) c[i] = coeff(i);
  return c;
}

bool FieldElement::is_zero() const { return w_ == Words{}; }

bool FieldElement::is_one() const { return w_ == Words{1, 0, 0, 0}; }

FieldElement FieldElement::operator+(const FieldElement& o) const {
  check_same(o);
  Words r{};
  const std::uint64_t p = spec_->characteristic();
  if (p == 2) {
    for (unsigned i = 0; i < FieldSpec::kWords; ++i) r[i] = w_[i] ^ o.w_[i];
  } else {
    for (unsigned i = 0; i < spec_->degree(); ++i) {
      std::uint64_t s = w_[i] + o.w_[i];
      r[i] = s >= p ? s - p : s;
    }
  }
  return FieldElement(spec_, r);
}

FieldElement FieldElement::operator-() const {
  const std::uint64_t p = spec_->characteristic();
  if (p == 2) return *this;
  Words r{};
  for (unsigned i = 0; i < spec_->degree(); ++i) r[i] = w_[i] ? p - w_[i] : 0;
  return FieldElement(spec_, r);
}

FieldElement FieldElement::operator-(const FieldElement& o) const {
  check_same(o);
  return *this + (-o);
}

FieldElement FieldElement::operator*(const FieldElement& o) const {
  check_same(o);
  const std::uint64_t p = spec_->characteristic();
  if (spec_->degree() == 1) {
    Words r{};
    r[0] = (p == 2) ? (w_[0] & o.w_[0]) : (w_[0] * o.w_[0]) % p;
    return FieldElement(spec_, r);
  }
  return p == 2 ? mul_gf2x(o) : mul_odd_ext(o);
}

FieldElement FieldElement::mul_gf2x(const FieldElement& o) const {
  const unsigned d = spec_->degree();
  const unsigned top_word = d / 64;
  const std::uint64_t top_bit = std::uint64_t{1} << (d % 64);
  const auto& mask = spec_->low_mask_;
  Words a = w_;
  Words r{};
  for (unsigned i = 0; i < d; ++i) {
    if ((o.w_[i / 64] >> (i % 64)) & 1) {
      for (unsigned k = 0; k <= top_word; ++k) r[k] ^= a[k];
    }
    // a <- a * x mod f
    for (unsigned k = top_word; k > 0; --k) a[k] = (a[k] << 1) | (a[k - 1] >> 63);
    a[0] <<= 1;
    if (a[top_word] & top_bit) {
      a[top_word] ^= top_bit;
      for (unsigned k = 0; k <= top_word; ++k) a[k] ^= mask[k];
    }
  }
  return FieldElement(spec_, r);
}

FieldElement FieldElement::mul_odd_ext(const FieldElement& o) const {
  const unsigned d = spec_->degree();
  const std::uint64_t p = spec_->characteristic();
  const auto& f = spec_->modulus();
  std::array<std::uint64_t, 2 * FieldSpec::kWords> prod{};
  for (unsigned i = 0; i < d; ++i)
    for (unsigned j = 0; j < d; ++j) prod[i + j] = (prod[i + j] + w_[i] * o.w_[j]) % p;
  for (int i = 2 * static_cast<int>(d) - 2; i >= static_cast<int>(d); --i) {
    const std::uint64_t c = prod[i];
    if (c == 0) continue;
    prod[i] = 0;
    for (unsigned j = 0; j < d; ++j) prod[i - d + j] = (prod[i - d + j] + (p - c) * f[j]) % p;
  }
  Words r{};
  for (unsigned i = 0; i < d; ++i) r[i] = prod[i];
  return FieldElement(spec_, r);
}

FieldElement FieldElement::inv() const {
  if (is_zero()) throw DivisionByZero("inverse of zero field element");
  const std::uint64_t p = spec_->characteristic();
  if (spec_->degree() == 1) return spec_->from_int(poly::inv_mod_prime(w_[0], p));
  poly::Poly a = coeffs();
  poly::trim(a);
  poly::Poly r = poly::invmod(a, spec_->modulus(), p);
  return spec_->from_coeffs(r);
}

FieldElement FieldElement::pow(const BigInt& e) const {
  if (e < 0) throw ValidationError("negative exponent");
  FieldElement result = spec_->one();
  if (e == 0) return result;
  const auto top = boost::multiprecision::msb(e);
  for (std::size_t i = top + 1; i-- > 0;) {
    result = result * result;
    if (boost::multiprecision::bit_test(e, i)) result = result * *this;
  }
  return result;
}

FieldElement FieldElement::pow(std::uint64_t e) const {
  FieldElement result = spec_->one();
  FieldElement base = *this;
  while (e) {
    if (e & 1) result = result * base;
    e >>= 1;
    if (e) base = base * base;
  }
  return result;
}

FieldElement embed(const FieldElement& x, FieldRef target) {
  if (x.spec() == target) return x;
  if (x.spec() != target->prime_subfield()) throw SpecMismatch("cannot embed: not the prime subfield");
  return target->from_int(x.words()[0]);
}

}  // namespace nshift
