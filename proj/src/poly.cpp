#include "nshift/poly.hpp"

#include <algorithm>

#include "nshift/errors.hpp"

namespace nshift::poly {

void trim(Poly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

int degree(const Poly& f) { return static_cast<int>(f.size()) - 1; }

Poly add(const Poly& a, const Poly& b, std::uint64_t p) {
  Poly r(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < r.size(); ++i) {
    std::uint64_t x = i < a.size() ? a[i] : 0;
    std::uint64_t y = i < b.size() ? b[i] : 0;
    r[i] = (x + y) % p;
  }
  trim(r);
  return r;
}

Poly sub(const Poly& a, const Poly& b, std::uint64_t p) {
  Poly r(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < r.size(); ++i) {
    std::uint64_t x = i < a.size() ? a[i] : 0;
    std::uint64_t y = i < b.size() ? b[i] : 0;
    r[i] = (x + p - y) % p;
  }
  trim(r);
  return r;
}

Poly mul(const Poly& a, const Poly& b, std::uint64_t p) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + a[i] * b[j]) % p;
  }
  trim(r);
  return r;
}

void divmod(const Poly& a, const Poly& b, std::uint64_t p, Poly& q, Poly& r) {
  if (b.empty()) throw DivisionByZero("polynomial division by zero");
  r = a;
  trim(r);
  const int db = degree(b);
  if (degree(r) < db) {
    q.clear();
    return;
  }
  q.assign(r.size() - b.size() + 1, 0);
  const std::uint64_t lead_inv = inv_mod_prime(b.back(), p);
  for (int i = degree(r); i >= db; --i) {
    std::uint64_t c = r[i] * lead_inv % p;
    if (c == 0) continue;
    q[i - db] = c;
    for (int j = 0; j <= db; ++j) r[i - db + j] = (r[i - db + j] + (p - c) * b[j]) % p;
  }
  trim(q);
  trim(r);
}

Poly mod(const Poly& a, const Poly& b, std::uint64_t p) {
  Poly q, r;
  divmod(a, b, p, q, r);
  return r;
}

Poly mulmod(const Poly& a, const Poly& b, const Poly& f, std::uint64_t p) {
  return mod(mul(a, b, p), f, p);
}

Poly powmod(const Poly& a, std::uint64_t e, const Poly& f, std::uint64_t p) {
  Poly result{1};
  result = mod(result, f, p);
  Poly base = mod(a, f, p);
  while (e > 0) {
    if (e & 1) result = mulmod(result, base, f, p);
    e >>= 1;
    if (e) base = mulmod(base, base, f, p);
  }
  return result;
}

Poly gcd(Poly a, Poly b, std::uint64_t p) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    Poly r = mod(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.empty()) {
    const std::uint64_t inv = inv_mod_prime(a.back(), p);
    for (auto& c : a) c = c * inv % p;
  }
  return a;
}

Poly invmod(const Poly& a, const Poly& f, std::uint64_t p) {
  // extended Euclid tracking only the coefficient of a
  Poly r0 = f, r1 = mod(a, f, p);
  Poly s0{}, s1{1};
  while (!r1.empty()) {
    Poly q, r;
    divmod(r0, r1, p, q, r);
    Poly s = sub(s0, mul(q, s1, p), p);
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s);
  }
  if (degree(r0) != 0) throw DivisionByZero("polynomial not invertible modulo f");
  const std::uint64_t inv = inv_mod_prime(r0[0], p);
  for (auto& c : s0) c = c * inv % p;
  return mod(s0, f, p);
}

std::uint64_t inv_mod_prime(std::uint64_t a, std::uint64_t p) {
  a %= p;
  if (a == 0) throw DivisionByZero("inverse of zero");
  std::int64_t t0 = 0, t1 = 1;
  std::int64_t r0 = static_cast<std::int64_t>(p), r1 = static_cast<std::int64_t>(a);
  while (r1 != 0) {
    std::int64_t q = r0 / r1;
    std::int64_t t = t0 - q * t1;
    t0 = t1;
    t1 = t;
    std::int64_t r = r0 - q * r1;
    r0 = r1;
    r1 = r;
  }
  if (t0 < 0) t0 += static_cast<std::int64_t>(p);
  return static_cast<std::uint64_t>(t0);
}

bool is_prime(std::uint64_t p) {
  if (p < 2) return false;
  for (std::uint64_t q = 2; q * q <= p; ++q)
    if (p % q == 0) return false;
  return true;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t q = 2; q * q <= n; ++q) {
    if (n % q) continue;
    out.push_back(q);
    while (n % q == 0) n /= q;
  }
  if (n > 1) out.push_back(n);
  return out;
}

bool irreducible(std::uint64_t p, const Poly& f_in) {
  if (!is_prime(p)) throw ValidationError("characteristic is not prime");
  Poly f = f_in;
  trim(f);
  if (f.empty() || f.back() != 1) throw ValidationError("polynomial is not monic");
  const int d = degree(f);
  if (d < 1) throw ValidationError("polynomial must have degree >= 1");
  if (d == 1) return true;

  // frob[j] = x^(p^j) mod f for j = 0..d
  std::vector<Poly> frob;
  frob.reserve(d + 1);
  frob.push_back(mod(Poly{0, 1}, f, p));
  for (int j = 1; j <= d; ++j) frob.push_back(powmod(frob.back(), p, f, p));

  const Poly x = mod(Poly{0, 1}, f, p);
  if (sub(frob[d], x, p) != Poly{}) return false;
  for (std::uint64_t q : prime_factors(static_cast<std::uint64_t>(d))) {
    const Poly h = sub(frob[d / q], x, p);
    if (degree(gcd(f, h, p)) != 0) return false;
  }
  return true;
}

Poly first_irreducible(std::uint64_t p, unsigned d) {
  if (!is_prime(p)) throw ValidationError("characteristic is not prime");
  if (d == 0) throw ValidationError("degree must be >= 1");
  // enumerate lower coefficients as a base-p counter
  std::vector<std::uint64_t> lower(d, 0);
  for (;;) {
    Poly f(lower.begin(), lower.end());
    f.push_back(1);
    if (irreducible(p, f)) return f;
    std::size_t i = 0;
    while (i < d && ++lower[i] == p) lower[i++] = 0;
    if (i == d) throw InvariantViolation("no irreducible polynomial found");
  }
}

}  // namespace nshift::poly
