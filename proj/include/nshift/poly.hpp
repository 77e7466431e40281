#pragma once

#include <cstdint>
#include <vector>

namespace nshift::poly {

// Dense polynomial over GF(p), coefficient of x^i at index i, no trailing
// zeros (the zero polynomial is the empty vector). p < 2^32.
using Poly = std::vector<std::uint64_t>;

void trim(Poly& f);
int degree(const Poly& f);  // -1 for the zero polynomial

Poly add(const Poly& a, const Poly& b, std::uint64_t p);
Poly sub(const Poly& a, const Poly& b, std::uint64_t p);
Poly mul(const Poly& a, const Poly& b, std::uint64_t p);
// Quotient and remainder; b must be nonzero.
void divmod(const Poly& a, const Poly& b, std::uint64_t p, Poly& q, Poly& r);
Poly mod(const Poly& a, const Poly& b, std::uint64_t p);
Poly mulmod(const Poly& a, const Poly& b, const Poly& f, std::uint64_t p);
Poly powmod(const Poly& a, std::uint64_t e, const Poly& f, std::uint64_t p);
Poly gcd(Poly a, Poly b, std::uint64_t p);
// Inverse of a modulo f; requires gcd(a, f) = 1.
Poly invmod(const Poly& a, const Poly& f, std::uint64_t p);

std::uint64_t inv_mod_prime(std::uint64_t a, std::uint64_t p);
bool is_prime(std::uint64_t p);
std::vector<std::uint64_t> prime_factors(std::uint64_t n);

// Rabin's irreducibility test for a monic f of degree >= 1 over GF(p).
// Throws ValidationError if f is not monic or p is not prime.
bool irreducible(std::uint64_t p, const Poly& f);

// Lexicographically first monic irreducible of degree d (ordering by the
// base-p integer formed by the lower coefficients).
Poly first_irreducible(std::uint64_t p, unsigned d);

}  // namespace nshift::poly
