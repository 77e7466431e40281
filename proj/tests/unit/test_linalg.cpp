#include "doctest.h"
#include "nshift/errors.hpp"
#include "nshift/linalg.hpp"
#include "nshift/platform.hpp"
#include "../support/properties.hpp"
#include "../support/toys.hpp"

using namespace nshift;
using toys::vec;

TEST_CASE("linalg: span_insert examples") {
  FieldRef f = toys::gf7();
  SpanBasis<int> b(f, 2);
  auto r = span_insert(b, vec(f, {1, 0}), 0);
  CHECK(r.added);
  CHECK_FALSE(r.coeffs.has_value());
  r = span_insert(b, vec(f, {3, 0}), 1);
  CHECK_FALSE(r.added);
  CHECK(*r.coeffs == vec(f, {3}));
  span_insert(b, vec(f, {0, 1}), 2);
  r = span_insert(b, vec(f, {2, 5}), 3);
  CHECK_FALSE(r.added);
  CHECK(*r.coeffs == vec(f, {2, 5}));
  CHECK(b.size() == 2);
  CHECK(b.tag(1) == 2);
  CHECK_THROWS_AS(span_insert(b, vec(f, {1, 2, 3}), 4), DimensionMismatch);
}

TEST_CASE("linalg: express examples") {
  FieldRef f = toys::gf7();
  SpanBasis<int> b(f, 3);
  span_insert(b, vec(f, {1, 1, 0}), 0);
  span_insert(b, vec(f, {0, 1, 0}), 1);
  CHECK(*express(b, vec(f, {1, 1, 0})) == vec(f, {1, 0}));
  CHECK(*express(b, vec(f, {2, 5, 0})) == vec(f, {2, 3}));
  CHECK_FALSE(express(b, vec(f, {0, 0, 1})).has_value());
  CHECK(b.size() == 2);
}

TEST_CASE("linalg: pivots and stored rows") {
  FieldRef f = toys::gf7();
  Echelon e(f, 3);
  e.insert(vec(f, {0, 0, 2}));
  e.insert(vec(f, {0, 3, 1}));
  e.insert(vec(f, {1, 0, 0}));
  REQUIRE(e.size() == 3);
  CHECK(e.pivot_order() == std::vector<std::size_t>{2, 1, 0});
  for (std::size_t i = 0; i < e.size(); ++i) CHECK(e.row(i)[e.pivot(i)].is_one());
}

TEST_CASE("linalg: solve_linear examples") {
  FieldRef f = toys::gf7();
  Matrix I{vec(f, {1, 0}), vec(f, {0, 1})};
  auto s = solve_linear(I, vec(f, {3, 4}));
  REQUIRE(s.has_value());
  CHECK(s->particular == vec(f, {3, 4}));
  CHECK(s->nullspace.empty());

  Matrix Z{vec(f, {0, 0}), vec(f, {0, 0})};
  CHECK_FALSE(solve_linear(Z, vec(f, {1, 0})).has_value());

  Matrix A{vec(f, {1, 2})};
  s = solve_linear(A, vec(f, {0}));
  REQUIRE(s.has_value());
  REQUIRE(s->nullspace.size() == 1);
  CHECK(s->nullspace[0] == vec(f, {5, 1}));
}

TEST_CASE("linalg: solve_linear solutions satisfy the system") {
  FieldRef f = toys::gf7();
  Rng rng(21);
  for (int t = 0; t < 200; ++t) {
    const std::size_t rows = 1 + rng.below(5), cols = 1 + rng.below(5);
    Matrix A(rows);
    for (auto& row : A)
      for (std::size_t j = 0; j < cols; ++j) row.push_back(rng.below(3) ? f->zero() : random_field_element(f, rng));
    Vector x0;
    for (std::size_t j = 0; j < cols; ++j) x0.push_back(random_field_element(f, rng));
    const Vector rhs = mat_vec(A, x0);
    auto s = solve_linear(A, rhs);
    REQUIRE(s.has_value());
    CHECK(mat_vec(A, s->particular) == rhs);
    for (const auto& v : s->nullspace) CHECK(is_zero(mat_vec(A, v)));
    CHECK(s->nullspace.size() == cols - rank(A, f, cols));
  }
}

TEST_CASE("linalg: express recovers coefficients over independent originals") {
  FieldRef f = FieldSpec::standard(2, 3);
  Rng rng(8);
  for (int t = 0; t < 100; ++t) {
    SpanBasis<int> b(f, 6);
    std::vector<Vector> orig;
    while (orig.size() < 4) {
      Vector v;
      for (int j = 0; j < 6; ++j) v.push_back(random_field_element(f, rng));
      if (span_insert(b, v, 0).added) orig.push_back(v);
    }
    Vector c, sum = zero_vector(f, 6);
    for (const auto& o : orig) {
      c.push_back(random_field_element(f, rng));
      for (int j = 0; j < 6; ++j) sum[j] += c.back() * o[j];
    }
    CHECK(*express(b, sum) == c);
  }
}

TEST_CASE("linalg: membership agrees with rank") {
  for (auto r : {props::span_membership_vs_rank(toys::gf7(), 4, 300, 1),
                 props::span_membership_vs_rank(FieldSpec::prime(2), 8, 300, 2),
                 props::span_membership_vs_rank(toys::gf4(), 6, 200, 3)}) {
    INFO(r.name, ": ", r.first_failure);
    CHECK(r.ok());
  }
}
