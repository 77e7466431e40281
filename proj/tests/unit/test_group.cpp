#include <set>

#include "doctest.h"
#include "nshift/errors.hpp"
#include "nshift/group.hpp"
#include "nshift/rng.hpp"
#include "nshift/platform.hpp"
#include "../support/toys.hpp"

using namespace nshift;

TEST_CASE("group: A5 table") {
  GroupRef g = build_a5();
  REQUIRE(g->order() == 60);
  for (const auto& p : g->elements()) CHECK(is_even(p));
  for (std::size_t i = 1; i < g->order(); ++i) CHECK(g->elements()[i - 1] < g->elements()[i]);
  for (std::size_t x = 0; x < 60; ++x) CHECK(g->cayley(g->identity(), x) == x);
  for (std::size_t i = 0; i < 60; ++i) {
    std::set<std::size_t> row, col;
    for (std::size_t j = 0; j < 60; ++j) {
      row.insert(g->cayley(i, j));
      col.insert(g->cayley(j, i));
      CHECK(g->cayley(i, j) == g->index_of(compose(g->elements()[i], g->elements()[j])));
    }
    CHECK(row.size() == 60);
    CHECK(col.size() == 60);
    CHECK(g->cayley(i, g->inverse(i)) == g->identity());
  }
}

TEST_CASE("group: composition convention") {
  // (p o q)(x) = p(q(x))
  const Permutation p{1, 2, 0, 3, 4}, q{0, 1, 3, 4, 2};
  const Permutation pq = compose(p, q);
  for (std::uint8_t x = 0; x < 5; ++x) CHECK(pq[x] == p[q[x]]);
}

TEST_CASE("group algebra: C2 telescoping") {
  GroupRef c2 = build_c2();
  FieldRef f = toys::gf7();
  const auto e = GroupAlgebraElement::one(c2, f);
  const std::size_t s_idx = 1 - c2->identity();
  const auto s = GroupAlgebraElement::basis(c2, f, s_idx);
  CHECK(ga_mul(e + s, e - s).is_zero());
}

TEST_CASE("group algebra: 3-cycle times its inverse is e") {
  GroupRef a5 = build_a5();
  FieldRef f = toys::gf7();
  const std::size_t c = a5->index_of({1, 2, 0, 3, 4});
  const auto x = GroupAlgebraElement::basis(a5, f, c);
  const auto y = GroupAlgebraElement::basis(a5, f, a5->inverse(c));
  CHECK(ga_mul(x, y) == GroupAlgebraElement::one(a5, f));
}

TEST_CASE("group algebra: identity and naive double loop") {
  GroupRef a5 = build_a5();
  FieldRef f = toys::gf7();
  Rng rng(5);
  for (int t = 0; t < 20; ++t) {
    std::vector<FieldElement> ca, cb;
    for (int i = 0; i < 60; ++i) {
      ca.push_back(random_field_element(f, rng));
      cb.push_back(random_field_element(f, rng));
    }
    const GroupAlgebraElement a(a5, ca), b(a5, cb);
    CHECK(ga_mul(GroupAlgebraElement::one(a5, f), a) == a);
    // naive: compose the permutations directly, no Cayley table
    std::vector<std::uint64_t> acc(60, 0);
    for (std::size_t u = 0; u < 60; ++u)
      for (std::size_t v = 0; v < 60; ++v) {
        const std::size_t g = a5->index_of(compose(a5->elements()[u], a5->elements()[v]));
        acc[g] = (acc[g] + ca[u].words()[0] * cb[v].words()[0]) % 7;
      }
    const GroupAlgebraElement prod = ga_mul(a, b);
    for (std::size_t g = 0; g < 60; ++g) CHECK(prod[g].words()[0] == acc[g]);
  }
}

TEST_CASE("group algebra: mismatched tables are rejected") {
  FieldRef f = toys::gf7();
  CHECK_THROWS_AS(ga_mul(GroupAlgebraElement::one(build_a5(), f), GroupAlgebraElement::one(build_c2(), f)),
                  SpecMismatch);
}
