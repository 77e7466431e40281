#include "doctest.h"
#include "nshift/endo.hpp"
#include "nshift/errors.hpp"
#include "../support/properties.hpp"
#include "../support/toys.hpp"

using namespace nshift;
using props::EndoVariant;
using toys::m7;

TEST_CASE("endo: apply examples") {
  Rng rng(1);
  const auto x = random_element(toys::m2_gf7(), rng);
  CHECK(endo_apply(Endomorphism::identity(toys::m2_gf7()), x) == x);
  const auto I = PlatformElement::identity(toys::m2_gf7());
  CHECK(endo_apply(Endomorphism::inner(I, I), x) == x);

  auto X = PlatformElement::zero(toys::m2_gf4());
  X.set(0, 0, toys::gf4()->from_index(2));
  CHECK(endo_apply(Endomorphism::entry_power(toys::m2_gf4(), 4), X) == X);
  // x -> x^2 moves x to x + 1
  auto Y = PlatformElement::zero(toys::m2_gf4());
  Y.set(0, 0, toys::gf4()->from_index(3));
  CHECK(endo_apply(Endomorphism::entry_power(toys::m2_gf4(), 2), X) == Y);
}

TEST_CASE("endo: conjugation direction") {
  const auto H = m7({1, 1, 0, 1}), Hi = m7({1, 6, 0, 1});
  const auto x = m7({1, 2, 3, 4});
  const auto phi = Endomorphism::inner(H, Hi);
  CHECK(phi.apply(x) == Hi * x * H);
  CHECK(endo_power(phi, 2).apply(x) == Hi * Hi * x * H * H);
  CHECK(endo_power(phi, 0).kind() == Endomorphism::Kind::Identity);
}

TEST_CASE("endo: validation") {
  CHECK_THROWS_AS(Endomorphism::inner(m7({1, 1, 0, 1}), m7({1, 1, 0, 1})), ValidationError);
  CHECK_THROWS_AS(Endomorphism::entry_power(toys::m2_gf7(), 3), ValidationError);
  CHECK_NOTHROW(Endomorphism::entry_power(toys::m2_gf7(), 49));
}

TEST_CASE("endo: scalar field") {
  const Instance inst = sample_instance(toys::m2_kls(), InstanceVariant::Inner, 5);
  CHECK(endo_scalar_field(Endomorphism::inner(inst.H, inst.H_inv)) == FieldSpec::gf2_127());
  CHECK(endo_scalar_field(Endomorphism::entry_power(toys::m2_kls(), 4)) == FieldSpec::prime(2));
  CHECK(endo_scalar_field(Endomorphism::compose(4, inst.H, inst.H_inv)) == FieldSpec::prime(2));
  CHECK(endo_scalar_field(Endomorphism::identity(toys::m2_kls())) == FieldSpec::gf2_127());
}

TEST_CASE("endo: huge iterates split") {
  const Instance inst = sample_instance(toys::m2_kls(), InstanceVariant::Composite, 6);
  const auto phi = Endomorphism::compose(4, inst.H, inst.H_inv);
  Rng rng(2);
  const auto x = random_element(toys::m2_kls(), rng);
  const BigInt big = (BigInt(1) << 80) + 12345;
  CHECK(phi.power(big + 3).apply(x) == phi.power(3).apply(phi.power(big).apply(x)));
  // the entry exponent 4^k has multiplicative period 127 in k modulo 2^127 - 1
  const auto psi = Endomorphism::entry_power(toys::m2_kls(), 4);
  CHECK(psi.power(BigInt(127) * 1000 + 5).apply(x) == psi.power(5).apply(x));
}

TEST_CASE("endo: iterate oracle for k <= 8") {
  for (auto v : {EndoVariant::Identity, EndoVariant::Inner, EndoVariant::EntryPower, EndoVariant::Compose}) {
    const auto phi = props::random_endo(toys::m2_gf4(), v, 33);
    Rng rng(4);
    const auto x = random_element(toys::m2_gf4(), rng);
    PlatformElement it = x;
    for (int k = 0; k <= 8; ++k) {
      CHECK(endo_power(phi, k).apply(x) == it);
      it = phi.apply(it);
    }
  }
}

TEST_CASE("endo: laws") {
  for (auto v : {EndoVariant::Identity, EndoVariant::Inner, EndoVariant::EntryPower, EndoVariant::Compose}) {
    for (const PlatformRef& spec : {toys::m2_gf4(), toys::m2_kls(), make_field_platform(FieldSpec::standard(3, 2), 2)}) {
      for (auto r : {props::endo_laws(spec, v, 100, 1), props::endo_power_laws(spec, v, 50, 2)}) {
        INFO(r.name, " variant ", static_cast<int>(v), ": ", r.first_failure);
        CHECK(r.ok());
      }
    }
  }
  for (auto v : {EndoVariant::Identity, EndoVariant::Inner}) {
    auto r = props::endo_laws(make_group_algebra_platform(toys::gf7(), build_a5(), 3), v, 5, 3);
    INFO(r.first_failure);
    CHECK(r.ok());
  }
}
