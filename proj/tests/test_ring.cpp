#include <doctest.h>

#include <random>

#include "zks/ring.hpp"

using namespace zks;

namespace {

GroupRingElement rand_elem(std::mt19937_64& gen, int k, const Ring& ring) {
  std::vector<Int> coeffs(static_cast<size_t>(k));
  for (Int& c : coeffs) c = Int(static_cast<long long>(gen() % 19) - 9);
  return GroupRingElement::from_coeffs(k, ring, std::move(coeffs));
}

}  // namespace

TEST_SUITE("ring") {

TEST_CASE("ring construction and parsing") {
  CHECK_THROWS_AS(Ring::integers_mod(1), domain_error);
  CHECK(Ring::parse("Z") == Ring::integers());
  CHECK(Ring::parse("Z/5") == Ring::integers_mod(5));
  CHECK(Ring::parse("Zmod:7") == Ring::integers_mod(7));
  CHECK_THROWS_AS(Ring::parse("Q"), format_error);
  CHECK_THROWS_AS(Ring::parse("Z/x"), format_error);
  CHECK(Ring::integers_mod(6).name() == "Z/6");
  CHECK(Ring::integers_mod(5).reduce(-3) == 2);
  CHECK(Ring::integers().reduce(-3) == -3);
}

TEST_CASE("kR != R detection") {
  CHECK(Ring::integers().k_nontrivial(5));
  CHECK(Ring::integers_mod(4).k_nontrivial(2));
  CHECK(Ring::integers_mod(6).k_nontrivial(3));
  CHECK_FALSE(Ring::integers_mod(3).k_nontrivial(2));
  CHECK_FALSE(Ring::integers_mod(5).k_nontrivial(3));
}

TEST_CASE("congruence modulo the subgroup kR") {
  Ring z = Ring::integers();
  CHECK(congruent_mod(7, 1, 3, z));
  CHECK_FALSE(congruent_mod(7, 2, 3, z));
  Ring z4 = Ring::integers_mod(4);
  CHECK(congruent_mod(0, 2, 2, z4));
  CHECK_FALSE(congruent_mod(0, 1, 2, z4));
  // gcd(3, 4) = 1, so 3R = R and everything is congruent.
  Ring z4b = Ring::integers_mod(4);
  CHECK(congruent_mod(0, 1, 3, z4b));
}

TEST_CASE("special elements") {
  for (int k = 2; k <= 6; ++k) {
    Ring z = Ring::integers();
    CHECK(GroupRingElement::sigma_r(k, z, 0).is_zero());
    CHECK(GroupRingElement::tau_r(k, z, 0).is_zero());
    CHECK(GroupRingElement::tau_r(k, z, k).is_zero());
    CHECK(GroupRingElement::sigma_r(k, z, k) == GroupRingElement::sigma(k, z));
    CHECK_THROWS_AS(GroupRingElement::sigma_r(k, z, k + 1), domain_error);
    CHECK_THROWS_AS(GroupRingElement::tau_r(k, z, -1), domain_error);
    CHECK_THROWS_AS(GroupRingElement::group(k, z, k), domain_error);
  }
}

TEST_CASE("multiplication identities of sigma and tau") {
  for (int k = 2; k <= 6; ++k) {
    for (const Ring& ring : {Ring::integers(), Ring::integers_mod(6)}) {
      GroupRingElement sigma = GroupRingElement::sigma(k, ring);
      GroupRingElement tau = GroupRingElement::tau(k, ring);
      for (int i = 1; i <= k; ++i) {
        GroupRingElement sigma_i = GroupRingElement::sigma_r(k, ring, i);
        GroupRingElement tau_i = GroupRingElement::tau_r(k, ring, i);
        CHECK(tau * sigma_i == tau_i);
        CHECK((sigma * tau_i).is_zero());
      }
      CHECK(sigma * sigma == sigma.scaled(Int(k)));
    }
  }
}

TEST_CASE("identity element and mismatch errors") {
  std::mt19937_64 gen(11);
  for (int t = 0; t < 50; ++t) {
    int k = 2 + static_cast<int>(gen() % 5);
    Ring ring = Ring::integers();
    GroupRingElement x = rand_elem(gen, k, ring);
    CHECK(GroupRingElement::identity(k, ring) * x == x);
  }
  Ring z = Ring::integers();
  GroupRingElement a(2, z), b(3, z);
  CHECK_THROWS_AS(a + b, dimension_error);
  GroupRingElement c(2, Ring::integers_mod(5));
  CHECK_THROWS_AS(a * c, dimension_error);
}

TEST_CASE("evaluation") {
  Ring z = Ring::integers();
  // alpha e + beta g -> alpha for k = 2
  GroupRingElement x = GroupRingElement::from_coeffs(2, z, {Int(5), Int(-3)});
  CHECK(x.evaluate(0) == 5);
  CHECK(x.evaluate(1) == -3);
  for (int k = 2; k <= 6; ++k) {
    CHECK(GroupRingElement::sigma(k, z).evaluate(0) == 1);
    CHECK(GroupRingElement::tau(k, z).evaluate(1) == 1);
    CHECK(GroupRingElement::tau(k, z).evaluate(0) == -1);
    CHECK_THROWS_AS(GroupRingElement::tau(k, z).evaluate(k), domain_error);
  }
}

TEST_CASE("augmentation is a ring homomorphism") {
  Ring z = Ring::integers();
  for (int k = 2; k <= 6; ++k) {
    CHECK(GroupRingElement::sigma(k, z).augment() == k);
    CHECK(GroupRingElement::tau(k, z).augment() == 0);
    for (int a = 0; a < k; ++a) CHECK(GroupRingElement::group(k, z, a).augment() == 1);
  }
  std::mt19937_64 gen(12);
  for (int t = 0; t < 200; ++t) {
    int k = 2 + static_cast<int>(gen() % 5);
    Ring ring = (t % 2 == 0) ? Ring::integers() : Ring::integers_mod(2 + (gen() % 9));
    GroupRingElement x = rand_elem(gen, k, ring);
    GroupRingElement y = rand_elem(gen, k, ring);
    CHECK((x * y).augment() == ring.mul(x.augment(), y.augment()));
    CHECK((x + y).augment() == ring.add(x.augment(), y.augment()));
  }
}

TEST_CASE("basis coordinates") {
  Ring z = Ring::integers();
  for (int k = 2; k <= 6; ++k) {
    for (int i = 1; i < k; ++i) {
      auto coords = GroupRingElement::tau_r(k, z, i).coords(Basis::T);
      for (int j = 0; j < k; ++j) CHECK(coords[static_cast<size_t>(j)] == (j == i ? 1 : 0));
    }
    auto sig = GroupRingElement::sigma(k, z).coords(Basis::Sigma);
    for (int j = 0; j < k; ++j) CHECK(sig[static_cast<size_t>(j)] == (j == k - 1 ? 1 : 0));
    auto e = GroupRingElement::identity(k, z).coords(Basis::Sigma);
    for (int j = 0; j < k; ++j) CHECK(e[static_cast<size_t>(j)] == (j == 0 ? 1 : 0));
  }
}

TEST_CASE("basis round trips") {
  std::mt19937_64 gen(13);
  for (int k = 2; k <= 6; ++k) {
    for (int t = 0; t < 1000; ++t) {
      Ring ring = (t % 3 == 0) ? Ring::integers_mod(2 + (gen() % 9)) : Ring::integers();
      GroupRingElement x = rand_elem(gen, k, ring);
      for (Basis basis : {Basis::T, Basis::Sigma}) {
        CHECK(GroupRingElement::from_coords(k, ring, basis, x.coords(basis)) == x);
      }
    }
  }
}

TEST_CASE("kernel and image of multiplication by sigma and tau") {
  std::mt19937_64 gen(14);
  for (int k = 2; k <= 6; ++k) {
    Ring z = Ring::integers();
    GroupRingElement sigma = GroupRingElement::sigma(k, z);
    GroupRingElement tau = GroupRingElement::tau(k, z);
    for (int t = 0; t < 100; ++t) {
      GroupRingElement x = rand_elem(gen, k, z);
      // sigma x lies in the span of sigma_k
      auto sc = (sigma * x).coords(Basis::Sigma);
      for (int j = 0; j + 1 < k; ++j) CHECK(sc[static_cast<size_t>(j)] == 0);
      // tau x lies in the span of tau_1..tau_{k-1}
      auto tc = (tau * x).coords(Basis::T);
      CHECK(tc[0] == 0);
      CHECK((sigma * (tau * x)).is_zero());
      CHECK((tau * (sigma * x)).is_zero());
    }
  }
}

TEST_CASE("modular coefficients stay canonical") {
  Ring z5 = Ring::integers_mod(5);
  GroupRingElement x = GroupRingElement::from_coeffs(3, z5, {Int(-1), Int(7), Int(5)});
  CHECK(x.coeffs()[0] == 4);
  CHECK(x.coeffs()[1] == 2);
  CHECK(x.coeffs()[2] == 0);
}

}  // TEST_SUITE
