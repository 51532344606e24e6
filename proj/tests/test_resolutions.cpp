#include <doctest.h>

#include <random>

#include "zks/resolutions.hpp"

using namespace zks;

namespace {

// All bar words of a given degree, lexicographic.
std::vector<BarWord> all_words(int k, int degree) {
  std::vector<BarWord> out;
  std::vector<int> letters(static_cast<size_t>(degree), 0);
  while (true) {
    out.emplace_back(k, letters);
    int i = degree - 1;
    while (i >= 0 && letters[static_cast<size_t>(i)] == k - 1) {
      letters[static_cast<size_t>(i)] = 0;
      --i;
    }
    if (i < 0) break;
    ++letters[static_cast<size_t>(i)];
  }
  return out;
}

std::vector<TensorElement> all_tensors(int k, int degree) {
  std::vector<TensorElement> out;
  for (const BarWord& w : all_words(k, degree)) {
    for (int lead = 0; lead < k; ++lead) out.push_back(bar_to_tensor(lead, w));
  }
  return out;
}

StandardChain unit_chain(const BarWord& w, const Ring& ring) {
  StandardChain c(w.k, ring, w.degree());
  c.add(w, GroupRingElement::identity(w.k, ring));
  return c;
}

}  // namespace

TEST_SUITE("resolutions") {

TEST_CASE("tensor and bar forms convert both ways") {
  auto [lead1, word1] = tensor_to_bar(TensorElement(3, {0, 2, 1}));
  CHECK(lead1 == 0);
  CHECK(word1.letters == std::vector<int>{2, 2});
  auto [lead2, word2] = tensor_to_bar(TensorElement(2, {1, 0, 1}));
  CHECK(lead2 == 1);
  CHECK(word2.letters == std::vector<int>{1, 1});
  auto [lead3, word3] = tensor_to_bar(TensorElement(4, {3}));
  CHECK(lead3 == 3);
  CHECK(word3.degree() == 0);

  std::mt19937_64 gen(21);
  for (int t = 0; t < 500; ++t) {
    int k = 2 + static_cast<int>(gen() % 5);
    int deg = static_cast<int>(gen() % 5);
    std::vector<int> entries(static_cast<size_t>(deg + 1));
    for (int& e : entries) e = static_cast<int>(gen() % static_cast<unsigned>(k));
    TensorElement tensor(k, entries);
    auto [lead, word] = tensor_to_bar(tensor);
    CHECK(bar_to_tensor(lead, word) == tensor);
  }
}

TEST_CASE("bar boundary of a one-letter word is tau_r") {
  for (int k = 2; k <= 5; ++k) {
    Ring z = Ring::integers();
    for (int r = 0; r < k; ++r) {
      StandardChain b = bar_boundary(BarWord(k, {r}), z);
      StandardChain expected(k, z, 0);
      expected.add(BarWord(k, {}), GroupRingElement::tau_r(k, z, r));
      CHECK(b == expected);
    }
  }
}

TEST_CASE("bar boundary of [1|1] over k=2") {
  Ring z = Ring::integers();
  StandardChain b = bar_boundary(BarWord(2, {1, 1}), z);
  StandardChain expected(2, z, 1);
  expected.add(BarWord(2, {1}), GroupRingElement::sigma(2, z));  // e + g
  expected.add(BarWord(2, {0}), GroupRingElement::identity(2, z).scaled(Int(-1)));
  CHECK(b == expected);
}

TEST_CASE("bar boundary rejects the empty word") {
  CHECK_THROWS_AS(bar_boundary(BarWord(3, {}), Ring::integers()), dimension_error);
}

TEST_CASE("boundary of a boundary vanishes, exhaustively") {
  Ring z = Ring::integers();
  for (int k = 2; k <= 5; ++k) {
    for (int deg = 2; deg <= 4; ++deg) {
      for (const BarWord& w : all_words(k, deg)) {
        CHECK(standard_boundary(bar_boundary(w, z)).is_zero());
      }
    }
  }
}

TEST_CASE("alternating predicate") {
  CHECK_FALSE(is_alternating(BarWord(3, {1, 0, 2})));
  CHECK(is_alternating(BarWord(3, {})));
  CHECK(is_alternating(BarWord(3, {1, 2, 1})));
  CHECK(is_alternating(TensorElement(3, {0, 1, 0})));
  CHECK_FALSE(is_alternating(TensorElement(3, {0, 1, 1})));
}

TEST_CASE("strongly alternating predicate") {
  CHECK(is_strongly_alternating(BarWord(2, {1, 1})));
  CHECK_FALSE(is_strongly_alternating(BarWord(3, {1, 1})));
  CHECK(is_strongly_alternating(BarWord(3, {2, 2, 1, 2})));
  CHECK(is_strongly_alternating(TensorElement(3, {1})));  // degree 0
  // odd degree: first step must move, tail obeys the pair rule
  CHECK(is_strongly_alternating(BarWord(3, {1})));
  CHECK_FALSE(is_strongly_alternating(BarWord(3, {0})));
  CHECK(is_strongly_alternating(BarWord(3, {2, 1, 2})));
  CHECK_FALSE(is_strongly_alternating(BarWord(3, {2, 1, 1})));
}

TEST_CASE("strongly alternating implies alternating; coincidence exactly at k=2") {
  for (int k = 2; k <= 5; ++k) {
    for (int deg = 0; deg <= 5; ++deg) {
      bool coincide = true;
      for (const TensorElement& t : all_tensors(k, deg)) {
        if (is_strongly_alternating(t)) CHECK(is_alternating(t));
        if (is_strongly_alternating(t) != is_alternating(t)) coincide = false;
      }
      if (k == 2) CHECK(coincide);
      if (k > 2 && deg >= 2) CHECK_FALSE(coincide);
    }
  }
}

TEST_CASE("strongly alternating is invariant under the diagonal shift") {
  for (int k = 2; k <= 4; ++k) {
    for (int deg = 0; deg <= 4; ++deg) {
      for (const TensorElement& t : all_tensors(k, deg)) {
        CHECK(is_strongly_alternating(t) == is_strongly_alternating(t.shifted(1)));
      }
    }
  }
}

TEST_CASE("chain map on basis words") {
  Ring z = Ring::integers();
  for (int k = 2; k <= 5; ++k) {
    CHECK(map_word_to_minimal(BarWord(k, {}), z) == GroupRingElement::identity(k, z));
    for (int i = 0; i < k; ++i) {
      CHECK(map_word_to_minimal(BarWord(k, {i}), z) == GroupRingElement::sigma_r(k, z, i));
    }
    for (int a = 0; a < k; ++a) {
      for (int b = 0; b < k; ++b) {
        GroupRingElement img = map_word_to_minimal(BarWord(k, {a, b}), z);
        if (a + b >= k) {
          CHECK(img == GroupRingElement::identity(k, z));
        } else {
          CHECK(img.is_zero());
        }
      }
    }
  }
}

TEST_CASE("chain map kills degenerate words") {
  Ring z = Ring::integers();
  for (int k = 2; k <= 5; ++k) {
    for (int deg = 1; deg <= 4; ++deg) {
      for (const BarWord& w : all_words(k, deg)) {
        if (!is_alternating(w)) CHECK(map_word_to_minimal(w, z).is_zero());
      }
    }
  }
}

TEST_CASE("chain map is equivariant on tensors") {
  Ring z = Ring::integers();
  for (int k = 2; k <= 4; ++k) {
    GroupRingElement g = GroupRingElement::group(k, z, 1);
    for (int deg = 0; deg <= 3; ++deg) {
      for (const TensorElement& t : all_tensors(k, deg)) {
        StandardChain c(k, z, deg), gc(k, z, deg);
        c.add_tensor(t, 1);
        gc.add_tensor(t.shifted(1), 1);
        CHECK(map_to_minimal(gc).value == g * map_to_minimal(c).value);
      }
    }
  }
}

TEST_CASE("image of the chain map lies in the chosen complements") {
  Ring z = Ring::integers();
  for (int k = 2; k <= 5; ++k) {
    for (int deg = 0; deg <= 3; ++deg) {
      for (const BarWord& w : all_words(k, deg)) {
        GroupRingElement img = map_word_to_minimal(w, z);
        if (deg % 2 == 0) {
          // 0 or e
          CHECK((img.is_zero() || img == GroupRingElement::identity(k, z)));
        } else {
          // span of sigma_1..sigma_{k-1}: no sigma_k component
          CHECK(img.coords(Basis::Sigma)[static_cast<size_t>(k - 1)] == 0);
        }
      }
    }
  }
}

TEST_CASE("chain map is module-linear over the group ring") {
  Ring z = Ring::integers();
  std::mt19937_64 gen(22);
  for (int t = 0; t < 200; ++t) {
    int k = 2 + static_cast<int>(gen() % 4);
    int deg = 1 + static_cast<int>(gen() % 3);
    std::vector<int> letters(static_cast<size_t>(deg));
    for (int& a : letters) a = static_cast<int>(gen() % static_cast<unsigned>(k));
    BarWord w(k, letters);
    std::vector<Int> coeffs(static_cast<size_t>(k));
    for (Int& c : coeffs) c = Int(static_cast<long long>(gen() % 7) - 3);
    GroupRingElement lambda = GroupRingElement::from_coeffs(k, z, coeffs);
    CHECK(map_to_minimal(unit_chain(w, z).scaled(lambda)).value ==
          lambda * map_word_to_minimal(w, z));
  }
}

TEST_CASE("minimal resolution boundaries") {
  Ring z = Ring::integers();
  // k = 2 boundary matrices on the basis {e, g}
  GroupRingElement tau = GroupRingElement::tau(2, z);
  CHECK(tau * GroupRingElement::group(2, z, 0) ==
        GroupRingElement::from_coeffs(2, z, {Int(-1), Int(1)}));
  CHECK(tau * GroupRingElement::group(2, z, 1) ==
        GroupRingElement::from_coeffs(2, z, {Int(1), Int(-1)}));
  GroupRingElement sigma = GroupRingElement::sigma(2, z);
  CHECK(sigma * GroupRingElement::group(2, z, 0) ==
        GroupRingElement::from_coeffs(2, z, {Int(1), Int(1)}));
  CHECK(sigma * GroupRingElement::group(2, z, 1) ==
        GroupRingElement::from_coeffs(2, z, {Int(1), Int(1)}));

  for (int k = 2; k <= 6; ++k) {
    for (int i = 1; i <= k; ++i) {
      MinimalElement x{1, GroupRingElement::sigma_r(k, z, i)};
      CHECK(minimal_boundary(x).value == GroupRingElement::tau_r(k, z, i));
    }
  }
  CHECK_THROWS_AS(minimal_boundary({0, GroupRingElement::identity(2, z)}), dimension_error);

  std::mt19937_64 gen(23);
  for (int t = 0; t < 1000; ++t) {
    int k = 2 + static_cast<int>(gen() % 5);
    std::vector<Int> coeffs(static_cast<size_t>(k));
    for (Int& c : coeffs) c = Int(static_cast<long long>(gen() % 19) - 9);
    MinimalElement x{2 + static_cast<int>(gen() % 4),
                     GroupRingElement::from_coeffs(k, z, coeffs)};
    CHECK(minimal_boundary(minimal_boundary(x)).value.is_zero());
  }
}

TEST_CASE("chain map commutes with boundaries, exhaustively") {
  ChainMapReport r2 = verify_minimal_chain_map(2, 4, Ring::integers());
  CHECK(r2.checked == 30);
  CHECK(r2.ok());
  ChainMapReport r5 = verify_minimal_chain_map(5, 4, Ring::integers());
  CHECK(r5.checked == 780);
  CHECK(r5.ok());
  ChainMapReport rm = verify_minimal_chain_map(3, 4, Ring::integers_mod(9));
  CHECK(rm.ok());
  CHECK_THROWS_AS(verify_minimal_chain_map(2, 40, Ring::integers(), 1000), size_error);
}

TEST_CASE("hand-expanded golden values for the commuting squares") {
  Ring z = Ring::integers();
  // k=3, word [1|1]: both routes give 0.
  {
    BarWord w(3, {1, 1});
    CHECK(map_word_to_minimal(w, z).is_zero());
    CHECK(map_to_minimal(standard_boundary(unit_chain(w, z))).value.is_zero());
  }
  // k=3, word [2|1]: both routes give sigma.
  {
    BarWord w(3, {2, 1});
    MinimalElement via_minimal = minimal_boundary({2, map_word_to_minimal(w, z)});
    MinimalElement via_standard = map_to_minimal(standard_boundary(unit_chain(w, z)));
    CHECK(via_minimal.value == GroupRingElement::sigma(3, z));
    CHECK(via_minimal == via_standard);
  }
}

TEST_CASE("standard chains normalize") {
  Ring z = Ring::integers();
  StandardChain c(3, z, 1);
  c.add(BarWord(3, {2}), GroupRingElement::identity(3, z));
  c.add(BarWord(3, {2}), GroupRingElement::identity(3, z).scaled(Int(-1)));
  CHECK(c.is_zero());
  c.add(BarWord(3, {1}), GroupRingElement::group(3, z, 2));
  CHECK(c.terms().size() == 1);
  CHECK_THROWS_AS(c.add(BarWord(3, {1, 1}), GroupRingElement::identity(3, z)), dimension_error);
  CHECK_THROWS_AS(c.add(BarWord(2, {1}), GroupRingElement::identity(2, z)), dimension_error);
}

}  // TEST_SUITE
