#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include "zks/labelling.hpp"

using namespace zks;

namespace {

SimplicialComplex full_simplex(int r) {
  std::vector<std::string> ids;
  Simplex top;
  for (int i = 0; i <= r; ++i) {
    ids.push_back("v" + std::to_string(i));
    top.push_back(i);
  }
  return SimplicialComplex::from_indexed(ids, {top});
}

// Pushes a labelled chain into the join complex that the labels describe,
// then reads patterns off tautologically. Must agree with the direct
// pattern map.
StandardChain via_label_space(const SimplicialComplex& X, const SimplicialChain& x,
                              const Labelling& l) {
  long long max_color = 1;
  for (Vertex v = 0; v < X.vertex_count(); ++v) max_color = std::max(max_color, l.at(v).color);
  auto [J, action] = join_complex(l.k(), static_cast<int>(max_color));
  (void)action;
  SimplicialChain pushed(x.ring(), x.degree());
  for (const auto& [s, c] : x.terms()) {
    std::vector<Vertex> image;
    for (Vertex v : s) {
      image.push_back(J.vertex_index(join_vertex_id(l.at(v).sign, static_cast<int>(l.at(v).color))));
    }
    // degenerate images vanish in the induced chain map
    std::set<Vertex> distinct(image.begin(), image.end());
    if (distinct.size() != image.size()) continue;
    int inversions = 0;
    for (size_t i = 0; i < image.size(); ++i) {
      for (size_t j = i + 1; j < image.size(); ++j) {
        if (image[i] > image[j]) ++inversions;
      }
    }
    Simplex sorted(distinct.begin(), distinct.end());
    pushed.add(sorted, inversions % 2 == 0 ? c : x.ring().neg(c));
  }
  return pattern_map(J, pushed, Labelling::tautological(J, l.k()));
}

}  // namespace

TEST_SUITE("labelling") {

TEST_CASE("tautological labelling of a join is admissible and equivariant") {
  for (int k = 2; k <= 3; ++k) {
    auto [X, action] = join_complex(k, 3);
    Labelling l = Labelling::tautological(X, k);
    CHECK(check_admissible(X, l).ok);
    CHECK(check_equivariant(X, action, l).ok);
  }
}

TEST_CASE("admissibility violations are reported") {
  SimplicialComplex X = SimplicialComplex::from_facets({{"a", "b"}});
  // same color, different signs
  Labelling bad(3, {{0, 3}, {1, 3}});
  auto rep = check_admissible(X, bad);
  CHECK_FALSE(rep.ok);
  REQUIRE(rep.violations.size() == 1);
  CHECK(rep.violations[0] == std::pair<Vertex, Vertex>{0, 1});
  // same color, same sign is fine; different colors always fine
  CHECK(check_admissible(X, Labelling(3, {{1, 3}, {1, 3}})).ok);
  CHECK(check_admissible(X, Labelling(3, {{0, 1}, {1, 2}})).ok);
}

TEST_CASE("the k=2 reading: no edge labelled with opposite signs of one color") {
  // labels +2, -2 on an edge are inadmissible; +2, -3 are fine
  SimplicialComplex X = SimplicialComplex::from_facets({{"a", "b"}});
  CHECK_FALSE(check_admissible(X, Labelling(2, {{0, 2}, {1, 2}})).ok);
  CHECK(check_admissible(X, Labelling(2, {{0, 2}, {1, 3}})).ok);
}

TEST_CASE("equivariance violations are reported") {
  auto [X, action] = join_complex(3, 2);
  std::vector<VertexLabel> constant(static_cast<size_t>(X.vertex_count()), {0, 1});
  auto rep = check_equivariant(X, action, Labelling(3, constant));
  CHECK_FALSE(rep.ok);
  CHECK(rep.violations.size() == static_cast<size_t>(X.vertex_count()));
}

TEST_CASE("pattern of a single vertex") {
  SimplicialComplex X = full_simplex(0);
  Ring z = Ring::integers();
  SimplicialChain x(z, 0);
  x.add({0}, 1);
  for (int a = 0; a < 3; ++a) {
    StandardChain h = pattern_map(X, x, Labelling(3, {{a, 5}}));
    StandardChain expected(3, z, 0);
    expected.add(BarWord(3, {}), GroupRingElement::group(3, z, a));
    CHECK(h == expected);
  }
}

TEST_CASE("pattern of an edge picks up the color-sorting sign") {
  SimplicialComplex X = full_simplex(1);
  Ring z = Ring::integers();
  SimplicialChain x(z, 1);
  x.add({0, 1}, 1);
  int k = 3;
  // v0 has the larger color, so sorting swaps and the sign is -1:
  // -(g (x) e) = -g[g^{k-1}]
  StandardChain h = pattern_map(X, x, Labelling(k, {{0, 2}, {1, 1}}));
  StandardChain expected(k, z, 1);
  expected.add(BarWord(k, {k - 1}), GroupRingElement::group(k, z, 1).scaled(Int(-1)));
  CHECK(h == expected);
}

TEST_CASE("repeated colors with equal signs contribute zero") {
  SimplicialComplex X = full_simplex(1);
  Ring z = Ring::integers();
  SimplicialChain x(z, 1);
  x.add({0, 1}, 1);
  CHECK(pattern_map(X, x, Labelling(3, {{1, 4}, {1, 4}})).is_zero());
}

TEST_CASE("inadmissible support is rejected") {
  SimplicialComplex X = full_simplex(1);
  Ring z = Ring::integers();
  SimplicialChain x(z, 1);
  x.add({0, 1}, 1);
  CHECK_THROWS_AS(pattern_map(X, x, Labelling(3, {{0, 4}, {1, 4}})), precondition_error);
}

TEST_CASE("pattern map is a chain map") {
  std::mt19937_64 gen(51);
  Ring z = Ring::integers();
  for (int t = 0; t < 100; ++t) {
    int k = 2 + static_cast<int>(gen() % 3);
    auto [X, action] = alt_subcomplex(k, 3, 1);
    (void)action;
    Labelling l = random_labelling(X, k, 5, LabellingMode::admissible, 1000 + t);
    SimplicialChain x(z, X.dimension());
    for (const Simplex& f : X.facets()) x.add(f, Int(static_cast<long long>(gen() % 7) - 3));
    CHECK(pattern_map(X, chain_boundary(x), l) == standard_boundary(pattern_map(X, x, l)));
  }
}

TEST_CASE("pattern map is equivariant for equivariant labellings") {
  std::mt19937_64 gen(52);
  Ring z = Ring::integers();
  for (int t = 0; t < 50; ++t) {
    int k = 2 + static_cast<int>(gen() % 3);
    auto [X, action] = join_complex(k, 3);
    Labelling l = random_labelling(X, k, 6, LabellingMode::equivariant_admissible, 2000 + t,
                                   &action);
    SimplicialChain x(z, X.dimension());
    for (const Simplex& f : X.facets()) x.add(f, Int(static_cast<long long>(gen() % 7) - 3));
    GroupRingElement g = GroupRingElement::group(k, z, 1);
    CHECK(pattern_map(X, action.apply(x, 1), l) == pattern_map(X, x, l).scaled(g));
  }
}

TEST_CASE("pattern map factors through the label space") {
  std::mt19937_64 gen(53);
  Ring z = Ring::integers();
  for (int t = 0; t < 50; ++t) {
    int k = 2 + static_cast<int>(gen() % 3);
    SimplicialComplex X = full_simplex(2 + (t % 2));
    Labelling l = random_labelling(X, k, 5, LabellingMode::admissible, 3000 + t);
    SimplicialChain x(z, X.dimension());
    x.add(X.facets()[0], Int(static_cast<long long>(gen() % 7) - 3));
    CHECK(pattern_map(X, x, l) == via_label_space(X, x, l));
  }
}

TEST_CASE("random labellings are deterministic and admissible") {
  auto [X, action] = join_complex(3, 3);
  Labelling a = random_labelling(X, 3, 5, LabellingMode::admissible, 99);
  Labelling b = random_labelling(X, 3, 5, LabellingMode::admissible, 99);
  for (Vertex v = 0; v < X.vertex_count(); ++v) {
    CHECK(a.at(v).sign == b.at(v).sign);
    CHECK(a.at(v).color == b.at(v).color);
  }
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    CHECK(check_admissible(X, random_labelling(X, 3, 5, LabellingMode::admissible, seed)).ok);
    Labelling eq =
        random_labelling(X, 3, 6, LabellingMode::equivariant_admissible, seed, &action);
    CHECK(check_admissible(X, eq).ok);
    CHECK(check_equivariant(X, action, eq).ok);
  }
}

TEST_CASE("infeasible generation fails cleanly") {
  auto [X, action] = join_complex(2, 2);
  // one color on the 4-cycle cannot be made equivariant admissible
  CHECK_THROWS_AS(
      random_labelling(X, 2, 1, LabellingMode::equivariant_admissible, 1, &action, 60),
      generation_error);
  // equivariant mode refuses to run without an action
  CHECK_THROWS_AS(random_labelling(X, 2, 3, LabellingMode::equivariant_admissible, 1),
                  precondition_error);
}

TEST_CASE("labelling validation") {
  CHECK_THROWS_AS(Labelling(3, {{3, 1}}), domain_error);   // sign out of range
  CHECK_THROWS_AS(Labelling(3, {{0, 0}}), domain_error);   // color must be positive
  SimplicialComplex X = full_simplex(1);
  Labelling l(3, {{0, 1}});
  CHECK_THROWS_AS(check_admissible(X, l), precondition_error);  // misses a vertex
}

}  // TEST_SUITE
