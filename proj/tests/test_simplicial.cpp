#include <doctest.h>

#include <random>
#include <set>

#include "zks/homalg.hpp"
#include "zks/simplicial.hpp"

using namespace zks;

namespace {

SimplicialChain random_facet_chain(std::mt19937_64& gen, const SimplicialComplex& X,
                                   const Ring& ring) {
  SimplicialChain x(ring, X.dimension());
  for (const Simplex& f : X.facets()) {
    x.add(f, Int(static_cast<long long>(gen() % 7) - 3));
  }
  return x;
}

long long binom(int n, int j) {
  if (j < 0 || j > n) return 0;
  long long r = 1;
  for (int i = 0; i < j; ++i) r = r * (n - i) / (i + 1);
  return r;
}

}  // namespace

TEST_SUITE("simplicial") {

TEST_CASE("complex construction and normalization") {
  SimplicialComplex tri = SimplicialComplex::from_facets({{"1", "2"}, {"2", "3"}, {"1", "3"}});
  CHECK(tri.vertex_count() == 3);
  CHECK(tri.faces(1).size() == 3);
  CHECK(tri.dimension() == 1);

  SimplicialComplex full = SimplicialComplex::from_facets({{"1", "2", "3"}});
  CHECK(full.faces(0).size() == 3);
  CHECK(full.faces(1).size() == 3);
  CHECK(full.faces(2).size() == 1);

  SimplicialComplex norm = SimplicialComplex::from_facets({{"1", "2"}, {"1", "2", "3"}});
  CHECK(norm.facets().size() == 1);
  CHECK(norm.facets()[0].size() == 3);

  CHECK_THROWS_AS(SimplicialComplex::from_facets({{"1", "1", "2"}}), format_error);
  CHECK_THROWS_AS(SimplicialComplex::from_facets({}), format_error);
  CHECK_THROWS_AS(tri.vertex_index("zz"), format_error);
}

TEST_CASE("chain boundary") {
  Ring z = Ring::integers();
  SimplicialComplex full = SimplicialComplex::from_facets({{"1", "2", "3"}});
  SimplicialChain x(z, 2);
  x.add({0, 1, 2}, 1);
  SimplicialChain b = chain_boundary(x);
  CHECK(b.coeff({1, 2}) == 1);
  CHECK(b.coeff({0, 2}) == -1);
  CHECK(b.coeff({0, 1}) == 1);
  SimplicialChain vertex_chain(z, 0);
  vertex_chain.add({0}, 1);
  CHECK_THROWS_AS(chain_boundary(vertex_chain), dimension_error);

  std::mt19937_64 gen(31);
  for (int t = 0; t < 200; ++t) {
    auto [X, action] = join_complex(2 + (t % 2), 3);
    (void)action;
    SimplicialChain c = random_facet_chain(gen, X, z);
    CHECK(chain_boundary(chain_boundary(c)).is_zero());
  }
}

TEST_CASE("join complexes") {
  auto [sq, asq] = join_complex(2, 2);
  CHECK(sq.vertex_count() == 4);
  CHECK(sq.facets().size() == 4);
  CHECK(sq.dimension() == 1);
  (void)asq;

  auto [k33, a33] = join_complex(3, 2);
  CHECK(k33.vertex_count() == 6);
  CHECK(k33.faces(1).size() == 9);
  (void)a33;

  for (int k = 2; k <= 4; ++k) {
    for (int m = 1; m <= 3; ++m) {
      auto [X, action] = join_complex(k, m);
      long long expect = 1;
      for (int i = 0; i < m; ++i) expect *= k;
      CHECK(static_cast<long long>(X.facets().size()) == expect);
      CHECK(action.check_free(X).free);
    }
  }

  // vertex order is lexicographic in (copy, sign)
  auto [X, action] = join_complex(3, 2);
  (void)action;
  CHECK(X.vertex_ids()[0] == "s0c1");
  CHECK(X.vertex_ids()[2] == "s2c1");
  CHECK(X.vertex_ids()[3] == "s0c2");

  CHECK_THROWS_AS(join_complex(2, 30), size_error);
}

TEST_CASE("jump-bounded subcomplexes") {
  // m = d+1 gives back the full join
  for (int k = 2; k <= 3; ++k) {
    for (int d = 0; d <= 2; ++d) {
      auto [alt, aa] = alt_subcomplex(k, d + 1, d);
      auto [join, aj] = join_complex(k, d + 1);
      (void)aa;
      (void)aj;
      CHECK(alt.facets() == join.facets());
    }
  }
  CHECK(alt_subcomplex(2, 3, 1).complex.facets().size() == 6);
  CHECK(alt_subcomplex(3, 3, 0).complex.facets().size() == 3);
  CHECK_THROWS_AS(alt_subcomplex(3, 2, 2), domain_error);

  // facet count matches the closed formula
  for (int k = 2; k <= 4; ++k) {
    for (int m = 1; m <= 5; ++m) {
      for (int d = 0; d < m; ++d) {
        long long expect = 0;
        for (int j = 0; j <= d; ++j) {
          long long p = 1;
          for (int i = 0; i < j; ++i) p *= (k - 1);
          expect += binom(m - 1, j) * k * p;
        }
        auto [X, action] = alt_subcomplex(k, m, d);
        CHECK(static_cast<long long>(X.facets().size()) == expect);
        CHECK(action.check_free(X).free);
      }
    }
  }
}

TEST_CASE("action application") {
  auto [X, a] = join_complex(3, 2);
  Ring z = Ring::integers();
  std::mt19937_64 gen(32);
  for (int t = 0; t < 100; ++t) {
    SimplicialChain x = random_facet_chain(gen, X, z);
    CHECK(a.apply(x, 0) == x);
    SimplicialChain y = x;
    for (int j = 0; j < a.k(); ++j) y = a.apply(y, 1);
    CHECK(y == x);
    CHECK(chain_boundary(a.apply(x, 1)) == a.apply(chain_boundary(x), 1));
  }
}

TEST_CASE("freeness check rejects a fixed simplex") {
  SimplicialComplex X = SimplicialComplex::from_facets({{"a", "b"}});
  GroupAction swap_action(X, 2, {1, 0});
  auto report = swap_action.check_free(X);
  CHECK_FALSE(report.free);
  CHECK(report.fixed_simplex == Simplex{0, 1});
  CHECK(report.fixed_power == 1);
  CHECK_THROWS_AS(swap_action.require_free(X), precondition_error);
}

TEST_CASE("action validation") {
  SimplicialComplex X = SimplicialComplex::from_facets({{"a", "b"}, {"b", "c"}});
  // not a permutation
  CHECK_THROWS_AS(GroupAction(X, 2, {0, 0, 1}), format_error);
  // identity has order 1, not 2
  CHECK_THROWS_AS(GroupAction(X, 2, {0, 1, 2}), format_error);
  // maps facet {b,c} to the non-simplex {a,c}
  CHECK_THROWS_AS(GroupAction(X, 2, {1, 0, 2}), format_error);
}

TEST_CASE("join of chains") {
  auto [X, action] = join_complex(3, 2);
  (void)action;
  Ring z = Ring::integers();
  Vertex v = X.vertex_index("s1c1");
  Vertex w = X.vertex_index("s0c2");
  SimplicialChain xv(z, 0), xw(z, 0);
  xv.add({v}, 1);
  xw.add({w}, 1);
  SimplicialChain j = join_chains(X, xv, xw);
  CHECK(j.degree() == 1);
  CHECK(j.coeff({v, w}) == 1);
  // reversed order picks up the merge sign
  CHECK(join_chains(X, xw, xv).coeff({v, w}) == -1);
  CHECK_THROWS_AS(join_chains(X, xv, xv), domain_error);
}

TEST_CASE("join of chains satisfies the Leibniz rule") {
  std::mt19937_64 gen(33);
  Ring z = Ring::integers();
  for (int t = 0; t < 200; ++t) {
    int k = 2 + static_cast<int>(gen() % 3);
    auto [X, action] = join_complex(k, 4);
    (void)action;
    auto random_edges = [&](int ca, int cb) {
      SimplicialChain x(z, 1);
      for (int i = 0; i < 3; ++i) {
        Vertex a = X.vertex_index(join_vertex_id(static_cast<int>(gen() % static_cast<unsigned>(k)), ca));
        Vertex b = X.vertex_index(join_vertex_id(static_cast<int>(gen() % static_cast<unsigned>(k)), cb));
        x.add({std::min(a, b), std::max(a, b)}, Int(static_cast<long long>(gen() % 5) - 2));
      }
      return x;
    };
    SimplicialChain x = random_edges(1, 2);
    SimplicialChain y = random_edges(3, 4);
    // d(x |><| y) = dx |><| y + (-1)^{deg x + 1} x |><| dy
    SimplicialChain lhs = chain_boundary(join_chains(X, x, y));
    SimplicialChain rhs =
        join_chains(X, chain_boundary(x), y) + join_chains(X, x, chain_boundary(y));
    CHECK(lhs == rhs);
  }
}

TEST_CASE("pseudomanifold analysis") {
  // boundary of the 3-simplex: closed orientable surface
  {
    std::vector<std::vector<std::string>> facets;
    std::vector<std::string> v{"1", "2", "3", "4"};
    for (int skip = 0; skip < 4; ++skip) {
      std::vector<std::string> f;
      for (int i = 0; i < 4; ++i) {
        if (i != skip) f.push_back(v[static_cast<size_t>(i)]);
      }
      facets.push_back(f);
    }
    auto rep = pseudomanifold_analysis(SimplicialComplex::from_facets(facets));
    CHECK(rep.is_pseudomanifold);
    CHECK(rep.closed);
    CHECK(rep.orientable);
    REQUIRE(rep.orientation_chain.has_value());
    CHECK(chain_boundary(*rep.orientation_chain).is_zero());
  }
  // a single 2-simplex: boundary is its edge cycle
  {
    auto rep = pseudomanifold_analysis(SimplicialComplex::from_facets({{"1", "2", "3"}}));
    CHECK(rep.is_pseudomanifold);
    CHECK_FALSE(rep.closed);
    CHECK(rep.orientable);
    REQUIRE(rep.boundary_complex.has_value());
    CHECK(rep.boundary_complex->facets().size() == 3);
    REQUIRE(rep.orientation_chain.has_value());
    // the boundary of the orientation chain is supported on boundary ridges
    SimplicialChain b = chain_boundary(*rep.orientation_chain);
    CHECK(b.terms().size() == 3);
  }
  // octahedron: closed orientable
  {
    auto [X, action] = join_complex(2, 3);
    (void)action;
    auto rep = pseudomanifold_analysis(X);
    CHECK(rep.is_pseudomanifold);
    CHECK(rep.closed);
    CHECK(rep.orientable);
    CHECK(chain_boundary(*rep.orientation_chain).is_zero());
  }
  // three triangles around one edge: not a pseudomanifold
  {
    auto rep = pseudomanifold_analysis(
        SimplicialComplex::from_facets({{"1", "2", "3"}, {"1", "2", "4"}, {"1", "2", "5"}}));
    CHECK(rep.pure);
    CHECK_FALSE(rep.is_pseudomanifold);
  }
  // five-triangle band with a twist: pseudomanifold, not orientable
  {
    std::vector<std::vector<std::string>> facets;
    std::vector<std::string> v{"1", "2", "3", "4", "5"};
    for (int i = 0; i < 5; ++i) {
      facets.push_back({v[static_cast<size_t>(i)], v[static_cast<size_t>((i + 1) % 5)],
                        v[static_cast<size_t>((i + 2) % 5)]});
    }
    auto rep = pseudomanifold_analysis(SimplicialComplex::from_facets(facets));
    CHECK(rep.is_pseudomanifold);
    CHECK_FALSE(rep.closed);
    CHECK_FALSE(rep.orientable);
  }
}

TEST_CASE("barycentric subdivision of an edge") {
  SimplicialComplex X = SimplicialComplex::from_facets({{"a", "b"}});
  Subdivision sd = barycentric_subdivision(X);
  CHECK(sd.complex().vertex_count() == 3);
  CHECK(sd.complex().facets().size() == 2);
  Ring z = Ring::integers();
  SimplicialChain e(z, 1);
  e.add({0, 1}, 1);
  SimplicialChain image = sd.map_chain(e);
  Vertex a = sd.complex().vertex_index("[a]");
  Vertex b = sd.complex().vertex_index("[b]");
  Vertex ab = sd.complex().vertex_index("[a,b]");
  SimplicialChain expected(z, 1);
  expected.add({std::min(a, ab), std::max(a, ab)}, a < ab ? 1 : -1);
  // the half-edge through b enters with the opposite sign
  expected.add({std::min(b, ab), std::max(b, ab)}, b < ab ? -1 : 1);
  CHECK(image == expected);
}

TEST_CASE("subdivision chain map commutes with the boundary") {
  SimplicialComplex X = SimplicialComplex::from_facets({{"1", "2", "3"}});
  Subdivision sd = barycentric_subdivision(X);
  Ring z = Ring::integers();
  std::mt19937_64 gen(34);
  for (int t = 0; t < 50; ++t) {
    SimplicialChain x(z, 2);
    x.add({0, 1, 2}, Int(static_cast<long long>(gen() % 9) - 4));
    CHECK(chain_boundary(sd.map_chain(x)) == sd.map_chain(chain_boundary(x)));
  }
}

TEST_CASE("subdivision commutes with the action") {
  auto [X, action] = join_complex(3, 2);
  Subdivision sd = barycentric_subdivision(X, &action);
  REQUIRE(sd.action().has_value());
  CHECK(sd.action()->check_free(sd.complex()).free);
  Ring z = Ring::integers();
  std::mt19937_64 gen(35);
  for (int t = 0; t < 50; ++t) {
    SimplicialChain x = random_facet_chain(gen, X, z);
    CHECK(sd.map_chain(action.apply(x, 1)) == sd.action()->apply(sd.map_chain(x), 1));
  }
}

TEST_CASE("subdivision preserves reduced homology") {
  for (auto [k, m] : {std::pair{2, 3}, std::pair{3, 2}}) {
    auto [X, action] = join_complex(k, m);
    (void)action;
    Subdivision sd = barycentric_subdivision(X);
    Ring z = Ring::integers();
    CHECK(reduced_homology(X, z) == reduced_homology(sd.complex(), z));
  }
}

TEST_CASE("joined polygon spheres") {
  KGonSphere tri = k_gon_join_sphere(3, 0);
  CHECK(tri.complex.vertex_count() == 3);
  CHECK(tri.complex.facets().size() == 3);
  CHECK(tri.complex.dimension() == 1);

  KGonSphere s3 = k_gon_join_sphere(3, 1);
  CHECK(s3.complex.facets().size() == 9);
  CHECK(s3.complex.dimension() == 3);

  for (auto [k, m] : {std::pair{3, 1}, std::pair{4, 2}}) {
    KGonSphere kg = k_gon_join_sphere(k, m);
    CHECK(kg.action.check_free(kg.complex).free);
    for (int i = 0; i <= m; ++i) {
      SimplicialChain u(Ring::integers(), 0);
      u.add({kg.u[static_cast<size_t>(i)]}, 1);
      CHECK(chain_boundary(kg.w[static_cast<size_t>(i)]) == tau_times(kg.action, u));
    }
  }
  CHECK_THROWS_AS(k_gon_join_sphere(2, 1), domain_error);
}

TEST_CASE("chains must be supported on the complex") {
  auto [X, action] = join_complex(2, 2);
  (void)action;
  Ring z = Ring::integers();
  SimplicialChain bad(z, 1);
  bad.add({0, 1}, 1);  // s0c1-s1c1 is not an edge of the join
  CHECK_THROWS_AS(require_supported(X, bad), domain_error);
}

}  // TEST_SUITE
