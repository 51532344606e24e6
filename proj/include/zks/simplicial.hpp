#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "zks/ring.hpp"

namespace zks {

// Vertices are indices into the complex's ordered id table; simplices are
// strictly increasing index lists. The vertex order is part of the data: it
// fixes orientations and, on join complexes, matches the (copy, sign)
// lexicographic order that the pattern map relies on.
using Vertex = int;
using Simplex = std::vector<Vertex>;

class SimplicialComplex {
 public:
  // Empty complex; only the factories below produce usable ones.
  SimplicialComplex() = default;

  // Facets given by vertex id; the vertex order is the sorted id order.
  static SimplicialComplex from_facets(const std::vector<std::vector<std::string>>& facets);
  // Facets given by index into an explicitly ordered id table.
  static SimplicialComplex from_indexed(std::vector<std::string> vertex_ids,
                                        std::vector<Simplex> facets);

  const std::vector<std::string>& vertex_ids() const { return vertex_ids_; }
  int vertex_count() const { return static_cast<int>(vertex_ids_.size()); }
  const std::string& vertex_id(Vertex v) const;
  Vertex vertex_index(const std::string& id) const;

  int dimension() const { return dimension_; }
  bool pure() const { return pure_; }
  const std::vector<Simplex>& facets() const { return facets_; }
  // All faces of the given dimension, in lexicographic order.
  const std::vector<Simplex>& faces(int dim) const;
  long long face_count() const;
  bool contains(const Simplex& s) const;

  std::string simplex_str(const Simplex& s) const;

 private:
  void build_faces();

  std::vector<std::string> vertex_ids_;
  std::map<std::string, Vertex> index_;
  std::vector<Simplex> facets_;
  std::vector<std::vector<Simplex>> faces_by_dim_;
  int dimension_ = -1;
  bool pure_ = true;
};

// Sparse simplicial chain over a coefficient ring. Simplices are stored
// sorted; orientation signs live entirely in the coefficients.
class SimplicialChain {
 public:
  SimplicialChain(Ring ring, int degree);

  const Ring& ring() const { return ring_; }
  int degree() const { return degree_; }
  const std::map<Simplex, Int>& terms() const { return terms_; }

  void add(const Simplex& s, const Int& coeff);
  Int coeff(const Simplex& s) const;
  bool is_zero() const { return terms_.empty(); }

  SimplicialChain operator+(const SimplicialChain& o) const;
  SimplicialChain operator-(const SimplicialChain& o) const;
  SimplicialChain operator-() const;
  SimplicialChain scaled(const Int& c) const;

  bool operator==(const SimplicialChain& o) const;
  bool operator!=(const SimplicialChain& o) const { return !(*this == o); }

  // Sum of all coefficients.
  Int coefficient_sum() const;

 private:
  Ring ring_;
  int degree_;
  std::map<Simplex, Int> terms_;
};

// Alternating-sign face sum; degree >= 1.
SimplicialChain chain_boundary(const SimplicialChain& x);

// Throws unless every simplex of the chain is a face of X.
void require_supported(const SimplicialComplex& X, const SimplicialChain& x);

// Simplicial Z_k-action given by the permutation its generator induces on
// vertices. Construction validates that the generator has order exactly k
// and maps facets to facets; freeness is a separate query.
class GroupAction {
 public:
  GroupAction(const SimplicialComplex& X, int k, std::vector<Vertex> generator);

  int k() const { return k_; }
  const std::vector<Vertex>& generator() const { return generator_; }
  Vertex apply_vertex(Vertex v, int power) const;

  // Sorted image simplex together with the sign of the sorting permutation.
  std::pair<Simplex, int> apply_simplex(const Simplex& s, int power) const;
  SimplicialChain apply(const SimplicialChain& x, int power) const;

  struct FreenessReport {
    bool free = true;
    Simplex fixed_simplex;  // a witness when not free
    int fixed_power = 0;
  };
  FreenessReport check_free(const SimplicialComplex& X) const;
  void require_free(const SimplicialComplex& X) const;

  // Vertex orbits, each listed as (v, g v, g^2 v, ...), ordered by smallest
  // member.
  std::vector<std::vector<Vertex>> orbits(const SimplicialComplex& X) const;

 private:
  int k_;
  std::vector<Vertex> generator_;
};

// sigma x = sum_j g^j x   and   tau x = g x - x.
SimplicialChain sigma_times(const GroupAction& a, const SimplicialChain& x);
SimplicialChain tau_times(const GroupAction& a, const SimplicialChain& x);

struct ComplexWithAction {
  SimplicialComplex complex;
  GroupAction action;
};

// Join vertex ids have the form "s<sign>c<copy>"; vertex order on join
// complexes is lexicographic by (copy, sign).
std::string join_vertex_id(int sign, int copy);
std::optional<std::pair<int, int>> parse_join_vertex(const std::string& id);  // (sign, copy)

// The m-fold join of k points: one vertex (sign, copy) per sign in [0,k) and
// copy in [1,m]; facets pick one sign per copy. The generator adds 1 to
// every sign mod k.
ComplexWithAction join_complex(int k, int m, long long facet_cap = 200000);

// Subcomplex of join_complex(k, m) generated by the facets whose sign
// sequence has at most d jumps. Requires m >= d+1.
ComplexWithAction alt_subcomplex(int k, int m, int d, long long facet_cap = 200000);

// Number of adjacent sign changes of a facet's sign sequence.
int count_jumps(const std::vector<int>& signs);

// Join of chains supported on disjoint copy ranges of a common join-type
// complex: concatenate vertex lists, sort, and multiply by the sorting sign.
// deg(x |><| y) = deg x + deg y + 1.
SimplicialChain join_chains(const SimplicialComplex& X, const SimplicialChain& x,
                            const SimplicialChain& y);

struct PseudomanifoldReport {
  bool pure = false;
  bool is_pseudomanifold = false;
  bool closed = false;  // no boundary ridges
  std::optional<SimplicialComplex> boundary_complex;
  bool orientable = false;
  std::optional<SimplicialChain> orientation_chain;  // over Z when orientable
};

// Ridge-incidence analysis plus orientation-chain construction by sign
// propagation across the facet adjacency graph.
PseudomanifoldReport pseudomanifold_analysis(const SimplicialComplex& X);

// Barycentric subdivision: one vertex per nonempty face of X, ordered by
// (dimension, face); facets are the maximal flags. Carries the subdivision
// chain map and the induced action.
class Subdivision {
 public:
  const SimplicialComplex& complex() const { return complex_; }
  const std::optional<GroupAction>& action() const { return action_; }
  const Simplex& vertex_face(Vertex v) const;  // face of X behind a vertex of X'

  // The subdivision chain map C_.(X) -> C_.(X'); commutes with boundaries
  // and with the induced action.
  SimplicialChain map_chain(const SimplicialChain& x) const;

 private:
  friend Subdivision barycentric_subdivision(const SimplicialComplex&, const GroupAction*);
  SimplicialComplex complex_;
  std::optional<GroupAction> action_;
  std::vector<Simplex> vertex_faces_;
  std::map<Simplex, Vertex> face_vertex_;
};

Subdivision barycentric_subdivision(const SimplicialComplex& X,
                                    const GroupAction* action = nullptr);

// Join of m+1 disjoint k-gons (k > 2) with the rotation action; u[i] is the
// pinned base vertex in the (m-i)-th copy and w[i] the oriented edge chain
// from u[i] to g u[i], so that the boundary of w[i] is tau u[i].
struct KGonSphere {
  SimplicialComplex complex;
  GroupAction action;
  std::vector<Vertex> u;               // u[0..m]
  std::vector<SimplicialChain> w;      // w[0..m], degree 1, over Z
};

KGonSphere k_gon_join_sphere(int k, int m, long long facet_cap = 200000);

}  // namespace zks
