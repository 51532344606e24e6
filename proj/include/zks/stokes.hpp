#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "zks/homalg.hpp"
#include "zks/labelling.hpp"
#include "zks/resolutions.hpp"
#include "zks/ring.hpp"
#include "zks/simplicial.hpp"

namespace zks {

// Chain sequence (x_0, ..., x_r) with d x_i = sigma x_{i-1} for even i and
// d x_i = tau x_{i-1} for odd i, on a complex with a free action.
struct GeneralizedSphere {
  SimplicialComplex complex;
  GroupAction action;
  Ring ring;
  std::vector<SimplicialChain> chains;  // chains[i] has degree i

  int top_degree() const { return static_cast<int>(chains.size()) - 1; }
};

struct SphereCheck {
  bool ok = true;
  int first_failure_degree = -1;
};

SphereCheck verify_sphere(const GeneralizedSphere& gs);

// The explicit sphere chains in the (d+1)-fold join of k points: x_0 a base
// vertex, x_1 an edge pair, and higher chains built by joining full-orbit
// edge cycles. Copies are numbered 1..d+1.
GeneralizedSphere standard_join_sphere(int k, int d, const Ring& ring);

// Both evaluations of the boundary counting identity: the pattern-counting
// sides read strongly alternating patterns off the pattern chains of x and
// of its boundary, the algebraic sides evaluate the minimal-resolution image
// at the neutral element. All four must agree.
struct StokesReport {
  int degree = 0;
  Ring ring = Ring::integers();
  Int lhs_count, rhs_count, lhs_alg, rhs_alg;
  bool equal = false;
};

StokesReport stokes_report(const SimplicialComplex& X, const SimplicialChain& x,
                           const Labelling& l);

// alpha_i = u(sigma * (f o h^l)(x_i)); for a valid sphere and equivariant
// admissible labelling, all alpha_i lie in one congruence class mod k and
// alpha_0 is the coefficient sum of x_0.
struct AlphaSequence {
  int k = 2;
  Ring ring = Ring::integers();
  std::vector<Int> values;
  Int alpha0_direct;        // coefficient sum of x_0
  bool alpha0_matches = false;
  bool congruent = false;   // every alpha_i congruent to alpha_0 mod k
};

AlphaSequence tucker_invariants(const GeneralizedSphere& gs, const Labelling& l);

// u(sigma * (f o h^l)(x)) for a single chain.
Int alpha_value(const SimplicialComplex& X, const SimplicialChain& x, const Labelling& l);

// Pattern of a simplex under a labelling: the color-sorted tensor of signs,
// or nullopt when a color repeats.
std::optional<TensorElement> simplex_pattern(const SimplicialComplex& X, const Simplex& s,
                                             const Labelling& l);

// Builds the sphere of degree d+1 in the (d+2)-fold join, pushes it through
// `rounds` equivariant barycentric subdivisions, and evaluates alpha_{d+1}
// for one random equivariant admissible labelling per seed. Every count must
// be congruent to 1 mod k.
struct TuckerCountReport {
  int k = 2, d = 0, rounds = 0;
  Ring ring = Ring::integers();
  std::vector<Int> counts;  // alpha_{d+1} per seed
  bool all_congruent_one = false;
};

TuckerCountReport subdivided_tucker_counts(int k, int d, int rounds,
                                           const std::vector<std::uint64_t>& seeds,
                                           const Ring& ring, int color_count = 0);

// Recursive construction of a generalized r-sphere by solving the boundary
// systems over the ring; an unsolvable degree yields the obstructing cycle.
struct SphereBuildResult {
  std::optional<GeneralizedSphere> sphere;
  struct Obstruction {
    int degree;
    SimplicialChain cycle;
  };
  std::optional<Obstruction> obstruction;

  bool ok() const { return sphere.has_value(); }
};

SphereBuildResult sphere_from_homology(const SimplicialComplex& X, const GroupAction& a, int r,
                                       const Ring& ring);

// Searches for an (r+1)-simplex labelled with r+2 distinct colors and a
// strongly alternating pattern, scanning the support of x_{r+1} first. When
// no witness exists the report carries the alpha data showing that some
// hypothesis must have failed.
struct WitnessReport {
  bool found = false;
  Simplex witness;
  std::optional<TensorElement> pattern;
  bool hypothesis_failure = false;
  std::string note;
  std::vector<Int> alphas;
};

WitnessReport alternating_simplex_witness(const SimplicialComplex& X, const GroupAction& a,
                                          const Labelling& l, int r, const Ring& ring,
                                          const GeneralizedSphere* sphere = nullptr);

// Equivariant admissible labelling of a free complex: color = orbit index,
// sign = position in the orbit. May be inadmissible when an orbit spans an
// edge; the caller must check the report.
Labelling orbit_labelling(const SimplicialComplex& X, const GroupAction& a);

enum class RefutationStage {
  not_simplicial,
  not_equivariant,
  hypotheses_unmet,
  labelling_unavailable,
  refuted,
  inconsistent,
};

std::string refutation_stage_name(RefutationStage stage);

struct RefutationReport {
  RefutationStage stage = RefutationStage::refuted;
  std::string note;
  std::vector<Int> alphas;  // certificate of the contradiction branch

  // The candidate map is rejected: it is not an equivariant simplicial map,
  // or it is and the counting contradiction rules it out.
  bool rejected() const {
    return stage == RefutationStage::not_simplicial ||
           stage == RefutationStage::not_equivariant || stage == RefutationStage::refuted;
  }
};

// phi maps vertex indices of X to vertex indices of Y.
RefutationReport refute_equivariant_map(const SimplicialComplex& X, const GroupAction& ax,
                                        const SimplicialComplex& Y, const GroupAction& ay,
                                        const std::vector<Vertex>& phi,
                                        const Ring& ring = Ring::integers());

// All candidate equivariant vertex maps X -> Y: one image per X-orbit
// representative, propagated along the actions.
std::vector<std::vector<Vertex>> enumerate_equivariant_vertex_maps(const SimplicialComplex& X,
                                                                   const GroupAction& ax,
                                                                   const SimplicialComplex& Y,
                                                                   const GroupAction& ay);

// alpha = u(sigma * (f o h^l)(x)) per labelling; for a chain with
// d(tau x) = 0 (even degree) or d(sigma x) = 0 (odd degree) the congruence
// class mod k does not depend on the labelling.
struct InvarianceReport {
  int k = 2;
  Ring ring = Ring::integers();
  std::vector<Int> alphas;
  bool single_class = false;
};

InvarianceReport alpha_invariance(const SimplicialComplex& X, const GroupAction& a,
                                  const SimplicialChain& x, const std::vector<Labelling>& ls);

}  // namespace zks
