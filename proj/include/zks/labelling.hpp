#pragma once

#include <cstdint>
#include <vector>

#include "zks/resolutions.hpp"
#include "zks/ring.hpp"
#include "zks/simplicial.hpp"

namespace zks {

struct VertexLabel {
  int sign = 0;        // exponent in [0, k)
  long long color = 1; // positive integer

  bool operator==(const VertexLabel& o) const { return sign == o.sign && color == o.color; }
};

// Total vertex labelling into Z_k x N.
class Labelling {
 public:
  Labelling(int k, std::vector<VertexLabel> labels);

  // The labelling of a join-type complex that reads (sign, copy) off the
  // vertex ids.
  static Labelling tautological(const SimplicialComplex& X, int k);

  int k() const { return k_; }
  const VertexLabel& at(Vertex v) const;
  int size() const { return static_cast<int>(labels_.size()); }
  const std::vector<VertexLabel>& labels() const { return labels_; }

  // Same colors, all signs shifted by g^j.
  Labelling shifted(int j) const;

 private:
  int k_;
  std::vector<VertexLabel> labels_;
};

struct AdmissibilityReport {
  bool ok = true;
  std::vector<std::pair<Vertex, Vertex>> violations;  // edges with equal color, different sign
};

// An edge is admissible when its endpoints have different colors or the same
// sign.
AdmissibilityReport check_admissible(const SimplicialComplex& X, const Labelling& l);

struct EquivarianceReport {
  bool ok = true;
  std::vector<Vertex> violations;  // vertices v with l(g v) != g l(v)
};

EquivarianceReport check_equivariant(const SimplicialComplex& X, const GroupAction& a,
                                     const Labelling& l);

// The pattern chain map: a simplex with pairwise distinct colors goes to the
// color-sorted tensor of its signs weighted by the sorting sign; simplices
// with a repeated color go to zero. Requires the labelling to be admissible
// on the support of x.
StandardChain pattern_map(const SimplicialComplex& X, const SimplicialChain& x,
                          const Labelling& l);

enum class LabellingMode { admissible, equivariant_admissible };

// Deterministic seeded generator: greedy assignment with bounded repair of
// violating edges. Equivariant mode assigns orbit representatives and
// propagates along the action.
Labelling random_labelling(const SimplicialComplex& X, int k, int color_count,
                           LabellingMode mode, std::uint64_t seed,
                           const GroupAction* action = nullptr, int max_rounds = 500);

}  // namespace zks
