#pragma once

#include <optional>
#include <vector>

#include "zks/ring.hpp"
#include "zks/simplicial.hpp"

namespace zks {

// Dense matrix of arbitrary-precision integers.
class IntegerMatrix {
 public:
  IntegerMatrix() : rows_(0), cols_(0) {}
  IntegerMatrix(long rows, long cols);
  static IntegerMatrix identity(long n);

  long rows() const { return rows_; }
  long cols() const { return cols_; }
  Int& at(long i, long j);
  const Int& at(long i, long j) const;

  IntegerMatrix operator*(const IntegerMatrix& o) const;
  bool operator==(const IntegerMatrix& o) const;
  bool operator!=(const IntegerMatrix& o) const { return !(*this == o); }
  bool is_zero() const;

  std::vector<Int> apply(const std::vector<Int>& v) const;  // matrix * vector

 private:
  long rows_, cols_;
  std::vector<Int> data_;
};

// U * A * V = S with U, V unimodular and S diagonal, every diagonal entry
// nonnegative and dividing the next.
struct SmithDecomposition {
  IntegerMatrix u, s, v;
  std::vector<Int> diagonal() const;
  long rank() const;  // number of nonzero diagonal entries
};

// Deterministic Smith normal form; pivots are chosen with minimal absolute
// value to limit coefficient growth.
SmithDecomposition smith_normal_form(IntegerMatrix a);

// Exact determinant (fraction-free elimination); square matrices only.
Int determinant(IntegerMatrix a);

// One solution of A x = b over the ring, or nullopt when the system is
// unsolvable. Over Z this goes through the Smith form; over Z/m the diagonal
// system is solved per entry by modular inversion. Every returned solution
// is re-verified exactly.
std::optional<std::vector<Int>> solve_linear(const IntegerMatrix& a, const std::vector<Int>& b,
                                             const Ring& ring);

struct HomologyGroup {
  long long rank = 0;
  std::vector<Int> torsion;  // invariant factors > 1, each dividing the next

  bool trivial() const { return rank == 0 && torsion.empty(); }
  bool operator==(const HomologyGroup& o) const {
    return rank == o.rank && torsion == o.torsion;
  }
  bool operator!=(const HomologyGroup& o) const { return !(*this == o); }
};

// Boundary matrix C_degree -> C_{degree-1} in the face enumeration order;
// degree 0 gives the augmentation row (all ones).
IntegerMatrix boundary_matrix(const SimplicialComplex& X, int degree);

std::vector<Int> chain_to_vector(const SimplicialComplex& X, const SimplicialChain& x);
SimplicialChain vector_to_chain(const SimplicialComplex& X, int degree, const Ring& ring,
                                const std::vector<Int>& v);

// Reduced homology per degree 0..dim. Over Z: rank and invariant factors.
// Over Z/p (p prime): ranks only. Other modular rings are rejected.
std::vector<HomologyGroup> reduced_homology(const SimplicialComplex& X, const Ring& ring);

struct RetractReport {
  bool match = false;
  std::vector<HomologyGroup> alt_side;   // (Z_k)^{*m}_{alt<=d}
  std::vector<HomologyGroup> join_side;  // (Z_k)^{*(d+1)}
};

// Checks that the alt<=d subcomplex of the m-fold join has the reduced
// homology of the (d+1)-fold join in every degree.
RetractReport homology_retract_check(int k, int m, int d, long long facet_cap = 200000);

}  // namespace zks
