#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>
#include <vector>

#include "zks/errors.hpp"

namespace zks {

// Exact arbitrary-precision integer. All arithmetic in the library is exact;
// no floating point anywhere.
using Int = boost::multiprecision::cpp_int;

// Coefficient ring: Z, or Z/m with m >= 2. Modular scalars are kept as
// canonical representatives in [0, m).
class Ring {
 public:
  static Ring integers() { return Ring(false, 0); }
  static Ring integers_mod(Int m);

  bool modular() const { return modular_; }
  const Int& modulus() const;

  Int reduce(Int v) const;
  Int add(const Int& a, const Int& b) const { return reduce(a + b); }
  Int sub(const Int& a, const Int& b) const { return reduce(a - b); }
  Int mul(const Int& a, const Int& b) const { return reduce(a * b); }
  Int neg(const Int& a) const { return reduce(-a); }
  bool is_zero(const Int& a) const { return reduce(a) == 0; }

  // kR != R: always over Z; over Z/m exactly when gcd(k, m) > 1. This is the
  // standing hypothesis of the Tucker/Dold statements.
  bool k_nontrivial(int k) const;

  std::string name() const;  // "Z" or "Z/<m>"

  // Accepts "Z", "Z/<m>" and the CLI spelling "Zmod:<m>".
  static Ring parse(const std::string& text);

  bool operator==(const Ring& o) const {
    return modular_ == o.modular_ && (!modular_ || modulus_ == o.modulus_);
  }
  bool operator!=(const Ring& o) const { return !(*this == o); }

 private:
  Ring(bool modular, Int m) : modular_(modular), modulus_(std::move(m)) {}
  bool modular_;
  Int modulus_;
};

// a == b modulo the subgroup kR of R. Over Z this is the usual congruence
// mod k; over Z/m the subgroup kR consists of the multiples of gcd(k, m).
bool congruent_mod(const Int& a, const Int& b, int k, const Ring& ring);

// Bases of the group ring as a free R-module used by the library.
//   T     = { e, tau_1, ..., tau_{k-1} },   coords (c_e, c_{tau_1}, ...)
//   Sigma = { sigma_1, ..., sigma_k },      coords (c_{sigma_1}, ...)
enum class Basis { T, Sigma };

// Element of the group ring R[Z_k], stored as the coefficient vector of
// e, g, g^2, ..., g^{k-1}. Elements are immutable values; all operations
// require matching k and ring.
class GroupRingElement {
 public:
  GroupRingElement(int k, Ring ring);  // zero element

  static GroupRingElement zero(int k, const Ring& ring) { return {k, ring}; }
  static GroupRingElement group(int k, const Ring& ring, int a);  // g^a
  static GroupRingElement identity(int k, const Ring& ring) { return group(k, ring, 0); }
  static GroupRingElement scalar(int k, const Ring& ring, const Int& c);  // c*e
  // sigma_r = e + g + ... + g^{r-1} and tau_r = g^r - e, for 0 <= r <= k.
  static GroupRingElement sigma_r(int k, const Ring& ring, int r);
  static GroupRingElement tau_r(int k, const Ring& ring, int r);
  static GroupRingElement sigma(int k, const Ring& ring) { return sigma_r(k, ring, k); }
  static GroupRingElement tau(int k, const Ring& ring) { return tau_r(k, ring, 1); }
  static GroupRingElement from_coeffs(int k, const Ring& ring, std::vector<Int> coeffs);

  int k() const { return k_; }
  const Ring& ring() const { return ring_; }
  const std::vector<Int>& coeffs() const { return coeffs_; }

  bool is_zero() const;

  GroupRingElement operator+(const GroupRingElement& o) const;
  GroupRingElement operator-(const GroupRingElement& o) const;
  GroupRingElement operator*(const GroupRingElement& o) const;  // cyclic convolution
  GroupRingElement operator-() const;
  GroupRingElement scaled(const Int& c) const;
  GroupRingElement shifted(int a) const;  // g^a * this

  bool operator==(const GroupRingElement& o) const;
  bool operator!=(const GroupRingElement& o) const { return !(*this == o); }

  // Coefficient of g^j; evaluate(0) is the evaluation map u.
  Int evaluate(int j) const;
  // Sum of all coefficients. Ring homomorphism to R.
  Int augment() const;

  std::vector<Int> coords(Basis basis) const;
  static GroupRingElement from_coords(int k, const Ring& ring, Basis basis,
                                      const std::vector<Int>& coords);

  std::string str() const;

 private:
  void require_compatible(const GroupRingElement& o) const;
  int k_;
  Ring ring_;
  std::vector<Int> coeffs_;
};

}  // namespace zks
