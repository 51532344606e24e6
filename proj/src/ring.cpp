#include "zks/ring.hpp"

#include <sstream>
#include <utility>

namespace zks {

Ring Ring::integers_mod(Int m) {
  if (m < 2) throw domain_error("modulus must be >= 2");
  return Ring(true, std::move(m));
}

const Int& Ring::modulus() const {
  if (!modular_) throw domain_error("ring Z has no modulus");
  return modulus_;
}

Int Ring::reduce(Int v) const {
  if (!modular_) return v;
  Int r = v % modulus_;
  if (r < 0) r += modulus_;
  return r;
}

bool Ring::k_nontrivial(int k) const {
  if (!modular_) return true;
  return boost::multiprecision::gcd(Int(k), modulus_) > 1;
}

std::string Ring::name() const {
  if (!modular_) return "Z";
  return "Z/" + modulus_.str();
}

Ring Ring::parse(const std::string& text) {
  if (text == "Z") return integers();
  std::string m;
  if (text.rfind("Z/", 0) == 0) {
    m = text.substr(2);
  } else if (text.rfind("Zmod:", 0) == 0) {
    m = text.substr(5);
  } else {
    throw format_error("unknown ring '" + text + "' (expected Z, Z/<m> or Zmod:<m>)");
  }
  if (m.empty() || m.find_first_not_of("0123456789") != std::string::npos) {
    throw format_error("bad modulus in ring '" + text + "'");
  }
  return integers_mod(Int(m));
}

bool congruent_mod(const Int& a, const Int& b, int k, const Ring& ring) {
  if (k < 1) throw domain_error("congruence modulus k must be >= 1");
  Int d = ring.sub(a, b);
  Int g = ring.modular() ? boost::multiprecision::gcd(Int(k), ring.modulus()) : Int(k);
  return d % g == 0;
}

GroupRingElement::GroupRingElement(int k, Ring ring)
    : k_(k), ring_(std::move(ring)), coeffs_(static_cast<size_t>(k)) {
  if (k < 2) throw domain_error("group order k must be >= 2");
}

GroupRingElement GroupRingElement::group(int k, const Ring& ring, int a) {
  GroupRingElement x(k, ring);
  if (a < 0 || a >= k) throw domain_error("group exponent out of range [0, k)");
  x.coeffs_[static_cast<size_t>(a)] = ring.reduce(1);
  return x;
}

GroupRingElement GroupRingElement::scalar(int k, const Ring& ring, const Int& c) {
  GroupRingElement x(k, ring);
  x.coeffs_[0] = ring.reduce(c);
  return x;
}

GroupRingElement GroupRingElement::sigma_r(int k, const Ring& ring, int r) {
  if (r < 0 || r > k) throw domain_error("sigma_r requires 0 <= r <= k");
  GroupRingElement x(k, ring);
  for (int i = 0; i < r; ++i) x.coeffs_[static_cast<size_t>(i)] = ring.reduce(1);
  return x;
}

GroupRingElement GroupRingElement::tau_r(int k, const Ring& ring, int r) {
  if (r < 0 || r > k) throw domain_error("tau_r requires 0 <= r <= k");
  GroupRingElement x(k, ring);
  if (r == 0 || r == k) return x;  // tau_0 = tau_k = 0
  x.coeffs_[static_cast<size_t>(r)] = ring.reduce(1);
  x.coeffs_[0] = ring.reduce(-1);
  return x;
}

GroupRingElement GroupRingElement::from_coeffs(int k, const Ring& ring, std::vector<Int> coeffs) {
  if (static_cast<int>(coeffs.size()) != k) {
    throw dimension_error("coefficient vector must have length k");
  }
  GroupRingElement x(k, ring);
  for (size_t i = 0; i < coeffs.size(); ++i) x.coeffs_[i] = ring.reduce(coeffs[i]);
  return x;
}

bool GroupRingElement::is_zero() const {
  for (const Int& c : coeffs_) {
    if (c != 0) return false;
  }
  return true;
}

void GroupRingElement::require_compatible(const GroupRingElement& o) const {
  if (k_ != o.k_ || ring_ != o.ring_) {
    throw dimension_error("group ring elements over different k or rings");
  }
}

GroupRingElement GroupRingElement::operator+(const GroupRingElement& o) const {
  require_compatible(o);
  GroupRingElement r(k_, ring_);
  for (int i = 0; i < k_; ++i) {
    r.coeffs_[static_cast<size_t>(i)] =
        ring_.add(coeffs_[static_cast<size_t>(i)], o.coeffs_[static_cast<size_t>(i)]);
  }
  return r;
}

GroupRingElement GroupRingElement::operator-(const GroupRingElement& o) const {
  require_compatible(o);
  GroupRingElement r(k_, ring_);
  for (int i = 0; i < k_; ++i) {
    r.coeffs_[static_cast<size_t>(i)] =
        ring_.sub(coeffs_[static_cast<size_t>(i)], o.coeffs_[static_cast<size_t>(i)]);
  }
  return r;
}

GroupRingElement GroupRingElement::operator*(const GroupRingElement& o) const {
  require_compatible(o);
  GroupRingElement r(k_, ring_);
  for (int a = 0; a < k_; ++a) {
    const Int& ca = coeffs_[static_cast<size_t>(a)];
    if (ca == 0) continue;
    for (int b = 0; b < k_; ++b) {
      const Int& cb = o.coeffs_[static_cast<size_t>(b)];
      if (cb == 0) continue;
      size_t c = static_cast<size_t>((a + b) % k_);
      r.coeffs_[c] = ring_.add(r.coeffs_[c], ca * cb);
    }
  }
  return r;
}

GroupRingElement GroupRingElement::operator-() const {
  GroupRingElement r(k_, ring_);
  for (int i = 0; i < k_; ++i) {
    r.coeffs_[static_cast<size_t>(i)] = ring_.neg(coeffs_[static_cast<size_t>(i)]);
  }
  return r;
}

GroupRingElement GroupRingElement::scaled(const Int& c) const {
  GroupRingElement r(k_, ring_);
  for (int i = 0; i < k_; ++i) {
    r.coeffs_[static_cast<size_t>(i)] = ring_.mul(coeffs_[static_cast<size_t>(i)], c);
  }
  return r;
}

GroupRingElement GroupRingElement::shifted(int a) const {
  if (a < 0 || a >= k_) throw domain_error("shift exponent out of range [0, k)");
  GroupRingElement r(k_, ring_);
  for (int i = 0; i < k_; ++i) {
    r.coeffs_[static_cast<size_t>((i + a) % k_)] = coeffs_[static_cast<size_t>(i)];
  }
  return r;
}

bool GroupRingElement::operator==(const GroupRingElement& o) const {
  return k_ == o.k_ && ring_ == o.ring_ && coeffs_ == o.coeffs_;
}

Int GroupRingElement::evaluate(int j) const {
  if (j < 0 || j >= k_) throw domain_error("evaluation index out of range [0, k)");
  return coeffs_[static_cast<size_t>(j)];
}

Int GroupRingElement::augment() const {
  Int s = 0;
  for (const Int& c : coeffs_) s += c;
  return ring_.reduce(s);
}

std::vector<Int> GroupRingElement::coords(Basis basis) const {
  std::vector<Int> c(static_cast<size_t>(k_));
  if (basis == Basis::T) {
    // x = c_0 e + sum_{i>=1} c_i tau_i  with  c_i = x[i] (i >= 1), c_0 = augment(x).
    c[0] = augment();
    for (int i = 1; i < k_; ++i) c[static_cast<size_t>(i)] = coeffs_[static_cast<size_t>(i)];
  } else {
    // x = sum_{i=1..k} d_i sigma_i  with  d_i = x[i-1] - x[i] (i < k), d_k = x[k-1].
    for (int i = 1; i < k_; ++i) {
      c[static_cast<size_t>(i - 1)] =
          ring_.sub(coeffs_[static_cast<size_t>(i - 1)], coeffs_[static_cast<size_t>(i)]);
    }
    c[static_cast<size_t>(k_ - 1)] = coeffs_[static_cast<size_t>(k_ - 1)];
  }
  return c;
}

GroupRingElement GroupRingElement::from_coords(int k, const Ring& ring, Basis basis,
                                               const std::vector<Int>& coords) {
  if (static_cast<int>(coords.size()) != k) {
    throw dimension_error("coordinate vector must have length k");
  }
  GroupRingElement x(k, ring);
  if (basis == Basis::T) {
    x = x + GroupRingElement::identity(k, ring).scaled(coords[0]);
    for (int i = 1; i < k; ++i) {
      x = x + GroupRingElement::tau_r(k, ring, i).scaled(coords[static_cast<size_t>(i)]);
    }
  } else {
    for (int i = 1; i <= k; ++i) {
      x = x + GroupRingElement::sigma_r(k, ring, i).scaled(coords[static_cast<size_t>(i - 1)]);
    }
  }
  return x;
}

std::string GroupRingElement::str() const {
  std::ostringstream os;
  bool first = true;
  for (int i = 0; i < k_; ++i) {
    const Int& c = coeffs_[static_cast<size_t>(i)];
    if (c == 0) continue;
    if (!first) os << " + ";
    os << c;
    if (i > 0) os << "*g^" << i;
    first = false;
  }
  if (first) os << "0";
  return os.str();
}

}  // namespace zks
