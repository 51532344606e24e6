#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "zks/ring.hpp"

namespace zks {

// Basis element [h_1|h_2|...|h_r] of the bar resolution, stored as the list
// of exponents a_i with h_i = g^{a_i}, 0 <= a_i < k. The empty word is the
// degree-0 generator.
struct BarWord {
  int k = 2;
  std::vector<int> letters;

  BarWord() = default;
  BarWord(int k_, std::vector<int> letters_);
  int degree() const { return static_cast<int>(letters.size()); }
  bool operator==(const BarWord& o) const { return k == o.k && letters == o.letters; }
  std::string str() const;
};

// Basis element h_0 (x) h_1 (x) ... (x) h_r of the standard resolution, as
// the list of exponents b_i with h_i = g^{b_i}.
struct TensorElement {
  int k = 2;
  std::vector<int> entries;

  TensorElement() = default;
  TensorElement(int k_, std::vector<int> entries_);
  int degree() const { return static_cast<int>(entries.size()) - 1; }
  bool operator==(const TensorElement& o) const { return k == o.k && entries == o.entries; }
  // Diagonal action: shift every entry by `power` mod k.
  TensorElement shifted(int power) const;
  std::string str() const;
};

// h_0 (x) ... (x) h_r  =  h_0 [h_0^{-1}h_1 | ... | h_{r-1}^{-1}h_r].
std::pair<int, BarWord> tensor_to_bar(const TensorElement& t);
TensorElement bar_to_tensor(int lead, const BarWord& w);
TensorElement tensor_prepend(int entry, const TensorElement& t);

// No two consecutive entries equal; on bar words, no letter is 0.
bool is_alternating(const BarWord& w);
bool is_alternating(const TensorElement& t);

// Even degree 2s: the bar letters satisfy a_{2i+1} + a_{2i+2} >= k for every
// pair. Odd degree 2s+1: the degree-2s tail tensor is strongly alternating
// and the first two entries differ. Degree 0 is vacuously strongly
// alternating. The property is invariant under the diagonal action.
bool is_strongly_alternating(const TensorElement& t);
// Bar word with implicit lead e; uses the word's own degree parity.
bool is_strongly_alternating(const BarWord& w);

// Element of the standard resolution in degree r: a finite sum of bar words
// with group-ring coefficients. Zero coefficients are dropped and words are
// kept in lexicographic order.
class StandardChain {
 public:
  StandardChain(int k, Ring ring, int degree);

  int k() const { return k_; }
  const Ring& ring() const { return ring_; }
  int degree() const { return degree_; }
  const std::map<std::vector<int>, GroupRingElement>& terms() const { return terms_; }

  void add(const BarWord& w, const GroupRingElement& coeff);
  void add_tensor(const TensorElement& t, const Int& scalar);

  bool is_zero() const { return terms_.empty(); }
  GroupRingElement coeff(const BarWord& w) const;

  StandardChain operator+(const StandardChain& o) const;
  StandardChain operator-(const StandardChain& o) const;
  // Left multiplication by a group-ring element (the diagonal module action).
  StandardChain scaled(const GroupRingElement& c) const;

  bool operator==(const StandardChain& o) const;
  bool operator!=(const StandardChain& o) const { return !(*this == o); }
  std::string str() const;

 private:
  int k_;
  Ring ring_;
  int degree_;
  std::map<std::vector<int>, GroupRingElement> terms_;
};

// Boundary of a bar basis word (degree >= 1):
//   d[h_1|...|h_r] = h_1[h_2|...|h_r]
//                  + sum_i (-1)^i [h_1|...|h_i h_{i+1}|...|h_r]
//                  + (-1)^r [h_1|...|h_{r-1}].
StandardChain bar_boundary(const BarWord& w, const Ring& ring);
StandardChain standard_boundary(const StandardChain& c);

// Element of the minimal resolution M_r = R[Z_k].
struct MinimalElement {
  int degree = 0;
  GroupRingElement value;

  bool operator==(const MinimalElement& o) const {
    return degree == o.degree && value == o.value;
  }
};

// The chain map from the standard resolution to the minimal resolution:
// even words go to e when strongly alternating (else 0); an odd word
// [g^i|tail] goes to sigma_i times the image of its tail.
GroupRingElement map_word_to_minimal(const BarWord& w, const Ring& ring);
MinimalElement map_to_minimal(const StandardChain& c);

// Boundary in the minimal resolution: multiplication by tau in odd degree,
// by sigma in even positive degree.
MinimalElement minimal_boundary(const MinimalElement& x);

struct ChainMapFailure {
  BarWord word;
  MinimalElement via_minimal;   // d(f(w))
  MinimalElement via_standard;  // f(d(w))
};

struct ChainMapReport {
  long long checked = 0;
  std::vector<ChainMapFailure> failures;
  bool ok() const { return failures.empty(); }
};

// Exhaustively checks d(f(w)) = f(d(w)) for every bar word of degree
// 1..max_degree. Throws size_error if the enumeration would exceed the cap.
ChainMapReport verify_minimal_chain_map(int k, int max_degree, const Ring& ring,
                                        long long enumeration_cap = 1000000);

}  // namespace zks
