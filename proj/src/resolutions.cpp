#include "zks/resolutions.hpp"

#include <sstream>

namespace zks {

namespace {

void check_exponents(int k, const std::vector<int>& xs, const char* what) {
  if (k < 2) throw domain_error("group order k must be >= 2");
  for (int a : xs) {
    if (a < 0 || a >= k) throw domain_error(std::string(what) + " exponent out of range [0, k)");
  }
}

}  // namespace

BarWord::BarWord(int k_, std::vector<int> letters_) : k(k_), letters(std::move(letters_)) {
  check_exponents(k, letters, "bar word");
}

std::string BarWord::str() const {
  std::ostringstream os;
  os << "[";
  for (size_t i = 0; i < letters.size(); ++i) {
    if (i) os << "|";
    os << letters[i];
  }
  os << "]";
  return os.str();
}

TensorElement::TensorElement(int k_, std::vector<int> entries_)
    : k(k_), entries(std::move(entries_)) {
  check_exponents(k, entries, "tensor");
  if (entries.empty()) throw domain_error("tensor needs at least one entry");
}

TensorElement TensorElement::shifted(int power) const {
  if (power < 0 || power >= k) throw domain_error("shift exponent out of range [0, k)");
  TensorElement t = *this;
  for (int& e : t.entries) e = (e + power) % k;
  return t;
}

std::string TensorElement::str() const {
  std::ostringstream os;
  for (size_t i = 0; i < entries.size(); ++i) {
    if (i) os << "(x)";
    os << "g^" << entries[i];
  }
  return os.str();
}

std::pair<int, BarWord> tensor_to_bar(const TensorElement& t) {
  std::vector<int> letters;
  letters.reserve(t.entries.size() - 1);
  for (size_t i = 1; i < t.entries.size(); ++i) {
    letters.push_back(((t.entries[i] - t.entries[i - 1]) % t.k + t.k) % t.k);
  }
  return {t.entries[0], BarWord(t.k, std::move(letters))};
}

TensorElement bar_to_tensor(int lead, const BarWord& w) {
  if (lead < 0 || lead >= w.k) throw domain_error("lead exponent out of range [0, k)");
  std::vector<int> entries;
  entries.reserve(w.letters.size() + 1);
  int acc = lead;
  entries.push_back(acc);
  for (int a : w.letters) {
    acc = (acc + a) % w.k;
    entries.push_back(acc);
  }
  return TensorElement(w.k, std::move(entries));
}

TensorElement tensor_prepend(int entry, const TensorElement& t) {
  std::vector<int> entries;
  entries.reserve(t.entries.size() + 1);
  entries.push_back(entry);
  entries.insert(entries.end(), t.entries.begin(), t.entries.end());
  return TensorElement(t.k, std::move(entries));
}

bool is_alternating(const BarWord& w) {
  for (int a : w.letters) {
    if (a == 0) return false;
  }
  return true;
}

bool is_alternating(const TensorElement& t) {
  for (size_t i = 1; i < t.entries.size(); ++i) {
    if (t.entries[i] == t.entries[i - 1]) return false;
  }
  return true;
}

namespace {

// Even rule on a letter sequence: consecutive pairs (a_1,a_2), (a_3,a_4), ...
// must each sum to >= k. Requires an even number of letters.
bool even_pairs_ok(int k, const std::vector<int>& letters) {
  for (size_t i = 0; i + 1 < letters.size(); i += 2) {
    if (letters[i] + letters[i + 1] < k) return false;
  }
  return true;
}

}  // namespace

bool is_strongly_alternating(const TensorElement& t) {
  auto [lead, word] = tensor_to_bar(t);
  (void)lead;
  return is_strongly_alternating(word);
}

bool is_strongly_alternating(const BarWord& w) {
  if (w.degree() % 2 == 0) return even_pairs_ok(w.k, w.letters);
  // Odd degree: first step must move (h_0 != h_1) and the tail obeys the
  // even rule.
  if (w.letters[0] == 0) return false;
  std::vector<int> tail(w.letters.begin() + 1, w.letters.end());
  return even_pairs_ok(w.k, tail);
}

StandardChain::StandardChain(int k, Ring ring, int degree)
    : k_(k), ring_(std::move(ring)), degree_(degree) {
  if (k < 2) throw domain_error("group order k must be >= 2");
  if (degree < 0) throw domain_error("chain degree must be >= 0");
}

void StandardChain::add(const BarWord& w, const GroupRingElement& coeff) {
  if (w.k != k_) throw dimension_error("bar word over different k");
  if (w.degree() != degree_) throw dimension_error("bar word of wrong degree");
  if (coeff.k() != k_ || coeff.ring() != ring_) {
    throw dimension_error("coefficient over different k or ring");
  }
  auto it = terms_.find(w.letters);
  if (it == terms_.end()) {
    if (!coeff.is_zero()) terms_.emplace(w.letters, coeff);
    return;
  }
  it->second = it->second + coeff;
  if (it->second.is_zero()) terms_.erase(it);
}

void StandardChain::add_tensor(const TensorElement& t, const Int& scalar) {
  auto [lead, word] = tensor_to_bar(t);
  add(word, GroupRingElement::group(k_, ring_, lead).scaled(scalar));
}

GroupRingElement StandardChain::coeff(const BarWord& w) const {
  auto it = terms_.find(w.letters);
  if (it == terms_.end()) return GroupRingElement::zero(k_, ring_);
  return it->second;
}

StandardChain StandardChain::operator+(const StandardChain& o) const {
  if (k_ != o.k_ || ring_ != o.ring_ || degree_ != o.degree_) {
    throw dimension_error("incompatible standard chains");
  }
  StandardChain r = *this;
  for (const auto& [w, c] : o.terms_) r.add(BarWord(k_, w), c);
  return r;
}

StandardChain StandardChain::operator-(const StandardChain& o) const {
  if (k_ != o.k_ || ring_ != o.ring_ || degree_ != o.degree_) {
    throw dimension_error("incompatible standard chains");
  }
  StandardChain r = *this;
  for (const auto& [w, c] : o.terms_) r.add(BarWord(k_, w), -c);
  return r;
}

StandardChain StandardChain::scaled(const GroupRingElement& c) const {
  StandardChain r(k_, ring_, degree_);
  for (const auto& [w, coeff] : terms_) r.add(BarWord(k_, w), c * coeff);
  return r;
}

bool StandardChain::operator==(const StandardChain& o) const {
  return k_ == o.k_ && ring_ == o.ring_ && degree_ == o.degree_ && terms_ == o.terms_;
}

std::string StandardChain::str() const {
  std::ostringstream os;
  bool first = true;
  for (const auto& [w, c] : terms_) {
    if (!first) os << " + ";
    os << "(" << c.str() << ")" << BarWord(k_, w).str();
    first = false;
  }
  if (first) os << "0";
  return os.str();
}

StandardChain bar_boundary(const BarWord& w, const Ring& ring) {
  int r = w.degree();
  if (r < 1) throw dimension_error("bar boundary requires degree >= 1");
  StandardChain out(w.k, ring, r - 1);

  // h_1 [h_2|...|h_r]
  std::vector<int> rest(w.letters.begin() + 1, w.letters.end());
  out.add(BarWord(w.k, rest), GroupRingElement::group(w.k, ring, w.letters[0]));

  // sum (-1)^i [...|h_i h_{i+1}|...]
  for (int i = 1; i <= r - 1; ++i) {
    std::vector<int> merged;
    merged.reserve(static_cast<size_t>(r - 1));
    for (int j = 0; j < r; ++j) {
      if (j == i - 1) {
        merged.push_back((w.letters[static_cast<size_t>(j)] +
                          w.letters[static_cast<size_t>(j + 1)]) % w.k);
        ++j;
      } else {
        merged.push_back(w.letters[static_cast<size_t>(j)]);
      }
    }
    Int sign = (i % 2 == 0) ? 1 : -1;
    out.add(BarWord(w.k, merged), GroupRingElement::scalar(w.k, ring, sign));
  }

  // (-1)^r [h_1|...|h_{r-1}]
  std::vector<int> head(w.letters.begin(), w.letters.end() - 1);
  Int sign = (r % 2 == 0) ? 1 : -1;
  out.add(BarWord(w.k, head), GroupRingElement::scalar(w.k, ring, sign));
  return out;
}

StandardChain standard_boundary(const StandardChain& c) {
  if (c.degree() < 1) throw dimension_error("standard boundary requires degree >= 1");
  StandardChain out(c.k(), c.ring(), c.degree() - 1);
  for (const auto& [letters, coeff] : c.terms()) {
    StandardChain b = bar_boundary(BarWord(c.k(), letters), c.ring());
    out = out + b.scaled(coeff);
  }
  return out;
}

GroupRingElement map_word_to_minimal(const BarWord& w, const Ring& ring) {
  int r = w.degree();
  if (r % 2 == 0) {
    if (is_strongly_alternating(w)) return GroupRingElement::identity(w.k, ring);
    return GroupRingElement::zero(w.k, ring);
  }
  std::vector<int> tail(w.letters.begin() + 1, w.letters.end());
  if (!even_pairs_ok(w.k, tail)) return GroupRingElement::zero(w.k, ring);
  return GroupRingElement::sigma_r(w.k, ring, w.letters[0]);
}

MinimalElement map_to_minimal(const StandardChain& c) {
  GroupRingElement acc = GroupRingElement::zero(c.k(), c.ring());
  for (const auto& [letters, coeff] : c.terms()) {
    GroupRingElement img = map_word_to_minimal(BarWord(c.k(), letters), c.ring());
    if (!img.is_zero()) acc = acc + coeff * img;
  }
  return {c.degree(), acc};
}

MinimalElement minimal_boundary(const MinimalElement& x) {
  if (x.degree < 1) throw dimension_error("minimal boundary requires degree >= 1");
  int k = x.value.k();
  const Ring& ring = x.value.ring();
  GroupRingElement mult = (x.degree % 2 == 1) ? GroupRingElement::tau(k, ring)
                                              : GroupRingElement::sigma(k, ring);
  return {x.degree - 1, mult * x.value};
}

ChainMapReport verify_minimal_chain_map(int k, int max_degree, const Ring& ring,
                                        long long enumeration_cap) {
  if (k < 2) throw domain_error("group order k must be >= 2");
  if (max_degree < 1) throw domain_error("max_degree must be >= 1");

  long long total = 0;
  long long pw = 1;
  for (int r = 1; r <= max_degree; ++r) {
    pw *= k;
    total += pw;
    if (total > enumeration_cap) {
      throw size_error("word enumeration exceeds cap of " + std::to_string(enumeration_cap));
    }
  }

  ChainMapReport report;
  for (int r = 1; r <= max_degree; ++r) {
    std::vector<int> letters(static_cast<size_t>(r), 0);
    while (true) {
      BarWord w(k, letters);
      MinimalElement fw = {r, map_word_to_minimal(w, ring)};
      MinimalElement lhs = minimal_boundary(fw);
      StandardChain unit(k, ring, r);
      unit.add(w, GroupRingElement::identity(k, ring));
      MinimalElement rhs = map_to_minimal(standard_boundary(unit));
      ++report.checked;
      if (!(lhs == rhs)) report.failures.push_back({w, lhs, rhs});

      // next word in lexicographic order
      int i = r - 1;
      while (i >= 0 && letters[static_cast<size_t>(i)] == k - 1) {
        letters[static_cast<size_t>(i)] = 0;
        --i;
      }
      if (i < 0) break;
      ++letters[static_cast<size_t>(i)];
    }
  }
  return report;
}

}  // namespace zks
