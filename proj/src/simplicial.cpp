#include "zks/simplicial.hpp"

#include <algorithm>
#include <queue>
#include <set>
#include <sstream>

namespace zks {

namespace {

// Sorts v in place and returns the sign of the sorting permutation.
// Entries must be distinct.
int sort_sign(std::vector<Vertex>& v) {
  int inversions = 0;
  for (size_t i = 0; i < v.size(); ++i) {
    for (size_t j = i + 1; j < v.size(); ++j) {
      if (v[i] > v[j]) ++inversions;
    }
  }
  std::sort(v.begin(), v.end());
  return (inversions % 2 == 0) ? 1 : -1;
}

}  // namespace

SimplicialComplex SimplicialComplex::from_facets(
    const std::vector<std::vector<std::string>>& facets) {
  if (facets.empty()) throw format_error("facet list must be nonempty");
  std::set<std::string> ids;
  for (const auto& f : facets) {
    if (f.empty()) throw format_error("facet must have at least one vertex");
    for (const auto& id : f) ids.insert(id);
  }
  std::vector<std::string> ordered(ids.begin(), ids.end());
  std::map<std::string, Vertex> index;
  for (size_t i = 0; i < ordered.size(); ++i) index[ordered[i]] = static_cast<Vertex>(i);
  std::vector<Simplex> indexed;
  indexed.reserve(facets.size());
  for (const auto& f : facets) {
    Simplex s;
    s.reserve(f.size());
    for (const auto& id : f) s.push_back(index.at(id));
    indexed.push_back(std::move(s));
  }
  return from_indexed(std::move(ordered), std::move(indexed));
}

SimplicialComplex SimplicialComplex::from_indexed(std::vector<std::string> vertex_ids,
                                                  std::vector<Simplex> facets) {
  if (facets.empty()) throw format_error("facet list must be nonempty");
  SimplicialComplex X;
  X.vertex_ids_ = std::move(vertex_ids);
  for (size_t i = 0; i < X.vertex_ids_.size(); ++i) {
    auto [it, inserted] = X.index_.emplace(X.vertex_ids_[i], static_cast<Vertex>(i));
    (void)it;
    if (!inserted) throw format_error("duplicate vertex id '" + X.vertex_ids_[i] + "'");
  }
  for (Simplex& s : facets) {
    for (Vertex v : s) {
      if (v < 0 || v >= X.vertex_count()) throw format_error("facet vertex out of range");
    }
    std::sort(s.begin(), s.end());
    for (size_t i = 1; i < s.size(); ++i) {
      if (s[i] == s[i - 1]) {
        throw format_error("duplicate vertex within facet " + X.simplex_str(s));
      }
    }
  }
  std::sort(facets.begin(), facets.end());
  facets.erase(std::unique(facets.begin(), facets.end()), facets.end());
  // Drop facets contained in another (the complex is the downward closure).
  for (const Simplex& s : facets) {
    bool contained = false;
    for (const Simplex& t : facets) {
      if (&s != &t && s.size() < t.size() &&
          std::includes(t.begin(), t.end(), s.begin(), s.end())) {
        contained = true;
        break;
      }
    }
    if (!contained) X.facets_.push_back(s);
  }
  size_t d = 0;
  for (const Simplex& s : X.facets_) d = std::max(d, s.size());
  X.dimension_ = static_cast<int>(d) - 1;
  for (const Simplex& s : X.facets_) {
    if (s.size() != d) X.pure_ = false;
  }
  X.build_faces();
  return X;
}

void SimplicialComplex::build_faces() {
  faces_by_dim_.assign(static_cast<size_t>(dimension_) + 1, {});
  std::vector<std::set<Simplex>> acc(static_cast<size_t>(dimension_) + 1);
  for (const Simplex& f : facets_) {
    size_t n = f.size();
    if (n > 20) throw size_error("facet too large for subset enumeration");
    for (unsigned mask = 1; mask < (1u << n); ++mask) {
      Simplex s;
      for (size_t i = 0; i < n; ++i) {
        if (mask & (1u << i)) s.push_back(f[i]);
      }
      acc[s.size() - 1].insert(std::move(s));
    }
  }
  for (size_t dim = 0; dim < acc.size(); ++dim) {
    faces_by_dim_[dim].assign(acc[dim].begin(), acc[dim].end());
  }
}

const std::string& SimplicialComplex::vertex_id(Vertex v) const {
  if (v < 0 || v >= vertex_count()) throw domain_error("vertex index out of range");
  return vertex_ids_[static_cast<size_t>(v)];
}

Vertex SimplicialComplex::vertex_index(const std::string& id) const {
  auto it = index_.find(id);
  if (it == index_.end()) throw format_error("unknown vertex id '" + id + "'");
  return it->second;
}

const std::vector<Simplex>& SimplicialComplex::faces(int dim) const {
  static const std::vector<Simplex> empty;
  if (dim < 0 || dim > dimension_) return empty;
  return faces_by_dim_[static_cast<size_t>(dim)];
}

long long SimplicialComplex::face_count() const {
  long long n = 0;
  for (const auto& fs : faces_by_dim_) n += static_cast<long long>(fs.size());
  return n;
}

bool SimplicialComplex::contains(const Simplex& s) const {
  if (s.empty()) return false;
  const auto& fs = faces(static_cast<int>(s.size()) - 1);
  return std::binary_search(fs.begin(), fs.end(), s);
}

std::string SimplicialComplex::simplex_str(const Simplex& s) const {
  std::ostringstream os;
  os << "<";
  for (size_t i = 0; i < s.size(); ++i) {
    if (i) os << ",";
    os << vertex_ids_[static_cast<size_t>(s[i])];
  }
  os << ">";
  return os.str();
}

SimplicialChain::SimplicialChain(Ring ring, int degree) : ring_(std::move(ring)), degree_(degree) {
  if (degree < 0) throw domain_error("chain degree must be >= 0");
}

void SimplicialChain::add(const Simplex& s, const Int& coeff) {
  if (static_cast<int>(s.size()) != degree_ + 1) {
    throw dimension_error("simplex has wrong degree for this chain");
  }
  if (!std::is_sorted(s.begin(), s.end())) throw domain_error("simplex must be sorted");
  Int c = ring_.reduce(coeff);
  auto it = terms_.find(s);
  if (it == terms_.end()) {
    if (c != 0) terms_.emplace(s, std::move(c));
    return;
  }
  it->second = ring_.add(it->second, c);
  if (it->second == 0) terms_.erase(it);
}

Int SimplicialChain::coeff(const Simplex& s) const {
  auto it = terms_.find(s);
  return it == terms_.end() ? Int(0) : it->second;
}

SimplicialChain SimplicialChain::operator+(const SimplicialChain& o) const {
  if (ring_ != o.ring_ || degree_ != o.degree_) throw dimension_error("incompatible chains");
  SimplicialChain r = *this;
  for (const auto& [s, c] : o.terms_) r.add(s, c);
  return r;
}

SimplicialChain SimplicialChain::operator-(const SimplicialChain& o) const {
  if (ring_ != o.ring_ || degree_ != o.degree_) throw dimension_error("incompatible chains");
  SimplicialChain r = *this;
  for (const auto& [s, c] : o.terms_) r.add(s, ring_.neg(c));
  return r;
}

SimplicialChain SimplicialChain::operator-() const {
  SimplicialChain r(ring_, degree_);
  for (const auto& [s, c] : terms_) r.add(s, ring_.neg(c));
  return r;
}

SimplicialChain SimplicialChain::scaled(const Int& c) const {
  SimplicialChain r(ring_, degree_);
  for (const auto& [s, coeff] : terms_) r.add(s, ring_.mul(coeff, c));
  return r;
}

bool SimplicialChain::operator==(const SimplicialChain& o) const {
  return ring_ == o.ring_ && degree_ == o.degree_ && terms_ == o.terms_;
}

Int SimplicialChain::coefficient_sum() const {
  Int s = 0;
  for (const auto& [sx, c] : terms_) {
    (void)sx;
    s += c;
  }
  return ring_.reduce(s);
}

SimplicialChain chain_boundary(const SimplicialChain& x) {
  if (x.degree() < 1) throw dimension_error("boundary requires degree >= 1");
  SimplicialChain out(x.ring(), x.degree() - 1);
  for (const auto& [s, c] : x.terms()) {
    for (size_t i = 0; i < s.size(); ++i) {
      Simplex face;
      face.reserve(s.size() - 1);
      for (size_t j = 0; j < s.size(); ++j) {
        if (j != i) face.push_back(s[j]);
      }
      out.add(face, (i % 2 == 0) ? c : x.ring().neg(c));
    }
  }
  return out;
}

void require_supported(const SimplicialComplex& X, const SimplicialChain& x) {
  for (const auto& [s, c] : x.terms()) {
    (void)c;
    if (!X.contains(s)) {
      throw domain_error("chain simplex " + X.simplex_str(s) + " is not a face of the complex");
    }
  }
}

GroupAction::GroupAction(const SimplicialComplex& X, int k, std::vector<Vertex> generator)
    : k_(k), generator_(std::move(generator)) {
  if (k < 2) throw domain_error("action order k must be >= 2");
  int n = X.vertex_count();
  if (static_cast<int>(generator_.size()) != n) {
    throw format_error("generator permutation must cover every vertex");
  }
  std::vector<bool> seen(static_cast<size_t>(n), false);
  for (Vertex v : generator_) {
    if (v < 0 || v >= n || seen[static_cast<size_t>(v)]) {
      throw format_error("generator is not a permutation of the vertices");
    }
    seen[static_cast<size_t>(v)] = true;
  }
  // Order exactly k.
  std::vector<Vertex> power(generator_);
  for (int j = 1; j < k; ++j) {
    bool identity = true;
    for (int v = 0; v < n; ++v) {
      if (power[static_cast<size_t>(v)] != v) {
        identity = false;
        break;
      }
    }
    if (identity) throw format_error("generator order divides " + std::to_string(j) + ", not k");
    std::vector<Vertex> next(static_cast<size_t>(n));
    for (int v = 0; v < n; ++v) {
      next[static_cast<size_t>(v)] = generator_[static_cast<size_t>(power[static_cast<size_t>(v)])];
    }
    power = std::move(next);
  }
  for (int v = 0; v < n; ++v) {
    if (power[static_cast<size_t>(v)] != v) {
      throw format_error("generator does not have order k");
    }
  }
  // Simplicial: facets map to facets.
  std::set<Simplex> facet_set(X.facets().begin(), X.facets().end());
  for (const Simplex& f : X.facets()) {
    auto [img, sign] = apply_simplex(f, 1);
    (void)sign;
    if (facet_set.find(img) == facet_set.end()) {
      throw format_error("generator does not map facet " + X.simplex_str(f) + " to a facet");
    }
  }
}

Vertex GroupAction::apply_vertex(Vertex v, int power) const {
  if (power < 0 || power >= k_) throw domain_error("action power out of range [0, k)");
  Vertex w = v;
  for (int i = 0; i < power; ++i) w = generator_[static_cast<size_t>(w)];
  return w;
}

std::pair<Simplex, int> GroupAction::apply_simplex(const Simplex& s, int power) const {
  Simplex img;
  img.reserve(s.size());
  for (Vertex v : s) img.push_back(apply_vertex(v, power));
  int sign = sort_sign(img);
  return {img, sign};
}

SimplicialChain GroupAction::apply(const SimplicialChain& x, int power) const {
  SimplicialChain out(x.ring(), x.degree());
  for (const auto& [s, c] : x.terms()) {
    auto [img, sign] = apply_simplex(s, power);
    out.add(img, sign == 1 ? c : x.ring().neg(c));
  }
  return out;
}

GroupAction::FreenessReport GroupAction::check_free(const SimplicialComplex& X) const {
  for (int dim = 0; dim <= X.dimension(); ++dim) {
    for (const Simplex& s : X.faces(dim)) {
      for (int j = 1; j < k_; ++j) {
        auto [img, sign] = apply_simplex(s, j);
        (void)sign;
        if (img == s) return {false, s, j};
      }
    }
  }
  return {};
}

void GroupAction::require_free(const SimplicialComplex& X) const {
  auto report = check_free(X);
  if (!report.free) {
    throw precondition_error("action is not free: power " + std::to_string(report.fixed_power) +
                             " fixes " + X.simplex_str(report.fixed_simplex));
  }
}

std::vector<std::vector<Vertex>> GroupAction::orbits(const SimplicialComplex& X) const {
  std::vector<bool> seen(static_cast<size_t>(X.vertex_count()), false);
  std::vector<std::vector<Vertex>> out;
  for (Vertex v = 0; v < X.vertex_count(); ++v) {
    if (seen[static_cast<size_t>(v)]) continue;
    std::vector<Vertex> orbit;
    Vertex w = v;
    do {
      orbit.push_back(w);
      seen[static_cast<size_t>(w)] = true;
      w = generator_[static_cast<size_t>(w)];
    } while (w != v);
    out.push_back(std::move(orbit));
  }
  return out;
}

SimplicialChain sigma_times(const GroupAction& a, const SimplicialChain& x) {
  SimplicialChain out(x.ring(), x.degree());
  for (int j = 0; j < a.k(); ++j) out = out + a.apply(x, j);
  return out;
}

SimplicialChain tau_times(const GroupAction& a, const SimplicialChain& x) {
  return a.apply(x, 1) - x;
}

std::string join_vertex_id(int sign, int copy) {
  return "s" + std::to_string(sign) + "c" + std::to_string(copy);
}

std::optional<std::pair<int, int>> parse_join_vertex(const std::string& id) {
  if (id.size() < 4 || id[0] != 's') return std::nullopt;
  size_t c = id.find('c', 1);
  if (c == std::string::npos || c == 1 || c + 1 >= id.size()) return std::nullopt;
  std::string sign = id.substr(1, c - 1);
  std::string copy = id.substr(c + 1);
  if (sign.find_first_not_of("0123456789") != std::string::npos) return std::nullopt;
  if (copy.find_first_not_of("0123456789") != std::string::npos) return std::nullopt;
  return std::make_pair(std::stoi(sign), std::stoi(copy));
}

namespace {

long long checked_power(int k, int m, long long cap) {
  long long total = 1;
  for (int i = 0; i < m; ++i) {
    total *= k;
    if (total > cap) {
      throw size_error("k^m facets exceed cap of " + std::to_string(cap));
    }
  }
  return total;
}

GroupAction sign_shift_action(const SimplicialComplex& X, int k) {
  std::vector<Vertex> gen(static_cast<size_t>(X.vertex_count()));
  for (Vertex v = 0; v < X.vertex_count(); ++v) {
    auto sc = parse_join_vertex(X.vertex_id(v));
    if (!sc) throw format_error("vertex id '" + X.vertex_id(v) + "' is not a join vertex");
    gen[static_cast<size_t>(v)] = X.vertex_index(join_vertex_id((sc->first + 1) % k, sc->second));
  }
  return GroupAction(X, k, std::move(gen));
}

}  // namespace

ComplexWithAction join_complex(int k, int m, long long facet_cap) {
  if (k < 2) throw domain_error("k must be >= 2");
  if (m < 1) throw domain_error("m must be >= 1");
  checked_power(k, m, facet_cap);

  std::vector<std::string> ids;
  for (int copy = 1; copy <= m; ++copy) {
    for (int sign = 0; sign < k; ++sign) ids.push_back(join_vertex_id(sign, copy));
  }
  // vertex (sign, copy) has index (copy-1)*k + sign
  std::vector<Simplex> facets;
  std::vector<int> signs(static_cast<size_t>(m), 0);
  while (true) {
    Simplex f;
    f.reserve(static_cast<size_t>(m));
    for (int copy = 1; copy <= m; ++copy) {
      f.push_back((copy - 1) * k + signs[static_cast<size_t>(copy - 1)]);
    }
    facets.push_back(std::move(f));
    int i = m - 1;
    while (i >= 0 && signs[static_cast<size_t>(i)] == k - 1) {
      signs[static_cast<size_t>(i)] = 0;
      --i;
    }
    if (i < 0) break;
    ++signs[static_cast<size_t>(i)];
  }
  SimplicialComplex X = SimplicialComplex::from_indexed(std::move(ids), std::move(facets));
  GroupAction a = sign_shift_action(X, k);
  return {std::move(X), std::move(a)};
}

int count_jumps(const std::vector<int>& signs) {
  int jumps = 0;
  for (size_t i = 1; i < signs.size(); ++i) {
    if (signs[i] != signs[i - 1]) ++jumps;
  }
  return jumps;
}

ComplexWithAction alt_subcomplex(int k, int m, int d, long long facet_cap) {
  if (d < 0) throw domain_error("d must be >= 0");
  if (m < d + 1) throw domain_error("alt subcomplex requires m >= d+1");
  checked_power(k, m, facet_cap);

  std::vector<std::string> ids;
  for (int copy = 1; copy <= m; ++copy) {
    for (int sign = 0; sign < k; ++sign) ids.push_back(join_vertex_id(sign, copy));
  }
  std::vector<Simplex> facets;
  std::vector<int> signs(static_cast<size_t>(m), 0);
  while (true) {
    if (count_jumps(signs) <= d) {
      Simplex f;
      f.reserve(static_cast<size_t>(m));
      for (int copy = 1; copy <= m; ++copy) {
        f.push_back((copy - 1) * k + signs[static_cast<size_t>(copy - 1)]);
      }
      facets.push_back(std::move(f));
    }
    int i = m - 1;
    while (i >= 0 && signs[static_cast<size_t>(i)] == k - 1) {
      signs[static_cast<size_t>(i)] = 0;
      --i;
    }
    if (i < 0) break;
    ++signs[static_cast<size_t>(i)];
  }
  SimplicialComplex X = SimplicialComplex::from_indexed(std::move(ids), std::move(facets));
  GroupAction a = sign_shift_action(X, k);
  return {std::move(X), std::move(a)};
}

namespace {

std::set<int> chain_copies(const SimplicialComplex& X, const SimplicialChain& x) {
  std::set<int> copies;
  for (const auto& [s, c] : x.terms()) {
    (void)c;
    for (Vertex v : s) {
      auto sc = parse_join_vertex(X.vertex_id(v));
      if (!sc) {
        throw domain_error("join of chains needs join vertices, got '" + X.vertex_id(v) + "'");
      }
      copies.insert(sc->second);
    }
  }
  return copies;
}

// Sign of merging two sorted disjoint vertex lists: parity of the number of
// pairs (a, b) with a in `left`, b in `right`, a > b.
int merge_sign(const Simplex& left, const Simplex& right) {
  int inversions = 0;
  for (Vertex a : left) {
    for (Vertex b : right) {
      if (a > b) ++inversions;
    }
  }
  return (inversions % 2 == 0) ? 1 : -1;
}

}  // namespace

SimplicialChain join_chains(const SimplicialComplex& X, const SimplicialChain& x,
                            const SimplicialChain& y) {
  if (x.ring() != y.ring()) throw dimension_error("join of chains over different rings");
  std::set<int> cx = chain_copies(X, x);
  std::set<int> cy = chain_copies(X, y);
  for (int c : cx) {
    if (cy.count(c)) {
      throw domain_error("join of chains with overlapping copy " + std::to_string(c));
    }
  }
  SimplicialChain out(x.ring(), x.degree() + y.degree() + 1);
  for (const auto& [sa, ca] : x.terms()) {
    for (const auto& [sb, cb] : y.terms()) {
      Simplex merged;
      merged.reserve(sa.size() + sb.size());
      merged.insert(merged.end(), sa.begin(), sa.end());
      merged.insert(merged.end(), sb.begin(), sb.end());
      std::sort(merged.begin(), merged.end());
      int sign = merge_sign(sa, sb);
      Int coeff = x.ring().mul(ca, cb);
      out.add(merged, sign == 1 ? coeff : x.ring().neg(coeff));
    }
  }
  return out;
}

PseudomanifoldReport pseudomanifold_analysis(const SimplicialComplex& X) {
  PseudomanifoldReport report;
  report.pure = X.pure();
  if (!report.pure) return report;

  int d = X.dimension();
  const auto& facets = X.facets();
  Ring z = Ring::integers();

  if (d == 0) {
    // Every 0-face contains the empty ridge; at most two points qualify.
    report.is_pseudomanifold = facets.size() <= 2;
    if (!report.is_pseudomanifold) return report;
    report.closed = facets.size() == 2;
    report.orientable = true;
    SimplicialChain o(z, 0);
    Int sign = 1;
    for (const Simplex& f : facets) {
      o.add(f, sign);
      sign = -sign;
    }
    report.orientation_chain = std::move(o);
    return report;
  }

  // Ridge incidences: for each (d-1)-face, the facets containing it and the
  // sign with which it appears in their boundaries.
  std::map<Simplex, std::vector<std::pair<size_t, int>>> ridge_incidence;
  for (size_t fi = 0; fi < facets.size(); ++fi) {
    const Simplex& f = facets[fi];
    for (size_t i = 0; i < f.size(); ++i) {
      Simplex ridge;
      ridge.reserve(f.size() - 1);
      for (size_t j = 0; j < f.size(); ++j) {
        if (j != i) ridge.push_back(f[j]);
      }
      int sign = (i % 2 == 0) ? 1 : -1;
      ridge_incidence[ridge].emplace_back(fi, sign);
    }
  }
  report.is_pseudomanifold = true;
  std::vector<Simplex> boundary_ridges;
  for (const auto& [ridge, inc] : ridge_incidence) {
    if (inc.size() > 2) {
      report.is_pseudomanifold = false;
      return report;
    }
    if (inc.size() == 1) boundary_ridges.push_back(ridge);
  }
  report.closed = boundary_ridges.empty();

  if (!boundary_ridges.empty()) {
    // Keep X's vertex order, restricted to the vertices that appear.
    std::set<Vertex> used;
    for (const Simplex& r : boundary_ridges) {
      for (Vertex v : r) used.insert(v);
    }
    std::vector<std::string> ids;
    std::map<Vertex, Vertex> remap;
    for (Vertex v : used) {
      remap[v] = static_cast<Vertex>(ids.size());
      ids.push_back(X.vertex_id(v));
    }
    std::vector<Simplex> bfacets;
    for (const Simplex& r : boundary_ridges) {
      Simplex s;
      s.reserve(r.size());
      for (Vertex v : r) s.push_back(remap[v]);
      bfacets.push_back(std::move(s));
    }
    report.boundary_complex = SimplicialComplex::from_indexed(std::move(ids), std::move(bfacets));
  }

  // Orientation by sign propagation across interior ridges.
  std::vector<int> eps(facets.size(), 0);
  report.orientable = true;
  for (size_t start = 0; start < facets.size(); ++start) {
    if (eps[start] != 0) continue;
    eps[start] = 1;
    std::queue<size_t> queue;
    queue.push(start);
    while (!queue.empty() && report.orientable) {
      size_t fi = queue.front();
      queue.pop();
      const Simplex& f = facets[fi];
      for (size_t i = 0; i < f.size() && report.orientable; ++i) {
        Simplex ridge;
        for (size_t j = 0; j < f.size(); ++j) {
          if (j != i) ridge.push_back(f[j]);
        }
        const auto& inc = ridge_incidence[ridge];
        if (inc.size() != 2) continue;
        auto [a, sa] = inc[0];
        auto [b, sb] = inc[1];
        size_t other = (a == fi) ? b : a;
        int s_this = (a == fi) ? sa : sb;
        int s_other = (a == fi) ? sb : sa;
        int needed = -eps[fi] * s_this * s_other;
        if (eps[other] == 0) {
          eps[other] = needed;
          queue.push(other);
        } else if (eps[other] != needed) {
          report.orientable = false;
        }
      }
    }
  }
  if (report.orientable) {
    SimplicialChain o(z, d);
    for (size_t fi = 0; fi < facets.size(); ++fi) o.add(facets[fi], Int(eps[fi]));
    report.orientation_chain = std::move(o);
  }
  return report;
}

const Simplex& Subdivision::vertex_face(Vertex v) const {
  if (v < 0 || v >= static_cast<Vertex>(vertex_faces_.size())) {
    throw domain_error("subdivision vertex out of range");
  }
  return vertex_faces_[static_cast<size_t>(v)];
}

SimplicialChain Subdivision::map_chain(const SimplicialChain& x) const {
  SimplicialChain out(x.ring(), x.degree());
  for (const auto& [s, c] : x.terms()) {
    size_t n = s.size();
    std::vector<size_t> perm(n);
    for (size_t i = 0; i < n; ++i) perm[i] = i;
    do {
      int inversions = 0;
      for (size_t i = 0; i < n; ++i) {
        for (size_t j = i + 1; j < n; ++j) {
          if (perm[i] > perm[j]) ++inversions;
        }
      }
      Simplex flag;
      flag.reserve(n);
      Simplex prefix;
      for (size_t i = 0; i < n; ++i) {
        prefix.push_back(s[perm[i]]);
        std::sort(prefix.begin(), prefix.end());
        flag.push_back(face_vertex_.at(prefix));
      }
      // Flag vertices are ordered by face dimension, which is the vertex
      // order of the subdivision, so `flag` is already sorted.
      out.add(flag, (inversions % 2 == 0) ? c : x.ring().neg(c));
    } while (std::next_permutation(perm.begin(), perm.end()));
  }
  return out;
}

Subdivision barycentric_subdivision(const SimplicialComplex& X, const GroupAction* action) {
  Subdivision sd;
  // One vertex per nonempty face, ordered by (dimension, face).
  for (int dim = 0; dim <= X.dimension(); ++dim) {
    for (const Simplex& f : X.faces(dim)) {
      sd.face_vertex_[f];  // placeholder, filled below
      sd.vertex_faces_.push_back(f);
    }
  }
  std::stable_sort(sd.vertex_faces_.begin(), sd.vertex_faces_.end(),
                   [](const Simplex& a, const Simplex& b) {
                     if (a.size() != b.size()) return a.size() < b.size();
                     return a < b;
                   });
  std::vector<std::string> ids;
  ids.reserve(sd.vertex_faces_.size());
  for (size_t i = 0; i < sd.vertex_faces_.size(); ++i) {
    const Simplex& f = sd.vertex_faces_[i];
    sd.face_vertex_[f] = static_cast<Vertex>(i);
    std::string id = "[";
    for (size_t j = 0; j < f.size(); ++j) {
      if (j) id += ",";
      id += X.vertex_id(f[j]);
    }
    id += "]";
    ids.push_back(std::move(id));
  }

  std::vector<Simplex> facets;
  for (const Simplex& f : X.facets()) {
    size_t n = f.size();
    std::vector<size_t> perm(n);
    for (size_t i = 0; i < n; ++i) perm[i] = i;
    do {
      Simplex flag;
      flag.reserve(n);
      Simplex prefix;
      for (size_t i = 0; i < n; ++i) {
        prefix.push_back(f[perm[i]]);
        std::sort(prefix.begin(), prefix.end());
        flag.push_back(sd.face_vertex_.at(prefix));
      }
      facets.push_back(std::move(flag));
    } while (std::next_permutation(perm.begin(), perm.end()));
  }
  sd.complex_ = SimplicialComplex::from_indexed(std::move(ids), std::move(facets));

  if (action) {
    std::vector<Vertex> gen(sd.vertex_faces_.size());
    for (size_t i = 0; i < sd.vertex_faces_.size(); ++i) {
      auto [img, sign] = action->apply_simplex(sd.vertex_faces_[i], 1);
      (void)sign;
      gen[i] = sd.face_vertex_.at(img);
    }
    sd.action_.emplace(sd.complex_, action->k(), std::move(gen));
  }
  return sd;
}

KGonSphere k_gon_join_sphere(int k, int m, long long facet_cap) {
  if (k <= 2) throw domain_error("k-gon join sphere requires k > 2");
  if (m < 0) throw domain_error("m must be >= 0");
  checked_power(k, m + 1, facet_cap);

  // Copies 1..m+1, each a k-gon on vertices (position, copy) with edges
  // {j, j+1 mod k}; id "s<position>c<copy>".
  std::vector<std::string> ids;
  for (int copy = 1; copy <= m + 1; ++copy) {
    for (int j = 0; j < k; ++j) ids.push_back(join_vertex_id(j, copy));
  }
  auto vid = [&](int j, int copy) { return (copy - 1) * k + j; };

  std::vector<Simplex> facets;
  std::vector<int> edge(static_cast<size_t>(m + 1), 0);  // chosen edge start per copy
  while (true) {
    Simplex f;
    for (int copy = 1; copy <= m + 1; ++copy) {
      int e = edge[static_cast<size_t>(copy - 1)];
      f.push_back(vid(e, copy));
      f.push_back(vid((e + 1) % k, copy));
    }
    std::sort(f.begin(), f.end());
    facets.push_back(std::move(f));
    int i = m;
    while (i >= 0 && edge[static_cast<size_t>(i)] == k - 1) {
      edge[static_cast<size_t>(i)] = 0;
      --i;
    }
    if (i < 0) break;
    ++edge[static_cast<size_t>(i)];
  }

  SimplicialComplex X = SimplicialComplex::from_indexed(std::move(ids), std::move(facets));
  GroupAction a = sign_shift_action(X, k);

  Ring z = Ring::integers();
  KGonSphere out{std::move(X), std::move(a), {}, {}};
  for (int i = 0; i <= m; ++i) {
    int copy = (m - i) + 1;  // u^i lives in the (m-i)-th copy
    Vertex u = out.complex.vertex_index(join_vertex_id(0, copy));
    out.u.push_back(u);
    SimplicialChain w(z, 1);
    w.add({vid(0, copy), vid(1, copy)}, 1);
    out.w.push_back(std::move(w));
  }
  return out;
}

}  // namespace zks
