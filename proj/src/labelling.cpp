#include "zks/labelling.hpp"

#include <algorithm>
#include <random>
#include <set>

namespace zks {

Labelling::Labelling(int k, std::vector<VertexLabel> labels) : k_(k), labels_(std::move(labels)) {
  if (k < 2) throw domain_error("labelling needs k >= 2");
  for (const VertexLabel& l : labels_) {
    if (l.sign < 0 || l.sign >= k) throw domain_error("label sign out of range [0, k)");
    if (l.color < 1) throw domain_error("label color must be >= 1");
  }
}

Labelling Labelling::tautological(const SimplicialComplex& X, int k) {
  std::vector<VertexLabel> labels(static_cast<size_t>(X.vertex_count()));
  for (Vertex v = 0; v < X.vertex_count(); ++v) {
    auto sc = parse_join_vertex(X.vertex_id(v));
    if (!sc) {
      throw format_error("vertex id '" + X.vertex_id(v) + "' is not a join vertex");
    }
    labels[static_cast<size_t>(v)] = {sc->first, sc->second};
  }
  return Labelling(k, std::move(labels));
}

const VertexLabel& Labelling::at(Vertex v) const {
  if (v < 0 || v >= size()) throw domain_error("unlabelled vertex index " + std::to_string(v));
  return labels_[static_cast<size_t>(v)];
}

Labelling Labelling::shifted(int j) const {
  if (j < 0 || j >= k_) throw domain_error("shift exponent out of range [0, k)");
  std::vector<VertexLabel> labels = labels_;
  for (VertexLabel& l : labels) l.sign = (l.sign + j) % k_;
  return Labelling(k_, std::move(labels));
}

AdmissibilityReport check_admissible(const SimplicialComplex& X, const Labelling& l) {
  if (l.size() != X.vertex_count()) {
    throw precondition_error("labelling does not cover every vertex");
  }
  AdmissibilityReport report;
  for (const Simplex& e : X.faces(1)) {
    const VertexLabel& a = l.at(e[0]);
    const VertexLabel& b = l.at(e[1]);
    if (a.color == b.color && a.sign != b.sign) {
      report.ok = false;
      report.violations.emplace_back(e[0], e[1]);
    }
  }
  return report;
}

EquivarianceReport check_equivariant(const SimplicialComplex& X, const GroupAction& a,
                                     const Labelling& l) {
  if (l.size() != X.vertex_count()) {
    throw precondition_error("labelling does not cover every vertex");
  }
  if (l.k() != a.k()) throw dimension_error("labelling and action disagree on k");
  EquivarianceReport report;
  for (Vertex v = 0; v < X.vertex_count(); ++v) {
    const VertexLabel& lv = l.at(v);
    const VertexLabel& lg = l.at(a.apply_vertex(v, 1));
    if (lg.color != lv.color || lg.sign != (lv.sign + 1) % a.k()) {
      report.ok = false;
      report.violations.push_back(v);
    }
  }
  return report;
}

StandardChain pattern_map(const SimplicialComplex& X, const SimplicialChain& x,
                          const Labelling& l) {
  if (l.size() != X.vertex_count()) {
    throw precondition_error("labelling does not cover every vertex");
  }
  require_supported(X, x);
  // Admissibility on the support: all vertex pairs of a support simplex are
  // edges of X.
  for (const auto& [s, c] : x.terms()) {
    (void)c;
    for (size_t i = 0; i < s.size(); ++i) {
      for (size_t j = i + 1; j < s.size(); ++j) {
        const VertexLabel& a = l.at(s[i]);
        const VertexLabel& b = l.at(s[j]);
        if (a.color == b.color && a.sign != b.sign) {
          throw precondition_error("labelling is inadmissible on support simplex " +
                                   X.simplex_str(s));
        }
      }
    }
  }

  StandardChain out(l.k(), x.ring(), x.degree());
  for (const auto& [s, c] : x.terms()) {
    size_t n = s.size();
    std::vector<size_t> order(n);
    for (size_t i = 0; i < n; ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](size_t a, size_t b) {
      return l.at(s[a]).color < l.at(s[b]).color;
    });
    bool distinct = true;
    for (size_t i = 1; i < n; ++i) {
      if (l.at(s[order[i]]).color == l.at(s[order[i - 1]]).color) {
        distinct = false;
        break;
      }
    }
    if (!distinct) continue;
    int inversions = 0;
    for (size_t i = 0; i < n; ++i) {
      for (size_t j = i + 1; j < n; ++j) {
        if (order[i] > order[j]) ++inversions;
      }
    }
    std::vector<int> entries(n);
    for (size_t i = 0; i < n; ++i) entries[i] = l.at(s[order[i]]).sign;
    Int coeff = (inversions % 2 == 0) ? c : x.ring().neg(c);
    out.add_tensor(TensorElement(l.k(), std::move(entries)), coeff);
  }
  return out;
}

namespace {

// Deterministic helper around the standard engine; avoids distribution
// classes, whose output is not pinned by the standard.
struct Rng {
  std::mt19937_64 gen;
  explicit Rng(std::uint64_t seed) : gen(seed) {}
  int below(int n) { return static_cast<int>(gen() % static_cast<std::uint64_t>(n)); }
  template <typename T>
  void shuffle(std::vector<T>& v) {
    for (size_t i = v.size(); i > 1; --i) {
      std::swap(v[i - 1], v[static_cast<size_t>(below(static_cast<int>(i)))]);
    }
  }
};

}  // namespace

namespace {

std::vector<std::vector<Vertex>> adjacency(const SimplicialComplex& X) {
  std::vector<std::vector<Vertex>> adj(static_cast<size_t>(X.vertex_count()));
  for (const Simplex& e : X.faces(1)) {
    adj[static_cast<size_t>(e[0])].push_back(e[1]);
    adj[static_cast<size_t>(e[1])].push_back(e[0]);
  }
  return adj;
}

bool compatible(const VertexLabel& a, const VertexLabel& b) {
  return a.color != b.color || a.sign == b.sign;
}

}  // namespace

Labelling random_labelling(const SimplicialComplex& X, int k, int color_count,
                           LabellingMode mode, std::uint64_t seed, const GroupAction* action,
                           int max_rounds) {
  if (color_count < 1) throw domain_error("color_count must be >= 1");
  if (k < 2) throw domain_error("k must be >= 2");
  Rng rng(seed);
  auto adj = adjacency(X);

  if (mode == LabellingMode::admissible) {
    std::vector<VertexLabel> labels(static_cast<size_t>(X.vertex_count()));
    for (VertexLabel& l : labels) l = {rng.below(k), rng.below(color_count) + 1};
    // Repair: resample each violating vertex conditioned on its neighbors'
    // current labels, so a round can only leave conflicts where no local
    // choice existed.
    for (int round = 0; round < max_rounds; ++round) {
      Labelling cand(k, labels);
      auto rep = check_admissible(X, cand);
      if (rep.ok) return cand;
      if (round > 0 && round % 50 == 0) {
        for (VertexLabel& l : labels) l = {rng.below(k), rng.below(color_count) + 1};
        continue;
      }
      std::set<Vertex> violating_set;
      for (auto [a, b] : rep.violations) {
        violating_set.insert(a);
        violating_set.insert(b);
      }
      std::vector<Vertex> violating(violating_set.begin(), violating_set.end());
      rng.shuffle(violating);
      for (Vertex v : violating) {
        std::vector<VertexLabel> choices;
        for (int color = 1; color <= color_count; ++color) {
          for (int sign = 0; sign < k; ++sign) {
            VertexLabel cand_label{sign, color};
            bool ok = true;
            for (Vertex u : adj[static_cast<size_t>(v)]) {
              if (!compatible(cand_label, labels[static_cast<size_t>(u)])) {
                ok = false;
                break;
              }
            }
            if (ok) choices.push_back(cand_label);
          }
        }
        labels[static_cast<size_t>(v)] =
            choices.empty() ? VertexLabel{rng.below(k), rng.below(color_count) + 1}
                            : choices[static_cast<size_t>(rng.below(static_cast<int>(choices.size())))];
      }
    }
    throw generation_error("admissible labelling not found; raise color_count");
  }

  if (!action) throw precondition_error("equivariant mode needs an action");
  if (action->k() != k) throw dimension_error("labelling and action disagree on k");
  action->require_free(X);

  auto orbits = action->orbits(X);
  std::vector<int> orbit_of(static_cast<size_t>(X.vertex_count()), -1);
  std::vector<int> orbit_pos(static_cast<size_t>(X.vertex_count()), 0);
  for (size_t o = 0; o < orbits.size(); ++o) {
    for (size_t j = 0; j < orbits[o].size(); ++j) {
      orbit_of[static_cast<size_t>(orbits[o][j])] = static_cast<int>(o);
      orbit_pos[static_cast<size_t>(orbits[o][j])] = static_cast<int>(j);
    }
  }
  std::vector<VertexLabel> rep_label(orbits.size());
  std::vector<VertexLabel> labels(static_cast<size_t>(X.vertex_count()));
  auto materialize_orbit = [&](size_t o) {
    for (size_t j = 0; j < orbits[o].size(); ++j) {
      labels[static_cast<size_t>(orbits[o][j])] = {
          (rep_label[o].sign + static_cast<int>(j)) % k, rep_label[o].color};
    }
  };
  for (size_t o = 0; o < orbits.size(); ++o) {
    rep_label[o] = {rng.below(k), rng.below(color_count) + 1};
    materialize_orbit(o);
  }
  // Same local repair at orbit granularity: try every (sign, color) for a
  // violating orbit against the current labels of the other orbits.
  for (int round = 0; round < max_rounds; ++round) {
    Labelling cand(k, labels);
    auto rep = check_admissible(X, cand);
    if (rep.ok) return cand;
    if (round > 0 && round % 50 == 0) {
      for (size_t o = 0; o < orbits.size(); ++o) {
        rep_label[o] = {rng.below(k), rng.below(color_count) + 1};
        materialize_orbit(o);
      }
      continue;
    }
    std::set<int> violating_set;
    for (auto [a, b] : rep.violations) {
      violating_set.insert(orbit_of[static_cast<size_t>(a)]);
      violating_set.insert(orbit_of[static_cast<size_t>(b)]);
    }
    std::vector<int> violating(violating_set.begin(), violating_set.end());
    rng.shuffle(violating);
    for (int o : violating) {
      std::vector<VertexLabel> choices;
      for (int color = 1; color <= color_count; ++color) {
        for (int sign = 0; sign < k; ++sign) {
          bool ok = true;
          for (Vertex v : orbits[static_cast<size_t>(o)]) {
            VertexLabel lv{(sign + orbit_pos[static_cast<size_t>(v)]) % k,
                           static_cast<long long>(color)};
            for (Vertex u : adj[static_cast<size_t>(v)]) {
              if (orbit_of[static_cast<size_t>(u)] == o) continue;
              if (!compatible(lv, labels[static_cast<size_t>(u)])) {
                ok = false;
                break;
              }
            }
            if (!ok) break;
          }
          if (ok) choices.push_back({sign, color});
        }
      }
      rep_label[static_cast<size_t>(o)] =
          choices.empty() ? VertexLabel{rng.below(k), rng.below(color_count) + 1}
                          : choices[static_cast<size_t>(rng.below(static_cast<int>(choices.size())))];
      materialize_orbit(static_cast<size_t>(o));
    }
  }
  throw generation_error("equivariant admissible labelling not found; raise color_count");
}

}  // namespace zks
