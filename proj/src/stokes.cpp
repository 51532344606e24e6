#include "zks/stokes.hpp"

#include <algorithm>
#include <set>

namespace zks {

SphereCheck verify_sphere(const GeneralizedSphere& gs) {
  gs.action.require_free(gs.complex);
  for (size_t i = 0; i < gs.chains.size(); ++i) {
    if (gs.chains[i].degree() != static_cast<int>(i)) {
      throw dimension_error("sphere chain " + std::to_string(i) + " has wrong degree");
    }
    if (gs.chains[i].ring() != gs.ring) {
      throw dimension_error("sphere chain over a different ring");
    }
    require_supported(gs.complex, gs.chains[i]);
  }
  for (size_t i = 1; i < gs.chains.size(); ++i) {
    SimplicialChain lhs = chain_boundary(gs.chains[i]);
    SimplicialChain rhs = (i % 2 == 0) ? sigma_times(gs.action, gs.chains[i - 1])
                                       : tau_times(gs.action, gs.chains[i - 1]);
    if (lhs != rhs) return {false, static_cast<int>(i)};
  }
  return {};
}

GeneralizedSphere standard_join_sphere(int k, int d, const Ring& ring) {
  if (d < 0) throw domain_error("sphere degree must be >= 0");
  auto [X, action] = join_complex(k, d + 1);
  // Copies are indexed 0..d here and stored 1-based.
  auto vertex = [&](int sign, int copy) {
    return X.vertex_index(join_vertex_id(sign, copy + 1));
  };

  std::vector<SimplicialChain> chains;
  std::optional<SimplicialChain> tail;  // o_1^{s-1} |><| ... |><| o_1^0
  for (int j = 0; j <= d; ++j) {
    int s = j / 2;
    if (j % 2 == 0) {
      SimplicialChain u(ring, 0);
      u.add({vertex(0, d - 2 * s)}, 1);
      chains.push_back(s == 0 ? u : join_chains(X, u, *tail));
    } else {
      SimplicialChain w(ring, 1);
      Vertex a = vertex(0, d - 2 * s - 1);
      w.add({a, vertex(1, d - 2 * s)}, 1);
      w.add({a, vertex(0, d - 2 * s)}, -1);
      chains.push_back(s == 0 ? w : join_chains(X, w, *tail));
      SimplicialChain cycle = sigma_times(action, w);
      tail = tail ? join_chains(X, cycle, *tail) : cycle;
    }
  }
  GeneralizedSphere gs{std::move(X), std::move(action), ring, std::move(chains)};
  SphereCheck check = verify_sphere(gs);
  if (!check.ok) {
    throw error("sphere construction violates its boundary relations in degree " +
                std::to_string(check.first_failure_degree));
  }
  return gs;
}

namespace {

// Sum, over the stored patterns of a standard chain, of coefficient times
// predicate(pattern tensor).
template <typename Pred>
Int pattern_count(const StandardChain& c, Pred pred) {
  Int total = 0;
  for (const auto& [letters, coeff] : c.terms()) {
    BarWord w(c.k(), letters);
    for (int a = 0; a < c.k(); ++a) {
      const Int& mult = coeff.coeffs()[static_cast<size_t>(a)];
      if (mult == 0) continue;
      if (pred(bar_to_tensor(a, w))) total += mult;
    }
  }
  return c.ring().reduce(total);
}

}  // namespace

StokesReport stokes_report(const SimplicialComplex& X, const SimplicialChain& x,
                           const Labelling& l) {
  int r = x.degree();
  if (r < 1) throw dimension_error("the counting identity needs degree >= 1");
  const Ring& ring = x.ring();
  int k = l.k();

  StandardChain hx = pattern_map(X, x, l);
  StandardChain hdx = pattern_map(X, chain_boundary(x), l);

  GroupRingElement fx = map_to_minimal(hx).value;
  GroupRingElement fdx = map_to_minimal(hdx).value;

  StokesReport rep;
  rep.degree = r;
  rep.ring = ring;
  rep.lhs_alg = fdx.evaluate(0);
  if (r % 2 == 0) {
    rep.rhs_alg = (GroupRingElement::sigma(k, ring) * fx).evaluate(0);
    rep.lhs_count = pattern_count(
        hdx, [&](const TensorElement& t) { return is_strongly_alternating(tensor_prepend(1, t)); });
    rep.rhs_count =
        pattern_count(hx, [&](const TensorElement& t) { return is_strongly_alternating(t); });
  } else {
    rep.rhs_alg = (GroupRingElement::tau(k, ring) * fx).evaluate(0);
    rep.lhs_count = pattern_count(hdx, [&](const TensorElement& t) {
      return t.entries[0] == 0 && is_strongly_alternating(t);
    });
    Int plus = pattern_count(
        hx, [&](const TensorElement& t) { return is_strongly_alternating(tensor_prepend(0, t)); });
    Int minus = pattern_count(
        hx, [&](const TensorElement& t) { return is_strongly_alternating(tensor_prepend(1, t)); });
    rep.rhs_count = ring.sub(plus, minus);
  }
  rep.equal = rep.lhs_count == rep.lhs_alg && rep.lhs_alg == rep.rhs_alg &&
              rep.rhs_alg == rep.rhs_count;
  return rep;
}

Int alpha_value(const SimplicialComplex& X, const SimplicialChain& x, const Labelling& l) {
  StandardChain h = pattern_map(X, x, l);
  GroupRingElement f = map_to_minimal(h).value;
  return (GroupRingElement::sigma(l.k(), x.ring()) * f).evaluate(0);
}

AlphaSequence tucker_invariants(const GeneralizedSphere& gs, const Labelling& l) {
  if (!check_admissible(gs.complex, l).ok) {
    throw precondition_error("labelling is not admissible");
  }
  if (!check_equivariant(gs.complex, gs.action, l).ok) {
    throw precondition_error("labelling is not equivariant");
  }
  AlphaSequence out;
  out.k = gs.action.k();
  out.ring = gs.ring;
  for (const SimplicialChain& x : gs.chains) {
    out.values.push_back(alpha_value(gs.complex, x, l));
  }
  out.alpha0_direct = gs.chains.empty() ? Int(0) : gs.chains[0].coefficient_sum();
  out.alpha0_matches = !out.values.empty() && out.values[0] == out.alpha0_direct;
  out.congruent = true;
  for (const Int& v : out.values) {
    if (!congruent_mod(v, out.values[0], out.k, out.ring)) out.congruent = false;
  }
  return out;
}

std::optional<TensorElement> simplex_pattern(const SimplicialComplex& X, const Simplex& s,
                                             const Labelling& l) {
  (void)X;
  size_t n = s.size();
  std::vector<size_t> order(n);
  for (size_t i = 0; i < n; ++i) order[i] = i;
  std::sort(order.begin(), order.end(),
            [&](size_t a, size_t b) { return l.at(s[a]).color < l.at(s[b]).color; });
  for (size_t i = 1; i < n; ++i) {
    if (l.at(s[order[i]]).color == l.at(s[order[i - 1]]).color) return std::nullopt;
  }
  std::vector<int> entries(n);
  for (size_t i = 0; i < n; ++i) entries[i] = l.at(s[order[i]]).sign;
  return TensorElement(l.k(), std::move(entries));
}

TuckerCountReport subdivided_tucker_counts(int k, int d, int rounds,
                                           const std::vector<std::uint64_t>& seeds,
                                           const Ring& ring, int color_count) {
  if (rounds < 0) throw domain_error("rounds must be >= 0");
  const long long facet_cap = 200000;
  GeneralizedSphere gs = standard_join_sphere(k, d + 1, ring);
  for (int round = 0; round < rounds; ++round) {
    long long factorial = 1;
    for (int i = 2; i <= gs.complex.dimension() + 1; ++i) factorial *= i;
    if (static_cast<long long>(gs.complex.facets().size()) > facet_cap / factorial) {
      throw size_error("subdivision would exceed the facet cap");
    }
    Subdivision sd = barycentric_subdivision(gs.complex, &gs.action);
    std::vector<SimplicialChain> mapped;
    mapped.reserve(gs.chains.size());
    for (const SimplicialChain& x : gs.chains) mapped.push_back(sd.map_chain(x));
    gs = {sd.complex(), *sd.action(), ring, std::move(mapped)};
  }

  TuckerCountReport rep;
  rep.k = k;
  rep.d = d;
  rep.rounds = rounds;
  rep.ring = ring;
  rep.all_congruent_one = true;
  int colors = color_count > 0 ? color_count : gs.complex.dimension() + 3;
  for (std::uint64_t seed : seeds) {
    Labelling l = random_labelling(gs.complex, k, colors, LabellingMode::equivariant_admissible,
                                   seed, &gs.action);
    AlphaSequence alphas = tucker_invariants(gs, l);
    const Int& count = alphas.values[static_cast<size_t>(d + 1)];
    rep.counts.push_back(count);
    if (!alphas.congruent || alphas.values[0] != 1 || !congruent_mod(count, Int(1), k, ring)) {
      rep.all_congruent_one = false;
    }
  }
  return rep;
}

SphereBuildResult sphere_from_homology(const SimplicialComplex& X, const GroupAction& a, int r,
                                       const Ring& ring) {
  if (r < 0) throw domain_error("sphere degree must be >= 0");
  a.require_free(X);
  if (!ring.k_nontrivial(a.k())) {
    throw precondition_error("ring violates kR != R: k is invertible in " + ring.name());
  }

  SphereBuildResult out;
  std::vector<SimplicialChain> chains;
  SimplicialChain x0(ring, 0);
  x0.add(X.faces(0).front(), 1);
  chains.push_back(std::move(x0));

  for (int i = 0; i < r; ++i) {
    SimplicialChain target =
        (i % 2 == 0) ? tau_times(a, chains.back()) : sigma_times(a, chains.back());
    if (i + 1 > X.dimension()) {
      if (target.is_zero()) {
        chains.emplace_back(ring, i + 1);
        continue;
      }
      out.obstruction = {i + 1, std::move(target)};
      return out;
    }
    IntegerMatrix bd = boundary_matrix(X, i + 1);
    auto solution = solve_linear(bd, chain_to_vector(X, target), ring);
    if (!solution) {
      out.obstruction = {i + 1, std::move(target)};
      return out;
    }
    chains.push_back(vector_to_chain(X, i + 1, ring, *solution));
  }
  out.sphere = GeneralizedSphere{X, a, ring, std::move(chains)};
  return out;
}

WitnessReport alternating_simplex_witness(const SimplicialComplex& X, const GroupAction& a,
                                          const Labelling& l, int r, const Ring& ring,
                                          const GeneralizedSphere* sphere) {
  if (!check_admissible(X, l).ok) throw precondition_error("labelling is not admissible");
  if (!check_equivariant(X, a, l).ok) throw precondition_error("labelling is not equivariant");

  WitnessReport rep;
  SphereBuildResult built;
  const GeneralizedSphere* gs = sphere;
  if (!gs) {
    built = sphere_from_homology(X, a, r + 1, ring);
    if (!built.ok()) {
      rep.hypothesis_failure = true;
      rep.note = "no generalized sphere: homology obstruction in degree " +
                 std::to_string(built.obstruction->degree);
      return rep;
    }
    gs = &*built.sphere;
  }
  if (gs->top_degree() < r + 1) {
    throw precondition_error("sphere does not reach degree r+1");
  }

  auto scan = [&](const Simplex& s) -> bool {
    auto pattern = simplex_pattern(X, s, l);
    if (pattern && is_strongly_alternating(*pattern)) {
      rep.found = true;
      rep.witness = s;
      rep.pattern = pattern;
      return true;
    }
    return false;
  };
  for (const auto& [s, c] : gs->chains[static_cast<size_t>(r + 1)].terms()) {
    (void)c;
    if (scan(s)) return rep;
  }
  for (const Simplex& s : X.faces(r + 1)) {
    if (scan(s)) return rep;
  }

  AlphaSequence alphas = tucker_invariants(*gs, l);
  rep.hypothesis_failure = true;
  rep.alphas = alphas.values;
  rep.note = "no strongly alternating (r+1)-simplex although alpha_0 = " +
             alphas.alpha0_direct.str() + "; some hypothesis fails";
  return rep;
}

Labelling orbit_labelling(const SimplicialComplex& X, const GroupAction& a) {
  std::vector<VertexLabel> labels(static_cast<size_t>(X.vertex_count()));
  auto orbits = a.orbits(X);
  for (size_t o = 0; o < orbits.size(); ++o) {
    for (size_t j = 0; j < orbits[o].size(); ++j) {
      labels[static_cast<size_t>(orbits[o][j])] = {static_cast<int>(j) % a.k(),
                                                   static_cast<long long>(o) + 1};
    }
  }
  return Labelling(a.k(), std::move(labels));
}

std::string refutation_stage_name(RefutationStage stage) {
  switch (stage) {
    case RefutationStage::not_simplicial: return "not_simplicial";
    case RefutationStage::not_equivariant: return "not_equivariant";
    case RefutationStage::hypotheses_unmet: return "hypotheses_unmet";
    case RefutationStage::labelling_unavailable: return "labelling_unavailable";
    case RefutationStage::refuted: return "refuted";
    case RefutationStage::inconsistent: return "inconsistent";
  }
  return "unknown";
}

RefutationReport refute_equivariant_map(const SimplicialComplex& X, const GroupAction& ax,
                                        const SimplicialComplex& Y, const GroupAction& ay,
                                        const std::vector<Vertex>& phi, const Ring& ring) {
  if (static_cast<int>(phi.size()) != X.vertex_count()) {
    throw format_error("vertex map must cover every vertex of the source");
  }
  for (Vertex w : phi) {
    if (w < 0 || w >= Y.vertex_count()) throw format_error("vertex map image out of range");
  }
  if (ax.k() != ay.k()) throw dimension_error("actions disagree on k");
  RefutationReport rep;

  // Simpliciality: the image of every facet must be a simplex of Y.
  for (const Simplex& f : X.facets()) {
    std::set<Vertex> image;
    for (Vertex v : f) image.insert(phi[static_cast<size_t>(v)]);
    Simplex img(image.begin(), image.end());
    if (!Y.contains(img)) {
      rep.stage = RefutationStage::not_simplicial;
      rep.note = "facet " + X.simplex_str(f) + " maps to the non-simplex " + Y.simplex_str(img);
      return rep;
    }
  }
  // Equivariance.
  for (Vertex v = 0; v < X.vertex_count(); ++v) {
    if (phi[static_cast<size_t>(ax.apply_vertex(v, 1))] !=
        ay.apply_vertex(phi[static_cast<size_t>(v)], 1)) {
      rep.stage = RefutationStage::not_equivariant;
      rep.note = "map does not commute with the action at vertex " + X.vertex_id(v);
      return rep;
    }
  }

  int r = Y.dimension();
  if (!ring.k_nontrivial(ax.k())) {
    rep.stage = RefutationStage::hypotheses_unmet;
    rep.note = "k is invertible in " + ring.name();
    return rep;
  }
  if (!ax.check_free(X).free || !ay.check_free(Y).free) {
    rep.stage = RefutationStage::hypotheses_unmet;
    rep.note = "action is not free";
    return rep;
  }
  auto homology = reduced_homology(X, ring);
  for (int i = 0; i <= r && i < static_cast<int>(homology.size()); ++i) {
    if (!homology[static_cast<size_t>(i)].trivial()) {
      rep.stage = RefutationStage::hypotheses_unmet;
      rep.note = "reduced homology of the source does not vanish in degree " + std::to_string(i);
      return rep;
    }
  }

  Labelling ly = orbit_labelling(Y, ay);
  if (!check_admissible(Y, ly).ok) {
    rep.stage = RefutationStage::labelling_unavailable;
    rep.note = "orbit labelling of the target is not admissible";
    return rep;
  }

  // Pull back along phi; every simplex of X now sees at most r+1 colors.
  std::vector<VertexLabel> pulled(static_cast<size_t>(X.vertex_count()));
  for (Vertex v = 0; v < X.vertex_count(); ++v) {
    pulled[static_cast<size_t>(v)] = ly.at(phi[static_cast<size_t>(v)]);
  }
  Labelling lx(ax.k(), std::move(pulled));
  if (!check_admissible(X, lx).ok || !check_equivariant(X, ax, lx).ok) {
    rep.stage = RefutationStage::inconsistent;
    rep.note = "pulled-back labelling fails its guaranteed properties";
    return rep;
  }

  WitnessReport witness = alternating_simplex_witness(X, ax, lx, r, ring);
  if (witness.found) {
    rep.stage = RefutationStage::inconsistent;
    rep.note = "witness simplex found despite the color bound; counting identity violated";
    return rep;
  }
  if (!witness.alphas.empty()) {
    rep.alphas = witness.alphas;
    rep.stage = RefutationStage::refuted;
    rep.note = "pulled-back labelling has at most " + std::to_string(r + 1) +
               " colors per simplex, so alpha_{r+1} = 0, contradicting alpha_0 = 1 mod k";
    return rep;
  }
  rep.stage = RefutationStage::hypotheses_unmet;
  rep.note = witness.note;
  return rep;
}

std::vector<std::vector<Vertex>> enumerate_equivariant_vertex_maps(const SimplicialComplex& X,
                                                                   const GroupAction& ax,
                                                                   const SimplicialComplex& Y,
                                                                   const GroupAction& ay) {
  if (ax.k() != ay.k()) throw dimension_error("actions disagree on k");
  auto orbits = ax.orbits(X);
  std::vector<std::vector<Vertex>> out;
  std::vector<int> choice(orbits.size(), 0);
  int ny = Y.vertex_count();
  while (true) {
    std::vector<Vertex> phi(static_cast<size_t>(X.vertex_count()));
    for (size_t o = 0; o < orbits.size(); ++o) {
      Vertex img = static_cast<Vertex>(choice[o]);
      for (size_t j = 0; j < orbits[o].size(); ++j) {
        phi[static_cast<size_t>(orbits[o][j])] =
            ay.apply_vertex(img, static_cast<int>(j) % ay.k());
      }
    }
    out.push_back(std::move(phi));
    size_t i = 0;
    while (i < choice.size() && choice[i] == ny - 1) {
      choice[i] = 0;
      ++i;
    }
    if (i == choice.size()) break;
    ++choice[i];
  }
  return out;
}

InvarianceReport alpha_invariance(const SimplicialComplex& X, const GroupAction& a,
                                  const SimplicialChain& x, const std::vector<Labelling>& ls) {
  require_supported(X, x);
  if (x.degree() >= 1) {
    SimplicialChain scaled_x =
        (x.degree() % 2 == 0) ? tau_times(a, x) : sigma_times(a, x);
    if (!chain_boundary(scaled_x).is_zero()) {
      throw precondition_error(x.degree() % 2 == 0 ? "tau x is not a cycle"
                                                   : "sigma x is not a cycle");
    }
  }
  InvarianceReport rep;
  rep.k = a.k();
  rep.ring = x.ring();
  rep.single_class = true;
  for (const Labelling& l : ls) {
    rep.alphas.push_back(alpha_value(X, x, l));
    if (!congruent_mod(rep.alphas.back(), rep.alphas.front(), rep.k, rep.ring)) {
      rep.single_class = false;
    }
  }
  return rep;
}

}  // namespace zks
