#include "zks/io.hpp"

#include <fstream>
#include <limits>

namespace zks::io {

void check_format(const json& doc) {
  if (!doc.is_object()) throw format_error("document must be a JSON object");
  if (doc.contains("format")) {
    if (!doc["format"].is_number_integer() || doc["format"].get<long long>() != 1) {
      throw format_error("unsupported document format version");
    }
  }
}

json with_format(json doc) {
  doc["format"] = 1;
  return doc;
}

json int_to_json(const Int& v) {
  static const Int lo = std::numeric_limits<long long>::min();
  static const Int hi = std::numeric_limits<long long>::max();
  if (v >= lo && v <= hi) return static_cast<long long>(v);
  return v.str();
}

Int int_from_json(const json& j) {
  if (j.is_number_integer()) return Int(j.get<long long>());
  if (j.is_string()) {
    const std::string& s = j.get_ref<const std::string&>();
    if (s.empty() || s.find_first_not_of("0123456789-") != std::string::npos) {
      throw format_error("bad integer literal '" + s + "'");
    }
    return Int(s);
  }
  throw format_error("expected an integer");
}

json element_to_json(const GroupRingElement& x) {
  json coeffs = json::array();
  for (const Int& c : x.coeffs()) coeffs.push_back(int_to_json(c));
  return json{{"k", x.k()}, {"ring", x.ring().name()}, {"coeffs", coeffs}};
}

GroupRingElement element_from_json(const json& j) {
  int k = j.at("k").get<int>();
  Ring ring = Ring::parse(j.at("ring").get<std::string>());
  std::vector<Int> coeffs;
  for (const json& c : j.at("coeffs")) coeffs.push_back(int_from_json(c));
  return GroupRingElement::from_coeffs(k, ring, std::move(coeffs));
}

json standard_chain_to_json(const StandardChain& c) {
  json terms = json::array();
  for (const auto& [word, coeff] : c.terms()) {
    json jc = json::array();
    for (const Int& x : coeff.coeffs()) jc.push_back(int_to_json(x));
    terms.push_back(json{{"word", word}, {"coeff", jc}});
  }
  return json{{"k", c.k()}, {"ring", c.ring().name()}, {"degree", c.degree()}, {"terms", terms}};
}

StandardChain standard_chain_from_json(const json& j) {
  int k = j.at("k").get<int>();
  Ring ring = Ring::parse(j.at("ring").get<std::string>());
  StandardChain c(k, ring, j.at("degree").get<int>());
  for (const json& t : j.at("terms")) {
    std::vector<int> word = t.at("word").get<std::vector<int>>();
    std::vector<Int> coeffs;
    for (const json& x : t.at("coeff")) coeffs.push_back(int_from_json(x));
    c.add(BarWord(k, std::move(word)), GroupRingElement::from_coeffs(k, ring, std::move(coeffs)));
  }
  return c;
}

json complex_to_json(const SimplicialComplex& X, const GroupAction* action) {
  json doc;
  doc["vertices"] = X.vertex_ids();
  json facets = json::array();
  for (const Simplex& f : X.facets()) {
    json jf = json::array();
    for (Vertex v : f) jf.push_back(X.vertex_id(v));
    facets.push_back(jf);
  }
  doc["facets"] = facets;
  if (action) {
    json gen;
    for (Vertex v = 0; v < X.vertex_count(); ++v) {
      gen[X.vertex_id(v)] = X.vertex_id(action->apply_vertex(v, 1));
    }
    doc["action"] = json{{"k", action->k()}, {"generator", gen}};
  }
  return with_format(std::move(doc));
}

ComplexDocument complex_from_json(const json& j) {
  check_format(j);
  std::vector<std::string> ids = j.at("vertices").get<std::vector<std::string>>();
  std::map<std::string, Vertex> index;
  for (size_t i = 0; i < ids.size(); ++i) {
    auto [it, inserted] = index.emplace(ids[i], static_cast<Vertex>(i));
    (void)it;
    if (!inserted) throw format_error("duplicate vertex id '" + ids[i] + "'");
  }
  std::vector<Simplex> facets;
  for (const json& jf : j.at("facets")) {
    Simplex s;
    for (const json& jv : jf) {
      auto it = index.find(jv.get<std::string>());
      if (it == index.end()) {
        throw format_error("facet vertex '" + jv.get<std::string>() + "' not in vertex list");
      }
      s.push_back(it->second);
    }
    facets.push_back(std::move(s));
  }
  ComplexDocument doc{SimplicialComplex::from_indexed(std::move(ids), std::move(facets)), {}};
  if (j.contains("action")) {
    const json& ja = j.at("action");
    int k = ja.at("k").get<int>();
    std::vector<Vertex> gen(static_cast<size_t>(doc.complex.vertex_count()), -1);
    for (const auto& [from, to] : ja.at("generator").items()) {
      gen[static_cast<size_t>(doc.complex.vertex_index(from))] =
          doc.complex.vertex_index(to.get<std::string>());
    }
    for (Vertex v : gen) {
      if (v < 0) throw format_error("action generator must cover every vertex");
    }
    doc.action.emplace(doc.complex, k, std::move(gen));
  }
  return doc;
}

json chain_to_json(const SimplicialComplex& X, const SimplicialChain& x) {
  json terms = json::array();
  for (const auto& [s, c] : x.terms()) {
    json js = json::array();
    for (Vertex v : s) js.push_back(X.vertex_id(v));
    terms.push_back(json{{"simplex", js}, {"coeff", int_to_json(c)}});
  }
  return json{{"degree", x.degree()}, {"terms", terms}};
}

SimplicialChain chain_from_json(const SimplicialComplex& X, const Ring& ring, const json& j) {
  SimplicialChain x(ring, j.at("degree").get<int>());
  for (const json& t : j.at("terms")) {
    Simplex s;
    for (const json& jv : t.at("simplex")) s.push_back(X.vertex_index(jv.get<std::string>()));
    // Simplices are stored in the complex's vertex order; re-sorting here
    // could silently flip the intended orientation.
    if (!std::is_sorted(s.begin(), s.end())) {
      throw format_error("chain simplex is not in the complex's vertex order");
    }
    x.add(s, int_from_json(t.at("coeff")));
  }
  require_supported(X, x);
  return x;
}

json labelling_to_json(const SimplicialComplex& X, const Labelling& l) {
  json labels;
  for (Vertex v = 0; v < X.vertex_count(); ++v) {
    const VertexLabel& lab = l.at(v);
    labels[X.vertex_id(v)] = json{{"sign", lab.sign}, {"color", lab.color}};
  }
  return with_format(json{{"k", l.k()}, {"labels", labels}});
}

Labelling labelling_from_json(const SimplicialComplex& X, const json& j) {
  check_format(j);
  int k = j.at("k").get<int>();
  std::vector<VertexLabel> labels(static_cast<size_t>(X.vertex_count()));
  std::vector<bool> seen(static_cast<size_t>(X.vertex_count()), false);
  for (const auto& [id, lab] : j.at("labels").items()) {
    Vertex v = X.vertex_index(id);
    labels[static_cast<size_t>(v)] = {lab.at("sign").get<int>(), lab.at("color").get<long long>()};
    seen[static_cast<size_t>(v)] = true;
  }
  for (Vertex v = 0; v < X.vertex_count(); ++v) {
    if (!seen[static_cast<size_t>(v)]) {
      throw format_error("labelling misses vertex '" + X.vertex_id(v) + "'");
    }
  }
  return Labelling(k, std::move(labels));
}

json sphere_to_json(const GeneralizedSphere& gs) {
  json chains = json::array();
  for (const SimplicialChain& x : gs.chains) chains.push_back(chain_to_json(gs.complex, x));
  return with_format(json{{"k", gs.action.k()},
                          {"ring", gs.ring.name()},
                          {"complex", complex_to_json(gs.complex, &gs.action)},
                          {"chains", chains}});
}

GeneralizedSphere sphere_from_json(const json& j) {
  check_format(j);
  Ring ring = Ring::parse(j.at("ring").get<std::string>());
  ComplexDocument doc = complex_from_json(j.at("complex"));
  if (!doc.action) throw format_error("sphere document needs a complex with an action");
  std::vector<SimplicialChain> chains;
  for (const json& jc : j.at("chains")) {
    chains.push_back(chain_from_json(doc.complex, ring, jc));
  }
  for (size_t i = 0; i < chains.size(); ++i) {
    if (chains[i].degree() != static_cast<int>(i)) {
      throw format_error("sphere chain " + std::to_string(i) + " has wrong degree");
    }
  }
  return {std::move(doc.complex), std::move(*doc.action), ring, std::move(chains)};
}

json homology_to_json(const std::vector<HomologyGroup>& groups) {
  json out = json::array();
  for (const HomologyGroup& h : groups) {
    json torsion = json::array();
    for (const Int& t : h.torsion) torsion.push_back(int_to_json(t));
    out.push_back(json{{"rank", h.rank}, {"torsion", torsion}});
  }
  return out;
}

json load_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw format_error("cannot open '" + path + "'");
  json doc;
  try {
    in >> doc;
  } catch (const json::exception& e) {
    throw format_error("cannot parse '" + path + "': " + e.what());
  }
  return doc;
}

void save_file(const std::string& path, const json& doc) {
  std::ofstream out(path);
  if (!out) throw format_error("cannot write '" + path + "'");
  out << dump_document(doc);
}

std::string dump_document(const json& doc) { return doc.dump(2) + "\n"; }

}  // namespace zks::io
