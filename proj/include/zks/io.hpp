#pragma once

#include <nlohmann/json.hpp>

#include <optional>
#include <string>

#include "zks/homalg.hpp"
#include "zks/labelling.hpp"
#include "zks/resolutions.hpp"
#include "zks/ring.hpp"
#include "zks/simplicial.hpp"
#include "zks/stokes.hpp"

namespace zks::io {

using json = nlohmann::json;

// Documents carry "format": 1; parsers accept a missing field and reject
// anything newer.
void check_format(const json& doc);
json with_format(json doc);

// Arbitrary-precision integers serialize as JSON numbers when they fit in
// 64 bits and as decimal strings otherwise.
json int_to_json(const Int& v);
Int int_from_json(const json& j);

json element_to_json(const GroupRingElement& x);
GroupRingElement element_from_json(const json& j);

json standard_chain_to_json(const StandardChain& c);
StandardChain standard_chain_from_json(const json& j);

struct ComplexDocument {
  SimplicialComplex complex;
  std::optional<GroupAction> action;
};

json complex_to_json(const SimplicialComplex& X, const GroupAction* action = nullptr);
ComplexDocument complex_from_json(const json& j);

json chain_to_json(const SimplicialComplex& X, const SimplicialChain& x);
SimplicialChain chain_from_json(const SimplicialComplex& X, const Ring& ring, const json& j);

json labelling_to_json(const SimplicialComplex& X, const Labelling& l);
Labelling labelling_from_json(const SimplicialComplex& X, const json& j);

json sphere_to_json(const GeneralizedSphere& gs);
GeneralizedSphere sphere_from_json(const json& j);

json homology_to_json(const std::vector<HomologyGroup>& groups);

json load_file(const std::string& path);
void save_file(const std::string& path, const json& doc);
std::string dump_document(const json& doc);

}  // namespace zks::io
