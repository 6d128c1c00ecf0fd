#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include <json.hpp>

#include "qsymkit/families.hpp"
#include "qsymkit/poset.hpp"
#include "qsymkit/ppartitions.hpp"
#include "qsymkit/qsym.hpp"
#include "qsymkit/sym.hpp"

// JSON and text (de)serialisation. Vertices and poset elements are 1-based in
// every external format and 0-based in memory.
namespace qsym::io {

using Json = nlohmann::json;

// Either kind of element; the basis tag decides which.
using AnyElement = std::variant<QSymElement, SymElement>;

// Parses JSON text; syntax errors become ParseError with line and column.
Json parse_json(std::string_view text, const std::string& source = {});
Json read_json_file(const std::string& path);
std::string read_file(const std::string& path);

Json to_json(const ParamPoly& p);
ParamPoly poly_from_json(const Json& j);

Json to_json(const QSymElement& e);
Json to_json(const SymElement& e);
Json to_json(const AnyElement& e);
// Accepts M|F|Psi and m|p|h|e|s; F terms may use "set" instead of "index".
AnyElement element_from_json(const Json& j);
QSymElement qsym_from_json(const Json& j);

// Canonical text form, e.g. "4/3*q^2*Psi[2,3,1] - p[2,1]/z". Terms written
// with "/z" carry coefficients of Psi_alpha / z_alpha (or p_lambda / z_lambda).
AnyElement parse_element_text(std::string_view text);
ParamPoly parse_poly_text(std::string_view text);
std::string to_text(const AnyElement& e, View view = View::Plain);

Json to_json(const pp::Certificates& c);

Json to_json(const posets::LabeledPoset& p);
// {"n":N,"covers":[[i,j],...],"labels":[...]}; labels default to the canonical
// natural labeling. "covers" may list any strict relations.
posets::LabeledPoset poset_from_json(const Json& j);

Json to_json(const posets::DirectedGraph& g);
posets::DirectedGraph graph_from_json(const Json& j);

Json to_json(const posets::Equivalence& e);
// Elements missing from "blocks" are singletons.
posets::Equivalence equivalence_from_json(const Json& j, int n);

families::Matroid matroid_from_json(const Json& j);

// Indices of the edges of g named by an edge list {"edges":[[i,j],...]} or a
// bare [[i,j],...]. Parallel edges are consumed in order.
std::vector<int> edge_subset_from_json(const Json& j, const posets::DirectedGraph& g);

// Comma separated integers, e.g. "3,3" or "1,0,2".
std::vector<int> parse_int_list(std::string_view text);

// FNV-1a, 64 bit, as 16 hex digits.
std::uint64_t fnv1a(std::string_view data, std::uint64_t seed = 0xcbf29ce484222325ULL);
std::string hex64(std::uint64_t v);

}  // namespace qsym::io
