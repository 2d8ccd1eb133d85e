#ifndef RMF_GRAPH_IO_HPP
#define RMF_GRAPH_IO_HPP

// JSON and Graphviz forms of decorated graphs.
//
//   {"vertices":[{"id":0,"color":"w","weight":0,"root":false}, ...],
//    "edges":[{"id":0,"u":0,"v":1,"weight":2}, ...],
//    "gamma":[1,0] | null,
//    "gamma_edges":[0] | null}
//
// "gamma" is the vertex image array indexed by vertex id. "gamma_edges" is
// optional on input; when absent the edge action is induced from the vertex
// map (see induced_edge_action).

#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"
#include "rmf/decograph.hpp"
#include "rmf/error.hpp"

namespace rmf {

inline nlohmann::json graph_to_json(const DecoratedGraph& G) {
  using nlohmann::json;
  json vs = json::array();
  for (int v = 0; v < G.vertex_count(); ++v) {
    const auto& V = G.vertices[v];
    vs.push_back({{"id", v},
                  {"color", V.color == Color::White ? "w" : "b"},
                  {"weight", V.weight},
                  {"root", V.root}});
  }
  json es = json::array();
  for (int e = 0; e < G.edge_count(); ++e) {
    const auto& E = G.edges[e];
    es.push_back({{"id", e}, {"u", E.u}, {"v", E.v}, {"weight", E.weight}});
  }
  json out = {{"vertices", vs}, {"edges", es}};
  if (G.gamma) {
    out["gamma"] = G.gamma->vertices;
    out["gamma_edges"] = G.gamma->edges;
  } else {
    out["gamma"] = nullptr;
    out["gamma_edges"] = nullptr;
  }
  return out;
}

namespace detail {

inline const nlohmann::json& require(const nlohmann::json& j, const char* field) {
  if (!j.is_object() || !j.contains(field))
    throw DomainError(std::string("graph JSON: missing field '") + field + "'");
  return j.at(field);
}

inline int require_int(const nlohmann::json& j, const char* field) {
  const auto& v = require(j, field);
  if (!v.is_number_integer())
    throw DomainError(std::string("graph JSON: field '") + field + "' must be an integer");
  return v.get<int>();
}

// Items are placed by their "id", which must cover 0..size-1 exactly once.
inline std::vector<const nlohmann::json*> by_id(const nlohmann::json& arr, const char* what) {
  if (!arr.is_array()) throw DomainError(std::string("graph JSON: '") + what + "' must be an array");
  std::vector<const nlohmann::json*> slots(arr.size(), nullptr);
  for (const auto& item : arr) {
    const int id = require_int(item, "id");
    if (id < 0 || id >= static_cast<int>(arr.size()) || slots[id])
      throw DomainError(std::string("graph JSON: bad or duplicate id in '") + what + "'");
    slots[id] = &item;
  }
  return slots;
}

inline std::vector<int> int_array(const nlohmann::json& j, const char* what) {
  if (!j.is_array()) throw DomainError(std::string("graph JSON: '") + what + "' must be an array");
  std::vector<int> out;
  for (const auto& x : j) {
    if (!x.is_number_integer())
      throw DomainError(std::string("graph JSON: '") + what + "' must hold integers");
    out.push_back(x.get<int>());
  }
  return out;
}

}  // namespace detail

inline DecoratedGraph graph_from_json(const nlohmann::json& j) {
  DecoratedGraph G;
  for (const auto* item : detail::by_id(detail::require(j, "vertices"), "vertices")) {
    const auto& c = detail::require(*item, "color");
    if (c != "w" && c != "b") throw DomainError("graph JSON: color must be \"w\" or \"b\"");
    const auto& root = detail::require(*item, "root");
    if (!root.is_boolean()) throw DomainError("graph JSON: root must be a boolean");
    G.vertices.push_back({c == "w" ? Color::White : Color::Black,
                          detail::require_int(*item, "weight"), root.get<bool>()});
  }
  for (const auto* item : detail::by_id(detail::require(j, "edges"), "edges"))
    G.edges.push_back({detail::require_int(*item, "u"), detail::require_int(*item, "v"),
                       detail::require_int(*item, "weight")});
  const auto& gm = detail::require(j, "gamma");
  if (!gm.is_null()) {
    Gamma gamma;
    gamma.vertices = detail::int_array(gm, "gamma");
    if (j.contains("gamma_edges") && !j.at("gamma_edges").is_null())
      gamma.edges = detail::int_array(j.at("gamma_edges"), "gamma_edges");
    else
      gamma.edges = induced_edge_action(G, gamma.vertices);
    G.gamma = std::move(gamma);
  }
  return G;
}

inline DecoratedGraph graph_from_json_text(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw DomainError(std::string("graph JSON: ") + e.what());
  }
  return graph_from_json(j);
}

/// Graphviz: white vertices unfilled, black filled, roots drawn as double
/// circles; vertex labels are genus weights, edge labels sheet counts. Edges
/// fixed by gamma are bold; the vertex involution is listed in a comment.
inline std::string graph_to_dot(const DecoratedGraph& G, const std::string& name = "G") {
  std::ostringstream os;
  os << "graph " << name << " {\n";
  if (G.gamma) {
    os << "  // gamma:";
    for (int v = 0; v < G.vertex_count(); ++v) os << " v" << v << "->v" << G.gamma->vertices[v];
    os << "\n";
  }
  for (int v = 0; v < G.vertex_count(); ++v) {
    const auto& V = G.vertices[v];
    os << "  v" << v << " [label=\"" << V.weight << "\", shape="
       << (V.root ? "doublecircle" : "circle");
    if (V.color == Color::Black)
      os << ", style=filled, fillcolor=black, fontcolor=white";
    else
      os << ", style=filled, fillcolor=white";
    os << "];\n";
  }
  for (int e = 0; e < G.edge_count(); ++e) {
    const auto& E = G.edges[e];
    os << "  v" << E.u << " -- v" << E.v << " [label=\"" << E.weight << "\"";
    if (G.gamma && G.gamma->edges[e] == e) os << ", style=bold";
    os << "];\n";
  }
  os << "}\n";
  return os.str();
}

}  // namespace rmf

#endif  // RMF_GRAPH_IO_HPP
