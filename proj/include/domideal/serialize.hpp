#pragma once

#include <string>

#include <json.hpp>

#include "domideal/antichain.hpp"
#include "domideal/graph.hpp"
#include "domideal/ideal.hpp"
#include "domideal/vertex_set.hpp"

namespace domideal {

// 1-based display label: vertex 0 is "X1".
std::string vertex_label(int v);

std::string render_vertex_set(const VertexSet& s);   // "{X1, X2, X3}"
std::string render_monomial(const Monomial& m);      // "X1*X4"
std::string render_component(const VertexSet& s);    // "(X1, X2, X3)"
std::string render_ideal(const MonomialIdeal& i);    // "(X1*X4, X2*X5, X3*X6)"

// JSON forms mirror the text renderings as arrays of 1-based indices.
nlohmann::json set_to_json(const VertexSet& s);
nlohmann::json antichain_to_json(const Antichain& a);
nlohmann::json ideal_to_json(const MonomialIdeal& i);
nlohmann::json graph_to_json(const Graph& g);

}  // namespace domideal
