#include "domideal/serialize.hpp"

namespace domideal {

std::string vertex_label(int v) {
    return "X" + std::to_string(v + 1);
}

namespace {

std::string join_members(const VertexSet& s, const char* sep) {
    std::string out;
    bool first = true;
    s.for_each([&](int v) {
        if (!first) out += sep;
        out += vertex_label(v);
        first = false;
    });
    return out;
}

}  // namespace

std::string render_vertex_set(const VertexSet& s) {
    return "{" + join_members(s, ", ") + "}";
}

std::string render_monomial(const Monomial& m) {
    return join_members(m.support, "*");
}

std::string render_component(const VertexSet& s) {
    return "(" + join_members(s, ", ") + ")";
}

std::string render_ideal(const MonomialIdeal& ideal) {
    if (ideal.zero()) return "(0)";
    std::string out = "(";
    bool first = true;
    for (const VertexSet& gen : ideal.generators()) {
        if (!first) out += ", ";
        out += join_members(gen, "*");
        first = false;
    }
    out += ")";
    return out;
}

nlohmann::json set_to_json(const VertexSet& s) {
    nlohmann::json arr = nlohmann::json::array();
    s.for_each([&](int v) { arr.push_back(v + 1); });
    return arr;
}

nlohmann::json antichain_to_json(const Antichain& a) {
    nlohmann::json arr = nlohmann::json::array();
    for (const VertexSet& s : a) arr.push_back(set_to_json(s));
    return arr;
}

nlohmann::json ideal_to_json(const MonomialIdeal& ideal) {
    return nlohmann::json{{"nvars", ideal.nvars()},
                          {"generators", antichain_to_json(ideal.generators())}};
}

nlohmann::json graph_to_json(const Graph& g) {
    nlohmann::json edges = nlohmann::json::array();
    for (const auto& [a, b] : g.edges()) {
        edges.push_back(nlohmann::json::array({a + 1, b + 1}));
    }
    return nlohmann::json{{"n", g.vertex_count()}, {"edges", edges}};
}

}  // namespace domideal
