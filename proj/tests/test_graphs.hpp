#pragma once

#include "domideal/graph.hpp"

// Shared fixtures: the two worked examples (the 3-vertex-path corona and the
// triangle corona, which share one closed neighborhood ideal) and small
// standard graphs.
namespace fixtures {

// X1-X2-X3 path with whiskers X4, X5, X6.
inline domideal::Graph graph1() {
    return domideal::Graph(6, {{0, 1}, {1, 2}, {0, 3}, {1, 4}, {2, 5}});
}

// Triangle X1X2X3 with whiskers X4, X5, X6.
inline domideal::Graph graph2() {
    return domideal::Graph(6, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 4}, {2, 5}});
}

inline domideal::Graph path_graph(int n) {
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
    return domideal::Graph(n, std::move(edges));
}

inline domideal::Graph cycle_graph(int n) {
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
    return domideal::Graph(n, std::move(edges));
}

inline domideal::Graph edgeless(int n) { return domideal::Graph(n); }

inline domideal::Graph complete_graph(int n) {
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) edges.emplace_back(i, j);
    }
    return domideal::Graph(n, std::move(edges));
}

}  // namespace fixtures
