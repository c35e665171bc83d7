#include "domideal/graph.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <limits>
#include <sstream>
#include <stdexcept>

#include "domideal/errors.hpp"

namespace domideal {

namespace {

constexpr int kMaxParseVertices = 100000;

}  // namespace

Graph::Graph(int n, std::vector<std::pair<int, int>> edge_list) : n_(n) {
    if (n < 0) throw std::invalid_argument("Graph: negative vertex count");
    for (auto& [a, b] : edge_list) {
        if (a == b) throw std::invalid_argument("Graph: loop edge");
        if (a > b) std::swap(a, b);
        if (a < 0 || b >= n) throw std::invalid_argument("Graph: edge endpoint out of range");
    }
    std::sort(edge_list.begin(), edge_list.end());
    edge_list.erase(std::unique(edge_list.begin(), edge_list.end()), edge_list.end());
    edges_ = std::move(edge_list);

    adj_.assign(static_cast<std::size_t>(n), {});
    for (const auto& [a, b] : edges_) {
        adj_[static_cast<std::size_t>(a)].push_back(b);
        adj_[static_cast<std::size_t>(b)].push_back(a);
    }
    for (auto& nbrs : adj_) std::sort(nbrs.begin(), nbrs.end());
}

std::span<const int> Graph::neighbors(int v) const {
    if (v < 0 || v >= n_) throw std::out_of_range("Graph: vertex index out of range");
    return adj_[static_cast<std::size_t>(v)];
}

int Graph::degree(int v) const {
    return static_cast<int>(neighbors(v).size());
}

bool Graph::has_edge(int u, int v) const {
    auto nbrs = neighbors(u);
    if (v < 0 || v >= n_) throw std::out_of_range("Graph: vertex index out of range");
    return std::binary_search(nbrs.begin(), nbrs.end(), v);
}

Graph parse_edge_list(std::string_view text) {
    std::optional<int> declared;
    std::vector<std::pair<int, int>> edges;
    int lineno = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t nl = text.find('\n', pos);
        std::string_view line = text.substr(pos, nl == std::string_view::npos ? text.size() - pos : nl - pos);
        pos = (nl == std::string_view::npos) ? text.size() + 1 : nl + 1;
        ++lineno;

        if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
        std::size_t first = line.find_first_not_of(" \t");
        if (first == std::string_view::npos) continue;
        if (line[first] == '#') continue;

        std::istringstream is{std::string(line)};
        if (!declared) {
            long long n;
            std::string extra;
            if (!(is >> n) || (is >> extra)) {
                throw ParseError("line " + std::to_string(lineno) + ": expected vertex count");
            }
            if (n < 0 || n > kMaxParseVertices) {
                throw ParseError("line " + std::to_string(lineno) + ": vertex count out of range");
            }
            declared = static_cast<int>(n);
            continue;
        }

        long long a, b;
        std::string extra;
        if (!(is >> a >> b) || (is >> extra)) {
            throw ParseError("line " + std::to_string(lineno) + ": expected edge \"i j\"");
        }
        if (a < 1 || a > *declared || b < 1 || b > *declared) {
            throw ParseError("line " + std::to_string(lineno) + ": vertex index out of range (n=" +
                             std::to_string(*declared) + ")");
        }
        if (a == b) {
            throw ParseError("line " + std::to_string(lineno) + ": loop edge X" + std::to_string(a) +
                             "X" + std::to_string(b));
        }
        edges.emplace_back(static_cast<int>(a - 1), static_cast<int>(b - 1));
    }
    if (!declared) throw ParseError("missing vertex count line");
    return Graph(*declared, std::move(edges));
}

std::string to_edge_list(const Graph& g) {
    std::string out = std::to_string(g.vertex_count());
    out.push_back('\n');
    for (const auto& [a, b] : g.edges()) {
        out += std::to_string(a + 1);
        out.push_back(' ');
        out += std::to_string(b + 1);
        out.push_back('\n');
    }
    return out;
}

VertexSet closed_neighborhood(const Graph& g, int v) {
    VertexSet s(g.vertex_count());
    s.set(v);
    for (int u : g.neighbors(v)) s.set(u);
    return s;
}

bool is_dominating(const Graph& g, const VertexSet& s) {
    if (s.universe() != g.vertex_count()) {
        throw std::invalid_argument("is_dominating: universe size mismatch");
    }
    for (int v = 0; v < g.vertex_count(); ++v) {
        if (s.test(v)) continue;
        bool hit = false;
        for (int u : g.neighbors(v)) {
            if (s.test(u)) {
                hit = true;
                break;
            }
        }
        if (!hit) return false;
    }
    return true;
}

bool is_vertex_cover(const Graph& g, const VertexSet& s) {
    if (s.universe() != g.vertex_count()) {
        throw std::invalid_argument("is_vertex_cover: universe size mismatch");
    }
    for (const auto& [a, b] : g.edges()) {
        if (!s.test(a) && !s.test(b)) return false;
    }
    return true;
}

bool has_isolated_vertex(const Graph& g) {
    for (int v = 0; v < g.vertex_count(); ++v) {
        if (g.degree(v) == 0) return true;
    }
    return false;
}

bool is_connected(const Graph& g) {
    int n = g.vertex_count();
    if (n == 0) return true;
    std::vector<char> seen(static_cast<std::size_t>(n), 0);
    std::deque<int> queue{0};
    seen[0] = 1;
    int visited = 1;
    while (!queue.empty()) {
        int v = queue.front();
        queue.pop_front();
        for (int u : g.neighbors(v)) {
            if (!seen[static_cast<std::size_t>(u)]) {
                seen[static_cast<std::size_t>(u)] = 1;
                ++visited;
                queue.push_back(u);
            }
        }
    }
    return visited == n;
}

bool is_tree(const Graph& g) {
    return g.vertex_count() >= 1 && g.edge_count() == g.vertex_count() - 1 && is_connected(g);
}

bool is_valid_matching(const Graph& g, const Matching& m) {
    VertexSet used(g.vertex_count());
    for (const auto& [a, b] : m.pairs) {
        if (a < 0 || a >= g.vertex_count() || b < 0 || b >= g.vertex_count()) return false;
        if (!g.has_edge(a, b)) return false;
        if (used.test(a) || used.test(b)) return false;
        used.set(a);
        used.set(b);
    }
    return true;
}

std::optional<std::pair<VertexSet, VertexSet>> bipartition(const Graph& g) {
    int n = g.vertex_count();
    std::vector<int> color(static_cast<std::size_t>(n), -1);
    for (int start = 0; start < n; ++start) {
        if (color[static_cast<std::size_t>(start)] != -1) continue;
        color[static_cast<std::size_t>(start)] = 0;
        std::deque<int> queue{start};
        while (!queue.empty()) {
            int v = queue.front();
            queue.pop_front();
            for (int u : g.neighbors(v)) {
                if (color[static_cast<std::size_t>(u)] == -1) {
                    color[static_cast<std::size_t>(u)] = 1 - color[static_cast<std::size_t>(v)];
                    queue.push_back(u);
                } else if (color[static_cast<std::size_t>(u)] == color[static_cast<std::size_t>(v)]) {
                    return std::nullopt;
                }
            }
        }
    }
    VertexSet side1(n), side2(n);
    for (int v = 0; v < n; ++v) {
        (color[static_cast<std::size_t>(v)] == 0 ? side1 : side2).set(v);
    }
    return std::make_pair(std::move(side1), std::move(side2));
}

namespace {

Matching sorted_matching(std::vector<std::pair<int, int>> pairs) {
    for (auto& [a, b] : pairs) {
        if (a > b) std::swap(a, b);
    }
    std::sort(pairs.begin(), pairs.end());
    return Matching{std::move(pairs)};
}

Matching hopcroft_karp(const Graph& g, const VertexSet& left) {
    constexpr int kInf = std::numeric_limits<int>::max();
    int n = g.vertex_count();
    std::vector<int> match(static_cast<std::size_t>(n), -1);
    std::vector<int> dist(static_cast<std::size_t>(n), kInf);
    std::vector<int> left_vertices = left.members();

    auto bfs = [&]() {
        std::deque<int> queue;
        for (int u : left_vertices) {
            if (match[static_cast<std::size_t>(u)] == -1) {
                dist[static_cast<std::size_t>(u)] = 0;
                queue.push_back(u);
            } else {
                dist[static_cast<std::size_t>(u)] = kInf;
            }
        }
        bool reachable_free = false;
        while (!queue.empty()) {
            int u = queue.front();
            queue.pop_front();
            for (int w : g.neighbors(u)) {
                int next = match[static_cast<std::size_t>(w)];
                if (next == -1) {
                    reachable_free = true;
                } else if (dist[static_cast<std::size_t>(next)] == kInf) {
                    dist[static_cast<std::size_t>(next)] = dist[static_cast<std::size_t>(u)] + 1;
                    queue.push_back(next);
                }
            }
        }
        return reachable_free;
    };

    std::function<bool(int)> dfs = [&](int u) {
        for (int w : g.neighbors(u)) {
            int next = match[static_cast<std::size_t>(w)];
            if (next == -1 ||
                (dist[static_cast<std::size_t>(next)] == dist[static_cast<std::size_t>(u)] + 1 && dfs(next))) {
                match[static_cast<std::size_t>(u)] = w;
                match[static_cast<std::size_t>(w)] = u;
                return true;
            }
        }
        dist[static_cast<std::size_t>(u)] = kInf;
        return false;
    };

    while (bfs()) {
        for (int u : left_vertices) {
            if (match[static_cast<std::size_t>(u)] == -1) dfs(u);
        }
    }

    std::vector<std::pair<int, int>> pairs;
    for (int u : left_vertices) {
        if (match[static_cast<std::size_t>(u)] != -1) {
            pairs.emplace_back(u, match[static_cast<std::size_t>(u)]);
        }
    }
    return sorted_matching(std::move(pairs));
}

// Branch on each vertex in index order: leave it unmatched or match it with a
// higher-indexed free neighbor. Prunes branches that cannot beat the best.
struct ExhaustiveMatcher {
    const Graph& g;
    std::vector<char> used;
    std::vector<std::pair<int, int>> current, best;

    explicit ExhaustiveMatcher(const Graph& graph)
        : g(graph), used(static_cast<std::size_t>(graph.vertex_count()), 0) {}

    void search(int v) {
        int n = g.vertex_count();
        while (v < n && used[static_cast<std::size_t>(v)]) ++v;
        if (static_cast<int>(current.size()) + (n - v) / 2 <= static_cast<int>(best.size())) return;
        if (v >= n) {
            if (current.size() > best.size()) best = current;
            return;
        }
        for (int u : g.neighbors(v)) {
            if (u > v && !used[static_cast<std::size_t>(u)]) {
                used[static_cast<std::size_t>(v)] = used[static_cast<std::size_t>(u)] = 1;
                current.emplace_back(v, u);
                search(v + 1);
                current.pop_back();
                used[static_cast<std::size_t>(v)] = used[static_cast<std::size_t>(u)] = 0;
            }
        }
        search(v + 1);
    }
};

}  // namespace

Matching maximum_matching(const Graph& g) {
    auto parts = bipartition(g);
    if (parts) return hopcroft_karp(g, parts->first);
    if (g.vertex_count() > kMaxExhaustiveMatching) {
        throw ScaleLimitError("maximum_matching: non-bipartite graph exceeds " +
                              std::to_string(kMaxExhaustiveMatching) + " vertices");
    }
    ExhaustiveMatcher matcher(g);
    matcher.search(0);
    return sorted_matching(std::move(matcher.best));
}

Graph corona(const Graph& g) {
    int n = g.vertex_count();
    std::vector<std::pair<int, int>> edges = g.edges();
    edges.reserve(edges.size() + static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) edges.emplace_back(v, v + n);
    return Graph(2 * n, std::move(edges));
}

std::optional<Matching> recognize_corona(const Graph& h) {
    int n = h.vertex_count();
    if (n % 2 != 0) return std::nullopt;

    std::vector<char> matched(static_cast<std::size_t>(n), 0);
    std::vector<std::pair<int, int>> pairs;

    for (int v = 0; v < n; ++v) {
        if (h.degree(v) == 0) return std::nullopt;
    }

    // K2 components pair their two leaves.
    for (const auto& [a, b] : h.edges()) {
        if (h.degree(a) == 1 && h.degree(b) == 1) {
            pairs.emplace_back(a, b);
            matched[static_cast<std::size_t>(a)] = matched[static_cast<std::size_t>(b)] = 1;
        }
    }

    // Every other vertex of degree >= 2 must take a whisker: its lowest-index
    // leaf neighbor. A leaf can only be matched through its unique neighbor,
    // so leftovers below make the pairing impossible.
    for (int v = 0; v < n; ++v) {
        if (h.degree(v) < 2) continue;
        int leaf = -1;
        for (int u : h.neighbors(v)) {
            if (h.degree(u) == 1) {
                leaf = u;
                break;
            }
        }
        if (leaf == -1) return std::nullopt;
        pairs.emplace_back(v, leaf);
        matched[static_cast<std::size_t>(v)] = matched[static_cast<std::size_t>(leaf)] = 1;
    }

    for (int v = 0; v < n; ++v) {
        if (!matched[static_cast<std::size_t>(v)]) return std::nullopt;
    }
    return sorted_matching(std::move(pairs));
}

std::uint64_t SplitMix64::below(std::uint64_t bound) {
    if (bound == 0) throw std::invalid_argument("SplitMix64::below: zero bound");
    std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                          (std::numeric_limits<std::uint64_t>::max() % bound + 1) % bound;
    std::uint64_t value;
    do {
        value = next();
    } while (value > limit);
    return value % bound;
}

Graph decode_prufer(int n, std::span<const int> sequence) {
    if (n < 1) throw std::invalid_argument("decode_prufer: need at least one vertex");
    if (static_cast<int>(sequence.size()) != std::max(0, n - 2)) {
        throw std::invalid_argument("decode_prufer: sequence length must be n-2");
    }
    if (n == 1) return Graph(1);

    std::vector<int> degree(static_cast<std::size_t>(n), 1);
    for (int a : sequence) {
        if (a < 0 || a >= n) throw std::invalid_argument("decode_prufer: label out of range");
        ++degree[static_cast<std::size_t>(a)];
    }

    std::vector<std::pair<int, int>> edges;
    edges.reserve(static_cast<std::size_t>(n - 1));
    int ptr = 0;
    while (degree[static_cast<std::size_t>(ptr)] != 1) ++ptr;
    int leaf = ptr;
    for (int a : sequence) {
        edges.emplace_back(leaf, a);
        if (--degree[static_cast<std::size_t>(a)] == 1 && a < ptr) {
            leaf = a;
        } else {
            ++ptr;
            while (degree[static_cast<std::size_t>(ptr)] != 1) ++ptr;
            leaf = ptr;
        }
    }
    edges.emplace_back(leaf, n - 1);
    return Graph(n, std::move(edges));
}

Graph random_tree(int n, std::uint64_t seed) {
    if (n < 1) throw std::invalid_argument("random_tree: need at least one vertex");
    if (n <= 2) return decode_prufer(n, {});
    SplitMix64 rng(seed);
    std::vector<int> seq(static_cast<std::size_t>(n - 2));
    for (int& a : seq) a = static_cast<int>(rng.below(static_cast<std::uint64_t>(n)));
    return decode_prufer(n, seq);
}

Graph random_graph(int n, std::uint64_t seed) {
    if (n < 0) throw std::invalid_argument("random_graph: negative vertex count");
    SplitMix64 rng(seed);
    double p = 0.15 + 0.70 * rng.unit();
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            if (rng.unit() < p) edges.emplace_back(i, j);
        }
    }
    return Graph(n, std::move(edges));
}

std::uint64_t TreeEnumerator::tree_count(int n) {
    if (n < 1) throw std::invalid_argument("TreeEnumerator: need at least one vertex");
    if (n <= 2) return 1;
    std::uint64_t total = 1;
    for (int i = 0; i < n - 2; ++i) total *= static_cast<std::uint64_t>(n);
    return total;
}

TreeEnumerator::TreeEnumerator(int n, int cap) : TreeEnumerator(n, 0, tree_count(n), cap) {}

TreeEnumerator::TreeEnumerator(int n, std::uint64_t begin, std::uint64_t end, int cap)
    : n_(n), index_(begin), end_(end) {
    if (n < 1) throw std::invalid_argument("TreeEnumerator: need at least one vertex");
    if (n > cap) {
        throw ScaleLimitError("TreeEnumerator: n=" + std::to_string(n) + " exceeds cap " +
                              std::to_string(cap));
    }
    if (end_ > tree_count(n)) end_ = tree_count(n);
}

std::optional<Graph> TreeEnumerator::next() {
    if (index_ >= end_) return std::nullopt;
    std::uint64_t idx = index_++;
    if (n_ <= 2) return decode_prufer(n_, {});
    // Digits of idx in base n, most significant first: lexicographic order.
    std::vector<int> seq(static_cast<std::size_t>(n_ - 2));
    for (int i = n_ - 3; i >= 0; --i) {
        seq[static_cast<std::size_t>(i)] = static_cast<int>(idx % static_cast<std::uint64_t>(n_));
        idx /= static_cast<std::uint64_t>(n_);
    }
    return decode_prufer(n_, seq);
}

}  // namespace domideal
