#pragma once

#include <bit>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"

namespace ramsey {

inline constexpr int kMaxGraphVertices = 24;

// Undirected graph on at most 24 vertices, one adjacency bitmask per vertex.
struct SmallGraph {
    int n = 0;
    std::vector<std::uint32_t> adj;

    SmallGraph() = default;
    explicit SmallGraph(int n_) : n(n_), adj(static_cast<size_t>(n_), 0u) {
        if (n_ < 1 || n_ > kMaxGraphVertices)
            throw DomainError("SmallGraph: vertex count must be in [1," +
                              std::to_string(kMaxGraphVertices) + "]");
    }

    static SmallGraph from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
        SmallGraph g(n);
        for (auto [u, v] : edges) g.add_edge(u, v);
        return g;
    }

    static SmallGraph complete(int n) {
        SmallGraph g(n);
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
        return g;
    }

    void add_edge(int u, int v) {
        if (u < 0 || v < 0 || u >= n || v >= n)
            throw DomainError("SmallGraph: edge endpoint out of range");
        if (u == v) throw DomainError("SmallGraph: loops are not allowed");
        adj[static_cast<size_t>(u)] |= 1u << v;
        adj[static_cast<size_t>(v)] |= 1u << u;
    }

    bool has_edge(int u, int v) const { return (adj[static_cast<size_t>(u)] >> v) & 1u; }

    std::uint32_t vertex_mask() const { return (1u << n) - 1u; }

    int edge_count() const {
        int deg_sum = 0;
        for (std::uint32_t m : adj) deg_sum += std::popcount(m);
        return deg_sum / 2;
    }

    std::vector<std::pair<int, int>> edges() const {
        std::vector<std::pair<int, int>> out;
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (has_edge(u, v)) out.emplace_back(u, v);
        return out;
    }

    void validate() const {
        if (n < 1 || n > kMaxGraphVertices || static_cast<int>(adj.size()) != n)
            throw DomainError("SmallGraph: inconsistent vertex count");
        for (int u = 0; u < n; ++u) {
            if (adj[static_cast<size_t>(u)] & ~vertex_mask())
                throw DomainError("SmallGraph: adjacency bits beyond vertex range");
            if ((adj[static_cast<size_t>(u)] >> u) & 1u)
                throw DomainError("SmallGraph: loop on vertex " + std::to_string(u));
            for (int v = u + 1; v < n; ++v)
                if (has_edge(u, v) != ((adj[static_cast<size_t>(v)] >> u) & 1u))
                    throw DomainError("SmallGraph: adjacency not symmetric");
        }
    }
};

namespace detail {

inline void mis_search(const SmallGraph& g, std::uint32_t cand, int size, int& best) {
    if (size + std::popcount(cand) <= best) return;
    if (cand == 0) {
        best = size;
        return;
    }
    // pivot on the max-degree vertex within the candidate set
    int pivot = -1, pivot_deg = -1;
    for (std::uint32_t m = cand; m;) {
        int v = std::countr_zero(m);
        m &= m - 1;
        int d = std::popcount(g.adj[static_cast<size_t>(v)] & cand);
        if (d > pivot_deg) {
            pivot_deg = d;
            pivot = v;
        }
    }
    if (pivot_deg <= 1) {
        // remaining components are isolated vertices and disjoint edges:
        // take all isolated plus one endpoint per edge
        int pairs = 0;
        for (std::uint32_t m = cand; m;) {
            int v = std::countr_zero(m);
            m &= m - 1;
            if (g.adj[static_cast<size_t>(v)] & cand) ++pairs;
        }
        int total = size + std::popcount(cand) - pairs / 2;
        if (total > best) best = total;
        return;
    }
    std::uint32_t closed = g.adj[static_cast<size_t>(pivot)] | (1u << pivot);
    mis_search(g, cand & ~closed, size + 1, best);
    mis_search(g, cand & ~(1u << pivot), size, best);
}

} // namespace detail

// Exact independence number, branch and bound over adjacency bitmasks.
inline int independence_number(const SmallGraph& g) {
    g.validate();
    int best = 0;
    detail::mis_search(g, g.vertex_mask(), 0, best);
    return best;
}

} // namespace ramsey
