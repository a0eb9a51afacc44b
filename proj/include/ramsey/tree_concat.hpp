#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <numeric>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "small_graph.hpp"

namespace ramsey {

// Tree on vertices {0..k} whose k edges carry an explicit order: edge i is
// matched against the i-th graph of a concatenation instance.
struct EdgeOrderedTree {
    std::vector<std::pair<int, int>> edges;

    int edge_count() const { return static_cast<int>(edges.size()); }
    int vertex_count() const { return edge_count() + 1; }

    static EdgeOrderedTree path(int k) {
        EdgeOrderedTree t;
        for (int i = 0; i < k; ++i) t.edges.emplace_back(i, i + 1);
        return t;
    }

    static EdgeOrderedTree star(int k) {
        EdgeOrderedTree t;
        for (int i = 0; i < k; ++i) t.edges.emplace_back(0, i + 1);
        return t;
    }

    void validate() const {
        int k = edge_count();
        if (k < 1) throw DomainError("EdgeOrderedTree: need at least one edge");
        std::vector<int> parent(static_cast<size_t>(k) + 1);
        std::iota(parent.begin(), parent.end(), 0);
        auto find = [&](int x) {
            while (parent[static_cast<size_t>(x)] != x) {
                parent[static_cast<size_t>(x)] = parent[static_cast<size_t>(parent[static_cast<size_t>(x)])];
                x = parent[static_cast<size_t>(x)];
            }
            return x;
        };
        for (auto [u, v] : edges) {
            if (u < 0 || v < 0 || u > k || v > k)
                throw DomainError("EdgeOrderedTree: vertex labels must lie in [0,k]");
            if (u == v) throw DomainError("EdgeOrderedTree: loops are not allowed");
            int ru = find(u), rv = find(v);
            if (ru == rv) throw DomainError("EdgeOrderedTree: edges contain a cycle");
            parent[static_cast<size_t>(ru)] = rv;
        }
        // k edges and no cycle on k+1 labels force a spanning tree
    }
};

// Homomorphic copy of t inside the vertex subset w: a map h on tree vertices
// (repeats allowed across non-adjacent tree vertices) such that the image of
// edge i is an edge of graphs[i]. Returns the map indexed by tree vertex, or
// nullopt. Exact backtracking over a traversal order in which every vertex
// after the first attaches to an already-placed one.
inline std::optional<std::vector<int>> find_tree_homomorphism(
    const std::vector<SmallGraph>& graphs, const EdgeOrderedTree& t, std::uint32_t w) {
    t.validate();
    int k = t.edge_count();
    if (static_cast<int>(graphs.size()) != k)
        throw UsageError("find_tree_homomorphism: need one graph per tree edge");
    int n = graphs.front().n;
    for (const auto& g : graphs) {
        g.validate();
        if (g.n != n)
            throw UsageError("find_tree_homomorphism: graphs must share one vertex set");
    }
    w &= graphs.front().vertex_mask();
    if (w == 0) return std::nullopt;

    int nv = t.vertex_count();
    // order tree vertices so that each new one hangs off a placed one
    std::vector<int> order, via_edge(static_cast<size_t>(nv), -1),
        via_parent(static_cast<size_t>(nv), -1);
    std::vector<char> placed(static_cast<size_t>(nv), 0);
    order.push_back(t.edges.front().first);
    placed[static_cast<size_t>(t.edges.front().first)] = 1;
    while (static_cast<int>(order.size()) < nv) {
        bool advanced = false;
        for (int i = 0; i < k; ++i) {
            auto [u, v] = t.edges[static_cast<size_t>(i)];
            if (placed[static_cast<size_t>(u)] && !placed[static_cast<size_t>(v)]) std::swap(u, v);
            if (placed[static_cast<size_t>(u)] || !placed[static_cast<size_t>(v)]) continue;
            placed[static_cast<size_t>(u)] = 1;
            via_edge[static_cast<size_t>(u)] = i;
            via_parent[static_cast<size_t>(u)] = v;
            order.push_back(u);
            advanced = true;
        }
        if (!advanced) throw DomainError("find_tree_homomorphism: tree is not connected");
    }

    std::vector<int> assign(static_cast<size_t>(nv), -1);
    auto backtrack = [&](auto&& self, size_t pos) -> bool {
        if (pos == order.size()) return true;
        int tv = order[pos];
        if (pos == 0) {
            for (int x = 0; x < n; ++x) {
                if (!((w >> x) & 1u)) continue;
                assign[static_cast<size_t>(tv)] = x;
                if (self(self, pos + 1)) return true;
            }
            assign[static_cast<size_t>(tv)] = -1;
            return false;
        }
        int e = via_edge[static_cast<size_t>(tv)];
        int anchor = assign[static_cast<size_t>(via_parent[static_cast<size_t>(tv)])];
        std::uint32_t options = graphs[static_cast<size_t>(e)].adj[static_cast<size_t>(anchor)] & w;
        while (options) {
            int x = std::countr_zero(options);
            options &= options - 1;
            assign[static_cast<size_t>(tv)] = x;
            if (self(self, pos + 1)) return true;
        }
        assign[static_cast<size_t>(tv)] = -1;
        return false;
    };
    if (backtrack(backtrack, 0)) return assign;
    return std::nullopt;
}

enum class OrthoShape { star, path };

inline const char* shape_name(OrthoShape s) { return s == OrthoShape::star ? "star" : "path"; }

struct OrthoFreeResult {
    int max_size = 0;
    std::uint32_t witness = 0;        // bitmask over product points, mixed radix
    std::uint64_t configurations = 0; // distinct forbidden point sets
    std::uint64_t nodes = 0;          // search nodes explored
    bool exhaustive = false;          // full 2^N sweep (guaranteed path for N <= 20)
};

namespace detail {

// All forbidden point sets of the orthogonal shape, as bitmasks over the
// product of the graphs' vertex sets. Coordinate 0 is the least significant
// mixed-radix digit. Each undirected edge contributes both orientations.
inline std::vector<std::uint32_t> orthogonal_configs(const std::vector<SmallGraph>& graphs,
                                                     OrthoShape shape,
                                                     const std::vector<int>& stride) {
    size_t k = graphs.size();
    std::vector<std::vector<std::pair<int, int>>> directed(k);
    for (size_t i = 0; i < k; ++i) {
        for (auto [u, v] : graphs[i].edges()) {
            directed[i].emplace_back(u, v);
            directed[i].emplace_back(v, u);
        }
        if (directed[i].empty()) return {};  // a coordinate with no edge kills every config
    }
    std::vector<std::uint32_t> configs;
    std::vector<size_t> choice(k, 0);
    for (;;) {
        // center point (w_1..w_k); substitutions by the chosen (u_i)
        std::uint32_t mask = 0;
        int center = 0;
        for (size_t i = 0; i < k; ++i)
            center += directed[i][choice[i]].second * stride[i];
        mask |= 1u << center;
        if (shape == OrthoShape::star) {
            for (size_t i = 0; i < k; ++i) {
                int p = center +
                        (directed[i][choice[i]].first - directed[i][choice[i]].second) * stride[i];
                mask |= 1u << p;
            }
        } else {
            int p = center;
            for (size_t i = 0; i < k; ++i) {
                p += (directed[i][choice[i]].first - directed[i][choice[i]].second) * stride[i];
                mask |= 1u << p;
            }
        }
        configs.push_back(mask);
        size_t d = 0;
        while (d < k && ++choice[d] == directed[d].size()) choice[d++] = 0;
        if (d == k) break;
    }
    std::sort(configs.begin(), configs.end());
    configs.erase(std::unique(configs.begin(), configs.end()), configs.end());
    return configs;
}

struct OrthoSearchContext {
    const std::vector<std::uint32_t>& configs;
    const std::vector<std::vector<std::uint32_t>>& configs_with_point;
    int total_points;
    std::uint64_t budget;
    std::uint64_t nodes = 0;
};

// Is there a free subset of size `want` using only points of `allowed`,
// with `chosen` already fixed? Depth-first over point indices.
inline bool ortho_feasible(OrthoSearchContext& ctx, std::uint32_t chosen, int chosen_size,
                           std::uint32_t allowed, int next_point, int want) {
    if (chosen_size >= want) return true;
    if (++ctx.nodes > ctx.budget)
        throw CapacityError("max_orthogonal_free: search budget exhausted");
    int avail = 0;
    for (int p = next_point; p < ctx.total_points; ++p)
        if ((allowed >> p) & 1u) ++avail;
    if (chosen_size + avail < want) return false;
    for (int p = next_point; p < ctx.total_points; ++p) {
        if (!((allowed >> p) & 1u)) continue;
        std::uint32_t with_p = chosen | (1u << p);
        bool ok = true;
        for (std::uint32_t cfg : ctx.configs_with_point[static_cast<size_t>(p)]) {
            if ((cfg & with_p) == cfg) {
                ok = false;
                break;
            }
        }
        if (ok && ortho_feasible(ctx, with_p, chosen_size + 1, allowed, p + 1, want)) return true;
    }
    return false;
}

} // namespace detail

// Exact maximum size of a subset of the product vertex set containing no
// orthogonal star/path, with the smallest witness bitmask among maximizers.
// Product sizes up to 20 points get a full subset sweep; up to 24 points an
// exact branch-and-bound under `budget` search nodes (a capacity error if
// exceeded, never an approximation); larger products are refused.
inline OrthoFreeResult max_orthogonal_free(const std::vector<SmallGraph>& graphs, OrthoShape shape,
                                           std::uint64_t budget = (1ull << 24)) {
    if (graphs.empty()) throw UsageError("max_orthogonal_free: need at least one graph");
    long long total = 1;
    std::vector<int> stride(graphs.size());
    for (size_t i = 0; i < graphs.size(); ++i) {
        graphs[i].validate();
        stride[i] = static_cast<int>(total);
        total *= graphs[i].n;
        if (total > kMaxGraphVertices)
            throw CapacityError("max_orthogonal_free: product size " + std::to_string(total) +
                                " exceeds " + std::to_string(kMaxGraphVertices) + " points");
    }
    int npoints = static_cast<int>(total);
    auto configs = detail::orthogonal_configs(graphs, shape, stride);

    OrthoFreeResult res;
    res.configurations = configs.size();
    if (configs.empty()) {
        res.max_size = npoints;
        res.witness = npoints == 32 ? ~0u : (1u << npoints) - 1u;
        res.exhaustive = true;
        return res;
    }

    if (npoints <= 20) {
        std::uint32_t all = (1u << npoints) - 1u;
        int best = -1;
        std::uint32_t witness = 0;
        for (std::uint32_t w = 0; w <= all; ++w) {
            if (std::popcount(w) <= best) continue;
            bool ok = true;
            for (std::uint32_t cfg : configs) {
                if ((cfg & w) == cfg) {
                    ok = false;
                    break;
                }
            }
            if (ok) {
                best = std::popcount(w);
                witness = w;
            }
            ++res.nodes;
        }
        res.max_size = best;
        res.witness = witness;
        res.exhaustive = true;
        return res;
    }

    std::vector<std::vector<std::uint32_t>> per_point(static_cast<size_t>(npoints));
    for (std::uint32_t cfg : configs)
        for (std::uint32_t m = cfg; m;) {
            int p = std::countr_zero(m);
            m &= m - 1;
            per_point[static_cast<size_t>(p)].push_back(cfg);
        }
    detail::OrthoSearchContext ctx{configs, per_point, npoints, budget, 0};
    std::uint32_t all = npoints == 32 ? ~0u : (1u << npoints) - 1u;

    int best = 0;
    while (best < npoints && detail::ortho_feasible(ctx, 0, 0, all, 0, best + 1)) ++best;

    // smallest witness bitmask: walk bits from the top, dropping each point
    // whose exclusion still leaves a free subset of the maximum size
    std::uint32_t allowed = all;
    for (int p = npoints - 1; p >= 0; --p) {
        std::uint32_t without = allowed & ~(1u << p);
        if (detail::ortho_feasible(ctx, 0, 0, without, 0, best)) allowed = without;
    }
    // `allowed` is now itself a minimum-value free subset of size `best`
    res.max_size = best;
    res.witness = allowed;
    res.nodes = ctx.nodes;
    res.exhaustive = false;
    return res;
}

// Integer upper bound sum_i alpha(G_i) * prod_{j != i} |V_j| on the size of
// any orthogonal-star/path-free subset of the product.
inline long long orthogonal_free_bound(const std::vector<SmallGraph>& graphs) {
    long long total = 1;
    for (const auto& g : graphs) total *= g.n;
    long long bound = 0;
    for (const auto& g : graphs) bound += independence_number(g) * (total / g.n);
    return bound;
}

struct ConcatBoundReport {
    int trials = 0;
    int violations = 0;
    long long worst_slack = 0;       // min over trials of bound - max_size
    std::string worst_instance;      // edge lists of the tightest instance
    std::uint64_t seed = 0;
};

// Check max_orthogonal_free against the product bound: once on the given
// instance, then on `trials - 1` random instances with the same vertex-count
// profile (edge probability 1/2, deterministic seed).
inline ConcatBoundReport verify_concat_bound(const std::vector<SmallGraph>& graphs,
                                             OrthoShape shape, int trials = 1,
                                             std::uint64_t seed = 20260822) {
    if (trials < 1) throw UsageError("verify_concat_bound: trials must be >= 1");
    ConcatBoundReport rep;
    rep.trials = trials;
    rep.seed = seed;
    rep.worst_slack = -1;
    std::mt19937_64 rng(seed);
    auto describe = [](const std::vector<SmallGraph>& gs) {
        std::string s;
        for (const auto& g : gs) {
            s += "G(n=" + std::to_string(g.n) + ";";
            for (auto [u, v] : g.edges()) s += " " + std::to_string(u) + "-" + std::to_string(v);
            s += ") ";
        }
        return s;
    };
    for (int t = 0; t < trials; ++t) {
        std::vector<SmallGraph> inst;
        if (t == 0) {
            inst = graphs;
        } else {
            for (const auto& g : graphs) {
                SmallGraph r(g.n);
                for (int u = 0; u < g.n; ++u)
                    for (int v = u + 1; v < g.n; ++v)
                        if (rng() & 1u) r.add_edge(u, v);
                inst.push_back(std::move(r));
            }
        }
        auto res = max_orthogonal_free(inst, shape);
        long long bound = orthogonal_free_bound(inst);
        long long slack = bound - res.max_size;
        if (slack < 0) ++rep.violations;
        if (rep.worst_slack < 0 || slack < rep.worst_slack) {
            rep.worst_slack = slack;
            rep.worst_instance = describe(inst);
        }
    }
    return rep;
}

} // namespace ramsey
