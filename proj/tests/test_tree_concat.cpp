#include <catch2/catch_amalgamated.hpp>

#include <bit>
#include <random>
#include <vector>

#include "oracles.hpp"
#include "ramsey/tree_concat.hpp"

using namespace ramsey;

namespace {

SmallGraph random_graph(std::mt19937_64& rng, int n, double p = 0.5) {
    SmallGraph g(n);
    std::bernoulli_distribution coin(p);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (coin(rng)) g.add_edge(u, v);
    return g;
}

// independent generator of the forbidden point sets, straight from the shape
// definitions: pick an oriented edge (u_i, w_i) per coordinate; the center is
// (w_1..w_k); star replaces one coordinate at a time, path cumulatively.
std::vector<std::uint32_t> reference_configs(const std::vector<SmallGraph>& gs, OrthoShape shape) {
    size_t k = gs.size();
    std::vector<int> stride(k);
    int total = 1;
    for (size_t i = 0; i < k; ++i) {
        stride[i] = total;
        total *= gs[i].n;
    }
    std::vector<std::vector<std::pair<int, int>>> oriented(k);
    for (size_t i = 0; i < k; ++i) {
        for (auto [u, v] : gs[i].edges()) {
            oriented[i].push_back({u, v});
            oriented[i].push_back({v, u});
        }
        if (oriented[i].empty()) return {};
    }
    std::vector<std::uint32_t> out;
    std::vector<size_t> pick(k, 0);
    for (;;) {
        std::vector<int> center(k);
        for (size_t i = 0; i < k; ++i) center[static_cast<size_t>(i)] = oriented[i][pick[i]].second;
        auto index = [&](const std::vector<int>& pt) {
            int ix = 0;
            for (size_t i = 0; i < k; ++i) ix += pt[i] * stride[i];
            return ix;
        };
        std::uint32_t mask = 1u << index(center);
        if (shape == OrthoShape::star) {
            for (size_t i = 0; i < k; ++i) {
                auto pt = center;
                pt[i] = oriented[i][pick[i]].first;
                mask |= 1u << index(pt);
            }
        } else {
            auto pt = center;
            for (size_t i = 0; i < k; ++i) {
                pt[i] = oriented[i][pick[i]].first;
                mask |= 1u << index(pt);
            }
        }
        out.push_back(mask);
        size_t d = 0;
        while (d < k && ++pick[d] == oriented[d].size()) pick[d++] = 0;
        if (d == k) break;
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

int sweep_max_free(int npoints, const std::vector<std::uint32_t>& configs) {
    int best = 0;
    for (std::uint32_t w = 0; w < (1u << npoints); ++w) {
        bool ok = true;
        for (std::uint32_t cfg : configs)
            if ((cfg & w) == cfg) {
                ok = false;
                break;
            }
        if (ok) best = std::max(best, std::popcount(w));
    }
    return best;
}

} // namespace

TEST_CASE("edge-ordered trees validate shape") {
    CHECK_NOTHROW(EdgeOrderedTree::path(2).validate());
    CHECK_NOTHROW(EdgeOrderedTree::star(3).validate());
    EdgeOrderedTree cyc;
    cyc.edges = {{0, 1}, {1, 2}, {2, 0}};
    CHECK_THROWS_AS(cyc.validate(), DomainError);
    EdgeOrderedTree loop;
    loop.edges = {{0, 0}};
    CHECK_THROWS_AS(loop.validate(), DomainError);
    EdgeOrderedTree dup;
    dup.edges = {{0, 1}, {0, 1}};
    CHECK_THROWS_AS(dup.validate(), DomainError);
    EdgeOrderedTree empty;
    CHECK_THROWS_AS(empty.validate(), DomainError);
}

TEST_CASE("tree homomorphism search matches exhaustive assignment") {
    std::mt19937_64 rng(31);
    for (int trial = 0; trial < 300; ++trial) {
        int n = 2 + static_cast<int>(rng() % 4);
        std::vector<SmallGraph> gs{random_graph(rng, n), random_graph(rng, n)};
        EdgeOrderedTree tree = (rng() & 1u) ? EdgeOrderedTree::path(2) : EdgeOrderedTree::star(2);
        std::uint32_t w = static_cast<std::uint32_t>(rng()) & gs[0].vertex_mask();
        auto lib = find_tree_homomorphism(gs, tree, w);
        bool brute = oracle::brute_tree_hom(gs, tree.edges, w);
        CAPTURE(trial, n, w);
        REQUIRE(lib.has_value() == brute);
        if (lib) {
            // returned map really is a homomorphism into w
            for (size_t e = 0; e < tree.edges.size(); ++e) {
                auto [a, b] = tree.edges[e];
                int va = (*lib)[static_cast<size_t>(a)], vb = (*lib)[static_cast<size_t>(b)];
                REQUIRE(((w >> va) & 1u) == 1u);
                REQUIRE(((w >> vb) & 1u) == 1u);
                REQUIRE(gs[e].has_edge(va, vb));
            }
        }
    }
}

TEST_CASE("subsets above the independence sum always contain every two-edge tree") {
    std::mt19937_64 rng(32);
    std::vector<EdgeOrderedTree> trees;
    for (int a = 0; a < 3; ++a)
        for (int b = 0; b < 3; ++b) {
            if (a == b) continue;
            static const std::pair<int, int> all[3] = {{0, 1}, {0, 2}, {1, 2}};
            EdgeOrderedTree t;
            t.edges = {all[a], all[b]};
            trees.push_back(t);
        }
    for (int trial = 0; trial < 120; ++trial) {
        int n = 2 + static_cast<int>(rng() % 3);
        std::vector<SmallGraph> gs{random_graph(rng, n), random_graph(rng, n)};
        int bound = independence_number(gs[0]) + independence_number(gs[1]);
        for (std::uint32_t w = 0; w <= gs[0].vertex_mask(); ++w) {
            if (std::popcount(w) <= bound) continue;
            for (const auto& t : trees) {
                CAPTURE(trial, w);
                REQUIRE(find_tree_homomorphism(gs, t, w).has_value());
            }
        }
    }
}

TEST_CASE("homomorphism preconditions") {
    std::vector<SmallGraph> gs{SmallGraph::complete(3), SmallGraph::complete(3)};
    CHECK_THROWS_AS(find_tree_homomorphism(gs, EdgeOrderedTree::path(3), 7u), UsageError);
    std::vector<SmallGraph> mixed{SmallGraph::complete(3), SmallGraph::complete(4)};
    CHECK_THROWS_AS(find_tree_homomorphism(mixed, EdgeOrderedTree::path(2), 7u), UsageError);
    CHECK_FALSE(find_tree_homomorphism(gs, EdgeOrderedTree::path(2), 0u).has_value());
}

TEST_CASE("forbidden point sets match the reference generator") {
    std::mt19937_64 rng(33);
    for (int trial = 0; trial < 200; ++trial) {
        size_t k = 2 + (rng() % 2);
        std::vector<SmallGraph> gs;
        std::vector<int> stride;
        int total = 1;
        for (size_t i = 0; i < k; ++i) {
            int n = 2 + static_cast<int>(rng() % 2);
            stride.push_back(total);
            total *= n;
            gs.push_back(random_graph(rng, n));
        }
        if (total > 20) continue;
        for (OrthoShape shape : {OrthoShape::star, OrthoShape::path}) {
            auto lib = detail::orthogonal_configs(gs, shape, stride);
            auto ref = reference_configs(gs, shape);
            CAPTURE(trial, shape_name(shape));
            REQUIRE(lib == ref);
        }
    }
}

TEST_CASE("exact free-set size matches a subset sweep on small products") {
    std::mt19937_64 rng(34);
    for (int trial = 0; trial < 60; ++trial) {
        std::vector<SmallGraph> gs{random_graph(rng, 2 + static_cast<int>(rng() % 2)),
                                   random_graph(rng, 2 + static_cast<int>(rng() % 2))};
        int total = gs[0].n * gs[1].n;
        for (OrthoShape shape : {OrthoShape::star, OrthoShape::path}) {
            auto res = max_orthogonal_free(gs, shape);
            auto ref = reference_configs(gs, shape);
            CAPTURE(trial, shape_name(shape), total);
            REQUIRE(res.exhaustive);
            REQUIRE(res.max_size == sweep_max_free(total, ref));
            REQUIRE(std::popcount(res.witness) == res.max_size);
            for (std::uint32_t cfg : ref) REQUIRE((cfg & res.witness) != cfg);
            REQUIRE(res.max_size <= orthogonal_free_bound(gs));
        }
    }
}

TEST_CASE("an edgeless coordinate makes the whole product free") {
    std::vector<SmallGraph> gs{SmallGraph::complete(3), SmallGraph(2)};
    auto res = max_orthogonal_free(gs, OrthoShape::star);
    CHECK(res.max_size == 6);
    CHECK(res.configurations == 0);
    CHECK(res.witness == (1u << 6) - 1u);
}

TEST_CASE("branch and bound handles products above the sweep limit") {
    // 3 * 2 * 4 = 24 points: exact search without the full subset sweep
    std::vector<SmallGraph> gs{SmallGraph::complete(3), SmallGraph::complete(2),
                               SmallGraph::complete(4)};
    auto res = max_orthogonal_free(gs, OrthoShape::star, 1ull << 26);
    CHECK_FALSE(res.exhaustive);
    CHECK(res.max_size > 0);
    CHECK(res.max_size <= orthogonal_free_bound(gs));
    CHECK(std::popcount(res.witness) == res.max_size);
    auto ref = reference_configs(gs, OrthoShape::star);
    for (std::uint32_t cfg : ref) CHECK((cfg & res.witness) != cfg);

    CHECK_THROWS_AS(max_orthogonal_free(gs, OrthoShape::star, 10), CapacityError);
    std::vector<SmallGraph> too_big{SmallGraph::complete(5), SmallGraph::complete(5)};
    CHECK_THROWS_AS(max_orthogonal_free(too_big, OrthoShape::star), CapacityError);
}

TEST_CASE("hand-checked product bound") {
    std::vector<SmallGraph> gs{SmallGraph::complete(3), SmallGraph::complete(3)};
    CHECK(orthogonal_free_bound(gs) == 6); // 1*3 + 1*3
    SmallGraph p3(3);
    p3.add_edge(0, 1);
    p3.add_edge(1, 2);
    CHECK(orthogonal_free_bound({p3, SmallGraph::complete(2)}) == 7); // 2*2 + 1*3
}

TEST_CASE("bound verification reports clean trials") {
    std::mt19937_64 rng(35);
    std::vector<SmallGraph> gs{random_graph(rng, 3), random_graph(rng, 4)};
    for (OrthoShape shape : {OrthoShape::star, OrthoShape::path}) {
        auto rep = verify_concat_bound(gs, shape, 25, 99);
        CHECK(rep.trials == 25);
        CHECK(rep.violations == 0);
        CHECK(rep.worst_slack >= 0);
        CHECK_FALSE(rep.worst_instance.empty());
        CHECK(rep.seed == 99);
    }
    CHECK_THROWS_AS(verify_concat_bound(gs, OrthoShape::star, 0), UsageError);
}
