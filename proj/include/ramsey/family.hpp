#pragma once

#include <algorithm>
#include <array>
#include <bit>
#include <cstdint>
#include <functional>
#include <numeric>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "errors.hpp"

namespace ramsey {

// Family of distinct subsets of [0, n), n <= 24, stored as bitmasks.
struct SetFamily {
    int n = 0;
    std::vector<std::uint32_t> members;

    SetFamily() = default;
    SetFamily(int n_, std::vector<std::uint32_t> m) : n(n_), members(std::move(m)) {}

    std::uint32_t ground_mask() const { return (1u << n) - 1u; }

    void validate() const {
        if (n < 1 || n > 24) throw DomainError("SetFamily: ground set size must be in [1,24]");
        for (std::uint32_t m : members)
            if (m & ~ground_mask())
                throw DomainError("SetFamily: member uses elements outside the ground set");
        auto sorted = members;
        std::sort(sorted.begin(), sorted.end());
        if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
            throw DomainError("SetFamily: members must be distinct");
    }

    // common member size, when every member has the same one
    std::optional<int> uniform_size() const {
        if (members.empty()) return std::nullopt;
        int r = std::popcount(members.front());
        for (std::uint32_t m : members)
            if (std::popcount(m) != r) return std::nullopt;
        return r;
    }
};

namespace detail {

inline std::uint64_t binom64(std::uint64_t n, std::uint64_t k) {
    if (k > n) return 0;
    k = std::min(k, n - k);
    __uint128_t r = 1;
    for (std::uint64_t i = 1; i <= k; ++i) {
        r = r * (n - k + i) / i; // exact at every step: product of i consecutive integers
        if (r > ~0ull) throw CapacityError("binomial coefficient exceeds 64 bits");
    }
    return static_cast<std::uint64_t>(r);
}

inline std::uint64_t multinomial64(std::uint64_t total, const std::vector<std::uint64_t>& parts) {
    __uint128_t r = 1;
    std::uint64_t cum = 0;
    for (std::uint64_t p : parts) {
        cum += p;
        r *= binom64(cum, p);
        if (r > ~0ull) throw CapacityError("multinomial coefficient exceeds 64 bits");
    }
    if (cum != total) throw UsageError("multinomial parts must sum to the total");
    return static_cast<std::uint64_t>(r);
}

} // namespace detail

// Indices of k members whose pairwise intersections all share one size, or
// absent. Exhaustive in lexicographic order over index k-subsets; refuses
// when the number of k-subsets exceeds 10^7.
inline std::optional<std::vector<int>> find_weak_sunflower(const SetFamily& f, int k) {
    f.validate();
    if (k < 3) throw UsageError("find_weak_sunflower: k must be >= 3");
    int m = static_cast<int>(f.members.size());
    if (m < k) return std::nullopt;
    std::uint64_t combos = detail::binom64(static_cast<std::uint64_t>(m),
                                           static_cast<std::uint64_t>(k));
    if (combos > 10'000'000ull)
        throw CapacityError("find_weak_sunflower: " + std::to_string(combos) +
                            " index subsets exceed the 10^7 enumeration cap");
    std::vector<int> pick;
    pick.reserve(static_cast<size_t>(k));
    // common_size valid once two members are chosen; every extension is checked
    // against all chosen members, so the first full tuple found is lex-first
    auto rec = [&](auto&& self, int next, int common_size) -> bool {
        if (static_cast<int>(pick.size()) == k) return true;
        int need = k - static_cast<int>(pick.size());
        for (int i = next; i + need <= m; ++i) {
            std::uint32_t cand = f.members[static_cast<size_t>(i)];
            int cs = common_size;
            bool ok = true;
            for (int j : pick) {
                int isz = std::popcount(cand & f.members[static_cast<size_t>(j)]);
                if (cs < 0)
                    cs = isz;
                else if (isz != cs) {
                    ok = false;
                    break;
                }
            }
            if (!ok) continue;
            pick.push_back(i);
            if (self(self, i + 1, cs)) return true;
            pick.pop_back();
        }
        return false;
    };
    if (rec(rec, 0, -1)) return pick;
    return std::nullopt;
}

// True iff no two distinct members intersect in exactly s elements. Only
// meaningful for uniform families, so anything else is refused.
inline bool is_s_avoiding(const SetFamily& f, int s) {
    f.validate();
    if (!f.uniform_size())
        throw UsageError("is_s_avoiding: family must be uniform (all members one size)");
    size_t m = f.members.size();
    for (size_t i = 0; i < m; ++i)
        for (size_t j = i + 1; j < m; ++j)
            if (std::popcount(f.members[i] & f.members[j]) == s) return false;
    return true;
}

inline SetFamily complement_family(const SetFamily& f) {
    f.validate();
    SetFamily c;
    c.n = f.n;
    c.members.reserve(f.members.size());
    for (std::uint32_t m : f.members) c.members.push_back(m ^ f.ground_mask());
    return c;
}

struct ShiftResult {
    SetFamily family;             // shifted members of the requested size, input order kept
    std::vector<int> preimage;    // index into the input family for each kept member
    SetFamily shifted_all;        // every shifted member, before the size filter
};

// Replace every member F by F ^ g, keep those of size `half`, and certify the
// intersection identity 2|Fi n Fj| - 2|Fi' n Fj'| = |Fi| + |Fj| - |Fi'| - |Fj'|
// on every input pair before filtering.
inline ShiftResult symdiff_shift(const SetFamily& f, std::uint32_t g, int half) {
    f.validate();
    if (g & ~f.ground_mask())
        throw UsageError("symdiff_shift: shift set uses elements outside the ground set");
    if (half < 0 || half > f.n)
        throw UsageError("symdiff_shift: target size must lie in [0,n]");
    size_t m = f.members.size();
    std::vector<std::uint32_t> shifted(m);
    for (size_t i = 0; i < m; ++i) shifted[i] = f.members[i] ^ g;
    for (size_t i = 0; i < m; ++i) {
        for (size_t j = i + 1; j < m; ++j) {
            int lhs = 2 * std::popcount(f.members[i] & f.members[j]) -
                      2 * std::popcount(shifted[i] & shifted[j]);
            int rhs = std::popcount(f.members[i]) + std::popcount(f.members[j]) -
                      std::popcount(shifted[i]) - std::popcount(shifted[j]);
            if (lhs != rhs)
                throw CertificationError(
                    "symdiff_shift: intersection identity failed on pair (" +
                    std::to_string(i) + "," + std::to_string(j) + ")");
        }
    }
    ShiftResult res;
    res.shifted_all = SetFamily(f.n, shifted);
    res.family.n = f.n;
    for (size_t i = 0; i < m; ++i) {
        if (std::popcount(shifted[i]) == half) {
            res.family.members.push_back(shifted[i]);
            res.preimage.push_back(static_cast<int>(i));
        }
    }
    return res;
}

// The largest single-size bucket of a family (ties to the smaller size), with
// the original indices: at least |F| / (n+1) members survive.
inline std::pair<SetFamily, std::vector<int>> largest_uniform_subfamily(const SetFamily& f) {
    f.validate();
    std::array<int, 25> count{};
    for (std::uint32_t m : f.members) ++count[static_cast<size_t>(std::popcount(m))];
    int best_size = 0;
    for (int s = 0; s <= f.n; ++s)
        if (count[static_cast<size_t>(s)] > count[static_cast<size_t>(best_size)]) best_size = s;
    SetFamily out;
    out.n = f.n;
    std::vector<int> idx;
    for (size_t i = 0; i < f.members.size(); ++i) {
        if (std::popcount(f.members[i]) == best_size) {
            out.members.push_back(f.members[i]);
            idx.push_back(static_cast<int>(i));
        }
    }
    return {out, idx};
}

// Number of ordered partitions of [0,n) into parts of the given sizes to
// which one fixed r-set with the given per-part shares belongs:
// r!/(prod r_i!) * (n-r)!/(prod (n_i-r_i)!).
inline std::uint64_t partition_contribution_count(int n, int r, const std::vector<int>& sizes,
                                                  const std::vector<int>& shares) {
    if (sizes.size() != shares.size() || sizes.empty())
        throw UsageError("partition_contribution_count: need matching sizes and shares");
    std::vector<std::uint64_t> in, out;
    int sn = 0, sr = 0;
    for (size_t i = 0; i < sizes.size(); ++i) {
        if (shares[i] < 0 || shares[i] > sizes[i])
            throw UsageError("partition_contribution_count: shares must satisfy 0 <= r_i <= n_i");
        sn += sizes[i];
        sr += shares[i];
        in.push_back(static_cast<std::uint64_t>(shares[i]));
        out.push_back(static_cast<std::uint64_t>(sizes[i] - shares[i]));
    }
    if (sn != n || sr != r)
        throw UsageError("partition_contribution_count: sizes must sum to n and shares to r");
    return detail::multinomial64(static_cast<std::uint64_t>(r), in) *
           detail::multinomial64(static_cast<std::uint64_t>(n - r), out);
}

namespace detail {

// Visit every ordered partition of the ground mask into parts of the given
// sizes; fn receives the part masks. Returns the number of partitions visited.
inline std::uint64_t for_each_partition(std::uint32_t ground, const std::vector<int>& sizes,
                                        std::vector<std::uint32_t>& parts, size_t depth,
                                        const std::function<void(const std::vector<std::uint32_t>&)>& fn) {
    if (depth == sizes.size()) {
        fn(parts);
        return 1;
    }
    int want = sizes[depth];
    // enumerate `want`-subsets of `ground` via Gosper-style recursion on the
    // lowest remaining element to keep the order deterministic
    std::vector<int> elems;
    for (std::uint32_t m = ground; m;) {
        int b = std::countr_zero(m);
        m &= m - 1;
        elems.push_back(b);
    }
    int e = static_cast<int>(elems.size());
    std::uint64_t visited = 0;
    std::vector<int> comb(static_cast<size_t>(want));
    auto rec = [&](auto&& self, int start, int filled) -> void {
        if (filled == want) {
            std::uint32_t mask = 0;
            for (int c : comb) mask |= 1u << c;
            parts[depth] = mask;
            visited += for_each_partition(ground & ~mask, sizes, parts, depth + 1, fn);
            return;
        }
        for (int i = start; i + (want - filled) <= e; ++i) {
            comb[static_cast<size_t>(filled)] = elems[static_cast<size_t>(i)];
            self(self, i + 1, filled + 1);
        }
    };
    if (want == 0) {
        parts[depth] = 0;
        return for_each_partition(ground, sizes, parts, depth + 1, fn);
    }
    rec(rec, 0, 0);
    return visited;
}

} // namespace detail

struct PartitionChoice {
    std::vector<std::uint32_t> parts;  // ordered part masks
    SetFamily subfamily;               // members meeting every per-part share
    std::vector<int> selected;         // their indices in the input family
    std::uint64_t count = 0;           // |subfamily|
    std::uint64_t guarantee_lhs = 0;   // count * C(n, r)
    std::uint64_t guarantee_rhs = 0;   // |F| * prod C(n_i, r_i)
    bool exhaustive = false;           // all partitions enumerated (count is the maximum)
    std::uint64_t partitions_tried = 0;
    std::uint64_t seed = 0;            // randomized mode only
};

namespace detail {

inline std::uint64_t count_matching(const SetFamily& f, const std::vector<std::uint32_t>& parts,
                                    const std::vector<int>& shares, std::vector<int>* out_idx) {
    std::uint64_t c = 0;
    for (size_t i = 0; i < f.members.size(); ++i) {
        bool ok = true;
        for (size_t p = 0; p < parts.size(); ++p) {
            if (std::popcount(f.members[i] & parts[p]) != shares[p]) {
                ok = false;
                break;
            }
        }
        if (ok) {
            ++c;
            if (out_idx) out_idx->push_back(static_cast<int>(i));
        }
    }
    return c;
}

} // namespace detail

// A partition of [0,n) into parts of the given sizes whose share-matching
// subfamily satisfies |F'| * C(n,r) >= |F| * prod C(n_i,r_i). Small instances
// are enumerated exhaustively (the returned partition then maximizes |F'|);
// larger ones are sampled with a seeded shuffle until the pigeonhole
// guarantee is met, and the sampler fails loudly rather than return a
// sub-guarantee partition.
inline PartitionChoice best_partition(const SetFamily& f, const std::vector<int>& sizes,
                                      const std::vector<int>& shares,
                                      std::uint64_t seed = 20260822,
                                      std::uint64_t max_attempts = 200000) {
    f.validate();
    if (f.members.empty()) throw UsageError("best_partition: family is empty");
    auto r_opt = f.uniform_size();
    if (!r_opt) throw UsageError("best_partition: family must be uniform");
    int r = *r_opt;
    if (sizes.size() != shares.size() || sizes.empty())
        throw UsageError("best_partition: need matching sizes and shares");
    int sn = 0, sr = 0;
    for (size_t i = 0; i < sizes.size(); ++i) {
        if (sizes[i] < 0 || shares[i] < 0 || shares[i] > sizes[i])
            throw UsageError("best_partition: shares must satisfy 0 <= r_i <= n_i");
        sn += sizes[i];
        sr += shares[i];
    }
    if (sn != f.n) throw UsageError("best_partition: part sizes must sum to n");
    if (sr != r) throw UsageError("best_partition: shares must sum to the member size");

    std::uint64_t rhs = f.members.size();
    for (size_t i = 0; i < sizes.size(); ++i)
        rhs *= detail::binom64(static_cast<std::uint64_t>(sizes[i]),
                               static_cast<std::uint64_t>(shares[i]));
    std::uint64_t cnr = detail::binom64(static_cast<std::uint64_t>(f.n),
                                        static_cast<std::uint64_t>(r));

    PartitionChoice choice;
    choice.seed = seed;
    choice.guarantee_rhs = rhs;

    std::vector<std::uint64_t> sz64(sizes.begin(), sizes.end());
    std::uint64_t total_partitions = detail::multinomial64(static_cast<std::uint64_t>(f.n), sz64);
    constexpr std::uint64_t kExhaustiveCap = 2'000'000;
    if (f.n <= 12 && total_partitions <= kExhaustiveCap) {
        std::vector<std::uint32_t> parts(sizes.size());
        bool have = false;
        std::uint64_t best = 0;
        std::vector<std::uint32_t> best_parts;
        choice.partitions_tried = detail::for_each_partition(
            f.ground_mask(), sizes, parts, 0,
            [&](const std::vector<std::uint32_t>& p) {
                std::uint64_t c = detail::count_matching(f, p, shares, nullptr);
                if (!have || c > best) {
                    have = true;
                    best = c;
                    best_parts = p;
                }
            });
        choice.exhaustive = true;
        choice.parts = best_parts;
        choice.count = best;
    } else {
        if (f.n > 24) throw DomainError("best_partition: ground set size must be <= 24");
        std::mt19937_64 rng(seed);
        std::vector<int> perm(static_cast<size_t>(f.n));
        std::iota(perm.begin(), perm.end(), 0);
        bool met = false;
        for (std::uint64_t attempt = 0; attempt < max_attempts && !met; ++attempt) {
            std::shuffle(perm.begin(), perm.end(), rng);
            std::vector<std::uint32_t> parts(sizes.size(), 0);
            size_t pos = 0;
            for (size_t p = 0; p < sizes.size(); ++p)
                for (int t = 0; t < sizes[p]; ++t) parts[p] |= 1u << perm[pos++];
            std::uint64_t c = detail::count_matching(f, parts, shares, nullptr);
            ++choice.partitions_tried;
            if (c * cnr >= rhs) {
                met = true;
                choice.parts = parts;
                choice.count = c;
            }
        }
        if (!met)
            throw CapacityError("best_partition: no partition met the pigeonhole guarantee in " +
                                std::to_string(max_attempts) + " samples");
    }

    choice.guarantee_lhs = choice.count * cnr;
    if (choice.guarantee_lhs < rhs)
        throw CertificationError("best_partition: exhaustive maximum fell below the pigeonhole "
                                 "guarantee");
    choice.subfamily.n = f.n;
    detail::count_matching(f, choice.parts, shares, &choice.selected);
    for (int i : choice.selected) choice.subfamily.members.push_back(f.members[static_cast<size_t>(i)]);
    return choice;
}

// Sum of |F'| over every ordered partition with the given sizes, for the
// double-counting identity sum = |F| * contribution_count. Exhaustive; meant
// for small ground sets.
inline std::uint64_t partition_membership_sum(const SetFamily& f, const std::vector<int>& sizes,
                                              const std::vector<int>& shares) {
    f.validate();
    std::vector<std::uint32_t> parts(sizes.size());
    std::uint64_t total = 0;
    detail::for_each_partition(f.ground_mask(), sizes, parts, 0,
                               [&](const std::vector<std::uint32_t>& p) {
                                   total += detail::count_matching(f, p, shares, nullptr);
                               });
    return total;
}

// One arm pair of the star construction: two r-subsets of a private block
// universe meeting in s elements. Elements live in [0, 64).
struct StarBlockPair {
    std::uint64_t w = 0;
    std::uint64_t u = 0;
};

struct StarIdentityReport {
    int k = 0;
    int r = 0;
    int s = 0;
    int expected = 0;                    // 2s + (k-2)r
    std::vector<std::uint64_t> sets;     // F_0, ..., F_k
    bool holds = false;
};

// Materialize the star family F_0 = w_1 u ... u w_k and F_j = F_0 with w_j
// swapped for u_j, then check that every pairwise intersection among
// F_1..F_k has size exactly 2s + (k-2)r.
inline StarIdentityReport star_intersection_identity(const std::vector<StarBlockPair>& blocks,
                                                     int r) {
    int k = static_cast<int>(blocks.size());
    if (k < 2) throw UsageError("star_intersection_identity: need at least two blocks");
    if (r < 1) throw UsageError("star_intersection_identity: r must be >= 1");
    int s = -1;
    std::uint64_t used = 0;
    for (const auto& b : blocks) {
        if (std::popcount(b.w) != r || std::popcount(b.u) != r)
            throw UsageError("star_intersection_identity: every w_i and u_i must have size r");
        int si = std::popcount(b.w & b.u);
        if (s < 0)
            s = si;
        else if (si != s)
            throw UsageError("star_intersection_identity: all |w_i n u_i| must agree");
        std::uint64_t universe = b.w | b.u;
        if (universe & used)
            throw UsageError("star_intersection_identity: block universes must be disjoint");
        used |= universe;
    }
    StarIdentityReport rep;
    rep.k = k;
    rep.r = r;
    rep.s = s;
    rep.expected = 2 * s + (k - 2) * r;
    std::uint64_t f0 = 0;
    for (const auto& b : blocks) f0 |= b.w;
    rep.sets.push_back(f0);
    for (const auto& b : blocks) rep.sets.push_back((f0 & ~b.w) | b.u);
    rep.holds = true;
    for (int i = 1; i <= k && rep.holds; ++i)
        for (int j = i + 1; j <= k && rep.holds; ++j)
            if (std::popcount(rep.sets[static_cast<size_t>(i)] &
                              rep.sets[static_cast<size_t>(j)]) != rep.expected)
                rep.holds = false;
    return rep;
}

} // namespace ramsey
