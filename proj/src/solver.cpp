#include <algorithm>
#include <array>
#include <cstdint>
#include <set>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "sepfam/errors.hpp"
#include "sepfam/oracle.hpp"

// Exact minimum separating subfamily search. A mask and its complement
// split the same pairs, so masks are canonicalized to the variant without
// index 0 and deduplicated; coverage-dominated masks are dropped. The
// branch-and-bound picks the uncovered pair with the fewest covering masks
// and tries its candidates in decreasing new-coverage order, pruned by
// three lower bounds (signature-class width, a prefix-sum covering walk
// over all uncovered pairs, and the same walk over index-adjacent pairs
// only, where a mask covers as many pairs as its bit flips) plus a visited
// covered-state table.

namespace sepfam {
namespace {

using PairBits = std::array<std::uint64_t, 3>;

struct PairBitsHash {
    std::size_t operator()(const PairBits& p) const {
        std::uint64_t h = 0x9e3779b97f4a7c15ull;
        for (std::uint64_t w : p) {
            h ^= w + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
            h *= 0xff51afd7ed558ccdull;
        }
        return static_cast<std::size_t>(h);
    }
};

PairBits operator|(const PairBits& a, const PairBits& b) {
    return {a[0] | b[0], a[1] | b[1], a[2] | b[2]};
}

PairBits operator&(const PairBits& a, const PairBits& b) {
    return {a[0] & b[0], a[1] & b[1], a[2] & b[2]};
}

PairBits and_not(const PairBits& a, const PairBits& b) {
    return {a[0] & ~b[0], a[1] & ~b[1], a[2] & ~b[2]};
}

bool is_subset(const PairBits& a, const PairBits& b) {
    return (a[0] & ~b[0]) == 0 && (a[1] & ~b[1]) == 0 && (a[2] & ~b[2]) == 0;
}

int popcount(const PairBits& a) {
    return __builtin_popcountll(a[0]) + __builtin_popcountll(a[1]) + __builtin_popcountll(a[2]);
}

bool test_bit(const PairBits& a, std::size_t i) { return a[i / 64] >> (i % 64) & 1; }
void set_bit(PairBits& a, std::size_t i) { a[i / 64] |= std::uint64_t(1) << (i % 64); }

std::size_t ceil_log2(std::size_t k) {
    std::size_t bits = 0;
    while ((std::size_t(1) << bits) < k) ++bits;
    return bits;
}

struct Candidate {
    std::uint32_t canon;
    PairBits cov{};
    std::size_t orig;
};

struct Problem {
    std::size_t n = 0;
    std::size_t npairs = 0;
    PairBits full{};
    std::vector<std::size_t> pid;  // n*n lookup, (i, j) with i < j
    std::vector<std::pair<std::size_t, std::size_t>> pair_of;
    std::vector<Candidate> cands;
};

Problem prepare(const TraceSet& t, const PointSet& x, bool dominance, const char* who) {
    Problem pr;
    pr.n = x.size();
    if (pr.n < 2) throw precondition_error(std::string(who) + ": needs at least two points");
    if (pr.n > 20) throw cap_error(std::string(who) + ": more than 20 points");
    if (t.masks.size() != t.witnesses.size())
        throw precondition_error(std::string(who) + ": masks and witnesses differ in length");
    {
        std::set<std::uint32_t> distinct(t.masks.begin(), t.masks.end());
        if (distinct.size() != t.masks.size())
            throw precondition_error(std::string(who) + ": trace masks are not pairwise distinct");
    }
    const std::uint32_t full_mask = (std::uint32_t(1) << pr.n) - 1;
    for (std::size_t i = 0; i < t.masks.size(); ++i) {
        if (t.masks[i] > full_mask) throw precondition_error(std::string(who) + ": mask exceeds the point count");
        if (trace_mask(t.witnesses[i], x) != t.masks[i])
            throw precondition_error(std::string(who) + ": witness trace differs from its mask");
    }

    pr.pid.assign(pr.n * pr.n, 0);
    for (std::size_t i = 0; i < pr.n; ++i)
        for (std::size_t j = i + 1; j < pr.n; ++j) {
            pr.pid[i * pr.n + j] = pr.npairs++;
            pr.pair_of.push_back({i, j});
        }
    for (std::size_t p = 0; p < pr.npairs; ++p) set_bit(pr.full, p);

    std::set<std::uint32_t> seen;
    for (std::size_t i = 0; i < t.masks.size(); ++i) {
        std::uint32_t m = t.masks[i];
        std::uint32_t canon = (m & 1) ? (~m & full_mask) : m;
        if (canon == 0) continue;
        if (!seen.insert(canon).second) continue;
        Candidate c;
        c.canon = canon;
        c.orig = i;
        for (std::size_t a = 0; a < pr.n; ++a)
            for (std::size_t b = a + 1; b < pr.n; ++b)
                if (((canon >> a) ^ (canon >> b)) & 1) set_bit(c.cov, pr.pid[a * pr.n + b]);
        pr.cands.push_back(c);
    }

    if (dominance) {
        std::vector<bool> drop(pr.cands.size(), false);
        for (std::size_t a = 0; a < pr.cands.size(); ++a)
            for (std::size_t b = 0; b < pr.cands.size() && !drop[a]; ++b)
                if (a != b && is_subset(pr.cands[a].cov, pr.cands[b].cov)) drop[a] = true;
        std::vector<Candidate> kept;
        for (std::size_t a = 0; a < pr.cands.size(); ++a)
            if (!drop[a]) kept.push_back(pr.cands[a]);
        pr.cands = std::move(kept);
    }
    return pr;
}

std::optional<WitnessPair> blocked_pair(const Problem& pr) {
    PairBits all{};
    for (const Candidate& c : pr.cands) all = all | c.cov;
    for (std::size_t p = 0; p < pr.npairs; ++p)
        if (!test_bit(all, p)) return WitnessPair{pr.pair_of[p].first, pr.pair_of[p].second};
    return std::nullopt;
}

OracleResult infeasible(const WitnessPair& wp, std::uint64_t explored) {
    OracleResult res;
    res.feasible = false;
    res.explored = explored;
    res.blocked = wp;
    return res;
}

struct Searcher {
    const Problem& pr;
    std::vector<std::size_t> pair_order;          // by ascending static candidate count
    std::vector<std::vector<std::size_t>> covering;  // pair -> candidate indices
    PairBits adjacent{};
    std::vector<std::size_t> chosen, best_set;
    std::size_t best_size = 0;
    std::uint64_t explored = 0;
    std::unordered_map<PairBits, std::size_t, PairBitsHash> visited;

    explicit Searcher(const Problem& p) : pr(p) {
        covering.resize(pr.npairs);
        for (std::size_t c = 0; c < pr.cands.size(); ++c)
            for (std::size_t q = 0; q < pr.npairs; ++q)
                if (test_bit(pr.cands[c].cov, q)) covering[q].push_back(c);
        pair_order.resize(pr.npairs);
        for (std::size_t q = 0; q < pr.npairs; ++q) pair_order[q] = q;
        std::stable_sort(pair_order.begin(), pair_order.end(),
                         [&](std::size_t a, std::size_t b) { return covering[a].size() < covering[b].size(); });
        for (std::size_t i = 0; i + 1 < pr.n; ++i) set_bit(adjacent, pr.pid[i * pr.n + i + 1]);
    }

    void greedy() {
        PairBits covered{};
        while (covered != pr.full) {
            std::size_t pick = pr.cands.size();
            int best_new = -1;
            for (std::size_t c = 0; c < pr.cands.size(); ++c) {
                int nw = popcount(and_not(pr.cands[c].cov, covered));
                if (nw > best_new) {
                    best_new = nw;
                    pick = c;
                }
            }
            if (pick == pr.cands.size() || best_new <= 0) throw std::logic_error("greedy cover stalled");
            best_set.push_back(pick);
            covered = covered | pr.cands[pick].cov;
        }
        best_size = best_set.size();
    }

    // prefix-sum walk: least k whose k largest contributions reach `need`
    std::size_t walk_bound(std::vector<int>& contrib, int need) const {
        if (need <= 0) return 0;
        std::sort(contrib.begin(), contrib.end(), std::greater<int>());
        long acc = 0;
        for (std::size_t k = 0; k < contrib.size(); ++k) {
            acc += contrib[k];
            if (acc >= need) return k + 1;
        }
        return contrib.size() + 1;  // unreachable: infeasible below
    }

    std::size_t lower_bound(const PairBits& covered) const {
        // widest signature class still unsplit
        std::vector<std::size_t> parent(pr.n);
        for (std::size_t i = 0; i < pr.n; ++i) parent[i] = i;
        auto find = [&](std::size_t v) {
            while (parent[v] != v) v = parent[v] = parent[parent[v]];
            return v;
        };
        for (std::size_t p = 0; p < pr.npairs; ++p)
            if (!test_bit(covered, p)) parent[find(pr.pair_of[p].first)] = find(pr.pair_of[p].second);
        std::vector<std::size_t> size(pr.n, 0);
        std::size_t widest = 1;
        for (std::size_t i = 0; i < pr.n; ++i) widest = std::max(widest, ++size[find(i)]);
        std::size_t lb = ceil_log2(widest);

        std::vector<int> contrib;
        contrib.reserve(pr.cands.size());
        for (const Candidate& c : pr.cands) contrib.push_back(popcount(and_not(c.cov, covered)));
        lb = std::max(lb, walk_bound(contrib, popcount(and_not(pr.full, covered))));

        PairBits uadj = and_not(adjacent, covered);
        int adj_need = popcount(uadj);
        if (adj_need > 0) {
            contrib.clear();
            for (const Candidate& c : pr.cands) contrib.push_back(popcount(c.cov & uadj));
            lb = std::max(lb, walk_bound(contrib, adj_need));
        }
        return lb;
    }

    void dfs(const PairBits& covered, std::size_t depth) {
        ++explored;
        if (covered == pr.full) {
            if (depth < best_size) {
                best_size = depth;
                best_set = chosen;
            }
            return;
        }
        if (best_size <= depth + 1) return;
        std::size_t budget = best_size - 1 - depth;
        if (lower_bound(covered) > budget) return;
        auto [it, inserted] = visited.try_emplace(covered, depth);
        if (!inserted) {
            if (it->second <= depth) return;
            it->second = depth;
        }
        if (visited.size() > (std::size_t(1) << 22)) visited.clear();

        std::size_t branch_pair = pr.npairs;
        for (std::size_t q : pair_order)
            if (!test_bit(covered, q)) {
                branch_pair = q;
                break;
            }
        if (branch_pair == pr.npairs) throw std::logic_error("uncovered pair lookup failed");

        std::vector<std::pair<int, std::size_t>> children;
        for (std::size_t c : covering[branch_pair])
            children.push_back({-popcount(and_not(pr.cands[c].cov, covered)), c});
        std::sort(children.begin(), children.end());
        for (const auto& [neg, c] : children) {
            chosen.push_back(c);
            dfs(covered | pr.cands[c].cov, depth + 1);
            chosen.pop_back();
        }
    }
};

OracleResult package(const Problem& pr, const TraceSet& t, const PointSet& x, const std::vector<std::size_t>& pick,
                     std::uint64_t explored, const char* who) {
    OracleResult res;
    res.feasible = true;
    res.size = pick.size();
    res.explored = explored;
    std::vector<std::size_t> origs;
    for (std::size_t c : pick) origs.push_back(pr.cands[c].orig);
    std::sort(origs.begin(), origs.end());
    res.family.provenance =
        std::string("oracle(") + to_string(t.cls) + ", n=" + std::to_string(pr.n) + ")";
    for (std::size_t o : origs) res.family.separators.push_back(t.witnesses[o]);
    if (!is_separating(res.family, x)) throw std::logic_error(std::string(who) + ": witness family not separating");
    if (res.size > pr.n - 1) throw std::logic_error(std::string(who) + ": result above n-1");
    return res;
}

}  // namespace

OracleResult min_separating_size(const TraceSet& t, const PointSet& x) {
    Problem pr = prepare(t, x, true, "min_separating_size");
    if (auto wp = blocked_pair(pr)) return infeasible(*wp, 0);

    Searcher s(pr);
    s.greedy();
    s.dfs(PairBits{}, 0);
    if (s.best_size < ceil_log2(pr.n))
        throw std::logic_error("min_separating_size: result below ceil(log2 n)");
    return package(pr, t, x, s.best_set, s.explored, "min_separating_size");
}

OracleResult min_separating_size_exhaustive(const TraceSet& t, const PointSet& x) {
    Problem pr = prepare(t, x, false, "min_separating_size_exhaustive");
    if (auto wp = blocked_pair(pr)) return infeasible(*wp, 0);

    const std::size_t cc = pr.cands.size();
    std::vector<PairBits> suffix(cc + 1, PairBits{});
    for (std::size_t i = cc; i-- > 0;) suffix[i] = suffix[i + 1] | pr.cands[i].cov;

    std::uint64_t explored = 0;
    std::vector<std::size_t> stack;
    std::vector<std::size_t> found;

    auto rec = [&](auto&& self, std::size_t start, std::size_t need, const PairBits& acc) -> bool {
        ++explored;
        if (acc == pr.full) {
            found = stack;
            return true;
        }
        if (need == 0 || start >= cc) return false;
        if (cc - start < need) return false;
        if ((acc | suffix[start]) != pr.full) return false;
        for (std::size_t c = start; c < cc; ++c) {
            stack.push_back(c);
            if (self(self, c + 1, need - 1, acc | pr.cands[c].cov)) return true;
            stack.pop_back();
        }
        return false;
    };

    for (std::size_t k = 1; k <= pr.n - 1; ++k) {
        stack.clear();
        if (rec(rec, 0, k, PairBits{})) return package(pr, t, x, found, explored, "min_separating_size_exhaustive");
    }
    throw std::logic_error("min_separating_size_exhaustive: no family of size n-1 found");
}

OracleResult s_value(const PointSet& x, SeparatorClass cls) {
    TraceSet t;
    switch (cls) {
        case SeparatorClass::Halfplane: t = halfplane_traces(x); break;
        case SeparatorClass::Disc: t = disc_traces(x); break;
        case SeparatorClass::Convex: t = convex_traces(x); break;
    }
    return min_separating_size(t, x);
}

}  // namespace sepfam
