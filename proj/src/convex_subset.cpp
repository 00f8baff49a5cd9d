#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "sepfam/builders.hpp"
#include "sepfam/errors.hpp"
#include "sepfam/geometry.hpp"

#ifdef SEPFAM_HAVE_OPENMP
#include <omp.h>
#endif

// Longest convex chain dynamic program. For each pivot b (a candidate
// bottom-most vertex in (y, x)-lex order) directed edges between higher
// points are swept in angular order; chains extend along strictly turning
// edge sequences and close back at b. Keeping the two best chain values per
// vertex with distinct predecessors rules out the one degenerate walk an
// angular sweep could otherwise produce, an immediate edge reversal.

namespace sepfam {
namespace {

using I128 = __int128;

struct CoordsI64 {
    std::vector<long long> x, y;
    static I128 cross(long long ax, long long ay, long long bx, long long by) {
        return static_cast<I128>(ax) * by - static_cast<I128>(ay) * bx;
    }
};

struct CoordsBig {
    std::vector<BigInt> x, y;
    static BigInt cross(const BigInt& ax, const BigInt& ay, const BigInt& bx, const BigInt& by) {
        return ax * by - ay * bx;
    }
};

// Scales the rational points by the common denominator. Falls back to the
// bignum path when the scaled values do not comfortably fit 64 bits.
bool scale_points(const PointSet& pts, CoordsI64& out) {
    const long long limit = 1LL << 40;
    BigInt lcm = 1;
    for (const Point& p : pts) {
        BigInt dx = p.x.get_den(), dy = p.y.get_den();
        lcm = lcm / gcd(lcm, dx) * dx;
        lcm = lcm / gcd(lcm, dy) * dy;
        if (!lcm.fits_slong_p()) return false;
    }
    out.x.reserve(pts.size());
    out.y.reserve(pts.size());
    for (const Point& p : pts) {
        BigInt sx = p.x.get_num() * (lcm / p.x.get_den());
        BigInt sy = p.y.get_num() * (lcm / p.y.get_den());
        if (!sx.fits_slong_p() || !sy.fits_slong_p()) return false;
        long long vx = sx.get_si(), vy = sy.get_si();
        if (vx <= -limit || vx >= limit || vy <= -limit || vy >= limit) return false;
        out.x.push_back(vx);
        out.y.push_back(vy);
    }
    return true;
}

void scale_points(const PointSet& pts, CoordsBig& out) {
    BigInt lcm = 1;
    for (const Point& p : pts) {
        BigInt dx = p.x.get_den(), dy = p.y.get_den();
        lcm = lcm / gcd(lcm, dx) * dx;
        lcm = lcm / gcd(lcm, dy) * dy;
    }
    for (const Point& p : pts) {
        out.x.push_back(p.x.get_num() * (lcm / p.x.get_den()));
        out.y.push_back(p.y.get_num() * (lcm / p.y.get_den()));
    }
}

struct Edge {
    std::uint16_t u, v;
};

struct PivotResult {
    int len = 0;
    int close_u = -1;
    int node = -1;
};

template <class Coords>
struct ChainDp {
    const Coords& c;
    std::size_t n;
    std::vector<std::size_t> rank_of;
    std::vector<Edge> edges;
    std::vector<std::size_t> batch_end;

    std::vector<int> best1, best2, src1, src2, node1, node2;
    // immutable backpointers so a chain snapshot taken at closure time
    // survives later slot overwrites
    struct Node {
        int vertex, parent;
    };
    std::vector<Node> nodes;
    bool record = false;
    struct Staged {
        std::uint16_t v;
        int len;
        int src;
        int parent_node;
    };
    std::vector<Staged> staged;

    explicit ChainDp(const Coords& coords, std::size_t count) : c(coords), n(count) {
        std::vector<std::size_t> order(n);
        for (std::size_t i = 0; i < n; ++i) order[i] = i;
        std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
            if (c.y[a] != c.y[b]) return c.y[a] < c.y[b];
            return c.x[a] < c.x[b];
        });
        rank_of.resize(n);
        for (std::size_t r = 0; r < n; ++r) rank_of[order[r]] = r;

        edges.reserve(n * (n - 1));
        for (std::size_t u = 0; u < n; ++u)
            for (std::size_t v = 0; v < n; ++v)
                if (u != v) edges.push_back({static_cast<std::uint16_t>(u), static_cast<std::uint16_t>(v)});
        auto half = [&](const Edge& e) {
            auto dy = c.y[e.v] - c.y[e.u];
            auto dx = c.x[e.v] - c.x[e.u];
            return (dy < 0 || (dy == 0 && dx < 0)) ? 1 : 0;
        };
        std::sort(edges.begin(), edges.end(), [&](const Edge& a, const Edge& b) {
            int ha = half(a), hb = half(b);
            if (ha != hb) return ha < hb;
            auto cr = Coords::cross(c.x[a.v] - c.x[a.u], c.y[a.v] - c.y[a.u],
                                    c.x[b.v] - c.x[b.u], c.y[b.v] - c.y[b.u]);
            if (cr != 0) return cr > 0;
            if (a.u != b.u) return a.u < b.u;
            return a.v < b.v;
        });
        for (std::size_t i = 0; i < edges.size();) {
            std::size_t j = i + 1;
            while (j < edges.size()) {
                const Edge &a = edges[i], &b = edges[j];
                if (half(a) != half(b)) break;
                if (Coords::cross(c.x[a.v] - c.x[a.u], c.y[a.v] - c.y[a.u],
                                  c.x[b.v] - c.x[b.u], c.y[b.v] - c.y[b.u]) != 0)
                    break;
                ++j;
            }
            batch_end.push_back(j);
            i = j;
        }
        best1.assign(n, 0);
        best2.assign(n, 0);
        src1.assign(n, -1);
        src2.assign(n, -1);
        node1.assign(n, -1);
        node2.assign(n, -1);
    }

    int make_node(std::uint16_t v, int parent) {
        if (!record) return -1;
        nodes.push_back({static_cast<int>(v), parent});
        return static_cast<int>(nodes.size()) - 1;
    }

    void apply(const Staged& s) {
        if (s.src == src1[s.v]) {
            if (s.len > best1[s.v]) {
                best1[s.v] = s.len;
                node1[s.v] = make_node(s.v, s.parent_node);
            }
        } else if (s.len > best1[s.v]) {
            best2[s.v] = best1[s.v];
            src2[s.v] = src1[s.v];
            node2[s.v] = node1[s.v];
            best1[s.v] = s.len;
            src1[s.v] = s.src;
            node1[s.v] = make_node(s.v, s.parent_node);
        } else if (s.src == src2[s.v]) {
            if (s.len > best2[s.v]) {
                best2[s.v] = s.len;
                node2[s.v] = make_node(s.v, s.parent_node);
            }
        } else if (s.len > best2[s.v]) {
            best2[s.v] = s.len;
            src2[s.v] = s.src;
            node2[s.v] = make_node(s.v, s.parent_node);
        }
    }

    PivotResult run_pivot(std::size_t b) {
        std::fill(best1.begin(), best1.end(), 0);
        std::fill(best2.begin(), best2.end(), 0);
        std::fill(src1.begin(), src1.end(), -1);
        std::fill(src2.begin(), src2.end(), -1);
        std::fill(node1.begin(), node1.end(), -1);
        std::fill(node2.begin(), node2.end(), -1);
        nodes.clear();
        PivotResult res;
        const std::size_t rb = rank_of[b];
        std::size_t start = 0;
        for (std::size_t be : batch_end) {
            staged.clear();
            for (std::size_t e = start; e < be; ++e) {
                const Edge& ed = edges[e];
                if (ed.u == b) {
                    if (rank_of[ed.v] > rb) staged.push_back({ed.v, 2, static_cast<int>(b), -1});
                    continue;
                }
                if (rank_of[ed.u] <= rb) continue;
                if (ed.v == b) {
                    if (best1[ed.u] >= 2 && best1[ed.u] > res.len) {
                        res.len = best1[ed.u];
                        res.close_u = static_cast<int>(ed.u);
                        res.node = node1[ed.u];
                    }
                    continue;
                }
                if (rank_of[ed.v] <= rb) continue;
                int val, pnode;
                if (src1[ed.u] != static_cast<int>(ed.v)) {
                    val = best1[ed.u];
                    pnode = node1[ed.u];
                } else {
                    val = best2[ed.u];
                    pnode = node2[ed.u];
                }
                if (val >= 2) staged.push_back({ed.v, val + 1, static_cast<int>(ed.u), pnode});
            }
            for (const Staged& s : staged) apply(s);
            start = be;
        }
        return res;
    }

    std::vector<std::size_t> reconstruct(std::size_t b, const PivotResult& want) {
        record = true;
        PivotResult res = run_pivot(b);
        record = false;
        if (res.len != want.len || res.close_u != want.close_u)
            throw std::logic_error("convex chain reconstruction mismatch");
        std::vector<std::size_t> verts;
        for (int cur = res.node; cur != -1; cur = nodes[cur].parent)
            verts.push_back(static_cast<std::size_t>(nodes[cur].vertex));
        verts.push_back(b);
        if (static_cast<int>(verts.size()) != want.len)
            throw std::logic_error("convex chain length mismatch");
        std::sort(verts.begin(), verts.end());
        return verts;
    }
};

template <class Coords>
std::vector<std::size_t> solve(const Coords& coords, std::size_t n, bool parallel) {
    std::vector<PivotResult> results(n);
#ifdef SEPFAM_HAVE_OPENMP
#pragma omp parallel if (parallel)
    {
        ChainDp<Coords> dp(coords, n);
#pragma omp for schedule(dynamic)
        for (long b = 0; b < static_cast<long>(n); ++b) results[b] = dp.run_pivot(static_cast<std::size_t>(b));
    }
#else
    (void)parallel;
    ChainDp<Coords> dp0(coords, n);
    for (std::size_t b = 0; b < n; ++b) results[b] = dp0.run_pivot(b);
#endif
    std::size_t best_b = 0;
    int best_len = 0;
    for (std::size_t b = 0; b < n; ++b) {
        if (results[b].len > best_len) {
            best_len = results[b].len;
            best_b = b;
        }
    }
    if (best_len < 3) throw std::logic_error("no convex triangle found in general-position input");
    ChainDp<Coords> dp(coords, n);
    return dp.reconstruct(best_b, results[best_b]);
}

std::vector<std::size_t> subset_impl(const PointSet& x, bool parallel) {
    const std::size_t n = x.size();
    if (n == 0) throw precondition_error("largest_convex_subset: empty point set");
    if (n >= 65535) throw cap_error("largest_convex_subset: point set too large");
    if (n <= 2) {
        if (n == 2 && x[0] == x[1]) throw precondition_error("largest_convex_subset: duplicate points");
        std::vector<std::size_t> all(n);
        for (std::size_t i = 0; i < n; ++i) all[i] = i;
        return all;
    }
    CoordsI64 fast;
    if (scale_points(x, fast)) return solve(fast, n, parallel);
    CoordsBig big;
    scale_points(x, big);
    return solve(big, n, parallel);
}

void require_general_position(const PointSet& x) {
    if (auto t = find_collinear_triple(x))
        throw precondition_error("largest_convex_subset: collinear triple (" + std::to_string(t->a) + "," +
                                 std::to_string(t->b) + "," + std::to_string(t->c) + ")");
}

}  // namespace

namespace detail {

std::vector<std::size_t> largest_convex_subset_impl(const PointSet& x, bool parallel) {
    return subset_impl(x, parallel);
}

}  // namespace detail

std::vector<std::size_t> largest_convex_subset(const PointSet& x) {
    require_general_position(x);
    return subset_impl(x, true);
}

std::vector<std::size_t> largest_convex_subset_serial(const PointSet& x) {
    require_general_position(x);
    return subset_impl(x, false);
}

}  // namespace sepfam
