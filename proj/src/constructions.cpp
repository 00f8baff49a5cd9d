#include "sepfam/constructions.hpp"

#include <numeric>
#include <random>
#include <set>

#include "sepfam/errors.hpp"

namespace sepfam {

PointSet collinear_points(std::size_t n) {
    if (n < 1) throw precondition_error("collinear_points needs n >= 1");
    PointSet pts;
    pts.reserve(n);
    for (std::size_t i = 0; i < n; ++i) pts.push_back({make_rational(static_cast<long>(i)), Rational(0)});
    return pts;
}

PointSet circle_points(std::size_t n) {
    if (n < 1) throw precondition_error("circle_points needs n >= 1");
    PointSet pts;
    pts.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        Rational t = make_rational(static_cast<long>(i + 1), static_cast<long>(n + 1));
        Rational t2 = t * t;
        pts.push_back({(1 - t2) / (1 + t2), 2 * t / (1 + t2)});
    }
    return pts;
}

namespace {

// Integer point cloud with bounding box [0,w] x [0,h] and an integer upper
// bound on the absolute slope of every line through two of its points.
struct IntCloud {
    std::vector<std::pair<BigInt, BigInt>> pts;
    BigInt w, h, slope_bound;
};

// Appends `piece` to `base` one unit to the right and high enough that every
// base-to-piece slope strictly exceeds `floor_slope` (and hence every slope
// already present, when floor_slope bounds those).
void glue_above(IntCloud& base, const IntCloud& piece, const BigInt& floor_slope) {
    BigInt xoff = base.w + 1;
    BigInt span = xoff + piece.w;
    BigInt yoff = (floor_slope + 1) * span + base.h;
    for (const auto& p : piece.pts) base.pts.emplace_back(p.first + xoff, p.second + yoff);
    base.w = span;
    base.h = yoff + piece.h;
    base.slope_bound = yoff + piece.h;
}

// No (a+2)-point cup and no (b+2)-point cap; size C(a+b, a). Gluing the two
// sub-pieces with all cross slopes above the internal ones caps mixed cups
// at cup(L)+1 and mixed caps at 1+cap(R).
IntCloud cup_cap_set(int a, int b) {
    if (a == 0 || b == 0) return {{{0, 0}}, 0, 0, 0};
    IntCloud left = cup_cap_set(a - 1, b);
    IntCloud right = cup_cap_set(a, b - 1);
    BigInt floor_slope = std::max(left.slope_bound, right.slope_bound);
    glue_above(left, right, floor_slope);
    return left;
}

}  // namespace

PointSet erdos_szekeres_set(const EsParams& params) {
    if (params.k < 3 || params.k > 8) throw precondition_error("erdos_szekeres_set supports 3 <= k <= 8");
    if (params.hscale <= 0 || params.vscale <= 0)
        throw precondition_error("erdos_szekeres_set scale factors must be positive");
    const int k = params.k;

    std::vector<IntCloud> blocks;
    BigInt intra = 0;
    for (int i = 0; i <= k - 2; ++i) {
        blocks.push_back(cup_cap_set(i, k - 2 - i));
        intra = std::max(intra, blocks.back().slope_bound);
    }
    // Block-to-block slopes must exceed all intra-block slopes and grow with
    // the target block, so every convex chain crosses blocks cup-style at
    // most once per block upward and enters cap-style at most once.
    IntCloud acc = blocks[0];
    acc.slope_bound = std::max(acc.slope_bound, intra);
    for (int i = 1; i <= k - 2; ++i) glue_above(acc, blocks[i], acc.slope_bound);

    PointSet out;
    out.reserve(acc.pts.size());
    for (const auto& p : acc.pts)
        out.push_back({params.hscale * make_rational(p.first, 1), params.vscale * make_rational(p.second, 1)});
    if (auto bad = find_collinear_triple(out))
        throw std::logic_error("erdos_szekeres_set produced a collinear triple");
    return out;
}

PointSet erdos_szekeres_set(int k) { return erdos_szekeres_set(EsParams{k, 1, 1}); }

PointSet capped_convex_parent(std::size_t m) {
    if (m < 2) throw precondition_error("capped_convex_parent needs m >= 2");
    if (m > 64) throw precondition_error("capped_convex_parent supports m <= 64");
    int k = 3;
    while ((std::size_t{1} << (k - 2)) < m) ++k;
    PointSet es = erdos_szekeres_set(k);
    es.resize(m);
    return es;
}

TwinSet twin_set(const PointSet& parent) {
    if (parent.size() < 2) throw precondition_error("twin_set needs at least two parents");
    if (auto bad = find_collinear_triple(parent))
        throw precondition_error("twin_set needs parents in general position (collinear triple " +
                                 std::to_string(bad->a) + "," + std::to_string(bad->b) + "," +
                                 std::to_string(bad->c) + ")");
    TwinSet tw;
    tw.parents = parent;
    tw.direction = generic_direction(parent);
    tw.epsilon = clearance(parent);
    Rational dinf = std::max(abs_rational(tw.direction.dx), abs_rational(tw.direction.dy));
    Rational scale = tw.epsilon / (2 * dinf);
    Point offset{tw.direction.dx * scale, tw.direction.dy * scale};
    for (std::size_t i = 0; i < parent.size(); ++i) {
        tw.points.push_back({parent[i].x + offset.x, parent[i].y + offset.y});
        tw.points.push_back({parent[i].x - offset.x, parent[i].y - offset.y});
        tw.pairs.emplace_back(2 * i, 2 * i + 1);
    }
    if (!is_general_position(tw.points)) throw std::logic_error("twin_set produced a degenerate configuration");
    return tw;
}

PointSet random_general_position(std::size_t n, std::uint64_t seed, std::uint64_t bounding) {
    if (n < 1) throw precondition_error("random_general_position needs n >= 1");
    if (bounding < 1) throw precondition_error("random_general_position needs bounding >= 1");
    std::mt19937_64 rng(seed);
    auto draw = [&] { return static_cast<long long>(rng() % bounding); };

    PointSet pts;
    std::vector<std::pair<long long, long long>> coords;
    // One direction set per accepted point; a repeated direction at any
    // anchor is exactly a collinear triple.
    std::vector<std::set<std::pair<long long, long long>>> dirs;
    std::uint64_t attempts = 0;
    const std::uint64_t attempt_cap = 10000 * (n + 1);
    while (coords.size() < n) {
        if (++attempts > attempt_cap)
            throw std::runtime_error("random_general_position exhausted attempts; bounding box too small");
        long long x = draw(), y = draw();
        bool ok = true;
        std::vector<std::pair<long long, long long>> seen(coords.size());
        for (std::size_t a = 0; a < coords.size() && ok; ++a) {
            long long dx = x - coords[a].first, dy = y - coords[a].second;
            if (dx == 0 && dy == 0) {
                ok = false;
                break;
            }
            long long g = std::gcd(dx < 0 ? -dx : dx, dy < 0 ? -dy : dy);
            dx /= g;
            dy /= g;
            if (dx < 0 || (dx == 0 && dy < 0)) {
                dx = -dx;
                dy = -dy;
            }
            seen[a] = {dx, dy};
            ok = !dirs[a].count(seen[a]);
        }
        if (!ok) continue;
        for (std::size_t a = 0; a < coords.size(); ++a) dirs[a].insert(seen[a]);
        dirs.emplace_back();
        coords.emplace_back(x, y);
    }
    for (const auto& c : coords) pts.push_back({make_rational(c.first), make_rational(c.second)});
    return pts;
}

}  // namespace sepfam
