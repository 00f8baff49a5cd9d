#include "sepfam/separators.hpp"

#include <algorithm>
#include <map>

#include "sepfam/errors.hpp"

namespace sepfam {

bool contains(const Halfplane& h, const Point& p) { return h.a * p.x + h.b * p.y <= h.c; }

bool contains(const Disc& d, const Point& p) {
    Rational dx = p.x - d.center.x, dy = p.y - d.center.y;
    return dx * dx + dy * dy <= d.radius_sq;
}

bool contains(const ConvexPolygon& g, const Point& p) {
    const auto& v = g.vertices;
    switch (v.size()) {
        case 0: throw precondition_error("polygon without vertices");
        case 1: return v[0] == p;
        case 2:
            // On the segment: collinear and between the endpoints.
            if (orientation_sign(v[0], v[1], p) != 0) return false;
            {
                Rational t0 = (p.x - v[0].x) * (v[1].x - v[0].x) + (p.y - v[0].y) * (v[1].y - v[0].y);
                Rational t1 = (p.x - v[1].x) * (v[0].x - v[1].x) + (p.y - v[1].y) * (v[0].y - v[1].y);
                return t0 >= 0 && t1 >= 0;
            }
        default:
            for (std::size_t i = 0; i < v.size(); ++i)
                if (orientation_sign(v[i], v[(i + 1) % v.size()], p) < 0) return false;
            return true;
    }
}

bool contains(const Separator& s, const Point& p) {
    return std::visit([&](const auto& shape) { return contains(shape, p); }, s);
}

void validate_separator(const Separator& s) {
    if (const auto* h = std::get_if<Halfplane>(&s)) {
        if (h->a == 0 && h->b == 0) throw precondition_error("halfplane with zero normal");
        return;
    }
    if (const auto* d = std::get_if<Disc>(&s)) {
        if (d->radius_sq <= 0) throw precondition_error("disc with nonpositive squared radius");
        return;
    }
    const auto& v = std::get<ConvexPolygon>(s).vertices;
    if (v.empty()) throw precondition_error("polygon without vertices");
    for (std::size_t i = 0; i < v.size(); ++i)
        for (std::size_t j = i + 1; j < v.size(); ++j)
            if (v[i] == v[j]) throw precondition_error("polygon with repeated vertices");
    if (v.size() <= 2) return;
    // Strictly convex and counterclockwise: the hull must use every vertex,
    // in the same cyclic order.
    auto hull = convex_hull(v);
    if (hull.size() != v.size()) throw precondition_error("polygon vertices not in convex position");
    std::size_t shift = 0;
    while (shift < v.size() && hull[shift] != 0) ++shift;
    for (std::size_t i = 0; i < v.size(); ++i)
        if (hull[(shift + i) % v.size()] != i) throw precondition_error("polygon vertices not in counterclockwise order");
}

bool separates(const Separator& s, const Point& p, const Point& q) {
    if (p == q) throw precondition_error("separates needs two distinct points");
    return contains(s, p) != contains(s, q);
}

std::vector<bool> trace(const Separator& s, const PointSet& pts) {
    std::vector<bool> t(pts.size());
    for (std::size_t i = 0; i < pts.size(); ++i) t[i] = contains(s, pts[i]);
    return t;
}

std::vector<std::vector<bool>> signature_table(const SeparatingFamily& fam, const PointSet& pts) {
    std::vector<std::vector<bool>> rows(pts.size(), std::vector<bool>(fam.size()));
    for (std::size_t j = 0; j < fam.size(); ++j) {
        auto t = trace(fam.separators[j], pts);
        for (std::size_t i = 0; i < pts.size(); ++i) rows[i][j] = t[i];
    }
    return rows;
}

std::optional<WitnessPair> unseparated_pair(const SeparatingFamily& fam, const PointSet& pts) {
    auto rows = signature_table(fam, pts);
    std::map<std::vector<bool>, std::pair<std::size_t, std::size_t>> classes;
    constexpr std::size_t none = static_cast<std::size_t>(-1);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        auto [it, fresh] = classes.try_emplace(rows[i], i, none);
        if (!fresh && it->second.second == none) it->second.second = i;
    }
    std::optional<WitnessPair> best;
    for (const auto& [sig, pair] : classes) {
        if (pair.second == none) continue;
        if (!best || pair.first < best->first || (pair.first == best->first && pair.second < best->second))
            best = WitnessPair{pair.first, pair.second};
    }
    return best;
}

bool is_separating(const SeparatingFamily& fam, const PointSet& pts) {
    return !unseparated_pair(fam, pts).has_value();
}

}  // namespace sepfam
