#include <algorithm>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "sepfam/builders.hpp"
#include "sepfam/errors.hpp"
#include "sepfam/geometry.hpp"

namespace sepfam {

namespace detail {
std::vector<std::size_t> largest_convex_subset_impl(const PointSet& x, bool parallel);
}

namespace {

Point sub(const Point& a, const Point& b) { return {a.x - b.x, a.y - b.y}; }
Point add(const Point& a, const Point& b) { return {a.x + b.x, a.y + b.y}; }
Point scaled(const Rational& s, const Point& a) { return {s * a.x, s * a.y}; }
Rational dot(const Point& a, const Point& b) { return a.x * b.x + a.y * b.y; }
Rational cross(const Point& a, const Point& b) { return a.x * b.y - a.y * b.x; }

Rational dist_sq(const Point& a, const Point& b) {
    Rational dx = a.x - b.x, dy = a.y - b.y;
    return dx * dx + dy * dy;
}

void require_distinct(const PointSet& x, const std::string& who) {
    std::vector<std::size_t> order(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        if (x[a].x != x[b].x) return x[a].x < x[b].x;
        return x[a].y < x[b].y;
    });
    for (std::size_t i = 1; i < order.size(); ++i)
        if (x[order[i - 1]] == x[order[i]])
            throw precondition_error(who + ": duplicate points " + std::to_string(std::min(order[i - 1], order[i])) +
                                     " and " + std::to_string(std::max(order[i - 1], order[i])));
}

void require_general(const PointSet& x, const std::string& who) {
    if (auto t = find_collinear_triple(x))
        throw precondition_error(who + ": collinear triple (" + std::to_string(t->a) + "," + std::to_string(t->b) +
                                 "," + std::to_string(t->c) + ")");
}

// hull of x[idxs], returned as original indices in counterclockwise order
std::vector<std::size_t> hull_cycle(const PointSet& x, const std::vector<std::size_t>& idxs) {
    PointSet pts;
    pts.reserve(idxs.size());
    for (std::size_t i : idxs) pts.push_back(x[i]);
    std::vector<std::size_t> h = convex_hull(pts);
    for (std::size_t& p : h) p = idxs[p];
    return h;
}

ConvexPolygon polygon_of(const PointSet& x, const std::vector<std::size_t>& idxs) {
    ConvexPolygon poly;
    for (std::size_t i : hull_cycle(x, idxs)) poly.vertices.push_back(x[i]);
    return poly;
}

Disc singleton_disc(const PointSet& x, const std::vector<std::size_t>& alive, std::size_t i) {
    Rational best;
    bool first = true;
    for (std::size_t j : alive) {
        if (j == i) continue;
        Rational d2 = dist_sq(x[i], x[j]);
        if (first || d2 < best) {
            best = d2;
            first = false;
        }
    }
    if (first) throw std::logic_error("singleton_disc: no other point");
    return Disc{x[i], best / 4};
}

// Disc through the chord [s1, s2] whose center sits far along the side of
// `inward`: far enough that over the window spanned by the probe points the
// circle deviates from line(s1, s2) by less than both `cl` and half the
// smallest probe-to-line distance. Membership is then the chord interval
// for points on the line and the halfplane side for everything else.
Disc far_disc(const Point& s1, const Point& s2, const Point& inward, const Rational& cl, const PointSet& probes,
              const PointSet& window_extra) {
    Point u = sub(s2, s1);
    Rational usq = dot(u, u);
    if (sign(usq) == 0) throw std::logic_error("far_disc: degenerate chord");
    Point mid = add(s1, scaled(Rational(1, 2), u));
    Rational a2 = dist_sq(s1, mid);
    Point w{-u.y, u.x};
    Rational side = dot(w, inward);
    if (sign(side) == 0) throw std::logic_error("far_disc: inward direction parallel to chord");

    Rational w2 = a2;
    Rational g2;
    bool has_gap = false;
    auto widen = [&](const Point& p, bool gap) {
        Point d = sub(p, mid);
        Rational along = dot(d, u);
        w2 = std::max(w2, Rational(along * along / usq));
        if (!gap) return;
        Rational cr = cross(u, d);
        if (sign(cr) != 0) {
            Rational gg = cr * cr / usq;
            if (!has_gap || gg < g2) g2 = gg;
            has_gap = true;
        }
    };
    for (const Point& p : probes) widen(p, true);
    for (const Point& p : window_extra) widen(p, false);

    Rational dev2 = cl * cl;
    if (has_gap && g2 / 4 < dev2) dev2 = g2 / 4;
    Rational t = std::max(w2, Rational(w2 * w2 / dev2)) / usq / 2 + 1;
    if (sign(side) < 0) t = -t;
    Point center = add(mid, scaled(t, w));
    return Disc{center, a2 + t * t * usq};
}

void assert_trace(const Separator& s, const PointSet& x, const std::vector<std::size_t>& alive,
                  const std::vector<std::size_t>& want, const char* what) {
    std::vector<std::size_t> got;
    for (std::size_t i : alive)
        if (contains(s, x[i])) got.push_back(i);
    if (got != want) throw std::logic_error(std::string(what) + ": realized trace differs from target");
}

void erase_index(std::vector<std::size_t>& v, std::size_t val) {
    auto it = std::find(v.begin(), v.end(), val);
    if (it == v.end()) throw std::logic_error("split bookkeeping: index not present");
    v.erase(it);
}

PointSet bounding_corners(const PointSet& x) {
    Rational minx = x[0].x, maxx = x[0].x, miny = x[0].y, maxy = x[0].y;
    for (const Point& p : x) {
        minx = std::min(minx, p.x);
        maxx = std::max(maxx, p.x);
        miny = std::min(miny, p.y);
        maxy = std::max(maxy, p.y);
    }
    return {{minx, miny}, {minx, maxy}, {maxx, miny}, {maxx, maxy}};
}

struct SplitParts {
    std::vector<Separator> seps;
    std::vector<SplitState> states;
};

// Shared pair-removal skeleton: a median halfplane over projections onto d,
// then one separator per hull edge crossing the median line until two
// points remain. idxs must have even size.
SplitParts even_split(const PointSet& x, const std::vector<std::size_t>& idxs, const Direction& d, bool discs,
                      const Rational& cl, const PointSet& corners) {
    const std::size_t m = idxs.size();
    if (m < 2 || m % 2 != 0) throw std::logic_error("even_split: needs an even number of points");

    std::vector<Rational> proj(x.size());
    for (std::size_t i : idxs) proj[i] = project(d, x[i]);
    std::vector<std::size_t> order = idxs;
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return proj[a] < proj[b]; });
    for (std::size_t i = 1; i < m; ++i)
        if (proj[order[i - 1]] == proj[order[i]]) throw std::logic_error("even_split: direction not generic");

    const Rational c = (proj[order[m / 2 - 1]] + proj[order[m / 2]]) / 2;
    const Halfplane h0{d.dx, d.dy, c};
    std::vector<std::size_t> q(order.begin(), order.begin() + m / 2);
    std::vector<std::size_t> r(order.begin() + m / 2, order.end());
    std::sort(q.begin(), q.end());
    std::sort(r.begin(), r.end());

    SplitParts out;
    if (!discs) {
        out.seps.push_back(h0);
    } else if (m == 2) {
        out.seps.push_back(singleton_disc(x, idxs, order[0]));
    } else {
        Point s1 = sign(d.dy) != 0 ? Point{Rational(0), c / d.dy} : Point{c / d.dx, Rational(0)};
        Point s2 = add(s1, Point{-d.dy, d.dx});
        PointSet probes;
        for (std::size_t i : idxs) probes.push_back(x[i]);
        Disc d0 = far_disc(s1, s2, Point{-d.dx, -d.dy}, cl, probes, corners);
        assert_trace(Separator{d0}, x, idxs, q, "step-0 disc");
        out.seps.push_back(d0);
    }
    out.states.push_back({q, r, h0, 0});

    std::size_t step = 1;
    while (q.size() + r.size() > 2) {
        std::vector<std::size_t> alive;
        std::merge(q.begin(), q.end(), r.begin(), r.end(), std::back_inserter(alive));
        std::vector<std::size_t> hc = hull_cycle(x, alive);

        // hull edges crossing the median line, lowest index pair wins
        std::size_t ea = 0, eb = 0;
        bool found = false;
        const std::size_t ecount = hc.size() == 2 ? 1 : hc.size();
        for (std::size_t t = 0; t < ecount; ++t) {
            std::size_t a = hc[t], b = hc[(t + 1) % hc.size()];
            if ((proj[a] < c) == (proj[b] < c)) continue;
            std::pair<std::size_t, std::size_t> key{std::min(a, b), std::max(a, b)};
            std::pair<std::size_t, std::size_t> cur{std::min(ea, eb), std::max(ea, eb)};
            if (!found || key < cur) {
                ea = a;
                eb = b;
                found = true;
            }
        }
        if (!found) throw std::logic_error("even_split: no hull edge crosses the median line");

        std::size_t qrem, rrem;
        if (!discs) {
            Point e = sub(x[eb], x[ea]);
            Point nl{-e.y, e.x};
            Halfplane hp{nl.x, nl.y, dot(nl, x[ea])};
            std::vector<std::size_t> want{std::min(ea, eb), std::max(ea, eb)};
            assert_trace(Separator{hp}, x, alive, want, "step halfplane");
            out.seps.push_back(hp);
            qrem = proj[ea] < c ? ea : eb;
            rrem = qrem == ea ? eb : ea;
        } else {
            Point u = sub(x[eb], x[ea]);
            std::vector<std::size_t> onl;
            for (std::size_t z : alive)
                if (sign(cross(u, sub(x[z], x[ea]))) == 0) onl.push_back(z);
            Rational usq = dot(u, u);
            std::sort(onl.begin(), onl.end(), [&](std::size_t za, std::size_t zb) {
                return dot(sub(x[za], x[ea]), u) < dot(sub(x[zb], x[ea]), u);
            });
            if (proj[onl.front()] > proj[onl.back()]) std::reverse(onl.begin(), onl.end());
            std::size_t s = 0;
            while (s < onl.size() && proj[onl[s]] < c) ++s;
            if (s == 0 || s == onl.size()) throw std::logic_error("even_split: edge line does not straddle the median");
            std::size_t qsel = onl[s - 1], rsel = onl[s];

            // chord from qsel to rsel extended by a margin below the gap to
            // the next point on the line and below the clearance
            Point e = sub(x[rsel], x[qsel]);
            Rational esq = dot(e, e);
            Rational mu(1, 2);
            for (std::size_t z : onl) {
                if (z == qsel || z == rsel) continue;
                Rational lam = dot(sub(x[z], x[qsel]), e) / esq;
                Rational gap = sign(lam) < 0 ? Rational(-lam) : Rational(lam - 1);
                mu = std::min(mu, Rational(gap / 2));
            }
            Rational linf = std::max(abs_rational(e.x), abs_rational(e.y));
            mu = std::min(mu, Rational(cl / (2 * linf)));
            Point s1 = sub(x[qsel], scaled(mu, e));
            Point s2 = add(x[rsel], scaled(mu, e));
            PointSet probes;
            for (std::size_t i : alive) probes.push_back(x[i]);
            Disc dc = far_disc(s1, s2, Point{u.y, -u.x}, cl, probes, corners);
            std::vector<std::size_t> want{std::min(qsel, rsel), std::max(qsel, rsel)};
            assert_trace(Separator{dc}, x, alive, want, "step disc");
            out.seps.push_back(dc);
            qrem = qsel;
            rrem = rsel;
        }
        erase_index(q, qrem);
        erase_index(r, rrem);
        out.states.push_back({q, r, h0, step});
        ++step;
    }
    return out;
}

SplitRun split_run(const PointSet& x, bool discs, const std::string& name) {
    const std::size_t n = x.size();
    if (n < 2) throw precondition_error(name + ": needs at least two points");
    require_distinct(x, name);
    if (!discs) require_general(x, name);

    Rational cl = discs ? clearance(x) : Rational(0);
    PointSet corners = discs ? bounding_corners(x) : PointSet{};
    Direction d = generic_direction(x);

    std::vector<std::size_t> idxs(n);
    for (std::size_t i = 0; i < n; ++i) idxs[i] = i;

    SplitRun run;
    run.family.provenance = name + "(n=" + std::to_string(n) + ")";
    if (n % 2 == 1) {
        std::vector<Rational> proj(n);
        for (std::size_t i = 0; i < n; ++i) proj[i] = project(d, x[i]);
        std::size_t extreme = 0;
        for (std::size_t i = 1; i < n; ++i)
            if (proj[i] > proj[extreme]) extreme = i;
        if (discs) {
            run.family.separators.push_back(singleton_disc(x, idxs, extreme));
        } else {
            Rational second;
            bool first = true;
            for (std::size_t i = 0; i < n; ++i) {
                if (i == extreme) continue;
                if (first || proj[i] > second) {
                    second = proj[i];
                    first = false;
                }
            }
            Rational cut = (proj[extreme] + second) / 2;
            Halfplane iso{-d.dx, -d.dy, -cut};
            assert_trace(Separator{iso}, x, idxs, {extreme}, "odd isolator");
            run.family.separators.push_back(iso);
        }
        erase_index(idxs, extreme);
    }

    SplitParts parts = even_split(x, idxs, d, discs, cl, corners);
    for (Separator& s : parts.seps) run.family.separators.push_back(std::move(s));
    run.states = std::move(parts.states);
    if (run.family.size() != (n + 1) / 2) throw std::logic_error(name + ": family size is not ceil(n/2)");
    return run;
}

std::size_t ceil_log2(std::size_t k) {
    std::size_t bits = 0;
    while ((std::size_t(1) << bits) < k) ++bits;
    return bits;
}

}  // namespace

SeparatingFamily prefix_halfplanes(const PointSet& x) {
    if (x.empty()) throw precondition_error("prefix_halfplanes: empty point set");
    SeparatingFamily fam;
    fam.provenance = "prefix_halfplanes(n=" + std::to_string(x.size()) + ")";
    if (x.size() == 1) return fam;
    require_distinct(x, "prefix_halfplanes");

    Direction d = generic_direction(x);
    std::vector<Rational> proj(x.size());
    std::vector<std::size_t> order(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) {
        proj[i] = project(d, x[i]);
        order[i] = i;
    }
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return proj[a] < proj[b]; });
    for (std::size_t i = 1; i < order.size(); ++i) {
        if (proj[order[i - 1]] == proj[order[i]]) throw std::logic_error("prefix_halfplanes: direction not generic");
        Rational c = (proj[order[i - 1]] + proj[order[i]]) / 2;
        fam.separators.push_back(Halfplane{d.dx, d.dy, c});
    }
    return fam;
}

SplitRun halfplane_separate_run(const PointSet& x) { return split_run(x, false, "halfplane_separate"); }

SeparatingFamily halfplane_separate(const PointSet& x) { return halfplane_separate_run(x).family; }

SplitRun disc_separate_run(const PointSet& x) { return split_run(x, true, "disc_separate"); }

SeparatingFamily disc_separate(const PointSet& x) { return disc_separate_run(x).family; }

std::vector<ConvexPolygon> binary_family(const PointSet& x, const std::vector<std::size_t>& q) {
    if (q.empty()) throw precondition_error("binary_family: empty index set");
    std::set<std::size_t> seen;
    for (std::size_t i : q) {
        if (i >= x.size()) throw precondition_error("binary_family: index out of range");
        if (!seen.insert(i).second) throw precondition_error("binary_family: repeated index");
    }
    for (std::size_t a = 0; a < q.size(); ++a)
        for (std::size_t b = a + 1; b < q.size(); ++b)
            if (x[q[a]] == x[q[b]]) throw precondition_error("binary_family: coincident points");
    if (q.size() >= 3 && hull_cycle(x, q).size() != q.size())
        throw precondition_error("binary_family: points not in convex position");

    const std::size_t k = q.size();
    std::vector<ConvexPolygon> out;
    for (std::size_t j = 0; j < ceil_log2(k); ++j) {
        std::vector<std::size_t> members;
        for (std::size_t t = 0; t < k; ++t)
            if (t >> j & 1) members.push_back(q[t]);
        out.push_back(polygon_of(x, members));
    }
    return out;
}

ConvexRun convex_separate_run(const PointSet& x) {
    const std::size_t n = x.size();
    if (n < 2) throw precondition_error("convex_separate: needs at least two points");
    require_distinct(x, "convex_separate");
    require_general(x, "convex_separate");

    ConvexRun run;
    if (n <= 16) {
        run.family = disc_separate(x);
        run.family.provenance = "convex_separate(n=" + std::to_string(n) + ") via disc_separate";
        return run;
    }

    std::size_t k = 1;
    while (4 * (k + 1) < 64 && (std::size_t(1) << (4 * (k + 1))) <= n) ++k;
    run.family.provenance = "convex_separate(n=" + std::to_string(n) + ", k=" + std::to_string(k) + ")";

    std::vector<std::size_t> p(n);
    for (std::size_t i = 0; i < n; ++i) p[i] = i;

    while (p.size() * p.size() > n) {
        PointSet sub_pts;
        sub_pts.reserve(p.size());
        for (std::size_t i : p) sub_pts.push_back(x[i]);
        std::vector<std::size_t> dp = detail::largest_convex_subset_impl(sub_pts, true);
        if (dp.size() < k) throw std::logic_error("convex_separate: convex-position subset below floor(log2(n)/4)");

        std::vector<std::size_t> qi;
        for (std::size_t t = 0; t < k; ++t) qi.push_back(p[dp[t]]);

        ConvexStepRecord rec;
        rec.qi = qi;
        rec.removed = qi;
        rec.hull = polygon_of(x, qi);
        run.family.separators.push_back(rec.hull);

        std::vector<std::size_t> inside;
        for (std::size_t z = 0; z < n; ++z) {
            if (std::binary_search(qi.begin(), qi.end(), z)) continue;
            if (contains(rec.hull, x[z])) inside.push_back(z);
        }
        if (!inside.empty()) {
            rec.inner = polygon_of(x, inside);
            run.family.separators.push_back(*rec.inner);
        }
        rec.bits = binary_family(x, qi);
        for (const ConvexPolygon& bp : rec.bits) run.family.separators.push_back(bp);
        run.steps.push_back(std::move(rec));

        std::vector<std::size_t> rest;
        std::set_difference(p.begin(), p.end(), qi.begin(), qi.end(), std::back_inserter(rest));
        p = std::move(rest);
    }

    Rational cl = clearance(x);
    for (std::size_t i : p) run.family.separators.push_back(Disc{x[i], cl * cl});
    if (!is_separating(run.family, x)) throw std::logic_error("convex_separate: produced family is not separating");
    return run;
}

SeparatingFamily convex_separate(const PointSet& x) { return convex_separate_run(x).family; }

SeparatingFamily prune_to_minimal(const SeparatingFamily& fam, const PointSet& x) {
    const std::size_t n = x.size();
    const std::size_t m = fam.size();
    std::vector<std::vector<bool>> tr(m);
    for (std::size_t s = 0; s < m; ++s) tr[s] = trace(fam.separators[s], x);

    std::vector<int> cnt(n * n, 0);
    for (std::size_t s = 0; s < m; ++s)
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j)
                if (tr[s][i] != tr[s][j]) ++cnt[i * n + j];
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (cnt[i * n + j] == 0)
                throw precondition_error("prune_to_minimal: family does not separate points " + std::to_string(i) +
                                         " and " + std::to_string(j));

    std::vector<bool> kept(m, true);
    for (std::size_t s = 0; s < m; ++s) {
        bool removable = true;
        for (std::size_t i = 0; i < n && removable; ++i)
            for (std::size_t j = i + 1; j < n; ++j)
                if (tr[s][i] != tr[s][j] && cnt[i * n + j] < 2) {
                    removable = false;
                    break;
                }
        if (!removable) continue;
        kept[s] = false;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j)
                if (tr[s][i] != tr[s][j]) --cnt[i * n + j];
    }

    SeparatingFamily out;
    out.provenance = fam.provenance.empty() ? "pruned" : fam.provenance + " | pruned";
    for (std::size_t s = 0; s < m; ++s)
        if (kept[s]) out.separators.push_back(fam.separators[s]);
    if (n >= 1 && out.size() > n - 1) throw std::logic_error("prune_to_minimal: minimal family larger than n-1");
    return out;
}

}  // namespace sepfam
