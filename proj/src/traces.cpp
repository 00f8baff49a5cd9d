#include <algorithm>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "sepfam/errors.hpp"
#include "sepfam/geometry.hpp"
#include "sepfam/oracle.hpp"

namespace sepfam {
namespace {

Point vsub(const Point& a, const Point& b) { return {a.x - b.x, a.y - b.y}; }
Rational vdot(const Point& a, const Point& b) { return a.x * b.x + a.y * b.y; }
Rational vcross(const Point& a, const Point& b) { return a.x * b.y - a.y * b.x; }

Rational dist_sq(const Point& a, const Point& b) {
    Rational dx = a.x - b.x, dy = a.y - b.y;
    return dx * dx + dy * dy;
}

using MaskWitness = std::pair<std::uint32_t, Separator>;

void check_size(const PointSet& x, std::size_t cap, const char* who) {
    if (x.size() < 2) throw precondition_error(std::string(who) + ": needs at least two points");
    if (x.size() > cap)
        throw cap_error(std::string(who) + ": point set larger than the cap of " + std::to_string(cap));
    for (std::size_t i = 0; i < x.size(); ++i)
        for (std::size_t j = i + 1; j < x.size(); ++j)
            if (x[i] == x[j])
                throw precondition_error(std::string(who) + ": points " + std::to_string(i) +
                                         " and " + std::to_string(j) + " coincide");
}

// first-occurrence dedup plus witness re-verification
TraceSet finalize(SeparatorClass cls, const PointSet& x, const std::vector<MaskWitness>& cands, const char* who) {
    TraceSet out;
    out.cls = cls;
    std::set<std::uint32_t> seen;
    for (const MaskWitness& mw : cands) {
        if (!seen.insert(mw.first).second) continue;
        if (trace_mask(mw.second, x) != mw.first)
            throw std::logic_error(std::string(who) + ": witness trace differs from its mask");
        out.masks.push_back(mw.first);
        out.witnesses.push_back(mw.second);
    }
    return out;
}

// Halfplane trace candidates for one ordered pair (i, j): boundary normal
// nrm = rot90(pj - pi). Three sort keys cover the line through the pair and
// both ways of rotating it infinitesimally around the contact points:
// grouped projections with cuts between groups, and the two tilted strict
// orders (projection, +-shift). All cuts avoid point projections, so every
// witness boundary is point-free.
void pair_halfplanes(const PointSet& x, std::size_t i, std::size_t j, std::vector<MaskWitness>& out) {
    const std::size_t n = x.size();
    Point d = vsub(x[j], x[i]);
    Point nrm{-d.y, d.x};
    std::vector<Rational> v(n), w(n);
    for (std::size_t k = 0; k < n; ++k) {
        v[k] = vdot(nrm, x[k]);
        w[k] = vdot(d, x[k]);
    }

    std::vector<std::size_t> order(n);
    for (std::size_t k = 0; k < n; ++k) order[k] = k;

    // exact: cuts between projection groups
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return v[a] < v[b]; });
    {
        std::uint32_t mask = 0;
        out.push_back({0, Halfplane{nrm.x, nrm.y, v[order[0]] - 1}});
        std::size_t k = 0;
        while (k < n) {
            std::size_t e = k;
            while (e < n && v[order[e]] == v[order[k]]) {
                mask |= std::uint32_t(1) << order[e];
                ++e;
            }
            Rational cut = e < n ? Rational((v[order[e - 1]] + v[order[e]]) / 2)
                                 : Rational(v[order[e - 1]] + 1);
            out.push_back({mask, Halfplane{nrm.x, nrm.y, cut}});
            k = e;
        }
    }

    // tilt magnitude making the projection order exactly lexicographic
    Rational kf(1);
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = a + 1; b < n; ++b) {
            if (v[a] == v[b]) continue;
            Rational ratio = abs_rational(w[a] - w[b]) / abs_rational(v[a] - v[b]);
            if (ratio + 1 > kf) kf = ratio + 1;
        }

    for (int tilt = 0; tilt < 2; ++tilt) {
        Point np = tilt == 0 ? Point{kf * nrm.x + d.x, kf * nrm.y + d.y} : Point{kf * nrm.x - d.x, kf * nrm.y - d.y};
        std::vector<Rational> pv(n);
        for (std::size_t k = 0; k < n; ++k) pv[k] = vdot(np, x[k]);
        std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return pv[a] < pv[b]; });
        std::uint32_t mask = 0;
        out.push_back({0, Halfplane{np.x, np.y, pv[order[0]] - 1}});
        std::size_t k = 0;
        while (k < n) {
            std::size_t e = k;
            while (e < n && pv[order[e]] == pv[order[k]]) {
                mask |= std::uint32_t(1) << order[e];
                ++e;
            }
            Rational cut = e < n ? Rational((pv[order[e - 1]] + pv[order[e]]) / 2)
                                 : Rational(pv[order[e - 1]] + 1);
            out.push_back({mask, Halfplane{np.x, np.y, cut}});
            k = e;
        }
    }
}

TraceSet halfplane_traces_impl(const PointSet& x, bool parallel) {
    check_size(x, 20, "halfplane_traces");
    const std::size_t n = x.size();
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (i != j) pairs.push_back({i, j});

    std::vector<std::vector<MaskWitness>> buckets(pairs.size());
#ifdef SEPFAM_HAVE_OPENMP
#pragma omp parallel for schedule(dynamic) if (parallel)
#else
    (void)parallel;
#endif
    for (long t = 0; t < static_cast<long>(pairs.size()); ++t)
        pair_halfplanes(x, pairs[t].first, pairs[t].second, buckets[t]);

    std::vector<MaskWitness> cands;
    for (const auto& b : buckets) cands.insert(cands.end(), b.begin(), b.end());
    return finalize(SeparatorClass::Halfplane, x, cands, "halfplane_traces");
}

// Disc candidates from the pencil of circles through points i and j:
// center mid + t*rot90(pj-pi). Membership of any third point flips only at
// its critical t, so sampling every critical, the midpoints between
// consecutive ones, and one value beyond each extreme realizes every trace
// the pencil admits.
void pair_discs(const PointSet& x, std::size_t i, std::size_t j, std::vector<MaskWitness>& out) {
    if (x[i] == x[j]) return;
    Point u = vsub(x[j], x[i]);
    Point w{-u.y, u.x};
    Point mid{(x[i].x + x[j].x) / 2, (x[i].y + x[j].y) / 2};
    Rational base = dist_sq(x[i], mid);
    Rational wsq = vdot(w, w);

    std::vector<Rational> crit;
    for (std::size_t k = 0; k < x.size(); ++k) {
        if (k == i || k == j) continue;
        Point dk = vsub(x[k], mid);
        Rational den = 2 * vdot(w, dk);
        if (sign(den) == 0) continue;  // collinear with the chord: membership is t-independent
        crit.push_back((dist_sq(x[k], mid) - base) / den);
    }
    std::sort(crit.begin(), crit.end());
    crit.erase(std::unique(crit.begin(), crit.end()), crit.end());

    std::vector<Rational> samples;
    if (crit.empty()) {
        samples.push_back(Rational(0));
    } else {
        samples.push_back(crit.front() - 1);
        for (std::size_t k = 0; k < crit.size(); ++k) {
            samples.push_back(crit[k]);
            if (k + 1 < crit.size()) samples.push_back((crit[k] + crit[k + 1]) / 2);
        }
        samples.push_back(crit.back() + 1);
    }
    for (const Rational& t : samples) {
        Disc dc{Point{mid.x + t * w.x, mid.y + t * w.y}, base + t * t * wsq};
        out.push_back({trace_mask(Separator{dc}, x), dc});
    }
}

TraceSet disc_traces_impl(const PointSet& x, bool parallel) {
    check_size(x, 16, "disc_traces");
    const std::size_t n = x.size();
    std::vector<MaskWitness> cands;

    Rational maxx = x[0].x, maxy = x[0].y;
    for (const Point& p : x) {
        maxx = std::max(maxx, p.x);
        maxy = std::max(maxy, p.y);
    }
    cands.push_back({0, Disc{Point{maxx + 1, maxy + 1}, Rational(1, 4)}});

    for (std::size_t i = 0; i < n; ++i) {
        Rational best;
        bool first = true;
        for (std::size_t j = 0; j < n; ++j) {
            if (j == i) continue;
            Rational d2 = dist_sq(x[i], x[j]);
            if (first || d2 < best) {
                best = d2;
                first = false;
            }
        }
        if (sign(best) == 0) continue;  // coincident twin: the singleton is not a trace
        Disc dc{x[i], best / 4};
        cands.push_back({trace_mask(Separator{dc}, x), dc});
    }

    {
        Rational far;
        for (const Point& p : x) far = std::max(far, dist_sq(p, x[0]));
        cands.push_back({(std::uint32_t(1) << n) - 1, Disc{x[0], far + 1}});
    }

    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) pairs.push_back({i, j});
    std::vector<std::vector<MaskWitness>> buckets(pairs.size());
#ifdef SEPFAM_HAVE_OPENMP
#pragma omp parallel for schedule(dynamic) if (parallel)
#else
    (void)parallel;
#endif
    for (long t = 0; t < static_cast<long>(pairs.size()); ++t)
        pair_discs(x, pairs[t].first, pairs[t].second, buckets[t]);
    for (const auto& b : buckets) cands.insert(cands.end(), b.begin(), b.end());

    // every halfplane trace is a disc trace: push the center far along the
    // inward normal until side membership is settled
    TraceSet hp = halfplane_traces_impl(x, parallel);
    for (std::size_t idx = 0; idx < hp.masks.size(); ++idx) {
        const Halfplane& h = std::get<Halfplane>(hp.witnesses[idx]);
        Rational g;
        Rational big;
        bool first = true;
        for (const Point& p : x) {
            Rational f = abs_rational(h.a * p.x + h.b * p.y - h.c);
            if (first || f < g) g = f;
            Rational m2 = vdot(p, p);
            if (first || m2 > big) big = m2;
            first = false;
        }
        if (sign(g) == 0) throw std::logic_error("disc_traces: halfplane witness touches a point");
        Rational nsq = h.a * h.a + h.b * h.b;
        Rational t = big / (2 * g) + 1;
        Rational r2 = t * t * nsq - 2 * t * h.c + big;
        while (sign(r2) <= 0) {
            t = t * 2;
            r2 = t * t * nsq - 2 * t * h.c + big;
        }
        Disc dc{Point{-t * h.a, -t * h.b}, r2};
        cands.push_back({hp.masks[idx], dc});
    }
    return finalize(SeparatorClass::Disc, x, cands, "disc_traces");
}

// A subset is a convex trace exactly when its hull captures no other point.
TraceSet convex_traces_impl(const PointSet& x, bool parallel) {
    check_size(x, 14, "convex_traces");
    const std::size_t n = x.size();
    const std::uint32_t full = (std::uint32_t(1) << n) - 1;

    Rational maxx = x[0].x;
    for (const Point& p : x) maxx = std::max(maxx, p.x);
    ConvexPolygon empty_poly{{Point{maxx + 1, Rational(0)}}};

    std::vector<signed char> ok(full + 1, 0);
    std::vector<ConvexPolygon> polys(full + 1);
#ifdef SEPFAM_HAVE_OPENMP
#pragma omp parallel for schedule(dynamic, 256) if (parallel)
#else
    (void)parallel;
#endif
    for (long m = 1; m <= static_cast<long>(full); ++m) {
        PointSet subset;
        for (std::size_t k = 0; k < n; ++k)
            if (m >> k & 1) subset.push_back(x[k]);
        std::vector<std::size_t> h = convex_hull(subset);
        ConvexPolygon poly;
        for (std::size_t p : h) poly.vertices.push_back(subset[p]);
        bool good = true;
        for (std::size_t k = 0; k < n && good; ++k)
            if (!(m >> k & 1) && contains(poly, x[k])) good = false;
        if (good) {
            ok[m] = 1;
            polys[m] = std::move(poly);
        }
    }

    std::vector<MaskWitness> cands;
    cands.push_back({0, empty_poly});
    for (std::uint32_t m = 1; m <= full; ++m)
        if (ok[m]) cands.push_back({m, std::move(polys[m])});
    return finalize(SeparatorClass::Convex, x, cands, "convex_traces");
}

}  // namespace

const char* to_string(SeparatorClass cls) {
    switch (cls) {
        case SeparatorClass::Halfplane: return "halfplane";
        case SeparatorClass::Disc: return "disc";
        case SeparatorClass::Convex: return "convex";
    }
    throw std::logic_error("unknown separator class");
}

std::uint32_t trace_mask(const Separator& s, const PointSet& x) {
    if (x.size() > 32) throw precondition_error("trace_mask: more than 32 points");
    std::uint32_t m = 0;
    for (std::size_t k = 0; k < x.size(); ++k)
        if (contains(s, x[k])) m |= std::uint32_t(1) << k;
    return m;
}

TraceSet halfplane_traces(const PointSet& x) { return halfplane_traces_impl(x, true); }
TraceSet halfplane_traces_serial(const PointSet& x) { return halfplane_traces_impl(x, false); }
TraceSet disc_traces(const PointSet& x) { return disc_traces_impl(x, true); }
TraceSet disc_traces_serial(const PointSet& x) { return disc_traces_impl(x, false); }
TraceSet convex_traces(const PointSet& x) { return convex_traces_impl(x, true); }
TraceSet convex_traces_serial(const PointSet& x) { return convex_traces_impl(x, false); }

}  // namespace sepfam
