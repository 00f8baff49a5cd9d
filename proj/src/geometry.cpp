#include "sepfam/geometry.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <tuple>
#include <utility>

#ifdef SEPFAM_HAVE_OPENMP
#include <omp.h>
#endif

namespace sepfam {

namespace {

using I128 = __int128;

// Coordinates that are plain integers below 2^39 in magnitude take an
// int128 path; crosses of differences then fit with room to spare.
constexpr long long kFastCoordLimit = 1LL << 39;

bool coord_i64(const Rational& q, long long& out) {
    if (q.get_den() != 1) return false;
    const mpz_class& num = q.get_num();
    if (!num.fits_slong_p()) return false;
    long v = num.get_si();
    if (v >= kFastCoordLimit || v <= -kFastCoordLimit) return false;
    out = v;
    return true;
}

bool point_i64(const Point& p, long long& x, long long& y) {
    return coord_i64(p.x, x) && coord_i64(p.y, y);
}

int sign_i128(I128 v) { return v > 0 ? 1 : (v < 0 ? -1 : 0); }

BigInt bigint_from_i128(I128 v) {
    bool neg = v < 0;
    unsigned __int128 u = neg ? -static_cast<unsigned __int128>(v) : static_cast<unsigned __int128>(v);
    BigInt hi(static_cast<unsigned long>(u >> 64));
    BigInt lo(static_cast<unsigned long>(u & 0xffffffffffffffffULL));
    BigInt r = (hi << 64) + lo;
    return neg ? BigInt(-r) : r;
}

// Primitive integer vector with canonical sign (first nonzero component
// positive), used as a map key so parallel pair directions collide.
std::pair<BigInt, BigInt> canonical_direction(const Point& a, const Point& b) {
    Rational dx = b.x - a.x;
    Rational dy = b.y - a.y;
    BigInt nx = dx.get_num() * dy.get_den();
    BigInt ny = dy.get_num() * dx.get_den();
    if (nx == 0 && ny == 0) return {0, 0};
    BigInt g = gcd(nx, ny);
    nx /= g;
    ny /= g;
    if (nx < 0 || (nx == 0 && ny < 0)) {
        nx = -nx;
        ny = -ny;
    }
    return {nx, ny};
}

}  // namespace

int orientation_sign(const Point& a, const Point& b, const Point& c) {
    long long ax, ay, bx, by, cx, cy;
    if (point_i64(a, ax, ay) && point_i64(b, bx, by) && point_i64(c, cx, cy)) {
        I128 cross = static_cast<I128>(bx - ax) * (cy - ay) - static_cast<I128>(by - ay) * (cx - ax);
        return sign_i128(cross);
    }
    Rational cross = (b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x);
    return sign(cross);
}

Orientation orientation(const Point& a, const Point& b, const Point& c) {
    switch (orientation_sign(a, b, c)) {
        case 1: return Orientation::CounterClockwise;
        case -1: return Orientation::Clockwise;
        default: return Orientation::Collinear;
    }
}

std::optional<CollinearTriple> find_collinear_triple(const PointSet& pts) {
    const std::size_t n = pts.size();
    if (n < 3) return std::nullopt;
    std::optional<CollinearTriple> best;
    auto consider = [&](std::size_t a, std::size_t b, std::size_t c) {
        std::size_t v[3] = {a, b, c};
        std::sort(v, v + 3);
        CollinearTriple t{v[0], v[1], v[2]};
        if (!best || std::tie(t.a, t.b, t.c) < std::tie(best->a, best->b, best->c)) best = t;
    };
    for (std::size_t i = 0; i + 1 < n; ++i) {
        if (best && best->a <= i) break;
        std::map<std::pair<BigInt, BigInt>, std::vector<std::size_t>> lines;
        for (std::size_t j = i + 1; j < n; ++j) lines[canonical_direction(pts[i], pts[j])].push_back(j);
        // A duplicate of pts[i] is collinear with every third point.
        if (auto it = lines.find({0, 0}); it != lines.end()) {
            std::size_t j = it->second.front();
            std::size_t k = 0;
            while (k == i || k == j) ++k;
            consider(i, j, k);
        }
        for (const auto& [dir, members] : lines) {
            if (dir.first == 0 && dir.second == 0) continue;
            if (members.size() >= 2) consider(i, members[0], members[1]);
        }
    }
    return best;
}

bool is_general_position(const PointSet& pts) { return !find_collinear_triple(pts).has_value(); }

std::vector<std::size_t> convex_hull(const PointSet& pts) {
    const std::size_t n = pts.size();
    if (n == 0) return {};
    std::vector<std::size_t> idx(n);
    for (std::size_t i = 0; i < n; ++i) idx[i] = i;
    std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
        if (pts[a].x != pts[b].x) return pts[a].x < pts[b].x;
        if (pts[a].y != pts[b].y) return pts[a].y < pts[b].y;
        return a < b;
    });
    idx.erase(std::unique(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) { return pts[a] == pts[b]; }),
              idx.end());
    const std::size_t m = idx.size();
    if (m <= 2) return idx;

    std::vector<std::size_t> hull(2 * m);
    std::size_t h = 0;
    for (std::size_t ii = 0; ii < m; ++ii) {  // lower chain
        std::size_t p = idx[ii];
        while (h >= 2 && orientation_sign(pts[hull[h - 2]], pts[hull[h - 1]], pts[p]) <= 0) --h;
        hull[h++] = p;
    }
    std::size_t lower = h + 1;
    for (std::size_t ii = m - 1; ii-- > 0;) {  // upper chain
        std::size_t p = idx[ii];
        while (h >= lower && orientation_sign(pts[hull[h - 2]], pts[hull[h - 1]], pts[p]) <= 0) --h;
        hull[h++] = p;
    }
    hull.resize(h - 1);  // last point equals the first
    return hull;
}

Direction generic_direction(const PointSet& pts) {
    const std::size_t n = pts.size();
    if (n < 2) throw precondition_error("generic_direction needs at least two points");
    std::set<std::pair<BigInt, BigInt>> forbidden;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            auto d = canonical_direction(pts[i], pts[j]);
            if (d.first == 0 && d.second == 0) continue;
            forbidden.insert(d);
        }
    auto canon = [](BigInt x, BigInt y) {
        BigInt g = gcd(x, y);
        if (g != 0) {
            x /= g;
            y /= g;
        }
        if (x < 0 || (x == 0 && y < 0)) {
            x = -x;
            y = -y;
        }
        return std::make_pair(x, y);
    };
    for (long k = 0;; ++k) {
        auto par = canon(1, k);
        auto perp = canon(-k, 1);
        if (!forbidden.count(par) && !forbidden.count(perp)) return Direction{1, make_rational(k)};
    }
}

namespace {

// Running minimum of nonnegative fractions num/den, den > 0.
struct FracMin128 {
    I128 num = 1;
    I128 den = 2;  // starts at the 1/2 cap
    void offer(I128 n, I128 d) {
        if (n * den < num * d) {
            num = n;
            den = d;
        }
    }
};

struct FracMinQ {
    Rational value{1, 2};
    void offer(const Rational& q) {
        if (q < value) value = q;
    }
};

template <typename T>
T abs_v(T v) {
    return v < 0 ? -v : v;
}

Rational clearance_impl(const PointSet& pts, bool parallel) {
    const std::size_t n = pts.size();
    if (n < 2) throw precondition_error("clearance needs at least two points");

    std::vector<long long> xs(n), ys(n);
    bool fast = true;
    for (std::size_t i = 0; i < n && fast; ++i) fast = point_i64(pts[i], xs[i], ys[i]);

    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (pts[i] == pts[j]) throw precondition_error("clearance needs pairwise distinct points");

    if (fast) {
        FracMin128 acc;
        const long long ni = static_cast<long long>(n);
#ifdef SEPFAM_HAVE_OPENMP
#pragma omp parallel if (parallel)
        {
            FracMin128 local;
#pragma omp for schedule(static) nowait
            for (long long i = 0; i < ni; ++i) {
                for (long long j = i + 1; j < ni; ++j) {
                    long long dx = abs_v(xs[j] - xs[i]), dy = abs_v(ys[j] - ys[i]);
                    local.offer(std::max(dx, dy), 3);
                    for (long long k = j + 1; k < ni; ++k) {
                        I128 det = static_cast<I128>(xs[j] - xs[i]) * (ys[k] - ys[i]) -
                                   static_cast<I128>(ys[j] - ys[i]) * (xs[k] - xs[i]);
                        if (det == 0) continue;
                        I128 ad = det < 0 ? -det : det;
                        long long l1_ij = abs_v(xs[j] - xs[i]) + abs_v(ys[j] - ys[i]);
                        long long l1_ik = abs_v(xs[k] - xs[i]) + abs_v(ys[k] - ys[i]);
                        long long l1_jk = abs_v(xs[k] - xs[j]) + abs_v(ys[k] - ys[j]);
                        long long s = std::min(l1_ij + l1_ik, std::min(l1_ij + l1_jk, l1_ik + l1_jk));
                        local.offer(ad, 2 * static_cast<I128>(s) + 8);
                        long long linf_ij = std::max(abs_v(xs[j] - xs[i]), abs_v(ys[j] - ys[i]));
                        long long linf_ik = std::max(abs_v(xs[k] - xs[i]), abs_v(ys[k] - ys[i]));
                        long long linf_jk = std::max(abs_v(xs[k] - xs[j]), abs_v(ys[k] - ys[j]));
                        long long e = std::max(linf_ij, std::max(linf_ik, linf_jk));
                        local.offer(ad, 3 * static_cast<I128>(e));
                    }
                }
            }
#pragma omp critical
            acc.offer(local.num, local.den);
        }
#else
        (void)parallel;
        for (long long i = 0; i < ni; ++i)
            for (long long j = i + 1; j < ni; ++j) {
                long long dx = abs_v(xs[j] - xs[i]), dy = abs_v(ys[j] - ys[i]);
                acc.offer(std::max(dx, dy), 3);
                for (long long k = j + 1; k < ni; ++k) {
                    I128 det = static_cast<I128>(xs[j] - xs[i]) * (ys[k] - ys[i]) -
                               static_cast<I128>(ys[j] - ys[i]) * (xs[k] - xs[i]);
                    if (det == 0) continue;
                    I128 ad = det < 0 ? -det : det;
                    long long l1_ij = abs_v(xs[j] - xs[i]) + abs_v(ys[j] - ys[i]);
                    long long l1_ik = abs_v(xs[k] - xs[i]) + abs_v(ys[k] - ys[i]);
                    long long l1_jk = abs_v(xs[k] - xs[j]) + abs_v(ys[k] - ys[j]);
                    long long s = std::min(l1_ij + l1_ik, std::min(l1_ij + l1_jk, l1_ik + l1_jk));
                    acc.offer(ad, 2 * static_cast<I128>(s) + 8);
                    long long linf_ij = std::max(abs_v(xs[j] - xs[i]), abs_v(ys[j] - ys[i]));
                    long long linf_ik = std::max(abs_v(xs[k] - xs[i]), abs_v(ys[k] - ys[i]));
                    long long linf_jk = std::max(abs_v(xs[k] - xs[j]), abs_v(ys[k] - ys[j]));
                    long long e = std::max(linf_ij, std::max(linf_ik, linf_jk));
                    acc.offer(ad, 3 * static_cast<I128>(e));
                }
            }
#endif
        return make_rational(bigint_from_i128(acc.num), bigint_from_i128(acc.den));
    }

    FracMinQ acc;
    auto l1 = [](const Point& a, const Point& b) -> Rational {
        return abs_rational(b.x - a.x) + abs_rational(b.y - a.y);
    };
    auto linf = [](const Point& a, const Point& b) {
        Rational dx = abs_rational(b.x - a.x), dy = abs_rational(b.y - a.y);
        return dx > dy ? dx : dy;
    };
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            acc.offer(linf(pts[i], pts[j]) / 3);
            for (std::size_t k = j + 1; k < n; ++k) {
                Rational det = (pts[j].x - pts[i].x) * (pts[k].y - pts[i].y) -
                               (pts[j].y - pts[i].y) * (pts[k].x - pts[i].x);
                if (det == 0) continue;
                Rational ad = abs_rational(det);
                Rational sij = l1(pts[i], pts[j]), sik = l1(pts[i], pts[k]), sjk = l1(pts[j], pts[k]);
                Rational s = std::min(sij + sik, std::min(sij + sjk, sik + sjk));
                acc.offer(ad / (2 * s + 8));
                Rational e = std::max(linf(pts[i], pts[j]), std::max(linf(pts[i], pts[k]), linf(pts[j], pts[k])));
                acc.offer(ad / (3 * e));
            }
        }
    return acc.value;
}

}  // namespace

Rational clearance(const PointSet& pts) { return clearance_impl(pts, true); }

Rational clearance_serial(const PointSet& pts) { return clearance_impl(pts, false); }

}  // namespace sepfam
