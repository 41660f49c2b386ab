#include "tvx/broken_line.hpp"

#include <algorithm>

namespace tvx {

namespace {

Rational cross(const RatPoint& p, XY v) { return p.x * v.b - p.y * v.a; }
long cross(XY u, XY v) { return long(u.a) * v.b - long(u.b) * v.a; }

struct Hit {
    Rational t;
    std::vector<const Wall*> walls;  // same support
    RatPoint point;
};

// first wall hit along p + t*m, t > 0; walls sharing the support are grouped
std::optional<Hit> first_hit(const ScatteringDiagram& d, const RatPoint& p, XY m) {
    std::optional<Hit> best;
    for (const auto& w : d.walls) {
        long cm = cross(m, w.dir);
        if (cm == 0) continue;  // parallel: no transversal crossing
        // p + t m = u * dir
        Rational t = -cross(p, w.dir) / Rational(cm);
        if (t <= 0) continue;
        // recover u from a non-vanishing coordinate of dir
        Rational u = w.dir.a != 0 ? (p.x + t * m.a) / w.dir.a : (p.y + t * m.b) / w.dir.b;
        if (u == 0) throw endpoint_error("broken line: segment through the origin (endpoint not generic)");
        if (w.kind == WallKind::Ray && u > 0) continue;  // rays live on the negative side
        if (!best || t < best->t) {
            best = Hit{t, {&w}, RatPoint{p.x + t * m.a, p.y + t * m.b}};
        } else if (t == best->t) {
            if (cross(best->walls.front()->dir, w.dir) != 0)
                throw endpoint_error("broken line: simultaneous distinct walls (endpoint not generic)");
            best->walls.push_back(&w);
        }
    }
    return best;
}

// coefficient of z^k in f^N for a wall function viewed in z = x^dir
CoeffPolynomial power_coefficient(const WallFunction& f, long N, int k) {
    // (1 + sum c_j z^j)^N truncated at z^k, N > 0
    std::vector<CoeffPolynomial> pw(k + 1);
    pw[0] = CoeffPolynomial::one();
    std::vector<CoeffPolynomial> base(k + 1);
    base[0] = CoeffPolynomial::one();
    for (const auto& [j, c] : f.coeffs)
        if (j <= k) base[j] = c;
    std::vector<CoeffPolynomial> acc = pw;
    long e = N;
    std::vector<CoeffPolynomial> sq = base;
    auto mul = [k](const std::vector<CoeffPolynomial>& a, const std::vector<CoeffPolynomial>& b) {
        std::vector<CoeffPolynomial> r(k + 1);
        for (int i = 0; i <= k; ++i) {
            if (a[i].is_zero()) continue;
            for (int j = 0; i + j <= k; ++j)
                if (!b[j].is_zero()) r[i + j] += a[i] * b[j];
        }
        return r;
    };
    while (e) {
        if (e & 1) acc = mul(acc, sq);
        e >>= 1;
        if (e) sq = mul(sq, sq);
    }
    return acc[k];
}

struct SearchCtx {
    const ScatteringDiagram& d;
    const BrokenLineQuery& q;
    std::vector<BrokenLine>* out;
    XY mfinal{0, 0};  // exponent of the segment arriving at Q
    // reverse-order accumulation (from the endpoint backwards)
    std::vector<LineSegment> rseg;
    std::vector<BendPoint> rbend;
};

void walk_back(SearchCtx& ctx, RatPoint p, XY m, XY delta);

// process the group of same-support walls met at `hit` with incoming
// backward exponent m and remaining jump delta
void bend_choices(SearchCtx& ctx, const Hit& hit, size_t idx, XY m, XY delta) {
    if (idx == hit.walls.size()) {
        walk_back(ctx, hit.point, m, delta);
        return;
    }
    const Wall& w = *hit.walls[idx];
    // passing straight through
    bend_choices(ctx, hit, idx + 1, m, delta);
    // normal oriented so that n.m_prev > 0; it is constant along the group
    XY n{-w.dir.b, w.dir.a};
    long N = long(n.a) * m.a + long(n.b) * m.b;
    if (N < 0) {
        n = {-n.a, -n.b};
        N = -N;
    }
    if (N == 0) return;  // parallel travel cannot bend (and cannot cross)
    for (int k = 1;; ++k) {
        XY nd{delta.a - k * w.dir.a, delta.b - k * w.dir.b};
        if (nd.a < 0 || nd.b < 0) break;
        CoeffPolynomial factor = power_coefficient(w.f, N, k);
        if (factor.is_zero()) continue;
        XY mprev{m.a - k * w.dir.a, m.b - k * w.dir.b};
        ctx.rbend.push_back({w.dir, w.kind, k, hit.point});
        ctx.rseg.push_back({mprev, factor});  // per-bend factor; products taken on emission
        bend_choices(ctx, hit, idx + 1, mprev, nd);
        ctx.rseg.pop_back();
        ctx.rbend.pop_back();
    }
}

void emit(SearchCtx& ctx) {
    BrokenLine bl;
    bl.endpoint = ctx.q.Q;
    // rseg/rbend were discovered endpoint-first; replay them forward
    bl.segments.reserve(ctx.rseg.size() + 1);
    bl.bends.reserve(ctx.rbend.size());
    CoeffPolynomial c = CoeffPolynomial::one();
    bl.segments.push_back({ctx.q.m0, c});
    for (size_t i = ctx.rseg.size(); i-- > 0;) {
        c *= ctx.rseg[i].coeff;
        bl.segments.push_back({i == 0 ? ctx.mfinal : ctx.rseg[i - 1].exponent, c});
    }
    for (size_t i = ctx.rbend.size(); i-- > 0;) bl.bends.push_back(ctx.rbend[i]);
    ctx.out->push_back(std::move(bl));
}

void walk_back(SearchCtx& ctx, RatPoint p, XY m, XY delta) {
    if (delta == XY{0, 0}) {
        // remaining backward ray is straight; it must not pass the origin
        if (cross(p, m) == 0) throw endpoint_error("broken line: radial segment (endpoint not generic)");
        emit(ctx);
        return;
    }
    auto hit = first_hit(ctx.d, p, m);
    if (!hit) return;  // escapes with leftover jump: dead branch
    bend_choices(ctx, *hit, 0, m, delta);
}

}  // namespace

long BrokenLine::multiplicity_at(XY dir) const {
    long t = 0;
    for (const auto& b : bends)
        if (b.wall_dir == dir) t += b.multiplicity;
    return t;
}

std::vector<BrokenLine> enumerate_broken_lines(const ScatteringDiagram& d, const BrokenLineQuery& q) {
    validate_endpoint(d, q.Q);
    std::vector<BrokenLine> out;
    SearchCtx ctx{d, q, &out, {}, {}, {}};
    // candidate final exponents m0 + delta with delta in the order ball
    std::vector<XY> deltas;
    if (q.final_exponent) {
        XY delta{q.final_exponent->a - q.m0.a, q.final_exponent->b - q.m0.b};
        if (delta.a < 0 || delta.b < 0 || delta.a + delta.b > q.order) return out;
        deltas.push_back(delta);
    } else {
        for (int s = 0; s <= q.order; ++s)
            for (int a = 0; a <= s; ++a) deltas.push_back({a, s - a});
    }
    for (XY delta : deltas) {
        XY mfinal{q.m0.a + delta.a, q.m0.b + delta.b};
        if (mfinal == XY{0, 0}) continue;  // exponent vanishes: no direction of travel
        ctx.mfinal = mfinal;
        walk_back(ctx, q.Q, mfinal, delta);
    }
    // deterministic order: by final exponent, then bend count
    std::sort(out.begin(), out.end(), [](const BrokenLine& l, const BrokenLine& r) {
        XY fl = l.final_exponent(), fr = r.final_exponent();
        if (!(fl == fr)) return fl < fr;
        if (l.bends.size() != r.bends.size()) return l.bends.size() < r.bends.size();
        for (size_t i = 0; i < l.bends.size(); ++i) {
            if (!(l.bends[i].wall_dir == r.bends[i].wall_dir)) return l.bends[i].wall_dir < r.bends[i].wall_dir;
            if (l.bends[i].multiplicity != r.bends[i].multiplicity)
                return l.bends[i].multiplicity < r.bends[i].multiplicity;
        }
        return false;
    });
    return out;
}

RatPoint generic_endpoint(int index) {
    static const long primes[] = {10007, 10009, 10037, 10039, 10061, 10067, 10069, 10079,
                                  10091, 10093, 10099, 10103, 10111, 10133, 10139, 10141};
    long p1 = primes[(2 * index) % 16], p2 = primes[(2 * index + 1) % 16];
    Rational qx(p1 + 1, p1);
    Rational r(p2 + 1, p2);
    return {qx, qx * r * Rational(1 + index % 3)};
}

RatPoint generic_endpoint_below_slope(long num, long den, int index) {
    static const long primes[] = {10007, 10009, 10037, 10039, 10061, 10067};
    long p = primes[index % 6];
    Rational slope = Rational(num, den) * Rational(p, p + 1);
    Rational qx(p + 1, p);
    return {qx, qx * slope};
}

void validate_endpoint(const ScatteringDiagram& d, const RatPoint& q) {
    if (q.x <= 0 || q.y <= 0) throw endpoint_error("broken line: endpoint not in the open first quadrant");
    for (const auto& w : d.walls) {
        if (cross(q, w.dir) != 0) continue;
        if (w.kind == WallKind::Line) throw endpoint_error("broken line: endpoint lies on a wall");
        // rays live in the closed third quadrant, a first-quadrant point is clear
    }
}

}  // namespace tvx
