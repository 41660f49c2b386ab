#include "tvx/scattering.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace tvx {

namespace {

long dot(XY n, XY m) { return long(n.a) * m.a + long(n.b) * m.b; }

// slope comparison of nonnegative directions by cross product
bool slope_less(XY l, XY r) { return long(l.b) * r.a < long(r.b) * l.a; }
bool slope_equal(XY l, XY r) { return long(l.b) * r.a == long(r.b) * l.a; }

void validate_direction(XY d) {
    if (d.a < 0 || d.b < 0 || (d.a == 0 && d.b == 0))
        throw std::invalid_argument("wall: direction must be nonzero with nonnegative coordinates");
    if (std::gcd(d.a, d.b) != 1) throw std::invalid_argument("wall: direction must be primitive");
}

// powers f^e of a unit series, built incrementally from cached neighbors
class PowerCache {
public:
    explicit PowerCache(BivariateSeries f) : f_(std::move(f)) {
        memo_.emplace(0, BivariateSeries::one(f_.order_bound()));
    }

    const BivariateSeries& get(long e) {
        auto it = memo_.find(e);
        if (it != memo_.end()) return it->second;
        if (e > 0) {
            long k = memo_.rbegin()->first;  // largest cached
            if (k < 0) k = 0;
            BivariateSeries cur = memo_.at(std::min(k, e));
            for (long i = std::min(k, e); i < e; ++i) {
                cur *= f_;
                memo_.emplace(i + 1, cur);
            }
        } else {
            if (!finv_) finv_ = f_.inverse();
            long k = memo_.begin()->first;  // smallest cached
            if (k > 0) k = 0;
            BivariateSeries cur = memo_.at(std::max(k, e));
            for (long i = std::max(k, e); i > e; --i) {
                cur *= *finv_;
                memo_.emplace(i - 1, cur);
            }
        }
        return memo_.at(e);
    }

private:
    BivariateSeries f_;
    std::optional<BivariateSeries> finv_;
    std::map<long, BivariateSeries> memo_;
};

// s term-wise multiplied by f^{n(e) + shift}
BivariateSeries crossed(const BivariateSeries& s, XY n, long shift, PowerCache& cache) {
    int K = s.order_bound();
    BivariateSeries out(K);
    // group terms by the normal pairing
    std::map<long, std::vector<BivariateSeries::Term>> slices;
    for (const auto& [e, c] : s.terms()) slices[dot(n, e) + shift].emplace_back(e, c);
    for (auto& [nu, terms] : slices) {
        BivariateSeries slice = BivariateSeries::from_terms(K, std::move(terms));
        out += slice * cache.get(nu);
    }
    return out;
}

}  // namespace

CoeffPolynomial WallFunction::coefficient(int k) const {
    for (const auto& [kk, c] : coeffs)
        if (kk == k) return c;
    return CoeffPolynomial::zero();
}

void WallFunction::set_coefficient(int k, CoeffPolynomial c) {
    for (size_t i = 0; i < coeffs.size(); ++i)
        if (coeffs[i].first == k) {
            if (c.is_zero())
                coeffs.erase(coeffs.begin() + i);
            else
                coeffs[i].second = std::move(c);
            return;
        }
    if (!c.is_zero()) {
        coeffs.emplace_back(k, std::move(c));
        std::sort(coeffs.begin(), coeffs.end(),
                  [](const auto& l, const auto& r) { return l.first < r.first; });
    }
}

void WallFunction::add_coefficient(int k, const CoeffPolynomial& c) {
    set_coefficient(k, coefficient(k) + c);
}

BivariateSeries WallFunction::as_series(int K) const {
    std::vector<BivariateSeries::Term> terms;
    terms.emplace_back(XY{0, 0}, CoeffPolynomial::one());
    for (const auto& [k, c] : coeffs) terms.emplace_back(XY{k * dir.a, k * dir.b}, c);
    return BivariateSeries::from_terms(K, std::move(terms));
}

const Wall* ScatteringDiagram::find(XY dir, WallKind kind) const {
    for (const auto& w : walls)
        if (w.dir == dir && w.kind == kind) return &w;
    return nullptr;
}

Wall* ScatteringDiagram::find(XY dir, WallKind kind) {
    for (auto& w : walls)
        if (w.dir == dir && w.kind == kind) return &w;
    return nullptr;
}

std::vector<const Wall*> ScatteringDiagram::rays_by_slope() const {
    std::vector<const Wall*> out;
    for (const auto& w : walls)
        if (w.kind == WallKind::Ray) out.push_back(&w);
    std::sort(out.begin(), out.end(), [](const Wall* l, const Wall* r) { return slope_less(l->dir, r->dir); });
    return out;
}

void ScatteringDiagram::sort_canonical() {
    std::stable_sort(walls.begin(), walls.end(), [](const Wall& l, const Wall& r) {
        if (!slope_equal(l.dir, r.dir)) return slope_less(l.dir, r.dir);
        return l.kind < r.kind;  // line before ray on shared support
    });
}

WallAutomorphism WallAutomorphism::identity(int K) {
    return {BivariateSeries::one(K), BivariateSeries::one(K)};
}

BivariateSeries WallAutomorphism::image_factor(XY m) const {
    return ux.pow(m.a) * uy.pow(m.b);
}

std::vector<Crossing> loop_crossings(const ScatteringDiagram& d) {
    std::vector<Crossing> seq;
    std::vector<const Wall*> zone1, zone2;  // positive halves / QIII crossings
    const Wall* xaxis_line = nullptr;
    for (const auto& w : d.walls) {
        if (w.kind == WallKind::Line) {
            if (w.dir == XY{1, 0})
                xaxis_line = &w;
            else
                zone1.push_back(&w);
            zone2.push_back(&w);
        } else {
            zone2.push_back(&w);
        }
    }
    auto by_slope = [](const Wall* l, const Wall* r) {
        if (!slope_equal(l->dir, r->dir)) return slope_less(l->dir, r->dir);
        return l->kind < r->kind;
    };
    std::sort(zone1.begin(), zone1.end(), by_slope);
    std::sort(zone2.begin(), zone2.end(), by_slope);
    for (const Wall* w : zone1) seq.push_back({w, XY{w->dir.b, -w->dir.a}});
    for (const Wall* w : zone2) seq.push_back({w, XY{-w->dir.b, w->dir.a}});
    if (xaxis_line) seq.push_back({xaxis_line, XY{0, -1}});
    return seq;
}

BivariateSeries apply_crossing(const Wall& w, XY travel, const BivariateSeries& s) {
    XY n{-w.dir.b, w.dir.a};
    long d = dot(n, travel);
    if (d == 0) throw std::invalid_argument("apply_crossing: travel direction parallel to wall");
    if (d > 0) n = XY{-n.a, -n.b};
    PowerCache cache(w.f.as_series(s.order_bound()));
    return crossed(s, n, 0, cache);
}

WallAutomorphism path_ordered_product(const std::vector<Crossing>& seq, int K) {
    WallAutomorphism L = WallAutomorphism::identity(K);
    for (const Crossing& c : seq) {
        PowerCache cache(c.wall->f.as_series(K));
        // p(x) = x f^{n1}, p(y) = y f^{n2}; p(L(x)) = x f^{n1} p(ux)
        BivariateSeries ux = crossed(L.ux, c.normal, c.normal.a, cache);
        BivariateSeries uy = crossed(L.uy, c.normal, c.normal.b, cache);
        L.ux = std::move(ux);
        L.uy = std::move(uy);
    }
    return L;
}

WallAutomorphism loop_product(const ScatteringDiagram& d, int K) {
    return path_ordered_product(loop_crossings(d), K);
}

ScatteringDiagram initial_two_lines(const WeightConfig& cfg, int K) {
    ScatteringDiagram d;
    d.order = K;
    Wall x{XY{1, 0}, WallKind::Line, WallFunction{XY{1, 0}, K, {}}};
    for (int j = 1; j <= K; ++j) {
        CoeffPolynomial c = cfg.side1.coeff_or_symbol(j);
        if (!c.is_zero()) x.f.coeffs.emplace_back(j, std::move(c));
    }
    Wall y{XY{0, 1}, WallKind::Line, WallFunction{XY{0, 1}, K, {}}};
    for (int j = 1; j <= K; ++j) {
        CoeffPolynomial c = cfg.side2.coeff_or_symbol(j);
        if (!c.is_zero()) y.f.coeffs.emplace_back(j, std::move(c));
    }
    d.walls.push_back(std::move(x));
    d.walls.push_back(std::move(y));
    return d;
}

namespace {

void validate_initial_lines(const std::vector<Wall>& lines, int K) {
    if (lines.empty()) throw std::invalid_argument("ks_complete: no initial walls");
    for (const auto& w : lines) {
        validate_direction(w.dir);
        if (w.kind != WallKind::Line) throw std::invalid_argument("ks_complete: initial walls must be lines");
        if (w.f.dir != w.dir) throw std::invalid_argument("ks_complete: wall function not in the wall monomial");
        for (const auto& [k, c] : w.f.coeffs)
            if (k < 1 || c.is_zero()) throw std::invalid_argument("ks_complete: malformed wall function");
        (void)K;
    }
}

struct Correction {
    XY dir;
    int k;
    CoeffPolynomial c;
};

// deviation of the unit parts at total degree `deg`; asserts the loop is
// consistent below that degree
std::vector<Correction> corrections_at(const WallAutomorphism& L, int deg) {
    const BivariateSeries one = BivariateSeries::one(L.ux.order_bound());
    BivariateSeries dx = L.ux - one, dy = L.uy - one;
    std::map<std::pair<int, int>, std::pair<CoeffPolynomial, CoeffPolynomial>> dev;
    for (const auto& [e, c] : dx.terms()) {
        if (e.a + e.b < deg) throw std::logic_error("ks_complete: residual deviation below current order");
        if (e.a + e.b == deg) dev[{e.a, e.b}].first = c;
    }
    for (const auto& [e, c] : dy.terms()) {
        if (e.a + e.b < deg) throw std::logic_error("ks_complete: residual deviation below current order");
        if (e.a + e.b == deg) dev[{e.a, e.b}].second = c;
    }
    std::vector<Correction> out;
    for (const auto& [pq, XYpair] : dev) {
        auto [p, q] = pq;
        const auto& [X, Y] = XYpair;
        // the deviation is Hamiltonian: p*X + q*Y = 0, so (X,Y) = c*(b,-a)
        if (!(CoeffPolynomial(long(p)) * X + CoeffPolynomial(long(q)) * Y).is_zero())
            throw std::logic_error("ks_complete: deviation is not tangent to a wall correction");
        int g = std::gcd(p, q);
        XY dir{p / g, q / g};
        CoeffPolynomial c = dir.b != 0 ? X / Rational(dir.b) : (-Y) / Rational(dir.a);
        if (!(c * Rational(dir.b) == X) || !((-c) * Rational(dir.a) == Y))
            throw std::logic_error("ks_complete: inconsistent deviation pair");
        if (!c.is_zero()) out.push_back({dir, g, c});
    }
    return out;
}

void insert_correction(ScatteringDiagram& d, const Correction& corr) {
    // the deviation reads (X,Y) = c*(b,-a) and T_{(a,b),1+c z^k} shifts it
    // by (-b c, a c), so inserting with the same c cancels it
    if (Wall* w = d.find(corr.dir, WallKind::Ray)) {
        if (!w->f.coefficient(corr.k).is_zero())
            throw std::logic_error("ks_complete: correction collides with existing coefficient");
        w->f.set_coefficient(corr.k, corr.c);
    } else {
        Wall ray{corr.dir, WallKind::Ray, WallFunction{corr.dir, d.order, {}}};
        ray.f.set_coefficient(corr.k, corr.c);
        d.walls.push_back(std::move(ray));
    }
}

ScatteringDiagram ks_run(std::vector<Wall> lines, int K, int mode /*0=all, 1=asc, -1=desc*/) {
    validate_initial_lines(lines, K);
    ScatteringDiagram d;
    d.order = K;
    d.walls = std::move(lines);
    for (int k = 2; k <= K; ++k) {
        if (mode == 0) {
            WallAutomorphism L = loop_product(d, k);
            for (const Correction& c : corrections_at(L, k)) insert_correction(d, c);
        } else {
            // one correction at a time, re-deriving the loop in between
            for (;;) {
                WallAutomorphism L = loop_product(d, k);
                auto cs = corrections_at(L, k);
                if (cs.empty()) break;
                std::sort(cs.begin(), cs.end(), [&](const Correction& l, const Correction& r) {
                    return mode > 0 ? slope_less(l.dir, r.dir) : slope_less(r.dir, l.dir);
                });
                insert_correction(d, cs.front());
            }
        }
    }
    if (!loop_product(d, K).is_identity())
        throw std::logic_error("ks_complete: completed diagram is not consistent");
    d.sort_canonical();
    return d;
}

}  // namespace

ScatteringDiagram ks_complete(std::vector<Wall> initial_lines, int K) {
    return ks_run(std::move(initial_lines), K, 0);
}

ScatteringDiagram ks_complete_ordered(std::vector<Wall> initial_lines, int K, bool ascending_slope) {
    return ks_run(std::move(initial_lines), K, ascending_slope ? 1 : -1);
}

Wall wall_function_tight(int a, int b, const WeightConfig& cfg, int K, int eps) {
    if (a <= 0 || b <= 0 || std::gcd(a, b) != 1)
        throw std::invalid_argument("wall_function_tight: direction must be coprime positive");
    Wall w{XY{a, b}, WallKind::Ray, WallFunction{XY{a, b}, K, {}}};
    for (int k = 1; k * (a + b) <= K; ++k) {
        auto [m, n] = m_epsilon(long(k) * a, long(k) * b, eps);
        TightParams tp{long(k) * a, long(k) * b, eps, m, n};
        CoeffPolynomial c = tight_weight_sum(tp, cfg);
        if (!c.is_zero()) w.f.coeffs.emplace_back(k, std::move(c));
    }
    return w;
}

ScatteringDiagram tight_diagram(const WeightConfig& cfg, int K, int eps) {
    ScatteringDiagram d = initial_two_lines(cfg, K);
    for (int a = 1; a < K; ++a)
        for (int b = 1; a + b <= K; ++b) {
            if (std::gcd(a, b) != 1) continue;
            Wall w = wall_function_tight(a, b, cfg, K, eps);
            if (!w.f.is_trivial()) d.walls.push_back(std::move(w));
        }
    d.sort_canonical();
    return d;
}

CompareReport compare_tight_vs_oracle(const WeightConfig& cfg, int K) {
    ScatteringDiagram oracle = ks_complete(initial_two_lines(cfg, K).walls, K);
    ScatteringDiagram tight = tight_diagram(cfg, K);
    CompareReport rep;
    auto compare_dir = [&](XY dir) {
        const Wall* to = oracle.find(dir, WallKind::Ray);
        const Wall* tt = tight.find(dir, WallKind::Ray);
        int kmax = std::max(to ? to->f.max_k() : 0, tt ? tt->f.max_k() : 0);
        for (int k = 1; k <= kmax; ++k) {
            CoeffPolynomial co = to ? to->f.coefficient(k) : CoeffPolynomial::zero();
            CoeffPolynomial ct = tt ? tt->f.coefficient(k) : CoeffPolynomial::zero();
            if (!(co == ct)) rep.discrepancies.push_back({dir, k, ct, co});
        }
    };
    std::vector<XY> dirs;
    for (const auto& w : oracle.walls)
        if (w.kind == WallKind::Ray) dirs.push_back(w.dir);
    for (const auto& w : tight.walls)
        if (w.kind == WallKind::Ray && !oracle.find(w.dir, WallKind::Ray)) dirs.push_back(w.dir);
    for (XY dir : dirs) compare_dir(dir);
    return rep;
}

bool check_positivity(const ScatteringDiagram& d) {
    for (const auto& w : d.walls)
        for (const auto& [k, c] : w.f.coeffs)
            if (!c.is_nonneg_integral() || c.is_zero()) return false;
    return true;
}

}  // namespace tvx
