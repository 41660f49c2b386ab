#include "tvx/greedy.hpp"

#include <algorithm>
#include <sstream>

namespace tvx {

PointedLaurent PointedLaurent::monomial(long e1, long e2, CoeffPolynomial c) {
    PointedLaurent p;
    if (!c.is_zero()) p.terms[{e1, e2}] = std::move(c);
    return p;
}

void PointedLaurent::add_term(long e1, long e2, const CoeffPolynomial& c) {
    if (c.is_zero()) return;
    auto [it, fresh] = terms.try_emplace({e1, e2}, c);
    if (!fresh) {
        it->second += c;
        if (it->second.is_zero()) terms.erase(it);
    }
}

CoeffPolynomial PointedLaurent::coefficient(long e1, long e2) const {
    auto it = terms.find({e1, e2});
    return it == terms.end() ? CoeffPolynomial::zero() : it->second;
}

std::pair<std::pair<long, long>, CoeffPolynomial> PointedLaurent::lowest() const {
    if (terms.empty()) throw std::domain_error("PointedLaurent: zero has no lowest term");
    return *terms.begin();
}

bool PointedLaurent::is_pointed() const {
    if (terms.empty()) return false;
    auto it = terms.begin();
    if (!it->second.is_one()) return false;
    long d = it->first.first + it->first.second;
    auto next = std::next(it);
    return next == terms.end() || next->first.first + next->first.second > d;
}

PointedLaurent PointedLaurent::operator+(const PointedLaurent& o) const {
    PointedLaurent r = *this;
    for (const auto& [e, c] : o.terms) r.add_term(e.first, e.second, c);
    return r;
}

PointedLaurent PointedLaurent::operator-(const PointedLaurent& o) const {
    PointedLaurent r = *this;
    for (const auto& [e, c] : o.terms) r.add_term(e.first, e.second, -c);
    return r;
}

PointedLaurent PointedLaurent::operator*(const PointedLaurent& o) const {
    PointedLaurent r;
    for (const auto& [ea, ca] : terms)
        for (const auto& [eb, cb] : o.terms) r.add_term(ea.first + eb.first, ea.second + eb.second, ca * cb);
    return r;
}

PointedLaurent PointedLaurent::times(long e1, long e2, const CoeffPolynomial& c) const {
    PointedLaurent r;
    for (const auto& [e, cc] : terms) r.add_term(e.first + e1, e.second + e2, cc * c);
    return r;
}

bool PointedLaurent::coefficients_nonneg_integral() const {
    for (const auto& [e, c] : terms)
        if (!c.is_nonneg_integral()) return false;
    return true;
}

std::string PointedLaurent::str() const {
    if (terms.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms) {
        if (!first) os << " + ";
        first = false;
        os << "(" << c.str() << ")*x1^" << e.first << "*x2^" << e.second;
    }
    return os.str();
}

ClusterSeedConfig ClusterSeedConfig::symbolic(int ell1, int ell2) {
    return {WeightConfig::symbolic(ell1, ell2), ell1, ell2};
}

ClusterSeedConfig ClusterSeedConfig::specialized(const std::vector<CoeffPolynomial>& p1,
                                                 const std::vector<CoeffPolynomial>& p2) {
    ClusterSeedConfig cfg;
    cfg.weights.side1 = SideWeights::from_coefficients(1, p1);
    cfg.weights.side2 = SideWeights::from_coefficients(2, p2);
    cfg.ell1 = int(p1.size()) - 1;
    cfg.ell2 = int(p2.size()) - 1;
    while (cfg.ell1 > 0 && p1[cfg.ell1].is_zero()) --cfg.ell1;
    while (cfg.ell2 > 0 && p2[cfg.ell2].is_zero()) --cfg.ell2;
    return cfg;
}

std::vector<VarId> ClusterSeedConfig::invertible_vars() const {
    std::vector<VarId> vs;
    if (ell1 > 0) vs.push_back(VarId::p(1, ell1));
    if (ell2 > 0) vs.push_back(VarId::p(2, ell2));
    return vs;
}

namespace {

// a coefficient is invertible when it is a scalar times a monomial in the
// designated invertible variables
bool invertible_coeff(const CoeffPolynomial& c, const ClusterSeedConfig& cfg, Monomial& mono_out,
                      Rational& scal_out) {
    if (c.size() != 1) return false;
    const auto& [m, s] = c.terms()[0];
    auto inv = cfg.invertible_vars();
    for (const auto& [v, e] : m.factors)
        if (std::find(inv.begin(), inv.end(), v) == inv.end()) return false;
    mono_out = m;
    scal_out = s;
    return true;
}

CoeffPolynomial invert_coeff(const Monomial& m, const Rational& s) {
    Monomial inv;
    for (auto [v, e] : m.factors) inv.factors.emplace_back(v, -e);
    return CoeffPolynomial(inv, Rational(1) / s);
}

}  // namespace

PointedLaurent divide_exact(const PointedLaurent& num, const PointedLaurent& den,
                            const ClusterSeedConfig& cfg) {
    if (den.is_zero()) throw std::domain_error("divide_exact: zero divisor");
    auto [dexp, dcoeff] = den.lowest();
    Monomial dm;
    Rational ds;
    if (!invertible_coeff(dcoeff, cfg, dm, ds))
        throw std::domain_error("divide_exact: lowest divisor coefficient is not invertible");
    CoeffPolynomial dinv = invert_coeff(dm, ds);
    // an exact quotient has total degree maxdeg(num) - maxdeg(den): total
    // degree is linear on Newton polytopes and the coefficient ring is a
    // domain, so the extreme terms of a product never cancel
    if (num.is_zero()) return {};
    long qmax = num.terms.rbegin()->first.first + num.terms.rbegin()->first.second -
                den.terms.rbegin()->first.first - den.terms.rbegin()->first.second;
    PointedLaurent rem = num, quot;
    while (!rem.is_zero()) {
        auto [nexp, ncoeff] = rem.lowest();
        long qdeg = nexp.first + nexp.second - dexp.first - dexp.second;
        if (qdeg > qmax) throw std::domain_error("divide_exact: division is not exact");
        CoeffPolynomial qc = ncoeff.times_term(dinv.terms()[0].first, dinv.terms()[0].second);
        long q1 = nexp.first - dexp.first, q2 = nexp.second - dexp.second;
        quot.add_term(q1, q2, qc);
        rem -= den.times(q1, q2, qc);
        if (!rem.is_zero() && !PointedOrder{}(nexp, rem.lowest().first))
            throw std::logic_error("divide_exact: no progress (division not exact)");
    }
    return quot;
}

ClusterSequence::ClusterSequence(ClusterSeedConfig cfg) : cfg_(std::move(cfg)) {
    if (cfg_.ell1 < 1 || cfg_.ell2 < 1)
        throw std::invalid_argument("ClusterSequence: exchange polynomials must be nonconstant");
    p1_.assign(cfg_.ell1 + 1, CoeffPolynomial::zero());
    p2_.assign(cfg_.ell2 + 1, CoeffPolynomial::zero());
    p1_[0] = CoeffPolynomial::one();
    p2_[0] = CoeffPolynomial::one();
    for (const auto& [j, c] : cfg_.weights.side1.coeffs)
        if (j <= cfg_.ell1) p1_[j] = c;
    for (const auto& [j, c] : cfg_.weights.side2.coeffs)
        if (j <= cfg_.ell2) p2_[j] = c;
    // Pbar_i(z) = z^{ell_i} P_i(1/z) / p_{i,ell_i}
    Monomial topm;
    Rational tops;
    if (!invertible_coeff(p1_[cfg_.ell1], cfg_, topm, tops) ||
        !invertible_coeff(p2_[cfg_.ell2], cfg_, topm, tops))
        throw std::invalid_argument("ClusterSequence: top coefficients must be invertible");
    auto reverse_over_top = [&](const std::vector<CoeffPolynomial>& p) {
        Monomial m;
        Rational s;
        invertible_coeff(p.back(), cfg_, m, s);
        CoeffPolynomial inv = invert_coeff(m, s);
        std::vector<CoeffPolynomial> out(p.rbegin(), p.rend());
        for (auto& c : out) c = c * inv;
        return out;
    };
    p1bar_ = reverse_over_top(p1_);
    p2bar_ = reverse_over_top(p2_);
    memo_[1] = PointedLaurent::monomial(1, 0);
    memo_[2] = PointedLaurent::monomial(0, 1);
}

PointedLaurent ClusterSequence::evaluate(const std::vector<CoeffPolynomial>& coeffs,
                                         const PointedLaurent& at) {
    PointedLaurent acc = PointedLaurent::monomial(0, 0, CoeffPolynomial(coeffs[0]));
    PointedLaurent power = PointedLaurent::monomial(0, 0);
    for (size_t j = 1; j < coeffs.size(); ++j) {
        power = power * at;
        if (!coeffs[j].is_zero()) acc += power.times(0, 0, coeffs[j]);
    }
    return acc;
}

const PointedLaurent& ClusterSequence::prevariable(int k) {
    auto it = memo_.find(k);
    if (it != memo_.end()) return it->second;
    auto rule = [&](int kk) -> const std::vector<CoeffPolynomial>& {
        switch (((kk % 4) + 4) % 4) {
            case 1: return p1_;
            case 2: return p2_;
            case 3: return p1bar_;
            default: return p2bar_;
        }
    };
    if (k > 2) {
        // x_{k} = rule(k-1)(x_{k-1}) / x_{k-2}
        const PointedLaurent num = evaluate(rule(k - 1), prevariable(k - 1));
        memo_[k] = divide_exact(num, prevariable(k - 2), cfg_);
    } else {
        // x_{k} = rule(k+1)(x_{k+1}) / x_{k+2}
        const PointedLaurent num = evaluate(rule(k + 1), prevariable(k + 1));
        memo_[k] = divide_exact(num, prevariable(k + 2), cfg_);
    }
    return memo_.at(k);
}

PointedLaurent ClusterSequence::normalized(int k) {
    const PointedLaurent& x = prevariable(k);
    auto [e, c] = x.lowest();
    // the lowest total degree must be attained once, with an invertible
    // monomial coefficient; otherwise the normalization convention is broken
    auto next = std::next(x.terms.begin());
    if (next != x.terms.end() && next->first.first + next->first.second == e.first + e.second)
        throw std::logic_error("normalized: lowest total degree is not unique");
    Monomial m;
    Rational s;
    if (!invertible_coeff(c, cfg_, m, s) || s != 1)
        throw std::logic_error("normalized: lowest coefficient is not an invertible monomial");
    return x.times(0, 0, invert_coeff(m, s));
}

PointedLaurent greedy_element(long a1, long a2, const ClusterSeedConfig& cfg) {
    long m = std::max(a1, 0L), n = std::max(a2, 0L);
    auto table = compatible_weight_table(m, n, cfg.weights);
    PointedLaurent out;
    for (const auto& [tot, w] : table) out.add_term(-a1 + tot.first, -a2 + tot.second, w);
    return out;
}

PointedLaurent theta_function(const ScatteringDiagram& d, XY m0, const RatPoint& Q, int K) {
    if (m0 == XY{0, 0}) return PointedLaurent::monomial(0, 0);  // constant broken line
    BrokenLineQuery q{m0, Q, K, {}};
    PointedLaurent out;
    for (const BrokenLine& bl : enumerate_broken_lines(d, q)) {
        XY e = bl.final_exponent();
        out.add_term(e.a, e.b, bl.weight());
    }
    return out;
}

std::map<std::pair<long, long>, CoeffPolynomial> expand_in_greedy_basis(const PointedLaurent& z,
                                                                        const ClusterSeedConfig& cfg) {
    std::map<std::pair<long, long>, CoeffPolynomial> result;
    std::map<std::pair<long, long>, PointedLaurent> cache;
    PointedLaurent rem = z;
    size_t guard = 0;
    while (!rem.is_zero()) {
        if (++guard > 100000)
            throw std::runtime_error("expand_in_greedy_basis: elimination does not terminate");
        auto [e, c] = rem.lowest();
        std::pair<long, long> a{-e.first, -e.second};
        auto it = cache.find(a);
        if (it == cache.end()) it = cache.emplace(a, greedy_element(a.first, a.second, cfg)).first;
        result[a] = c;
        rem -= it->second.times(0, 0, c);
        if (!rem.is_zero() && !PointedOrder{}(e, rem.lowest().first))
            throw std::logic_error("expand_in_greedy_basis: no progress");
    }
    return result;
}

BlCgReport bl_cg_count_check(int ka, int kb, long t, const WeightConfig& cfg,
                             const ScatteringDiagram* diagram) {
    if (ka <= 0 || kb <= 0) throw std::invalid_argument("bl_cg_count_check: totals must be positive");
    // first valid domain with strict inequalities
    long m = 0, n = 0;
    for (int shift = 0;; ++shift) {
        auto doms = valid_domains(ka, kb, -1, shift + 1);
        std::tie(m, n) = doms.back();
        if (m > ka && n > kb) break;
        if (shift > 64) throw std::logic_error("bl_cg_count_check: no strict domain found");
    }
    BlCgReport rep;
    rep.m = m;
    rep.n = n;
    rep.grading_sum = compatible_weight_sum(m, n, cfg, {ka, kb}, t);

    int K = ka + kb;
    ScatteringDiagram local;
    if (!diagram) {
        local = ks_complete(initial_two_lines(cfg, K).walls, K);
        diagram = &local;
    }
    // endpoint with positive angular momentum: slope below (n-kb)/(m-ka)
    for (int attempt = 0;; ++attempt) {
        if (attempt > 5) throw std::runtime_error("bl_cg_count_check: no generic endpoint found");
        RatPoint Z = generic_endpoint_below_slope(n - kb, m - ka, attempt);
        try {
            BrokenLineQuery q{XY{int(-m), int(-n)}, Z, K, XY{int(-m + ka), int(-n + kb)}};
            CoeffPolynomial sum;
            for (const BrokenLine& bl : enumerate_broken_lines(*diagram, q))
                if (bl.multiplicity_at(XY{1, 0}) == t) sum += bl.weight();
            rep.broken_line_sum = sum;
            break;
        } catch (const endpoint_error&) {
            continue;  // endpoint hit a degenerate configuration; retry
        }
    }
    rep.equal = rep.broken_line_sum == rep.grading_sum;
    return rep;
}

}  // namespace tvx
