#include "tvx/gw.hpp"

#include <numeric>

namespace tvx {

Rational GWTable::value(int k) const {
    for (const auto& [kk, v] : rows)
        if (kk == k) return v;
    return Rational(0);
}

WeightConfig binomial_specialization(int ell1, int ell2) {
    WeightConfig cfg;
    cfg.side1.side = 1;
    cfg.side2.side = 2;
    for (int j = 1; j <= ell1; ++j)
        cfg.side1.coeffs.emplace_back(
            j, CoeffPolynomial(Monomial::var(VarId::s(), j), Rational(binomial(ell1, j))));
    for (int j = 1; j <= ell2; ++j)
        cfg.side2.coeffs.emplace_back(
            j, CoeffPolynomial(Monomial::var(VarId::t(), j), Rational(binomial(ell2, j))));
    return cfg;
}

GWTable gw_extract(int ell1, int ell2, int a, int b, int K) {
    if (a <= 0 || b <= 0 || std::gcd(a, b) != 1)
        throw std::invalid_argument("gw_extract: (a,b) must be coprime positive");
    GWTable table{ell1, ell2, a, b, K, {}};
    WeightConfig cfg = binomial_specialization(ell1, ell2);
    Wall w = wall_function_tight(a, b, cfg, K);
    // every pre-log coefficient is a single s^{ka} t^{kb} monomial with a
    // positive integer scalar
    for (const auto& [k, c] : w.f.coeffs) {
        if (c.size() != 1 || !c.is_nonneg_integral())
            throw std::logic_error("gw_extract: wall coefficient is not a positive integer monomial");
        const Monomial& m = c.terms()[0].first;
        if (m.exponent_of(VarId::s()) != k * a || m.exponent_of(VarId::t()) != k * b)
            throw std::logic_error("gw_extract: wall coefficient has the wrong s,t exponents");
    }
    BivariateSeries logf = w.f.as_series(K).log();
    for (int k = 1; k * (a + b) <= K; ++k) {
        CoeffPolynomial c = logf.coefficient(XY{k * a, k * b});
        if (c.is_zero()) {
            table.rows.emplace_back(k, Rational(0));
            continue;
        }
        if (c.size() != 1) throw std::logic_error("gw_extract: log coefficient is not a monomial");
        table.rows.emplace_back(k, c.terms()[0].second / Rational(k));
    }
    return table;
}

}  // namespace tvx
