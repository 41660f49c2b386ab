#ifndef TVX_SERIES_HPP
#define TVX_SERIES_HPP

#include <functional>
#include <utility>

#include "tvx/coeff_poly.hpp"

namespace tvx {

// Exponent of x^a y^b
struct XY {
    int a = 0, b = 0;
    friend bool operator==(const XY&, const XY&) = default;
    // graded (a+b), then a: deterministic storage order
    friend bool operator<(const XY& l, const XY& r) {
        if (l.a + l.b != r.a + r.b) return l.a + l.b < r.a + r.b;
        return l.a < r.a;
    }
    XY operator+(const XY& o) const { return {a + o.a, b + o.b}; }
};

// Truncated series in x, y over CoeffPolynomial. Works modulo the ideal of
// monomials of total degree > K; terms with a negative exponent are kept
// (only the first-quadrant part is truncated).
class BivariateSeries {
public:
    using Term = std::pair<XY, CoeffPolynomial>;

    explicit BivariateSeries(int order_bound) : order_(order_bound) {}
    static BivariateSeries one(int K) {
        BivariateSeries s(K);
        s.terms_.emplace_back(XY{0, 0}, CoeffPolynomial::one());
        return s;
    }
    static BivariateSeries monomial(int K, XY e, CoeffPolynomial c);

    int order_bound() const { return order_; }
    const std::vector<Term>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_one() const;
    CoeffPolynomial coefficient(XY e) const;
    CoeffPolynomial constant_term() const { return coefficient({0, 0}); }

    BivariateSeries operator+(const BivariateSeries& o) const;
    BivariateSeries operator-(const BivariateSeries& o) const;
    BivariateSeries operator*(const BivariateSeries& o) const;
    BivariateSeries& operator+=(const BivariateSeries& o) { return *this = *this + o; }
    BivariateSeries& operator*=(const BivariateSeries& o) { return *this = *this * o; }

    friend bool operator==(const BivariateSeries&, const BivariateSeries&) = default;

    // integer power; negative exponents require unit constant term
    BivariateSeries pow(long e) const;
    BivariateSeries inverse() const;

    // formal log, sum_{r>=1} (-1)^{r+1} (s-1)^r / r; constant term must be 1
    BivariateSeries log() const;

    // retruncate to a smaller bound
    BivariateSeries truncated(int K) const;

    // map term-wise: e -> factor(e); used for wall crossings
    BivariateSeries map_coefficients(const std::function<CoeffPolynomial(XY, const CoeffPolynomial&)>& f) const;

    // drop terms the order bound excludes and zero polys; callers that build
    // term lists directly go through here
    static BivariateSeries from_terms(int K, std::vector<Term> terms);

private:
    int order_;
    std::vector<Term> terms_;  // sorted by XY, no zero polys, truncated
    static bool keep(int K, XY e) { return e.a < 0 || e.b < 0 || e.a + e.b <= K; }
};

}  // namespace tvx

#endif
