#ifndef TVX_COEFF_POLY_HPP
#define TVX_COEFF_POLY_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace tvx {

using Rational = mpq_class;
using Integer = mpz_class;

// Coefficient variable p_{side,j} (kind=Coeff) or the specialization
// parameters s,t (kind=Param, side 1 -> s, side 2 -> t). j >= 1 always;
// p_{i,0} is the constant 1 and is never materialized.
struct VarId {
    enum Kind : uint8_t { Coeff = 0, Param = 1 };

    uint8_t side = 1;   // 1 or 2
    Kind kind = Coeff;
    uint32_t degree = 1;  // the grading weight j of p_{i,j}; 1 for s,t

    static VarId p(int side, int j);
    static VarId s();
    static VarId t();

    // total order: (side, degree, kind)
    uint64_t key() const {
        return (uint64_t(side) << 40) | (uint64_t(degree) << 8) | uint64_t(kind);
    }
    friend bool operator==(const VarId&, const VarId&) = default;
    friend bool operator<(const VarId& a, const VarId& b) { return a.key() < b.key(); }

    std::string name() const;
};

// Exponent vector over VarId, sorted, no zero exponents. Negative exponents
// are legal only for the designated invertible variables (checked by the
// operations that introduce them, not structurally).
struct Monomial {
    std::vector<std::pair<VarId, int32_t>> factors;

    static Monomial one() { return {}; }
    static Monomial var(VarId v, int32_t e = 1);

    bool is_one() const { return factors.empty(); }
    // weighted degree restricted to one side, counting degree*exponent
    int64_t weighted_degree(int side) const;
    int64_t weighted_degree() const;
    int32_t exponent_of(VarId v) const;
    bool has_negative_exponent() const;

    Monomial operator*(const Monomial& o) const;
    friend bool operator==(const Monomial&, const Monomial&) = default;
    bool operator<(const Monomial& o) const;  // graded, then lex on (side, degree)

    std::string str() const;
};

// Exact sparse polynomial in the p_{i,j} (and s,t) with rational
// coefficients. Canonical form: terms sorted, no zero coefficients.
// Integrality where the math demands it is asserted by callers/tests.
class CoeffPolynomial {
public:
    using Term = std::pair<Monomial, Rational>;

    CoeffPolynomial() = default;
    explicit CoeffPolynomial(const Rational& c);
    explicit CoeffPolynomial(long c);
    CoeffPolynomial(Monomial m, Rational c);

    static CoeffPolynomial zero() { return CoeffPolynomial(); }
    static CoeffPolynomial one() { return CoeffPolynomial(1); }
    static CoeffPolynomial var(VarId v);

    const std::vector<Term>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_one() const;
    bool is_constant() const;
    // true when every coefficient is an integer (denominator 1)
    bool is_integral() const;
    // true when every coefficient is a nonnegative integer
    bool is_nonneg_integral() const;
    bool has_negative_exponent() const;
    size_t size() const { return terms_.size(); }

    Rational coefficient(const Monomial& m) const;
    Rational constant_term() const { return coefficient(Monomial::one()); }

    // weighted degree on one side must be uniform across terms for the
    // homogeneity checks; returns nullopt when mixed or zero.
    std::optional<int64_t> homogeneous_weighted_degree(int side) const;

    CoeffPolynomial operator-() const;
    CoeffPolynomial operator+(const CoeffPolynomial& o) const;
    CoeffPolynomial operator-(const CoeffPolynomial& o) const;
    CoeffPolynomial operator*(const CoeffPolynomial& o) const;
    CoeffPolynomial& operator+=(const CoeffPolynomial& o);
    CoeffPolynomial& operator-=(const CoeffPolynomial& o);
    CoeffPolynomial& operator*=(const CoeffPolynomial& o);
    CoeffPolynomial operator*(const Rational& c) const;
    CoeffPolynomial operator/(const Rational& c) const;
    CoeffPolynomial pow(unsigned e) const;

    friend bool operator==(const CoeffPolynomial&, const CoeffPolynomial&) = default;

    // ring-homomorphism image; every variable occurring in *this must be
    // assigned. Values with negative exponents require monomial assignments.
    CoeffPolynomial specialize(const std::map<VarId, CoeffPolynomial>& assignment) const;

    // multiply by a single-term monomial/coefficient pair (exact)
    CoeffPolynomial times_term(const Monomial& m, const Rational& c) const;

    std::string str() const;

    // internal: takes possibly-unsorted term list and canonicalizes
    static CoeffPolynomial from_terms(std::vector<Term> terms);

private:
    std::vector<Term> terms_;  // sorted by Monomial order, nonzero coeffs
    void normalize();
};

inline CoeffPolynomial operator*(const Rational& c, const CoeffPolynomial& p) { return p * c; }

// p_{i,j} as a polynomial
CoeffPolynomial pvar(int side, int j);

// binomial(n, k) as an exact integer
Integer binomial(unsigned long n, unsigned long k);

}  // namespace tvx

#endif
