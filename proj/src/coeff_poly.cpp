#include "tvx/coeff_poly.hpp"

#include <algorithm>
#include <sstream>

namespace tvx {

VarId VarId::p(int side, int j) {
    if (side != 1 && side != 2) throw std::invalid_argument("VarId: side must be 1 or 2");
    if (j < 1) throw std::invalid_argument("VarId: degree must be >= 1 (p_{i,0} is the constant 1)");
    return VarId{uint8_t(side), Coeff, uint32_t(j)};
}

VarId VarId::s() { return VarId{1, Param, 1}; }
VarId VarId::t() { return VarId{2, Param, 1}; }

std::string VarId::name() const {
    if (kind == Param) return side == 1 ? "s" : "t";
    return "p[" + std::to_string(side) + "," + std::to_string(degree) + "]";
}

Monomial Monomial::var(VarId v, int32_t e) {
    Monomial m;
    if (e != 0) m.factors.emplace_back(v, e);
    return m;
}

int64_t Monomial::weighted_degree(int side) const {
    int64_t d = 0;
    for (const auto& [v, e] : factors)
        if (v.side == side) d += int64_t(v.degree) * e;
    return d;
}

int64_t Monomial::weighted_degree() const {
    int64_t d = 0;
    for (const auto& [v, e] : factors) d += int64_t(v.degree) * e;
    return d;
}

int32_t Monomial::exponent_of(VarId v) const {
    for (const auto& [w, e] : factors)
        if (w == v) return e;
    return 0;
}

bool Monomial::has_negative_exponent() const {
    for (const auto& [v, e] : factors)
        if (e < 0) return true;
    return false;
}

Monomial Monomial::operator*(const Monomial& o) const {
    Monomial r;
    r.factors.reserve(factors.size() + o.factors.size());
    size_t i = 0, j = 0;
    while (i < factors.size() || j < o.factors.size()) {
        if (j == o.factors.size() || (i < factors.size() && factors[i].first < o.factors[j].first)) {
            r.factors.push_back(factors[i++]);
        } else if (i == factors.size() || o.factors[j].first < factors[i].first) {
            r.factors.push_back(o.factors[j++]);
        } else {
            int32_t e = factors[i].second + o.factors[j].second;
            if (e != 0) r.factors.emplace_back(factors[i].first, e);
            ++i, ++j;
        }
    }
    return r;
}

bool Monomial::operator<(const Monomial& o) const {
    int64_t da = weighted_degree(), db = o.weighted_degree();
    if (da != db) return da < db;
    size_t i = 0;
    for (; i < factors.size() && i < o.factors.size(); ++i) {
        if (factors[i].first.key() != o.factors[i].first.key())
            return factors[i].first.key() < o.factors[i].first.key();
        if (factors[i].second != o.factors[i].second)
            return factors[i].second > o.factors[i].second;  // higher power of earlier var first
    }
    return factors.size() < o.factors.size();
}

std::string Monomial::str() const {
    if (factors.empty()) return "1";
    std::ostringstream os;
    bool first = true;
    for (const auto& [v, e] : factors) {
        if (!first) os << "*";
        first = false;
        os << v.name();
        if (e != 1) os << "^" << e;
    }
    return os.str();
}

CoeffPolynomial::CoeffPolynomial(const Rational& c) {
    if (c != 0) terms_.emplace_back(Monomial::one(), c);
}

CoeffPolynomial::CoeffPolynomial(long c) : CoeffPolynomial(Rational(c)) {}

CoeffPolynomial::CoeffPolynomial(Monomial m, Rational c) {
    if (c != 0) terms_.emplace_back(std::move(m), std::move(c));
}

CoeffPolynomial CoeffPolynomial::var(VarId v) {
    return CoeffPolynomial(Monomial::var(v), Rational(1));
}

bool CoeffPolynomial::is_one() const {
    return terms_.size() == 1 && terms_[0].first.is_one() && terms_[0].second == 1;
}

bool CoeffPolynomial::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_[0].first.is_one());
}

bool CoeffPolynomial::is_integral() const {
    for (const auto& [m, c] : terms_)
        if (c.get_den() != 1) return false;
    return true;
}

bool CoeffPolynomial::is_nonneg_integral() const {
    for (const auto& [m, c] : terms_)
        if (c.get_den() != 1 || c < 0) return false;
    return true;
}

bool CoeffPolynomial::has_negative_exponent() const {
    for (const auto& [m, c] : terms_)
        if (m.has_negative_exponent()) return true;
    return false;
}

Rational CoeffPolynomial::coefficient(const Monomial& m) const {
    auto it = std::lower_bound(terms_.begin(), terms_.end(), m,
                               [](const Term& t, const Monomial& mm) { return t.first < mm; });
    if (it != terms_.end() && it->first == m) return it->second;
    return Rational(0);
}

std::optional<int64_t> CoeffPolynomial::homogeneous_weighted_degree(int side) const {
    if (terms_.empty()) return std::nullopt;
    int64_t d = terms_[0].first.weighted_degree(side);
    for (const auto& [m, c] : terms_)
        if (m.weighted_degree(side) != d) return std::nullopt;
    return d;
}

void CoeffPolynomial::normalize() {
    std::sort(terms_.begin(), terms_.end(),
              [](const Term& a, const Term& b) { return a.first < b.first; });
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (auto& t : terms_) {
        if (!out.empty() && out.back().first == t.first) {
            out.back().second += t.second;
            if (out.back().second == 0) out.pop_back();
        } else if (t.second != 0) {
            out.push_back(std::move(t));
        }
    }
    terms_ = std::move(out);
}

CoeffPolynomial CoeffPolynomial::from_terms(std::vector<Term> terms) {
    CoeffPolynomial p;
    p.terms_ = std::move(terms);
    p.normalize();
    return p;
}

CoeffPolynomial CoeffPolynomial::operator-() const {
    CoeffPolynomial r = *this;
    for (auto& [m, c] : r.terms_) c = -c;
    return r;
}

CoeffPolynomial CoeffPolynomial::operator+(const CoeffPolynomial& o) const {
    std::vector<Term> out;
    out.reserve(terms_.size() + o.terms_.size());
    size_t i = 0, j = 0;
    while (i < terms_.size() || j < o.terms_.size()) {
        if (j == o.terms_.size() || (i < terms_.size() && terms_[i].first < o.terms_[j].first)) {
            out.push_back(terms_[i++]);
        } else if (i == terms_.size() || o.terms_[j].first < terms_[i].first) {
            out.push_back(o.terms_[j++]);
        } else {
            Rational c = terms_[i].second + o.terms_[j].second;
            if (c != 0) out.emplace_back(terms_[i].first, std::move(c));
            ++i, ++j;
        }
    }
    CoeffPolynomial r;
    r.terms_ = std::move(out);
    return r;
}

CoeffPolynomial CoeffPolynomial::operator-(const CoeffPolynomial& o) const { return *this + (-o); }

CoeffPolynomial CoeffPolynomial::operator*(const CoeffPolynomial& o) const {
    if (is_zero() || o.is_zero()) return CoeffPolynomial();
    std::vector<Term> out;
    out.reserve(terms_.size() * o.terms_.size());
    for (const auto& [ma, ca] : terms_)
        for (const auto& [mb, cb] : o.terms_) out.emplace_back(ma * mb, ca * cb);
    return from_terms(std::move(out));
}

CoeffPolynomial& CoeffPolynomial::operator+=(const CoeffPolynomial& o) { return *this = *this + o; }
CoeffPolynomial& CoeffPolynomial::operator-=(const CoeffPolynomial& o) { return *this = *this - o; }
CoeffPolynomial& CoeffPolynomial::operator*=(const CoeffPolynomial& o) { return *this = *this * o; }

CoeffPolynomial CoeffPolynomial::operator*(const Rational& c) const {
    if (c == 0) return CoeffPolynomial();
    CoeffPolynomial r = *this;
    for (auto& [m, cc] : r.terms_) cc *= c;
    return r;
}

CoeffPolynomial CoeffPolynomial::operator/(const Rational& c) const {
    if (c == 0) throw std::domain_error("CoeffPolynomial: division by zero");
    CoeffPolynomial r = *this;
    for (auto& [m, cc] : r.terms_) cc /= c;
    return r;
}

CoeffPolynomial CoeffPolynomial::pow(unsigned e) const {
    CoeffPolynomial r = one();
    CoeffPolynomial base = *this;
    while (e) {
        if (e & 1u) r *= base;
        base = (e >>= 1u) ? base * base : base;
    }
    return r;
}

CoeffPolynomial CoeffPolynomial::specialize(const std::map<VarId, CoeffPolynomial>& assignment) const {
    CoeffPolynomial out;
    for (const auto& [m, c] : terms_) {
        CoeffPolynomial term(c);
        for (const auto& [v, e] : m.factors) {
            auto it = assignment.find(v);
            if (it == assignment.end())
                throw std::invalid_argument("specialize: no assignment for variable " + v.name());
            const CoeffPolynomial& val = it->second;
            if (e >= 0) {
                term *= val.pow(unsigned(e));
            } else {
                // inverting a value is only defined for single-term monomials
                if (val.size() != 1)
                    throw std::domain_error("specialize: negative exponent on non-monomial value");
                const auto& [vm, vc] = val.terms()[0];
                Monomial inv;
                for (auto [w, we] : vm.factors) inv.factors.emplace_back(w, int32_t(we * e));
                Rational ic = 1;
                for (int32_t r = 0; r < -e; ++r) ic /= vc;
                term = term.times_term(inv, ic);
            }
        }
        out += term;
    }
    return out;
}

CoeffPolynomial CoeffPolynomial::times_term(const Monomial& m, const Rational& c) const {
    if (c == 0) return CoeffPolynomial();
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (const auto& [mm, cc] : terms_) out.emplace_back(mm * m, cc * c);
    return from_terms(std::move(out));
}

std::string CoeffPolynomial::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        if (!first) os << " + ";
        first = false;
        if (m.is_one()) {
            os << c.get_str();
        } else if (c == 1) {
            os << m.str();
        } else {
            os << c.get_str() << "*" << m.str();
        }
    }
    return os.str();
}

CoeffPolynomial pvar(int side, int j) {
    if (j == 0) return CoeffPolynomial::one();
    return CoeffPolynomial::var(VarId::p(side, j));
}

Integer binomial(unsigned long n, unsigned long k) {
    mpz_class r;
    if (k > n) return 0;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

}  // namespace tvx
