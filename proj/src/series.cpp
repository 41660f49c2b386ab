#include "tvx/series.hpp"

#include <algorithm>

namespace tvx {

BivariateSeries BivariateSeries::monomial(int K, XY e, CoeffPolynomial c) {
    BivariateSeries s(K);
    if (!c.is_zero() && keep(K, e)) s.terms_.emplace_back(e, std::move(c));
    return s;
}

bool BivariateSeries::is_one() const {
    return terms_.size() == 1 && terms_[0].first == XY{0, 0} && terms_[0].second.is_one();
}

CoeffPolynomial BivariateSeries::coefficient(XY e) const {
    auto it = std::lower_bound(terms_.begin(), terms_.end(), e,
                               [](const Term& t, const XY& x) { return t.first < x; });
    if (it != terms_.end() && it->first == e) return it->second;
    return CoeffPolynomial::zero();
}

BivariateSeries BivariateSeries::from_terms(int K, std::vector<Term> terms) {
    std::sort(terms.begin(), terms.end(),
              [](const Term& l, const Term& r) { return l.first < r.first; });
    BivariateSeries s(K);
    for (auto& t : terms) {
        if (t.second.is_zero() || !keep(K, t.first)) continue;
        if (!s.terms_.empty() && s.terms_.back().first == t.first) {
            s.terms_.back().second += t.second;
            if (s.terms_.back().second.is_zero()) s.terms_.pop_back();
        } else {
            s.terms_.push_back(std::move(t));
        }
    }
    return s;
}

BivariateSeries BivariateSeries::operator+(const BivariateSeries& o) const {
    if (order_ != o.order_) throw std::invalid_argument("series: mismatched order bounds");
    std::vector<Term> out;
    out.reserve(terms_.size() + o.terms_.size());
    size_t i = 0, j = 0;
    while (i < terms_.size() || j < o.terms_.size()) {
        if (j == o.terms_.size() || (i < terms_.size() && terms_[i].first < o.terms_[j].first)) {
            out.push_back(terms_[i++]);
        } else if (i == terms_.size() || o.terms_[j].first < terms_[i].first) {
            out.push_back(o.terms_[j++]);
        } else {
            CoeffPolynomial c = terms_[i].second + o.terms_[j].second;
            if (!c.is_zero()) out.emplace_back(terms_[i].first, std::move(c));
            ++i, ++j;
        }
    }
    BivariateSeries s(order_);
    s.terms_ = std::move(out);
    return s;
}

BivariateSeries BivariateSeries::operator-(const BivariateSeries& o) const {
    BivariateSeries neg = o;
    for (auto& [e, c] : neg.terms_) c = -c;
    return *this + neg;
}

BivariateSeries BivariateSeries::operator*(const BivariateSeries& o) const {
    if (order_ != o.order_) throw std::invalid_argument("series: mismatched order bounds");
    std::vector<Term> out;
    out.reserve(terms_.size() * o.terms_.size());
    for (const auto& [ea, ca] : terms_)
        for (const auto& [eb, cb] : o.terms_) {
            XY e = ea + eb;
            if (!keep(order_, e)) continue;
            out.emplace_back(e, ca * cb);
        }
    return from_terms(order_, std::move(out));
}

BivariateSeries BivariateSeries::inverse() const {
    if (!constant_term().is_one())
        throw std::domain_error("series: inverse requires unit constant term");
    // v = sum_r (1-s)^r, truncated; (1-s) has positive order so powers die
    BivariateSeries u = one(order_) - *this;  // = 1 - s
    BivariateSeries acc = one(order_);
    BivariateSeries p = one(order_);
    for (int r = 1; r <= order_; ++r) {
        p *= u;
        if (p.is_zero()) break;
        acc += p;
    }
    return acc;
}

BivariateSeries BivariateSeries::pow(long e) const {
    if (e < 0) return inverse().pow(-e);
    BivariateSeries r = one(order_);
    BivariateSeries base = *this;
    unsigned long u = (unsigned long)e;
    while (u) {
        if (u & 1ul) r *= base;
        u >>= 1ul;
        if (u) base *= base;
    }
    return r;
}

BivariateSeries BivariateSeries::log() const {
    if (!constant_term().is_one())
        throw std::domain_error("series: log requires constant term 1");
    BivariateSeries u = *this - one(order_);
    BivariateSeries acc(order_);
    BivariateSeries p = one(order_);
    for (int r = 1; r <= order_; ++r) {
        p *= u;
        if (p.is_zero()) break;
        Rational c(r % 2 == 1 ? 1 : -1, r);
        std::vector<Term> scaled;
        scaled.reserve(p.terms().size());
        for (const auto& [e, pc] : p.terms()) scaled.emplace_back(e, pc * c);
        acc += from_terms(order_, std::move(scaled));
    }
    return acc;
}

BivariateSeries BivariateSeries::truncated(int K) const {
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (const auto& t : terms_)
        if (keep(K, t.first)) out.push_back(t);
    BivariateSeries s(K);
    s.terms_ = std::move(out);
    return s;
}

BivariateSeries BivariateSeries::map_coefficients(
    const std::function<CoeffPolynomial(XY, const CoeffPolynomial&)>& f) const {
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (const auto& [e, c] : terms_) out.emplace_back(e, f(e, c));
    return from_terms(order_, std::move(out));
}

}  // namespace tvx
