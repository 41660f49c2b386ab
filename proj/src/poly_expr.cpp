#include "tvx/poly_expr.hpp"

#include <cctype>
#include <sstream>

namespace tvx {

namespace {

// dense univariate polynomial in the formal variable
using UniPoly = std::vector<CoeffPolynomial>;

UniPoly uni_const(CoeffPolynomial c) { return {std::move(c)}; }

UniPoly uni_add(const UniPoly& a, const UniPoly& b) {
    UniPoly r(std::max(a.size(), b.size()), CoeffPolynomial::zero());
    for (size_t i = 0; i < a.size(); ++i) r[i] += a[i];
    for (size_t i = 0; i < b.size(); ++i) r[i] += b[i];
    return r;
}

UniPoly uni_mul(const UniPoly& a, const UniPoly& b) {
    UniPoly r(a.size() + b.size() - 1, CoeffPolynomial::zero());
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i].is_zero()) continue;
        for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    }
    return r;
}

UniPoly uni_pow(UniPoly base, unsigned e) {
    UniPoly r = uni_const(CoeffPolynomial::one());
    while (e) {
        if (e & 1u) r = uni_mul(r, base);
        e >>= 1u;
        if (e) base = uni_mul(base, base);
    }
    return r;
}

struct Parser {
    const std::string& src;
    size_t pos = 0;
    char formal = 0;

    explicit Parser(const std::string& s) : src(s) {}

    void skip_ws() {
        while (pos < src.size() && std::isspace((unsigned char)src[pos])) ++pos;
    }
    char peek() {
        skip_ws();
        return pos < src.size() ? src[pos] : '\0';
    }
    char take() {
        char c = peek();
        ++pos;
        return c;
    }
    void expect(char c) {
        if (peek() != c) throw ParseError(std::string("expected '") + c + "'", pos);
        ++pos;
    }

    long integer() {
        skip_ws();
        size_t start = pos;
        while (pos < src.size() && std::isdigit((unsigned char)src[pos])) ++pos;
        if (pos == start) throw ParseError("expected an integer", pos);
        return std::stol(src.substr(start, pos - start));
    }

    UniPoly atom() {
        char c = peek();
        if (std::isdigit((unsigned char)c)) return uni_const(CoeffPolynomial(integer()));
        if (c == '(') {
            ++pos;
            UniPoly e = expr();
            expect(')');
            return e;
        }
        if (c == 'p') {
            ++pos;
            expect('[');
            long i = integer();
            expect(',');
            long j = integer();
            expect(']');
            if (i != 1 && i != 2) throw ParseError("variable side must be 1 or 2", pos);
            if (j < 1) throw ParseError("variable degree must be >= 1", pos);
            return uni_const(pvar(int(i), int(j)));
        }
        if (c == 's') {
            ++pos;
            return uni_const(CoeffPolynomial::var(VarId::s()));
        }
        if (c == 't') {
            ++pos;
            return uni_const(CoeffPolynomial::var(VarId::t()));
        }
        if (c == 'x' || c == 'y') {
            if (formal && formal != c) throw ParseError("mixed formal variables", pos);
            formal = c;
            ++pos;
            return {CoeffPolynomial::zero(), CoeffPolynomial::one()};
        }
        throw ParseError("unexpected character", pos);
    }

    UniPoly factor() {
        UniPoly base = atom();
        if (peek() == '^') {
            ++pos;
            long e = integer();
            if (e < 0) throw ParseError("negative exponent", pos);
            return uni_pow(std::move(base), unsigned(e));
        }
        return base;
    }

    UniPoly term() {
        UniPoly r = factor();
        while (peek() == '*') {
            ++pos;
            r = uni_mul(r, factor());
        }
        return r;
    }

    UniPoly expr() {
        UniPoly r = term();
        while (peek() == '+') {
            ++pos;
            r = uni_add(r, term());
        }
        return r;
    }
};

}  // namespace

ParsedPoly parse_poly(const std::string& src) {
    Parser p(src);
    UniPoly u = p.expr();
    p.skip_ws();
    if (p.pos != src.size()) throw ParseError("trailing input", p.pos);
    while (u.size() > 1 && u.back().is_zero()) u.pop_back();
    if (u.empty() || !u[0].is_one()) throw ParseError("constant term must be 1", 0);
    return ParsedPoly{p.formal, std::move(u)};
}

std::string pretty_print(const ParsedPoly& p) {
    char v = p.formal ? p.formal : 'x';
    std::ostringstream os;
    bool first = true;
    for (size_t j = 0; j < p.coeffs.size(); ++j) {
        const CoeffPolynomial& c = p.coeffs[j];
        if (c.is_zero()) continue;
        if (!first) os << " + ";
        first = false;
        if (j == 0) {
            os << c.str();
            continue;
        }
        std::string var = j == 1 ? std::string(1, v) : std::string(1, v) + "^" + std::to_string(j);
        if (c.is_one())
            os << var;
        else if (c.size() == 1)
            os << c.str() << "*" << var;
        else
            os << "(" << c.str() << ")*" << var;
    }
    return os.str();
}

}  // namespace tvx
