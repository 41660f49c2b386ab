#ifndef TVX_GREEDY_HPP
#define TVX_GREEDY_HPP

#include <map>

#include "tvx/broken_line.hpp"

namespace tvx {

// order by total degree, then lexicographically; begin() is the pointed corner
struct PointedOrder {
    bool operator()(const std::pair<long, long>& l, const std::pair<long, long>& r) const {
        long dl = l.first + l.second, dr = r.first + r.second;
        if (dl != dr) return dl < dr;
        return l < r;
    }
};

// Laurent polynomial in the cluster variables x1, x2 with CoeffPolynomial
// coefficients, pointed at its lowest term.
struct PointedLaurent {
    std::map<std::pair<long, long>, CoeffPolynomial, PointedOrder> terms;

    static PointedLaurent monomial(long e1, long e2, CoeffPolynomial c = CoeffPolynomial::one());

    bool is_zero() const { return terms.empty(); }
    void add_term(long e1, long e2, const CoeffPolynomial& c);
    CoeffPolynomial coefficient(long e1, long e2) const;
    // lowest term in the pointed order; throws on zero
    std::pair<std::pair<long, long>, CoeffPolynomial> lowest() const;
    // true when the lowest total degree is attained by a single term with
    // coefficient one
    bool is_pointed() const;

    PointedLaurent operator+(const PointedLaurent& o) const;
    PointedLaurent operator-(const PointedLaurent& o) const;
    PointedLaurent operator*(const PointedLaurent& o) const;
    PointedLaurent& operator+=(const PointedLaurent& o) { return *this = *this + o; }
    PointedLaurent& operator-=(const PointedLaurent& o) { return *this = *this - o; }
    PointedLaurent times(long e1, long e2, const CoeffPolynomial& c) const;
    friend bool operator==(const PointedLaurent&, const PointedLaurent&) = default;

    bool coefficients_nonneg_integral() const;
    std::string str() const;
};

// Seed data for the rank-2 recursion: exchange polynomials P1, P2 of degrees
// ell1, ell2 whose top coefficients are invertible.
struct ClusterSeedConfig {
    WeightConfig weights;
    int ell1 = 0, ell2 = 0;

    static ClusterSeedConfig symbolic(int ell1, int ell2);
    static ClusterSeedConfig specialized(const std::vector<CoeffPolynomial>& p1,
                                         const std::vector<CoeffPolynomial>& p2);
    // invertible variables p_{1,ell1}, p_{2,ell2} (symbolic mode)
    std::vector<VarId> invertible_vars() const;
};

// exact division asserting the quotient stays Laurent; the divisor's lowest
// coefficient must be invertible (a scalar times a monomial in the
// designated invertible variables)
PointedLaurent divide_exact(const PointedLaurent& num, const PointedLaurent& den,
                            const ClusterSeedConfig& cfg);

// Cluster pre-variables x_k and their normalizations X_k.
class ClusterSequence {
public:
    explicit ClusterSequence(ClusterSeedConfig cfg);

    const ClusterSeedConfig& config() const { return cfg_; }
    const PointedLaurent& prevariable(int k);  // x_k, Laurent by construction
    PointedLaurent normalized(int k);          // X_k, lowest coefficient 1

private:
    ClusterSeedConfig cfg_;
    std::vector<CoeffPolynomial> p1_, p2_, p1bar_, p2bar_;  // coefficient lists
    std::map<int, PointedLaurent> memo_;

    PointedLaurent evaluate(const std::vector<CoeffPolynomial>& coeffs, const PointedLaurent& at);
};

// greedy element x[a1,a2]: weighted count of compatible gradings on
// P([a1]+, [a2]+), pointed at x1^{-a1} x2^{-a2}
PointedLaurent greedy_element(long a1, long a2, const ClusterSeedConfig& cfg);

// theta function for m0 with endpoint Q, as an element pointed at m0
PointedLaurent theta_function(const ScatteringDiagram& d, XY m0, const RatPoint& Q, int K);

// expansion of z in the greedy basis by triangular elimination on pointed
// corners; throws when the elimination fails to terminate
std::map<std::pair<long, long>, CoeffPolynomial> expand_in_greedy_basis(const PointedLaurent& z,
                                                                        const ClusterSeedConfig& cfg);

struct BlCgReport {
    bool equal = false;
    long m = 0, n = 0;
    CoeffPolynomial broken_line_sum, grading_sum;
};

// weighted broken lines with initial exponent (-m,-n), final exponent
// (-m+ka,-n+kb) and x-axis bend multiplicity t versus compatible gradings
// with totals (ka, kb) and horizontal weight t outside sh(S2); (m,n) is the
// first valid domain with m > ka, n > kb
BlCgReport bl_cg_count_check(int ka, int kb, long t, const WeightConfig& cfg,
                             const ScatteringDiagram* diagram = nullptr);

}  // namespace tvx

#endif
