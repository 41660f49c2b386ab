#ifndef TVX_GRADING_HPP
#define TVX_GRADING_HPP

#include <functional>
#include <map>
#include <optional>

#include "tvx/coeff_poly.hpp"
#include "tvx/dyck.hpp"

namespace tvx {

// A grading assigns a nonnegative integer to every edge of a maximal Dyck
// path; values are stored by label (horiz[i] is u_{i+1}).
struct Grading {
    std::vector<int> horiz, vert;

    long horiz_total() const;
    long vert_total() const;
};

// Nonzero values a side may take together with their weight coefficients
// c_{i,j}. Side 1 weights vertical edges via p_{1,*}, side 2 horizontal
// edges via p_{2,*}. With open_ended set, values beyond the listed ones are
// allowed and weighted by the symbolic p_{i,j} (power-series initial data).
struct SideWeights {
    int side = 1;
    std::vector<std::pair<int, CoeffPolynomial>> coeffs;  // (j, c_j), j >= 1, c_j != 0
    bool open_ended = false;

    static SideWeights symbolic(int side, int ell);
    // by_power[j] is the coefficient of z^j; by_power[0] must be 1
    static SideWeights from_coefficients(int side, const std::vector<CoeffPolynomial>& by_power);

    int max_value() const;  // largest listed j (0 when none)
    const CoeffPolynomial* coeff(int j) const;
    CoeffPolynomial coeff_or_symbol(int j) const;
    std::vector<int> allowed_values(long cap) const;  // nonzero values <= cap
};

struct WeightConfig {
    SideWeights side1, side2;  // vertical / horizontal

    static WeightConfig symbolic(int ell1, int ell2);
};

// Domain data for tightness: totals beta1 (vertical) and beta2 (horizontal)
// on P(m,n) with m >= beta1, n >= beta2 and beta1*n - beta2*m = eps*gcd.
struct TightParams {
    long beta1 = 1, beta2 = 1;
    int eps = -1;
    long m = 0, n = 0;

    void validate() const;  // throws when the constraints fail
};

// lexicographically smallest valid (m,n) for given totals and eps
std::pair<long, long> m_epsilon(long beta1, long beta2, int eps);
// the `count` smallest valid domains (minimal plus shifts along the
// primitive direction)
std::vector<std::pair<long, long>> valid_domains(long beta1, long beta2, int eps, int count);

// Local shadow of a positively graded edge, as a bitmask over opposite-side
// labels (bit i = label i+1). For a vertical v: horizontal edges of the
// shortest cyclic subpath ending at v whose horizontal count equals the
// vertical weight it contains; all of them when no subpath balances.
uint64_t local_shadow_vertical(const DyckPath& path, const std::vector<int>& vert, int vlabel);
uint64_t local_shadow_horizontal(const DyckPath& path, const std::vector<int>& horiz, int hlabel);

// union of local shadows over the positive edges of the given side
uint64_t shadow(const DyckPath& path, const Grading& g, int side);

bool is_compatible(const DyckPath& path, const Grading& g);
bool is_tight(const DyckPath& path, const Grading& g, const TightParams& params);

CoeffPolynomial weight(const Grading& g, const WeightConfig& cfg);

// All tight gradings for the params under cfg's value constraints, ordered
// lexicographically by (vert values, horiz values).
std::vector<Grading> enumerate_tight_gradings(const TightParams& params, const WeightConfig& cfg);
CoeffPolynomial tight_weight_sum(const TightParams& params, const WeightConfig& cfg);

// Compatible gradings on P(m,n) under cfg; optional totals (vertical,
// horizontal) and optional filter t = vertical weight outside sh(S1), the
// statistic that vanishes exactly on tight gradings with eps = -1.
// Unbounded requests (open-ended cfg without totals) are rejected.
std::vector<Grading> enumerate_compatible_gradings(long m, long n, const WeightConfig& cfg,
                                                   std::optional<std::pair<long, long>> totals = {},
                                                   std::optional<long> t_filter = {});
CoeffPolynomial compatible_weight_sum(long m, long n, const WeightConfig& cfg,
                                      std::pair<long, long> totals, std::optional<long> t_filter = {});

// weighted sums keyed by (vertical total, horizontal total); the greedy
// element coefficient table
std::map<std::pair<long, long>, CoeffPolynomial> compatible_weight_table(long m, long n,
                                                                         const WeightConfig& cfg);

}  // namespace tvx

#endif
