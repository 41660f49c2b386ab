#ifndef TVX_GW_HPP
#define TVX_GW_HPP

#include "tvx/scattering.hpp"

namespace tvx {

// Aggregated log-invariants of the wall function on the ray (a,b) for the
// specialization P1 = (1+sx)^{l1}, P2 = (1+ty)^{l2}: the coefficient of
// s^{ka} t^{kb} x^{ka} y^{kb} in log f, divided by k.
struct GWTable {
    int ell1 = 0, ell2 = 0;
    int a = 0, b = 0;
    int order = 0;
    std::vector<std::pair<int, Rational>> rows;  // (k, N_k)

    Rational value(int k) const;
};

// weight data for P1 = (1+sx)^{l1}, P2 = (1+ty)^{l2}: p_{i,j} -> C(l_i,j) s^j
WeightConfig binomial_specialization(int ell1, int ell2);

GWTable gw_extract(int ell1, int ell2, int a, int b, int K);

}  // namespace tvx

#endif
