#ifndef TVX_BROKEN_LINE_HPP
#define TVX_BROKEN_LINE_HPP

#include "tvx/scattering.hpp"

namespace tvx {

struct RatPoint {
    Rational x, y;
    friend bool operator==(const RatPoint&, const RatPoint&) = default;
};

// the chosen endpoint is not generic (on a wall, or a traced segment meets
// the origin); callers regenerate the endpoint and retry
struct endpoint_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct BendPoint {
    XY wall_dir;
    WallKind wall_kind;
    int multiplicity = 0;  // >= 1
    RatPoint point;
};

struct LineSegment {
    XY exponent;           // the path travels with velocity -exponent
    CoeffPolynomial coeff;
};

// Piecewise-linear path ending at `endpoint`, bending at walls by picking
// terms of f^{n.m}; segments and bends are listed in travel order, the
// first segment carrying the initial exponent with coefficient 1.
struct BrokenLine {
    std::vector<LineSegment> segments;
    std::vector<BendPoint> bends;  // bends[i] joins segments[i] and segments[i+1]
    RatPoint endpoint;

    XY initial_exponent() const { return segments.front().exponent; }
    XY final_exponent() const { return segments.back().exponent; }
    const CoeffPolynomial& weight() const { return segments.back().coeff; }
    long multiplicity_at(XY dir) const;  // total bend multiplicity on that support
};

struct BrokenLineQuery {
    XY m0;
    RatPoint Q;
    int order = 0;                          // bound on the order of m(gamma) - m0
    std::optional<XY> final_exponent = {};  // optional exact filter
};

// endpoint must be generic: in the open first quadrant, off every wall;
// enumeration reports a genericity failure if a segment meets the origin
std::vector<BrokenLine> enumerate_broken_lines(const ScatteringDiagram& d, const BrokenLineQuery& q);

// deterministic generic endpoints in the first-quadrant chamber
RatPoint generic_endpoint(int index);
// generic endpoint of slope slightly below (num/den)
RatPoint generic_endpoint_below_slope(long num, long den, int index = 0);
void validate_endpoint(const ScatteringDiagram& d, const RatPoint& q);

}  // namespace tvx

#endif
