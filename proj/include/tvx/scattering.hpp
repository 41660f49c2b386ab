#ifndef TVX_SCATTERING_HPP
#define TVX_SCATTERING_HPP

#include "tvx/grading.hpp"
#include "tvx/series.hpp"

namespace tvx {

enum class WallKind { Line, Ray };

// Wall-function 1 + sum_k c_k x^{k*dir}, truncated at total order K
// (k*(dir.a+dir.b) <= K).
struct WallFunction {
    XY dir;
    int order = 0;
    std::vector<std::pair<int, CoeffPolynomial>> coeffs;  // sorted by k, nonzero

    CoeffPolynomial coefficient(int k) const;
    void set_coefficient(int k, CoeffPolynomial c);
    void add_coefficient(int k, const CoeffPolynomial& c);
    bool is_trivial() const { return coeffs.empty(); }
    int max_k() const { return coeffs.empty() ? 0 : coeffs.back().first; }
    BivariateSeries as_series(int K) const;
};

// A line R*dir or ray R_{<=0}*dir through the origin; dir is primitive with
// nonnegative coordinates.
struct Wall {
    XY dir;
    WallKind kind = WallKind::Ray;
    WallFunction f;
};

struct ScatteringDiagram {
    int order = 0;
    std::vector<Wall> walls;

    const Wall* find(XY dir, WallKind kind) const;
    Wall* find(XY dir, WallKind kind);
    std::vector<const Wall*> rays_by_slope() const;  // ascending slope
    void sort_canonical();                           // slope asc, lines before rays
};

// Composite of wall crossings, stored through the images of the two
// coordinates: x -> x*ux, y -> y*uy with unit series ux, uy.
struct WallAutomorphism {
    BivariateSeries ux, uy;

    static WallAutomorphism identity(int K);
    bool is_identity() const { return ux.is_one() && uy.is_one(); }
    // unit-series factor of the image of x^m
    BivariateSeries image_factor(XY m) const;
};

// One wall crossing of a concrete path: the primitive normal is oriented
// against the travel direction (n(travel) < 0).
struct Crossing {
    const Wall* wall;
    XY normal;
};

// crossing sequence of the standard counterclockwise loop, starting just
// above the positive x-axis
std::vector<Crossing> loop_crossings(const ScatteringDiagram& d);

// monomial-wise x^m -> x^m f^{n(m)} with n the primitive normal against v
BivariateSeries apply_crossing(const Wall& w, XY travel, const BivariateSeries& s);

WallAutomorphism path_ordered_product(const std::vector<Crossing>& seq, int K);
WallAutomorphism loop_product(const ScatteringDiagram& d, int K);

// two initial coordinate lines built from the weight data: R(1,0) carries
// P1(x) (side-1 coefficients), R(0,1) carries P2(y)
ScatteringDiagram initial_two_lines(const WeightConfig& cfg, int K);

// Kontsevich-Soibelman consistency completion: inserts the unique rays
// making every loop product the identity modulo order K+1.
ScatteringDiagram ks_complete(std::vector<Wall> initial_lines, int K);
// same result, but corrections at each order are applied one at a time in
// ascending or descending slope order (order-robustness hook)
ScatteringDiagram ks_complete_ordered(std::vector<Wall> initial_lines, int K, bool ascending_slope);

// wall function on the ray (a,b) from the tight-grading formula
Wall wall_function_tight(int a, int b, const WeightConfig& cfg, int K, int eps = -1);
// full diagram (two lines + all rays with nontrivial functions) by the
// tight-grading formula
ScatteringDiagram tight_diagram(const WeightConfig& cfg, int K, int eps = -1);

struct CompareReport {
    struct Item {
        XY dir;
        int k;
        CoeffPolynomial tight, oracle;
    };
    std::vector<Item> discrepancies;
    bool ok() const { return discrepancies.empty(); }
};

// structural comparison of every ray function, formula vs completion
CompareReport compare_tight_vs_oracle(const WeightConfig& cfg, int K);

// every wall-function coefficient is a polynomial with nonnegative integer
// coefficients
bool check_positivity(const ScatteringDiagram& d);

}  // namespace tvx

#endif
