#include <doctest.h>

#include <random>

#include "tvx/grading.hpp"

using namespace tvx;

namespace {

// Direct scan of the defining condition, independent of the shadow-based
// implementation: a positive pair (u,v) is balanced when some vertical e on
// the subpath u->v, e != v, has its north-step count equal to the horizontal
// weight before it, or some horizontal e != u has its west-side horizontal
// count from e to v equal to the vertical weight in between.
bool compatible_by_scan(const DyckPath& path, const Grading& g) {
    for (int ul = 1; ul <= path.m(); ++ul) {
        if (g.horiz[ul - 1] <= 0) continue;
        for (int vl = 1; vl <= path.n(); ++vl) {
            if (g.vert[vl - 1] <= 0) continue;
            auto sub = path.cyclic_subpath(path.horizontal(ul), path.vertical(vl));
            if (sub.empty()) {
                // coincident anchors: the cyclic subpath is the full loop
                // starting at u (and necessarily ending with v)
                int start = path.horizontal(ul).anchor % path.size();
                for (int s = 0; s < path.size(); ++s)
                    sub.push_back(path.edge_at((start + s) % path.size()));
            }
            bool ok = false;
            // condition 1: vertical e != v with |(u->e)_2| = sum of horizontal values on u->e
            for (size_t i = 0; i + 1 < sub.size() && !ok; ++i) {
                if (sub[i].horizontal) continue;
                long verts = 0, wsum = 0;
                for (size_t j = 0; j <= i; ++j) {
                    if (sub[j].horizontal)
                        wsum += g.horiz[sub[j].label - 1];
                    else
                        ++verts;
                }
                ok = verts == wsum;
            }
            // condition 2: horizontal e != u with |(e->v)_1| = sum of vertical values on e->v
            for (size_t i = 1; i < sub.size() && !ok; ++i) {
                if (!sub[i].horizontal) continue;
                long horizs = 0, wsum = 0;
                for (size_t j = i; j < sub.size(); ++j) {
                    if (sub[j].horizontal)
                        ++horizs;
                    else
                        wsum += g.vert[sub[j].label - 1];
                }
                ok = horizs == wsum;
            }
            if (!ok) return false;
        }
    }
    return true;
}

Grading grading_74() {
    Grading g{std::vector<int>(7, 0), std::vector<int>(4, 0)};
    g.horiz[0] = g.horiz[1] = 2;
    g.vert[2] = g.vert[3] = 3;
    return g;
}

}  // namespace

TEST_CASE("compatibility of the two reference gradings") {
    // values u1=u2=2, v3=v4=3 on P(6,4) and P(7,4)
    Grading g64{std::vector<int>(6, 0), std::vector<int>(4, 0)};
    g64.horiz[0] = g64.horiz[1] = 2;
    g64.vert[2] = g64.vert[3] = 3;
    CHECK_FALSE(is_compatible(DyckPath(6, 4), g64));

    CHECK(is_compatible(DyckPath(7, 4), grading_74()));

    // all-zero grading is compatible
    Grading zero{std::vector<int>(6, 0), std::vector<int>(4, 0)};
    CHECK(is_compatible(DyckPath(6, 4), zero));
}

TEST_CASE("shadows on P(7,4)") {
    DyckPath p(7, 4);
    Grading g = grading_74();
    // sh(v3;S2) = {u4,u5,u6}
    CHECK(local_shadow_vertical(p, g.vert, 3) == ((1ull << 3) | (1ull << 4) | (1ull << 5)));
    // sh(v4;S2) = {u2,...,u7}
    uint64_t u2to7 = 0;
    for (int i = 1; i < 7; ++i) u2to7 |= 1ull << i;
    CHECK(local_shadow_vertical(p, g.vert, 4) == u2to7);
    CHECK(shadow(p, g, 2) == u2to7);
    // sh(S1) = {v1,...,v4}
    CHECK(shadow(p, g, 1) == 0xFull);
    // all-zero grading has an empty shadow
    Grading zero{std::vector<int>(7, 0), std::vector<int>(4, 0)};
    CHECK(shadow(p, zero, 2) == 0);
}

TEST_CASE("shadow-based compatibility agrees with the direct scan") {
    std::mt19937 rng(23);
    for (int trial = 0; trial < 4000; ++trial) {
        int m = std::uniform_int_distribution<int>(1, 6)(rng);
        int n = std::uniform_int_distribution<int>(1, 5)(rng);
        DyckPath path(m, n);
        Grading g{std::vector<int>(m), std::vector<int>(n)};
        for (int& x : g.horiz) x = std::uniform_int_distribution<int>(0, 3)(rng);
        for (int& x : g.vert) x = std::uniform_int_distribution<int>(0, 3)(rng);
        CHECK(is_compatible(path, g) == compatible_by_scan(path, g));
    }
}

TEST_CASE("m_epsilon minimal domains") {
    for (int k = 1; k <= 5; ++k) {
        auto [m, n] = m_epsilon(2 * k, k, -1);
        CHECK(m == 2 * k + 1);
        CHECK(n == k);
    }
    CHECK(m_epsilon(12, 8, -1) == std::pair<long, long>(14, 9));
    CHECK(m_epsilon(1, 1, 1) == std::pair<long, long>(1, 2));
    // brute-force minimality check
    for (long b1 = 1; b1 <= 6; ++b1)
        for (long b2 = 1; b2 <= 6; ++b2)
            for (int eps : {-1, 1}) {
                auto [m, n] = m_epsilon(b1, b2, eps);
                long g = std::gcd(b1, b2);
                CHECK(m >= b1);
                CHECK(n >= b2);
                CHECK(b1 * n - b2 * m == eps * g);
                bool smaller = false;
                for (long mm = b1; mm < m && !smaller; ++mm)
                    for (long nn = b2; nn <= n + b1; ++nn)
                        if (b1 * nn - b2 * mm == eps * g) smaller = true;
                CHECK_FALSE(smaller);
            }
}

TEST_CASE("the three reference tight gradings") {
    WeightConfig cfg = WeightConfig::symbolic(3, 1);
    // beta=(2,1) on P(3,1): u1=1, v1=2
    {
        TightParams tp{2, 1, -1, 3, 1};
        DyckPath p(3, 1);
        Grading g{{1, 0, 0}, {2}};
        CHECK(is_tight(p, g, tp));
        CHECK(weight(g, cfg) == pvar(1, 2) * pvar(2, 1));
        auto all = enumerate_tight_gradings(tp, cfg);
        REQUIRE(all.size() == 1);
        CHECK(all[0].horiz == g.horiz);
        CHECK(all[0].vert == g.vert);
    }
    // beta=(4,2) on P(5,2): u1=u2=1, v1=1, v2=3
    {
        TightParams tp{4, 2, -1, 5, 2};
        DyckPath p(5, 2);
        Grading g{{1, 1, 0, 0, 0}, {1, 3}};
        CHECK(is_tight(p, g, tp));
        CHECK(weight(g, cfg) == pvar(1, 1) * pvar(1, 3) * pvar(2, 1).pow(2));
    }
    // beta=(6,3) on P(7,3): u1=u2=u3=1, v2=v3=3
    {
        TightParams tp{6, 3, -1, 7, 3};
        DyckPath p(7, 3);
        Grading g{{1, 1, 1, 0, 0, 0, 0}, {0, 3, 3}};
        CHECK(is_tight(p, g, tp));
        CHECK(weight(g, cfg) == pvar(1, 3).pow(2) * pvar(2, 1).pow(3));
    }
    // the P(7,4) compatible grading is not tight: (7,4) violates the domain
    // constraint for beta=(6,4), for either sign
    for (int eps : {-1, 1}) {
        TightParams tp{6, 4, eps, 7, 4};
        CHECK_FALSE(is_tight(DyckPath(7, 4), grading_74(), tp));
    }
    // enumeration still insists on a valid domain
    CHECK_THROWS_AS(enumerate_tight_gradings(TightParams{6, 4, -1, 7, 4}, cfg),
                    std::invalid_argument);
    // all-zero weight is 1
    CHECK(weight(Grading{std::vector<int>(5, 0), std::vector<int>(2, 0)}, cfg) == CoeffPolynomial::one());
}

TEST_CASE("the fourteen tight gradings on P(14,9)") {
    // values restricted to {0,2} horizontally and {0,3} vertically
    WeightConfig cfg;
    cfg.side1 = SideWeights::from_coefficients(1, {CoeffPolynomial::one(), CoeffPolynomial::zero(),
                                                   CoeffPolynomial::zero(), CoeffPolynomial::one()});
    cfg.side2 = SideWeights::from_coefficients(
        2, {CoeffPolynomial::one(), CoeffPolynomial::zero(), CoeffPolynomial::one()});
    TightParams tp{12, 8, -1, 14, 9};
    auto all = enumerate_tight_gradings(tp, cfg);
    CHECK(all.size() == 14);
    for (const auto& g : all) {
        int h2 = 0, v3 = 0;
        for (int x : g.horiz) h2 += x == 2;
        for (int x : g.vert) v3 += x == 3;
        CHECK(h2 == 4);
        CHECK(v3 == 4);
    }
}

TEST_CASE("compatible enumeration basics") {
    WeightConfig cfg = WeightConfig::symbolic(3, 2);
    // empty path: the unique empty grading
    CHECK(enumerate_compatible_gradings(0, 0, cfg).size() == 1);
    // no vertical edge: vacuous compatibility, one value per horizontal level
    CHECK(enumerate_compatible_gradings(1, 0, cfg).size() == 3);
    // t=0 class with prescribed totals equals the tight set
    WeightConfig cfg31 = WeightConfig::symbolic(3, 1);
    auto cls = enumerate_compatible_gradings(3, 1, cfg31, std::pair<long, long>{2, 1}, 0);
    TightParams tp{2, 1, -1, 3, 1};
    auto tight = enumerate_tight_gradings(tp, cfg31);
    REQUIRE(cls.size() == tight.size());
    for (size_t i = 0; i < cls.size(); ++i) {
        CHECK(cls[i].horiz == tight[i].horiz);
        CHECK(cls[i].vert == tight[i].vert);
    }
    // totals unreachable with only zero values allowed
    WeightConfig none = WeightConfig::symbolic(0, 0);
    CHECK(enumerate_tight_gradings(TightParams{1, 1, -1, 2, 1}, none).empty());
    // open-ended values without totals are rejected
    WeightConfig open = cfg;
    open.side1.open_ended = true;
    CHECK_THROWS_AS(enumerate_compatible_gradings(2, 2, open), std::invalid_argument);
}

TEST_CASE("weight homogeneity") {
    WeightConfig cfg = WeightConfig::symbolic(3, 3);
    std::mt19937 rng(31);
    for (int trial = 0; trial < 200; ++trial) {
        int m = std::uniform_int_distribution<int>(1, 5)(rng);
        int n = std::uniform_int_distribution<int>(1, 5)(rng);
        Grading g{std::vector<int>(m), std::vector<int>(n)};
        for (int& x : g.horiz) x = std::uniform_int_distribution<int>(0, 3)(rng);
        for (int& x : g.vert) x = std::uniform_int_distribution<int>(0, 3)(rng);
        CoeffPolynomial w = weight(g, cfg);
        REQUIRE(!w.is_zero());
        CHECK(w.homogeneous_weighted_degree(1).value_or(0) == g.vert_total());
        CHECK(w.homogeneous_weighted_degree(2).value_or(0) == g.horiz_total());
    }
}

TEST_CASE("tight weight sum is domain- and sign-independent") {
    WeightConfig cfg = WeightConfig::symbolic(2, 2);
    for (long b1 = 1; b1 <= 5; ++b1)
        for (long b2 = 1; b2 <= 4; ++b2) {
            CoeffPolynomial ref;
            bool first = true;
            for (int eps : {-1, 1})
                for (auto [m, n] : valid_domains(b1, b2, eps, 3)) {
                    TightParams tp{b1, b2, eps, m, n};
                    CoeffPolynomial s = tight_weight_sum(tp, cfg);
                    if (first) {
                        ref = s;
                        first = false;
                    } else {
                        CHECK(s == ref);
                    }
                }
        }
}
