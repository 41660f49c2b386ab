// Acceptance suite: runs the project's exit criteria and prints one
// pass/fail line per criterion. Usage: acceptance [--criterion N]
#include <atomic>
#include <chrono>
#include <cstring>
#include <functional>
#include <future>
#include <iostream>
#include <random>
#include <sstream>
#include <thread>

#include "tvx/greedy.hpp"
#include "tvx/gw.hpp"
#include "tvx/jobs.hpp"
#include "tvx/json_io.hpp"

using namespace tvx;

namespace {

int worker_threads() {
    int t = default_thread_count();
    if (t <= 1) t = int(std::thread::hardware_concurrency());
    return std::max(1, t);
}

// run fn(i) for i in [0,n) on a few threads, preserving determinism of the
// collected results by index
template <typename Fn>
void parallel_for(size_t n, Fn&& fn) {
    int threads = worker_threads();
    if (threads <= 1 || n <= 1) {
        for (size_t i = 0; i < n; ++i) fn(i);
        return;
    }
    std::atomic<size_t> next{0};
    auto worker = [&] {
        for (size_t i = next++; i < n; i = next++) fn(i);
    };
    std::vector<std::future<void>> futs;
    for (int t = 0; t < threads; ++t) futs.push_back(std::async(std::launch::async, worker));
    for (auto& f : futs) f.get();
}

WeightConfig binomial_config(int ell1, int ell2) {
    // P1 = 1 + x^{ell1}, P2 = 1 + y^{ell2}
    std::vector<CoeffPolynomial> c1(ell1 + 1), c2(ell2 + 1);
    c1[0] = CoeffPolynomial::one();
    c1[ell1] = CoeffPolynomial::one();
    c2[0] = CoeffPolynomial::one();
    c2[ell2] = CoeffPolynomial::one();
    WeightConfig cfg;
    cfg.side1 = SideWeights::from_coefficients(1, c1);
    cfg.side2 = SideWeights::from_coefficients(2, c2);
    return cfg;
}

// the randomized truncated-power-series initial data of criterion 3:
// nonempty subsets of {1..4} per side, symbolic coefficients
std::vector<WeightConfig> random_power_series_configs(int count) {
    std::mt19937 rng(20250809);
    std::uniform_int_distribution<int> mask(1, 15);
    std::vector<WeightConfig> out;
    for (int i = 0; i < count; ++i) {
        WeightConfig cfg;
        cfg.side1.side = 1;
        cfg.side2.side = 2;
        int m1 = mask(rng), m2 = mask(rng);
        for (int j = 1; j <= 4; ++j) {
            if (m1 >> (j - 1) & 1) cfg.side1.coeffs.emplace_back(j, pvar(1, j));
            if (m2 >> (j - 1) & 1) cfg.side2.coeffs.emplace_back(j, pvar(2, j));
        }
        out.push_back(std::move(cfg));
    }
    return out;
}

struct SweepResult {
    std::vector<std::pair<std::string, WeightConfig>> configs;
    std::vector<int> orders;
    std::vector<ScatteringDiagram> oracles;
    std::vector<bool> compare_ok;
};

const SweepResult& oracle_sweep() {
    static SweepResult res = [] {
        SweepResult r;
        for (int l1 = 1; l1 <= 3; ++l1)
            for (int l2 = 1; l2 <= 3; ++l2) {
                r.configs.emplace_back("symbolic(" + std::to_string(l1) + "," + std::to_string(l2) + ")",
                                       WeightConfig::symbolic(l1, l2));
                r.orders.push_back(12);
            }
        int idx = 0;
        for (auto& cfg : random_power_series_configs(20)) {
            r.configs.emplace_back("power-series #" + std::to_string(idx++), std::move(cfg));
            r.orders.push_back(10);
        }
        r.oracles.resize(r.configs.size());
        r.compare_ok.assign(r.configs.size(), false);
        parallel_for(r.configs.size(), [&](size_t i) {
            const auto& cfg = r.configs[i].second;
            int K = r.orders[i];
            r.oracles[i] = ks_complete(initial_two_lines(cfg, K).walls, K);
            ScatteringDiagram tight = tight_diagram(cfg, K);
            bool ok = true;
            std::vector<XY> dirs;
            for (const auto& w : r.oracles[i].walls)
                if (w.kind == WallKind::Ray) dirs.push_back(w.dir);
            for (const auto& w : tight.walls)
                if (w.kind == WallKind::Ray && !r.oracles[i].find(w.dir, WallKind::Ray))
                    dirs.push_back(w.dir);
            for (XY dir : dirs) {
                const Wall* a = r.oracles[i].find(dir, WallKind::Ray);
                const Wall* b = tight.find(dir, WallKind::Ray);
                int kmax = std::max(a ? a->f.max_k() : 0, b ? b->f.max_k() : 0);
                for (int k = 1; k <= kmax; ++k)
                    if (!((a ? a->f.coefficient(k) : CoeffPolynomial::zero()) ==
                          (b ? b->f.coefficient(k) : CoeffPolynomial::zero())))
                        ok = false;
            }
            r.compare_ok[i] = ok;
        });
        return r;
    }();
    return res;
}

bool criterion1(std::ostream& log) {
    WeightConfig cfg = WeightConfig::symbolic(3, 1);
    int K = 9;
    ScatteringDiagram oracle = ks_complete(initial_two_lines(cfg, K).walls, K);
    auto P = [](int i, int j) { return pvar(i, j); };
    struct Expect {
        XY dir;
        std::vector<std::pair<int, CoeffPolynomial>> coeffs;
    };
    std::vector<Expect> expected = {
        {{3, 1}, {{1, P(1, 3) * P(2, 1)}}},
        {{2, 1},
         {{1, P(1, 2) * P(2, 1)},
          {2, P(1, 1) * P(1, 3) * P(2, 1).pow(2)},
          {3, P(1, 3).pow(2) * P(2, 1).pow(3)}}},
        {{3, 2}, {{1, P(1, 3) * P(2, 1).pow(2)}}},
        {{1, 1},
         {{1, P(1, 1) * P(2, 1)}, {2, P(1, 2) * P(2, 1).pow(2)}, {3, P(1, 3) * P(2, 1).pow(3)}}}};
    bool ok = true;
    size_t rays = 0;
    for (const auto& w : oracle.walls) rays += w.kind == WallKind::Ray;
    if (rays != expected.size()) {
        log << "  expected 4 rays, got " << rays << "\n";
        ok = false;
    }
    for (const auto& e : expected) {
        const Wall* w = oracle.find(e.dir, WallKind::Ray);
        Wall t = wall_function_tight(e.dir.a, e.dir.b, cfg, K);
        if (!w) {
            log << "  missing oracle ray (" << e.dir.a << "," << e.dir.b << ")\n";
            ok = false;
            continue;
        }
        if (!(w->f.coeffs == e.coeffs)) {
            log << "  oracle ray (" << e.dir.a << "," << e.dir.b << ") differs from the reference\n";
            ok = false;
        }
        if (!(t.f.coeffs == e.coeffs)) {
            log << "  tight ray (" << e.dir.a << "," << e.dir.b << ") differs from the reference\n";
            ok = false;
        }
    }
    return ok;
}

bool criterion2(std::ostream& log) {
    WeightConfig cfg = binomial_config(3, 2);
    int K = 20;
    ScatteringDiagram oracle = ks_complete(initial_two_lines(cfg, K).walls, K);
    ScatteringDiagram tight = tight_diagram(cfg, K);
    bool ok = true;
    for (const ScatteringDiagram* d : {&oracle, &tight}) {
        const Wall* w = d->find(XY{3, 2}, WallKind::Ray);
        if (!w) {
            log << "  ray (3,2) missing\n";
            return false;
        }
        long expect[] = {1, 2, 5, 14};
        for (int k = 1; k <= 4; ++k)
            if (!(w->f.coefficient(k) == CoeffPolynomial(expect[k - 1]))) {
                log << "  (3,2) coefficient k=" << k << " is " << w->f.coefficient(k).str() << "\n";
                ok = false;
            }
    }
    // full structural agreement of the two methods
    CompareReport rep = compare_tight_vs_oracle(cfg, K);
    if (!rep.ok()) {
        log << "  " << rep.discrepancies.size() << " formula/oracle discrepancies\n";
        ok = false;
    }
    // the 14 as a cardinality on P(14,9)
    TightParams tp{12, 8, -1, 14, 9};
    auto gradings = enumerate_tight_gradings(tp, cfg);
    if (gradings.size() != 14) {
        log << "  tight-grading count on P(14,9) is " << gradings.size() << "\n";
        ok = false;
    }
    return ok;
}

bool criterion3(std::ostream& log) {
    const SweepResult& r = oracle_sweep();
    bool ok = true;
    for (size_t i = 0; i < r.configs.size(); ++i)
        if (!r.compare_ok[i]) {
            log << "  mismatch for " << r.configs[i].first << "\n";
            ok = false;
        }
    return ok;
}

bool criterion4(std::ostream& log) {
    const SweepResult& r = oracle_sweep();
    std::vector<int> bad;
    std::vector<uint8_t> good(r.configs.size(), 0);
    parallel_for(r.configs.size(), [&](size_t i) {
        bool consistent = loop_product(r.oracles[i], r.orders[i]).is_identity();
        bool positive = check_positivity(r.oracles[i]);
        good[i] = consistent && positive;
    });
    bool ok = true;
    for (size_t i = 0; i < good.size(); ++i)
        if (!good[i]) {
            log << "  consistency/positivity failed for " << r.configs[i].first << "\n";
            ok = false;
        }
    return ok;
}

bool criterion5(std::ostream& log) {
    WeightConfig cfg = WeightConfig::symbolic(3, 3);
    std::vector<std::pair<long, long>> betas;
    for (long b1 = 1; b1 <= 9; ++b1)
        for (long b2 = 1; b1 + b2 <= 10; ++b2) betas.emplace_back(b1, b2);
    std::vector<uint8_t> good(betas.size(), 0);
    parallel_for(betas.size(), [&](size_t i) {
        auto [b1, b2] = betas[i];
        CoeffPolynomial ref;
        bool first = true, ok = true;
        for (int eps : {-1, 1})
            for (auto [m, n] : valid_domains(b1, b2, eps, 3)) {
                TightParams tp{b1, b2, eps, m, n};
                CoeffPolynomial s = tight_weight_sum(tp, cfg);
                if (first) {
                    ref = s;
                    first = false;
                } else if (!(s == ref)) {
                    ok = false;
                }
            }
        good[i] = ok;
    });
    bool ok = true;
    for (size_t i = 0; i < betas.size(); ++i)
        if (!good[i]) {
            log << "  domain/sign dependence at beta=(" << betas[i].first << "," << betas[i].second
                << ")\n";
            ok = false;
        }
    return ok;
}

bool criterion6(std::ostream& log) {
    struct Cfg {
        int l1, l2;
    };
    std::vector<Cfg> cfgs = {{1, 1}, {2, 2}, {3, 1}, {3, 2}};
    int K = 14;
    bool all_ok = true;
    for (const Cfg& c : cfgs) {
        ClusterSeedConfig seed = ClusterSeedConfig::symbolic(c.l1, c.l2);
        ScatteringDiagram d = ks_complete(initial_two_lines(seed.weights, K).walls, K);
        std::vector<std::pair<long, long>> as;
        for (long a1 = -4; a1 <= 4; ++a1)
            for (long a2 = -4; a2 <= 4; ++a2) as.emplace_back(a1, a2);
        std::vector<std::string> errs(as.size());
        parallel_for(as.size(), [&](size_t i) {
            auto [a1, a2] = as[i];
            PointedLaurent greedy = greedy_element(a1, a2, seed);
            PointedLaurent t0 = theta_function(d, XY{int(-a1), int(-a2)}, generic_endpoint(0), K);
            if (!(t0 == greedy)) {
                errs[i] = "theta != greedy";
                return;
            }
            PointedLaurent t1 = theta_function(d, XY{int(-a1), int(-a2)}, generic_endpoint(1), K);
            if (!(t1 == t0)) errs[i] = "endpoint dependence";
        });
        for (size_t i = 0; i < as.size(); ++i)
            if (!errs[i].empty()) {
                log << "  (l1,l2)=(" << c.l1 << "," << c.l2 << ") a=(" << as[i].first << ","
                    << as[i].second << "): " << errs[i] << "\n";
                all_ok = false;
            }
    }
    return all_ok;
}

bool criterion7(std::ostream& log) {
    bool ok = true;
    {
        WeightConfig cfg = binomial_config(3, 2);
        ScatteringDiagram d = ks_complete(initial_two_lines(cfg, 10).walls, 10);
        BrokenLineQuery q{XY{-8, -5}, RatPoint{Rational(7), Rational(3)}, 10, XY{-2, -1}};
        bool found = false;
        for (const auto& bl : enumerate_broken_lines(d, q))
            if (bl.bends.size() == 1 && bl.bends[0].wall_dir == XY{3, 2} &&
                bl.bends[0].multiplicity == 2 && bl.weight() == CoeffPolynomial(2) &&
                bl.multiplicity_at(XY{1, 0}) == 0)
                found = true;
        if (!found) {
            log << "  weight-2 line with a multiplicity-2 bend at (3,2) not found\n";
            ok = false;
        }
    }
    {
        WeightConfig cfg = binomial_config(2, 2);
        ScatteringDiagram d = ks_complete(initial_two_lines(cfg, 20).walls, 20);
        RatPoint Q{Rational(2) + Rational(1, 9973), Rational(3) + Rational(1, 9967)};
        BrokenLineQuery q{XY{-12, -11}, Q, 20, XY{-2, -1}};
        bool found = false;
        for (const auto& bl : enumerate_broken_lines(d, q)) {
            if (bl.segments.size() != 4) continue;
            if (!(bl.segments[1].exponent == XY{-6, -7}) || !(bl.segments[2].exponent == XY{-2, -5}))
                continue;
            long expect[] = {1, 9, 72, 72};
            bool match = bl.weight() == CoeffPolynomial(72);
            for (int i = 0; i < 4; ++i)
                if (!(bl.segments[i].coeff == CoeffPolynomial(expect[i]))) match = false;
            if (match) found = true;
        }
        if (!found) {
            log << "  the 1,9,72,72 line was not found\n";
            ok = false;
        }
    }
    return ok;
}

bool criterion8(std::ostream& log) {
    bool ok = true;
    for (auto [l1, l2] : {std::pair{2, 2}, {3, 2}}) {
        WeightConfig cfg = WeightConfig::symbolic(l1, l2);
        ScatteringDiagram d = ks_complete(initial_two_lines(cfg, 8).walls, 8);
        std::vector<std::tuple<int, int, long>> jobs;
        for (int a = 1; a <= 7; ++a)
            for (int b = 1; a + b <= 8; ++b) {
                if (std::gcd(a, b) != 1) continue;
                for (int k = 1; k * (a + b) <= 8; ++k)
                    for (long t = 0; t <= long(k) * a; ++t) jobs.emplace_back(k * a, k * b, t);
            }
        std::vector<uint8_t> good(jobs.size(), 0);
        parallel_for(jobs.size(), [&](size_t i) {
            auto [ka, kb, t] = jobs[i];
            good[i] = bl_cg_count_check(ka, kb, t, cfg, &d).equal;
        });
        for (size_t i = 0; i < jobs.size(); ++i)
            if (!good[i]) {
                auto [ka, kb, t] = jobs[i];
                log << "  (l1,l2)=(" << l1 << "," << l2 << ") (ka,kb)=(" << ka << "," << kb
                    << ") t=" << t << " mismatch\n";
                ok = false;
            }
    }
    return ok;
}

bool criterion9(std::ostream& log) {
    bool ok = true;
    for (auto [l1, l2] : {std::pair{2, 2}, {3, 1}}) {
        ClusterSeedConfig seed = ClusterSeedConfig::symbolic(l1, l2);
        ClusterSequence seq(seed);
        for (int k = -8; k <= 8; ++k) {
            const PointedLaurent& x = seq.prevariable(k);
            if (!x.coefficients_nonneg_integral()) {
                log << "  x_" << k << " has a non-positive coefficient at (" << l1 << "," << l2 << ")\n";
                ok = false;
            }
            try {
                PointedLaurent X = seq.normalized(k);
                if (!X.lowest().second.is_one()) {
                    log << "  X_" << k << " is not normalized\n";
                    ok = false;
                }
            } catch (const std::exception& e) {
                log << "  normalization of X_" << k << " failed: " << e.what() << "\n";
                ok = false;
            }
        }
        if (!(seq.prevariable(3) == greedy_element(1, 0, seed))) {
            log << "  x[1,0] != x_3 at (" << l1 << "," << l2 << ")\n";
            ok = false;
        }
        if (!(seq.prevariable(0) == greedy_element(0, 1, seed))) {
            log << "  x[0,1] != x_0 at (" << l1 << "," << l2 << ")\n";
            ok = false;
        }
    }
    return ok;
}

bool criterion10(std::ostream& log) {
    ClusterSeedConfig seed = ClusterSeedConfig::symbolic(2, 2);
    std::vector<std::pair<long, long>> as;
    for (long a1 = -2; a1 <= 2; ++a1)
        for (long a2 = -2; a2 <= 2; ++a2) as.emplace_back(a1, a2);
    std::map<std::pair<long, long>, PointedLaurent> greedy;
    for (auto a : as) greedy[a] = greedy_element(a.first, a.second, seed);
    std::vector<std::pair<size_t, size_t>> pairs;
    for (size_t i = 0; i < as.size(); ++i)
        for (size_t j = i; j < as.size(); ++j) pairs.emplace_back(i, j);
    std::vector<std::string> errs(pairs.size());
    parallel_for(pairs.size(), [&](size_t idx) {
        auto [i, j] = pairs[idx];
        PointedLaurent prod = greedy.at(as[i]) * greedy.at(as[j]);
        try {
            for (const auto& [a, c] : expand_in_greedy_basis(prod, seed)) {
                if (!c.is_nonneg_integral()) errs[idx] = "negative structure constant";
                if (c.has_negative_exponent()) errs[idx] = "negative exponent in a constant";
            }
        } catch (const std::exception& e) {
            errs[idx] = e.what();
        }
    });
    bool ok = true;
    for (size_t idx = 0; idx < pairs.size(); ++idx)
        if (!errs[idx].empty()) {
            auto [i, j] = pairs[idx];
            log << "  x[" << as[i].first << "," << as[i].second << "] * x[" << as[j].first << ","
                << as[j].second << "]: " << errs[idx] << "\n";
            ok = false;
        }
    return ok;
}

struct Criterion {
    int id;
    const char* name;
    double budget_seconds;
    std::function<bool(std::ostream&)> fn;
};

}  // namespace

int main(int argc, char** argv) {
    int only = 0;
    for (int i = 1; i < argc; ++i) {
        if (std::strcmp(argv[i], "--criterion") == 0 && i + 1 < argc) only = std::atoi(argv[++i]);
    }
    // runtime budgets are enforced where stated (criteria 1, 2, 3, 6)
    std::vector<Criterion> criteria = {
        {1, "deg(3,1) golden rays, completion and formula", 5, criterion1},
        {2, "Catalan coefficients 1,2,5,14 on the (3,2) ray", 60, criterion2},
        {3, "formula/completion sweep, symbolic and power-series", 600, criterion3},
        {4, "loop consistency and positivity of every sweep diagram", 0, criterion4},
        {5, "domain- and sign-independence of tight weight sums", 0, criterion5},
        {6, "theta functions equal greedy elements", 900, criterion6},
        {7, "golden broken lines", 0, criterion7},
        {8, "broken-line versus compatible-grading counts", 0, criterion8},
        {9, "cluster recursion, Laurent positivity, normalization", 0, criterion9},
        {10, "greedy structure constants are positive", 0, criterion10},
    };
    bool all_ok = true;
    for (const auto& c : criteria) {
        if (only && c.id != only) continue;
        std::ostringstream log;
        auto start = std::chrono::steady_clock::now();
        bool ok = false;
        try {
            ok = c.fn(log);
        } catch (const std::exception& e) {
            log << "  exception: " << e.what() << "\n";
        }
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (ok && c.budget_seconds > 0 && secs > c.budget_seconds) {
            log << "  exceeded the runtime budget of " << c.budget_seconds << " s\n";
            ok = false;
        }
        std::cout << (ok ? "PASS" : "FAIL") << " criterion " << c.id << ": " << c.name << " ("
                  << std::fixed;
        std::cout.precision(2);
        std::cout << secs << " s)\n"
                  << log.str();
        all_ok = all_ok && ok;
    }
    return all_ok ? 0 : 1;
}
