#include "tvx/jobs.hpp"

#include <atomic>
#include <cstdlib>
#include <fstream>
#include <future>
#include <iostream>
#include <numeric>
#include <sstream>

#include "tvx/json_io.hpp"
#include "tvx/poly_expr.hpp"
#include "tvx/svg.hpp"

namespace tvx {

namespace {

constexpr const char* kSchemaVersion = "1";

SideWeights side_from_expr(int side, const std::string& expr, char expected_formal) {
    ParsedPoly p = parse_poly(expr);
    if (p.formal && p.formal != expected_formal)
        throw std::invalid_argument(std::string("expression for side ") + std::to_string(side) +
                                    " must use formal variable '" + expected_formal + "'");
    SideWeights w = SideWeights::from_coefficients(side, p.coeffs);
    return w;
}

WeightConfig config_from_job(const JobSpec& job) {
    if (job.p1.empty() || job.p2.empty()) throw std::invalid_argument("missing --p1/--p2");
    return {side_from_expr(1, job.p1, 'x'), side_from_expr(2, job.p2, 'y')};
}

std::vector<int> parse_int_list(const std::string& csv) {
    std::vector<int> out;
    if (csv.empty()) return out;
    std::istringstream is(csv);
    std::string item;
    while (std::getline(is, item, ',')) out.push_back(std::stoi(item));
    return out;
}

Rational parse_rational(const std::string& s) {
    mpq_class q(s);
    q.canonicalize();
    return q;
}

// parallel map over ray directions; results merged in input order
ScatteringDiagram tight_diagram_parallel(const WeightConfig& cfg, int K, int threads) {
    std::vector<XY> dirs;
    for (int a = 1; a < K; ++a)
        for (int b = 1; a + b <= K; ++b)
            if (std::gcd(a, b) == 1) dirs.push_back({a, b});
    std::vector<Wall> rays(dirs.size());
    if (threads <= 1) {
        for (size_t i = 0; i < dirs.size(); ++i)
            rays[i] = wall_function_tight(dirs[i].a, dirs[i].b, cfg, K);
    } else {
        std::atomic<size_t> next{0};
        auto worker = [&] {
            for (size_t i = next++; i < dirs.size(); i = next++)
                rays[i] = wall_function_tight(dirs[i].a, dirs[i].b, cfg, K);
        };
        std::vector<std::future<void>> futs;
        for (int t = 0; t < threads; ++t) futs.push_back(std::async(std::launch::async, worker));
        for (auto& f : futs) f.get();
    }
    ScatteringDiagram d = initial_two_lines(cfg, K);
    for (auto& r : rays)
        if (!r.f.is_trivial()) d.walls.push_back(std::move(r));
    d.sort_canonical();
    return d;
}

Json header(const JobSpec& job) {
    return Json{{"schema_version", kSchemaVersion}, {"command", job.command}};
}

int do_wallfn(const JobSpec& job, std::ostream& out) {
    WeightConfig cfg = config_from_job(job);
    Wall w{XY{job.a, job.b}, WallKind::Ray, {}};
    if (job.method == "tight") {
        w = wall_function_tight(job.a, job.b, cfg, job.order);
    } else if (job.method == "oracle") {
        ScatteringDiagram d = ks_complete(initial_two_lines(cfg, job.order).walls, job.order);
        if (const Wall* r = d.find(XY{job.a, job.b}, WallKind::Ray)) w = *r;
        w.dir = XY{job.a, job.b};
        w.f.dir = w.dir;
        w.f.order = job.order;
    } else {
        throw std::invalid_argument("wallfn: unknown method");
    }
    Json j = header(job);
    j["direction"] = Json::array({job.a, job.b});
    j["order"] = job.order;
    j["coefficients"] = to_json(w.f);
    if (job.with_gradings && job.method == "tight") {
        Json gs = Json::array();
        for (int k = 1; k * (job.a + job.b) <= job.order; ++k) {
            auto [m, n] = m_epsilon(long(k) * job.a, long(k) * job.b, -1);
            TightParams tp{long(k) * job.a, long(k) * job.b, -1, m, n};
            gs.push_back(Json{{"k", k},
                              {"domain", Json::array({m, n})},
                              {"gradings", to_json(enumerate_tight_gradings(tp, cfg), cfg)}});
        }
        j["tight_gradings"] = std::move(gs);
    }
    out << j.dump(2) << "\n";
    return 0;
}

int do_scatter(const JobSpec& job, std::ostream& out) {
    WeightConfig cfg = config_from_job(job);
    ScatteringDiagram d;
    if (job.method == "tight") {
        if (!job.extra_lines.empty())
            throw std::invalid_argument("scatter: extra lines need --method oracle");
        d = tight_diagram_parallel(cfg, job.order, std::max(1, job.threads));
    } else if (job.method == "oracle") {
        std::vector<Wall> lines = initial_two_lines(cfg, job.order).walls;
        for (const std::string& spec : job.extra_lines) {
            auto colon = spec.find(':');
            if (colon == std::string::npos) throw std::invalid_argument("scatter: bad --line, want a,b:expr");
            auto comma = spec.find(',');
            int la = std::stoi(spec.substr(0, comma));
            int lb = std::stoi(spec.substr(comma + 1, colon - comma - 1));
            ParsedPoly p = parse_poly(spec.substr(colon + 1));
            Wall w{XY{la, lb}, WallKind::Line, WallFunction{XY{la, lb}, job.order, {}}};
            for (size_t j = 1; j < p.coeffs.size(); ++j)
                if (!p.coeffs[j].is_zero()) w.f.coeffs.emplace_back(int(j), p.coeffs[j]);
            lines.push_back(std::move(w));
        }
        d = ks_complete(std::move(lines), job.order);
    } else {
        throw std::invalid_argument("scatter: unknown method");
    }
    if (job.format == "svg") {
        out << render_diagram_svg(d);
        return 0;
    }
    Json j = header(job);
    j["diagram"] = to_json(d);
    out << j.dump(2) << "\n";
    return 0;
}

ClusterSeedConfig seed_from_job(const JobSpec& job) {
    if (!job.p1.empty() || !job.p2.empty()) {
        ParsedPoly p1 = parse_poly(job.p1), p2 = parse_poly(job.p2);
        return ClusterSeedConfig::specialized(p1.coeffs, p2.coeffs);
    }
    if (job.ell1 < 1 || job.ell2 < 1) throw std::invalid_argument("need --l1/--l2 or --p1/--p2");
    return ClusterSeedConfig::symbolic(job.ell1, job.ell2);
}

int do_greedy(const JobSpec& job, std::ostream& out) {
    ClusterSeedConfig cfg = seed_from_job(job);
    PointedLaurent g = greedy_element(job.a1, job.a2, cfg);
    Json j = header(job);
    j["a"] = Json::array({job.a1, job.a2});
    j["element"] = to_json(g);
    out << j.dump(2) << "\n";
    return 0;
}

int do_theta(const JobSpec& job, std::ostream& out) {
    WeightConfig cfg = config_from_job(job);
    ScatteringDiagram d = ks_complete(initial_two_lines(cfg, job.order).walls, job.order);
    RatPoint Q = generic_endpoint(0);
    if (!job.qx.empty() && !job.qy.empty()) Q = {parse_rational(job.qx), parse_rational(job.qy)};
    PointedLaurent th = theta_function(d, XY{job.m0x, job.m0y}, Q, job.order);
    Json j = header(job);
    j["m0"] = Json::array({job.m0x, job.m0y});
    j["order"] = job.order;
    j["theta"] = to_json(th);
    if (job.with_lines && !(XY{job.m0x, job.m0y} == XY{0, 0})) {
        Json lines = Json::array();
        BrokenLineQuery q{XY{job.m0x, job.m0y}, Q, job.order, {}};
        for (const BrokenLine& bl : enumerate_broken_lines(d, q)) lines.push_back(to_json(bl));
        j["broken_lines"] = std::move(lines);
    }
    out << j.dump(2) << "\n";
    return 0;
}

int do_clustervar(const JobSpec& job, std::ostream& out) {
    ClusterSequence seq(seed_from_job(job));
    Json j = header(job);
    j["k"] = job.k;
    j["prevariable"] = to_json(seq.prevariable(job.k));
    j["normalized"] = to_json(seq.normalized(job.k));
    out << j.dump(2) << "\n";
    return 0;
}

int do_gw(const JobSpec& job, std::ostream& out) {
    GWTable t = gw_extract(job.ell1, job.ell2, job.a, job.b, job.order);
    if (job.format == "csv") {
        out << gw_csv(t);
        return 0;
    }
    Json j = header(job);
    j["table"] = to_json(t);
    out << j.dump(2) << "\n";
    return 0;
}

int do_check(const JobSpec& job, std::ostream& out) {
    WeightConfig cfg = config_from_job(job);
    CompareReport rep = compare_tight_vs_oracle(cfg, job.order);
    ScatteringDiagram oracle = ks_complete(initial_two_lines(cfg, job.order).walls, job.order);
    bool consistent = loop_product(oracle, job.order).is_identity();
    bool positive = check_positivity(oracle);
    out << "tight-vs-oracle: " << (rep.ok() ? "ok" : "MISMATCH") << "\n";
    for (const auto& item : rep.discrepancies)
        out << "  direction (" << item.dir.a << "," << item.dir.b << ") k=" << item.k
            << " tight=" << item.tight.str() << " oracle=" << item.oracle.str() << "\n";
    out << "consistency: " << (consistent ? "ok" : "FAILED") << "\n";
    out << "positivity: " << (positive ? "ok" : "FAILED") << "\n";
    return rep.ok() && consistent && positive ? 0 : 1;
}

int do_render(const JobSpec& job, std::ostream& out) {
    if (job.kind == "grading") {
        DyckPath path(job.m, job.n);
        Grading g{parse_int_list(job.horiz), parse_int_list(job.vert)};
        if (int(g.horiz.size()) != job.m || int(g.vert.size()) != job.n)
            throw std::invalid_argument("render: value lists must match the path size");
        out << render_grading_svg(path, g);
        return 0;
    }
    if (job.kind == "diagram") {
        JobSpec sub = job;
        sub.format = "svg";
        return do_scatter(sub, out);
    }
    throw std::invalid_argument("render: unknown kind");
}

}  // namespace

int run_job(const JobSpec& job, std::ostream& out, std::ostream& err) {
    try {
        if (job.command == "wallfn") return do_wallfn(job, out);
        if (job.command == "scatter") return do_scatter(job, out);
        if (job.command == "greedy") return do_greedy(job, out);
        if (job.command == "theta") return do_theta(job, out);
        if (job.command == "clustervar") return do_clustervar(job, out);
        if (job.command == "gw") return do_gw(job, out);
        if (job.command == "check") return do_check(job, out);
        if (job.command == "render") return do_render(job, out);
        err << "unknown command: " << job.command << "\n";
        return 2;
    } catch (const ParseError& e) {
        err << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        err << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
}

int run_job(const JobSpec& job) {
    if (job.out_path.empty()) return run_job(job, std::cout, std::cerr);
    std::ofstream f(job.out_path, std::ios::binary);
    if (!f) {
        std::cerr << "cannot open output file: " << job.out_path << "\n";
        return 2;
    }
    return run_job(job, f, std::cerr);
}

int default_thread_count() {
    if (const char* env = std::getenv("TVX_THREADS")) {
        int v = std::atoi(env);
        if (v >= 1) return v;
    }
    return 1;
}

}  // namespace tvx
