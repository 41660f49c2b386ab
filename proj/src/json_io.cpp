#include "tvx/json_io.hpp"

#include <sstream>

namespace tvx {

std::string rational_str(const Rational& r) {
    if (r.get_den() == 1) return r.get_num().get_str();
    return r.get_num().get_str() + "/" + r.get_den().get_str();
}

Json to_json(const Monomial& m) {
    Json arr = Json::array();
    for (const auto& [v, e] : m.factors) arr.push_back(Json::array({v.name(), e}));
    return arr;
}

Json to_json(const CoeffPolynomial& p) {
    Json arr = Json::array();
    for (const auto& [m, c] : p.terms())
        arr.push_back(Json{{"monomial", to_json(m)}, {"coeff", rational_str(c)}});
    return arr;
}

Json to_json(const BivariateSeries& s) {
    Json arr = Json::array();
    for (const auto& [e, c] : s.terms())
        arr.push_back(Json{{"x", e.a}, {"y", e.b}, {"value", to_json(c)}});
    return Json{{"order", s.order_bound()}, {"terms", arr}};
}

Json to_json(const Grading& g) {
    return Json{{"horizontal", g.horiz}, {"vertical", g.vert}};
}

Json to_json(const std::vector<Grading>& gs, const WeightConfig& cfg) {
    Json arr = Json::array();
    for (const Grading& g : gs) {
        Json j = to_json(g);
        j["weight"] = to_json(weight(g, cfg));
        arr.push_back(std::move(j));
    }
    return arr;
}

Json to_json(const WallFunction& f) {
    Json arr = Json::array();
    for (const auto& [k, c] : f.coeffs) arr.push_back(Json{{"k", k}, {"value", to_json(c)}});
    return arr;
}

Json to_json(const Wall& w) {
    return Json{{"direction", Json::array({w.dir.a, w.dir.b})},
                {"kind", w.kind == WallKind::Line ? "line" : "ray"},
                {"coefficients", to_json(w.f)}};
}

Json to_json(const ScatteringDiagram& d) {
    ScatteringDiagram sorted = d;
    sorted.sort_canonical();
    Json arr = Json::array();
    for (const auto& w : sorted.walls) arr.push_back(to_json(w));
    return Json{{"order", d.order}, {"walls", arr}};
}

Json to_json(const PointedLaurent& p) {
    Json arr = Json::array();
    for (const auto& [e, c] : p.terms)
        arr.push_back(Json{{"x1", e.first}, {"x2", e.second}, {"value", to_json(c)}});
    return arr;
}

Json to_json(const BrokenLine& bl) {
    Json segs = Json::array();
    for (const auto& s : bl.segments)
        segs.push_back(Json{{"exponent", Json::array({s.exponent.a, s.exponent.b})},
                            {"coeff", to_json(s.coeff)}});
    Json bends = Json::array();
    for (const auto& b : bl.bends)
        bends.push_back(Json{{"wall", Json::array({b.wall_dir.a, b.wall_dir.b})},
                             {"multiplicity", b.multiplicity},
                             {"point", Json::array({rational_str(b.point.x), rational_str(b.point.y)})}});
    return Json{{"segments", segs},
                {"bends", bends},
                {"endpoint", Json::array({rational_str(bl.endpoint.x), rational_str(bl.endpoint.y)})}};
}

Json to_json(const GWTable& t) {
    Json rows = Json::array();
    for (const auto& [k, v] : t.rows) rows.push_back(Json{{"k", k}, {"N", rational_str(v)}});
    return Json{{"l1", t.ell1}, {"l2", t.ell2}, {"direction", Json::array({t.a, t.b})},
                {"order", t.order}, {"rows", rows}};
}

std::string gw_csv(const GWTable& t) {
    std::ostringstream os;
    os << "k,N\n";
    for (const auto& [k, v] : t.rows) os << k << "," << rational_str(v) << "\n";
    return os.str();
}

}  // namespace tvx
