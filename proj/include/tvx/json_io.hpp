#ifndef TVX_JSON_IO_HPP
#define TVX_JSON_IO_HPP

#include <json.hpp>

#include "tvx/broken_line.hpp"
#include "tvx/greedy.hpp"
#include "tvx/gw.hpp"

namespace tvx {

using Json = nlohmann::ordered_json;

// integers as decimal strings, other rationals as "num/den"
std::string rational_str(const Rational& r);

Json to_json(const Monomial& m);
Json to_json(const CoeffPolynomial& p);
Json to_json(const BivariateSeries& s);
Json to_json(const Grading& g);
// value vectors together with their weights, in enumeration order
Json to_json(const std::vector<Grading>& gs, const WeightConfig& cfg);
Json to_json(const WallFunction& f);
Json to_json(const Wall& w);
Json to_json(const ScatteringDiagram& d);
Json to_json(const PointedLaurent& p);
Json to_json(const BrokenLine& bl);
Json to_json(const GWTable& t);
std::string gw_csv(const GWTable& t);

}  // namespace tvx

#endif
