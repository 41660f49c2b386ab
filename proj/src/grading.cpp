#include "tvx/grading.hpp"

#include <algorithm>
#include <numeric>

namespace tvx {

namespace {

long ceil_div(long p, long q) {  // q > 0
    long d = p / q;
    if (d * q < p) ++d;
    return d;
}

uint64_t full_mask(int bits) { return bits >= 64 ? ~0ull : (1ull << bits) - 1; }

}  // namespace

long Grading::horiz_total() const { return std::accumulate(horiz.begin(), horiz.end(), 0L); }
long Grading::vert_total() const { return std::accumulate(vert.begin(), vert.end(), 0L); }

SideWeights SideWeights::symbolic(int side, int ell) {
    SideWeights w{side, {}, false};
    for (int j = 1; j <= ell; ++j) w.coeffs.emplace_back(j, pvar(side, j));
    return w;
}

SideWeights SideWeights::from_coefficients(int side, const std::vector<CoeffPolynomial>& by_power) {
    if (by_power.empty() || !by_power[0].is_one())
        throw std::invalid_argument("SideWeights: constant term must be 1");
    SideWeights w{side, {}, false};
    for (size_t j = 1; j < by_power.size(); ++j)
        if (!by_power[j].is_zero()) w.coeffs.emplace_back(int(j), by_power[j]);
    return w;
}

int SideWeights::max_value() const { return coeffs.empty() ? 0 : coeffs.back().first; }

const CoeffPolynomial* SideWeights::coeff(int j) const {
    for (const auto& [v, c] : coeffs)
        if (v == j) return &c;
    return nullptr;
}

CoeffPolynomial SideWeights::coeff_or_symbol(int j) const {
    if (j == 0) return CoeffPolynomial::one();
    if (const CoeffPolynomial* c = coeff(j)) return *c;
    if (open_ended && j > max_value()) return pvar(side, j);
    return CoeffPolynomial::zero();
}

std::vector<int> SideWeights::allowed_values(long cap) const {
    std::vector<int> vals;
    for (const auto& [j, c] : coeffs)
        if (j <= cap) vals.push_back(j);
    if (open_ended)
        for (long j = max_value() + 1; j <= cap; ++j) vals.push_back(int(j));
    std::sort(vals.begin(), vals.end());
    return vals;
}

WeightConfig WeightConfig::symbolic(int ell1, int ell2) {
    return {SideWeights::symbolic(1, ell1), SideWeights::symbolic(2, ell2)};
}

void TightParams::validate() const {
    if (beta1 <= 0 || beta2 <= 0) throw std::invalid_argument("TightParams: totals must be positive");
    if (eps != 1 && eps != -1) throw std::invalid_argument("TightParams: eps must be +-1");
    long g = std::gcd(beta1, beta2);
    if (m < beta1 || n < beta2 || beta1 * n - beta2 * m != eps * g)
        throw std::invalid_argument("TightParams: (m,n) violates the domain constraints");
}

std::pair<long, long> m_epsilon(long beta1, long beta2, int eps) {
    return valid_domains(beta1, beta2, eps, 1)[0];
}

std::vector<std::pair<long, long>> valid_domains(long beta1, long beta2, int eps, int count) {
    if (beta1 <= 0 || beta2 <= 0) throw std::invalid_argument("m_epsilon: totals must be positive");
    if (eps != 1 && eps != -1) throw std::invalid_argument("m_epsilon: eps must be +-1");
    long g = std::gcd(beta1, beta2);
    long a = beta1 / g, b = beta2 / g;
    // solve a*n - b*m = eps; solutions shift along (m,n) += (a,b)
    long x0 = 0, y0 = 0;
    {
        long old_r = a, r = b, old_s = 1, s = 0, old_t = 0, t = 1;
        while (r != 0) {
            long q = old_r / r;
            std::tie(old_r, r) = std::pair(r, old_r - q * r);
            std::tie(old_s, s) = std::pair(s, old_s - q * s);
            std::tie(old_t, t) = std::pair(t, old_t - q * t);
        }
        // old_r = gcd(a,b) = 1 = a*old_s + b*old_t
        x0 = old_s, y0 = old_t;
    }
    long n0 = eps * x0, m0 = -eps * y0;  // a*n0 - b*m0 = eps
    long t = std::max(ceil_div(beta1 - m0, a), ceil_div(beta2 - n0, b));
    std::vector<std::pair<long, long>> out;
    for (int i = 0; i < count; ++i) out.emplace_back(m0 + (t + i) * a, n0 + (t + i) * b);
    return out;
}

uint64_t local_shadow_vertical(const DyckPath& path, const std::vector<int>& vert, int vlabel) {
    if (vert.at(vlabel - 1) <= 0) throw std::invalid_argument("local_shadow: edge value must be positive");
    int len = path.size();
    int pos = path.vertical(vlabel).pos;
    long h = 0, wsum = 0;
    uint64_t mask = 0;
    for (int s = 0; s < len; ++s) {
        const DyckEdge& e = path.edge_at(((pos - s) % len + len) % len);
        if (!e.horizontal) {
            wsum += vert[e.label - 1];
        } else {
            ++h;
            mask |= 1ull << (e.label - 1);
            if (h == wsum) return mask;
        }
    }
    return full_mask(path.m());
}

uint64_t local_shadow_horizontal(const DyckPath& path, const std::vector<int>& horiz, int hlabel) {
    if (horiz.at(hlabel - 1) <= 0) throw std::invalid_argument("local_shadow: edge value must be positive");
    int len = path.size();
    int pos = path.horizontal(hlabel).pos;
    long v = 0, hsum = 0;
    uint64_t mask = 0;
    for (int s = 0; s < len; ++s) {
        const DyckEdge& e = path.edge_at((pos + s) % len);
        if (e.horizontal) {
            hsum += horiz[e.label - 1];
        } else {
            ++v;
            mask |= 1ull << (e.label - 1);
            if (v == hsum) return mask;
        }
    }
    return full_mask(path.n());
}

uint64_t shadow(const DyckPath& path, const Grading& g, int side) {
    uint64_t mask = 0;
    if (side == 2) {
        for (int v = 1; v <= path.n(); ++v)
            if (g.vert[v - 1] > 0) mask |= local_shadow_vertical(path, g.vert, v);
    } else {
        for (int u = 1; u <= path.m(); ++u)
            if (g.horiz[u - 1] > 0) mask |= local_shadow_horizontal(path, g.horiz, u);
    }
    return mask;
}

bool is_compatible(const DyckPath& path, const Grading& g) {
    // pair (u,v) of positive edges fails exactly when each lies in the
    // other's local shadow
    for (int v = 1; v <= path.n(); ++v) {
        if (g.vert[v - 1] <= 0) continue;
        uint64_t sh2 = local_shadow_vertical(path, g.vert, v);
        for (int u = 1; u <= path.m(); ++u) {
            if (g.horiz[u - 1] <= 0 || !(sh2 >> (u - 1) & 1)) continue;
            uint64_t sh1 = local_shadow_horizontal(path, g.horiz, u);
            if (sh1 >> (v - 1) & 1) return false;
        }
    }
    return true;
}

bool is_tight(const DyckPath& path, const Grading& g, const TightParams& params) {
    if (params.beta1 <= 0 || params.beta2 <= 0)
        throw std::invalid_argument("is_tight: totals must be positive");
    if (params.eps != 1 && params.eps != -1) throw std::invalid_argument("is_tight: eps must be +-1");
    if (path.m() != params.m || path.n() != params.n)
        throw std::invalid_argument("is_tight: grading lives on the wrong path");
    // a grading on a domain violating the constraints is simply not tight
    long gc = std::gcd(params.beta1, params.beta2);
    if (params.m < params.beta1 || params.n < params.beta2 ||
        params.beta1 * params.n - params.beta2 * params.m != params.eps * gc)
        return false;
    if (g.vert_total() != params.beta1 || g.horiz_total() != params.beta2) return false;
    if (!is_compatible(path, g)) return false;
    if (params.eps == 1) {
        uint64_t s1 = 0;
        for (int u = 1; u <= path.m(); ++u)
            if (g.horiz[u - 1] > 0) s1 |= 1ull << (u - 1);
        return (s1 & ~shadow(path, g, 2)) == 0;
    }
    uint64_t s2 = 0;
    for (int v = 1; v <= path.n(); ++v)
        if (g.vert[v - 1] > 0) s2 |= 1ull << (v - 1);
    return (s2 & ~shadow(path, g, 1)) == 0;
}

CoeffPolynomial weight(const Grading& g, const WeightConfig& cfg) {
    CoeffPolynomial w = CoeffPolynomial::one();
    for (int x : g.horiz)
        if (x > 0) w *= cfg.side2.coeff_or_symbol(x);
    for (int x : g.vert)
        if (x > 0) w *= cfg.side1.coeff_or_symbol(x);
    return w;
}

namespace {

// compositions of `total` (or arbitrary totals when unset) over `slots`
// positions with entries 0 or in `values` (sorted ascending)
void for_each_composition(int slots, std::optional<long> total, const std::vector<int>& values,
                          std::vector<int>& buf, long acc, const std::function<void(const std::vector<int>&)>& fn) {
    if (int(buf.size()) == slots) {
        if (!total || acc == *total) fn(buf);
        return;
    }
    long maxv = values.empty() ? 0 : values.back();
    long left = slots - long(buf.size());
    if (total && acc + maxv * left < *total) return;  // cannot reach the target
    buf.push_back(0);
    for_each_composition(slots, total, values, buf, acc, fn);
    buf.pop_back();
    for (int v : values) {
        if (total && acc + v > *total) break;
        buf.push_back(v);
        for_each_composition(slots, total, values, buf, acc + v, fn);
        buf.pop_back();
    }
}

std::vector<std::vector<int>> compositions(int slots, std::optional<long> total, const std::vector<int>& values) {
    std::vector<std::vector<int>> out;
    std::vector<int> buf;
    for_each_composition(slots, total, values, buf, 0, [&](const std::vector<int>& c) { out.push_back(c); });
    return out;
}

struct VertData {
    std::vector<int> vals;
    uint64_t s2 = 0;        // positive vertical labels
    uint64_t sh2_union = 0; // union of local shadows
    std::vector<uint64_t> conflict;  // per horizontal label-1: verticals whose shadow covers it
    CoeffPolynomial wt;
    // vertical weight not covered by sh(S1); zero exactly on tight gradings
    long weight_outside(uint64_t sh1_union) const {
        long t = 0;
        for (size_t i = 0; i < vals.size(); ++i)
            if (vals[i] > 0 && !(sh1_union >> i & 1)) t += vals[i];
        return t;
    }
};

struct HorizData {
    std::vector<int> vals;
    uint64_t s1 = 0;
    uint64_t sh1_union = 0;
    std::vector<uint64_t> sh1;  // per horizontal label-1 (only meaningful on s1 bits)
    CoeffPolynomial wt;
};

VertData make_vert_data(const DyckPath& path, const std::vector<int>& vals, const SideWeights& sw) {
    VertData d;
    d.vals = vals;
    d.conflict.assign(path.m(), 0);
    d.wt = CoeffPolynomial::one();
    for (int v = 1; v <= path.n(); ++v) {
        if (vals[v - 1] <= 0) continue;
        d.s2 |= 1ull << (v - 1);
        uint64_t sh = local_shadow_vertical(path, vals, v);
        d.sh2_union |= sh;
        for (int i = 0; i < path.m(); ++i)
            if (sh >> i & 1) d.conflict[i] |= 1ull << (v - 1);
        d.wt *= sw.coeff_or_symbol(vals[v - 1]);
    }
    return d;
}

HorizData make_horiz_data(const DyckPath& path, const std::vector<int>& vals, const SideWeights& sw) {
    HorizData d;
    d.vals = vals;
    d.sh1.assign(path.m(), 0);
    d.wt = CoeffPolynomial::one();
    for (int u = 1; u <= path.m(); ++u) {
        if (vals[u - 1] <= 0) continue;
        d.s1 |= 1ull << (u - 1);
        d.sh1[u - 1] = local_shadow_horizontal(path, vals, u);
        d.sh1_union |= d.sh1[u - 1];
        d.wt *= sw.coeff_or_symbol(vals[u - 1]);
    }
    return d;
}

bool pair_compatible(const HorizData& h, const VertData& v) {
    uint64_t s1 = h.s1;
    while (s1) {
        int i = __builtin_ctzll(s1);
        s1 &= s1 - 1;
        if (h.sh1[i] & v.conflict[i]) return false;
    }
    return true;
}

// shared driver: emits every (vert, horiz) composition pair that is
// compatible and passes the optional tightness/t filters
void scan_pairs(const DyckPath& path, const WeightConfig& cfg, std::optional<std::pair<long, long>> totals,
                std::optional<int> eps, std::optional<long> t_filter,
                const std::function<void(const HorizData&, const VertData&)>& emit) {
    if (path.m() > 63 || path.n() > 63)
        throw std::invalid_argument("grading enumeration: path too large (>63 edges per side)");
    std::optional<long> vt, ht;
    if (totals) vt = totals->first, ht = totals->second;
    long vcap = vt ? *vt : long(cfg.side1.max_value());
    long hcap = ht ? *ht : long(cfg.side2.max_value());
    if (!vt && cfg.side1.open_ended)
        throw std::invalid_argument("grading enumeration: unbounded request (open-ended values, no total)");
    if (!ht && cfg.side2.open_ended)
        throw std::invalid_argument("grading enumeration: unbounded request (open-ended values, no total)");

    auto vcomps = compositions(path.n(), vt, cfg.side1.allowed_values(vcap));
    if (vcomps.empty()) return;
    auto hcomps = compositions(path.m(), ht, cfg.side2.allowed_values(hcap));
    if (hcomps.empty()) return;

    std::vector<VertData> vdata;
    vdata.reserve(vcomps.size());
    for (const auto& c : vcomps) vdata.push_back(make_vert_data(path, c, cfg.side1));
    std::vector<HorizData> hdata;
    hdata.reserve(hcomps.size());
    for (const auto& c : hcomps) hdata.push_back(make_horiz_data(path, c, cfg.side2));

    for (const auto& v : vdata) {
        for (const auto& h : hdata) {
            if (!pair_compatible(h, v)) continue;
            if (eps) {
                if (*eps == 1 && (h.s1 & ~v.sh2_union)) continue;
                if (*eps == -1 && (v.s2 & ~h.sh1_union)) continue;
            }
            if (t_filter && v.weight_outside(h.sh1_union) != *t_filter) continue;
            emit(h, v);
        }
    }
}

}  // namespace

std::vector<Grading> enumerate_tight_gradings(const TightParams& params, const WeightConfig& cfg) {
    params.validate();
    DyckPath path{int(params.m), int(params.n)};
    std::vector<Grading> out;
    scan_pairs(path, cfg, std::pair{params.beta1, params.beta2}, params.eps, {},
               [&](const HorizData& h, const VertData& v) { out.push_back({h.vals, v.vals}); });
    std::sort(out.begin(), out.end(), [](const Grading& a, const Grading& b) {
        return std::tie(a.vert, a.horiz) < std::tie(b.vert, b.horiz);
    });
    return out;
}

CoeffPolynomial tight_weight_sum(const TightParams& params, const WeightConfig& cfg) {
    params.validate();
    DyckPath path{int(params.m), int(params.n)};
    CoeffPolynomial sum;
    scan_pairs(path, cfg, std::pair{params.beta1, params.beta2}, params.eps, {},
               [&](const HorizData& h, const VertData& v) { sum += h.wt * v.wt; });
    return sum;
}

std::vector<Grading> enumerate_compatible_gradings(long m, long n, const WeightConfig& cfg,
                                                   std::optional<std::pair<long, long>> totals,
                                                   std::optional<long> t_filter) {
    DyckPath path{int(m), int(n)};
    std::vector<Grading> out;
    scan_pairs(path, cfg, totals, {}, t_filter,
               [&](const HorizData& h, const VertData& v) { out.push_back({h.vals, v.vals}); });
    std::sort(out.begin(), out.end(), [](const Grading& a, const Grading& b) {
        return std::tie(a.vert, a.horiz) < std::tie(b.vert, b.horiz);
    });
    return out;
}

CoeffPolynomial compatible_weight_sum(long m, long n, const WeightConfig& cfg,
                                      std::pair<long, long> totals, std::optional<long> t_filter) {
    DyckPath path{int(m), int(n)};
    CoeffPolynomial sum;
    scan_pairs(path, cfg, totals, {}, t_filter,
               [&](const HorizData& h, const VertData& v) { sum += h.wt * v.wt; });
    return sum;
}

std::map<std::pair<long, long>, CoeffPolynomial> compatible_weight_table(long m, long n,
                                                                         const WeightConfig& cfg) {
    DyckPath path{int(m), int(n)};
    std::map<std::pair<long, long>, CoeffPolynomial> table;
    scan_pairs(path, cfg, {}, {}, {}, [&](const HorizData& h, const VertData& v) {
        table[{v.vals.empty() ? 0 : std::accumulate(v.vals.begin(), v.vals.end(), 0L),
               h.vals.empty() ? 0 : std::accumulate(h.vals.begin(), h.vals.end(), 0L)}] += h.wt * v.wt;
    });
    return table;
}

}  // namespace tvx
