#include "tvx/dyck.hpp"

namespace tvx {

DyckPath::DyckPath(int m, int n) : m_(m), n_(n) {
    if (m < 0 || n < 0) throw std::invalid_argument("DyckPath: negative dimensions");
    vertices_.reserve(m + n + 1);
    edges_.reserve(m + n);
    horiz_pos_.resize(m);
    vert_pos_.resize(n);
    int x = 0, y = 0, hl = 1, vl = 1;
    vertices_.emplace_back(0, 0);
    auto north = [&] {
        DyckEdge e{false, vl, int(edges_.size()), int(vertices_.size())};
        vert_pos_[vl - 1] = e.pos;
        ++vl, ++y;
        edges_.push_back(e);
        vertices_.emplace_back(x, y);
    };
    auto east = [&] {
        DyckEdge e{true, hl, int(edges_.size()), int(vertices_.size()) - 1};
        horiz_pos_[hl - 1] = e.pos;
        ++hl, ++x;
        edges_.push_back(e);
        vertices_.emplace_back(x, y);
    };
    if (m == 0) {
        while (y < n) north();
    } else {
        for (int i = 0; i < m; ++i) {
            int h = int((int64_t(i) * n) / m);
            while (y < h) north();
            east();
        }
        while (y < n) north();
    }
}

const DyckEdge& DyckPath::horizontal(int label) const {
    if (label < 1 || label > m_) throw std::out_of_range("DyckPath: horizontal label");
    return edges_[horiz_pos_[label - 1]];
}

const DyckEdge& DyckPath::vertical(int label) const {
    if (label < 1 || label > n_) throw std::out_of_range("DyckPath: vertical label");
    return edges_[vert_pos_[label - 1]];
}

std::vector<DyckEdge> DyckPath::cyclic_subpath(const DyckEdge& e, const DyckEdge& f) const {
    int len = size();
    if (e.pos < 0 || e.pos >= len || f.pos < 0 || f.pos >= len)
        throw std::out_of_range("cyclic_subpath: edge not on path");
    // anchors are vertex indices; edge at position p spans vertices p..p+1,
    // so the walk from vertex a covers edge positions a, a+1, ... mod (m+n)
    int a = e.anchor % len, b = f.anchor % len;
    std::vector<DyckEdge> out;
    for (int p = a; p != b; p = (p + 1) % len) out.push_back(edges_[p]);
    return out;
}

std::string DyckPath::word() const {
    std::string w;
    for (const auto& e : edges_) w += e.horizontal ? 'E' : 'N';
    return w;
}

}  // namespace tvx
