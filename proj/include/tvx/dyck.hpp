#ifndef TVX_DYCK_HPP
#define TVX_DYCK_HPP

#include <string>
#include <vector>

#include <cstdint>
#include <stdexcept>

namespace tvx {

// Edge of a maximal Dyck path. The anchor is the left endpoint for a
// horizontal edge and the top endpoint for a vertical edge, stored as the
// index of that vertex along the path.
struct DyckEdge {
    bool horizontal = true;
    int label = 1;   // u_label / v_label, 1-based within the orientation
    int pos = 0;     // position along the path, 0-based
    int anchor = 0;  // vertex index in [0, m+n]
};

// The lattice path from (0,0) to (m,n) that stays weakly below the main
// diagonal and is closest to it: after i east steps the height is
// floor(i*n/m). Horizontal edges are labeled u_1..u_m left to right,
// vertical edges v_1..v_n bottom to top.
class DyckPath {
public:
    DyckPath(int m, int n);

    int m() const { return m_; }
    int n() const { return n_; }
    int size() const { return m_ + n_; }
    const std::vector<DyckEdge>& edges() const { return edges_; }
    const DyckEdge& edge_at(int pos) const { return edges_.at(pos); }
    const DyckEdge& horizontal(int label) const;  // u_label
    const DyckEdge& vertical(int label) const;    // v_label
    std::pair<int, int> vertex(int idx) const { return vertices_.at(idx); }

    // Edges fully traversed walking forward from the anchor of e to the
    // anchor of f, wrapping from (m,n) to (0,0). Includes e iff e is
    // horizontal and f iff f is vertical; empty when the anchors coincide.
    std::vector<DyckEdge> cyclic_subpath(const DyckEdge& e, const DyckEdge& f) const;

    std::string word() const;  // "EEN..." step word

private:
    int m_, n_;
    std::vector<DyckEdge> edges_;
    std::vector<std::pair<int, int>> vertices_;
    std::vector<int> horiz_pos_, vert_pos_;  // label-1 -> position
};

}  // namespace tvx

#endif
