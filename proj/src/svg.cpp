#include "tvx/svg.hpp"

#include <sstream>

namespace tvx {

namespace {

constexpr double kCell = 40.0;
constexpr double kMargin = 20.0;
constexpr double kInset = 0.2;

struct Canvas {
    std::ostringstream os;
    double h;

    Canvas(double width, double height) : h(height) {
        os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\"" << height
           << "\">\n";
    }
    double X(double x) const { return kMargin + x * kCell; }
    double Y(double y) const { return h - kMargin - y * kCell; }

    void line(double x1, double y1, double x2, double y2, const std::string& stroke, double w) {
        os << "<line x1=\"" << X(x1) << "\" y1=\"" << Y(y1) << "\" x2=\"" << X(x2) << "\" y2=\"" << Y(y2)
           << "\" stroke=\"" << stroke << "\" stroke-width=\"" << w << "\"/>\n";
    }
    void rect(double x, double y, double w, double hh, const std::string& fill) {
        os << "<rect x=\"" << X(x) << "\" y=\"" << Y(y + hh) << "\" width=\"" << w * kCell << "\" height=\""
           << hh * kCell << "\" fill=\"" << fill << "\"/>\n";
    }
    std::string finish() {
        os << "</svg>\n";
        return os.str();
    }
};

}  // namespace

std::string render_grading_svg(const DyckPath& path, const Grading& g) {
    int m = path.m(), n = path.n();
    Canvas c(2 * kMargin + std::max(m, 1) * kCell, 2 * kMargin + std::max(n, 1) * kCell);
    for (int i = 0; i <= m; ++i) c.line(i, 0, i, n, "lightgray", 1);
    for (int j = 0; j <= n; ++j) c.line(0, j, m, j, "lightgray", 1);

    // unit cells covered by the shadow tiles
    std::vector<std::vector<int>> blue(m, std::vector<int>(n, 0)), red(m, std::vector<int>(n, 0));
    for (int u = 1; u <= m; ++u) {
        if (g.horiz[u - 1] <= 0) continue;
        uint64_t sh = local_shadow_horizontal(path, g.horiz, u);
        auto [ux, uy] = path.vertex(path.horizontal(u).anchor);
        (void)uy;
        for (int v = 1; v <= n; ++v)
            if (sh >> (v - 1) & 1) blue[ux][v - 1] = 1;
    }
    for (int v = 1; v <= n; ++v) {
        if (g.vert[v - 1] <= 0) continue;
        uint64_t sh = local_shadow_vertical(path, g.vert, v);
        for (int u = 1; u <= m; ++u)
            if (sh >> (u - 1) & 1) red[u - 1][v - 1] = 1;
    }
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < n; ++j) {
            if (blue[i][j])
                c.rect(i + kInset, j + kInset, 1 - 2 * kInset, 1 - 2 * kInset, "#4169e1");
            if (red[i][j])
                c.rect(i + kInset, j + kInset, 1 - 2 * kInset, 1 - 2 * kInset,
                       blue[i][j] ? "#000000" : "#d0342c");
        }

    // the path itself
    for (int p = 0; p < path.size(); ++p) {
        auto [x1, y1] = path.vertex(p);
        auto [x2, y2] = path.vertex(p + 1);
        c.line(x1, y1, x2, y2, "orange", 3);
    }
    // edge values
    for (int u = 1; u <= m; ++u) {
        if (g.horiz[u - 1] == 0) continue;
        auto [x, y] = path.vertex(path.horizontal(u).anchor);
        c.os << "<text x=\"" << c.X(x + 0.4) << "\" y=\"" << c.Y(y + 0.15) << "\" font-size=\"12\">"
             << g.horiz[u - 1] << "</text>\n";
    }
    for (int v = 1; v <= n; ++v) {
        if (g.vert[v - 1] == 0) continue;
        auto [x, y] = path.vertex(path.vertical(v).anchor);
        c.os << "<text x=\"" << c.X(x + 0.1) << "\" y=\"" << c.Y(y - 0.6) << "\" font-size=\"12\">"
             << g.vert[v - 1] << "</text>\n";
    }
    return c.finish();
}

std::string render_diagram_svg(const ScatteringDiagram& d) {
    double R = 5.0;
    Canvas c(2 * kMargin + 2 * R * kCell, 2 * kMargin + 2 * R * kCell);
    auto draw = [&](double ax, double ay, double bx, double by, const std::string& col, double w) {
        c.line(R + ax, R + ay, R + bx, R + by, col, w);
    };
    ScatteringDiagram sorted = d;
    sorted.sort_canonical();
    for (const auto& w : sorted.walls) {
        double nx = w.dir.a, ny = w.dir.b;
        double len = std::max(std::abs(nx), std::abs(ny));
        nx = nx / len * R;
        ny = ny / len * R;
        if (w.kind == WallKind::Line)
            draw(-nx, -ny, nx, ny, "black", 1.5);
        else
            draw(0, 0, -nx, -ny, w.f.coeffs.size() > 1 ? "#d0342c" : "#555555", 1.0);
    }
    return c.finish();
}

}  // namespace tvx
