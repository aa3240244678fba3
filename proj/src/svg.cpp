#include "icosa/svg.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <sstream>

#include "icosa/conformal.hpp"
#include "icosa/errors.hpp"

namespace icosa {

namespace {

std::string num(double v) {
    std::ostringstream os;
    os << std::fixed << std::setprecision(5) << v;
    std::string s = os.str();
    if (s == "-0.00000") s = "0.00000";
    return s;
}

std::string points_attr(const std::vector<Complex>& pts) {
    std::string s;
    for (Complex p : pts) s += num(p.real()) + "," + num(p.imag()) + " ";
    if (!s.empty()) s.pop_back();
    return s;
}

std::vector<Complex> star_outline(const StarPolygon& K, Complex shift = {}) {
    std::vector<Complex> pts;
    for (Complex v : K.vertices) pts.push_back(v + shift);
    return pts;
}

} // namespace

SvgDocument::SvgDocument(double xmin, double ymin, double xmax, double ymax, int pixels)
    : xmin_(xmin), ymin_(ymin), xmax_(xmax), ymax_(ymax), pixels_(pixels) {}

void SvgDocument::polygon(const std::vector<Complex>& pts, const std::string& fill, const std::string& stroke,
                          double width) {
    body_.push_back("<polygon points=\"" + points_attr(pts) + "\" style=\"fill:" + fill + ";stroke:" + stroke +
                    ";stroke-width:" + num(width) + "\"/>");
}

void SvgDocument::polyline(const std::vector<Complex>& pts, const std::string& stroke, double width) {
    body_.push_back("<polyline points=\"" + points_attr(pts) + "\" style=\"fill:none;stroke:" + stroke +
                    ";stroke-width:" + num(width) + "\"/>");
}

void SvgDocument::circle(Complex c, double r, const std::string& fill) {
    body_.push_back("<circle cx=\"" + num(c.real()) + "\" cy=\"" + num(c.imag()) + "\" r=\"" + num(r) +
                    "\" style=\"fill:" + fill + "\"/>");
}

void SvgDocument::text(Complex at, const std::string& s, double size) {
    // Undo the y flip so glyphs read upright.
    body_.push_back("<text x=\"" + num(at.real()) + "\" y=\"" + num(-at.imag()) + "\" transform=\"scale(1,-1)\" style=\"font-family:sans-serif;font-size:" +
                    num(size) + "px\">" + s + "</text>");
}

std::string SvgDocument::str() const {
    const double w = xmax_ - xmin_, h = ymax_ - ymin_;
    const int px = pixels_, py = static_cast<int>(std::lround(pixels_ * h / w));
    std::ostringstream os;
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << px << "\" height=\"" << py << "\" viewBox=\""
       << num(xmin_) << " " << num(-ymax_) << " " << num(w) << " " << num(h) << "\">\n";
    os << "<rect x=\"" << num(xmin_) << "\" y=\"" << num(-ymax_) << "\" width=\"" << num(w) << "\" height=\"" << num(h)
       << "\" style=\"fill:white\"/>\n";
    os << "<g transform=\"scale(1,-1)\">\n";
    for (const auto& line : body_) os << line << "\n";
    os << "</g>\n</svg>\n";
    return os.str();
}

void SvgDocument::save(const std::string& path) const {
    std::ofstream out(path);
    if (!out) throw InvalidArgument("cannot write " + path);
    out << str();
}

std::string svg_star(const StarPolygon& K) {
    const double r = outer_radius() * 1.1;
    SvgDocument doc(-r, -r, r, r);
    doc.polygon(star_outline(K), "#dde8f5", "#224488", 0.01);
    for (const auto& line : K.edge_lines) {
        const Complex p = K.edges[line.edges[0]].p, q = K.edges[line.edges[1]].q;
        doc.polyline({p, q}, "#bb3333", 0.004);
    }
    const TriangleT T = build_triangle();
    doc.polygon({T.O, T.A, T.B}, "#f5e6c8", "#886622", 0.006);
    for (int i = 0; i < 10; ++i) doc.circle(K.vertices[i], 0.02, i % 2 == 0 ? "#224488" : "#bb3333");
    doc.circle(K.center, 0.02, "black");
    return doc.str();
}

std::string svg_map_grid(int n) {
    if (n < 1 || n > 200) throw InvalidArgument("grid size must lie in 1..200");
    const TriangleT T = build_triangle();
    SvgDocument doc(-0.1, -0.1, 1.45, 1.05);
    doc.polygon({T.O, T.A, T.B}, "#f8f8f8", "#222222", 0.006);
    const int samples = 60;
    // xi = x + i y over x in [-3, 3], y in (0, 3].
    for (int i = 0; i <= n; ++i) {
        const double x = -3.0 + 6.0 * i / n;
        std::vector<Complex> line;
        for (int s = 1; s <= samples; ++s) {
            const Complex xi{x, 3.0 * s / samples};
            line.push_back(F_T(xi));
        }
        doc.polyline(line, "#3366aa", 0.003);
    }
    for (int j = 1; j <= n; ++j) {
        const double y = 3.0 * j / n;
        std::vector<Complex> line;
        for (int s = 0; s <= samples; ++s) line.push_back(F_T({-3.0 + 6.0 * s / samples, y}));
        doc.polyline(line, "#aa3366", 0.003);
    }
    return doc.str();
}

std::string svg_billiard(const Trajectory& t, const StarPolygon& K) {
    const double r = outer_radius() * 1.1;
    SvgDocument doc(-r, -r, r, r);
    doc.polygon(star_outline(K), "#eef3ea", "#335522", 0.01);
    std::vector<Complex> path;
    for (const auto& s : t.segments) {
        if (path.empty()) path.push_back(s.start);
        path.push_back(s.end);
    }
    if (!path.empty()) {
        doc.polyline(path, "#cc5500", 0.006);
        doc.circle(path.front(), 0.025, "#cc5500");
    }
    for (const auto& e : t.events)
        doc.circle(e.point, 0.012, e.kind == TrajectoryEvent::Kind::Reverse ? "#aa0000" : "#333333");
    return doc.str();
}

std::string svg_tiling(const TilingPatch& patch) {
    double extent = outer_radius();
    for (const auto& c : patch.centers) extent = std::max(extent, std::abs(c.value()) + outer_radius());
    extent *= 1.05;
    SvgDocument doc(-extent, -extent, extent, extent, 800);
    const StarPolygon& K = star();
    for (const auto& c : patch.centers)
        doc.polygon(star_outline(K, c.value()), "rgba(70,110,180,0.08)", "#335599", 0.004);
    for (const auto& v : patch.vpoints) doc.circle(v.value(), 0.012, "#aa2222");
    return doc.str();
}

} // namespace icosa
