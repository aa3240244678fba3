#pragma once

#include <string>
#include <vector>

#include "icosa/billiards.hpp"
#include "icosa/geometry.hpp"
#include "icosa/tiling.hpp"

namespace icosa {

// Minimal self-contained SVG writer in plane coordinates, y up.
class SvgDocument {
public:
    SvgDocument(double xmin, double ymin, double xmax, double ymax, int pixels = 600);

    void polygon(const std::vector<Complex>& pts, const std::string& fill, const std::string& stroke, double width);
    void polyline(const std::vector<Complex>& pts, const std::string& stroke, double width);
    void circle(Complex c, double r, const std::string& fill);
    void text(Complex at, const std::string& s, double size);

    std::string str() const;
    void save(const std::string& path) const;

private:
    double xmin_, ymin_, xmax_, ymax_;
    int pixels_;
    std::vector<std::string> body_;
};

std::string svg_star(const StarPolygon& K = star());
// Image under F_T of the grid lines Re xi = const and Im xi = const, n per family.
std::string svg_map_grid(int n);
std::string svg_billiard(const Trajectory& t, const StarPolygon& K = star());
std::string svg_tiling(const TilingPatch& patch);

} // namespace icosa
