#include "svg.hpp"

#include <cmath>
#include <cstdio>
#include <ostream>
#include <vector>

namespace qcd::cli {

namespace {

std::string fmt(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.5f", v);
    return buf;
}

void polyline(std::ostream& out, const std::vector<complex>& pts,
              const char* stroke) {
    out << "<polyline fill=\"none\" stroke=\"" << stroke
        << "\" stroke-width=\"0.004\" points=\"";
    for (const complex& p : pts)
        out << fmt(p.real()) << ',' << fmt(-p.imag()) << ' ';
    out << "\"/>\n";
}

} // namespace

void write_polar_grid_svg(std::ostream& out,
                          const std::function<complex(complex)>& map,
                          int circles, int rays, int samples_per_curve) {
    out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
           "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" "
           "viewBox=\"-1.1 -1.1 2.2 2.2\" width=\"640\" height=\"640\">\n";

    // unit circle reference
    out << "<circle cx=\"0\" cy=\"0\" r=\"1\" fill=\"none\" stroke=\"#202020\""
           " stroke-width=\"0.006\"/>\n";

    std::vector<complex> pts;
    pts.reserve(samples_per_curve + 1);
    for (int c = 1; c <= circles; ++c) {
        const double r = static_cast<double>(c) / (circles + 1);
        pts.clear();
        for (int j = 0; j <= samples_per_curve; ++j)
            pts.push_back(map(std::polar(r, 2.0 * pi * j / samples_per_curve)));
        polyline(out, pts, "#1f6fb4");
    }
    for (int s = 0; s < rays; ++s) {
        const double th = 2.0 * pi * s / rays;
        pts.clear();
        for (int j = 0; j <= samples_per_curve; ++j)
            pts.push_back(
                map(std::polar(0.999 * j / samples_per_curve, th)));
        polyline(out, pts, "#b46f1f");
    }
    out << "</svg>\n";
}

} // namespace qcd::cli
