#ifndef QCD_SVG_HPP
#define QCD_SVG_HPP

#include <functional>
#include <iosfwd>

#include "qcd/types.hpp"

namespace qcd::cli {

// Draw the image of a polar coordinate grid of the unit disc under the
// given map as a static SVG 1.1 figure.
void write_polar_grid_svg(std::ostream& out,
                          const std::function<complex(complex)>& map,
                          int circles = 10, int rays = 16,
                          int samples_per_curve = 720);

} // namespace qcd::cli

#endif
