#ifndef RSTAR_SVG_HPP
#define RSTAR_SVG_HPP

#include <string>

#include "rstar/roots.hpp"

namespace rstar {

/// Self-contained scatter plot of a root set in a fixed 800x800 viewport:
/// axes, the unit circle, r guide rays at angles 2*pi*k/r, one marker per
/// distinct root with multiplicities > 1 annotated. Inline styles only, so
/// the file renders without external assets.
std::string render_root_scatter(const ComplexRootSet& set,
                                const std::string& title = "");

}  // namespace rstar

#endif
