#include "rstar/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <sstream>

namespace rstar {

namespace {

constexpr int kSize = 800;
constexpr double kCenter = kSize / 2.0;
constexpr double kPlotRadius = 360.0;

std::string num(double v) {
    char buffer[32];
    std::snprintf(buffer, sizeof buffer, "%.2f", v);
    return buffer;
}

}  // namespace

std::string render_root_scatter(const ComplexRootSet& set,
                                const std::string& title) {
    double max_modulus = 1.0;
    for (const auto& entry : set.roots) {
        max_modulus = std::max(max_modulus, std::abs(entry.value));
    }
    const double scale = kPlotRadius / (1.15 * max_modulus);

    const auto x_of = [&](double re) { return kCenter + scale * re; };
    const auto y_of = [&](double im) { return kCenter - scale * im; };

    std::ostringstream os;
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kSize
       << "\" height=\"" << kSize << "\" viewBox=\"0 0 " << kSize << " "
       << kSize << "\">\n";
    os << "  <rect width=\"" << kSize << "\" height=\"" << kSize
       << "\" fill=\"white\"/>\n";

    // guide rays at the star angles
    for (int k = 0; k < set.star_modulus; ++k) {
        const double angle = 2.0 * std::numbers::pi * k / set.star_modulus;
        const double ex = kCenter + kPlotRadius * std::cos(angle);
        const double ey = kCenter - kPlotRadius * std::sin(angle);
        os << "  <line x1=\"" << num(kCenter) << "\" y1=\"" << num(kCenter)
           << "\" x2=\"" << num(ex) << "\" y2=\"" << num(ey)
           << "\" stroke=\"#dddddd\" stroke-width=\"1\"/>\n";
    }

    // axes
    os << "  <line x1=\"20\" y1=\"" << num(kCenter) << "\" x2=\""
       << kSize - 20 << "\" y2=\"" << num(kCenter)
       << "\" stroke=\"#888888\" stroke-width=\"1\"/>\n";
    os << "  <line x1=\"" << num(kCenter) << "\" y1=\"20\" x2=\""
       << num(kCenter) << "\" y2=\"" << kSize - 20
       << "\" stroke=\"#888888\" stroke-width=\"1\"/>\n";
    os << "  <text x=\"" << kSize - 34 << "\" y=\"" << num(kCenter - 8)
       << "\" font-family=\"sans-serif\" font-size=\"14\" fill=\"#444444\">Re</text>\n";
    os << "  <text x=\"" << num(kCenter + 8) << "\" y=\"34\""
       << " font-family=\"sans-serif\" font-size=\"14\" fill=\"#444444\">Im</text>\n";

    // unit circle
    os << "  <circle cx=\"" << num(kCenter) << "\" cy=\"" << num(kCenter)
       << "\" r=\"" << num(scale)
       << "\" fill=\"none\" stroke=\"#bbbbbb\" stroke-width=\"1\" "
          "stroke-dasharray=\"4 4\"/>\n";

    for (const auto& entry : set.roots) {
        const double cx = x_of(entry.value.real());
        const double cy = y_of(entry.value.imag());
        os << "  <circle cx=\"" << num(cx) << "\" cy=\"" << num(cy)
           << "\" r=\"5\" fill=\"#1f6fb4\" stroke=\"#123a5e\" "
              "stroke-width=\"1\"/>\n";
        if (entry.multiplicity > 1) {
            os << "  <text x=\"" << num(cx + 8) << "\" y=\"" << num(cy - 8)
               << "\" font-family=\"sans-serif\" font-size=\"13\" "
                  "fill=\"#123a5e\">x"
               << entry.multiplicity << "</text>\n";
        }
    }

    if (!title.empty()) {
        os << "  <text x=\"20\" y=\"30\" font-family=\"sans-serif\" "
              "font-size=\"16\" fill=\"#222222\">"
           << title << "</text>\n";
    }
    os << "</svg>\n";
    return os.str();
}

}  // namespace rstar
