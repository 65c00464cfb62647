#pragma once

#include <string>
#include <vector>

namespace skc {

/// Self-contained SVG scatter of eigenvalue index (1-based) against value,
/// with a shaded band between indices k and k+1 marking the gap of interest.
/// Each point carries data-index / data-value attributes so tests can read
/// the plotted numbers back without an XML parser. The band is omitted when
/// index k+1 is not part of the spectrum.
std::string spectrum_plot_svg(const std::vector<double>& values, int k);

void emit_spectrum_plot(const std::vector<double>& values, int k, const std::string& path);

}  // namespace skc
