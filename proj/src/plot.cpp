#include "skc/plot.hpp"

#include <algorithm>
#include <cstdio>

#include "skc/errors.hpp"
#include "skc/io.hpp"

namespace skc {

namespace {

std::string fmt(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", x);
  return buf;
}

}  // namespace

std::string spectrum_plot_svg(const std::vector<double>& values, int k) {
  if (values.empty()) throw UsageError("cannot plot an empty spectrum");
  if (k < 1) throw UsageError("k must be >= 1");

  const int m = static_cast<int>(values.size());
  const double w = 640, h = 400;
  const double ml = 60, mr = 20, mt = 20, mb = 40;
  const double pw = w - ml - mr, ph = h - mt - mb;

  // The normalized Laplacian keeps everything in [0,2]; a fixed y-range makes
  // plots of different graphs comparable at a glance.
  const double ymax = 2.0;
  auto sx = [&](double index) {
    return m == 1 ? ml + pw / 2 : ml + (index - 1) / double(m - 1) * pw;
  };
  auto sy = [&](double v) { return mt + ph - std::min(v, ymax) / ymax * ph; };

  std::string svg;
  svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + fmt(w) + "\" height=\"" +
         fmt(h) + "\" viewBox=\"0 0 " + fmt(w) + " " + fmt(h) + "\">\n";
  svg += "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";

  if (k + 1 <= m) {
    const double x0 = sx(k), x1 = sx(k + 1);
    svg += "<rect class=\"gap\" data-k=\"" + std::to_string(k) + "\" x=\"" + fmt(x0) +
           "\" y=\"" + fmt(mt) + "\" width=\"" + fmt(x1 - x0) + "\" height=\"" + fmt(ph) +
           "\" fill=\"#fde68a\" fill-opacity=\"0.6\"/>\n";
  }

  // axes and y ticks
  svg += "<line x1=\"" + fmt(ml) + "\" y1=\"" + fmt(mt) + "\" x2=\"" + fmt(ml) + "\" y2=\"" +
         fmt(mt + ph) + "\" stroke=\"black\"/>\n";
  svg += "<line x1=\"" + fmt(ml) + "\" y1=\"" + fmt(mt + ph) + "\" x2=\"" + fmt(ml + pw) +
         "\" y2=\"" + fmt(mt + ph) + "\" stroke=\"black\"/>\n";
  for (double tick = 0.0; tick <= 2.0 + 1e-9; tick += 0.5) {
    const double y = sy(tick);
    svg += "<line x1=\"" + fmt(ml - 4) + "\" y1=\"" + fmt(y) + "\" x2=\"" + fmt(ml) +
           "\" y2=\"" + fmt(y) + "\" stroke=\"black\"/>\n";
    svg += "<text x=\"" + fmt(ml - 8) + "\" y=\"" + fmt(y + 4) +
           "\" text-anchor=\"end\" font-size=\"12\" font-family=\"sans-serif\">" + fmt(tick) +
           "</text>\n";
  }
  svg += "<text x=\"" + fmt(ml + pw / 2) + "\" y=\"" + fmt(h - 8) +
         "\" text-anchor=\"middle\" font-size=\"12\" font-family=\"sans-serif\">eigenvalue "
         "index</text>\n";

  for (int i = 0; i < m; ++i) {
    svg += "<circle data-index=\"" + std::to_string(i + 1) + "\" data-value=\"" +
           format_g17(values[i]) + "\" cx=\"" + fmt(sx(i + 1)) + "\" cy=\"" +
           fmt(sy(values[i])) + "\" r=\"3.5\" fill=\"#1f6feb\"/>\n";
  }

  svg += "</svg>\n";
  return svg;
}

void emit_spectrum_plot(const std::vector<double>& values, int k, const std::string& path) {
  atomic_write_text(path, spectrum_plot_svg(values, k));
}

}  // namespace skc
