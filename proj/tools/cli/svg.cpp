#include "svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>

namespace fracwave::cli {
namespace {

constexpr double kWidth = 720, kHeight = 440, kLeft = 70, kRight = 170, kTop = 40, kBottom = 50;

std::string f(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  return buf;
}

std::string escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '<') out += "&lt;";
    else if (c == '>') out += "&gt;";
    else if (c == '&') out += "&amp;";
    else out += c;
  }
  return out;
}

bool usable(double x, double y) { return std::isfinite(x) && std::isfinite(y) && x > 0.0 && y > 0.0; }

}  // namespace

std::string loglog_svg(const std::string& title, const std::vector<double>& x, const std::vector<Curve>& curves) {
  double x0 = std::numeric_limits<double>::infinity(), x1 = -x0, y0 = x0, y1 = -x0;
  for (const auto& c : curves)
    for (std::size_t i = 0; i < x.size() && i < c.y.size(); ++i)
      if (usable(x[i], c.y[i])) {
        x0 = std::min(x0, std::log10(x[i]));
        x1 = std::max(x1, std::log10(x[i]));
        y0 = std::min(y0, std::log10(c.y[i]));
        y1 = std::max(y1, std::log10(c.y[i]));
      }
  if (!(x1 >= x0)) x0 = 0, x1 = 1, y0 = 0, y1 = 1;
  if (x1 - x0 < 1e-9) x0 -= 0.5, x1 += 0.5;
  if (y1 - y0 < 1e-9) y0 -= 0.5, y1 += 0.5;
  const double pw = kWidth - kLeft - kRight, ph = kHeight - kTop - kBottom;
  auto px = [&](double v) { return kLeft + (std::log10(v) - x0) / (x1 - x0) * pw; };
  auto py = [&](double v) { return kTop + (y1 - std::log10(v)) / (y1 - y0) * ph; };

  std::string out;
  out += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + f(kWidth) + "\" height=\"" + f(kHeight) + "\">\n";
  out += "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  out += "<text x=\"" + f(kLeft) + "\" y=\"24\" font-family=\"sans-serif\" font-size=\"14\">" + escape(title) +
         "</text>\n";
  out += "<rect x=\"" + f(kLeft) + "\" y=\"" + f(kTop) + "\" width=\"" + f(pw) + "\" height=\"" + f(ph) +
         "\" fill=\"none\" stroke=\"black\"/>\n";
  for (int d = static_cast<int>(std::ceil(x0)); d <= static_cast<int>(std::floor(x1)); ++d) {
    const double gx = kLeft + (d - x0) / (x1 - x0) * pw;
    out += "<line x1=\"" + f(gx) + "\" y1=\"" + f(kTop) + "\" x2=\"" + f(gx) + "\" y2=\"" + f(kTop + ph) +
           "\" stroke=\"#ddd\"/>\n";
    out += "<text x=\"" + f(gx) + "\" y=\"" + f(kTop + ph + 18) +
           "\" font-family=\"sans-serif\" font-size=\"11\" text-anchor=\"middle\">1e" + std::to_string(d) +
           "</text>\n";
  }
  for (int d = static_cast<int>(std::ceil(y0)); d <= static_cast<int>(std::floor(y1)); ++d) {
    const double gy = kTop + (y1 - d) / (y1 - y0) * ph;
    out += "<line x1=\"" + f(kLeft) + "\" y1=\"" + f(gy) + "\" x2=\"" + f(kLeft + pw) + "\" y2=\"" + f(gy) +
           "\" stroke=\"#ddd\"/>\n";
    out += "<text x=\"" + f(kLeft - 6) + "\" y=\"" + f(gy + 4) +
           "\" font-family=\"sans-serif\" font-size=\"11\" text-anchor=\"end\">1e" + std::to_string(d) + "</text>\n";
  }
  double legend_y = kTop + 10;
  for (const auto& c : curves) {
    std::string pts;
    for (std::size_t i = 0; i < x.size() && i < c.y.size(); ++i)
      if (usable(x[i], c.y[i])) pts += f(px(x[i])) + "," + f(py(c.y[i])) + " ";
    out += "<polyline fill=\"none\" stroke=\"" + c.colour + "\" stroke-width=\"1.5\" points=\"" + pts + "\"/>\n";
    out += "<text x=\"" + f(kLeft + pw + 10) + "\" y=\"" + f(legend_y) + "\" font-family=\"sans-serif\" font-size=\"12\" fill=\"" +
           c.colour + "\">" + escape(c.label) + "</text>\n";
    legend_y += 18;
  }
  out += "</svg>\n";
  return out;
}

}  // namespace fracwave::cli
