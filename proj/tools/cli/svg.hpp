#pragma once

// Minimal log-log line chart writer.

#include <string>
#include <vector>

namespace fracwave::cli {

struct Curve {
  std::string label;
  std::vector<double> y;
  std::string colour;
};

/// Points with nonpositive or non-finite coordinates are dropped.
std::string loglog_svg(const std::string& title, const std::vector<double>& x, const std::vector<Curve>& curves);

}  // namespace fracwave::cli
