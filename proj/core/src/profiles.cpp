#include "fracwave/profiles.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <mutex>
#include <numbers>
#include <sstream>
#include <unordered_map>

#include "fracwave/error.hpp"
#include "fracwave/quadrature.hpp"

namespace fracwave {
namespace {

constexpr double kSqrtPi = 1.7724538509055160273;

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

double bump_shape(double x) {
  const double q = 1.0 - x * x;
  return q > 0.0 ? std::exp(-1.0 / q) : 0.0;
}

double sampled_value(const Sampled& s, double x) {
  const auto& g = s.grid;
  const double pos = (x - g.x(0)) / g.dx();
  if (pos < 0.0) return 0.0;
  const auto j = static_cast<std::size_t>(pos);
  if (j + 1 >= g.size()) return j + 1 == g.size() && pos == static_cast<double>(j) ? s.values[j] : 0.0;
  const double frac = pos - static_cast<double>(j);
  return (1.0 - frac) * s.values[j] + frac * s.values[j + 1];
}

std::complex<double> sampled_fourier(const Sampled& s, double xi) {
  const auto& g = s.grid;
  std::complex<double> acc{};
  for (std::size_t j = 0; j < g.size(); ++j) acc += s.values[j] * std::polar(1.0, -g.x(j) * xi);
  return acc * g.dx();
}

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

void check_width(double w, const char* what) {
  if (!(w > 0.0) || !std::isfinite(w)) throw Error(Errc::domain, std::string(what) + " must be positive");
}

// Rectangle-rule evaluation of \int weight(x) |p(x)| dx on a sample grid.
template <class Weight>
double grid_integral(const Profile& p, const GridSpec& g, Weight weight, bool square) {
  double acc = 0.0;
  for (std::size_t j = 0; j < g.size(); ++j) {
    const double v = std::abs(p(g.x(j)));
    acc += weight(g.x(j)) * (square ? v * v : v);
  }
  return acc * g.dx();
}

template <class Integrand>
double physical_integral(const Profile& p, Integrand f) {
  const double extent = p.physical_extent();
  std::vector<double> breaks = p.breakpoints();
  breaks.push_back(-extent);
  breaks.push_back(extent);
  double spacing = extent;
  for (const auto& term : p.terms()) {
    std::visit(Overloaded{[&](const Gaussian& g) { spacing = std::min(spacing, 0.5 * g.width); },
                          [&](const GaussianDerivative& g) { spacing = std::min(spacing, 0.5 * g.width); },
                          [&](const CompactBump& b) { spacing = std::min(spacing, 0.25 * b.radius); },
                          [](const Sampled&) {}},
               term);
  }
  const auto panels = static_cast<long>(std::ceil(2.0 * extent / spacing));
  for (long i = 1; i < panels; ++i) breaks.push_back(-extent + 2.0 * extent * static_cast<double>(i) / static_cast<double>(panels));
  std::erase_if(breaks, [&](double b) { return b < -extent || b > extent; });
  std::sort(breaks.begin(), breaks.end());
  breaks.erase(std::unique(breaks.begin(), breaks.end()), breaks.end());

  quad::Options opt;
  opt.rel_tol = 1e-13;
  opt.abs_tol = 1e-300;
  const auto res = quad::integrate_panels(f, breaks, opt);
  return res.value;
}

}  // namespace

Profile::Profile(Term term) {
  std::visit(Overloaded{[](const Gaussian& g) { check_width(g.width, "gaussian width"); },
                        [](const GaussianDerivative& g) { check_width(g.width, "gaussian_derivative width"); },
                        [](const CompactBump& b) { check_width(b.radius, "bump radius"); },
                        [](const Sampled& s) {
                          if (s.values.size() != s.grid.size())
                            throw Error(Errc::input, "sampled profile length does not match its grid");
                        }},
             term);
  terms_.push_back(std::move(term));
}

Profile Profile::gaussian(double amplitude, double width, double center) {
  return Profile(Gaussian{amplitude, width, center});
}
Profile Profile::gaussian_derivative(double amplitude, double width, double center) {
  return Profile(GaussianDerivative{amplitude, width, center});
}
Profile Profile::compact_bump(double amplitude, double radius) {
  return Profile(CompactBump{amplitude, radius});
}
Profile Profile::sampled(GridSpec grid, std::vector<double> values) {
  return Profile(Sampled{grid, std::move(values)});
}

double Profile::operator()(double x) const {
  double acc = 0.0;
  for (const auto& term : terms_) {
    acc += std::visit(
        Overloaded{[x](const Gaussian& g) {
                     const double z = (x - g.center) / g.width;
                     return g.amplitude * std::exp(-z * z);
                   },
                   [x](const GaussianDerivative& g) {
                     const double z = (x - g.center) / g.width;
                     return -2.0 * g.amplitude * z / g.width * std::exp(-z * z);
                   },
                   [x](const CompactBump& b) { return b.amplitude * bump_shape(x / b.radius); },
                   [x](const Sampled& s) { return sampled_value(s, x); }},
        term);
  }
  return acc;
}

std::complex<double> Profile::fourier(double xi) const {
  std::complex<double> acc{};
  for (const auto& term : terms_) {
    acc += std::visit(
        Overloaded{[xi](const Gaussian& g) {
                     const double mag = g.amplitude * g.width * kSqrtPi *
                                        std::exp(-0.25 * g.width * g.width * xi * xi);
                     return std::polar(1.0, -g.center * xi) * mag;
                   },
                   [xi](const GaussianDerivative& g) {
                     const double mag = g.amplitude * g.width * kSqrtPi *
                                        std::exp(-0.25 * g.width * g.width * xi * xi);
                     return std::complex<double>(0.0, xi) * std::polar(1.0, -g.center * xi) * mag;
                   },
                   [xi](const CompactBump& b) {
                     return std::complex<double>(b.amplitude * b.radius * unit_bump_transform(b.radius * xi), 0.0);
                   },
                   [xi](const Sampled& s) { return sampled_fourier(s, xi); }},
        term);
  }
  return acc;
}

bool Profile::has_analytic_fourier() const {
  return std::all_of(terms_.begin(), terms_.end(), [](const Term& t) {
    return std::holds_alternative<Gaussian>(t) || std::holds_alternative<GaussianDerivative>(t);
  });
}

const GridSpec* Profile::sample_grid() const {
  for (const auto& term : terms_)
    if (const auto* s = std::get_if<Sampled>(&term)) return &s->grid;
  return nullptr;
}

double Profile::physical_extent(double rel_tol) const {
  const double decay = std::sqrt(std::log(1.0 / rel_tol)) + 1.0;
  double extent = 1.0;
  for (const auto& term : terms_) {
    const double r = std::visit(
        Overloaded{[&](const Gaussian& g) { return std::abs(g.center) + decay * g.width; },
                   [&](const GaussianDerivative& g) { return std::abs(g.center) + decay * g.width; },
                   [](const CompactBump& b) { return b.radius; },
                   [](const Sampled& s) { return s.grid.half_width(); }},
        term);
    extent = std::max(extent, r);
  }
  return extent;
}

double Profile::spectral_extent(double rel_tol) const {
  const double log_inv = std::log(1.0 / rel_tol);
  double extent = 0.0;
  for (const auto& term : terms_) {
    const double k = std::visit(
        Overloaded{[&](const Gaussian& g) { return std::sqrt(2.0 * log_inv) / g.width; },
                   [&](const GaussianDerivative& g) { return (std::sqrt(2.0 * log_inv) + 3.0) / g.width; },
                   // |Phi(eta)|^2 ~ exp(-2 sqrt(eta)) with algebraic prefactors.
                   [&](const CompactBump& b) { return std::pow(0.5 * log_inv + 4.0, 2) / b.radius; },
                   [](const Sampled& s) { return std::numbers::pi / s.grid.dx(); }},
        term);
    extent = std::max(extent, k);
  }
  return extent;
}

std::vector<double> Profile::breakpoints() const {
  std::vector<double> out{0.0};
  for (const auto& term : terms_) {
    std::visit(Overloaded{[&](const Gaussian& g) { out.push_back(g.center); },
                          [&](const GaussianDerivative& g) { out.push_back(g.center); },
                          [&](const CompactBump& b) {
                            out.push_back(-b.radius);
                            out.push_back(b.radius);
                          },
                          [](const Sampled&) {}},
               term);
  }
  return out;
}

std::string Profile::describe() const {
  if (terms_.empty()) return "zero";
  std::ostringstream os;
  for (std::size_t i = 0; i < terms_.size(); ++i) {
    if (i) os << " + ";
    std::visit(Overloaded{[&](const Gaussian& g) {
                            os << "gaussian(amplitude=" << fmt(g.amplitude) << ", width=" << fmt(g.width)
                               << ", center=" << fmt(g.center) << ")";
                          },
                          [&](const GaussianDerivative& g) {
                            os << "gaussian_derivative(amplitude=" << fmt(g.amplitude)
                               << ", width=" << fmt(g.width) << ", center=" << fmt(g.center) << ")";
                          },
                          [&](const CompactBump& b) {
                            os << "compact_bump(amplitude=" << fmt(b.amplitude) << ", radius=" << fmt(b.radius)
                               << ")";
                          },
                          [&](const Sampled& s) {
                            os << "sampled(points=" << s.grid.size() << ", half_width=" << fmt(s.grid.half_width())
                               << ")";
                          }},
               terms_[i]);
  }
  return os.str();
}

Profile& Profile::operator+=(const Profile& other) {
  terms_.insert(terms_.end(), other.terms_.begin(), other.terms_.end());
  return *this;
}

Profile& Profile::operator*=(double factor) {
  if (factor == 0.0) {
    terms_.clear();
    return *this;
  }
  for (auto& term : terms_) {
    std::visit(Overloaded{[&](Gaussian& g) { g.amplitude *= factor; },
                          [&](GaussianDerivative& g) { g.amplitude *= factor; },
                          [&](CompactBump& b) { b.amplitude *= factor; },
                          [&](Sampled& s) {
                            for (auto& v : s.values) v *= factor;
                          }},
               term);
  }
  return *this;
}

double moment0(const Profile& p) {
  double acc = 0.0;
  for (const auto& term : p.terms()) {
    acc += std::visit(Overloaded{[](const Gaussian& g) { return g.amplitude * g.width * kSqrtPi; },
                                 [](const GaussianDerivative&) { return 0.0; },
                                 [](const CompactBump& b) { return b.amplitude * b.radius * unit_bump_transform(0.0); },
                                 [](const Sampled& s) {
                                   double sum = 0.0;
                                   for (double v : s.values) sum += v;
                                   return sum * s.grid.dx();
                                 }},
                      term);
  }
  return acc;
}

double l1_norm(const Profile& p) { return weighted_l1_norm(p, 0.0) / 2.0; }

double l2_norm(const Profile& p) {
  if (p.is_zero()) return 0.0;
  if (const GridSpec* g = p.sample_grid()) return std::sqrt(grid_integral(p, *g, [](double) { return 1.0; }, true));
  return std::sqrt(physical_integral(p, [&p](double x) {
    const double v = p(x);
    return v * v;
  }));
}

double weighted_l1_norm(const Profile& p, double gamma) {
  if (!(gamma >= 0.0 && gamma <= 1.0))
    throw Error(Errc::domain, "weight exponent gamma must lie in [0, 1]");
  if (p.is_zero()) return 0.0;
  // |x|^0 is taken as 1 everywhere, including x = 0.
  auto weight = [gamma](double x) { return 1.0 + (gamma == 0.0 ? 1.0 : std::pow(std::abs(x), gamma)); };
  if (const GridSpec* g = p.sample_grid()) return grid_integral(p, *g, weight, false);
  return physical_integral(p, [&](double x) { return weight(x) * std::abs(p(x)); });
}

std::vector<double> sample(const Profile& p, const GridSpec& grid) {
  std::vector<double> out(grid.size(), 0.0);
  for (const auto& term : p.terms()) {
    if (const auto* s = std::get_if<Sampled>(&term); s && s->grid == grid) {
      for (std::size_t j = 0; j < grid.size(); ++j) out[j] += s->values[j];
      continue;
    }
    const Profile single(term);
    for (std::size_t j = 0; j < grid.size(); ++j) out[j] += single(grid.x(j));
  }
  return out;
}

double boundary_ratio(const Profile& p, const GridSpec& grid) {
  const auto values = sample(p, grid);
  double peak = 0.0;
  for (double v : values) peak = std::max(peak, std::abs(v));
  if (peak == 0.0) return 0.0;
  const double edge = std::max(std::abs(p(-grid.half_width())), std::abs(p(grid.half_width())));
  return edge / peak;
}

double unit_bump_transform(double eta) {
  static std::mutex mutex;
  static std::unordered_map<double, double> cache;
  eta = std::abs(eta);  // real and even
  {
    std::lock_guard lock(mutex);
    if (auto it = cache.find(eta); it != cache.end()) return it->second;
  }
  const auto panels = std::max<long>(4, static_cast<long>(std::ceil(2.0 * eta / std::numbers::pi)));
  std::vector<double> breaks(static_cast<std::size_t>(panels) + 1);
  for (long i = 0; i <= panels; ++i) breaks[static_cast<std::size_t>(i)] = static_cast<double>(i) / static_cast<double>(panels);
  quad::Options opt;
  opt.rel_tol = 1e-13;
  opt.abs_tol = 1e-16;  // rounding floor of an O(1) integrand; the transform itself decays below it
  const auto res = quad::integrate_panels([eta](double x) { return std::cos(eta * x) * bump_shape(x); }, breaks, opt);
  const double value = 2.0 * res.value;
  std::lock_guard lock(mutex);
  cache.emplace(eta, value);
  return value;
}

}  // namespace fracwave
