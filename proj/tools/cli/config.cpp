#include "config.hpp"

#include <algorithm>
#include <charconv>
#include <cstdio>
#include <fstream>
#include <functional>
#include <map>
#include <set>
#include <sstream>

#include "fracwave/error.hpp"
#include "fracwave/rate_fit.hpp"

namespace fracwave::cli {
namespace {

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return std::string(s.substr(b, e - b + 1));
}

// Shortest text that parses back to the same double.
std::string num(double v) {
  char buf[64];
  const auto [end, ec] = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, end);
}

[[noreturn]] void fail(const std::string& msg) { throw Error(Errc::config, msg); }

double parse_double(const std::string& text) {
  const std::string s = trim(text);
  double v = 0.0;
  const auto* end = s.data() + s.size();
  const auto [ptr, ec] = std::from_chars(s.data(), end, v);
  if (ec != std::errc() || ptr != end || s.empty()) fail("expected a number, got '" + s + "'");
  return v;
}

std::uint64_t parse_unsigned(const std::string& text) {
  const std::string s = trim(text);
  std::uint64_t v = 0;
  const auto* end = s.data() + s.size();
  const auto [ptr, ec] = std::from_chars(s.data(), end, v);
  if (ec != std::errc() || ptr != end || s.empty()) fail("expected a nonnegative integer, got '" + s + "'");
  return v;
}

bool parse_bool(const std::string& text) {
  const std::string s = trim(text);
  if (s == "on" || s == "true" || s == "1" || s == "yes") return true;
  if (s == "off" || s == "false" || s == "0" || s == "no") return false;
  fail("expected on/off, got '" + s + "'");
}

// Splits on `sep` outside parentheses.
std::vector<std::string> split_top(const std::string& s, char sep) {
  std::vector<std::string> out;
  int depth = 0;
  std::string cur;
  for (char c : s) {
    if (c == '(') ++depth;
    if (c == ')') --depth;
    if (depth < 0) fail("unbalanced parentheses in '" + s + "'");
    if (c == sep && depth == 0) {
      out.push_back(trim(cur));
      cur.clear();
    } else {
      cur += c;
    }
  }
  if (depth != 0) fail("unbalanced parentheses in '" + s + "'");
  out.push_back(trim(cur));
  return out;
}

// name(args) -> {name, args}; bare name -> {name, ""}.
std::pair<std::string, std::string> call_form(const std::string& s) {
  const auto open = s.find('(');
  if (open == std::string::npos) return {trim(s), {}};
  if (s.back() != ')') fail("expected ')' at the end of '" + s + "'");
  return {trim(s.substr(0, open)), s.substr(open + 1, s.size() - open - 2)};
}

std::vector<double> parse_list(const std::string& s) {
  std::vector<double> out;
  if (trim(s).empty()) return out;
  for (const auto& part : split_top(s, ',')) out.push_back(parse_double(part));
  return out;
}

std::string list_text(const std::vector<double>& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? ", " : "") + num(v[i]);
  return out;
}

TermDecl parse_term(const std::string& text) {
  const auto [name, args] = call_form(text);
  TermDecl t;
  t.kind = name;
  static const std::map<std::string, std::set<std::string>> allowed{
      {"gaussian", {"amplitude", "width", "center"}},
      {"gaussian_derivative", {"amplitude", "width", "center"}},
      {"compact_bump", {"amplitude", "radius"}},
      {"sampled", {"file"}},
  };
  const auto it = allowed.find(name);
  if (it == allowed.end()) fail("unknown profile term '" + name + "'");
  if (trim(args).empty()) {
    if (name == "sampled") fail("sampled(...) needs file=<path>");
    return t;
  }
  for (const auto& kv : split_top(args, ',')) {
    const auto eq = kv.find('=');
    if (eq == std::string::npos) fail("expected key=value in '" + kv + "'");
    const std::string k = trim(kv.substr(0, eq));
    const std::string v = trim(kv.substr(eq + 1));
    if (!it->second.count(k)) fail("'" + name + "' has no parameter '" + k + "'");
    if (k == "amplitude") t.amplitude = parse_double(v);
    if (k == "width") t.width = parse_double(v);
    if (k == "center") t.center = parse_double(v);
    if (k == "radius") t.radius = parse_double(v);
    if (k == "file") t.file = v;
  }
  if (name == "sampled" && t.file.empty()) fail("sampled(...) needs file=<path>");
  return t;
}

ProfileDecl parse_profile(const std::string& text) {
  ProfileDecl p;
  if (trim(text) == "zero") return p;
  for (const auto& part : split_top(text, '+')) {
    if (part.empty()) fail("empty term in profile '" + text + "'");
    p.terms.push_back(parse_term(part));
  }
  return p;
}

GridDecl parse_grid(const std::string& text) {
  const auto [name, args] = call_form(text);
  GridDecl g;
  const auto values = parse_list(args);
  if (name == "list") {
    g.kind = GridDecl::Kind::list;
    g.values = values;
    return g;
  }
  if (name != "log" && name != "linear") fail("grid must be log(lo, hi, n), linear(lo, hi, n) or list(...)");
  if (values.size() != 3) fail(name + "(...) takes lo, hi, count");
  g.kind = name == "log" ? GridDecl::Kind::log : GridDecl::Kind::linear;
  g.lo = values[0];
  g.hi = values[1];
  if (values[2] < 0.0 || values[2] != std::floor(values[2])) fail("grid count must be a nonnegative integer");
  g.count = static_cast<std::size_t>(values[2]);
  return g;
}

Backend parse_backend(const std::string& s) {
  if (s == "grid") return Backend::grid;
  if (s == "quadrature") return Backend::quadrature;
  fail("backend must be grid or quadrature, got '" + s + "'");
}

const std::vector<std::string>& experiments() {
  static const std::vector<std::string> names{"solve", "rates", "lemmas", "sandwich", "energy"};
  return names;
}

}  // namespace

std::vector<double> GridDecl::expand() const {
  switch (kind) {
    case Kind::list:
      return values;
    case Kind::log:
      return logspace(lo, hi, count);
    case Kind::linear: {
      std::vector<double> out(count);
      for (std::size_t i = 0; i < count; ++i)
        out[i] = count == 1 ? lo : lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(count - 1);
      return out;
    }
  }
  return {};
}

std::string canonical(const ProfileDecl& p) {
  if (p.terms.empty()) return "zero";
  std::string out;
  for (std::size_t i = 0; i < p.terms.size(); ++i) {
    const auto& t = p.terms[i];
    if (i) out += " + ";
    out += t.kind + "(";
    if (t.kind == "gaussian" || t.kind == "gaussian_derivative")
      out += "amplitude=" + num(t.amplitude) + ", width=" + num(t.width) + ", center=" + num(t.center);
    else if (t.kind == "compact_bump")
      out += "amplitude=" + num(t.amplitude) + ", radius=" + num(t.radius);
    else
      out += "file=" + t.file;
    out += ")";
  }
  return out;
}

std::string canonical(const GridDecl& g) {
  switch (g.kind) {
    case GridDecl::Kind::list:
      return "list(" + list_text(g.values) + ")";
    case GridDecl::Kind::log:
      return "log(" + num(g.lo) + ", " + num(g.hi) + ", " + std::to_string(g.count) + ")";
    case GridDecl::Kind::linear:
      return "linear(" + num(g.lo) + ", " + num(g.hi) + ", " + std::to_string(g.count) + ")";
  }
  return {};
}

std::string canonical(const ExperimentConfig& c) {
  std::ostringstream os;
  os << "experiment = " << c.experiment << "\n";
  os << "dimension = " << c.params.dimension << "\n";
  os << "order = " << num(c.params.order) << "\n";
  os << "u0 = " << canonical(c.u0) << "\n";
  os << "u1 = " << canonical(c.u1) << "\n";
  os << "t_grid = " << canonical(c.t_grid) << "\n";
  os << "backend = " << (c.backend == Backend::grid ? "grid" : "quadrature") << "\n";
  os << "grid_half_width = " << num(c.grid_half_width) << "\n";
  os << "grid_points = " << c.grid_points << "\n";
  os << "output = " << c.output.generic_string() << "\n";
  os << "bounds = " << (c.bounds ? "on" : "off") << "\n";
  os << "plot = " << (c.plot ? "on" : "off") << "\n";
  os << "seed = " << c.seed << "\n";
  os << "theta0 = " << num(c.theta0) << "\n";
  os << "rate_tolerance = " << num(c.rate_tolerance) << "\n";
  os << "energy_tolerance = " << num(c.energy_tolerance) << "\n";
  os << "lemma_thetas = " << list_text(c.lemma_thetas) << "\n";
  os << "lemma_gammas = " << list_text(c.lemma_gammas) << "\n";
  os << "xi_grid = " << canonical(c.xi_grid) << "\n";
  os << "random_xi = " << c.random_xi << "\n";
  return os.str();
}

ExperimentConfig parse_config(const std::string& text, const std::filesystem::path& base_dir) {
  ExperimentConfig c;
  c.base_dir = base_dir;
  using Setter = std::function<void(const std::string&)>;
  const std::map<std::string, Setter> setters{
      {"experiment", [&](const std::string& v) { c.experiment = v; }},
      {"dimension", [&](const std::string& v) { c.params.dimension = static_cast<int>(parse_unsigned(v)); }},
      {"order", [&](const std::string& v) { c.params.order = parse_double(v); }},
      {"u0", [&](const std::string& v) { c.u0 = parse_profile(v); }},
      {"u1", [&](const std::string& v) { c.u1 = parse_profile(v); }},
      {"t_grid", [&](const std::string& v) { c.t_grid = parse_grid(v); }},
      {"backend", [&](const std::string& v) { c.backend = parse_backend(v); }},
      {"grid_half_width", [&](const std::string& v) { c.grid_half_width = parse_double(v); }},
      {"grid_points", [&](const std::string& v) { c.grid_points = parse_unsigned(v); }},
      {"output", [&](const std::string& v) { c.output = v; }},
      {"bounds", [&](const std::string& v) { c.bounds = parse_bool(v); }},
      {"plot", [&](const std::string& v) { c.plot = parse_bool(v); }},
      {"seed", [&](const std::string& v) { c.seed = parse_unsigned(v); }},
      {"theta0", [&](const std::string& v) { c.theta0 = parse_double(v); }},
      {"rate_tolerance", [&](const std::string& v) { c.rate_tolerance = parse_double(v); }},
      {"energy_tolerance", [&](const std::string& v) { c.energy_tolerance = parse_double(v); }},
      {"lemma_thetas", [&](const std::string& v) { c.lemma_thetas = parse_list(v); }},
      {"lemma_gammas", [&](const std::string& v) { c.lemma_gammas = parse_list(v); }},
      {"xi_grid", [&](const std::string& v) { c.xi_grid = parse_grid(v); }},
      {"random_xi", [&](const std::string& v) { c.random_xi = parse_unsigned(v); }},
  };

  std::set<std::string> seen;
  std::istringstream in(text);
  std::string line;
  int number = 0;
  while (std::getline(in, line)) {
    ++number;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    const std::string body = trim(line);
    if (body.empty()) continue;
    const std::string where = "line " + std::to_string(number);
    const auto eq = body.find('=');
    if (eq == std::string::npos) fail(where + ": expected 'key = value'");
    const std::string key = trim(body.substr(0, eq));
    const std::string value = trim(body.substr(eq + 1));
    const auto it = setters.find(key);
    if (it == setters.end()) fail(where + ": unknown key '" + key + "'");
    if (!seen.insert(key).second) fail(where + ": duplicate key '" + key + "'");
    try {
      it->second(value);
    } catch (const Error& e) {
      fail(where + ": " + key + ": " + e.what());
    }
  }
  return c;
}

ExperimentConfig load_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(Errc::config, "cannot open config file " + path.string());
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_config(ss.str(), path.parent_path());
}

Profile build_profile(const ProfileDecl& decl, const GridSpec& grid, const std::filesystem::path& base_dir) {
  Profile p;
  for (const auto& t : decl.terms) {
    if (t.kind == "gaussian") {
      p += Profile::gaussian(t.amplitude, t.width, t.center);
    } else if (t.kind == "gaussian_derivative") {
      p += Profile::gaussian_derivative(t.amplitude, t.width, t.center);
    } else if (t.kind == "compact_bump") {
      p += Profile::compact_bump(t.amplitude, t.radius);
    } else {
      const std::filesystem::path file = std::filesystem::path(t.file).is_absolute() ? std::filesystem::path(t.file) : base_dir / t.file;
      std::ifstream in(file);
      if (!in) throw Error(Errc::config, "cannot open sampled profile " + file.string());
      std::vector<double> values;
      double v = 0.0;
      while (in >> v) values.push_back(v);
      if (!in.eof()) throw Error(Errc::config, "non-numeric entry in " + file.string());
      if (values.size() != grid.size())
        throw Error(Errc::config, file.string() + " holds " + std::to_string(values.size()) + " values, grid has " +
                                      std::to_string(grid.size()));
      p += Profile::sampled(grid, std::move(values));
    }
  }
  return p;
}

InitialData build_data(const ExperimentConfig& c) {
  const auto grid = c.grid();
  return {build_profile(c.u0, grid, c.base_dir), build_profile(c.u1, grid, c.base_dir)};
}

void validate(const ExperimentConfig& c) {
  if (std::find(experiments().begin(), experiments().end(), c.experiment) == experiments().end())
    throw Error(Errc::config, "experiment: unknown experiment '" + c.experiment + "'");
  if (c.experiment != "lemmas") {
    const auto t = c.t_grid.expand();
    if (t.empty()) throw Error(Errc::config, "t_grid: empty time grid");
    for (std::size_t i = 0; i < t.size(); ++i) {
      if (!(t[i] >= 0.0)) throw Error(Errc::config, "t_grid: times must be nonnegative");
      if (i && !(t[i] > t[i - 1])) throw Error(Errc::config, "t_grid: times must be strictly increasing");
    }
  }
  if (!(c.theta0 > 0.0 && c.theta0 < 1.0)) throw Error(Errc::config, "theta0: must lie in (0, 1)");
  try {
    c.params.validate();
    (void)c.grid();
  } catch (const Error& e) {
    throw Error(Errc::config, e.what());
  }
}

}  // namespace fracwave::cli
