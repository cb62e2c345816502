#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "config.hpp"
#include "runners.hpp"
#include "fracwave/error.hpp"

using namespace fracwave;
using namespace fracwave::cli;
namespace fs = std::filesystem;

namespace {

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

fs::path scratch(const std::string& name) {
  const auto dir = fs::temp_directory_path() / ("fracwave_cli_test_" + name);
  fs::remove_all(dir);
  fs::create_directories(dir);
  return dir;
}

std::string config_error(const std::string& text) {
  try {
    validate(parse_config(text));
  } catch (const Error& e) {
    CHECK(e.code() == Errc::config);
    return e.what();
  }
  FAIL("expected a config error");
  return {};
}

const char* kSandwich = R"(# s = 3/4 sandwich
experiment = sandwich
order = 0.75
u0 = zero
u1 = gaussian(amplitude=1, width=1, center=0)
t_grid = log(100, 100000, 24)
backend = quadrature
)";

}  // namespace

TEST_CASE("config round trip through canonical form") {
  const auto c = parse_config(R"(
experiment = rates
order = 0.6
u0 = gaussian(amplitude=0.5, width=2, center=-1) + compact_bump(radius=0.75)
u1 = gaussian_derivative(width=1.5)
t_grid = list(1, 2.5, 10)
theta0 = 0.9
lemma_gammas = 0, 0.125
seed = 42
)");
  const auto text = canonical(c);
  const auto again = parse_config(text);
  CHECK(canonical(again) == text);
  CHECK(again.params.order == 0.6);
  CHECK(again.u0.terms.size() == 2);
  CHECK(again.u0.terms[1].kind == "compact_bump");
  CHECK(again.u0.terms[1].radius == 0.75);
  CHECK(again.t_grid.expand() == std::vector<double>{1.0, 2.5, 10.0});
  CHECK(again.seed == 42);
  CHECK(text.find("theta0 = 0.9\n") != std::string::npos);
}

TEST_CASE("config diagnostics name the line and key") {
  const auto unknown = config_error("experiment = solve\nordr = 0.5\n");
  CHECK(unknown.find("line 2") != std::string::npos);
  CHECK(unknown.find("ordr") != std::string::npos);

  const auto dup = config_error("order = 0.5\norder = 0.6\n");
  CHECK(dup.find("line 2") != std::string::npos);

  const auto bad_number = config_error("\n\norder = half\n");
  CHECK(bad_number.find("line 3") != std::string::npos);

  const auto bad_term = config_error("u1 = gaussian(widht=1)\n");
  CHECK(bad_term.find("widht") != std::string::npos);

  config_error("t_grid = list()\n");
  config_error("t_grid = list(3, 2)\n");
  config_error("experiment = nonsense\nt_grid = list(1)\n");
  config_error("no equals sign\n");
}

TEST_CASE("sampled profiles resolve against the config directory") {
  const auto dir = scratch("sampled");
  const GridSpec grid(10.0, 64);
  {
    std::ofstream out(dir / "u1.txt");
    out.precision(17);
    for (std::size_t j = 0; j < grid.size(); ++j) out << std::exp(-grid.x(j) * grid.x(j)) << "\n";
  }
  const auto c = parse_config("grid_half_width = 10\ngrid_points = 64\nu1 = sampled(file=u1.txt)\n", dir);
  const auto data = build_data(c);
  CHECK(data.u1(0.0) == doctest::Approx(1.0));
  CHECK(moment0(data.u1) == doctest::Approx(std::sqrt(3.14159265358979)).epsilon(1e-8));

  const auto short_grid = parse_config("grid_points = 128\nu1 = sampled(file=u1.txt)\n", dir);
  CHECK_THROWS_AS(build_data(short_grid), Error);
}

TEST_CASE("runs are deterministic") {
  const auto a = scratch("det_a");
  const auto b = scratch("det_b");
  auto c = parse_config(kSandwich);
  c.output = a;
  const auto ra = run_experiment(c);
  c.output = b;
  const auto rb = run_experiment(c);
  CHECK(ra.pass() == rb.pass());
  CHECK(slurp(a / "norms.csv") == slurp(b / "norms.csv"));
  const auto ja = slurp(a / "report.json");
  auto jb = slurp(b / "report.json");
  // Reports differ only in the output path recorded in the config.
  for (auto pos = jb.find("det_b"); pos != std::string::npos; pos = jb.find("det_b", pos)) jb.replace(pos, 5, "det_a");
  CHECK(ja == jb);
  CHECK(ja.find("\"pass\"") != std::string::npos);
}

TEST_CASE("sandwich and energy runners") {
  auto c = parse_config(kSandwich);
  c.output = scratch("sandwich");
  const auto r = run_experiment(c);
  CHECK(r.pass());
  CHECK(fs::exists(c.output / "norms.csv"));
  const auto csv = slurp(c.output / "norms.csv");
  CHECK(csv.rfind("t,spectral_l2,l2,lower,upper\n", 0) == 0);

  auto e = parse_config("experiment = energy\norder = 0.4\nu0 = gaussian()\nu1 = gaussian()\nt_grid = linear(0, 100, 11)\n");
  e.output = scratch("energy");
  const auto er = run_experiment(e);
  CHECK(er.pass());
  CHECK(slurp(e.output / "norms.csv").rfind("t,energy,relative_drift\n", 0) == 0);

  auto wrong = parse_config(kSandwich);
  wrong.params.order = 0.4;
  wrong.output = scratch("wrong");
  try {
    run_experiment(wrong);
    FAIL("expected wrong_regime");
  } catch (const Error& err) {
    CHECK(err.code() == Errc::wrong_regime);
  }
}

TEST_CASE("inequality runner") {
  auto c = parse_config("experiment = lemmas\nu0 = gaussian()\nu1 = gaussian_derivative()\nrandom_xi = 50\n");
  c.output = scratch("lemmas");
  const auto r = run_experiment(c);
  CHECK(r.pass());
  CHECK(r.verdicts.size() > 4);
}
