// Command-line front end: forward map, resonance location, inverse
// reconstruction, round-trip check, and the stability experiment harness.

#include <cmath>
#include <complex>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "cmvres/cmv.hpp"
#include "cmvres/grid_kernels.hpp"
#include "cmvres/harness.hpp"
#include "cmvres/inverse.hpp"
#include "cmvres/jost.hpp"
#include "cmvres/parallel.hpp"
#include "cmvres/resonances.hpp"
#include "json.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << content;
}

int run_forward(const std::string& input, const std::string& out,
                std::size_t grid) {
  const auto seq = cmvres::VerblunskySequence::from_json(read_file(input));
  const auto pi = cmvres::pi_polynomial(seq);
  const double c0 = cmvres::rho_data(seq).c0;

  nlohmann::json j;
  j["pi_coeffs"] = nlohmann::json::parse(pi.to_json());
  j["psi0_zero"] = c0;
  j["grid"] = grid;
  const auto pts = cmvres::kernels::unit_circle_points(grid);
  std::vector<cmvres::Complex> psi;
  cmvres::kernels::poly_eval_parallel(pi, pts, psi);
  j["psi0_circle"] = nlohmann::json::array();
  for (const auto& v : psi)
    j["psi0_circle"].push_back({c0 * v.real(), c0 * v.imag()});
  write_file(out, j.dump(2) + "\n");
  return 0;
}

int run_resonances(const std::string& input, const std::string& out) {
  const auto seq = cmvres::VerblunskySequence::from_json(read_file(input));
  const auto set = cmvres::find_resonances(cmvres::pi_polynomial(seq));
  write_file(out, set.to_csv());
  return 0;
}

int run_invert(const std::string& input, const std::string& out,
               std::size_t grid, std::size_t nmax, double q) {
  const std::string text = read_file(input);
  const cmvres::ResonanceSet set = input.size() > 5 &&
                                   input.substr(input.size() - 5) == ".json"
                                       ? cmvres::ResonanceSet::from_json(text)
                                       : cmvres::ResonanceSet::from_csv(text);
  const cmvres::ClassParams params(2.0, 2.0, q);
  const auto rec = cmvres::reconstruct(set, grid, nmax, params);
  write_file(out, rec.to_json() + "\n");
  return rec.failed ? 1 : 0;
}

int run_roundtrip(const std::string& input, std::size_t grid, double tol) {
  const auto seq = cmvres::VerblunskySequence::from_json(read_file(input));
  const auto set = cmvres::find_resonances(cmvres::pi_polynomial(seq));
  const auto rec =
      cmvres::reconstruct(set, grid, seq.size() + 2, seq.params());
  double max_err = 0.0;
  const std::size_t n = std::max(seq.size(), rec.alpha_hat.size());
  for (std::size_t k = 1; k <= n; ++k) {
    const cmvres::Complex hat =
        k <= rec.alpha_hat.size() ? rec.alpha_hat[k - 1] : 0.0;
    max_err = std::max(max_err, std::abs(hat - seq.alpha(k)));
  }
  std::cout << "roundtrip max error: " << max_err << " (tol " << tol << ")\n";
  return max_err <= tol ? 0 : 1;
}

int run_stability(const std::string& config, const std::string& out,
                  const std::string& summary) {
  const auto cfg = cmvres::ExperimentConfig::from_json(read_file(config));
  const auto report = cmvres::run_stability_experiment(cfg);
  write_file(out, report.to_csv());
  if (!summary.empty()) write_file(summary, report.summary_json() + "\n");
  std::cout << "fitted A0: " << report.fitted_a0
            << (report.in_theorem_regime ? "" : "  (outside theorem regime)")
            << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
#ifdef _OPENMP
  omp_set_num_threads(cmvres::thread_cap());
#endif

  CLI::App app{"CMV resonances: forward and inverse maps, stability harness"};
  app.require_subcommand(1);

  std::string input, out = "out.json", summary, config;
  std::size_t grid = 4096, nmax = 12;
  double tol = 1e-6, q = 4.0;

  auto* fwd = app.add_subcommand("forward", "Jost function and Pi coefficients");
  fwd->add_option("--input", input, "sequence JSON")->required();
  fwd->add_option("--out", out, "output JSON");
  fwd->add_option("--grid", grid, "circle grid size (power of two)");

  auto* res = app.add_subcommand("resonances", "locate zeros of the Jost function");
  res->add_option("--input", input, "sequence JSON")->required();
  res->add_option("--out", out, "output CSV");

  auto* inv = app.add_subcommand("invert", "reconstruct coefficients from resonances");
  inv->add_option("--input", input, "resonance CSV or JSON")->required();
  inv->add_option("--out", out, "output JSON");
  inv->add_option("--grid", grid, "circle grid size (power of two)");
  inv->add_option("--nmax", nmax, "number of coefficients to extract");
  inv->add_option("--q", q, "class constant Q for the stopping rule");

  auto* rt = app.add_subcommand("roundtrip", "forward + inverse consistency check");
  rt->add_option("--input", input, "sequence JSON")->required();
  rt->add_option("--grid", grid, "circle grid size (power of two)");
  rt->add_option("--tol", tol, "pass/fail tolerance");

  auto* st = app.add_subcommand("stability", "seeded stability experiment");
  st->add_option("--config", config, "experiment config JSON")->required();
  st->add_option("--out", out, "per-record CSV");
  st->add_option("--summary", summary, "summary JSON");

  CLI11_PARSE(app, argc, argv);

  try {
    if (fwd->parsed()) return run_forward(input, out, grid);
    if (res->parsed()) return run_resonances(input, out);
    if (inv->parsed()) return run_invert(input, out, grid, nmax, q);
    if (rt->parsed()) return run_roundtrip(input, grid, tol);
    if (st->parsed()) return run_stability(config, out, summary);
  } catch (const std::exception& ex) {
    std::cerr << "error: " << ex.what() << "\n";
    return 2;
  }
  return 0;
}
