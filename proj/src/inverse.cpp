#include "cmvres/inverse.hpp"

#include <cmath>
#include <stdexcept>

#include "cmvres/fft.hpp"
#include "cmvres/grid_kernels.hpp"
#include "json.hpp"

namespace cmvres {

void CircleGrid::check_size(std::size_t m) {
  if (m < 16 || !is_power_of_two(m))
    throw std::invalid_argument("CircleGrid: size must be a power of two >= 16");
}

std::string ReconstructionResult::to_json() const {
  nlohmann::json j;
  j["alpha_hat"] = nlohmann::json::array();
  for (const auto& a : alpha_hat) j["alpha_hat"].push_back({a.real(), a.imag()});
  j["residuals"] = residuals;
  j["psi0_zero"] = psi0_zero;
  j["failed"] = failed;
  if (failed) j["failed_step"] = failed_step;
  return j.dump(2);
}

CircleGrid pi_on_circle(const ResonanceSet& set, std::size_t m) {
  CircleGrid::check_size(m);
  std::vector<Complex> zeros;
  std::vector<int> mults;
  for (const auto& e : set.zeros) {
    if (!(std::abs(e.location) > 1.0))
      throw std::domain_error("pi_on_circle: zero inside the closed unit disk");
    zeros.push_back(e.location);
    mults.push_back(e.multiplicity);
  }
  CircleGrid grid;
  const auto pts = kernels::unit_circle_points(m);
  kernels::pi_product_parallel(zeros, mults, pts, grid.values);
  return grid;
}

double psi0_zero_from_pi(const CircleGrid& grid) {
  double sum = 0.0;
  for (const auto& v : grid.values) {
    const double mag2 = std::norm(v);
    if (mag2 == 0.0) throw std::domain_error("psi0_zero_from_pi: zero grid value");
    sum += 1.0 / mag2;
  }
  return std::sqrt(sum / double(grid.values.size()));
}

CircleGrid m_on_circle(const CircleGrid& psi_grid) {
  const std::size_t m = psi_grid.size();
  CircleGrid::check_size(m);

  std::vector<Complex> w(m);
  for (std::size_t j = 0; j < m; ++j) {
    const double mag2 = std::norm(psi_grid.values[j]);
    if (mag2 == 0.0) throw std::domain_error("m_on_circle: psi_0 vanishes on grid");
    w[j] = 1.0 / mag2;
  }
  fft_inplace(w, /*inverse=*/false);

  const double w0 = w[0].real() / double(m);
  if (std::abs(w0 - 1.0) > 1e-6)
    throw std::runtime_error("m_on_circle: density mean differs from 1; psi_0 "
                             "is not normalized");

  // Taylor coefficients of m: c_0 = 1, c_n = 2 w_hat_n for 1 <= n < M/2;
  // the upper half of the spectrum carries only conjugate information.
  std::vector<Complex> coeff(m, Complex(0.0));
  coeff[0] = 1.0;
  for (std::size_t n = 1; n < m / 2; ++n) coeff[n] = 2.0 * w[n] / double(m);

  fft_inplace(coeff, /*inverse=*/true);  // unnormalized synthesis on the grid
  CircleGrid out;
  out.values = std::move(coeff);
  return out;
}

CircleGrid schur_phi0(const CircleGrid& m_grid) {
  const std::size_t m = m_grid.size();
  CircleGrid::check_size(m);
  const auto pts = kernels::unit_circle_points(m);
  CircleGrid out;
  out.values.resize(m);
  for (std::size_t j = 0; j < m; ++j) {
    const Complex mv = m_grid.values[j];
    if (mv == Complex(-1.0)) throw std::domain_error("schur_phi0: m = -1 on grid");
    out.values[j] = (mv - 1.0) / (mv + 1.0) * std::conj(pts[j]);
  }
  return out;
}

ReconstructionResult extract_verblunsky(const CircleGrid& phi0_grid,
                                        std::size_t n_max, double q) {
  if (n_max < 1) throw std::invalid_argument("extract_verblunsky: n_max >= 1");
  const std::size_t m = phi0_grid.size();
  CircleGrid::check_size(m);
  const auto pts = kernels::unit_circle_points(m);

  ReconstructionResult res;
  std::vector<Complex> phi = phi0_grid.values;
  std::vector<Complex> s;
  for (std::size_t k = 0; k < n_max; ++k) {
    // Gauss mean value: Phi_k(0) = grid mean of Phi_k
    const Complex a = -std::conj(kernels::grid_mean(phi));
    res.alpha_hat.push_back(a);
    if (!(std::abs(a) < 1.0)) {
      res.failed = true;
      res.failed_step = k + 1;
      res.residuals.push_back(0.0);
      break;
    }

    kernels::schur_map_parallel(a, phi, s);
    const double r_k = std::abs(kernels::grid_mean(s));
    res.residuals.push_back(r_k);

    // stopping rule: contractivity lost to data noise
    if (r_k > 1e-4 || std::abs(a) > 1.0 - 1.0 / (2.0 * q)) break;

    for (std::size_t j = 0; j < m; ++j) phi[j] = s[j] * std::conj(pts[j]);
  }
  return res;
}

ReconstructionResult reconstruct(const ResonanceSet& set, std::size_t m,
                                 std::size_t n_max, const ClassParams& params) {
  auto staged = [](const char* stage, auto&& fn) {
    try {
      return fn();
    } catch (const std::exception& ex) {
      throw std::runtime_error(std::string("reconstruct[") + stage + "]: " +
                               ex.what());
    }
  };

  const CircleGrid pi_grid =
      staged("pi_on_circle", [&] { return pi_on_circle(set, m); });
  const double psi0 =
      staged("psi0_zero_from_pi", [&] { return psi0_zero_from_pi(pi_grid); });

  CircleGrid psi_grid;
  psi_grid.values.resize(pi_grid.size());
  for (std::size_t j = 0; j < pi_grid.size(); ++j)
    psi_grid.values[j] = psi0 * pi_grid.values[j];

  const CircleGrid m_grid =
      staged("m_on_circle", [&] { return m_on_circle(psi_grid); });
  const CircleGrid phi_grid =
      staged("schur_phi0", [&] { return schur_phi0(m_grid); });
  ReconstructionResult res = staged("extract_verblunsky", [&] {
    return extract_verblunsky(phi_grid, n_max, params.q);
  });
  res.psi0_zero = psi0;
  return res;
}

}  // namespace cmvres
