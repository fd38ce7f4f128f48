#ifndef CMVRES_INVERSE_HPP
#define CMVRES_INVERSE_HPP

#include <complex>
#include <cstddef>
#include <string>
#include <vector>

#include "cmvres/resonances.hpp"
#include "cmvres/types.hpp"

namespace cmvres {

// Uniform samples of a function on the unit circle:
// values[j] = f(exp(2*pi*i*j/M)), M a power of two, M >= 16.
struct CircleGrid {
  std::vector<Complex> values;

  std::size_t size() const { return values.size(); }
  static void check_size(std::size_t m);
};

struct ReconstructionResult {
  std::vector<Complex> alpha_hat;
  std::vector<double> residuals;  // analyticity residual r_k per step
  double psi0_zero = 1.0;
  bool failed = false;            // |alpha_hat_k| >= 1 encountered
  std::size_t failed_step = 0;    // 1-based index of the failing step

  std::string to_json() const;
};

// Hadamard product Pi(z) = prod (1 - z/z_n) on the grid.  All zeros must
// lie strictly outside the closed unit disk.
CircleGrid pi_on_circle(const ResonanceSet& set, std::size_t m);

// psi_0(0) = sqrt of the grid mean of 1/|Pi|^2; positive by normalization.
double psi0_zero_from_pi(const CircleGrid& grid);

// Boundary values of m from psi_0 samples: the density w = 1/|psi_0|^2 is
// Fourier-analyzed, m's Taylor coefficients are c_0 = 1, c_n = 2*w_hat_n,
// and m is synthesized back on the grid.  Throws if |w_hat_0 - 1| > 1e-6
// (wrongly normalized input).
CircleGrid m_on_circle(const CircleGrid& psi_grid);

// Phi_0 = (m - 1) / ((m + 1) z) on the grid.
CircleGrid schur_phi0(const CircleGrid& m_grid);

// Schur algorithm on boundary values: alpha_hat_{k+1} = -conj(mean Phi_k),
// Phi_{k+1} = S(alpha_hat_{k+1}, Phi_k) e^{-it}.  Stops early if the
// analyticity residual exceeds 1e-4 or |alpha_hat| > 1 - 1/(2q).
ReconstructionResult extract_verblunsky(const CircleGrid& phi0_grid,
                                        std::size_t n_max, double q);

// Full pipeline: resonances -> Pi -> psi_0 -> m -> Phi_0 -> coefficients.
ReconstructionResult reconstruct(const ResonanceSet& set, std::size_t m,
                                 std::size_t n_max, const ClassParams& params);

}  // namespace cmvres

#endif
