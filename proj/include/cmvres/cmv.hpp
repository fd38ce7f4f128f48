#ifndef CMVRES_CMV_HPP
#define CMVRES_CMV_HPP

#include <array>
#include <complex>
#include <cstddef>
#include <vector>

#include "cmvres/types.hpp"

namespace cmvres {

using Mat2 = std::array<std::array<Complex, 2>, 2>;
using Vec2 = std::array<Complex, 2>;

// Finite section of the five-diagonal unitary U = V*W.  Entries vanish for
// |row - col| > 2.  The truncation boundary is closed with a unimodular
// coefficient so that the section is exactly unitary; rows and columns away
// from the last block coincide with the infinite matrix.
class BandedUnitary {
 public:
  BandedUnitary(std::size_t dim, std::vector<Complex> dense);

  std::size_t dim() const { return dim_; }

  Complex entry(std::size_t row, std::size_t col) const {
    return dense_[row * dim_ + col];
  }

  // Row-major dense storage, used for the resolvent solve.
  const std::vector<Complex>& dense() const { return dense_; }

 private:
  std::size_t dim_;
  std::vector<Complex> dense_;
};

// One of the fundamental solutions (u,v)(z,k), k = 0..K.
struct LatticeSolution {
  Complex z;
  std::vector<Vec2> values;
};

// Theta_k = [[-a, rho],[rho, conj(a)]], unitary for |a| < 1.
Mat2 theta_block(Complex alpha_k);

// Leading dim x dim principal section of U = V*W (dim even, >= 4).
BandedUnitary build_cmv_matrix(const VerblunskySequence& seq, std::size_t dim);

// Transfer matrix T(z,k) of the CMV recursion; det T = -1.
Mat2 transfer_matrix(Complex z, std::size_t k, const VerblunskySequence& seq);

// Solutions theta, phi with theta(z,0) = (-1,1), phi(z,0) = (1,1).
std::pair<LatticeSolution, LatticeSolution> fundamental_solutions(
    Complex z, std::size_t kmax, const VerblunskySequence& seq);

// m(z) = (1 + z*Phi_0(z)) / (1 - z*Phi_0(z)) via the backward Schur
// recursion started from the free tail.  Exact (up to rounding) for
// truncated sequences; accepts |z| = 1 as the boundary extension.
Complex m_forward_schur(const VerblunskySequence& seq, Complex z);

// Finite-section resolvent oracle: <delta_0, (U+z)(U-z)^{-1} delta_0>.
Complex m_finite_section(const VerblunskySequence& seq, Complex z, std::size_t dim);

// First n Taylor coefficients of m at 0, by Fourier analysis of
// m_forward_schur on a circle of radius < 1.
std::vector<Complex> m_taylor_coeffs(const VerblunskySequence& seq, std::size_t n);

}  // namespace cmvres

#endif
