#ifndef CMVRES_GRID_KERNELS_HPP
#define CMVRES_GRID_KERNELS_HPP

#include <complex>
#include <cstddef>
#include <vector>

#include "cmvres/polynomial.hpp"

namespace cmvres::kernels {

using Complex = std::complex<double>;

// Points e^{2*pi*i*j/M}, j = 0..M-1 (counterclockwise orientation).
std::vector<Complex> unit_circle_points(std::size_t m);

// out[j] = prod_n (1 - pts[j]/zeros[n])^{mults[n]}.
// The serial versions are the reference implementations; the parallel ones
// must produce bitwise-identical output for every point.
void pi_product_serial(const std::vector<Complex>& zeros,
                       const std::vector<int>& mults,
                       const std::vector<Complex>& pts,
                       std::vector<Complex>& out);
void pi_product_parallel(const std::vector<Complex>& zeros,
                         const std::vector<int>& mults,
                         const std::vector<Complex>& pts,
                         std::vector<Complex>& out);

// out[j] = S(a, phi[j]) = (phi[j] + conj(a)) / (1 + a*phi[j]).
void schur_map_serial(Complex a, const std::vector<Complex>& phi,
                      std::vector<Complex>& out);
void schur_map_parallel(Complex a, const std::vector<Complex>& phi,
                        std::vector<Complex>& out);

// Horner evaluation of a polynomial on a set of points.
void poly_eval_serial(const ComplexPolynomial& p, const std::vector<Complex>& pts,
                      std::vector<Complex>& out);
void poly_eval_parallel(const ComplexPolynomial& p, const std::vector<Complex>& pts,
                        std::vector<Complex>& out);

// Sequential left-to-right mean; kept serial so grid reductions do not
// depend on the thread count.
Complex grid_mean(const std::vector<Complex>& values);

}  // namespace cmvres::kernels

#endif
