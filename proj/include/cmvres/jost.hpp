#ifndef CMVRES_JOST_HPP
#define CMVRES_JOST_HPP

#include <array>
#include <complex>
#include <cstddef>
#include <vector>

#include "cmvres/polynomial.hpp"
#include "cmvres/types.hpp"

namespace cmvres {

// Values F(z,k) of the Volterra-type system, k = 0..kmax.
// F(z,k) = (1,0) exactly beyond the last nonzero coefficient.
struct JostValues {
  Complex z;
  std::vector<std::array<Complex, 2>> f;
};

// Backward substitution through the Volterra-type equations; exact finite
// sums for truncated sequences.
JostValues solve_jost(const VerblunskySequence& seq, Complex z, std::size_t kmax);

// beta(z,k) * exp(beta(z,k)) with
// beta(z,k) = sum_{n>k} |alpha_n| max(1, |z|^{2n-1});
// an upper bound on ||F(z,k) - (1,0)||.
double tail_bound(const VerblunskySequence& seq, Complex z, std::size_t k);

// psi_0(z) = C_0 (F_1(z,0) - F_2(z,0)).
Complex jost_function(const VerblunskySequence& seq, Complex z);

// The normalized Jost function Pi = psi_0 / psi_0(0) as an exact
// polynomial, computed by running the backward recursion over
// polynomial-valued unknowns.  Pi(0) = 1.
ComplexPolynomial pi_polynomial(const VerblunskySequence& seq);

// Right side of the growth envelope
// log|Pi(z)| <= log(sqrt(2) Q) + C + (log 2|z|^2)^{gamma/(gamma-1)},
// valid for |z| >= 1.
double log_growth_bound(Complex z, const ClassParams& params);

}  // namespace cmvres

#endif
