#ifndef CMVRES_RESONANCES_HPP
#define CMVRES_RESONANCES_HPP

#include <complex>
#include <cstddef>
#include <string>
#include <vector>

#include "cmvres/polynomial.hpp"
#include "cmvres/types.hpp"

namespace cmvres {

// Multiset of polynomial zeros; for class members all lie outside the
// closed unit disk.  Entries are kept sorted by (modulus, argument) so
// serialized output is canonical.
struct ResonanceSet {
  struct Entry {
    Complex location;
    int multiplicity;
  };
  std::vector<Entry> zeros;

  int total_multiplicity() const;

  std::string to_csv() const;
  std::string to_json() const;
  static ResonanceSet from_csv(const std::string& text);
  static ResonanceSet from_json(const std::string& text);

  void sort_canonical();
};

// Simultaneous (Aberth-Ehrlich) iteration on the monic normalization.
// Roots closer than 1e-8 are merged into a single entry with summed
// multiplicity.  Throws std::runtime_error on non-convergence.
ResonanceSet find_resonances(const ComplexPolynomial& pi, double tol = 1e-12);

// 1 + delta = (Q*L + e) / (Q*L + 1) with L = exp(log_growth_bound at |z| = e).
double resonance_free_radius(const ClassParams& params);

// Number of zeros (with multiplicity) in the open disk |z| < r.
int counting_function(const ResonanceSet& set, double r);

// sum of 1/|z_n| over zeros with |z_n| >= R, with multiplicity.
double inverse_moment(const ResonanceSet& set, double radius_r);

}  // namespace cmvres

#endif
