#ifndef CMVRES_TYPES_HPP
#define CMVRES_TYPES_HPP

#include <complex>
#include <cstddef>
#include <string>
#include <vector>

namespace cmvres {

using Complex = std::complex<double>;

// Parameters (gamma, C, Q) of the coefficient class B0: decay exponent,
// decay constant, and distance-from-circle constant.
struct ClassParams {
  double gamma;  // > 1
  double cap_c;  // > 0
  double q;      // > 1

  ClassParams(double gamma_, double cap_c_, double q_);
};

// A finite sequence of Verblunsky coefficients alpha_1, ..., alpha_N
// together with its class parameters.  Indices beyond N are implicitly
// zero.  Note the 1-based indexing: alpha(k) for k = 1..size().
class VerblunskySequence {
 public:
  VerblunskySequence(std::vector<Complex> alpha, ClassParams params);

  std::size_t size() const { return alpha_.size(); }

  // 1-based access; k > size() yields 0.
  Complex alpha(std::size_t k) const {
    return (k >= 1 && k <= alpha_.size()) ? alpha_[k - 1] : Complex(0.0);
  }

  const std::vector<Complex>& coefficients() const { return alpha_; }
  const ClassParams& params() const { return params_; }

  std::string to_json() const;
  static VerblunskySequence from_json(const std::string& text);

 private:
  std::vector<Complex> alpha_;
  ClassParams params_;
};

// rho_k = sqrt(1 - |alpha_k|^2) and the tail products C_k = prod_{j>k} 1/rho_j.
struct RhoData {
  std::vector<double> rho;     // rho[k-1] = rho_k, k = 1..N
  std::vector<double> c_tail;  // c_tail[k] = C_k, k = 0..N
  double c0;                   // = C_0 >= 1
};

struct ValidationReport {
  bool decay_ok;           // |alpha_k| <= C exp(-k^gamma) for all k
  bool product_ok;         // prod (1 - |alpha_j|) >= 1/Q
  double product;          // computed prod (1 - |alpha_j|)
  double max_decay_ratio;  // max_k |alpha_k| exp(k^gamma) / C
  std::size_t worst_index; // index attaining max_decay_ratio (0 if empty)

  bool pass() const { return decay_ok && product_ok; }
};

// Non-throwing class membership check.
ValidationReport validate_class(const VerblunskySequence& seq);

RhoData rho_data(const VerblunskySequence& seq);

}  // namespace cmvres

#endif
