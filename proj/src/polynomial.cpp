#include "cmvres/polynomial.hpp"

#include "json.hpp"

namespace cmvres {

std::string ComplexPolynomial::to_json() const {
  nlohmann::json j = nlohmann::json::array();
  for (const auto& c : coeffs) j.push_back({c.real(), c.imag()});
  return j.dump();
}

ComplexPolynomial ComplexPolynomial::from_json(const std::string& text) {
  auto j = nlohmann::json::parse(text);
  ComplexPolynomial p;
  for (const auto& pair : j)
    p.coeffs.emplace_back(pair.at(0).get<double>(), pair.at(1).get<double>());
  return p;
}

}  // namespace cmvres
