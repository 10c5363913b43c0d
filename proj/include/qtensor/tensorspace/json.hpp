#pragma once

#include <json.hpp>

#include "qtensor/coeff/field.hpp"
#include "qtensor/tensorspace/tensor_vector.hpp"

namespace qtensor::tensorspace {

using Json = nlohmann::ordered_json;

/// `{"n":..,"r":..,"terms":[{"idx":[..],"coeff":".."},..]}`, terms in
/// lexicographic order of idx.
template <coeff::CoefficientField F>
Json to_json(const F& field, const TensorVector<typename F::Scalar>& v) {
  Json terms = Json::array();
  for (const auto& [a, c] : v.terms()) {
    Json t;
    t["idx"] = a.letters();
    t["coeff"] = field.render(c);
    terms.push_back(std::move(t));
  }
  Json j;
  j["n"] = v.n();
  j["r"] = v.r();
  j["terms"] = std::move(terms);
  return j;
}

/// Inverse of to_json; throws ParseError on malformed input.
template <coeff::CoefficientField F>
TensorVector<typename F::Scalar> vector_from_json(const F& field, const Json& j) {
  using S = typename F::Scalar;
  try {
    const int n = j.at("n").get<int>();
    const int r = j.at("r").get<int>();
    typename TensorVector<S>::Terms terms;
    for (const auto& t : j.at("terms")) {
      IndexTuple a(t.at("idx").get<std::vector<int>>());
      if (!terms.emplace(a, field.parse(t.at("coeff").get<std::string>())).second)
        throw ParseError("duplicate index " + a.to_string());
    }
    return TensorVector<S>(n, r, std::move(terms));
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("malformed vector JSON: ") + e.what());
  }
}

}  // namespace qtensor::tensorspace
