#pragma once

#include <string>
#include <vector>

#include "qtensor/dualcheck/decomposition.hpp"
#include "qtensor/psiphi/engine.hpp"
#include "qtensor/tensorspace/json.hpp"

namespace qtensor::cli {

/// Canonical bytes of a JSON document: compact, insertion-ordered keys, one
/// trailing newline.
std::string json_bytes(const tensorspace::Json& j);

/// Writes json_bytes(j) to path. Throws Error naming the path on I/O failure.
void write_json_file(const tensorspace::Json& j, const std::string& path);

/// JSON array of vector objects, in record order.
template <coeff::CoefficientField F>
tensorspace::Json records_json(const F& field, const std::vector<psiphi::MaximalVectorRecord<typename F::Scalar>>& recs) {
  tensorspace::Json arr = tensorspace::Json::array();
  for (const auto& rec : recs) arr.push_back(tensorspace::to_json(field, rec.vector));
  return arr;
}

template <coeff::CoefficientField F>
void export_json(const F& field, const std::vector<psiphi::MaximalVectorRecord<typename F::Scalar>>& recs,
                 const std::string& path) {
  write_json_file(records_json(field, recs), path);
}

inline void export_json(const dualcheck::DecompositionReport& report, const std::string& path) {
  write_json_file(dualcheck::to_json(report), path);
}

}  // namespace qtensor::cli
