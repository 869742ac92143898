#pragma once

#include <json.hpp>

#include <string>

#include "birkhoff/amodule.hpp"
#include "birkhoff/geometry.hpp"

namespace birkhoff {

using Json = nlohmann::ordered_json;

template <class K>
struct FieldTraits;

template <>
struct FieldTraits<Rational> {
  static constexpr const char* name = "rational";
  static constexpr bool prime = false;
};

template <>
struct FieldTraits<Fp> {
  static constexpr const char* name = "prime";
  static constexpr bool prime = true;
};

template <class K>
Json matrix_json(const Matrix<K>& a) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < a.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < a.cols(); ++j) row.push_back(a(i, j).str());
    rows.push_back(std::move(row));
  }
  return rows;
}

/// JSON record of a triple: field tag (with the prime when applicable), the
/// nilpotency bound, dimensions, and the three matrices with entries as
/// strings ("num/den" over the rationals, decimal residues over a prime
/// field).
template <class K>
Json amodule_json(const AModule<K>& a) {
  Json out;
  out["field"] = FieldTraits<K>::name;
  if constexpr (FieldTraits<K>::prime) out["prime"] = Fp::modulus();
  out["m"] = a.m;
  out["d0"] = a.d0();
  out["d1"] = a.d1();
  out["M0"] = matrix_json(a.m0);
  out["M1"] = matrix_json(a.m1);
  out["h"] = matrix_json(a.h);
  return out;
}

/// Versioned certificate record ("schema": 1) with stable key order.
Json certificate_json(const IrreducibilityCertificate& cert);

Json sweep_json(const SweepSummary& summary);

/// Serializes with 2-space indentation and a trailing newline.
std::string dump_json(const Json& j);

}  // namespace birkhoff
