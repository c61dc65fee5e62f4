#pragma once

#include <string>
#include <string_view>

#include <nlohmann/json.hpp>

#include "semihom/arith.hpp"
#include "semihom/contact.hpp"
#include "semihom/nash.hpp"
#include "semihom/oracle.hpp"
#include "semihom/resolution.hpp"
#include "semihom/spectral.hpp"

namespace semihom {

using Json = nlohmann::ordered_json;

// Integers are written as JSON numbers when they fit in int64 and as decimal
// strings otherwise; readers accept either form.
Json integer_to_json(const Integer& v);
Integer integer_from_json(const Json& j);

void to_json(Json& j, const CoprimePair& p);
// Pairs and divisors have no default state; they are read as part of the
// enclosing chain, list or report.
void to_json(Json& j, const FgAbGroup& g);
void from_json(const Json& j, FgAbGroup& g);
void to_json(Json& j, const GradedGroup& g);
void from_json(const Json& j, GradedGroup& g);

void to_json(Json& j, const Divisor& v);
void to_json(Json& j, const ResolutionChain& c);
void from_json(const Json& j, ResolutionChain& c);
void to_json(Json& j, const MDivisor& v);
void to_json(Json& j, const MDivisorList& l);
void from_json(const Json& j, MDivisorList& l);

void to_json(Json& j, const GradedPiece& p);
void from_json(const Json& j, GradedPiece& p);
void to_json(Json& j, const MotivicClass& c);
void from_json(const Json& j, MotivicClass& c);

void to_json(Json& j, const SpectralPage& page);
void from_json(const Json& j, SpectralPage& page);
void to_json(Json& j, const ConditionReport& r);
void from_json(const Json& j, ConditionReport& r);
void to_json(Json& j, const FloerResult& r);
void from_json(const Json& j, FloerResult& r);
void to_json(Json& j, const PairClass& c);
void from_json(const Json& j, PairClass& c);
void to_json(Json& j, const ScatterRow& r);
void from_json(const Json& j, ScatterRow& r);

void to_json(Json& j, const ValuationReport& r);
void from_json(const Json& j, ValuationReport& r);

void to_json(Json& j, const SparseIntPoly& f);
void from_json(const Json& j, SparseIntPoly& f);
void to_json(Json& j, const BaseCounts& c);
void from_json(const Json& j, BaseCounts& c);
void to_json(Json& j, const JetCountReport& r);
void from_json(const Json& j, JetCountReport& r);

/// Accepts either the document form {n, terms: [{exps, coeff}]} (recognised by
/// a leading '{') or the inline grammar.
SparseIntPoly parse_polynomial_spec(std::string_view spec);

/// Two-space indented document with a trailing newline.
template <typename T>
std::string to_document(const T& value) {
  return Json(value).dump(2) + "\n";
}

template <typename T>
T from_document(std::string_view text) {
  return Json::parse(text).get<T>();
}

}  // namespace semihom
