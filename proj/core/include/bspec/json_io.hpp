#pragma once

#include <nlohmann/json.hpp>

#include "bspec/lemmas.hpp"
#include "bspec/spectra.hpp"
#include "bspec/structure.hpp"

namespace bspec {

using nlohmann::json;

// Field elements are written as integer codes; matrices as arrays of rows.

void to_json(json& j, const Fq& x);
void to_json(json& j, const Matrix& m);
void to_json(json& j, const Poly& p);
void to_json(json& j, const VecSubspace& s);
void to_json(json& j, const MatSubspace& s);
void to_json(json& j, const SpectrumProfile& p);
void to_json(json& j, const SpaceVerdict& v);
void to_json(json& j, const AdaptedScanReport& r);
void to_json(json& j, const HurdleSearch& h);
void to_json(json& j, const LemmaVerdict& v);
void to_json(json& j, const TrialRecord& t);
void to_json(json& j, const HarnessReport& r);

json vec_json(std::span<const Fq> v);

/// Throws std::invalid_argument on malformed input.
Vec vec_from_json(Field f, const json& j);
Matrix matrix_from_json(Field f, const json& j);
/// {"rows": r, "cols": c, "basis": [matrix, ...]}; the basis need not be independent.
MatSubspace space_from_json(Field f, const json& j);

/// Copy with every "timing_ms" member removed, at any depth.
json strip_timing(const json& j);

}  // namespace bspec
