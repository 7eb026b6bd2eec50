#pragma once

// JSON encodings. Monomials are sorted arrays of [i, r, exp]; polynomials are
// arrays of {monomial, mult}; weights hold integers, or "n/d" strings when a
// coordinate is fractional.

#include <filesystem>
#include <string>

#include <json.hpp>

#include "qchar/fm.hpp"
#include "qchar/lweight.hpp"
#include "qchar/xseries.hpp"

namespace qchar {

using json = nlohmann::json;

json to_json(const LaurentMonomial& m);
json to_json(const YPolynomial& p);
json to_json(const RationalWeight& omega);
json to_json(const PsiMonomial& p);
json to_json(const QCharacter& qc);
json to_json(const RootSeries& s);
json to_json(const EigenEntry& e);
json to_json(const XFactorization& f);
json to_json(const TruncatedSeries& s);

/// The from_json functions throw std::runtime_error on any schema violation.
LaurentMonomial monomial_from_json(const json& j);
YPolynomial polynomial_from_json(const json& j);
RationalWeight weight_from_json(const json& j);
PsiMonomial psi_from_json(const json& j);
QCharacter qcharacter_from_json(const json& j);

/// Writes to a sibling temporary file and renames it into place.
void write_file_atomic(const std::filesystem::path& path, const std::string& contents);

} // namespace qchar
