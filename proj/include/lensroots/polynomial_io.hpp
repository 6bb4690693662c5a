#pragma once

#include <string>

#include "json.hpp"
#include "lensroots/mixed_polynomial.hpp"

namespace lensroots {

/// {"terms":[{"nu":int,"mu":int,"re":float,"im":float}, ...]}
nlohmann::json to_json(const MixedPolynomial& f);
MixedPolynomial polynomial_from_json(const nlohmann::json& j);

/// Parses the canonical text form. Accepts terms such as `(1,-0.5) z^2 zb`,
/// `-0.5 zb^2`, `z`, `3`, joined by `+` or `-`.
MixedPolynomial parse_polynomial(const std::string& text);

}  // namespace lensroots
