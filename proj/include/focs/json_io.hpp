#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>

#include "focs/canonical.hpp"
#include "focs/certify.hpp"
#include "focs/matrix.hpp"
#include "focs/pairgen.hpp"
#include "focs/spectral.hpp"
#include "focs/verify.hpp"
#include "json.hpp"

namespace focs {

using Json = nlohmann::ordered_json;

/// Parses text; malformed input throws kParse with a "line L, column C" diagnostic.
Json parse_json(std::string_view text);

Json scalar_to_json(const Scalar& x);
/// Accepts a scalar string or a JSON integer.
Scalar scalar_from_json(const Json& j);

/// {"rows": n, "cols": m, "entries": [[<scalar>, ...], ...]}
Json matrix_to_json(const Matrix& m);
Matrix matrix_from_json(const Json& j);

/// {"real": [{"lambda", "sizes"}], "nonreal": [{"sigma", "tau", "sizes"}]}
Json spec_to_json(const JordanSpec& spec);
JordanSpec spec_from_json(const Json& j);

/// [{"lambda": "1", "size": 2, "eps": 1}, ...]
Json signs_to_json(const SignCharacteristic& signs);
SignCharacteristic signs_from_json(const Json& j);

/// {"kind", "J", "P", "basis", "signs"} plus "spec" and, for i-FOCS output, "gamma".
Json canonical_to_json(const CanonicalPair& pair);

/// {"checks": {...}, "witness": {"check", "i", "j", "value", "expected"} | null}
Json certificate_to_json(const BasisCertificate& cert);

Json analysis_to_json(const Analysis& analysis);

/// Pair file: {"A": <matrix>, "H": <matrix>}.
std::pair<Matrix, Matrix> pair_from_json(const Json& j);
Json pair_to_json(const Matrix& a, const Matrix& h);

/// A JordanSpec document, optionally carrying "signs"; missing signs default to +1.
GeneratorRecipe recipe_from_json(const Json& j, std::uint64_t seed, int bound);
Json generated_to_json(const GeneratorRecipe& recipe, const GeneratedPair& pair);

}  // namespace focs
