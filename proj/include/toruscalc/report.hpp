#pragma once

#include <json.hpp>

#include <string_view>

#include "toruscalc/coset.hpp"
#include "toruscalc/intmat.hpp"
#include "toruscalc/presentation.hpp"
#include "toruscalc/surgery.hpp"

namespace toruscalc {

/// All reports use insertion-ordered JSON so that identical inputs yield
/// byte-identical output.  Schema is stable per command: every field is
/// always present, null where inapplicable.
using Json = nlohmann::ordered_json;

/// A single integer entry: a JSON number when it fits in 64 bits, else its
/// decimal string.
Json json_int(const BigInt& v);

/// Invariant factors as a JSON array (d1 | d2 | ..., 0 for a Z summand).
Json json_invariants(const AbelianInvariants& a);

/// Row-major nested arrays.
Json json_matrix(const IntMatrix& m);

/// {status, index (null unless completed), cosets_defined, budget}.
Json json_outcome(const EnumerationOutcome& o);

/// One sphere verification: {command, claim, params, chi, h1, enumeration,
/// presentation, verdict, elapsed_ms}.  elapsed_ms is always null in the
/// report; timing goes to standard error so that reruns stay byte-identical.
Json verification_report(std::string_view command, std::string_view claim,
                         const SphereVerification& v);

}  // namespace toruscalc
