#pragma once

#include <json.hpp>

#include "curalg/current_module.hpp"
#include "curalg/presentations.hpp"
#include "curalg/presolve.hpp"

namespace curalg {

using Json = nlohmann::ordered_json;

inline constexpr int kSchemaVersion = 1;

Json algebra_json(const ChevalleyAlgebra& g);

/// {schema_version, algebra, graded, t_cutoff, basis, action, generator};
/// action lists every nonzero x(x)t^s as [row, col, "p/q"] triples.
Json module_json(const CurrentModule& m);
/// Inverse of module_json. Throws std::invalid_argument on malformed input or
/// a schema_version mismatch.
CurrentModule module_from_json(const Json& j);

/// Sorted [grade, weight, multiplicity] rows.
Json character_json(const GradedCharacter& ch);
Json presentation_json(const ChevalleyAlgebra& g, const Presentation& p);
Json presentation_report_json(const PresentationReport& r);
Json certificate_json(const PresolveCertificate& c);

}  // namespace curalg
