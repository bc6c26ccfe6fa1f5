#ifndef PMP_JSON_IO_HPP
#define PMP_JSON_IO_HPP

#include <string>

#include <json.hpp>

#include "pmp/decompose.hpp"
#include "pmp/moments.hpp"
#include "pmp/monodromy.hpp"
#include "pmp/puiseux.hpp"
#include "pmp/verdict.hpp"

namespace pmp {

using Json = nlohmann::ordered_json;

inline constexpr const char* kToolVersion = "1.0.0";

/// Problem file schema:
///   {"field": {"modulus": [c0, ..., 1], "embedding": k},   // optional, Q default
///    "P": [...], "q": [...] | "Q": [...], "a": "...", "b": "..."}
/// Coefficients are scalar strings in the field grammar; plain JSON
/// integers are accepted too.
ProblemInstance parse_problem(const Json& j, std::string name = "");
ProblemInstance load_problem_file(const std::string& path);

Json problem_to_json(const ProblemInstance& inst);

Json scalar_to_json(const FieldElement& x);
Json poly_to_json(const FPoly& p);
Json cx_to_json(Cx z);
Json perm_to_json(const Permutation& p);

Json moment_report_to_json(const MomentReport& rep);
Json kernel_to_json(const MomentKernel& k);
Json certificate_to_json(const CompositionCertificate& cert);
Json monodromy_to_json(const MonodromyData& mono);
Json omega_to_json(const OmegaLabeling& lab);
Json puiseux_to_json(const PuiseuxSeries& s);
Json trace_to_json(const ProofTrace& t);
Json verdict_to_json(const ProblemInstance& inst, const Verdict& v);
Json cross_checks_to_json(const CrossChecks& cc);

/// Standard report envelope: tool version, instance echo, config echo.
Json report_envelope(const ProblemInstance& inst, const Json& config);

void write_json_file(const std::string& path, const Json& j);

}  // namespace pmp

#endif
