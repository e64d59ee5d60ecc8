#pragma once

#include <optional>
#include <string>

#include "json.hpp"

#include "bssbp/bss_machine.hpp"
#include "bssbp/instance.hpp"
#include "bssbp/optimizer.hpp"
#include "bssbp/reduction.hpp"
#include "bssbp/turing_gap.hpp"

namespace bssbp {

// Insertion-ordered documents keep emitted files byte-stable.
using Json = nlohmann::ordered_json;

// Exact values render as "p/q" strings and {a,b,d} objects. With approx set,
// every numeric value renders instead as a decimal string of the given
// precision; nothing else about the document changes.
struct Rendering {
  bool approx = false;
  unsigned digits = 0;
};

Json rational_json(const Rational& r, const Rendering& mode = {});
Rational parse_rational(const Json& j);
Json quadratic_json(const QuadraticNumber& q, const Rendering& mode = {});
QuadraticNumber parse_quadratic(const Json& j);

Json instance_json(const RealInstance& inst);
Json instance_json(const ComplexInstance& inst);
bool is_complex_instance(const Json& j);  // keyed on "A_re"
RealInstance parse_real_instance(const Json& j);
ComplexInstance parse_complex_instance(const Json& j);

Json polynomial_json(const MultivariatePolynomial& p, const Rendering& mode = {});
Json reduced_json(const ReducedProblem& rp, const Rendering& mode = {});

// Result document {"status","objective","point","active_set","certificate_ok",
// "multipliers","degenerate"}. Complex points render as {re,im} pairs.
Json solution_json(const Solution& sol, std::optional<bool> certificate_ok,
                   const Rendering& mode = {});

Json feasibility_json(const FeasibilityReport& rep, const Rendering& mode = {});
Json bracket_json(const OracleBracket& br, const Rendering& mode = {});

Json gap_report_json(const GapReport& rep, const Rendering& mode = {});
std::string gap_table(const GapReport& rep);

Json program_json(const BssProgram& prog);
BssProgram parse_program(const Json& j);

template <class Scalar>
Json run_result_json(const RunResult<Scalar>& res, const Rendering& mode = {});

// Wraps json syntax errors into ValidationError so the CLI exit code mapping
// stays uniform.
Json parse_document(const std::string& text);

}  // namespace bssbp
