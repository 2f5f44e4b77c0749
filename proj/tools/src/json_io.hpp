#pragma once

#include "spinharm/double_valued.hpp"
#include "spinharm/harmonic.hpp"
#include "spinharm/ladder.hpp"
#include "spinharm/oracle.hpp"

#include <json.hpp>

#include <string>

namespace spinharm {

using Json = nlohmann::ordered_json;

/// Term list as [{coeff: {re: "p/q", im: "p/q"}, sin2, cos, phi2}, ...] with
/// sin2 and phi2 twice the actual (half-integer) values.
Json expr_to_json(const TrigExpr& e);

/// {l2, m2, poly, exprJSON, normSq: {rat, pi, pi2}, normConst, phiPeriodPi}.
/// poly is dense, lowest degree first, exact strings.
Json harmonic_to_json(const Harmonic& h);

/// {l2, m2, dir, outcome, constant?, k?, scale?, residualNonzero}.
Json classification_to_json(const LadderResult& r);

/// {op, l2, m2, maxRelError, worstTheta, worstPhi, samples, h,
///  symbolicZero, maxAbsError}.
Json oracle_to_json(const QuantumNumbers& qn, const OracleReport& r);

/// {l2, m2, ratioError2pi, ratioError4pi, abs2Spread, samples}.
Json double_valued_to_json(const DoubleValuedReport& r);

/// Writes pretty-printed UTF-8 JSON with a trailing newline.
void write_json_file(const std::string& path, const Json& j);

}  // namespace spinharm
