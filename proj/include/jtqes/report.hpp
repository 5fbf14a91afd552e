#pragma once

#include <json.hpp>
#include <string>

#include "jtqes/bargmann.hpp"
#include "jtqes/fock_oracle.hpp"
#include "jtqes/qes_solver.hpp"
#include "jtqes/systems_catalog.hpp"

namespace jtqes::report {

using nlohmann::json;

inline constexpr const char* kSchemaVersion = "1.0";

/// Rationals are written as "num/den" strings.
json to_json(const Rational& r);
Rational rational_from_json(const json& j);
json to_json(const Polynomial& p);
Polynomial polynomial_from_json(const json& j);

json to_json(const RootEnclosure& e);
json to_json(const OracleValidation& o);
json to_json(const JuddianPoint& p);
json to_json(const JuddianResult& r);
json to_json(const SpectrumReport& r);
json to_json(const AlgebraReport& r);
json to_json(const ComparisonReport& r);
json to_json(const MappingRecord& r);
json to_json(const ArbitrationReport& r);
json to_json(const SystemComparison& r);

/// Top-level record skeleton with schema_version and command.
json record(const std::string& command);

}  // namespace jtqes::report
