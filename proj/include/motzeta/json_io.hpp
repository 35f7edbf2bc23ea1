#pragma once

#include "motzeta/motivic_series.hpp"
#include "motzeta/power_structure.hpp"
#include "motzeta/resolution.hpp"
#include "motzeta/topological_zeta.hpp"
#include "motzeta/zeta_engine.hpp"

#include <json.hpp>

#include <filesystem>
#include <string>

namespace motzeta::io {

using nlohmann::json;

// Integers are written as JSON numbers when they fit in 64 bits and as
// decimal strings otherwise; both forms are accepted on input.
json integer_to_json(const Integer& n);
Integer integer_from_json(const json& j, const std::string& where);

json to_json(const MotivicClass& c);
MotivicClass class_from_json(const json& j, const std::string& where = "class");

json to_json(const MotivicSeries& s);
MotivicSeries series_from_json(const json& j);

json to_json(const ExpCoefficients& b);
ExpCoefficients exp_coefficients_from_json(const json& j);

json to_json(const ResolutionData& res);
ResolutionData resolution_from_json(const json& j);

json to_json(const CyclotomicFactorization& z);
CyclotomicFactorization factorization_from_json(const json& j);

json to_json(const RationalFunctionS& rf);
RationalFunctionS rational_function_from_json(const json& j);

json to_json(const PoleReport& report);

json read_file(const std::filesystem::path& path);
/// Two-space indentation and a trailing newline; stable byte output.
std::string dump(const json& j);
void write_file(const std::filesystem::path& path, const json& j);

} // namespace motzeta::io
