#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include <nlohmann/json.hpp>

#include "predsched/instance.hpp"
#include "predsched/schedule.hpp"

namespace predsched::io {

/// Instance file format: {"m": <int>, "jobs": [{"p": "<rational>", "q": "<rational>"}, ...]}.
/// Rationals may also be given as JSON integers. Throws InvalidInput.
Instance instance_from_json(const nlohmann::json& doc);
Instance parse_instance(std::string_view text);
Instance read_instance(const std::filesystem::path& path);

nlohmann::json instance_to_json(const Instance& instance);
void write_instance(const std::filesystem::path& path, const Instance& instance);

/// Compact JSON with canonical rational strings; the digest input.
std::string canonical_instance(const Instance& instance);

/// Lowercase hex SHA-256 of canonical_instance().
std::string instance_digest(const Instance& instance);

nlohmann::json to_json(const NonPreemptiveSchedule& schedule);
nlohmann::json to_json(const FluidSchedule& schedule);
nlohmann::json to_json(const DiscretePreemptiveSchedule& schedule);

}  // namespace predsched::io
