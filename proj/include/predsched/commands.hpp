#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "predsched/rational.hpp"
#include "predsched/report.hpp"

namespace predsched::cli {

/// Process exit codes shared by every command.
enum ExitCode : int {
    kOk = 0,
    kCheckFailed = 1,
    kInputError = 2,
    kBoundViolation = 3,
};

/// Reads PREDSCHED_NODE_BUDGET; unset means the oracle default. Throws
/// InvalidInput on a non-numeric value.
std::optional<std::uint64_t> node_budget_from_env();

/// Parses "START:STOP:STEP" (or "START:STOP" with step 1, or a single
/// value) into the points START, START+STEP, ... <= STOP.
std::vector<Rational> parse_grid(const std::string& spec);

enum class Format { Json, Csv };

struct SimulateOptions {
    std::filesystem::path instance;
    Algorithm algorithm = Algorithm::Lppt;
    Format format = Format::Json;
    bool include_schedule = false;
    std::optional<std::uint64_t> node_budget;
};
int simulate(const SimulateOptions& options, std::ostream& out, std::ostream& err);

struct BoundsOptions {
    std::string formula;
    int m = 2;
    std::string grid = "1:12:1/32";
};
int bounds(const BoundsOptions& options, std::ostream& out, std::ostream& err);

struct CheckResult {
    std::string name;
    bool passed = true;
    std::size_t cases = 0;
    std::vector<std::string> counterexamples;
};

struct VerifyOptions {
    std::string suite;
    int m_lo = 2;
    int m_hi = 5;
    std::string grid = "1:12:1/32";
    Algorithm algorithm = Algorithm::Lppt;
    std::size_t count = 10'000;
    std::size_t n_max = 10;
    Rational x_max = 9;
    std::uint64_t seed = 1;
    std::optional<std::uint64_t> node_budget;
};

/// Runs one named suite (sandwich, continuity, improvement, optimality,
/// empirical) without printing. Throws InvalidInput for an unknown suite.
std::vector<CheckResult> run_suite(const VerifyOptions& options);
int verify(const VerifyOptions& options, std::ostream& out, std::ostream& err);

struct SearchOptions {
    Algorithm algorithm = Algorithm::Lppt;
    int m = 2;
    Rational x = 4;
    std::size_t n_max = 8;
    std::uint64_t budget = 10'000;
    std::uint64_t seed = 1;
    unsigned threads = 1;
    std::optional<std::filesystem::path> out;
    std::optional<std::filesystem::path> log;
    std::optional<std::uint64_t> node_budget;
};
int search(const SearchOptions& options, std::ostream& out, std::ostream& err);

struct SweepOptions {
    std::filesystem::path directory;
    Algorithm algorithm = Algorithm::Lppt;
    Format format = Format::Json;
    std::optional<std::uint64_t> node_budget;
};
int sweep(const SweepOptions& options, std::ostream& out, std::ostream& err);

}  // namespace predsched::cli
