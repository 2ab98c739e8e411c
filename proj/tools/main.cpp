// predsched: simulate LPPT / PPRR, evaluate competitive-ratio bounds, run
// invariant suites and adversarial searches.

#include <iostream>
#include <string>

#include "CLI11.hpp"

#include "predsched/commands.hpp"
#include "predsched/error.hpp"

namespace {

using predsched::Algorithm;
using predsched::Rational;
namespace cli = predsched::cli;

Algorithm to_algorithm(const std::string& name) {
    auto a = predsched::algorithm_from_name(name);
    if (!a) throw predsched::InvalidInput("unknown algorithm '" + name + "'");
    return *a;
}

cli::Format to_format(const std::string& name) {
    if (name == "json") return cli::Format::Json;
    if (name == "csv") return cli::Format::Csv;
    throw predsched::InvalidInput("unknown format '" + name + "'");
}

/// "LO:HI" or a single INT.
std::pair<int, int> to_range(const std::string& text) {
    const auto colon = text.find(':');
    if (colon == std::string::npos) {
        const int v = std::stoi(text);
        return {v, v};
    }
    return {std::stoi(text.substr(0, colon)), std::stoi(text.substr(colon + 1))};
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Non-clairvoyant scheduling with predictions: simulators, optima and bounds"};
    app.require_subcommand(1);

    std::string instance;
    std::string algorithm = "lppt";
    std::string format = "json";
    std::string x_text = "4";
    std::string grid;
    std::string m_range = "2:5";
    std::string dir;
    std::string out_path;
    std::string log_path;
    std::string formula;
    int m = 2;
    std::uint64_t seed = 1;
    std::uint64_t budget = 10'000;
    std::size_t n_max = 8;
    std::size_t count = 10'000;
    unsigned threads = 1;
    bool with_schedule = false;

    auto* sim = app.add_subcommand("simulate", "Run one algorithm on an instance and report its ratio");
    sim->add_option("--instance", instance, "Instance JSON file")->required();
    sim->add_option("--algorithm", algorithm, "lppt | pprr")->check(CLI::IsMember({"lppt", "pprr"}));
    sim->add_option("--format", format, "json | csv")->check(CLI::IsMember({"json", "csv"}));
    sim->add_flag("--schedule", with_schedule, "Include the produced schedule in JSON output");

    auto* bnd = app.add_subcommand("bounds", "Evaluate a bound formula over an alpha^2 grid (CSV)");
    bnd->add_option("formula", formula, "Formula id, e.g. ub_lppt_general or thm2")->required();
    bnd->add_option("--m", m, "Machine count");
    bnd->add_option("--grid", grid, "START:STOP:STEP over x = alpha^2");
    bnd->add_option("--x", x_text, "Single x = alpha^2 value");

    auto* ver = app.add_subcommand("verify", "Run an invariant suite");
    std::string suite;
    ver->add_option("suite", suite, "sandwich | continuity | improvement | optimality | empirical")->required();
    ver->add_option("--m", m_range, "Machine range LO:HI or a single INT");
    ver->add_option("--grid", grid, "START:STOP:STEP over x");
    ver->add_option("--algorithm", algorithm, "Algorithm for the empirical suite")->check(CLI::IsMember({"lppt", "pprr"}));
    ver->add_option("--count", count, "Random instances per machine count (empirical)");
    ver->add_option("--n-max", n_max, "Largest job count (empirical)");
    ver->add_option("--x", x_text, "Largest alpha^2 cap (empirical)");
    ver->add_option("--seed", seed, "Seed (empirical)");

    auto* srch = app.add_subcommand("search", "Adversarial local search for a worst-ratio instance");
    srch->add_option("--algorithm", algorithm, "lppt | pprr")->check(CLI::IsMember({"lppt", "pprr"}));
    srch->add_option("--m", m, "Machine count");
    srch->add_option("--x", x_text, "alpha^2 cap");
    srch->add_option("--n-max", n_max, "Largest job count");
    srch->add_option("--budget", budget, "Candidate evaluations");
    srch->add_option("--seed", seed, "Seed");
    srch->add_option("--threads", threads, "Evaluation workers (output is identical for any value)");
    srch->add_option("--out", out_path, "Write the best instance here");
    srch->add_option("--log", log_path, "Write the search log CSV here");

    auto* swp = app.add_subcommand("sweep", "Simulate every *.json instance in a directory");
    swp->add_option("--dir", dir, "Directory of instance files")->required();
    swp->add_option("--algorithm", algorithm, "lppt | pprr")->check(CLI::IsMember({"lppt", "pprr"}));
    swp->add_option("--format", format, "json | csv")->check(CLI::IsMember({"json", "csv"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : cli::kInputError;
    }

    try {
        const auto node_budget = cli::node_budget_from_env();
        if (sim->parsed()) {
            cli::SimulateOptions o;
            o.instance = instance;
            o.algorithm = to_algorithm(algorithm);
            o.format = to_format(format);
            o.include_schedule = with_schedule;
            o.node_budget = node_budget;
            return cli::simulate(o, std::cout, std::cerr);
        }
        if (bnd->parsed()) {
            cli::BoundsOptions o;
            o.formula = formula;
            o.m = m;
            o.grid = grid.empty() ? x_text : grid;
            return cli::bounds(o, std::cout, std::cerr);
        }
        if (ver->parsed()) {
            cli::VerifyOptions o;
            o.suite = suite;
            std::tie(o.m_lo, o.m_hi) = to_range(m_range);
            if (!grid.empty()) o.grid = grid;
            o.algorithm = to_algorithm(algorithm);
            o.count = count;
            o.n_max = n_max;
            o.x_max = ver->count("--x") ? Rational::parse(x_text) : Rational(9);
            o.seed = seed;
            o.node_budget = node_budget;
            return cli::verify(o, std::cout, std::cerr);
        }
        if (srch->parsed()) {
            cli::SearchOptions o;
            o.algorithm = to_algorithm(algorithm);
            o.m = m;
            o.x = Rational::parse(x_text);
            o.n_max = n_max;
            o.budget = budget;
            o.seed = seed;
            o.threads = threads;
            if (!out_path.empty()) o.out = out_path;
            if (!log_path.empty()) o.log = log_path;
            o.node_budget = node_budget;
            return cli::search(o, std::cout, std::cerr);
        }
        if (swp->parsed()) {
            cli::SweepOptions o;
            o.directory = dir;
            o.algorithm = to_algorithm(algorithm);
            o.format = to_format(format);
            o.node_budget = node_budget;
            return cli::sweep(o, std::cout, std::cerr);
        }
    } catch (const predsched::InvalidInput& e) {
        std::cerr << "error: " << e.what() << '\n';
        return cli::kInputError;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return cli::kInputError;
    }
    return cli::kInputError;
}
