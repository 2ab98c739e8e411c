#include "predsched/commands.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <ostream>
#include <sstream>

#include "predsched/adversary.hpp"
#include "predsched/bounds.hpp"
#include "predsched/error.hpp"
#include "predsched/io.hpp"
#include "predsched/lppt.hpp"
#include "predsched/oracles.hpp"
#include "predsched/pprr.hpp"

namespace predsched::cli {

using nlohmann::json;

namespace {

constexpr std::size_t kMaxCounterexamples = 5;

class Check {
public:
    explicit Check(std::string name) { result_.name = std::move(name); }

    void expect(bool ok, const std::function<std::string()>& describe) {
        ++result_.cases;
        if (ok) return;
        result_.passed = false;
        if (result_.counterexamples.size() < kMaxCounterexamples) result_.counterexamples.push_back(describe());
    }

    CheckResult take() { return std::move(result_); }

private:
    CheckResult result_;
};

std::string at(int m, const Rational& x) { return "m=" + std::to_string(m) + " x=" + x.str(); }

std::string pair_text(const BoundEvaluation& a, const BoundEvaluation& b) {
    return std::string(formula_id(a.formula)) + "=" + a.value.str() + " [" + a.piece + "], " +
           std::string(formula_id(b.formula)) + "=" + b.value.str() + " [" + b.piece + "]";
}

std::vector<CheckResult> sandwich_suite(const VerifyOptions& o, const std::vector<Rational>& grid) {
    Check lb_ub("lb_nonpreemptive <= ub_lppt_general");
    Check pre("lb_preemptive <= ub_pprr");
    Check two("ratio_lppt_m2 <= ub_lppt_general(2)");
    Check three("ratio_lppt_m3 <= ub_lppt_general(3)");
    for (int m = o.m_lo; m <= o.m_hi; ++m) {
        for (const auto& xv : grid) {
            const AlphaSquared x(xv);
            const auto a = lb_nonpreemptive(m, x);
            const auto b = ub_lppt_general(m, x);
            lb_ub.expect(a.value <= b.value, [&] { return at(m, xv) + ": " + pair_text(a, b); });
            const auto c = lb_preemptive(m, x);
            const auto d = ub_pprr(m, x);
            pre.expect(c.value <= d.value, [&] { return at(m, xv) + ": " + pair_text(c, d); });
        }
    }
    for (const auto& xv : grid) {
        const AlphaSquared x(xv);
        const auto f2 = ratio_lppt_m2(x);
        const auto g2 = ub_lppt_general(2, x);
        two.expect(f2.value <= g2.value, [&] { return at(2, xv) + ": " + pair_text(f2, g2); });
        const auto f3 = ratio_lppt_m3(x);
        const auto g3 = ub_lppt_general(3, x);
        three.expect(f3.value <= g3.value, [&] { return at(3, xv) + ": " + pair_text(f3, g3); });
    }
    return {lb_ub.take(), pre.take(), two.take(), three.take()};
}

std::vector<CheckResult> continuity_suite(const VerifyOptions& o, const std::vector<Rational>& grid) {
    Check cont("piecewise continuity at breakpoints");
    auto add = [&](Formula f, int m) {
        for (const auto& c : check_continuity(f, m)) {
            cont.expect(c.passed, [&] {
                return std::string(formula_id(f)) + " m=" + std::to_string(m) + " at " + c.breakpoint + ": " + c.left +
                       " vs " + c.right;
            });
        }
    };
    for (int m = o.m_lo; m <= o.m_hi; ++m) {
        add(Formula::LowerNonpreemptive, m);
        add(Formula::LpptGeneral, m);
    }
    add(Formula::LpptTwoMachines, 2);
    add(Formula::LpptThreeMachines, 3);

    Check mono("non-decreasing in x on the grid");
    auto monotone = [&](Formula f, int m) {
        std::optional<BoundEvaluation> prev;
        std::optional<Rational> prev_x;
        for (const auto& xv : grid) {
            auto cur = evaluate(f, m, AlphaSquared(xv));
            if (prev) {
                mono.expect(prev->value <= cur.value, [&] {
                    return std::string(formula_id(f)) + " m=" + std::to_string(m) + " drops from " + prev->value.str() +
                           " at x=" + prev_x->str() + " to " + cur.value.str() + " at x=" + xv.str();
                });
            }
            prev = std::move(cur);
            prev_x = xv;
        }
    };
    for (int m = o.m_lo; m <= o.m_hi; ++m) {
        monotone(Formula::LowerNonpreemptive, m);
        monotone(Formula::LpptGeneral, m);
        monotone(Formula::PprrUpper, m);
    }
    monotone(Formula::LpptTwoMachines, 2);
    monotone(Formula::LpptThreeMachines, 3);
    return {cont.take(), mono.take()};
}

std::vector<CheckResult> improvement_suite(const VerifyOptions& o, const std::vector<Rational>& grid) {
    Check np("lb_nonpreemptive >= prior_lb_nonpre");
    Check pre("lb_preemptive >= prior_lb_pre");
    for (int m = o.m_lo; m <= o.m_hi; ++m) {
        for (const auto& xv : grid) {
            const AlphaSquared x(xv);
            const auto a = lb_nonpreemptive(m, x);
            const auto b = prior_bounds(PriorKind::LowerNonpreemptive, m, x);
            np.expect(a.value >= b.value, [&] { return at(m, xv) + ": " + pair_text(a, b); });
            const auto c = lb_preemptive(m, x);
            const auto d = prior_bounds(PriorKind::LowerPreemptive, m, x);
            pre.expect(c.value >= d.value, [&] { return at(m, xv) + ": " + pair_text(c, d); });
        }
    }
    return {np.take(), pre.take()};
}

std::vector<CheckResult> optimality_suite(const VerifyOptions& o, const std::vector<Rational>& grid) {
    Check pre("lb_preemptive = ub_pprr where (m-1)x is an integer");
    Check flat("lb_nonpreemptive = ub_lppt_general = 2-1/m for x >= m");
    Check two("ratio_lppt_m2 = lb_nonpreemptive(2) for x^2 >= 2");
    Check three("ratio_lppt_m3 = lb_nonpreemptive(3) for x^2 >= 3");
    const Rational x_hi = grid.empty() ? Rational(10) : grid.back();
    for (int m = o.m_lo; m <= o.m_hi; ++m) {
        // x = k / (m-1) covers every point of [1, x_hi] with integral (m-1)x.
        const long k_hi = static_cast<long>((x_hi * Rational(m - 1)).floor().get_si());
        for (long k = m - 1; k <= k_hi; ++k) {
            const Rational xv(k, m - 1);
            const AlphaSquared x(xv);
            const auto a = lb_preemptive(m, x);
            const auto b = ub_pprr(m, x);
            pre.expect(a.value == b.value, [&] { return at(m, xv) + ": " + pair_text(a, b); });
        }
        for (const auto& xv : grid) {
            if (xv < Rational(m)) continue;
            const AlphaSquared x(xv);
            const auto a = lb_nonpreemptive(m, x);
            const auto b = ub_lppt_general(m, x);
            const Rational target = Rational(2) - Rational(1, m);
            flat.expect(a.value == target && b.value == target, [&] { return at(m, xv) + ": " + pair_text(a, b); });
        }
    }
    for (const auto& xv : grid) {
        const AlphaSquared x(xv);
        if (xv * xv >= Rational(2)) {
            const auto a = ratio_lppt_m2(x);
            const auto b = lb_nonpreemptive(2, x);
            two.expect(a.value == b.value, [&] { return at(2, xv) + ": " + pair_text(a, b); });
        }
        if (xv * xv >= Rational(3)) {
            const auto a = ratio_lppt_m3(x);
            const auto b = lb_nonpreemptive(3, x);
            three.expect(a.value == b.value, [&] { return at(3, xv) + ": " + pair_text(a, b); });
        }
    }
    return {pre.take(), flat.take(), two.take(), three.take()};
}

std::vector<Rational> x_caps(const Rational& x_max) {
    std::vector<Rational> caps;
    for (const Rational& c : {Rational(1), Rational(9, 8), Rational(5, 4), Rational(3, 2), Rational(2), Rational(3),
                              Rational(4), Rational(9)}) {
        if (c < x_max) caps.push_back(c);
    }
    caps.push_back(x_max);
    return caps;
}

std::vector<CheckResult> empirical_suite(const VerifyOptions& o) {
    const std::vector<Rational> caps = x_caps(o.x_max);
    Check valid("schedules valid");
    Check bound("ratio within guarantee");
    Check exact("optimum certified");
    Check general("ratio within ub_lppt_general");
    Check realize("fluid realization valid with equal makespan");
    Check perfect("ratio 1 under perfect predictions");
    for (int m = o.m_lo; m <= o.m_hi; ++m) {
        for (std::size_t i = 0; i < o.count; ++i) {
            GeneratorConfig g;
            g.machines = m;
            g.n_min = 1;
            g.n_max = o.n_max;
            g.x_max = caps[i % caps.size()];
            g.seed = o.seed * 1'000'003ULL + static_cast<std::uint64_t>(m) * 7'919ULL + i;
            const Instance inst = gen_random_instance(g);
            const std::string where = "m=" + std::to_string(m) + " instance " + io::canonical_instance(inst);
            const AlphaSquared x(alpha_squared_of_instance(inst));
            if (o.algorithm == Algorithm::Lppt) {
                const auto trace = run_lppt(inst);
                const auto v = validate_nonpreemptive(inst, trace.schedule);
                valid.expect(v.ok, [&] { return where + ": " + v.describe(); });
                const OptResult opt = opt_nonpreemptive(inst, o.node_budget);
                exact.expect(opt.optimal, [&] { return where; });
                const Rational ratio = makespan(inst, trace.schedule) / opt.makespan;
                const auto b = lppt_bound(m, x);
                bound.expect(ratio <= b.value, [&] { return where + ": ratio " + ratio.str() + " > " + b.value.str(); });
                const auto fn = ub_lppt_general(m, x);
                general.expect(ratio <= fn.value, [&] { return where + ": ratio " + ratio.str() + " > " + fn.value.str(); });
            } else {
                const auto run = run_pprr(inst);
                const auto v = validate_fluid(inst, run.fluid);
                valid.expect(v.ok, [&] { return where + ": " + v.describe(); });
                const Rational mk = makespan(run.fluid);
                const auto discrete = realize_fluid(run.fluid, m);
                const auto dv = validate_discrete(inst, discrete);
                realize.expect(dv.ok && makespan(discrete) == mk, [&] { return where + ": " + dv.describe(); });
                const Rational ratio = mk / opt_preemptive(inst).makespan;
                const auto b = pprr_bound(m, x);
                bound.expect(ratio <= b.value, [&] { return where + ": ratio " + ratio.str() + " > " + b.value.str(); });
                const Instance clean(m, inst.actual_times(), inst.actual_times());
                const Rational clean_ratio = makespan(run_pprr(clean).fluid) / opt_preemptive(clean).makespan;
                perfect.expect(clean_ratio == Rational(1), [&] { return where + ": ratio " + clean_ratio.str(); });
            }
        }
    }
    if (o.algorithm == Algorithm::Lppt) return {valid.take(), exact.take(), bound.take(), general.take()};
    return {valid.take(), realize.take(), bound.take(), perfect.take()};
}

json outcome_json(const SearchOutcome& s, Algorithm algorithm, const Rational& x_cap) {
    return {
        {"algorithm", algorithm_name(algorithm)},
        {"x_cap", x_cap.str()},
        {"best_ratio", s.best_ratio.str()},
        {"best_ratio_float", s.best_ratio.to_double()},
        {"alpha_squared", alpha_squared_of_instance(s.best).str()},
        {"bound", {{"formula", formula_id(s.bound.formula)}, {"value", s.bound.value.str()}, {"piece", s.bound.piece}}},
        {"evaluations", s.evaluations},
        {"instance_digest", io::instance_digest(s.best)},
        {"instance", io::instance_to_json(s.best)},
    };
}

std::string csv_row(const std::string& file, const RatioReport& r) {
    std::ostringstream os;
    os << file << ',' << r.digest << ',' << algorithm_name(r.algorithm) << ',' << r.algorithm_makespan << ','
       << r.optimal_makespan << ',' << r.ratio << ',' << format_float(r.ratio) << ',' << r.alpha_squared << ','
       << formula_id(r.bound.formula) << ',' << r.bound.value << ',' << '"' << r.bound.piece << '"' << ','
       << (r.compliant ? "true" : "false") << ',' << (r.optimum_exact ? "true" : "false");
    return os.str();
}

constexpr const char* kReportCsvHeader =
    "file,instance_digest,algorithm,algorithm_makespan,optimal_makespan,ratio,ratio_float,alpha_squared,"
    "bound_formula,bound_value,bound_piece,compliant,optimum_exact";

int report_exit_code(const RatioReport& r) {
    if (!r.optimum_exact) return kCheckFailed;
    return r.compliant ? kOk : kBoundViolation;
}

}  // namespace

std::optional<std::uint64_t> node_budget_from_env() {
    const char* raw = std::getenv("PREDSCHED_NODE_BUDGET");
    if (raw == nullptr || *raw == '\0') return std::nullopt;
    const std::string text(raw);
    if (text.find_first_not_of("0123456789") != std::string::npos) {
        throw InvalidInput("PREDSCHED_NODE_BUDGET must be a non-negative integer, got '" + text + "'");
    }
    return std::stoull(text);
}

std::vector<Rational> parse_grid(const std::string& spec) {
    std::vector<std::string> parts;
    std::stringstream ss(spec);
    std::string item;
    while (std::getline(ss, item, ':')) parts.push_back(item);
    if (parts.empty() || parts.size() > 3) throw InvalidInput("grid: expected START:STOP:STEP, got '" + spec + "'");
    const Rational start = Rational::parse(parts[0]);
    const Rational stop = parts.size() > 1 ? Rational::parse(parts[1]) : start;
    const Rational step = parts.size() > 2 ? Rational::parse(parts[2]) : Rational(1);
    if (step.sign() <= 0) throw InvalidInput("grid: step must be positive");
    if (stop < start) throw InvalidInput("grid: stop is below start");
    std::vector<Rational> points;
    for (Rational x = start; x <= stop; x += step) points.push_back(x);
    return points;
}

int simulate(const SimulateOptions& options, std::ostream& out, std::ostream& err) {
    std::optional<Instance> inst;
    try {
        inst = io::read_instance(options.instance);
    } catch (const InvalidInput& e) {
        err << "error: " << e.what() << '\n';
        return kInputError;
    }
    const RatioReport report = make_report(*inst, options.algorithm, options.node_budget);
    if (options.format == Format::Csv) {
        out << kReportCsvHeader << '\n' << csv_row(options.instance.filename().string(), report) << '\n';
    } else {
        json doc = to_json(report);
        if (options.include_schedule) {
            if (options.algorithm == Algorithm::Lppt) {
                doc["schedule"] = io::to_json(run_lppt(*inst).schedule);
            } else {
                const auto run = run_pprr(*inst);
                doc["fluid"] = io::to_json(run.fluid);
                doc["segments"] = io::to_json(realize_fluid(run.fluid, inst->machines()));
            }
        }
        out << doc.dump(2) << '\n';
    }
    if (!report.optimum_exact) err << "warning: node budget exhausted, optimum is only an upper bound\n";
    if (!report.compliant) err << "bound violation: ratio " << report.ratio << " > " << report.bound.value << '\n';
    return report_exit_code(report);
}

int bounds(const BoundsOptions& options, std::ostream& out, std::ostream& err) {
    const auto formula = formula_from_id(options.formula);
    if (!formula) {
        err << "error: unknown formula id '" << options.formula << "'\n";
        return kInputError;
    }
    std::vector<Rational> grid;
    try {
        grid = parse_grid(options.grid);
        std::vector<std::string> rows;
        for (const auto& xv : grid) {
            const auto b = evaluate(*formula, options.m, AlphaSquared(xv));
            rows.push_back(std::string(formula_id(*formula)) + ',' + std::to_string(options.m) + ',' + xv.str() + ',' +
                           b.value.str() + ',' + format_float(b.value) + ",\"" + b.piece + '"');
        }
        out << "formula,m,x,value,value_float,piece\n";
        for (const auto& row : rows) out << row << '\n';
    } catch (const InvalidInput& e) {
        err << "error: " << e.what() << '\n';
        return kInputError;
    }
    return kOk;
}

std::vector<CheckResult> run_suite(const VerifyOptions& options) {
    if (options.m_lo < 2 || options.m_hi < options.m_lo) throw InvalidInput("verify: bad machine range");
    if (options.suite == "empirical") return empirical_suite(options);
    const std::vector<Rational> grid = parse_grid(options.grid);
    if (!grid.empty() && grid.front() < Rational(1)) throw InvalidInput("verify: grid must start at x >= 1");
    if (options.suite == "sandwich") return sandwich_suite(options, grid);
    if (options.suite == "continuity") return continuity_suite(options, grid);
    if (options.suite == "improvement") return improvement_suite(options, grid);
    if (options.suite == "optimality") return optimality_suite(options, grid);
    throw InvalidInput("verify: unknown suite '" + options.suite + "'");
}

int verify(const VerifyOptions& options, std::ostream& out, std::ostream& err) {
    std::vector<CheckResult> results;
    try {
        results = run_suite(options);
    } catch (const InvalidInput& e) {
        err << "error: " << e.what() << '\n';
        return kInputError;
    }
    bool all = true;
    for (const auto& r : results) {
        out << (r.passed ? "PASS " : "FAIL ") << options.suite << ": " << r.name << " (" << r.cases << " cases)\n";
        for (const auto& c : r.counterexamples) out << "  counterexample: " << c << '\n';
        all = all && r.passed;
    }
    return all ? kOk : kCheckFailed;
}

int search(const SearchOptions& options, std::ostream& out, std::ostream& err) {
    SearchConfig config;
    config.algorithm = options.algorithm;
    config.machines = options.m;
    config.x = options.x;
    config.n_max = options.n_max;
    config.budget = options.budget;
    config.seed = options.seed;
    config.threads = options.threads;
    config.node_budget = options.node_budget;
    try {
        const SearchOutcome outcome = local_search_worst_ratio(config);
        if (options.out) io::write_instance(*options.out, outcome.best);
        if (options.log) {
            std::ofstream log(*options.log);
            log << "iteration,ratio_float,accepted\n";
            for (const auto& e : outcome.log) {
                log << e.iteration << ',' << e.ratio << ',' << (e.accepted ? "true" : "false") << '\n';
            }
        }
        out << outcome_json(outcome, options.algorithm, options.x).dump(2) << '\n';
    } catch (const BoundViolation& v) {
        if (options.out) io::write_instance(*options.out, v.instance());
        err << "BOUND VIOLATION: " << v.what() << '\n';
        return kBoundViolation;
    } catch (const InvalidInput& e) {
        err << "error: " << e.what() << '\n';
        return kInputError;
    }
    return kOk;
}

int sweep(const SweepOptions& options, std::ostream& out, std::ostream& err) {
    std::error_code ec;
    if (!std::filesystem::is_directory(options.directory, ec)) {
        err << "error: not a directory: " << options.directory << '\n';
        return kInputError;
    }
    std::vector<std::filesystem::path> files;
    for (const auto& entry : std::filesystem::directory_iterator(options.directory)) {
        if (entry.is_regular_file() && entry.path().extension() == ".json") files.push_back(entry.path());
    }
    std::sort(files.begin(), files.end());

    bool violation = false;
    bool malformed = false;
    bool uncertified = false;
    json reports = json::array();
    if (options.format == Format::Csv) out << kReportCsvHeader << '\n';
    for (const auto& file : files) {
        try {
            const Instance inst = io::read_instance(file);
            const RatioReport r = make_report(inst, options.algorithm, options.node_budget);
            violation = violation || !r.compliant;
            uncertified = uncertified || !r.optimum_exact;
            if (options.format == Format::Csv) {
                out << csv_row(file.filename().string(), r) << '\n';
            } else {
                json doc = to_json(r);
                doc["file"] = file.filename().string();
                reports.push_back(std::move(doc));
            }
        } catch (const InvalidInput& e) {
            malformed = true;
            err << "error: " << file.filename().string() << ": " << e.what() << '\n';
        }
    }
    if (options.format == Format::Json) out << reports.dump(2) << '\n';
    if (violation) return kBoundViolation;
    if (malformed) return kInputError;
    return uncertified ? kCheckFailed : kOk;
}

}  // namespace predsched::cli
