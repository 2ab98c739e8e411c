// Thin bindings; rationals cross the boundary as "a/b" strings and the
// Python package turns them into Fractions.

#include <optional>
#include <string>
#include <vector>

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "predsched/adversary.hpp"
#include "predsched/bounds.hpp"
#include "predsched/error.hpp"
#include "predsched/io.hpp"
#include "predsched/lppt.hpp"
#include "predsched/oracles.hpp"
#include "predsched/pprr.hpp"
#include "predsched/report.hpp"

namespace py = pybind11;
using namespace predsched;

namespace {

std::vector<Rational> parse_all(const std::vector<std::string>& v) {
    std::vector<Rational> out;
    out.reserve(v.size());
    for (const auto& s : v) out.push_back(Rational::parse(s));
    return out;
}

Instance make(int m, const std::vector<std::string>& p, const std::vector<std::string>& q) {
    return Instance(m, parse_all(p), parse_all(q));
}

Algorithm algorithm(const std::string& name) {
    auto a = algorithm_from_name(name);
    if (!a) throw InvalidInput("unknown algorithm '" + name + "'");
    return *a;
}

}  // namespace

PYBIND11_MODULE(_predsched, mod) {
    mod.doc() = "Exact LPPT/PPRR simulation, offline optima and ratio bounds";
    py::register_exception<InvalidInput>(mod, "InvalidInput", PyExc_ValueError);

    mod.def("parse_instance", [](const std::string& text) { return io::canonical_instance(io::parse_instance(text)); },
            py::arg("json_text"));
    mod.def("instance_digest", [](int m, const std::vector<std::string>& p, const std::vector<std::string>& q) {
        return io::instance_digest(make(m, p, q));
    });
    mod.def("alpha_squared", [](int m, const std::vector<std::string>& p, const std::vector<std::string>& q) {
        return alpha_squared_of_instance(make(m, p, q)).str();
    });

    mod.def("lppt", [](int m, const std::vector<std::string>& p, const std::vector<std::string>& q) {
        const Instance inst = make(m, p, q);
        const auto trace = run_lppt(inst);
        return py::make_tuple(makespan(inst, trace.schedule).str(), io::to_json(trace.schedule).dump());
    });
    mod.def("pprr", [](int m, const std::vector<std::string>& p, const std::vector<std::string>& q, bool residual) {
        const Instance inst = make(m, p, q);
        PprrOptions o;
        o.residual_predictions = residual;
        const auto run = run_pprr(inst, o);
        return py::make_tuple(makespan(run.fluid).str(), io::to_json(realize_fluid(run.fluid, m)).dump());
    }, py::arg("m"), py::arg("p"), py::arg("q"), py::arg("residual") = false);
    mod.def("mandatory_count", [](int g, const std::vector<std::string>& q) {
        const auto v = parse_all(q);
        return compute_mandatory_count(g, v);
    });

    mod.def("opt_preemptive", [](int m, const std::vector<std::string>& p) {
        return opt_preemptive(make(m, p, p)).makespan.str();
    });
    mod.def("opt_nonpreemptive", [](int m, const std::vector<std::string>& p, std::optional<std::uint64_t> budget) {
        const OptResult r = opt_nonpreemptive(make(m, p, p), budget);
        return py::make_tuple(r.makespan.str(), r.optimal);
    }, py::arg("m"), py::arg("p"), py::arg("node_budget") = py::none());

    mod.def("bound", [](const std::string& id, int m, const std::string& x) {
        const auto f = formula_from_id(id);
        if (!f) throw InvalidInput("unknown formula id '" + id + "'");
        const auto b = evaluate(*f, m, AlphaSquared(Rational::parse(x)));
        return py::make_tuple(b.value.str(), b.piece);
    });

    mod.def("report", [](int m, const std::vector<std::string>& p, const std::vector<std::string>& q, const std::string& alg) {
        return to_json(make_report(make(m, p, q), algorithm(alg))).dump();
    }, py::arg("m"), py::arg("p"), py::arg("q"), py::arg("algorithm") = "lppt");

    mod.def("worst_case_family_lppt", [](int m) { return io::canonical_instance(worst_case_family_lppt(m)); });

    mod.def("search", [](const std::string& alg, int m, const std::string& x, std::uint64_t budget, std::uint64_t seed) {
        SearchConfig c;
        c.algorithm = algorithm(alg);
        c.machines = m;
        c.x = Rational::parse(x);
        c.budget = budget;
        c.seed = seed;
        std::optional<SearchOutcome> s;
        {
            py::gil_scoped_release release;
            s = local_search_worst_ratio(c);
        }
        return py::make_tuple(s->best_ratio.str(), io::canonical_instance(s->best));
    }, py::arg("algorithm"), py::arg("m"), py::arg("x"), py::arg("budget") = 10'000, py::arg("seed") = 1);
}
