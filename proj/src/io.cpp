#include "predsched/io.hpp"

#include <array>
#include <fstream>
#include <sstream>

#include <openssl/evp.h>

#include "predsched/error.hpp"

namespace predsched::io {

using nlohmann::json;

namespace {

Rational rational_field(const json& job, const char* key, std::size_t index) {
    if (!job.contains(key)) {
        throw InvalidInput("instance: job " + std::to_string(index) + " lacks field '" + key + "'");
    }
    const json& v = job.at(key);
    if (v.is_string()) return Rational::parse(v.get<std::string>());
    if (v.is_number_integer()) return Rational(v.get<long>());
    throw InvalidInput("instance: job " + std::to_string(index) + " field '" + key + "' must be a rational string");
}

}  // namespace

Instance instance_from_json(const json& doc) {
    if (!doc.is_object()) throw InvalidInput("instance: document must be an object");
    if (!doc.contains("m") || !doc.at("m").is_number_integer()) throw InvalidInput("instance: 'm' must be an integer");
    if (!doc.contains("jobs") || !doc.at("jobs").is_array()) throw InvalidInput("instance: 'jobs' must be an array");
    std::vector<Rational> p;
    std::vector<Rational> q;
    const auto& jobs = doc.at("jobs");
    for (std::size_t j = 0; j < jobs.size(); ++j) {
        if (!jobs[j].is_object()) throw InvalidInput("instance: job " + std::to_string(j) + " must be an object");
        p.push_back(rational_field(jobs[j], "p", j));
        q.push_back(rational_field(jobs[j], "q", j));
    }
    return Instance(doc.at("m").get<int>(), std::move(p), std::move(q));
}

Instance parse_instance(std::string_view text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw InvalidInput(std::string("instance: malformed JSON: ") + e.what());
    }
    return instance_from_json(doc);
}

Instance read_instance(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw InvalidInput("instance: cannot open " + path.string());
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_instance(buf.str());
}

json instance_to_json(const Instance& instance) {
    json jobs = json::array();
    for (const auto& j : instance.jobs()) jobs.push_back({{"p", j.actual.str()}, {"q", j.predicted.str()}});
    return {{"m", instance.machines()}, {"jobs", std::move(jobs)}};
}

void write_instance(const std::filesystem::path& path, const Instance& instance) {
    std::ofstream out(path);
    if (!out) throw InvalidInput("instance: cannot write " + path.string());
    out << instance_to_json(instance).dump(2) << '\n';
}

std::string canonical_instance(const Instance& instance) { return instance_to_json(instance).dump(); }

std::string instance_digest(const Instance& instance) {
    const std::string text = canonical_instance(instance);
    std::array<unsigned char, EVP_MAX_MD_SIZE> md{};
    unsigned int len = 0;
    EVP_Digest(text.data(), text.size(), md.data(), &len, EVP_sha256(), nullptr);
    static constexpr char hex[] = "0123456789abcdef";
    std::string out;
    out.reserve(2 * len);
    for (unsigned int i = 0; i < len; ++i) {
        out.push_back(hex[md[i] >> 4]);
        out.push_back(hex[md[i] & 0xf]);
    }
    return out;
}

json to_json(const NonPreemptiveSchedule& schedule) {
    json out = json::array();
    for (std::size_t j = 0; j < schedule.assignments.size(); ++j) {
        const auto& a = schedule.assignments[j];
        out.push_back({{"job", j}, {"machine", a.machine}, {"start", a.start.str()}});
    }
    return out;
}

json to_json(const FluidSchedule& schedule) {
    json intervals = json::array();
    for (std::size_t k = 0; k < schedule.intervals.size(); ++k) {
        json speeds = json::object();
        for (const auto& [job, s] : schedule.intervals[k]) speeds[std::to_string(job)] = s.str();
        intervals.push_back({{"start", schedule.breakpoints[k].str()},
                             {"end", schedule.breakpoints[k + 1].str()},
                             {"speeds", std::move(speeds)}});
    }
    return intervals;
}

json to_json(const DiscretePreemptiveSchedule& schedule) {
    json out = json::array();
    for (const auto& s : schedule.segments) {
        out.push_back({{"job", s.job}, {"machine", s.machine}, {"start", s.start.str()}, {"end", s.end.str()}});
    }
    return out;
}

}  // namespace predsched::io
