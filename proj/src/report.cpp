#include "builder/report.hpp"

#include <cstdio>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace builder {

namespace {

std::string format_double(double x) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.6g", x);
    return buf;
}

std::string stage_field(const std::vector<StageStat>& stages) {
    std::string out;
    for (size_t i = 0; i < stages.size(); ++i) {
        if (i) out += ';';
        out += stages[i].name + "=" + std::to_string(stages[i].rounds) + ":" +
               std::to_string(stages[i].accepts);
    }
    return out;
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : s) {
        if (c == sep) {
            out.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    out.push_back(cur);
    return out;
}

}  // namespace

uint64_t TrialReport::stage_rounds_total() const {
    uint64_t s = 0;
    for (const auto& st : stages) s += st.rounds;
    return s;
}

uint64_t TrialReport::stage_accepts_total() const {
    uint64_t s = 0;
    for (const auto& st : stages) s += st.accepts;
    return s;
}

std::string csv_header() {
    return "seed,n,d,mode,omega,eps,t_budget,b_budget,rounds_used,edges_accepted,"
           "stage,failed_stage,k_tested,connected,check_mode,witness_size,wallclock_ms";
}

std::string to_csv_row(const TrialReport& r) {
    std::ostringstream out;
    out << r.seed << ',' << r.n << ',' << r.d << ',' << r.mode << ',' << format_double(r.omega)
        << ',' << format_double(r.eps) << ',' << r.t_budget << ',' << r.b_budget << ','
        << r.rounds_used << ',' << r.edges_accepted << ',' << stage_field(r.stages) << ','
        << r.failed_stage << ',' << r.k_tested << ',' << (r.connected ? 1 : 0) << ','
        << r.check_mode << ',' << r.witness_size << ',' << r.wallclock_ms;
    return out.str();
}

std::string to_json_object(const TrialReport& r) {
    nlohmann::json j;
    j["seed"] = r.seed;
    j["n"] = r.n;
    j["d"] = r.d;
    j["mode"] = r.mode;
    j["omega"] = r.omega;
    j["eps"] = r.eps;
    j["t_budget"] = r.t_budget;
    j["b_budget"] = r.b_budget;
    j["rounds_used"] = r.rounds_used;
    j["edges_accepted"] = r.edges_accepted;
    j["stage"] = stage_field(r.stages);
    j["failed_stage"] = r.failed_stage;
    j["k_tested"] = r.k_tested;
    j["connected"] = r.connected ? 1 : 0;
    j["check_mode"] = r.check_mode;
    j["witness_size"] = r.witness_size;
    j["wallclock_ms"] = r.wallclock_ms;
    return j.dump();
}

TrialReport parse_csv_row(const std::string& line) {
    auto fields = split(line, ',');
    if (fields.size() != 17) throw std::invalid_argument("csv row: expected 17 fields");
    TrialReport r;
    r.seed = std::stoull(fields[0]);
    r.n = static_cast<uint32_t>(std::stoul(fields[1]));
    r.d = static_cast<uint32_t>(std::stoul(fields[2]));
    r.mode = fields[3];
    r.omega = std::stod(fields[4]);
    r.eps = std::stod(fields[5]);
    r.t_budget = std::stoull(fields[6]);
    r.b_budget = std::stoull(fields[7]);
    r.rounds_used = std::stoull(fields[8]);
    r.edges_accepted = std::stoull(fields[9]);
    for (const auto& part : split(fields[10], ';')) {
        if (part.empty()) continue;
        auto eq = part.find('=');
        auto colon = part.find(':', eq);
        if (eq == std::string::npos || colon == std::string::npos)
            throw std::invalid_argument("csv row: malformed stage field");
        r.stages.push_back({part.substr(0, eq),
                            std::stoull(part.substr(eq + 1, colon - eq - 1)),
                            std::stoull(part.substr(colon + 1))});
    }
    r.failed_stage = fields[11];
    r.k_tested = static_cast<uint32_t>(std::stoul(fields[12]));
    r.connected = fields[13] == "1";
    r.check_mode = fields[14];
    r.witness_size = std::stoll(fields[15]);
    r.wallclock_ms = std::stoull(fields[16]);
    return r;
}

}  // namespace builder
