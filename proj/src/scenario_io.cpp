#include "cmacr/scenario_io.hpp"

#include <cstdio>
#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

namespace cmacr {

using nlohmann::json;

std::string tool_version() { return "cmacr 1.0.0"; }

namespace {

json parse_object(const std::string& text) {
    json j = json::parse(text, nullptr, false);
    if (j.is_discarded()) throw ScenarioError("scenario: invalid JSON");
    if (!j.is_object()) throw ScenarioError("scenario: top level must be an object");
    return j;
}

void reject_unknown(const json& j, const std::set<std::string>& allowed) {
    for (auto it = j.begin(); it != j.end(); ++it)
        if (!allowed.count(it.key()))
            throw ScenarioError("scenario: unknown field '" + it.key() + "'");
}

double need_number(const json& j, const std::string& key) {
    if (!j.contains(key))
        throw ScenarioError("scenario: missing field '" + key + "'");
    if (!j[key].is_number())
        throw ScenarioError("scenario: field '" + key + "' must be a number");
    return j[key].get<double>();
}

int need_int(const json& j, const std::string& key) {
    if (!j.contains(key))
        throw ScenarioError("scenario: missing field '" + key + "'");
    if (!j[key].is_number_integer())
        throw ScenarioError("scenario: field '" + key + "' must be an integer");
    return j[key].get<int>();
}

int opt_int(const json& j, const std::string& key, int dflt) {
    if (!j.contains(key)) return dflt;
    if (!j[key].is_number_integer())
        throw ScenarioError("scenario: field '" + key + "' must be an integer");
    return j[key].get<int>();
}

double opt_number(const json& j, const std::string& key, double dflt) {
    if (!j.contains(key)) return dflt;
    if (!j[key].is_number())
        throw ScenarioError("scenario: field '" + key + "' must be a number");
    return j[key].get<double>();
}

ScenarioFile parse_cognitive(const json& j) {
    reject_unknown(j, {"type", "p1_db", "p2_db", "p3_db", "r3", "grid_n", "c1",
                       "c2"});
    CognitiveScenarioFile f;
    f.scenario.p1 = db_to_linear(need_number(j, "p1_db"));
    f.scenario.p2 = db_to_linear(need_number(j, "p2_db"));
    f.scenario.p3 = db_to_linear(need_number(j, "p3_db"));
    f.r3 = opt_number(j, "r3", 0.0);
    f.grid_n = opt_int(j, "grid_n", 64);
    if (j.contains("c1")) f.c1 = need_number(j, "c1");
    if (j.contains("c2")) f.c2 = need_number(j, "c2");
    if (f.r3 < 0.0) throw ScenarioError("scenario: r3 must be >= 0");
    if (f.grid_n < 2) throw ScenarioError("scenario: grid_n must be >= 2");
    try {
        f.scenario.validate();
    } catch (const std::exception& e) {
        throw ScenarioError(std::string("scenario: ") + e.what());
    }
    return f;
}

ScenarioFile parse_gaussian(const json& j) {
    reject_unknown(j, {"type", "p1_db", "p2_db", "p3_db", "gamma2", "eta2",
                       "grid_n"});
    GaussianScenarioFile f;
    f.scenario.p1 = db_to_linear(need_number(j, "p1_db"));
    f.scenario.p2 = db_to_linear(need_number(j, "p2_db"));
    f.scenario.p3 = db_to_linear(need_number(j, "p3_db"));
    f.scenario.gamma2 = need_number(j, "gamma2");
    f.scenario.eta2 = need_number(j, "eta2");
    f.grid_n = opt_int(j, "grid_n", 17);
    if (f.grid_n < 2) throw ScenarioError("scenario: grid_n must be >= 2");
    try {
        f.scenario.validate();
    } catch (const std::exception& e) {
        throw ScenarioError(std::string("scenario: ") + e.what());
    }
    return f;
}

ScenarioFile parse_binary(const json& j) {
    reject_unknown(j, {"type", "eps1", "eps2", "eps3"});
    BinaryScenarioFile f;
    f.scenario.eps1 = need_number(j, "eps1");
    f.scenario.eps2 = need_number(j, "eps2");
    f.scenario.eps3 = need_number(j, "eps3");
    try {
        f.scenario.validate();
    } catch (const std::exception& e) {
        throw ScenarioError(std::string("scenario: ") + e.what());
    }
    return f;
}

ScenarioFile parse_sim(const json& j) {
    reject_unknown(j, {"type", "eps1", "eps2", "eps3", "n", "k1", "k2",
                       "blocks", "trials", "seed", "relay_decoder"});
    SimScenarioFile f;
    f.config.scenario.eps1 = need_number(j, "eps1");
    f.config.scenario.eps2 = need_number(j, "eps2");
    f.config.scenario.eps3 = need_number(j, "eps3");
    f.config.n = need_int(j, "n");
    f.config.k1 = need_int(j, "k1");
    f.config.k2 = need_int(j, "k2");
    f.config.blocks = need_int(j, "blocks");
    f.config.trials = need_int(j, "trials");
    if (!j.contains("seed") || !j["seed"].is_number_unsigned())
        throw ScenarioError("scenario: field 'seed' must be a non-negative integer");
    f.config.master_seed = j["seed"].get<uint64_t>();
    std::string dec = "xor";
    if (j.contains("relay_decoder")) {
        if (!j["relay_decoder"].is_string())
            throw ScenarioError("scenario: 'relay_decoder' must be a string");
        dec = j["relay_decoder"].get<std::string>();
    }
    if (dec == "xor")
        f.config.relay_decoder = RelayDecoder::xor_sum;
    else if (dec == "joint")
        f.config.relay_decoder = RelayDecoder::joint;
    else
        throw ScenarioError("scenario: relay_decoder must be 'xor' or 'joint'");
    // cap violations are resource errors, reported separately from schema
    // errors; leave them to SimConfig::validate at run time
    try {
        f.config.scenario.validate();
    } catch (const std::exception& e) {
        throw ScenarioError(std::string("scenario: ") + e.what());
    }
    return f;
}

}  // namespace

ScenarioFile parse_scenario(const std::string& json_text) {
    json j = parse_object(json_text);
    if (!j.contains("type") || !j["type"].is_string())
        throw ScenarioError("scenario: missing string field 'type'");
    const std::string type = j["type"].get<std::string>();
    if (type == "cognitive") return parse_cognitive(j);
    if (type == "gaussian") return parse_gaussian(j);
    if (type == "binary") return parse_binary(j);
    if (type == "sim") return parse_sim(j);
    throw ScenarioError("scenario: unknown type '" + type + "'");
}

ScenarioFile load_scenario(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ScenarioError("scenario: cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_scenario(ss.str());
}

std::string CsvTable::to_string() const {
    std::ostringstream os;
    for (const auto& c : comments) os << "# " << c << "\n";
    for (size_t i = 0; i < header.size(); ++i)
        os << header[i] << (i + 1 < header.size() ? "," : "");
    os << "\n";
    char buf[64];
    for (const auto& row : rows) {
        for (size_t i = 0; i < row.size(); ++i) {
            std::snprintf(buf, sizeof buf, "%.12g", row[i]);
            os << buf << (i + 1 < row.size() ? "," : "");
        }
        os << "\n";
    }
    return os.str();
}

void CsvTable::write(const std::string& path) const {
    std::ofstream out(path, std::ios::binary);  // keep LF endings everywhere
    if (!out) throw ScenarioError("csv: cannot open " + path + " for writing");
    out << to_string();
}

CsvTable boundary_to_csv(const RegionBoundary& b) {
    CsvTable t;
    t.comments.push_back(tool_version());
    t.comments.push_back("kind: " + b.kind);
    t.comments.push_back("scenario: " + b.scenario);
    {
        std::ostringstream os;
        os << "r3: " << b.r3;
        t.comments.push_back(os.str());
    }
    t.header = {"r1", "r2"};
    for (const auto& p : b.points) t.rows.push_back({p.r1, p.r2});
    return t;
}

}  // namespace cmacr
