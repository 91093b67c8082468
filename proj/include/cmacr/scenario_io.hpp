#ifndef CMACR_SCENARIO_IO_HPP
#define CMACR_SCENARIO_IO_HPP

#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "cmacr/binary.hpp"
#include "cmacr/cmacr_gaussian.hpp"
#include "cmacr/cognitive.hpp"
#include "cmacr/sim.hpp"

// JSON scenario files and the CSV dialect used by the CLI: comma separator,
// '.' decimal point, '#'-prefixed metadata comments, LF line endings,
// deterministic row order and float formatting.

namespace cmacr {

struct ScenarioError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// {"type":"cognitive", "p1_db":3, "p2_db":3, "p3_db":3,
//  "r3":0, "grid_n":64, "c1":0.5, "c2":0.5}          (c1/c2, r3, grid_n optional)
struct CognitiveScenarioFile {
    CogScenario scenario;
    double r3 = 0.0;
    int grid_n = 64;
    std::optional<double> c1, c2;  // required for the cognitive-links kind
};

// {"type":"gaussian", "p1_db":5, "p2_db":5, "p3_db":5,
//  "gamma2":5, "eta2":10, "grid_n":17}
struct GaussianScenarioFile {
    GaussianScenario scenario;
    int grid_n = 17;
};

// {"type":"binary", "eps1":0.05, "eps2":0.05, "eps3":0.2}
struct BinaryScenarioFile {
    BinaryScenario scenario;
};

// {"type":"sim", "eps1":..., "eps2":..., "eps3":..., "n":24, "k1":6, "k2":6,
//  "blocks":4, "trials":2000, "seed":1, "relay_decoder":"xor"}
struct SimScenarioFile {
    SimConfig config;
};

using ScenarioFile = std::variant<CognitiveScenarioFile, GaussianScenarioFile,
                                  BinaryScenarioFile, SimScenarioFile>;

// Parses and schema-validates a scenario document. Unknown or missing fields,
// wrong types and invariant violations raise ScenarioError.
ScenarioFile parse_scenario(const std::string& json_text);
ScenarioFile load_scenario(const std::string& path);

struct CsvTable {
    std::vector<std::string> comments;  // written as "# ..." lines
    std::vector<std::string> header;
    std::vector<std::vector<double>> rows;

    std::string to_string() const;
    void write(const std::string& path) const;
};

CsvTable boundary_to_csv(const RegionBoundary& b);

std::string tool_version();

}  // namespace cmacr

#endif
