#pragma once

// Subcommands of the verlinde_lab tool. Each returns a RunReport; the
// executable prints it as JSON (default) or as its CSV table and exits 0 iff
// every embedded check passed.

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "verlinde/serialization.hpp"
#include "verlinde/weights.hpp"

namespace verlinde::cli {

struct Check {
    std::string name;
    bool pass = false;
    std::string detail;
    std::optional<double> residual;
};

struct RunReport {
    std::string command;
    Json inputs = Json::object();
    Json outputs = Json::object();
    std::vector<Check> checks;
    std::vector<std::string> csv_header;
    std::vector<std::vector<std::string>> csv_rows;
    std::optional<double> elapsed_ms;

    bool passed() const;
    /// Description of the first failing check, if any.
    std::optional<std::string> first_failure() const;
    Json to_json() const;
    std::string to_csv() const;
};

/// Either a genus (all graph classes of that genus) or one graph file.
struct GraphSource {
    std::optional<int> genus;
    std::optional<std::string> graph_file;
};

struct GraphsOptions {
    int genus = 2;
    std::optional<std::string> out_dir;
};

struct CountOptions {
    GraphSource source;
    int level = 0;
    std::string method = "contract";  // brute | contract
    EnumerationLimits limits;
    std::optional<std::string> labels_out;
};

struct VerlindeOptions {
    int genus = 2;
    int level = 0;
    EnumerationLimits limits;
};

struct CheckOptions {
    int genus = 2;
    int max_level = 0;
    EnumerationLimits limits;
};

struct PolytopeOptions {
    GraphSource source;
    std::string mode = "volume-exact";  // volume-exact | volume-mc | asymptotics
    std::uint64_t samples = 1'000'000;
    std::uint64_t seed = 1;
    int k_max = 50;
    std::optional<std::string> polytope_out;
};

struct AbelianOptions {
    std::optional<int> genus;
    std::optional<int> level;
    std::optional<std::string> multisection_file;
    bool list = false;
};

RunReport cmd_graphs(const GraphsOptions& opts);
RunReport cmd_count(const CountOptions& opts);
RunReport cmd_verlinde(const VerlindeOptions& opts);
RunReport cmd_check(const CheckOptions& opts);
RunReport cmd_polytope(const PolytopeOptions& opts);
RunReport cmd_abelian(const AbelianOptions& opts);

/// Full command-line entry point. Exit codes: 0 all checks pass, 1 a check
/// failed or the computation raised, 2 usage error.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace verlinde::cli
