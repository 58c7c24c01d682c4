#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace sa::cli {

struct RunConfig {
    int p = 3;
    std::vector<std::string> suites;  // empty: all
    int depth = 10;
    uint64_t seed = 1;
    std::string format = "markdown";  // json, markdown, csv
    std::string out;                  // empty: stdout
};

const std::vector<std::string>& suite_names();  // in dependency order
// Largest accepted prime: 13, or SUPERALG_MAX_P when set.
int max_prime();
// Throws usage_error ("p must be prime", unknown suite, depth > 12, ...).
void validate(const RunConfig& cfg);

struct Claim {
    std::string claim;    // the statement checked
    bool pass = false;
    std::string detail;   // certificate or first failure
};

struct SuiteReport {
    std::string name;
    std::string summary;  // one line, e.g. "blocks: 2, pairing {0,2},{1}"
    std::vector<Claim> claims;
    std::vector<std::string> table;  // optional extra lines (iso matrix)
    bool pass() const;
};

struct RunReport {
    RunConfig config;
    std::vector<SuiteReport> suites;  // sorted by suite order
    bool pass() const;
    // "suite: claim: detail" of the first failing claim, empty when all pass
    std::string first_failure() const;
};

SuiteReport run_suite(const std::string& name, const RunConfig& cfg);
// Runs the requested suites on a bounded worker pool; merged in suite order.
RunReport run(const RunConfig& cfg);
std::string render(const RunReport& r, const std::string& format);

struct CatalogueRow {
    std::string family;   // P, V, Vt, W, Wt, T
    int lambda = 0;
    int n = 0;
    int c = 0;            // tube parameter, 0 elsewhere
    int dim = 0;
    bool parity_shifted = false;
};
// Indecomposables by family with n <= n_max, each followed by its parity shift.
// n_max = 0 gives simples and projectives only.
std::vector<CatalogueRow> report_catalogue(int p, int n_max);
std::string render_catalogue(const std::vector<CatalogueRow>& rows, const std::string& format);

// Full command line entry: parses argv, writes the report, returns the exit code
// (0 pass, 1 claim failure, 2 usage).
int main_entry(int argc, char** argv);

}  // namespace sa::cli
