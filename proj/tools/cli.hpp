#ifndef QCD_CLI_HPP
#define QCD_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace qcd::cli {

enum class OutputFormat { json, csv };

// Run-wide settings; QCD_TOL in the environment overrides the default
// tolerance, an explicit --tol flag overrides both.
struct RunConfig {
    double tolerance = 1e-9;
    int grid_n = 512;
    double fd_step = 1e-5;
    OutputFormat output_format = OutputFormat::json;
    std::string output_path; // empty: write to the out stream
};

// Dispatch a full command line (without argv[0]).
// Exit codes: 0 success, 1 usage or domain error, 2 numeric non-convergence.
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

} // namespace qcd::cli

#endif
