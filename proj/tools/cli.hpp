#ifndef LAME3TRF_TOOLS_CLI_HPP
#define LAME3TRF_TOOLS_CLI_HPP

#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace lame3trf::cli
{

enum exit_code : int { success = 0, verification_failure = 1, usage_error = 2 };

struct RunConfig {
    std::string command;
    // verify target, or the sweep target
    std::string target;

    double rho = 0.5;
    double h = 1.0;
    double alpha = 3.0;
    double lambda = 0.0;
    double xi = 0.1;
    std::optional<double> z;
    int N = 40;
    double c0 = 1.0;
    std::vector<double> s{0.3, 0.2, 0.1};
    double gamma = 0.75;
    std::optional<int> K;
    int n_max = 2;
    std::optional<int> A_max;
    std::optional<int> nq;
    int M = 512;
    std::optional<double> tol;
    int op_power = 2;
    std::string format = "csv";
    std::string out;
    std::vector<std::string> axes;
};

// Runs the command line; results go to `out` (or the --out file), diagnostics and the
// PASS/FAIL summary go to `err`.
int run(int argc, const char *const *argv, std::ostream &out, std::ostream &err);

// Executes an already parsed configuration.
int run(const RunConfig &config, std::ostream &out, std::ostream &err);

} // namespace lame3trf::cli

#endif
