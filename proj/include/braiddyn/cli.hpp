#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace braiddyn {

struct CliConfig {
    std::string command;  // classify, burau, automaton, estimate
    int n = 0;
    std::string word;
    bool has_word = false;
    double t = 0.0;
    int steps = 24;
    bool json = false;
    int max_iter = -1;
};

enum ExitCode { kOk = 0, kFailure = 1, kParseError = 2, kBadRank = 3 };

// 9 unless BRAIDDYN_PRECISION holds an integer in [0, 17].
int output_precision();
std::string format_real(double x, int precision);

int run_classify(const CliConfig& cfg, std::istream& in, std::ostream& out, std::ostream& err);
int run_burau(const CliConfig& cfg, std::ostream& out, std::ostream& err);
int run_dump(const CliConfig& cfg, std::ostream& out, std::ostream& err);
int run_estimate(const CliConfig& cfg, std::ostream& out, std::ostream& err);

// argv-style entry point; args[0] is the program name.
int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace braiddyn
