#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "levyvar/config/config.hpp"

namespace levyvar::cli {

// "1,2,3" -> {1, 2, 3}; rejects empty fields and trailing garbage.
Vec parse_vec_arg(const std::string& csv);
std::vector<int> parse_int_list(const std::string& csv);

struct SymbolArgs {
    std::string model;
    std::string x;   // empty = origin
    std::string xi;
};

struct IndexArgs {
    std::string model;
    std::string kind;  // beta1 | beta2 | spot | loc | unif
    std::string at;    // required by spot and loc
};

struct SimulateArgs {
    std::string model;
    int level = 10;
    double horizon = 0.0;  // 0 = model default
    int paths = 1;
    std::string format = "csv";  // csv | bin
};

struct PvarArgs {
    std::string input;   // CSV path mode
    std::string model;   // refinement-estimate mode
    std::vector<double> p;
    std::string levels = "6,9,12";
    int paths = 16;
    int coordinate = -1;  // -1 = full vector path
};

struct ExperimentArgs {
    std::string id;
    std::vector<std::string> overrides;  // key=json-value
};

void run_symbol(const config::Config& cfg, const SymbolArgs& args, std::ostream& os);
void run_index(const config::Config& cfg, const IndexArgs& args, std::ostream& os);
void run_simulate(const config::Config& cfg, const SimulateArgs& args, std::ostream& os);
void run_pvar(const config::Config& cfg, const PvarArgs& args, int workers, std::ostream& os);

// Return the process exit code: 0 on pass, 4 on a FAIL verdict.
int run_experiment_cmd(const config::Config& cfg, const ExperimentArgs& args, int workers,
                       std::ostream& os);
int run_suite_cmd(const config::Config& cfg, int workers, std::ostream& os);

}  // namespace levyvar::cli
