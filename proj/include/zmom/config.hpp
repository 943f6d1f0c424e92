#pragma once

#include <optional>
#include <string>
#include <vector>

#include "zmom/rational.hpp"

namespace zmom {

// One flat config shared by every subcommand. File values load first, CLI
// flags override field by field.
struct RunConfig {
    // [field]
    std::string poly;
    std::string overrides_path;
    // [group]
    std::string preset_name;
    std::string nprime = "trivial";
    std::string group_file;
    // [theta]
    std::optional<Rational> theta1, theta2, theta3, theta4;
    std::string mode = "direct"; // direct | dedekind | both
    // [run]
    std::vector<int> l_list = {2};
    unsigned long long x = 0;
    long long pmax = 0;
    int checkpoints = 64;
    int max_degree = 5;
    int workers = 0;
    unsigned long long seed = 1;
    bool assume_ii = true;
    std::string cache_path;
    std::string output;

    void validate_pairing(int field_degree, long long n_dprime) const;
};

// Sections [field] [group] [theta] [run], lines "key = value", '#' comments.
RunConfig load_config_file(const std::string& path);
void apply_config_line(RunConfig& cfg, const std::string& section, const std::string& key,
                       const std::string& value);

std::vector<int> parse_l_list(const std::string& text);

} // namespace zmom
