#include "zmom/config.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace zmom {

void RunConfig::validate_pairing(int field_degree, long long n_dprime) const {
    if (field_degree != n_dprime)
        throw std::invalid_argument(
            "field degree d=" + std::to_string(field_degree) +
            " does not match n''=" + std::to_string(n_dprime) +
            " of the chosen presentation; the pairing requires d = |N''|");
}

std::vector<int> parse_l_list(const std::string& text) {
    std::vector<int> out;
    std::stringstream ss(text);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        try {
            int l = std::stoi(tok);
            if (l < 1) throw std::invalid_argument("");
            out.push_back(l);
        } catch (...) {
            throw std::invalid_argument("bad l value '" + tok + "' (expect e.g. \"2,3\")");
        }
    }
    if (out.empty()) throw std::invalid_argument("empty l list");
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

namespace {

std::string trimmed(const std::string& s) {
    size_t a = 0, b = s.size();
    while (a < b && std::isspace((unsigned char)s[a])) ++a;
    while (b > a && std::isspace((unsigned char)s[b - 1])) --b;
    return s.substr(a, b - a);
}

bool parse_bool(const std::string& v) {
    if (v == "true" || v == "1" || v == "yes") return true;
    if (v == "false" || v == "0" || v == "no") return false;
    throw std::invalid_argument("bad boolean '" + v + "'");
}

} // namespace

void apply_config_line(RunConfig& cfg, const std::string& section, const std::string& key,
                       const std::string& value) {
    auto is = [&](const char* s, const char* k) { return section == s && key == k; };
    if (is("field", "poly")) cfg.poly = value;
    else if (is("field", "overrides")) cfg.overrides_path = value;
    else if (is("group", "preset")) cfg.preset_name = value;
    else if (is("group", "nprime")) cfg.nprime = value;
    else if (is("group", "file")) cfg.group_file = value;
    else if (is("theta", "theta1")) cfg.theta1 = Rational::parse(value);
    else if (is("theta", "theta2")) cfg.theta2 = Rational::parse(value);
    else if (is("theta", "theta3")) cfg.theta3 = Rational::parse(value);
    else if (is("theta", "theta4")) cfg.theta4 = Rational::parse(value);
    else if (is("theta", "mode")) cfg.mode = value;
    else if (is("run", "l")) cfg.l_list = parse_l_list(value);
    else if (is("run", "x")) cfg.x = std::stoull(value);
    else if (is("run", "pmax")) cfg.pmax = std::stoll(value);
    else if (is("run", "checkpoints")) cfg.checkpoints = std::stoi(value);
    else if (is("run", "max_degree")) cfg.max_degree = std::stoi(value);
    else if (is("run", "workers")) cfg.workers = std::stoi(value);
    else if (is("run", "seed")) cfg.seed = std::stoull(value);
    else if (is("run", "assume_ii")) cfg.assume_ii = parse_bool(value);
    else if (is("run", "cache")) cfg.cache_path = value;
    else if (is("run", "output")) cfg.output = value;
    else
        throw std::invalid_argument("unknown config key [" + section + "] " + key);
}

RunConfig load_config_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open config file: " + path);
    RunConfig cfg;
    std::string line, section;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        line = trimmed(line);
        if (line.empty()) continue;
        if (line.front() == '[' && line.back() == ']') {
            section = trimmed(line.substr(1, line.size() - 2));
            continue;
        }
        auto eq = line.find('=');
        if (eq == std::string::npos)
            throw std::runtime_error(path + ":" + std::to_string(lineno) +
                                     ": expected 'key = value'");
        try {
            apply_config_line(cfg, section, trimmed(line.substr(0, eq)),
                              trimmed(line.substr(eq + 1)));
        } catch (const std::exception& e) {
            throw std::runtime_error(path + ":" + std::to_string(lineno) + ": " + e.what());
        }
    }
    return cfg;
}

} // namespace zmom
