// Experiment configuration: a flat key = value description that fully
// determines every command's output. Serialized into the header comments of
// each output file so results can be reproduced from the file alone.

#pragma once

#include <cinttypes>
#include <cstdint>
#include <cstdio>
#include <istream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>

#include "gifc/trellis.hpp"

namespace gifc {

struct config_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct scheme_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// "iud:<bits>"  -> i.u.d. BPSK, <bits> symbols per section
// "conv:7,5"    -> feed-forward convolutional code, octal taps (bit k = D^k)
// "convbin:111,101" -> same code with explicit taps, D^0 first
inline Trellis parse_scheme(const std::string& s) {
    if (s.rfind("iud:", 0) == 0) {
        const std::string arg = s.substr(4);
        std::size_t used = 0;
        int bits = 0;
        try {
            bits = std::stoi(arg, &used);
        } catch (const std::exception&) {
            throw scheme_error("bad iud scheme \"" + s + "\"");
        }
        if (used != arg.size() || bits < 1 || bits > 16)
            throw scheme_error("bad iud scheme \"" + s + "\"");
        return build_iud_trellis(bits);
    }
    if (s.rfind("convbin:", 0) == 0) return build_conv_trellis(parse_generator_binary(s.substr(8)));
    if (s.rfind("conv:", 0) == 0) return build_conv_trellis(parse_generator_octal(s.substr(5)));
    throw scheme_error("unknown scheme \"" + s + "\" (expected iud:<bits>, conv:<octal>, convbin:<taps>)");
}

struct ExperimentConfig {
    // channel and schemes
    double p1_db = 7.0, p2_db = 7.0, a = 0.5;
    std::string scheme1 = "conv:7,5";
    std::string scheme2 = "iud:1";
    // estimation
    long long n_sections = 10000;
    int blocks = 10;
    std::optional<std::uint64_t> seed;  // required; never defaulted silently
    bool precise = false;
    // coding lab
    int lab_n = 6;
    int m1 = 2, m2 = 2;
    double gamma = 0.1;
    int trials = 200;
    double flip = 0.1;
    int codes = 50;
    std::string ic_file;    // optional channel table; empty = built-in flip channel
    std::string part = "joint";  // trellis dump: joint | 1 | 2
    // execution details, not part of the experiment identity
    int workers = 1;
    std::string out;

    void validate() const {
        if (!seed.has_value()) throw config_error("seed is required");
        if (n_sections < 1) throw config_error("n_sections must be positive");
        if (blocks < 1) throw config_error("blocks must be positive");
        if (workers < 1) throw config_error("workers must be positive");
        if (lab_n < 1) throw config_error("lab_n must be positive");
        if (m1 < 1 || m2 < 1) throw config_error("m1 and m2 must be positive");
        if (trials < 1) throw config_error("trials must be positive");
        if (codes < 1) throw config_error("codes must be positive");
        if (!(gamma > 0.0)) throw config_error("gamma must be positive");
        if (!(flip >= 0.0 && flip <= 1.0)) throw config_error("flip must be in [0,1]");
        if (part != "joint" && part != "1" && part != "2")
            throw config_error("part must be joint, 1 or 2");
    }
};

namespace detail {

inline std::string format_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

inline double parse_double(const std::string& v, const std::string& key) {
    std::size_t used = 0;
    double d = 0.0;
    try {
        d = std::stod(v, &used);
    } catch (const std::exception&) {
        throw config_error("bad numeric value for " + key + ": \"" + v + "\"");
    }
    if (used != v.size()) throw config_error("bad numeric value for " + key + ": \"" + v + "\"");
    return d;
}

inline long long parse_int(const std::string& v, const std::string& key) {
    std::size_t used = 0;
    long long i = 0;
    try {
        i = std::stoll(v, &used);
    } catch (const std::exception&) {
        throw config_error("bad integer value for " + key + ": \"" + v + "\"");
    }
    if (used != v.size()) throw config_error("bad integer value for " + key + ": \"" + v + "\"");
    return i;
}

inline std::uint64_t parse_u64(const std::string& v, const std::string& key) {
    std::size_t used = 0;
    unsigned long long i = 0;
    try {
        i = std::stoull(v, &used);
    } catch (const std::exception&) {
        throw config_error("bad seed value for " + key + ": \"" + v + "\"");
    }
    if (used != v.size()) throw config_error("bad seed value for " + key + ": \"" + v + "\"");
    return i;
}

inline bool parse_bool(const std::string& v, const std::string& key) {
    if (v == "true" || v == "1") return true;
    if (v == "false" || v == "0") return false;
    throw config_error("bad boolean value for " + key + ": \"" + v + "\"");
}

inline std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return "";
    const auto e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

}  // namespace detail

inline void apply_config_value(ExperimentConfig& cfg, const std::string& key, const std::string& value) {
    if (key == "p1_db") cfg.p1_db = detail::parse_double(value, key);
    else if (key == "p2_db") cfg.p2_db = detail::parse_double(value, key);
    else if (key == "a") cfg.a = detail::parse_double(value, key);
    else if (key == "scheme1") cfg.scheme1 = value;
    else if (key == "scheme2") cfg.scheme2 = value;
    else if (key == "n_sections") cfg.n_sections = detail::parse_int(value, key);
    else if (key == "blocks") cfg.blocks = static_cast<int>(detail::parse_int(value, key));
    else if (key == "seed") cfg.seed = detail::parse_u64(value, key);
    else if (key == "precise") cfg.precise = detail::parse_bool(value, key);
    else if (key == "lab_n") cfg.lab_n = static_cast<int>(detail::parse_int(value, key));
    else if (key == "m1") cfg.m1 = static_cast<int>(detail::parse_int(value, key));
    else if (key == "m2") cfg.m2 = static_cast<int>(detail::parse_int(value, key));
    else if (key == "gamma") cfg.gamma = detail::parse_double(value, key);
    else if (key == "trials") cfg.trials = static_cast<int>(detail::parse_int(value, key));
    else if (key == "flip") cfg.flip = detail::parse_double(value, key);
    else if (key == "codes") cfg.codes = static_cast<int>(detail::parse_int(value, key));
    else if (key == "ic_file") cfg.ic_file = value;
    else if (key == "part") cfg.part = value;
    else if (key == "workers") cfg.workers = static_cast<int>(detail::parse_int(value, key));
    else if (key == "out") cfg.out = value;
    else throw config_error("unknown config key \"" + key + "\"");
}

// Plain text, one "key = value" per line, '#' starts a comment.
inline ExperimentConfig parse_config_text(std::istream& in, ExperimentConfig base = {}) {
    std::string line;
    while (std::getline(in, line)) {
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        const std::string t = detail::trim(line);
        if (t.empty()) continue;
        const auto eq = t.find('=');
        if (eq == std::string::npos) throw config_error("config line is not key = value: \"" + t + "\"");
        apply_config_value(base, detail::trim(t.substr(0, eq)), detail::trim(t.substr(eq + 1)));
    }
    return base;
}

// The experiment-defining keys, in fixed order. Execution details (workers,
// out) are deliberately absent: they must not change any output byte.
inline std::string serialize_config(const ExperimentConfig& cfg) {
    std::ostringstream os;
    os << "p1_db = " << detail::format_double(cfg.p1_db) << '\n';
    os << "p2_db = " << detail::format_double(cfg.p2_db) << '\n';
    os << "a = " << detail::format_double(cfg.a) << '\n';
    os << "scheme1 = " << cfg.scheme1 << '\n';
    os << "scheme2 = " << cfg.scheme2 << '\n';
    os << "n_sections = " << cfg.n_sections << '\n';
    os << "blocks = " << cfg.blocks << '\n';
    os << "seed = " << (cfg.seed ? std::to_string(*cfg.seed) : std::string("unset")) << '\n';
    os << "precise = " << (cfg.precise ? "true" : "false") << '\n';
    os << "lab_n = " << cfg.lab_n << '\n';
    os << "m1 = " << cfg.m1 << '\n';
    os << "m2 = " << cfg.m2 << '\n';
    os << "gamma = " << detail::format_double(cfg.gamma) << '\n';
    os << "trials = " << cfg.trials << '\n';
    os << "flip = " << detail::format_double(cfg.flip) << '\n';
    os << "codes = " << cfg.codes << '\n';
    os << "ic_file = " << cfg.ic_file << '\n';
    os << "part = " << cfg.part << '\n';
    return os.str();
}

// Reads the "# key = value" header comments back into a config.
inline ExperimentConfig parse_output_header(std::istream& in) {
    ExperimentConfig cfg;
    std::string line;
    while (in.peek() == '#') {
        std::getline(in, line);
        std::string body = detail::trim(line.substr(1));
        const auto eq = body.find('=');
        if (eq == std::string::npos) continue;  // banner line
        const std::string key = detail::trim(body.substr(0, eq));
        const std::string value = detail::trim(body.substr(eq + 1));
        if (key == "seed" && value == "unset") continue;
        apply_config_value(cfg, key, value);
    }
    return cfg;
}

inline bool same_experiment(const ExperimentConfig& a, const ExperimentConfig& b) {
    return serialize_config(a) == serialize_config(b);
}

}  // namespace gifc
