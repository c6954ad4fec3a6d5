// Command-line front end: configuration-driven experiment runner emitting
// reproducible CSV tables. Every output starts with '#' header comments that
// carry the full experiment config; re-parsing them reconstructs the run.

#pragma once

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "gifc/config.hpp"
#include "gifc/exact_oracle.hpp"
#include "gifc/infodensity.hpp"
#include "gifc/region.hpp"

namespace gifc {

enum ExitCode : int {
    kExitOk = 0,
    kExitUnknownScheme = 2,
    kExitBadPolynomial = 3,
    kExitMissingSeed = 4,
    kExitBadConfig = 5,
    kExitInternalCheck = 6,
    kExitUsage = 7,
};

namespace detail {

inline std::string fmt_value(double v, bool precise) {
    char buf[64];
    std::snprintf(buf, sizeof buf, precise ? "%.17g" : "%.6g", v);
    return buf;
}

inline void write_header(std::ostream& os, const std::string& command, const ExperimentConfig& cfg) {
    os << "# gifc " << command << "\n";
    std::istringstream lines(serialize_config(cfg));
    std::string line;
    while (std::getline(lines, line)) os << "# " << line << "\n";
}

inline std::string drive_string(const std::vector<std::uint8_t>& bits) {
    std::string s;
    for (auto b : bits) s += static_cast<char>('0' + b);
    return s.empty() ? "-" : s;
}

inline std::string symbol_string(const std::vector<double>& symbols) {
    std::string s;
    for (double v : symbols) s += v > 0 ? '+' : '-';
    return s;
}

inline void rate_row(std::ostream& os, const std::string& label, double r1, double se1, double r2,
                     double se2, long long n, int blocks, std::uint64_t seed, bool precise) {
    os << label << ',' << fmt_value(r1, precise) << ',' << fmt_value(se1, precise) << ','
       << fmt_value(r2, precise) << ',' << fmt_value(se2, precise) << ',' << n << ',' << blocks
       << ',' << seed << "\n";
}

inline constexpr const char* kRateColumns = "label,r1_bits,r1_stderr,r2_bits,r2_stderr,n,blocks,seed";

}  // namespace detail

inline const char* cli_usage() {
    return
        "usage: gifc <command> [--config FILE] [--key=value ...]\n"
        "\n"
        "commands:\n"
        "  trellis    dump the branch table (columns: branch,s_minus,s_plus,drive1,drive2,x1,x2)\n"
        "             of the joint machine of scheme1 and scheme2, or of one sender (part=1|2)\n"
        "  estimate   Monte Carlo mutual information rate pair for (scheme1, scheme2)\n"
        "  region     corners A, B, C plus time-sharing frontier and raw staircase\n"
        "  baseline   quadrature values: single-user BPSK rate and interference-as-noise point C\n"
        "  lemma1     random-codebook achievability bound report on a small discrete channel\n"
        "  lemma2     converse inequality report on random explicit codes\n"
        "  help       print this text\n"
        "\n"
        "schemes:\n"
        "  iud:<bits>        i.u.d. BPSK, <bits> symbols per section\n"
        "  conv:7,5          rate-1/n feed-forward convolutional code, octal taps;\n"
        "                    bit k of each octal value is the D^k tap (7,5 = 1+D+D^2, 1+D^2)\n"
        "  convbin:111,101   same code with explicit binary taps, D^0 tap first\n"
        "\n"
        "config: plain text file of key = value lines ('#' comments); command-line flags\n"
        "  --key=value (or --key value) override the file. The seed may also come from the\n"
        "  GIFC_SEED environment variable (file < GIFC_SEED < flags). A seed is required:\n"
        "  no command runs without an explicit one.\n"
        "\n"
        "keys: p1_db p2_db a scheme1 scheme2 n_sections blocks seed precise lab_n m1 m2\n"
        "      gamma trials flip codes ic_file part workers out\n"
        "\n"
        "output: CSV preceded by '# key = value' lines carrying the full config.\n"
        "  rate tables use columns label,r1_bits,r1_stderr,r2_bits,r2_stderr,n,blocks,seed;\n"
        "  floats print with 6 significant digits (17 with precise=true).\n"
        "  lemma1 columns: gamma,m1,m2,lab_n,trials,empirical_error_sum,trial_stderr,\n"
        "                  analytic_bound,prob_tc1,prob_tc2,holds\n"
        "  lemma2 columns: code,eps1,rhs1,eps2,rhs2,holds\n"
        "\n"
        "ic_file format: header line \"nx1 nx2 ny1 ny2\", then one row of W(y1,y2|x1,x2) per\n"
        "  input pair, rows lexicographic in (x1,x2), columns lexicographic in (y1,y2).\n"
        "\n"
        "exit codes: 0 ok, 2 unknown scheme, 3 invalid polynomial, 4 missing seed,\n"
        "            5 bad config, 6 failed internal consistency check, 7 usage error\n";
}

namespace detail {

inline void cmd_trellis(const ExperimentConfig& cfg, std::ostream& os) {
    const Trellis t1 = parse_scheme(cfg.scheme1);
    const Trellis t2 = parse_scheme(cfg.scheme2);
    write_header(os, "trellis", cfg);
    if (cfg.part == "joint") {
        const JointTrellis jt = product_trellis(t1, t2);
        os << "branch,s_minus,s_plus,drive1,drive2,x1,x2\n";
        for (std::size_t b = 0; b < jt.branches.size(); ++b) {
            const auto& br = jt.branches[b];
            os << b << ',' << br.s_minus << ',' << br.s_plus << ',' << drive_string(br.drive1)
               << ',' << drive_string(br.drive2) << ',' << symbol_string(br.symbols1) << ','
               << symbol_string(br.symbols2) << "\n";
        }
        return;
    }
    const Trellis& t = cfg.part == "1" ? t1 : t2;
    os << "branch,s_minus,s_plus,drive,x\n";
    for (std::size_t b = 0; b < t.branches.size(); ++b) {
        const auto& br = t.branches[b];
        os << b << ',' << br.s_minus << ',' << br.s_plus << ',' << drive_string(br.drive) << ','
           << symbol_string(br.symbols) << "\n";
    }
}

inline ChannelParams channel_from(const ExperimentConfig& cfg) {
    ChannelParams p;
    p.p1 = db_to_linear(cfg.p1_db);
    p.p2 = db_to_linear(cfg.p2_db);
    p.a = cfg.a;
    p.validate();
    return p;
}

inline void cmd_estimate(const ExperimentConfig& cfg, std::ostream& os) {
    const ChannelParams params = channel_from(cfg);
    const Trellis t1 = parse_scheme(cfg.scheme1);
    const Trellis t2 = parse_scheme(cfg.scheme2);
    const RatePair pair =
        estimate_rate_pair(t1, t2, params, cfg.n_sections, cfg.blocks, *cfg.seed, cfg.workers);
    write_header(os, "estimate", cfg);
    os << kRateColumns << "\n";
    rate_row(os, "pair", pair.r1.value, pair.r1.std_error, pair.r2.value, pair.r2.std_error,
             pair.r1.n, pair.r1.blocks, *cfg.seed, cfg.precise);
}

inline void cmd_region(const ExperimentConfig& cfg, std::ostream& os) {
    const ChannelParams params = channel_from(cfg);
    const auto [a, b] = point_a_b(params, cfg.n_sections, cfg.blocks, *cfg.seed, cfg.workers);
    const Rectangle c = point_c(params);
    const RateRegion region = assemble({a, b, c});
    write_header(os, "region", cfg);
    os << kRateColumns << "\n";
    const long long n = cfg.n_sections * 2 * cfg.blocks;  // both mixed schemes emit 2 uses/section
    for (const auto& r : {a, b, c})
        rate_row(os, r.label, r.r1, r.r1_se, r.r2, r.r2_se, n, cfg.blocks, *cfg.seed, cfg.precise);
    for (std::size_t i = 0; i < region.frontier.size(); ++i)
        rate_row(os, "hull:" + std::to_string(i), region.frontier[i].r1, 0.0, region.frontier[i].r2,
                 0.0, n, cfg.blocks, *cfg.seed, cfg.precise);
    for (std::size_t i = 0; i < region.staircase.size(); ++i)
        rate_row(os, "stair:" + std::to_string(i), region.staircase[i].r1, 0.0,
                 region.staircase[i].r2, 0.0, n, cfg.blocks, *cfg.seed, cfg.precise);
}

inline void cmd_baseline(const ExperimentConfig& cfg, std::ostream& os) {
    const ChannelParams params = channel_from(cfg);
    const double b1_gh = bpsk_awgn_mi(params.p1), b1_tr = bpsk_awgn_mi_trapezoid(params.p1);
    const double b2_gh = bpsk_awgn_mi(params.p2), b2_tr = bpsk_awgn_mi_trapezoid(params.p2);
    const double c1_gh = noise_model_mi(params, 1), c1_tr = noise_model_mi_trapezoid(params, 1);
    const double c2_gh = noise_model_mi(params, 2), c2_tr = noise_model_mi_trapezoid(params, 2);
    write_header(os, "baseline", cfg);
    os << kRateColumns << "\n";
    // stderr columns report the quadrature cross-validation gap
    rate_row(os, "bpsk_awgn", b1_gh, std::abs(b1_gh - b1_tr), b2_gh, std::abs(b2_gh - b2_tr), 0, 0,
             *cfg.seed, cfg.precise);
    rate_row(os, "C", c1_gh, std::abs(c1_gh - c1_tr), c2_gh, std::abs(c2_gh - c2_tr), 0, 0,
             *cfg.seed, cfg.precise);
    const double worst = std::max({std::abs(b1_gh - b1_tr), std::abs(b2_gh - b2_tr),
                                   std::abs(c1_gh - c1_tr), std::abs(c2_gh - c2_tr)});
    if (worst > 1e-6) throw std::runtime_error("quadrature cross-validation exceeded 1e-6");
}

inline DiscreteIC lab_channel(const ExperimentConfig& cfg) {
    if (cfg.ic_file.empty()) return DiscreteIC::flip_interference(cfg.flip);
    try {
        return DiscreteIC::load(cfg.ic_file);
    } catch (const std::invalid_argument& e) {
        throw config_error(e.what());  // a bad table file is a configuration problem
    }
}

inline void cmd_lemma1(const ExperimentConfig& cfg, std::ostream& os) {
    const DiscreteIC ic = lab_channel(cfg);
    CodingExperiment exp;
    exp.n = cfg.lab_n;
    exp.m1 = cfg.m1;
    exp.m2 = cfg.m2;
    exp.gamma = cfg.gamma;
    exp.q1.assign(ic.nx1, 1.0 / ic.nx1);
    exp.q2.assign(ic.nx2, 1.0 / ic.nx2);
    exp.trials = cfg.trials;
    exp.seed = *cfg.seed;
    const Lemma1Report rep = lemma1_bound_check(ic, exp);
    const bool holds = rep.empirical_error_sum <= rep.analytic_bound + 2.0 * rep.trial_std_error;
    write_header(os, "lemma1", cfg);
    os << "gamma,m1,m2,lab_n,trials,empirical_error_sum,trial_stderr,analytic_bound,prob_tc1,prob_tc2,holds\n";
    os << fmt_value(cfg.gamma, cfg.precise) << ',' << cfg.m1 << ',' << cfg.m2 << ',' << cfg.lab_n
       << ',' << cfg.trials << ',' << fmt_value(rep.empirical_error_sum, cfg.precise) << ','
       << fmt_value(rep.trial_std_error, cfg.precise) << ','
       << fmt_value(rep.analytic_bound, cfg.precise) << ',' << fmt_value(rep.prob_tc1, cfg.precise)
       << ',' << fmt_value(rep.prob_tc2, cfg.precise) << ',' << (holds ? 1 : 0) << "\n";
}

inline void cmd_lemma2(const ExperimentConfig& cfg, std::ostream& os) {
    const DiscreteIC ic = lab_channel(cfg);
    write_header(os, "lemma2", cfg);
    os << "code,eps1,rhs1,eps2,rhs2,holds\n";
    bool all_hold = true;
    for (int k = 0; k < cfg.codes; ++k) {
        const ExplicitCode code =
            random_explicit_code(ic, cfg.lab_n, cfg.m1, cfg.m2, block_seed(*cfg.seed, k));
        const Lemma2Report rep = lemma2_converse_check(ic, code, cfg.gamma);
        const bool holds = rep.holds1 && rep.holds2;
        all_hold = all_hold && holds;
        os << k << ',' << fmt_value(rep.eps1, cfg.precise) << ',' << fmt_value(rep.rhs1, cfg.precise)
           << ',' << fmt_value(rep.eps2, cfg.precise) << ',' << fmt_value(rep.rhs2, cfg.precise)
           << ',' << (holds ? 1 : 0) << "\n";
    }
    if (!all_hold) throw std::runtime_error("converse inequality violated: implementation bug");
}

}  // namespace detail

// Runs one command against a fully merged config, writing the table to os.
// Throws on failure; exceptions map to exit codes in run_cli.
inline void run_command(const std::string& command, const ExperimentConfig& cfg, std::ostream& os) {
    cfg.validate();
    if (command == "trellis") detail::cmd_trellis(cfg, os);
    else if (command == "estimate") detail::cmd_estimate(cfg, os);
    else if (command == "region") detail::cmd_region(cfg, os);
    else if (command == "baseline") detail::cmd_baseline(cfg, os);
    else if (command == "lemma1") detail::cmd_lemma1(cfg, os);
    else if (command == "lemma2") detail::cmd_lemma2(cfg, os);
    else throw std::invalid_argument("unknown command");
}

inline int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    if (args.empty()) {
        err << "gifc: missing command\n" << cli_usage();
        return kExitUsage;
    }
    const std::string command = args[0];
    if (command == "help" || command == "--help" || command == "-h") {
        out << cli_usage();
        return kExitOk;
    }
    const bool known = command == "trellis" || command == "estimate" || command == "region" ||
                       command == "baseline" || command == "lemma1" || command == "lemma2";
    if (!known) {
        err << "gifc: unknown command \"" << command << "\"\n";
        return kExitUsage;
    }

    try {
        // precedence: defaults < config file < GIFC_SEED < flags
        std::vector<std::pair<std::string, std::string>> flags;
        std::string config_path;
        for (std::size_t i = 1; i < args.size(); ++i) {
            std::string arg = args[i];
            if (arg.rfind("--", 0) != 0) {
                err << "gifc: unexpected argument \"" << arg << "\"\n";
                return kExitUsage;
            }
            arg = arg.substr(2);
            std::string key, value;
            const auto eq = arg.find('=');
            if (eq != std::string::npos) {
                key = arg.substr(0, eq);
                value = arg.substr(eq + 1);
            } else if (arg == "precise") {
                key = "precise";
                value = "true";
            } else if (i + 1 < args.size()) {
                key = arg;
                value = args[++i];
            } else {
                err << "gifc: flag --" << arg << " needs a value\n";
                return kExitUsage;
            }
            if (key == "config") config_path = value;
            else flags.emplace_back(key, value);
        }

        ExperimentConfig cfg;
        if (!config_path.empty()) {
            std::ifstream in(config_path);
            if (!in) {
                err << "gifc: cannot open config file " << config_path << "\n";
                return kExitBadConfig;
            }
            cfg = parse_config_text(in, cfg);
        }
        if (const char* env_seed = std::getenv("GIFC_SEED"))
            cfg.seed = detail::parse_u64(env_seed, "GIFC_SEED");
        for (const auto& [key, value] : flags) apply_config_value(cfg, key, value);

        if (!cfg.seed.has_value()) {
            err << "gifc: seed is required (use --seed, GIFC_SEED, or seed= in the config file)\n";
            return kExitMissingSeed;
        }

        std::ostringstream body;
        run_command(command, cfg, body);
        if (cfg.out.empty()) {
            out << body.str();
        } else {
            std::ofstream f(cfg.out, std::ios::binary);
            if (!f) {
                err << "gifc: cannot open output file " << cfg.out << "\n";
                return kExitBadConfig;
            }
            f << body.str();
        }
        return kExitOk;
    } catch (const scheme_error& e) {
        err << "gifc: " << e.what() << "\n";
        return kExitUnknownScheme;
    } catch (const polynomial_error& e) {
        err << "gifc: " << e.what() << "\n";
        return kExitBadPolynomial;
    } catch (const config_error& e) {
        err << "gifc: " << e.what() << "\n";
        return kExitBadConfig;
    } catch (const std::runtime_error& e) {
        err << "gifc: internal consistency check failed: " << e.what() << "\n";
        return kExitInternalCheck;
    } catch (const std::exception& e) {
        err << "gifc: " << e.what() << "\n";
        return kExitInternalCheck;
    }
}

inline int run_cli(int argc, char** argv, std::ostream& out, std::ostream& err) {
    std::vector<std::string> args;
    for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
    return run_cli(args, out, err);
}

}  // namespace gifc
