// Brute-force oracles. exact_sequence_log_likelihood sums over every path of
// the joint machine and pins down the forward recursion. The DiscreteIC
// coding lab enumerates small finite-alphabet interference channels exactly
// and checks the random-coding achievability bound and the converse
// inequality on them.
//
// Convention: everything in this lab is in natural log (the bounds carry
// e^{-n*gamma} terms); user-facing rates elsewhere are in bits.

#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <istream>
#include <limits>
#include <span>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "gifc/channel.hpp"
#include "gifc/quadrature.hpp"
#include "gifc/trellis.hpp"

namespace gifc {

// Exhaustive path sum of ln p(observations), feasible up to 4 sections.
inline double exact_sequence_log_likelihood(const JointTrellis& jt, const ChannelParams& params,
                                            std::span<const double> obs, int receiver) {
    const int l = jt.uses_per_section;
    if (l < 1 || obs.size() % static_cast<std::size_t>(l) != 0)
        throw std::invalid_argument("observation length must be a whole number of sections");
    const int n_sections = static_cast<int>(obs.size() / static_cast<std::size_t>(l));
    if (n_sections > 4) throw std::invalid_argument("exact path enumeration is guarded at 4 sections");

    const int b = jt.driving_bits_per_section;
    if (b * n_sections > 22)
        throw std::invalid_argument("exact path enumeration guarded at ~4e6 paths");
    std::vector<double> path_logs;
    path_logs.reserve(static_cast<std::size_t>(1) << (b * n_sections));

    // depth-first over the drive choices of each section
    std::vector<double> acc_stack(n_sections + 1, 0.0);
    std::vector<int> state_stack(n_sections + 1, 0);
    std::vector<std::uint32_t> choice(n_sections, 0);
    int depth = 0;
    while (depth >= 0) {
        if (depth == n_sections) {
            path_logs.push_back(acc_stack[depth]);
            --depth;
            continue;
        }
        if (choice[depth] == (1u << b)) {
            choice[depth] = 0;
            --depth;
            continue;
        }
        const JointBranch& br = jt.outgoing(state_stack[depth], choice[depth]);
        ++choice[depth];
        const auto window = obs.subspan(static_cast<std::size_t>(depth) * l, l);
        acc_stack[depth + 1] = acc_stack[depth] + branch_loglik(window, br.symbols1, br.symbols2, params, receiver);
        state_stack[depth + 1] = br.s_plus;
        ++depth;
    }

    double shift = -std::numeric_limits<double>::infinity();
    for (double v : path_logs) shift = std::max(shift, v);
    double acc = 0.0;
    for (double v : path_logs) acc += std::exp(v - shift);
    // each depth-n path carries prior 2^{-b*n}
    return shift + std::log(acc) - static_cast<double>(b) * n_sections * kLn2;
}

// Memoryless finite-alphabet interference channel W(y1,y2|x1,x2).
struct DiscreteIC {
    int nx1 = 2, nx2 = 2, ny1 = 2, ny2 = 2;
    std::vector<double> table;  // [(x1*nx2+x2)*ny1+y1]*ny2+y2

    double& at(int x1, int x2, int y1, int y2) {
        return table[static_cast<std::size_t>(((x1 * nx2 + x2) * ny1 + y1)) * ny2 + y2];
    }
    double at(int x1, int x2, int y1, int y2) const {
        return table[static_cast<std::size_t>(((x1 * nx2 + x2) * ny1 + y1)) * ny2 + y2];
    }

    double w1(int y1, int x1, int x2) const {
        double s = 0.0;
        for (int y2 = 0; y2 < ny2; ++y2) s += at(x1, x2, y1, y2);
        return s;
    }
    double w2(int y2, int x1, int x2) const {
        double s = 0.0;
        for (int y1 = 0; y1 < ny1; ++y1) s += at(x1, x2, y1, y2);
        return s;
    }

    void validate() const {
        if (nx1 < 1 || nx2 < 1 || ny1 < 1 || ny2 < 1 || nx1 > 4 || nx2 > 4 || ny1 > 4 || ny2 > 4)
            throw std::invalid_argument("DiscreteIC alphabets must have 1..4 letters");
        if (table.size() != static_cast<std::size_t>(nx1) * nx2 * ny1 * ny2)
            throw std::invalid_argument("DiscreteIC table has wrong size");
        for (double v : table)
            if (!(v >= 0.0)) throw std::invalid_argument("DiscreteIC entries must be >= 0");
        for (int x1 = 0; x1 < nx1; ++x1)
            for (int x2 = 0; x2 < nx2; ++x2) {
                double s = 0.0;
                for (int y1 = 0; y1 < ny1; ++y1)
                    for (int y2 = 0; y2 < ny2; ++y2) s += at(x1, x2, y1, y2);
                if (std::abs(s - 1.0) > 1e-12)
                    throw std::invalid_argument("DiscreteIC rows must sum to 1");
            }
    }

    // Binary channel where the interferer flips the other user's bit:
    // Y1 = X1 xor (X2 and B1), Y2 = X2 xor (X1 and B2), B ~ Bernoulli(flip).
    static DiscreteIC flip_interference(double flip) {
        if (!(flip >= 0.0 && flip <= 1.0)) throw std::invalid_argument("flip must be in [0,1]");
        DiscreteIC ic;
        ic.table.assign(16, 0.0);
        for (int x1 = 0; x1 < 2; ++x1)
            for (int x2 = 0; x2 < 2; ++x2)
                for (int y1 = 0; y1 < 2; ++y1)
                    for (int y2 = 0; y2 < 2; ++y2) {
                        const double p1 = x2 == 0 ? (y1 == x1 ? 1.0 : 0.0)
                                                  : (y1 == x1 ? 1.0 - flip : flip);
                        const double p2 = x1 == 0 ? (y2 == x2 ? 1.0 : 0.0)
                                                  : (y2 == x2 ? 1.0 - flip : flip);
                        ic.at(x1, x2, y1, y2) = p1 * p2;
                    }
        ic.validate();
        return ic;
    }

    // Outputs independent of everything (uniform).
    static DiscreteIC pure_noise() {
        DiscreteIC ic;
        ic.table.assign(16, 0.25);
        return ic;
    }

    // Plain-text format: first non-comment line "nx1 nx2 ny1 ny2"; then one
    // row per input pair, lexicographic in (x1,x2), columns lexicographic in
    // (y1,y2).
    static DiscreteIC parse(std::istream& in) {
        DiscreteIC ic;
        std::string line;
        auto next_data_line = [&](std::string& out_line) {
            while (std::getline(in, out_line)) {
                const auto pos = out_line.find_first_not_of(" \t\r");
                if (pos == std::string::npos || out_line[pos] == '#') continue;
                return true;
            }
            return false;
        };
        if (!next_data_line(line)) throw std::invalid_argument("DiscreteIC file: missing header line");
        {
            std::istringstream ss(line);
            if (!(ss >> ic.nx1 >> ic.nx2 >> ic.ny1 >> ic.ny2))
                throw std::invalid_argument("DiscreteIC file: bad header line");
        }
        ic.table.assign(static_cast<std::size_t>(ic.nx1) * ic.nx2 * ic.ny1 * ic.ny2, 0.0);
        for (int row = 0; row < ic.nx1 * ic.nx2; ++row) {
            if (!next_data_line(line)) throw std::invalid_argument("DiscreteIC file: missing table row");
            std::istringstream ss(line);
            for (int col = 0; col < ic.ny1 * ic.ny2; ++col) {
                double v = 0.0;
                if (!(ss >> v)) throw std::invalid_argument("DiscreteIC file: short table row");
                ic.table[static_cast<std::size_t>(row) * (ic.ny1 * ic.ny2) + col] = v;
            }
        }
        ic.validate();
        return ic;
    }

    static DiscreteIC load(const std::string& path) {
        std::ifstream in(path);
        if (!in) throw std::invalid_argument("cannot open DiscreteIC file: " + path);
        return parse(in);
    }
};

namespace detail {

// Per-letter effective channel of one user under i.i.d. inputs:
// V(y|x) = sum_x' q_other(x') W_user(y|x, x') and its output marginal.
struct EffectiveChannel {
    int nx = 0, ny = 0;
    std::vector<double> v;    // v[x*ny + y]
    std::vector<double> py;   // py[y]
};

inline EffectiveChannel effective_channel(const DiscreteIC& ic, const std::vector<double>& q1,
                                          const std::vector<double>& q2, int user) {
    EffectiveChannel e;
    const auto& q_own = user == 1 ? q1 : q2;
    const auto& q_other = user == 1 ? q2 : q1;
    e.nx = user == 1 ? ic.nx1 : ic.nx2;
    e.ny = user == 1 ? ic.ny1 : ic.ny2;
    const int n_other = user == 1 ? ic.nx2 : ic.nx1;
    if (static_cast<int>(q_own.size()) != e.nx || static_cast<int>(q_other.size()) != n_other)
        throw std::invalid_argument("input distribution size does not match alphabet");
    e.v.assign(static_cast<std::size_t>(e.nx) * e.ny, 0.0);
    e.py.assign(e.ny, 0.0);
    for (int x = 0; x < e.nx; ++x)
        for (int xo = 0; xo < n_other; ++xo)
            for (int y = 0; y < e.ny; ++y) {
                const double w = user == 1 ? ic.w1(y, x, xo) : ic.w2(y, xo, x);
                e.v[static_cast<std::size_t>(x) * e.ny + y] += q_other[xo] * w;
            }
    for (int x = 0; x < e.nx; ++x)
        for (int y = 0; y < e.ny; ++y) e.py[y] += q_own[x] * e.v[static_cast<std::size_t>(x) * e.ny + y];
    return e;
}

inline void check_distribution(const std::vector<double>& q, const char* what) {
    double s = 0.0;
    for (double v : q) {
        if (!(v >= 0.0)) throw std::invalid_argument(std::string(what) + ": probabilities must be >= 0");
        s += v;
    }
    if (std::abs(s - 1.0) > 1e-12) throw std::invalid_argument(std::string(what) + ": must sum to 1");
}

}  // namespace detail

struct DensityAtom {
    double value = 0.0;  // information density per use, in nats
    double prob = 0.0;
};

// Exact distribution of (1/n) ln [P(Y^n|X^n) / P(Y^n)] for one user under
// i.i.d. inputs on the memoryless extension of the channel.
inline std::vector<DensityAtom> information_density_distribution(const DiscreteIC& ic,
                                                                 const std::vector<double>& q1,
                                                                 const std::vector<double>& q2,
                                                                 int n, int user) {
    ic.validate();
    detail::check_distribution(q1, "q1");
    detail::check_distribution(q2, "q2");
    if (user != 1 && user != 2) throw std::invalid_argument("user must be 1 or 2");
    if (n < 1 || n > 10) throw std::invalid_argument("n must be in 1..10");
    const auto e = detail::effective_channel(ic, q1, q2, user);
    const auto& q_own = user == 1 ? q1 : q2;
    double outcomes = 1.0;
    for (int t = 0; t < n; ++t) outcomes *= static_cast<double>(e.nx) * e.ny;
    if (outcomes > 1e7) throw std::invalid_argument("outcome count guard (1e7) exceeded");

    // per-letter atoms: joint prob q(x) v(y|x) and log ratio ln(v/py)
    struct LetterAtom { double logratio; double prob; };
    std::vector<LetterAtom> letters;
    for (int x = 0; x < e.nx; ++x)
        for (int y = 0; y < e.ny; ++y) {
            const double vy = e.v[static_cast<std::size_t>(x) * e.ny + y];
            const double p = q_own[x] * vy;
            if (p == 0.0) continue;
            letters.push_back({std::log(vy / e.py[y]), p});
        }

    std::vector<DensityAtom> atoms;
    // depth-first product over n letters
    std::vector<std::size_t> idx(n, 0);
    std::vector<double> sum_stack(n + 1, 0.0), prob_stack(n + 1, 1.0);
    int depth = 0;
    while (depth >= 0) {
        if (depth == n) {
            atoms.push_back({sum_stack[n] / n, prob_stack[n]});
            --depth;
            continue;
        }
        if (idx[depth] == letters.size()) {
            idx[depth] = 0;
            --depth;
            continue;
        }
        const auto& la = letters[idx[depth]++];
        sum_stack[depth + 1] = sum_stack[depth] + la.logratio;
        prob_stack[depth + 1] = prob_stack[depth] * la.prob;
        ++depth;
    }

    std::sort(atoms.begin(), atoms.end(),
              [](const DensityAtom& a, const DensityAtom& b) { return a.value < b.value; });
    std::vector<DensityAtom> merged;
    for (const auto& a : atoms) {
        if (!merged.empty() && std::abs(a.value - merged.back().value) <= 1e-12)
            merged.back().prob += a.prob;
        else
            merged.push_back(a);
    }
    long double total = 0.0;
    for (const auto& a : merged) total += a.prob;
    if (std::abs(static_cast<double>(total) - 1.0) > 1e-9)
        throw std::runtime_error("information density atoms do not sum to 1");
    return merged;
}

inline double prob_at_most(const std::vector<DensityAtom>& atoms, double threshold) {
    double s = 0.0;
    for (const auto& a : atoms)
        if (a.value <= threshold) s += a.prob;
    return s;
}

struct CodingExperiment {
    int n = 4;
    int m1 = 2, m2 = 2;               // codebook sizes
    double gamma = 0.1;               // threshold slack, nats
    std::vector<double> q1, q2;       // i.i.d. per-letter input distributions
    int trials = 100;
    std::uint64_t seed = 1;

    void validate(const DiscreteIC& ic) const {
        if (n < 1 || n > 10) throw std::invalid_argument("experiment n must be in 1..10");
        if (m1 < 1 || m2 < 1) throw std::invalid_argument("codebook sizes must be >= 1");
        if (!(gamma > 0.0)) throw std::invalid_argument("gamma must be > 0");
        if (trials < 1) throw std::invalid_argument("trials must be >= 1");
        if (static_cast<int>(q1.size()) != ic.nx1 || static_cast<int>(q2.size()) != ic.nx2)
            throw std::invalid_argument("input distribution sizes must match alphabets");
        detail::check_distribution(q1, "q1");
        detail::check_distribution(q2, "q2");
    }
};

struct Lemma1Report {
    double empirical_error_sum = 0.0;  // mean over codebooks of eps1 + eps2
    double trial_std_error = 0.0;
    double analytic_bound = 0.0;       // Pr{Tc(1)} + Pr{Tc(2)} + 2 e^{-n gamma}
    double prob_tc1 = 0.0, prob_tc2 = 0.0;
    int trials = 0;
};

namespace detail {

inline int sample_letter(const std::vector<double>& q, SampleStream& rng) {
    const double u = rng.uniform01();
    double acc = 0.0;
    for (std::size_t x = 0; x < q.size(); ++x) {
        acc += q[x];
        if (u < acc) return static_cast<int>(x);
    }
    return static_cast<int>(q.size()) - 1;
}

// Exact error probability of the unique-threshold decoder for one user and
// one fixed codebook pair, enumerating every output sequence.
inline double threshold_decoder_error(const DiscreteIC& ic, const EffectiveChannel& e,
                                      const std::vector<std::vector<int>>& cb_own,
                                      const std::vector<std::vector<int>>& cb_other,
                                      int user, double per_use_threshold) {
    const int n = static_cast<int>(cb_own[0].size());
    const int m_own = static_cast<int>(cb_own.size());
    const int m_other = static_cast<int>(cb_other.size());
    const double thr = per_use_threshold * n;

    std::vector<double> logratio(static_cast<std::size_t>(e.nx) * e.ny);
    for (int x = 0; x < e.nx; ++x)
        for (int y = 0; y < e.ny; ++y) {
            const double v = e.v[static_cast<std::size_t>(x) * e.ny + y];
            logratio[static_cast<std::size_t>(x) * e.ny + y] =
                v > 0.0 ? std::log(v / e.py[y]) : -1e300;
        }

    long long total = 1;
    for (int t = 0; t < n; ++t) total *= e.ny;

    std::vector<int> y(n, 0);
    double err = 0.0;
    for (long long yi = 0; yi < total; ++yi) {
        // decode: unique codeword above threshold, else failure
        int hit = -1;
        bool unique = true;
        for (int i = 0; i < m_own; ++i) {
            double d = 0.0;
            for (int t = 0; t < n; ++t)
                d += logratio[static_cast<std::size_t>(cb_own[i][t]) * e.ny + y[t]];
            if (d > thr) {
                if (hit >= 0) { unique = false; break; }
                hit = i;
            }
        }
        const int decoded = unique ? hit : -1;
        // exact average over equiprobable message pairs
        for (int i = 0; i < m_own; ++i) {
            if (decoded == i) continue;
            for (int j = 0; j < m_other; ++j) {
                double w = 1.0;
                for (int t = 0; t < n && w > 0.0; ++t)
                    w *= user == 1 ? ic.w1(y[t], cb_own[i][t], cb_other[j][t])
                                   : ic.w2(y[t], cb_other[j][t], cb_own[i][t]);
                err += w;
            }
        }
        // odometer
        for (int t = n - 1; t >= 0; --t) {
            if (++y[t] < e.ny) break;
            y[t] = 0;
        }
    }
    return err / (static_cast<double>(m_own) * m_other);
}

}  // namespace detail

// Random-codebook check of the achievability bound: the trial-averaged exact
// error sum must stay below Pr{Tc(1)} + Pr{Tc(2)} + 2 e^{-n gamma}.
inline Lemma1Report lemma1_bound_check(const DiscreteIC& ic, const CodingExperiment& exp) {
    ic.validate();
    exp.validate(ic);
    const auto e1 = detail::effective_channel(ic, exp.q1, exp.q2, 1);
    const auto e2 = detail::effective_channel(ic, exp.q1, exp.q2, 2);
    double outcomes1 = std::pow(static_cast<double>(ic.ny1), exp.n) * exp.m1;
    double outcomes2 = std::pow(static_cast<double>(ic.ny2), exp.n) * exp.m2;
    if (outcomes1 > 1e7 || outcomes2 > 1e7)
        throw std::invalid_argument("lemma1 enumeration guard exceeded");

    const double th1 = std::log(static_cast<double>(exp.m1)) / exp.n + exp.gamma;
    const double th2 = std::log(static_cast<double>(exp.m2)) / exp.n + exp.gamma;

    const auto atoms1 = information_density_distribution(ic, exp.q1, exp.q2, exp.n, 1);
    const auto atoms2 = information_density_distribution(ic, exp.q1, exp.q2, exp.n, 2);

    Lemma1Report rep;
    rep.trials = exp.trials;
    rep.prob_tc1 = prob_at_most(atoms1, th1);
    rep.prob_tc2 = prob_at_most(atoms2, th2);
    rep.analytic_bound = rep.prob_tc1 + rep.prob_tc2 + 2.0 * std::exp(-static_cast<double>(exp.n) * exp.gamma);

    std::vector<double> sums(exp.trials, 0.0);
    for (int trial = 0; trial < exp.trials; ++trial) {
        SampleStream rng(block_seed(exp.seed, static_cast<std::uint64_t>(trial)));
        std::vector<std::vector<int>> cb1(exp.m1, std::vector<int>(exp.n));
        std::vector<std::vector<int>> cb2(exp.m2, std::vector<int>(exp.n));
        for (auto& cw : cb1)
            for (auto& x : cw) x = detail::sample_letter(exp.q1, rng);
        for (auto& cw : cb2)
            for (auto& x : cw) x = detail::sample_letter(exp.q2, rng);
        const double eps1 = detail::threshold_decoder_error(ic, e1, cb1, cb2, 1, th1);
        const double eps2 = detail::threshold_decoder_error(ic, e2, cb2, cb1, 2, th2);
        sums[trial] = eps1 + eps2;
    }
    double mean = 0.0;
    for (double v : sums) mean += v;
    mean /= exp.trials;
    double ss = 0.0;
    for (double v : sums) ss += (v - mean) * (v - mean);
    rep.empirical_error_sum = mean;
    rep.trial_std_error = exp.trials > 1 ? std::sqrt(ss / (exp.trials - 1)) / std::sqrt(static_cast<double>(exp.trials)) : 0.0;
    return rep;
}

// A concrete code: two codebooks plus disjoint decoding sets over output
// sequence indices (lexicographic, first letter most significant).
struct ExplicitCode {
    int n = 1;
    std::vector<std::vector<int>> cb1, cb2;
    std::vector<std::vector<long long>> dec_sets1;  // dec_sets1[i] = sorted y-indices of B_1i
    std::vector<std::vector<long long>> dec_sets2;
};

struct Lemma2Report {
    double eps1 = 0.0, rhs1 = 0.0;
    double eps2 = 0.0, rhs2 = 0.0;
    double prob_term1 = 0.0, prob_term2 = 0.0;
    bool holds1 = false, holds2 = false;
};

namespace detail {

// dec map over all y indices: set id or -1; throws on overlap
inline std::vector<int> decoding_map(const std::vector<std::vector<long long>>& sets, long long total) {
    std::vector<int> map(total, -1);
    for (std::size_t i = 0; i < sets.size(); ++i)
        for (long long y : sets[i]) {
            if (y < 0 || y >= total) throw std::invalid_argument("decoding set index out of range");
            if (map[y] != -1) throw std::invalid_argument("decoding sets must be disjoint");
            map[y] = static_cast<int>(i);
        }
    return map;
}

struct Lemma2Side { double eps, rhs, prob_term; };

inline Lemma2Side lemma2_side(const DiscreteIC& ic, const ExplicitCode& code, double gamma, int user) {
    const auto& cb_own = user == 1 ? code.cb1 : code.cb2;
    const auto& cb_other = user == 1 ? code.cb2 : code.cb1;
    const auto& sets = user == 1 ? code.dec_sets1 : code.dec_sets2;
    const int ny = user == 1 ? ic.ny1 : ic.ny2;
    const int n = code.n;
    const int m_own = static_cast<int>(cb_own.size());
    const int m_other = static_cast<int>(cb_other.size());

    long long total = 1;
    for (int t = 0; t < n; ++t) {
        total *= ny;
        if (total > 1000000) throw std::invalid_argument("lemma2 enumeration guard exceeded");
    }
    if (static_cast<int>(sets.size()) != m_own)
        throw std::invalid_argument("need one decoding set per codeword");
    const auto dec = decoding_map(sets, total);

    // W^n(y | own codeword i, other codeword j), y decoded little-endian in t
    auto wn = [&](long long yi, int i, int j) {
        double w = 1.0;
        long long rest = yi;
        for (int t = n - 1; t >= 0 && w > 0.0; --t) {
            const int y = static_cast<int>(rest % ny);
            rest /= ny;
            w *= user == 1 ? ic.w1(y, cb_own[i][t], cb_other[j][t])
                           : ic.w2(y, cb_other[j][t], cb_own[i][t]);
        }
        return w;
    };

    Lemma2Side side{0.0, 0.0, 0.0};
    // exact error probability of the given decoding sets
    for (int i = 0; i < m_own; ++i)
        for (int j = 0; j < m_other; ++j)
            for (long long yi = 0; yi < total; ++yi)
                if (dec[yi] != i) side.eps += wn(yi, i, j);
    side.eps /= static_cast<double>(m_own) * m_other;

    // information spectrum side: codeword-uniform input distribution
    std::vector<std::vector<double>> pyg(m_own, std::vector<double>(total, 0.0));
    std::vector<double> py(total, 0.0);
    for (int i = 0; i < m_own; ++i)
        for (long long yi = 0; yi < total; ++yi) {
            for (int j = 0; j < m_other; ++j) pyg[i][yi] += wn(yi, i, j);
            pyg[i][yi] /= m_other;
            py[yi] += pyg[i][yi] / m_own;
        }
    const double log_m = std::log(static_cast<double>(m_own));
    for (int i = 0; i < m_own; ++i)
        for (long long yi = 0; yi < total; ++yi) {
            if (pyg[i][yi] == 0.0) continue;
            const double density = std::log(pyg[i][yi] / py[yi]);
            if (density <= log_m - n * gamma) side.prob_term += pyg[i][yi] / m_own;
        }
    side.rhs = side.prob_term - std::exp(-static_cast<double>(n) * gamma);
    return side;
}

}  // namespace detail

// Evaluates both sides of the converse inequality exactly for a given code.
inline Lemma2Report lemma2_converse_check(const DiscreteIC& ic, const ExplicitCode& code, double gamma) {
    ic.validate();
    if (!(gamma > 0.0)) throw std::invalid_argument("gamma must be > 0");
    if (code.n < 1 || code.n > 10) throw std::invalid_argument("code n must be in 1..10");
    if (code.cb1.empty() || code.cb2.empty()) throw std::invalid_argument("codebooks must be nonempty");
    for (const auto& cw : code.cb1)
        if (static_cast<int>(cw.size()) != code.n) throw std::invalid_argument("codeword length mismatch");
    for (const auto& cw : code.cb2)
        if (static_cast<int>(cw.size()) != code.n) throw std::invalid_argument("codeword length mismatch");

    const auto s1 = detail::lemma2_side(ic, code, gamma, 1);
    const auto s2 = detail::lemma2_side(ic, code, gamma, 2);
    Lemma2Report rep;
    rep.eps1 = s1.eps;
    rep.rhs1 = s1.rhs;
    rep.prob_term1 = s1.prob_term;
    rep.holds1 = rep.eps1 >= rep.rhs1;
    rep.eps2 = s2.eps;
    rep.rhs2 = s2.rhs;
    rep.prob_term2 = s2.prob_term;
    rep.holds2 = rep.eps2 >= rep.rhs2;
    return rep;
}

// Random code with uniform codeword letters and random disjoint decoding
// sets (each output sequence joins one decoding set or stays unassigned).
inline ExplicitCode random_explicit_code(const DiscreteIC& ic, int n, int m1, int m2,
                                         std::uint64_t seed, double unassigned_prob = 0.2) {
    ExplicitCode code;
    code.n = n;
    SampleStream rng(seed);
    code.cb1.assign(m1, std::vector<int>(n));
    code.cb2.assign(m2, std::vector<int>(n));
    for (auto& cw : code.cb1)
        for (auto& x : cw) x = static_cast<int>(rng.uniform01() * ic.nx1);
    for (auto& cw : code.cb2)
        for (auto& x : cw) x = static_cast<int>(rng.uniform01() * ic.nx2);
    long long total1 = 1, total2 = 1;
    for (int t = 0; t < n; ++t) {
        total1 *= ic.ny1;
        total2 *= ic.ny2;
    }
    code.dec_sets1.assign(m1, {});
    code.dec_sets2.assign(m2, {});
    for (long long y = 0; y < total1; ++y) {
        if (rng.uniform01() < unassigned_prob) continue;
        code.dec_sets1[static_cast<std::size_t>(rng.uniform01() * m1)].push_back(y);
    }
    for (long long y = 0; y < total2; ++y) {
        if (rng.uniform01() < unassigned_prob) continue;
        code.dec_sets2[static_cast<std::size_t>(rng.uniform01() * m2)].push_back(y);
    }
    return code;
}

}  // namespace gifc
