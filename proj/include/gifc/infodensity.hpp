// Information-rate estimation for the trellis-driven Gaussian interference
// channel. Output and conditional entropy rates come from the normalized
// forward recursion over the hidden state machine; the mutual information
// rate is their per-block difference. Memoryless baselines (single-user
// BPSK capacity and the interference-as-noise point) come from quadrature.

#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <span>
#include <stdexcept>
#include <thread>
#include <utility>
#include <vector>

#include "gifc/channel.hpp"
#include "gifc/quadrature.hpp"
#include "gifc/trellis.hpp"

namespace gifc {

struct RateEstimate {
    double value = 0.0;       // bits per channel use
    double std_error = 0.0;   // bits per channel use
    long long n = 0;          // total channel uses across blocks
    int blocks = 0;
    std::uint64_t seed = 0;
};

struct RatePair {
    RateEstimate r1, r2;
};

// Normalized alpha recursion over a state machine driven by i.u.d. bits.
// emit(branch, window) must return the log emission density of one section.
// Returns ln p(observations) starting from the all-zero state.
template <class Machine, class Emission>
double forward_log_likelihood(const Machine& m, std::span<const double> obs, Emission&& emit) {
    const int l = m.uses_per_section;
    if (l < 1 || obs.size() % static_cast<std::size_t>(l) != 0)
        throw std::invalid_argument("observation length must be a whole number of sections");
    const std::size_t n_sections = obs.size() / static_cast<std::size_t>(l);
    const double ln_prior = -m.driving_bits_per_section * kLn2;  // per-section 2^-b

    std::vector<double> alpha(m.num_states, 0.0), next(m.num_states, 0.0);
    std::vector<double> loglik(m.branches.size(), 0.0);
    alpha[0] = 1.0;
    double logp = 0.0;
    for (std::size_t s = 0; s < n_sections; ++s) {
        const auto window = obs.subspan(s * l, l);
        double shift = -std::numeric_limits<double>::infinity();
        for (std::size_t b = 0; b < m.branches.size(); ++b) {
            loglik[b] = emit(m.branches[b], window);
            if (loglik[b] > shift) shift = loglik[b];
        }
        std::fill(next.begin(), next.end(), 0.0);
        for (std::size_t b = 0; b < m.branches.size(); ++b) {
            const double w = alpha[m.branches[b].s_minus] * std::exp(loglik[b] - shift);
            next[m.branches[b].s_plus] += w;
        }
        double norm = 0.0;
        for (double v : next) norm += v;
        logp += std::log(norm) + shift + ln_prior;
        for (int q = 0; q < m.num_states; ++q) alpha[q] = next[q] / norm;
    }
    return logp;
}

// ln p(y^n) at the given receiver, hidden state = the joint machine.
inline double output_log_likelihood(const JointTrellis& jt, std::span<const double> y,
                                    const ChannelParams& params, int receiver) {
    return forward_log_likelihood(jt, y, [&](const JointBranch& b, std::span<const double> w) {
        return branch_loglik(w, b.symbols1, b.symbols2, params, receiver);
    });
}

// ln p(residual) where residual = y minus the receiver's own mean; hidden
// state = the interfering sender's machine alone.
inline double residual_log_likelihood(const Trellis& other, std::span<const double> residual,
                                      const ChannelParams& params, int receiver) {
    return forward_log_likelihood(other, residual, [&](const Branch& b, std::span<const double> w) {
        return branch_loglik_cross(w, b.symbols, params, receiver);
    });
}

namespace detail {

inline void check_estimator_args(long long n_sections, int blocks, int workers) {
    if (n_sections < 10) throw std::invalid_argument("n_sections must be >= 10");
    if (blocks < 2) throw std::invalid_argument("blocks must be >= 2");
    if (workers < 1) throw std::invalid_argument("workers must be >= 1");
}

// Runs fn(block) for block = 0..blocks-1 on the given number of threads.
// Results land in a dense vector, so the later reduction is schedule-free.
template <class T, class F>
std::vector<T> run_blocks(int blocks, int workers, F&& fn) {
    std::vector<T> out(blocks);
    if (workers <= 1) {
        for (int b = 0; b < blocks; ++b) out[b] = fn(b);
        return out;
    }
    const int nw = std::min(workers, blocks);
    std::vector<std::thread> pool;
    pool.reserve(nw);
    for (int w = 0; w < nw; ++w) {
        pool.emplace_back([&, w] {
            for (int b = w; b < blocks; b += nw) out[b] = fn(b);
        });
    }
    for (auto& th : pool) th.join();
    return out;
}

inline RateEstimate reduce_blocks(const std::vector<double>& vals, long long uses_per_block,
                                  std::uint64_t seed) {
    RateEstimate e;
    e.blocks = static_cast<int>(vals.size());
    e.n = uses_per_block * e.blocks;
    e.seed = seed;
    double mean = 0.0;
    for (double v : vals) mean += v;
    mean /= e.blocks;
    double ss = 0.0;
    for (double v : vals) ss += (v - mean) * (v - mean);
    e.value = mean;
    e.std_error = std::sqrt(ss / (e.blocks - 1)) / std::sqrt(static_cast<double>(e.blocks));
    return e;
}

struct BlockRates {
    double h_out1, h_cond1, h_out2, h_cond2;  // bits per channel use
};

// One simulated block; every recursion runs on the same sample so that
// differences benefit from common random numbers.
inline BlockRates block_rates(const JointTrellis& jt, const ChannelParams& params,
                              long long n_sections, std::uint64_t bseed,
                              bool want1, bool want2) {
    const SampleRecord rec = simulate(jt, params, n_sections, bseed);
    const double inv = 1.0 / (static_cast<double>(rec.n) * kLn2);
    BlockRates r{0.0, 0.0, 0.0, 0.0};
    std::vector<double> residual(rec.n);
    if (want1) {
        r.h_out1 = -output_log_likelihood(jt, rec.y1, params, 1) * inv;
        for (long long t = 0; t < rec.n; ++t) residual[t] = rec.y1[t] - rec.x1[t];
        r.h_cond1 = -residual_log_likelihood(jt.sender2, residual, params, 1) * inv;
    }
    if (want2) {
        r.h_out2 = -output_log_likelihood(jt, rec.y2, params, 2) * inv;
        for (long long t = 0; t < rec.n; ++t) residual[t] = rec.y2[t] - rec.x2[t];
        r.h_cond2 = -residual_log_likelihood(jt.sender1, residual, params, 2) * inv;
    }
    return r;
}

}  // namespace detail

// -(1/n) log2 p(y^n) averaged over independent blocks.
inline RateEstimate estimate_output_entropy_rate(const JointTrellis& jt, const ChannelParams& params,
                                                 int receiver, long long n_sections, int blocks,
                                                 std::uint64_t seed, int workers = 1) {
    detail::check_estimator_args(n_sections, blocks, workers);
    auto vals = detail::run_blocks<double>(blocks, workers, [&](int b) {
        const auto r = detail::block_rates(jt, params, n_sections, block_seed(seed, b),
                                           receiver == 1, receiver == 2);
        return receiver == 1 ? r.h_out1 : r.h_out2;
    });
    return detail::reduce_blocks(vals, n_sections * jt.uses_per_section, seed);
}

// -(1/n) log2 p(y^n | own codeword), via the interferer-only recursion.
inline RateEstimate estimate_conditional_entropy_rate(const JointTrellis& jt, const ChannelParams& params,
                                                      int receiver, long long n_sections, int blocks,
                                                      std::uint64_t seed, int workers = 1) {
    detail::check_estimator_args(n_sections, blocks, workers);
    auto vals = detail::run_blocks<double>(blocks, workers, [&](int b) {
        const auto r = detail::block_rates(jt, params, n_sections, block_seed(seed, b),
                                           receiver == 1, receiver == 2);
        return receiver == 1 ? r.h_cond1 : r.h_cond2;
    });
    return detail::reduce_blocks(vals, n_sections * jt.uses_per_section, seed);
}

// Mutual information rate: per-block difference of the two entropy rates on
// the same simulated blocks.
inline RateEstimate estimate_mi_rate(const Trellis& scheme1, const Trellis& scheme2,
                                     const ChannelParams& params, int receiver,
                                     long long n_sections, int blocks, std::uint64_t seed,
                                     int workers = 1) {
    detail::check_estimator_args(n_sections, blocks, workers);
    const JointTrellis jt = product_trellis(scheme1, scheme2);
    auto vals = detail::run_blocks<double>(blocks, workers, [&](int b) {
        const auto r = detail::block_rates(jt, params, n_sections, block_seed(seed, b),
                                           receiver == 1, receiver == 2);
        return receiver == 1 ? r.h_out1 - r.h_cond1 : r.h_out2 - r.h_cond2;
    });
    return detail::reduce_blocks(vals, n_sections * jt.uses_per_section, seed);
}

// Both receivers' MI rates from the same simulated blocks.
inline RatePair estimate_rate_pair(const Trellis& scheme1, const Trellis& scheme2,
                                   const ChannelParams& params, long long n_sections, int blocks,
                                   std::uint64_t seed, int workers = 1) {
    detail::check_estimator_args(n_sections, blocks, workers);
    const JointTrellis jt = product_trellis(scheme1, scheme2);
    auto vals = detail::run_blocks<std::pair<double, double>>(blocks, workers, [&](int b) {
        const auto r = detail::block_rates(jt, params, n_sections, block_seed(seed, b), true, true);
        return std::pair<double, double>(r.h_out1 - r.h_cond1, r.h_out2 - r.h_cond2);
    });
    std::vector<double> v1(vals.size()), v2(vals.size());
    for (std::size_t i = 0; i < vals.size(); ++i) {
        v1[i] = vals[i].first;
        v2[i] = vals[i].second;
    }
    const long long uses = n_sections * jt.uses_per_section;
    return RatePair{detail::reduce_blocks(v1, uses, seed), detail::reduce_blocks(v2, uses, seed)};
}

// ---- memoryless quadrature baselines ----

namespace detail {

inline GaussianMixture bpsk_output_mixture(double p) {
    const double amp = std::sqrt(p);
    return GaussianMixture{{amp, -amp}, {0.5, 0.5}};
}

// output mixture of own BPSK plus i.u.d. BPSK interference
inline GaussianMixture noise_model_output_mixture(double own, double cross) {
    return GaussianMixture{{own + cross, own - cross, -own + cross, -own - cross},
                           {0.25, 0.25, 0.25, 0.25}};
}

inline GaussianMixture noise_model_conditional_mixture(double cross) {
    return GaussianMixture{{cross, -cross}, {0.5, 0.5}};
}

}  // namespace detail

// Single-user BPSK over AWGN: I = h(Y) - h(N), with h(Y) the entropy of the
// two-component mixture at +-sqrt(p).
inline double bpsk_awgn_mi(double p) {
    if (!(p > 0.0)) throw std::domain_error("bpsk_awgn_mi: power must be positive");
    return mixture_entropy_bits_gh(detail::bpsk_output_mixture(p)) - kGaussEntropyBits;
}

inline double bpsk_awgn_mi_trapezoid(double p) {
    if (!(p > 0.0)) throw std::domain_error("bpsk_awgn_mi: power must be positive");
    return mixture_entropy_bits_trapezoid(detail::bpsk_output_mixture(p)) - kGaussEntropyBits;
}

inline double bpsk_awgn_mi_checked(double p) {
    const double gh = bpsk_awgn_mi(p);
    const double tr = bpsk_awgn_mi_trapezoid(p);
    if (std::abs(gh - tr) > 1e-6)
        throw std::runtime_error("quadrature cross-validation failed for bpsk_awgn_mi");
    return gh;
}

// Rate of one user when the other's BPSK stream is treated as memoryless
// additive noise: I = h(Y) - h(Y|X) with 4- and 2-component mixtures.
inline double noise_model_mi(const ChannelParams& params, int receiver) {
    params.validate();
    const double own = params.own_amp(receiver);
    const double cross = params.cross_amp(receiver);
    return mixture_entropy_bits_gh(detail::noise_model_output_mixture(own, cross)) -
           mixture_entropy_bits_gh(detail::noise_model_conditional_mixture(cross));
}

inline double noise_model_mi_trapezoid(const ChannelParams& params, int receiver) {
    params.validate();
    const double own = params.own_amp(receiver);
    const double cross = params.cross_amp(receiver);
    return mixture_entropy_bits_trapezoid(detail::noise_model_output_mixture(own, cross)) -
           mixture_entropy_bits_trapezoid(detail::noise_model_conditional_mixture(cross));
}

inline double noise_model_mi_checked(const ChannelParams& params, int receiver) {
    const double gh = noise_model_mi(params, receiver);
    const double tr = noise_model_mi_trapezoid(params, receiver);
    if (std::abs(gh - tr) > 1e-6)
        throw std::runtime_error("quadrature cross-validation failed for noise_model_mi");
    return gh;
}

}  // namespace gifc
