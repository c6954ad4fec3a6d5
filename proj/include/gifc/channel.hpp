// Symmetric two-user Gaussian interference channel with BPSK inputs.
//
//   y1 = sqrt(P1) x1 + sqrt(a P2) x2 + n1
//   y2 = sqrt(P2) x2 + sqrt(a P1) x1 + n2
//
// with unit-variance white Gaussian noise. Trellis branches carry unit
// symbols; the power scaling lives here.

#pragma once

#include <cmath>
#include <cstdint>
#include <random>
#include <span>
#include <stdexcept>
#include <vector>

#include "gifc/trellis.hpp"

namespace gifc {

inline constexpr double kLog2Pi = 1.8378770664093454836;  // ln(2*pi)

struct ChannelParams {
    double p1 = 1.0;          // linear power of sender 1
    double p2 = 1.0;          // linear power of sender 2
    double a = 0.0;           // cross gain
    static constexpr double noise_var = 1.0;

    void validate() const {
        if (!(p1 > 0.0) || !std::isfinite(p1)) throw std::invalid_argument("p1 must be positive");
        if (!(p2 > 0.0) || !std::isfinite(p2)) throw std::invalid_argument("p2 must be positive");
        if (!(a >= 0.0) || !std::isfinite(a)) throw std::invalid_argument("cross gain a must be >= 0");
    }

    double amp1() const { return std::sqrt(p1); }
    double amp2() const { return std::sqrt(p2); }
    // amplitude of the interfering sender as seen by the given receiver
    double cross_amp(int receiver) const { return receiver == 1 ? std::sqrt(a * p2) : std::sqrt(a * p1); }
    double own_amp(int receiver) const { return receiver == 1 ? amp1() : amp2(); }
};

inline double db_to_linear(double p_db) {
    if (!std::isfinite(p_db)) throw std::invalid_argument("power in dB must be finite");
    return std::pow(10.0, p_db / 10.0);
}

inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ull;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
    return x ^ (x >> 31);
}

// Substream rule: block b of a run seeded with s draws from a generator
// seeded with block_seed(s, b), so serial and parallel schedules agree.
inline std::uint64_t block_seed(std::uint64_t seed, std::uint64_t block) {
    return splitmix64(seed ^ splitmix64(block + 1));
}

// Deterministic sample stream on top of mt19937_64. Gaussian variates use
// the basic Box-Muller transform (two uniforms per pair, second variate
// cached) so the draw sequence is fixed by the seed alone.
class SampleStream {
  public:
    explicit SampleStream(std::uint64_t seed) : gen_(seed) {}

    std::uint8_t bit() { return static_cast<std::uint8_t>(gen_() >> 63); }

    double uniform01() {  // in [0, 1)
        return static_cast<double>(gen_() >> 11) * 0x1.0p-53;
    }

    double normal() {
        if (have_cached_) {
            have_cached_ = false;
            return cached_;
        }
        const double u1 = 1.0 - uniform01();  // (0, 1]
        const double u2 = uniform01();
        const double r = std::sqrt(-2.0 * std::log(u1));
        const double theta = 2.0 * 3.14159265358979323846 * u2;
        cached_ = r * std::sin(theta);
        have_cached_ = true;
        return r * std::cos(theta);
    }

  private:
    std::mt19937_64 gen_;
    bool have_cached_ = false;
    double cached_ = 0.0;
};

struct SampleRecord {
    std::vector<double> x1, x2;   // power-scaled symbols, +-sqrt(P)
    std::vector<double> y1, y2;
    std::uint64_t seed = 0;
    long long n = 0;              // channel uses
};

// Runs the joint machine from the all-zero state with i.u.d. drive bits.
// Per section: sender 1 bits, then sender 2 bits, then per use one noise
// variate for each receiver.
inline SampleRecord simulate(const JointTrellis& jt, const ChannelParams& params,
                             long long n_sections, std::uint64_t seed) {
    params.validate();
    if (n_sections < 1) throw std::invalid_argument("n_sections must be >= 1");
    const int b1 = jt.sender1.driving_bits_per_section;
    const int b2 = jt.sender2.driving_bits_per_section;
    const int l = jt.uses_per_section;
    const double a1 = params.amp1(), a2 = params.amp2();
    const double c1 = params.cross_amp(1), c2 = params.cross_amp(2);

    SampleRecord rec;
    rec.seed = seed;
    rec.n = n_sections * l;
    rec.x1.reserve(rec.n);
    rec.x2.reserve(rec.n);
    rec.y1.reserve(rec.n);
    rec.y2.reserve(rec.n);

    SampleStream rng(seed);
    int state = 0;
    for (long long s = 0; s < n_sections; ++s) {
        std::uint32_t d1 = 0, d2 = 0;
        for (int i = 0; i < b1; ++i) d1 |= static_cast<std::uint32_t>(rng.bit()) << i;
        for (int i = 0; i < b2; ++i) d2 |= static_cast<std::uint32_t>(rng.bit()) << i;
        const JointBranch& br = jt.outgoing(state, (d1 << b2) | d2);
        for (int t = 0; t < l; ++t) {
            const double s1 = br.symbols1[t], s2 = br.symbols2[t];
            const double n1 = rng.normal();
            const double n2 = rng.normal();
            rec.x1.push_back(a1 * s1);
            rec.x2.push_back(a2 * s2);
            rec.y1.push_back(a1 * s1 + c1 * s2 + n1);
            rec.y2.push_back(a2 * s2 + c2 * s1 + n2);
        }
        state = br.s_plus;
    }
    return rec;
}

// Log density of a window of observations given both senders' unit symbols.
inline double branch_loglik(std::span<const double> y_window,
                            std::span<const double> sender1_symbols,
                            std::span<const double> sender2_symbols,
                            const ChannelParams& params, int receiver) {
    if (y_window.size() != sender1_symbols.size() || y_window.size() != sender2_symbols.size())
        throw std::invalid_argument("branch_loglik: window length mismatch");
    const double own = params.own_amp(receiver);
    const double cross = params.cross_amp(receiver);
    double ll = 0.0;
    for (std::size_t t = 0; t < y_window.size(); ++t) {
        const double mean = receiver == 1 ? own * sender1_symbols[t] + cross * sender2_symbols[t]
                                          : own * sender2_symbols[t] + cross * sender1_symbols[t];
        const double d = y_window[t] - mean;
        ll += -0.5 * kLog2Pi - 0.5 * d * d;
    }
    return ll;
}

// Residual form: the caller has already subtracted the receiver's own mean,
// so only the interfering sender's cross term remains.
inline double branch_loglik_cross(std::span<const double> y_residual,
                                  std::span<const double> other_symbols,
                                  const ChannelParams& params, int receiver) {
    if (y_residual.size() != other_symbols.size())
        throw std::invalid_argument("branch_loglik_cross: window length mismatch");
    const double cross = params.cross_amp(receiver);
    double ll = 0.0;
    for (std::size_t t = 0; t < y_residual.size(); ++t) {
        const double d = y_residual[t] - cross * other_symbols[t];
        ll += -0.5 * kLog2Pi - 0.5 * d * d;
    }
    return ll;
}

}  // namespace gifc
