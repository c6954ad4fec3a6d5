// Deterministic 1-D integration for unit-variance Gaussian mixtures:
// Gauss-Hermite rules plus an independent refining-trapezoid integrator
// used to cross-validate every quadrature value.

#pragma once

#include <cmath>
#include <limits>
#include <stdexcept>
#include <vector>

namespace gifc {

inline constexpr double kSqrtPi = 1.7724538509055160273;
inline constexpr double kLn2 = 0.69314718055994530942;
// differential entropy of a unit Gaussian, 0.5*log2(2*pi*e)
inline constexpr double kGaussEntropyBits = 2.0470955851806411027;

struct GaussHermite {
    std::vector<double> nodes;     // roots of H_n, symmetric about 0
    std::vector<double> weights;   // for the weight function exp(-x^2)
};

// Newton iteration on the orthonormal Hermite recurrence; stable well past
// the orders used here.
inline GaussHermite gauss_hermite(int n) {
    if (n < 1) throw std::invalid_argument("gauss_hermite order must be >= 1");
    GaussHermite q;
    q.nodes.assign(n, 0.0);
    q.weights.assign(n, 0.0);
    const double eps = 1e-14;
    const int m = (n + 1) / 2;
    double z = 0.0;
    for (int i = 0; i < m; ++i) {
        if (i == 0) {
            z = std::sqrt(2.0 * n + 1.0) - 1.85575 * std::pow(2.0 * n + 1.0, -0.16667);
        } else if (i == 1) {
            z -= 1.14 * std::pow(n, 0.426) / z;
        } else if (i == 2) {
            z = 1.86 * z - 0.86 * q.nodes[n - 1];
        } else if (i == 3) {
            z = 1.91 * z - 0.91 * q.nodes[n - 2];
        } else {
            z = 2.0 * z - q.nodes[n - i + 1];
        }
        double pp = 0.0;
        for (int iter = 0; iter < 100; ++iter) {
            double p1 = 0.7511255444649424829;  // pi^(-1/4)
            double p2 = 0.0;
            for (int j = 1; j <= n; ++j) {
                const double p3 = p2;
                p2 = p1;
                p1 = z * std::sqrt(2.0 / j) * p2 - std::sqrt((j - 1.0) / j) * p3;
            }
            pp = std::sqrt(2.0 * n) * p2;
            const double dz = p1 / pp;
            z -= dz;
            if (std::abs(dz) <= eps) break;
        }
        q.nodes[n - 1 - i] = z;
        q.nodes[i] = -z;
        q.weights[n - 1 - i] = 2.0 / (pp * pp);
        q.weights[i] = q.weights[n - 1 - i];
    }
    return q;
}

inline const GaussHermite& default_gauss_hermite() {
    static const GaussHermite q = gauss_hermite(96);
    return q;
}

// Equal-variance Gaussian mixture sum_c weights[c] * N(means[c], 1).
struct GaussianMixture {
    std::vector<double> means;
    std::vector<double> weights;

    void validate() const {
        if (means.empty() || means.size() != weights.size())
            throw std::invalid_argument("mixture needs matching nonempty means/weights");
        double s = 0.0;
        for (double w : weights) {
            if (!(w >= 0.0)) throw std::invalid_argument("mixture weights must be >= 0");
            s += w;
        }
        if (std::abs(s - 1.0) > 1e-12) throw std::invalid_argument("mixture weights must sum to 1");
    }

    std::vector<double> log_weights() const {
        std::vector<double> lw(weights.size());
        for (std::size_t c = 0; c < weights.size(); ++c)
            lw[c] = weights[c] > 0.0 ? std::log(weights[c]) : -std::numeric_limits<double>::infinity();
        return lw;
    }

    double log2_density(double y) const { return log2_density_with(y, log_weights()); }

    // log-sum-exp over components; log weights are precomputed by the hot loops
    double log2_density_with(double y, const std::vector<double>& lw) const {
        double best = -std::numeric_limits<double>::infinity();
        for (std::size_t c = 0; c < means.size(); ++c) {
            const double d = y - means[c];
            const double e = lw[c] - 0.5 * d * d;
            if (e > best) best = e;
        }
        double acc = 0.0;
        for (std::size_t c = 0; c < means.size(); ++c) {
            const double d = y - means[c];
            acc += std::exp(lw[c] - 0.5 * d * d - best);
        }
        return (best + std::log(acc) - 0.5 * 1.8378770664093454836) / kLn2;
    }
};

// h(Y) in bits via per-component Gauss-Hermite expectation of -log2 f.
inline double mixture_entropy_bits_gh(const GaussianMixture& mix,
                                      const GaussHermite& q = default_gauss_hermite()) {
    mix.validate();
    const auto lw = mix.log_weights();
    double h = 0.0;
    for (std::size_t c = 0; c < mix.means.size(); ++c) {
        if (mix.weights[c] == 0.0) continue;
        double e = 0.0;
        for (std::size_t k = 0; k < q.nodes.size(); ++k)
            e += q.weights[k] * mix.log2_density_with(std::sqrt(2.0) * q.nodes[k] + mix.means[c], lw);
        h -= mix.weights[c] * e / kSqrtPi;
    }
    return h;
}

// Independent check: trapezoid rule on [-(max|mean|+10), +(max|mean|+10)],
// intervals doubled until successive values agree to 1e-9.
inline double mixture_entropy_bits_trapezoid(const GaussianMixture& mix) {
    mix.validate();
    double m = 0.0;
    for (double mu : mix.means) m = std::max(m, std::abs(mu));
    const double lo = -(m + 10.0), hi = m + 10.0;
    const auto lw = mix.log_weights();
    auto integrand = [&](double y) {
        const double lf = mix.log2_density_with(y, lw);
        if (lf < -300.0) return 0.0;   // f * log f vanishes in the far tail
        return -std::exp(lf * kLn2) * lf;
    };
    long long intervals = 64;
    double h = (hi - lo) / static_cast<double>(intervals);
    double sum = 0.5 * (integrand(lo) + integrand(hi));
    for (long long i = 1; i < intervals; ++i) sum += integrand(lo + h * static_cast<double>(i));
    double prev = sum * h;
    for (int round = 0; round < 18; ++round) {
        double mid = 0.0;
        for (long long i = 0; i < intervals; ++i)
            mid += integrand(lo + h * (static_cast<double>(i) + 0.5));
        sum += mid;
        intervals *= 2;
        h *= 0.5;
        const double cur = sum * h;
        if (std::abs(cur - prev) <= 1e-9) return cur;
        prev = cur;
    }
    return prev;
}

}  // namespace gifc
