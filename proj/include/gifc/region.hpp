// Union-of-rectangles rate region: every evaluated scheme pair contributes
// the rectangle [0,r1] x [0,r2]; the reported frontier is the time-sharing
// (upper convex) hull of the corners, and the raw staircase of undominated
// corners is kept alongside for comparison.

#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "gifc/infodensity.hpp"

namespace gifc {

struct Rectangle {
    double r1 = 0.0, r2 = 0.0;       // corner, bits per use
    std::string label;
    double r1_se = 0.0, r2_se = 0.0; // reporting only; geometry uses the point estimates
};

struct FrontierVertex {
    double r1 = 0.0, r2 = 0.0;
    std::string label;
};

struct RateRegion {
    std::vector<Rectangle> rectangles;
    std::vector<FrontierVertex> frontier;   // convex frontier, r1 ascending, ends on both axes
    std::vector<FrontierVertex> staircase;  // undominated corners, r1 ascending

    // membership in the time-sharing region under the convex frontier
    bool contains(double q1, double q2) const {
        if (q1 < 0.0 || q2 < 0.0 || frontier.empty()) return false;
        if (q1 > frontier.back().r1) return false;
        if (frontier.size() == 1) return q1 <= frontier[0].r1 && q2 <= frontier[0].r2;
        for (std::size_t i = 0; i + 1 < frontier.size(); ++i) {
            const auto& a = frontier[i];
            const auto& b = frontier[i + 1];
            if (q1 < a.r1 || q1 > b.r1) continue;
            double height;
            if (b.r1 > a.r1) {
                const double lam = (q1 - a.r1) / (b.r1 - a.r1);
                height = a.r2 + lam * (b.r2 - a.r2);
            } else {
                height = std::max(a.r2, b.r2);
            }
            if (q2 <= height) return true;
        }
        return false;
    }
};

namespace detail {

inline double cross(const FrontierVertex& o, const FrontierVertex& a, const FrontierVertex& b) {
    return (a.r1 - o.r1) * (b.r2 - o.r2) - (a.r2 - o.r2) * (b.r1 - o.r1);
}

}  // namespace detail

inline RateRegion assemble(std::vector<Rectangle> corners) {
    if (corners.empty()) throw std::invalid_argument("assemble: need at least one corner");
    for (const auto& c : corners)
        if (!(c.r1 >= 0.0) || !(c.r2 >= 0.0) || !std::isfinite(c.r1) || !std::isfinite(c.r2))
            throw std::invalid_argument("assemble: corners must be finite and nonnegative");

    RateRegion region;
    region.rectangles = std::move(corners);

    double r1max = 0.0, r2max = 0.0;
    for (const auto& c : region.rectangles) {
        r1max = std::max(r1max, c.r1);
        r2max = std::max(r2max, c.r2);
    }

    std::vector<FrontierVertex> pts;
    pts.reserve(region.rectangles.size() + 2);
    for (const auto& c : region.rectangles) pts.push_back({c.r1, c.r2, c.label});
    pts.push_back({0.0, r2max, "axis"});
    pts.push_back({r1max, 0.0, "axis"});
    // axis points rank behind real corners so dedup keeps corner labels
    auto before = [](const FrontierVertex& a, const FrontierVertex& b) {
        if (a.r1 != b.r1) return a.r1 < b.r1;
        if (a.r2 != b.r2) return a.r2 > b.r2;
        const int ra = a.label == "axis" ? 1 : 0, rb = b.label == "axis" ? 1 : 0;
        if (ra != rb) return ra < rb;
        return a.label < b.label;
    };
    std::sort(pts.begin(), pts.end(), before);
    pts.erase(std::unique(pts.begin(), pts.end(),
                          [](const FrontierVertex& a, const FrontierVertex& b) {
                              return a.r1 == b.r1 && a.r2 == b.r2;
                          }),
              pts.end());

    // upper hull, left to right; collinear interior vertices are dropped
    std::vector<FrontierVertex> hull;
    for (const auto& p : pts) {
        while (hull.size() >= 2 && detail::cross(hull[hull.size() - 2], hull.back(), p) >= 0.0)
            hull.pop_back();
        hull.push_back(p);
    }
    region.frontier = std::move(hull);

    // staircase: sweep corners by descending r1, keeping those that raise r2
    std::vector<FrontierVertex> corners_desc;
    for (const auto& c : region.rectangles) corners_desc.push_back({c.r1, c.r2, c.label});
    std::sort(corners_desc.begin(), corners_desc.end(),
              [](const FrontierVertex& a, const FrontierVertex& b) {
                  if (a.r1 != b.r1) return a.r1 > b.r1;
                  if (a.r2 != b.r2) return a.r2 > b.r2;
                  return a.label < b.label;
              });
    std::vector<FrontierVertex> stairs;
    for (const auto& p : corners_desc)
        if (stairs.empty() || p.r2 > stairs.back().r2) stairs.push_back(p);
    std::reverse(stairs.begin(), stairs.end());
    region.staircase = std::move(stairs);
    return region;
}

// Interference-as-noise corner for the current channel (both users treat the
// other's stream as memoryless BPSK noise).
inline Rectangle point_c(const ChannelParams& params) {
    Rectangle c;
    c.r1 = noise_model_mi_checked(params, 1);
    c.r2 = noise_model_mi_checked(params, 2);
    c.label = "C";
    return c;
}

// Corners for the two mixed scheme assignments: A = (convolutional, i.u.d.),
// B = the mirror image.
inline std::pair<Rectangle, Rectangle> point_a_b(const ChannelParams& params, long long n_sections,
                                                 int blocks, std::uint64_t seed, int workers = 1) {
    const Trellis cc = build_conv_trellis(parse_generator_octal("7,5"));
    const Trellis un = build_iud_trellis(1);
    const RatePair a = estimate_rate_pair(cc, un, params, n_sections, blocks, seed, workers);
    const RatePair b = estimate_rate_pair(un, cc, params, n_sections, blocks, seed, workers);
    Rectangle ra{a.r1.value, a.r2.value, "A", a.r1.std_error, a.r2.std_error};
    Rectangle rb{b.r1.value, b.r2.value, "B", b.r1.std_error, b.r2.std_error};
    return {ra, rb};
}

}  // namespace gifc
