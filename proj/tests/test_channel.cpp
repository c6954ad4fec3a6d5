#include <catch2/catch_amalgamated.hpp>

#include <cmath>

#include "gifc/channel.hpp"
#include "gifc/config.hpp"
#include "test_support.hpp"

using namespace gifc;

namespace {

ChannelParams params_7db(double a = 0.5) {
    ChannelParams p;
    p.p1 = db_to_linear(7.0);
    p.p2 = db_to_linear(7.0);
    p.a = a;
    return p;
}

}  // namespace

TEST_CASE("db_to_linear") {
    CHECK(db_to_linear(0.0) == Catch::Approx(1.0).margin(1e-15));
    CHECK(db_to_linear(10.0) == Catch::Approx(10.0).margin(1e-12));
    CHECK(db_to_linear(7.0) == Catch::Approx(5.011872336272722).margin(1e-12));
    CHECK(db_to_linear(7.0) == Catch::Approx(5.0119).margin(5e-5));
    CHECK_THROWS_AS(db_to_linear(std::numeric_limits<double>::infinity()), std::invalid_argument);
}

TEST_CASE("params validation") {
    ChannelParams p;
    p.p1 = 0.0;
    CHECK_THROWS_AS(p.validate(), std::invalid_argument);
    p = ChannelParams{};
    p.a = -0.1;
    CHECK_THROWS_AS(p.validate(), std::invalid_argument);
}

TEST_CASE("simulate is a pure function of its arguments") {
    const JointTrellis jt =
        product_trellis(build_conv_trellis(parse_generator_octal("7,5")), build_iud_trellis(1));
    const ChannelParams p = params_7db();
    const SampleRecord a = simulate(jt, p, 500, 42);
    const SampleRecord b = simulate(jt, p, 500, 42);
    CHECK(a.x1 == b.x1);
    CHECK(a.x2 == b.x2);
    CHECK(a.y1 == b.y1);
    CHECK(a.y2 == b.y2);
    CHECK(a.n == 1000);
    CHECK(a.x1.size() == 1000);

    const SampleRecord c = simulate(jt, p, 500, 43);
    CHECK(a.y1 != c.y1);
}

TEST_CASE("zero cross gain decouples the channel") {
    const JointTrellis jt = product_trellis(build_iud_trellis(1), build_iud_trellis(1));
    const ChannelParams p = params_7db(0.0);
    const long long n = 100000;
    const SampleRecord rec = simulate(jt, p, n, 7);
    double dot = 0.0, power = 0.0;
    for (long long t = 0; t < n; ++t) {
        dot += rec.y1[t] * rec.x2[t];
        power += rec.y1[t] * rec.y1[t];
    }
    const double corr = dot / n / std::sqrt(power / n * p.p2);
    CHECK(std::abs(corr) < 3.0 / std::sqrt(static_cast<double>(n)));
}

TEST_CASE("output power matches the moment identity") {
    const JointTrellis jt = product_trellis(build_iud_trellis(1), build_iud_trellis(1));
    const ChannelParams p = params_7db(0.5);
    const long long n = 100000;
    const SampleRecord rec = simulate(jt, p, n, 11);
    double mean = 0.0, m2 = 0.0;
    for (double y : rec.y1) {
        mean += y * y;
        m2 += y * y * y * y;
    }
    mean /= n;
    m2 /= n;
    const double se = std::sqrt((m2 - mean * mean) / n);
    const double expected = p.p1 + p.a * p.p2 + 1.0;
    CHECK(std::abs(mean - expected) < 3.0 * se);
}

TEST_CASE("residual noise has unit variance") {
    const JointTrellis jt =
        product_trellis(build_conv_trellis(parse_generator_octal("7,5")), build_iud_trellis(1));
    const ChannelParams p = params_7db(0.5);
    const long long sections = 50000;
    const SampleRecord rec = simulate(jt, p, sections, 13);
    const double cross = p.cross_amp(1);
    double mean = 0.0, m2 = 0.0;
    for (long long t = 0; t < rec.n; ++t) {
        const double z = rec.y1[t] - rec.x1[t] - cross * (rec.x2[t] / p.amp2());
        mean += z * z;
        m2 += z * z * z * z;
    }
    mean /= rec.n;
    m2 /= rec.n;
    const double se = std::sqrt((m2 - mean * mean) / rec.n);
    CHECK(std::abs(mean - 1.0) < 3.0 * se);
}

TEST_CASE("branch log likelihood") {
    ChannelParams p;
    p.p1 = 4.0;
    p.p2 = 1.0;
    p.a = 0.25;
    const std::vector<double> s1{1.0};
    const std::vector<double> s2{-1.0};
    // mean at receiver 1: 2*1 + 0.5*(-1) = 1.5
    const double at_mean = branch_loglik(std::vector<double>{1.5}, s1, s2, p, 1);
    CHECK(at_mean == Catch::Approx(-0.5 * kLog2Pi).margin(1e-14));
    const double shifted = branch_loglik(std::vector<double>{2.5}, s1, s2, p, 1);
    CHECK(shifted == Catch::Approx(-0.5 * kLog2Pi - 0.5).margin(1e-14));

    // a length-2 window adds the per-use terms
    const std::vector<double> s1w{1.0, -1.0}, s2w{-1.0, -1.0};
    const std::vector<double> y{0.3, -1.1};
    const double whole = branch_loglik(y, s1w, s2w, p, 2);
    const double first = branch_loglik(std::vector<double>{y[0]}, std::vector<double>{s1w[0]},
                                       std::vector<double>{s2w[0]}, p, 2);
    const double second = branch_loglik(std::vector<double>{y[1]}, std::vector<double>{s1w[1]},
                                        std::vector<double>{s2w[1]}, p, 2);
    CHECK(whole == Catch::Approx(first + second).margin(1e-14));

    CHECK_THROWS_AS(branch_loglik(y, s1, s2, p, 1), std::invalid_argument);
    CHECK_THROWS_AS(branch_loglik_cross(y, s1, p, 1), std::invalid_argument);
}

TEST_CASE("residual log likelihood uses the cross amplitude") {
    ChannelParams p;
    p.p1 = 4.0;
    p.p2 = 2.0;
    p.a = 0.5;
    const std::vector<double> other{-1.0};
    const double cross = p.cross_amp(1);  // sqrt(0.5 * 2) = 1
    const double v = branch_loglik_cross(std::vector<double>{-cross}, other, p, 1);
    CHECK(v == Catch::Approx(-0.5 * kLog2Pi).margin(1e-14));
}
