#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <random>

#include "support/fixtures.hpp"
#include "ventopt/components.hpp"

using namespace ventopt;
using Catch::Approx;

namespace {

FanProductLine toy_line(std::array<double, 3> alpha) {
    FanProductLine l;
    l.id = "toy";
    l.pressure_coeff = alpha;
    l.power_coeff = {0.0, 0.0, 0.0, 0.0, 0.0};
    l.cost_coeff = {0.0, 0.0, 0.0, 0.0};
    FanBounds b;
    b.diameter_m = 1.0;
    b.flow_min_m3s = 0.0;
    b.flow_max_m3s = 10.0;
    b.speed_min = 0.0;
    l.sizes.push_back(b);
    return l;
}

}  // namespace

TEST_CASE("fan pressure polynomial") {
    CHECK(fan_pressure(3.0, 0.0, 1.0, toy_line({0.0, 0.0, 500.0})) == Approx(0.0));
    CHECK(fan_pressure(1.0, 1.0, 1.0, toy_line({-100.0, 0.0, 500.0})) == Approx(400.0));
}

TEST_CASE("fan pressure affinity scaling") {
    const FanProductLine l = vtest::line_ax();
    std::mt19937_64 rng(5);
    std::uniform_real_distribution<double> dist(0.5, 1.5);
    for (int i = 0; i < 200; ++i) {
        const double q = dist(rng), n = dist(rng) * 0.6, d = dist(rng);
        const double ln_ = dist(rng), ld = dist(rng);
        const double scaled = fan_pressure(ln_ * ld * ld * ld * q, ln_ * n, ld * d, l);
        CHECK(scaled == Approx(ln_ * ln_ * ld * ld * fan_pressure(q, n, d, l)).epsilon(1e-12));
    }
}

TEST_CASE("fan power polynomial") {
    FanProductLine l = toy_line({0.0, 0.0, 1.0});
    l.power_coeff = {0.0, 0.0, 0.0, 0.0, 50.0};
    CHECK(fan_power(2.0, 0.7, 1.0, l) == Approx(50.0));
    l.power_coeff = {0.0, 0.0, 0.0, 800.0, 0.0};
    CHECK(fan_power(2.0, 0.5, 1.0, l) == Approx(100.0));
}

TEST_CASE("fan power is nondecreasing in speed on the sample lines") {
    for (const FanProductLine& l : {vtest::line_ax(), vtest::line_br()}) {
        for (const auto& size : l.sizes) {
            for (int i = 0; i <= 10; ++i) {
                const double q = size.flow_min_m3s +
                                 (size.flow_max_m3s - size.flow_min_m3s) * i / 10.0;
                double prev = -1e300;
                for (int j = 0; j <= 20; ++j) {
                    const double n = size.speed_min + (1.0 - size.speed_min) * j / 20.0;
                    const double po = fan_power(q, n, size.diameter_m, l);
                    CHECK(po >= prev);
                    prev = po;
                }
            }
        }
    }
}

TEST_CASE("fan cost") {
    FanProductLine l = toy_line({0, 0, 0});
    l.cost_coeff = {1000.0, 200.0, 0.0, 0.0};
    CHECK(fan_cost(0.5, l, false) == Approx(700.0));
    l.cost_coeff = {1000.0, 200.0, 400.0, 50.0};
    CHECK(fan_cost(0.5, l, false) == Approx(700.0));
    CHECK(fan_cost(0.5, l, true) == Approx(950.0));
    CHECK(fan_cost(0.8, l, false) - fan_cost(0.5, l, false) == Approx(1000.0 * 0.3));
}

TEST_CASE("fan speed inversion") {
    const FanProductLine l = toy_line({-100.0, 0.0, 500.0});
    CHECK(fan_speed_for(1.0, 400.0, 1.0, l) == Approx(1.0).margin(1e-12));
    CHECK_THROWS_AS(fan_speed_for(1.0, 1e6, 1.0, l), std::domain_error);
}

TEST_CASE("fan speed inversion picks the boundary when exact") {
    FanProductLine l = toy_line({-100.0, 0.0, 500.0});
    l.sizes[0].speed_min = 0.4;
    const double dp = fan_pressure(1.0, 0.4, 1.0, l);
    CHECK(fan_speed_for(1.0, dp, 1.0, l) == Approx(0.4).margin(1e-12));
}

TEST_CASE("fan speed inversion round-trips on the sample line") {
    const FanProductLine l = vtest::line_ax();
    std::mt19937_64 rng(17);
    for (const auto& size : l.sizes) {
        std::uniform_real_distribution<double> qd(size.flow_min_m3s, size.flow_max_m3s);
        std::uniform_real_distribution<double> nd(size.speed_min, 1.0);
        for (int i = 0; i < 300; ++i) {
            const double q = qd(rng);
            const double target = fan_pressure(q, nd(rng), size.diameter_m, l);
            if (target <= 0.0) continue;
            const double n = fan_speed_for(q, target, size.diameter_m, l);
            CHECK(std::abs(fan_pressure(q, n, size.diameter_m, l) - target) <=
                  1e-10 * std::max(1.0, target));
        }
    }
}

TEST_CASE("fan flow noise log laws") {
    const FanProductLine l = vtest::line_ax();
    const auto base = fan_flow_noise(1.0, 1.0, 0.5, 0.5, l);
    for (std::size_t f = 0; f < kBandCount; ++f) {
        const auto& e = l.noise_coeff[f];
        CHECK(base[f] == Approx(e[0] * 0.5 + e[1] * 0.25 + e[2] * 0.5 + e[3]).margin(1e-12));
    }
    const auto q2 = fan_flow_noise(2.0, 1.0, 0.5, 0.5, l);
    const auto p2 = fan_flow_noise(1.0, 2.0, 0.5, 0.5, l);
    for (std::size_t f = 0; f < kBandCount; ++f) {
        CHECK(q2[f] - base[f] == Approx(10.0 * std::log10(2.0)).margin(1e-12));
        CHECK(p2[f] - base[f] == Approx(20.0 * std::log10(2.0)).margin(1e-12));
    }
    CHECK_THROWS_AS(fan_flow_noise(0.0, 1.0, 0.5, 0.5, l), std::domain_error);
    CHECK_THROWS_AS(fan_flow_noise(1.0, -2.0, 0.5, 0.5, l), std::domain_error);
}

TEST_CASE("vfc noise terms") {
    VfcSpec v;
    v.height_m = 0.4;
    v.width_m = 0.4;
    v.pressure_min_pa = 0.0;
    v.pressure_max_pa = 300.0;
    for (std::size_t f = 0; f < kBandCount; ++f) v.noise_coeff[f] = {0, 0, 0, 0, 0, 30.0};
    const auto flat = vfc_flow_noise(0.5, 100.0, v);
    for (std::size_t f = 0; f < kBandCount; ++f) CHECK(flat[f] == Approx(30.0));

    const VfcSpec sample = vtest::vfc_vr40();
    const auto a = vfc_flow_noise(0.5, 100.0, sample);
    const auto b = vfc_flow_noise(0.5, 101.0, sample);
    for (std::size_t f = 0; f < kBandCount; ++f)
        CHECK(b[f] - a[f] == Approx(sample.noise_coeff[f][0]).margin(1e-12));

    const auto rest = vfc_flow_noise(0.0, 0.0, sample);
    const double hb = 0.16;
    for (std::size_t f = 0; f < kBandCount; ++f) {
        const auto& e = sample.noise_coeff[f];
        CHECK(rest[f] == Approx(e[3] * hb + e[4] * std::sqrt(hb) + e[5]).margin(1e-12));
    }
    CHECK_THROWS_AS(vfc_flow_noise(0.5, 400.0, sample), std::domain_error);
}

TEST_CASE("vfc cost is constant per spec") {
    VfcSpec v;
    v.height_m = 0.5;
    v.width_m = 0.4;
    v.cost_coeff = {500.0, 100.0, 80.0};
    CHECK(vfc_cost(v, false) == Approx(500.0 * 0.2 + 100.0));
    CHECK(vfc_cost(v, true) == Approx(500.0 * 0.2 + 180.0));
    v.cost_coeff = {0.0, 0.0, 0.0};
    CHECK(vfc_cost(v, true) == 0.0);
}

TEST_CASE("silencer geometry") {
    SilencerSpec s;
    s.height_m = 1.0;
    s.width_m = 1.0;
    s.splitter_width_m = 0.1;
    s.splitter_min = 1;
    s.splitter_max = 5;
    const auto g = silencer_geometry(s, 5, 1.0);
    CHECK(g.gap_m == Approx(0.1));
    CHECK(g.velocity_ms == Approx(2.0));

    s.width_m = 0.5;
    CHECK_THROWS_AS(silencer_geometry(s, 5, 1.0), std::domain_error);
    s.width_m = 1.0;
    CHECK_THROWS_AS(silencer_geometry(s, 9, 1.0), std::domain_error);
}

TEST_CASE("silencer pressure loss") {
    SilencerSpec s;
    s.pressure_coeff = {1.0, 0.1, 0.05};
    CHECK(silencer_pressure_loss(0.0, 0.1, 1.0, s) == Approx(0.0));
    CHECK(silencer_pressure_loss(2.0, 0.1, 1.0, s) == Approx(10.0));
    // linear in length at fixed velocity and gap
    const double d1 = silencer_pressure_loss(2.0, 0.1, 1.0, s);
    const double d2 = silencer_pressure_loss(2.0, 0.1, 2.0, s);
    const double d3 = silencer_pressure_loss(2.0, 0.1, 3.0, s);
    CHECK(d3 - d2 == Approx(d2 - d1).margin(1e-12));
    CHECK_THROWS_AS(silencer_pressure_loss(2.0, 0.0, 1.0, s), std::domain_error);
}

TEST_CASE("silencer cost linearity") {
    SilencerSpec s;
    s.height_m = 0.6;
    s.width_m = 0.6;
    s.cost_coeff = {140.0, 900.0, 320.0, 180.0};
    CHECK(silencer_cost(3, 1.0, s) ==
          Approx(140.0 * 3 + 900.0 * 0.6 + 320.0 * 0.36 + 180.0));
    CHECK(silencer_cost(4, 1.0, s) - silencer_cost(3, 1.0, s) == Approx(140.0));
    CHECK(silencer_cost(3, 2.0, s) - silencer_cost(3, 1.0, s) == Approx(900.0 * 0.6));
}

TEST_CASE("silencer damping polynomial") {
    SilencerSpec s;
    s.width_m = 1.0;
    for (std::size_t f = 0; f < kBandCount; ++f) s.damping_coeff[f] = {0, 0, 0, 0, 0, 0, 0, 0};
    const auto zero = silencer_damping(3, 1.0, s);
    for (std::size_t f = 0; f < kBandCount; ++f) CHECK(zero[f] == 0.0);

    for (std::size_t f = 0; f < kBandCount; ++f)
        s.damping_coeff[f] = {0.5, 0.4, 0.3, 0.2, 0.1, 5.0, 0.7, 1.0};
    const auto d = silencer_damping(3, 1.0, s);
    // delta0 n^2 + delta1 B^2 n + delta2 l n + delta3 l B + delta4 n + delta5 l + delta6 B + delta7
    const double expected = 0.5 * 9 + 0.4 * 3 + 0.3 * 3 + 0.2 + 0.1 * 3 + 5.0 + 0.7 + 1.0;
    for (std::size_t f = 0; f < kBandCount; ++f) CHECK(d[f] == Approx(expected).margin(1e-12));

    // additive structure in length
    const auto d0 = silencer_damping(3, 0.0, s);
    const auto d1 = silencer_damping(3, 0.7, s);
    const auto d2 = silencer_damping(3, 1.9, s);
    const auto d3 = silencer_damping(3, 0.7 + 1.9, s);
    for (std::size_t f = 0; f < kBandCount; ++f)
        CHECK(d3[f] - d2[f] == Approx(d1[f] - d0[f]).margin(1e-12));
}

TEST_CASE("silencer flow noise is quadratic in velocity") {
    const SilencerSpec s = vtest::sil_spl60();
    const auto rest = silencer_flow_noise(0.0, s);
    const double hb = 0.36;
    for (std::size_t f = 0; f < kBandCount; ++f) {
        const auto& e = s.noise_coeff[f];
        CHECK(rest[f] == Approx(e[2] * hb + e[3] * hb * hb + e[4]).margin(1e-12));
    }
    // constant second difference over equally spaced velocities
    for (double v = 1.0; v < 8.0; v += 0.5) {
        const double h = 0.25;
        const double second = silencer_flow_noise(v + h, s)[4] -
                              2.0 * silencer_flow_noise(v, s)[4] +
                              silencer_flow_noise(v - h, s)[4];
        CHECK(second == Approx(2.0 * s.noise_coeff[4][0] * h * h).margin(1e-9));
    }
    CHECK_THROWS_AS(silencer_flow_noise(-1.0, s), std::domain_error);
}

TEST_CASE("fixed chain combination") {
    FixedElement e1;
    e1.flow_noise = OctaveSpectrum::flat(50.0);
    e1.damping = OctaveSpectrum::flat(0.0);
    FixedElement e2;
    e2.flow_noise = OctaveSpectrum::flat(40.0);
    e2.damping = OctaveSpectrum::flat(5.0);

    SECTION("single element is the identity") {
        const auto c = combine_fixed_chain({e1});
        CHECK(c.flow_noise == e1.flow_noise);
        CHECK(c.damping == e1.damping);
    }
    SECTION("empty chain carries no damping and no noise") {
        const auto c = combine_fixed_chain({});
        CHECK(c.damping == OctaveSpectrum::flat(0.0));
        CHECK(c.flow_noise == OctaveSpectrum::floor());
    }
    SECTION("downstream damping reduces upstream noise before addition") {
        const auto c = combine_fixed_chain({e1, e2});
        for (std::size_t f = 0; f < kBandCount; ++f) {
            CHECK(c.damping[f] == Approx(5.0));
            CHECK(c.flow_noise[f] == Approx(46.1933104807).epsilon(1e-9));  // 45 (+) 40
        }
    }
    SECTION("damping-free elements commute") {
        FixedElement a = e1, b = e1;
        b.flow_noise = OctaveSpectrum::flat(43.0);
        const auto ab = combine_fixed_chain({a, b});
        const auto ba = combine_fixed_chain({b, a});
        for (std::size_t f = 0; f < kBandCount; ++f)
            CHECK(ab.flow_noise[f] == Approx(ba.flow_noise[f]).margin(1e-12));
    }
}

TEST_CASE("combined chain equals sequential nine-pole application") {
    std::mt19937_64 rng(31);
    std::uniform_real_distribution<double> level(20.0, 70.0);
    std::uniform_real_distribution<double> damp(0.0, 8.0);
    for (int trial = 0; trial < 100; ++trial) {
        const int k = 1 + static_cast<int>(rng() % 5);
        std::vector<FixedElement> chain(k);
        for (auto& e : chain) {
            for (std::size_t f = 0; f < kBandCount; ++f) {
                e.flow_noise[f] = level(rng);
                e.damping[f] = damp(rng);
            }
        }
        OctaveSpectrum input;
        for (std::size_t f = 0; f < kBandCount; ++f) input[f] = level(rng);

        OctaveSpectrum seq = input;
        for (const auto& e : chain) {
            for (std::size_t f = 0; f < kBandCount; ++f)
                seq[f] = level_add(seq[f] - e.damping[f], e.flow_noise[f]);
        }
        const auto c = combine_fixed_chain(chain);
        for (std::size_t f = 0; f < kBandCount; ++f) {
            const double combined = level_add(input[f] - c.damping[f], c.flow_noise[f]);
            CHECK(combined == Approx(seq[f]).margin(1e-9));
        }
    }
}
