#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "ventopt/spectrum.hpp"

namespace ventopt {

// ---------------------------------------------------------------------------
// Fans

/// Operating envelope of one fan size (product line at a fixed diameter).
struct FanBounds {
    double diameter_m = 0.5;
    double flow_min_m3s = 0.1;
    double flow_max_m3s = 1.0;
    double speed_min = 0.2;  // normalised, max speed is 1
    double pressure_min_pa = 0.0;
    double pressure_max_pa = 0.0;
    double power_min_w = 0.0;
    double power_max_w = 0.0;
};

/// One fan product line: scalable coefficient set plus the available sizes.
struct FanProductLine {
    std::string id;
    std::array<double, 3> pressure_coeff{};                       // alpha
    std::array<double, 5> power_coeff{};                          // beta
    std::array<double, 4> cost_coeff{};                           // gamma, incl. cladding
    std::array<std::array<double, 4>, kBandCount> noise_coeff{};  // epsilon per band
    std::vector<FanBounds> sizes;

    const FanBounds& size(double diameter_m) const {
        for (const auto& s : sizes)
            if (s.diameter_m == diameter_m) return s;
        throw std::out_of_range("fan product line '" + id + "' has no diameter " +
                                std::to_string(diameter_m));
    }
};

/// Δp = Σ_m α_m q^(2-m) n^m D^(-4+3m).
inline double fan_pressure(double flow_m3s, double speed, double diameter_m,
                           const FanProductLine& line) {
    double dp = 0.0;
    for (int m = 0; m <= 2; ++m) {
        dp += line.pressure_coeff[m] * std::pow(flow_m3s, 2 - m) * std::pow(speed, m) *
              std::pow(diameter_m, -4 + 3 * m);
    }
    return dp;
}

/// po = Σ_m β_m q^(3-m) n^m D^(-4+3m) + β_4.
inline double fan_power(double flow_m3s, double speed, double diameter_m,
                        const FanProductLine& line) {
    double po = line.power_coeff[4];
    for (int m = 0; m <= 3; ++m) {
        po += line.power_coeff[m] * std::pow(flow_m3s, 3 - m) * std::pow(speed, m) *
              std::pow(diameter_m, -4 + 3 * m);
    }
    return po;
}

inline double fan_cost(double diameter_m, const FanProductLine& line, bool clad) {
    double c = line.cost_coeff[0] * diameter_m + line.cost_coeff[1];
    if (clad) c += line.cost_coeff[2] * diameter_m + line.cost_coeff[3];
    return c;
}

/// Smallest normalised speed delivering `pressure_pa` at the given flow.
/// The characteristic is quadratic in n; no admissible root means the point
/// lies outside the fan envelope.
inline double fan_speed_for(double flow_m3s, double pressure_pa, double diameter_m,
                            const FanProductLine& line) {
    const FanBounds& b = line.size(diameter_m);
    const double a2 = line.pressure_coeff[2] * diameter_m * diameter_m;
    const double a1 = line.pressure_coeff[1] * flow_m3s / diameter_m;
    const double a0 = line.pressure_coeff[0] * flow_m3s * flow_m3s /
                          std::pow(diameter_m, 4) -
                      pressure_pa;
    const double lo = b.speed_min, hi = 1.0;
    auto admissible = [&](double n) { return n >= lo - 1e-12 && n <= hi + 1e-12; };

    std::vector<double> roots;
    if (std::abs(a2) < 1e-300) {
        if (std::abs(a1) < 1e-300) throw std::domain_error("fan_speed_for: degenerate curve");
        roots.push_back(-a0 / a1);
    } else {
        const double disc = a1 * a1 - 4.0 * a2 * a0;
        if (disc < 0.0)
            throw std::domain_error("fan_speed_for: pressure above the fan curve");
        const double sq = std::sqrt(disc);
        roots.push_back((-a1 - sq) / (2.0 * a2));
        roots.push_back((-a1 + sq) / (2.0 * a2));
        std::sort(roots.begin(), roots.end());
    }
    for (double n : roots) {
        if (admissible(n)) return std::clamp(n, lo, hi);
    }
    throw std::domain_error("fan_speed_for: no admissible speed for operating point");
}

/// Octave sound power of fan flow noise at an operating point.
inline OctaveSpectrum fan_flow_noise(double flow_m3s, double pressure_pa, double speed,
                                     double diameter_m, const FanProductLine& line) {
    if (flow_m3s <= 0.0 || pressure_pa <= 0.0)
        throw std::domain_error("fan_flow_noise: flow and pressure must be positive");
    const double base = 10.0 * std::log10(flow_m3s) + 20.0 * std::log10(pressure_pa);
    OctaveSpectrum s;
    for (std::size_t f = 0; f < kBandCount; ++f) {
        const auto& e = line.noise_coeff[f];
        s[f] = base + e[0] * speed + e[1] * speed * speed + e[2] * diameter_m + e[3];
    }
    return s;
}

// ---------------------------------------------------------------------------
// Volume flow controllers

struct VfcSpec {
    std::string id;
    double height_m = 0.3;
    double width_m = 0.3;
    std::array<double, 3> cost_coeff{};                           // gamma
    std::array<std::array<double, 6>, kBandCount> noise_coeff{};  // epsilon per band
    double pressure_min_pa = 0.0;
    double pressure_max_pa = 200.0;
};

inline double vfc_cost(const VfcSpec& spec, bool clad) {
    double c = spec.cost_coeff[0] * spec.height_m * spec.width_m + spec.cost_coeff[1];
    if (clad) c += spec.cost_coeff[2];
    return c;
}

inline OctaveSpectrum vfc_flow_noise(double flow_m3s, double pressure_pa,
                                     const VfcSpec& spec) {
    if (pressure_pa < spec.pressure_min_pa - 1e-9 ||
        pressure_pa > spec.pressure_max_pa + 1e-9)
        throw std::domain_error("vfc_flow_noise: pressure outside controllable range");
    if (flow_m3s < 0.0) throw std::domain_error("vfc_flow_noise: flow must be >= 0");
    const double hb = spec.height_m * spec.width_m;
    OctaveSpectrum s;
    for (std::size_t f = 0; f < kBandCount; ++f) {
        const auto& e = spec.noise_coeff[f];
        s[f] = e[0] * pressure_pa + e[1] * flow_m3s * flow_m3s / (hb * hb) +
               e[2] * flow_m3s / hb + e[3] * hb + e[4] * std::sqrt(hb) + e[5];
    }
    return s;
}

// ---------------------------------------------------------------------------
// Splitter silencers

struct SilencerSpec {
    std::string id;
    double height_m = 0.5;
    double width_m = 0.5;
    double splitter_width_m = 0.1;  // T
    int splitter_min = 2;
    int splitter_max = 4;
    double length_min_m = 0.5;
    double length_max_m = 2.0;
    std::array<double, 3> pressure_coeff{};                         // alpha
    std::array<double, 4> cost_coeff{};                             // gamma
    std::array<std::array<double, 8>, kBandCount> damping_coeff{};  // delta per band
    std::array<std::array<double, 5>, kBandCount> noise_coeff{};    // epsilon per band
    double pressure_max_pa = 400.0;

    double cost_max_eur() const;
};

struct SilencerGeometry {
    double gap_m = 0.0;       // s, free width between splitters
    double velocity_ms = 0.0; // v, through the gap area
};

inline SilencerGeometry silencer_geometry(const SilencerSpec& spec, int splitters,
                                          double flow_m3s) {
    if (splitters < spec.splitter_min || splitters > spec.splitter_max)
        throw std::domain_error("silencer_geometry: splitter count out of range");
    const double open_width = spec.width_m - spec.splitter_width_m * splitters;
    if (open_width <= 0.0)
        throw std::domain_error("silencer_geometry: splitters leave no open area");
    SilencerGeometry g;
    g.gap_m = spec.width_m / splitters - spec.splitter_width_m;
    g.velocity_ms = flow_m3s / (open_width * spec.height_m);
    return g;
}

inline double silencer_pressure_loss(double velocity_ms, double gap_m, double length_m,
                                     const SilencerSpec& spec) {
    if (gap_m <= 0.0) throw std::domain_error("silencer_pressure_loss: gap must be positive");
    const double v2 = velocity_ms * velocity_ms;
    return spec.pressure_coeff[0] * v2 + spec.pressure_coeff[1] * v2 / gap_m +
           spec.pressure_coeff[2] * v2 * length_m / gap_m;
}

inline double silencer_cost(int splitters, double length_m, const SilencerSpec& spec) {
    return spec.cost_coeff[0] * splitters + spec.cost_coeff[1] * length_m * spec.width_m +
           spec.cost_coeff[2] * spec.height_m * spec.width_m + spec.cost_coeff[3];
}

inline double SilencerSpec::cost_max_eur() const {
    return silencer_cost(splitter_max, length_max_m, *this);
}

inline OctaveSpectrum silencer_damping(int splitters, double length_m,
                                       const SilencerSpec& spec) {
    const double n = splitters;
    const double b = spec.width_m;
    OctaveSpectrum s;
    for (std::size_t f = 0; f < kBandCount; ++f) {
        const auto& d = spec.damping_coeff[f];
        s[f] = d[0] * n * n + d[1] * b * b * n + d[2] * length_m * n + d[3] * length_m * b +
               d[4] * n + d[5] * length_m + d[6] * b + d[7];
    }
    return s;
}

inline OctaveSpectrum silencer_flow_noise(double velocity_ms, const SilencerSpec& spec) {
    if (velocity_ms < 0.0)
        throw std::domain_error("silencer_flow_noise: velocity must be >= 0");
    const double hb = spec.height_m * spec.width_m;
    OctaveSpectrum s;
    for (std::size_t f = 0; f < kBandCount; ++f) {
        const auto& e = spec.noise_coeff[f];
        s[f] = e[0] * velocity_ms * velocity_ms + e[1] * velocity_ms + e[2] * hb +
               e[3] * hb * hb + e[4];
    }
    return s;
}

// ---------------------------------------------------------------------------
// Fixed components

/// Passive duct element with precomputed per-band noise and damping.
struct FixedElement {
    std::string name;
    OctaveSpectrum flow_noise = OctaveSpectrum::floor();
    OctaveSpectrum damping = OctaveSpectrum::flat(0.0);
};

/// Series combination of fixed elements (ascending in flow direction) into a
/// single nine-pole: each element's noise is reduced by all downstream
/// damping, then the reduced noises are level-added.
struct CombinedFixed {
    OctaveSpectrum flow_noise = OctaveSpectrum::floor();
    OctaveSpectrum damping = OctaveSpectrum::flat(0.0);
};

inline CombinedFixed combine_fixed_chain(const std::vector<FixedElement>& chain) {
    CombinedFixed out;
    for (std::size_t i = 0; i < chain.size(); ++i) {
        OctaveSpectrum downstream = OctaveSpectrum::flat(0.0);
        for (std::size_t k = i + 1; k < chain.size(); ++k)
            downstream = spectrum_sum(downstream, chain[k].damping);
        out.flow_noise = level_add(out.flow_noise, damped(chain[i].flow_noise, downstream));
        out.damping = spectrum_sum(out.damping, chain[i].damping);
    }
    return out;
}

// ---------------------------------------------------------------------------
// Catalog

struct ComponentCatalog {
    std::vector<FanProductLine> fan_lines;
    std::vector<VfcSpec> vfcs;
    std::vector<SilencerSpec> silencers;

    const FanProductLine& fan_line(const std::string& id) const {
        for (const auto& l : fan_lines)
            if (l.id == id) return l;
        throw std::out_of_range("unknown fan product line '" + id + "'");
    }
    const VfcSpec& vfc(const std::string& id) const {
        for (const auto& v : vfcs)
            if (v.id == id) return v;
        throw std::out_of_range("unknown VFC spec '" + id + "'");
    }
    const SilencerSpec& silencer(const std::string& id) const {
        for (const auto& s : silencers)
            if (s.id == id) return s;
        throw std::out_of_range("unknown silencer spec '" + id + "'");
    }
};

}  // namespace ventopt
