#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <vector>

namespace ventopt {

inline constexpr std::size_t kBandCount = 8;

// Octave band edges in Hz. Index i spans [kBandEdgesHz[i], kBandEdgesHz[i+1]).
inline constexpr std::array<int, kBandCount + 1> kBandEdgesHz = {
    45, 88, 177, 354, 707, 1414, 2828, 5657, 11314};

// A-weighting correction per octave band, dB.
inline constexpr std::array<double, kBandCount> kAWeightDb = {
    -25.2, -15.6, -8.4, -3.1, 0.0, 1.2, 0.9, -1.1};

// Finite stand-in for "no sound". All level arithmetic saturates here.
inline constexpr double kLevelFloorDb = -300.0;

inline bool is_level_floor(double level_db) { return level_db <= kLevelFloorDb; }

/// Eight octave-band levels in dB (sound power or pressure, context-dependent).
struct OctaveSpectrum {
    std::array<double, kBandCount> levels{};

    OctaveSpectrum() { levels.fill(kLevelFloorDb); }
    explicit OctaveSpectrum(const std::array<double, kBandCount>& v) : levels(v) {}

    static OctaveSpectrum flat(double level_db) {
        OctaveSpectrum s;
        s.levels.fill(level_db);
        return s;
    }
    static OctaveSpectrum floor() { return OctaveSpectrum{}; }

    double& operator[](std::size_t i) { return levels[i]; }
    double operator[](std::size_t i) const { return levels[i]; }

    bool operator==(const OctaveSpectrum&) const = default;
};

/// Energetic sum of two levels: 10·log10(10^(a/10) + 10^(b/10)).
inline double level_add(double a_db, double b_db) {
    if (is_level_floor(a_db)) return b_db;
    if (is_level_floor(b_db)) return a_db;
    const double hi = std::max(a_db, b_db);
    const double lo = std::min(a_db, b_db);
    return hi + 10.0 * std::log10(1.0 + std::pow(10.0, -(hi - lo) / 10.0));
}

/// Increase of the larger level when adding a level `diff_db` below it.
inline double level_increase(double diff_db) {
    if (diff_db < 0.0) throw std::invalid_argument("level_increase: difference must be >= 0");
    return 10.0 * std::log10(1.0 + std::pow(10.0, -diff_db / 10.0));
}

inline double level_increase_slope(double diff_db) {
    const double e = std::pow(10.0, -diff_db / 10.0);
    return -e / (1.0 + e);
}

inline OctaveSpectrum level_add(const OctaveSpectrum& a, const OctaveSpectrum& b) {
    OctaveSpectrum out;
    for (std::size_t f = 0; f < kBandCount; ++f) out[f] = level_add(a[f], b[f]);
    return out;
}

/// Subtract per-band damping, saturating at the floor.
inline OctaveSpectrum damped(const OctaveSpectrum& s, const OctaveSpectrum& damping_db) {
    OctaveSpectrum out;
    for (std::size_t f = 0; f < kBandCount; ++f) {
        out[f] = is_level_floor(s[f]) ? kLevelFloorDb
                                      : std::max(kLevelFloorDb, s[f] - damping_db[f]);
    }
    return out;
}

inline OctaveSpectrum spectrum_sum(const OctaveSpectrum& a, const OctaveSpectrum& b) {
    OctaveSpectrum out;
    for (std::size_t f = 0; f < kBandCount; ++f) out[f] = a[f] + b[f];
    return out;
}

/// A-weighted single-number level: 10·log10 Σ_f 10^(0.1(l_f + conv_f + A_f)).
inline double a_weighted_total(const OctaveSpectrum& spectrum, const OctaveSpectrum& conversion_db) {
    double power = 0.0;
    for (std::size_t f = 0; f < kBandCount; ++f) {
        if (is_level_floor(spectrum[f])) continue;
        power += std::pow(10.0, 0.1 * (spectrum[f] + conversion_db[f] + kAWeightDb[f]));
    }
    if (power <= 0.0) return kLevelFloorDb;
    return 10.0 * std::log10(power);
}

inline double a_weighted_total(const OctaveSpectrum& spectrum) {
    return a_weighted_total(spectrum, OctaveSpectrum::flat(0.0));
}

/// One line of the polyhedral under-approximation of level_increase.
struct Tangent {
    double slope = 0.0;
    double intercept = 0.0;

    double value(double d) const { return slope * d + intercept; }
};

/// Tangent lines under-approximating level_increase on [0, domain_cap_db].
struct TangentSet {
    std::vector<Tangent> tangents;
    double domain_cap_db = 25.0;
    double max_gap_db = 0.0;  // certified sup of (exact - approx) on the domain

    double evaluate(double diff_db) const {
        double v = 0.0;  // clamp: increase is never negative
        for (const auto& t : tangents) v = std::max(v, t.value(diff_db));
        return v;
    }
};

inline double linearized_increase(double diff_db, const TangentSet& ts) {
    if (diff_db < 0.0) throw std::invalid_argument("linearized_increase: difference must be >= 0");
    return ts.evaluate(diff_db);
}

namespace detail {

inline Tangent tangent_at(double t) {
    const double m = level_increase_slope(t);
    return Tangent{m, level_increase(t) - m * t};
}

// Gap between the exact curve and the tangent from `t`, evaluated at d=0.
inline double gap_at_zero(double t) {
    const Tangent tan = tangent_at(t);
    return level_increase(0.0) - tan.value(0.0);
}

// Gap at the crossing point of the tangents from t_prev and t_next.
inline double gap_at_crossing(double t_prev, double t_next) {
    const Tangent a = tangent_at(t_prev);
    const Tangent b = tangent_at(t_next);
    const double denom = a.slope - b.slope;
    if (std::abs(denom) < 1e-300) return 0.0;
    const double x = (b.intercept - a.intercept) / denom;
    return level_increase(x) - a.value(x);
}

}  // namespace detail

/// Equioscillating tangent fit: minimizes the worst under-approximation gap.
inline TangentSet fit_tangents(double domain_cap_db = 25.0, int count = 3) {
    if (count < 2) throw std::invalid_argument("fit_tangents: need at least 2 tangents");
    if (domain_cap_db <= 0.0) throw std::invalid_argument("fit_tangents: domain cap must be > 0");

    // For a trial gap, place tangency points left to right so every local
    // maximum of the gap equals the trial value; return the end gap.
    auto place = [&](double gap, std::vector<double>& points) {
        points.clear();
        double lo = 0.0, hi = domain_cap_db;
        for (int it = 0; it < 200; ++it) {
            const double mid = 0.5 * (lo + hi);
            (detail::gap_at_zero(mid) < gap ? lo : hi) = mid;
        }
        points.push_back(0.5 * (lo + hi));
        for (int k = 1; k < count; ++k) {
            const double prev = points.back();
            lo = prev;
            hi = domain_cap_db;
            if (detail::gap_at_crossing(prev, hi) < gap) {
                points.push_back(hi);
                continue;
            }
            for (int it = 0; it < 200; ++it) {
                const double mid = 0.5 * (lo + hi);
                (detail::gap_at_crossing(prev, mid) < gap ? lo : hi) = mid;
            }
            points.push_back(0.5 * (lo + hi));
        }
        // The approximation is clamped at zero, so the last local maximum sits
        // where the final tangent crosses zero (or at the domain cap).
        const Tangent last = detail::tangent_at(points.back());
        double x_end = domain_cap_db;
        if (last.slope < 0.0) x_end = std::min(x_end, -last.intercept / last.slope);
        return level_increase(x_end) - std::max(0.0, last.value(x_end));
    };

    std::vector<double> points;
    double lo = 0.0, hi = level_increase(0.0);
    for (int it = 0; it < 200; ++it) {
        const double gap = 0.5 * (lo + hi);
        (place(gap, points) > gap ? lo : hi) = gap;
    }
    const double gap = 0.5 * (lo + hi);
    place(gap, points);

    TangentSet ts;
    ts.domain_cap_db = domain_cap_db;
    for (double t : points) ts.tangents.push_back(detail::tangent_at(t));

    // Certify the bound on a dense grid; report the measured supremum.
    double worst = 0.0;
    const int n = 20000;
    for (int i = 0; i <= n; ++i) {
        const double d = domain_cap_db * i / n;
        worst = std::max(worst, level_increase(d) - ts.evaluate(d));
    }
    ts.max_gap_db = worst;
    return ts;
}

}  // namespace ventopt
