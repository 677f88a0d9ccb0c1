#pragma once

#include <cmath>
#include <functional>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "ventopt/spectrum.hpp"

namespace ventopt {

struct FitResult {
    std::vector<double> coefficients;
    double r_squared = 0.0;
};

/// Ordinary least squares via the normal equations with partial pivoting.
/// R² of a zero-variance target is 1 when the residuals vanish, else 0.
inline FitResult fit_least_squares(const std::vector<std::vector<double>>& basis_rows,
                                   const std::vector<double>& targets) {
    const std::size_t n = basis_rows.size();
    if (n == 0 || n != targets.size())
        throw std::invalid_argument("fit_least_squares: empty or mismatched samples");
    const std::size_t m = basis_rows.front().size();
    if (n <= m)
        throw std::invalid_argument("fit_least_squares: need more samples than basis terms");

    std::vector<std::vector<double>> a(m, std::vector<double>(m + 1, 0.0));
    for (std::size_t i = 0; i < n; ++i) {
        if (basis_rows[i].size() != m)
            throw std::invalid_argument("fit_least_squares: ragged basis rows");
        for (std::size_t r = 0; r < m; ++r) {
            for (std::size_t c = 0; c < m; ++c) a[r][c] += basis_rows[i][r] * basis_rows[i][c];
            a[r][m] += basis_rows[i][r] * targets[i];
        }
    }

    double scale = 0.0;
    for (std::size_t r = 0; r < m; ++r)
        for (std::size_t c = 0; c < m; ++c) scale = std::max(scale, std::abs(a[r][c]));
    if (scale == 0.0) throw std::runtime_error("fit_least_squares: design matrix is zero");

    for (std::size_t col = 0; col < m; ++col) {
        std::size_t pivot = col;
        for (std::size_t r = col + 1; r < m; ++r)
            if (std::abs(a[r][col]) > std::abs(a[pivot][col])) pivot = r;
        if (std::abs(a[pivot][col]) < 1e-12 * scale)
            throw std::runtime_error("fit_least_squares: rank-deficient design matrix");
        std::swap(a[col], a[pivot]);
        for (std::size_t r = 0; r < m; ++r) {
            if (r == col) continue;
            const double factor = a[r][col] / a[col][col];
            for (std::size_t c = col; c <= m; ++c) a[r][c] -= factor * a[col][c];
        }
    }

    FitResult res;
    res.coefficients.resize(m);
    for (std::size_t r = 0; r < m; ++r) res.coefficients[r] = a[r][m] / a[r][r];

    double mean = 0.0;
    for (double t : targets) mean += t;
    mean /= static_cast<double>(n);
    double ss_res = 0.0, ss_tot = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        double fitted = 0.0;
        for (std::size_t c = 0; c < m; ++c) fitted += res.coefficients[c] * basis_rows[i][c];
        ss_res += (targets[i] - fitted) * (targets[i] - fitted);
        ss_tot += (targets[i] - mean) * (targets[i] - mean);
    }
    if (ss_tot <= 1e-300) {
        res.r_squared = ss_res <= 1e-12 * std::max(1.0, mean * mean) ? 1.0 : 0.0;
    } else {
        res.r_squared = 1.0 - ss_res / ss_tot;
    }
    return res;
}

/// Basis of one component model equation. Spectral equations are fitted once
/// per octave band over the rows carrying that band index.
struct EquationBasis {
    std::string name;
    std::vector<std::string> columns;  // input column names, in order
    std::string target_column;
    bool spectral = false;             // rows then carry a "band" column
    std::function<std::vector<double>(const std::map<std::string, double>&)> terms;
};

inline const std::vector<EquationBasis>& equation_bases() {
    static const std::vector<EquationBasis> bases = [] {
        std::vector<EquationBasis> b;
        b.push_back({"fan_dp",
                     {"q", "n", "D"},
                     "dp",
                     false,
                     [](const std::map<std::string, double>& r) {
                         const double q = r.at("q"), n = r.at("n"), d = r.at("D");
                         return std::vector<double>{q * q / std::pow(d, 4), q * n / d,
                                                    n * n * d * d};
                     }});
        b.push_back({"fan_po",
                     {"q", "n", "D"},
                     "po",
                     false,
                     [](const std::map<std::string, double>& r) {
                         const double q = r.at("q"), n = r.at("n"), d = r.at("D");
                         return std::vector<double>{q * q * q / std::pow(d, 4), q * q * n / d,
                                                    q * n * n * d * d,
                                                    n * n * n * std::pow(d, 5), 1.0};
                     }});
        b.push_back({"fan_cost",
                     {"D", "clad"},
                     "cost",
                     false,
                     [](const std::map<std::string, double>& r) {
                         const double d = r.at("D"), clad = r.at("clad");
                         return std::vector<double>{d, 1.0, clad * d, clad};
                     }});
        b.push_back({"fan_noise",
                     {"q", "dp", "n", "D"},
                     "level",
                     true,
                     [](const std::map<std::string, double>& r) {
                         const double n = r.at("n"), d = r.at("D");
                         return std::vector<double>{n, n * n, d, 1.0};
                     }});
        b.push_back({"vfc_cost",
                     {"H", "B", "clad"},
                     "cost",
                     false,
                     [](const std::map<std::string, double>& r) {
                         return std::vector<double>{r.at("H") * r.at("B"), 1.0, r.at("clad")};
                     }});
        b.push_back({"vfc_noise",
                     {"Q", "dp", "H", "B"},
                     "level",
                     true,
                     [](const std::map<std::string, double>& r) {
                         const double q = r.at("Q"), hb = r.at("H") * r.at("B");
                         return std::vector<double>{r.at("dp"), q * q / (hb * hb), q / hb, hb,
                                                    std::sqrt(hb), 1.0};
                     }});
        b.push_back({"sil_dp",
                     {"v", "s", "l"},
                     "dp",
                     false,
                     [](const std::map<std::string, double>& r) {
                         const double v2 = r.at("v") * r.at("v");
                         return std::vector<double>{v2, v2 / r.at("s"),
                                                    v2 * r.at("l") / r.at("s")};
                     }});
        b.push_back({"sil_cost",
                     {"n", "l", "H", "B"},
                     "cost",
                     false,
                     [](const std::map<std::string, double>& r) {
                         return std::vector<double>{r.at("n"), r.at("l") * r.at("B"),
                                                    r.at("H") * r.at("B"), 1.0};
                     }});
        b.push_back({"sil_damp",
                     {"n", "l", "B"},
                     "d",
                     true,
                     [](const std::map<std::string, double>& r) {
                         const double n = r.at("n"), l = r.at("l"), w = r.at("B");
                         return std::vector<double>{n * n, w * w * n, l * n, l * w,
                                                    n, l, w, 1.0};
                     }});
        b.push_back({"sil_flow",
                     {"v", "H", "B"},
                     "level",
                     true,
                     [](const std::map<std::string, double>& r) {
                         const double v = r.at("v"), hb = r.at("H") * r.at("B");
                         return std::vector<double>{v * v, v, hb, hb * hb, 1.0};
                     }});
        return b;
    }();
    return bases;
}

inline const EquationBasis& equation_basis(const std::string& name) {
    for (const auto& b : equation_bases())
        if (b.name == name) return b;
    throw std::out_of_range("unknown model equation '" + name + "'");
}

/// Fit one equation from sample rows (column name -> value). Spectral
/// equations return one result per band; the fan noise target is reduced by
/// its fixed logarithmic terms before fitting the polynomial remainder.
inline std::vector<FitResult> fit_model(const std::string& equation,
                                        const std::vector<std::map<std::string, double>>& rows) {
    const EquationBasis& eq = equation_basis(equation);
    const int groups = eq.spectral ? static_cast<int>(kBandCount) : 1;
    std::vector<FitResult> out;
    for (int band = 0; band < groups; ++band) {
        std::vector<std::vector<double>> basis_rows;
        std::vector<double> targets;
        for (const auto& row : rows) {
            if (eq.spectral &&
                static_cast<int>(std::lround(row.at("band"))) != band)
                continue;
            basis_rows.push_back(eq.terms(row));
            double target = row.at(eq.target_column);
            if (eq.name == "fan_noise")
                target -= 10.0 * std::log10(row.at("q")) + 20.0 * std::log10(row.at("dp"));
            targets.push_back(target);
        }
        out.push_back(fit_least_squares(basis_rows, targets));
    }
    return out;
}

}  // namespace ventopt
