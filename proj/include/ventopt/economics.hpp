#pragma once

#include <cmath>
#include <map>
#include <stdexcept>
#include <string>

namespace ventopt {

enum class ComponentClass { FanStation, Silencer, Vfc };

inline const char* to_string(ComponentClass c) {
    switch (c) {
        case ComponentClass::FanStation: return "fan_station";
        case ComponentClass::Silencer: return "silencer";
        case ComponentClass::Vfc: return "vfc";
    }
    return "?";
}

/// Depreciation and upkeep fractions for one component class.
struct ClassEconomics {
    double depreciation_years = 12.0;
    double service_fraction = 0.0;      // of invest cost, per year
    double maintenance_fraction = 0.0;  // of invest cost, per year
};

struct EconomicParams {
    double interest_factor = 1.07;          // Z
    double present_value_energy = 1.08;     // B_E, may be supplied directly
    double present_value_upkeep = 1.03;     // B_MS
    double electricity_price_eur_per_kwh = 0.15;
    double use_years = 12.0;
    double use_hours = 12.0 * 250.0 * 14.0;  // total operating hours over use_years
    bool invest_term_scaled_by_years = true;
    std::map<ComponentClass, ClassEconomics> classes = {
        {ComponentClass::FanStation, {12.0, 0.01, 0.025}},
        {ComponentClass::Silencer, {20.0, 0.0, 0.01}},
        {ComponentClass::Vfc, {12.0, 0.01, 0.02}},  // fan depreciation period reused
    };
};

/// A = (Z-1)/(1 - Z^-T).
inline double annuity_factor(double interest_factor, double use_years) {
    if (interest_factor <= 1.0)
        throw std::domain_error("annuity_factor: interest factor must exceed 1");
    if (use_years < 1.0) throw std::domain_error("annuity_factor: use period must be >= 1 year");
    return (interest_factor - 1.0) / (1.0 - std::pow(interest_factor, -use_years));
}

/// B = (1 - R/Z)/(Z - R) for price-change factor R.
inline double present_value_factor(double price_change_factor, double interest_factor) {
    if (price_change_factor == interest_factor)
        throw std::domain_error("present_value_factor: price change equals interest factor");
    return (1.0 - price_change_factor / interest_factor) /
           (interest_factor - price_change_factor);
}

/// Discounted sum of replacement purchases over the operating period.
inline double replacement_investment(double use_years, double depreciation_years,
                                     double upkeep_price_change, double interest_factor) {
    if (depreciation_years < 1.0)
        throw std::domain_error("replacement_investment: depreciation period must be >= 1");
    const int divisions = static_cast<int>(std::floor(use_years / depreciation_years));
    const double remainder = std::fmod(use_years, depreciation_years);
    const int last = remainder == 0.0 ? divisions - 1 : divisions;
    double total = 0.0;
    for (int i = 1; i <= last; ++i) {
        total += std::pow(upkeep_price_change / interest_factor, depreciation_years * i);
    }
    return total;
}

/// Discounted residual value of the final (partially used) purchase.
inline double residual_value(double use_years, double depreciation_years,
                             double upkeep_price_change, double interest_factor) {
    if (depreciation_years < 1.0)
        throw std::domain_error("residual_value: depreciation period must be >= 1");
    const double remainder = std::fmod(use_years, depreciation_years);
    if (remainder == 0.0) return 0.0;
    const int divisions = static_cast<int>(std::floor(use_years / depreciation_years));
    return (remainder / depreciation_years) *
           std::pow(upkeep_price_change, depreciation_years * divisions) /
           std::pow(interest_factor, use_years);
}

/// Annuity investment cost factor: A·(1 + B_MS·(F_S+F_M))·(1 + I_tot - R_W).
inline double annuity_invest_factor(const EconomicParams& params, ComponentClass cls) {
    const auto it = params.classes.find(cls);
    if (it == params.classes.end())
        throw std::invalid_argument("annuity_invest_factor: unknown component class");
    const ClassEconomics& ce = it->second;
    const double a = annuity_factor(params.interest_factor, params.use_years);
    const double upkeep_change = params.present_value_upkeep;
    const double i_tot = replacement_investment(params.use_years, ce.depreciation_years,
                                                upkeep_change, params.interest_factor);
    const double r_w = residual_value(params.use_years, ce.depreciation_years, upkeep_change,
                                      params.interest_factor);
    return a * (1.0 + params.present_value_upkeep *
                          (ce.service_fraction + ce.maintenance_fraction)) *
           (1.0 + i_tot - r_w);
}

/// € per unit of annualised invest cost for one class (includes the use-years term).
inline double invest_cost_weight(const EconomicParams& params, ComponentClass cls) {
    const double scale = params.invest_term_scaled_by_years ? params.use_years : 1.0;
    return scale * annuity_invest_factor(params, cls);
}

/// € per watt of time-averaged electric power over the operating period.
inline double energy_cost_weight(const EconomicParams& params) {
    const double a = annuity_factor(params.interest_factor, params.use_years);
    return params.electricity_price_eur_per_kwh * a * params.present_value_energy *
           params.use_hours / 1000.0;
}

struct CostBreakdown {
    double invest_fan_stations_eur = 0.0;
    double invest_silencers_eur = 0.0;
    double invest_vfcs_eur = 0.0;
    double energy_eur = 0.0;

    double invest_eur() const {
        return invest_fan_stations_eur + invest_silencers_eur + invest_vfcs_eur;
    }
    double total_eur() const { return invest_eur() + energy_eur; }
};

/// Life-cycle cost of given purchase costs and scenario-weighted powers.
/// `mean_power_w` is Σ_s T_s · (total fan-station electric power in scenario s).
inline double lifecycle_objective(double invest_fs_eur, double invest_sil_eur,
                                  double invest_vfc_eur, double mean_power_w,
                                  const EconomicParams& params) {
    if (invest_fs_eur < 0.0 || invest_sil_eur < 0.0 || invest_vfc_eur < 0.0 ||
        mean_power_w < 0.0)
        throw std::domain_error("lifecycle_objective: costs and powers must be >= 0");
    return invest_cost_weight(params, ComponentClass::FanStation) * invest_fs_eur +
           invest_cost_weight(params, ComponentClass::Silencer) * invest_sil_eur +
           invest_cost_weight(params, ComponentClass::Vfc) * invest_vfc_eur +
           energy_cost_weight(params) * mean_power_w;
}

}  // namespace ventopt
