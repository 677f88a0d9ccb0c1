#pragma once

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <functional>
#include <limits>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <thread>
#include <vector>

#include "ventopt/components.hpp"
#include "ventopt/economics.hpp"
#include "ventopt/network.hpp"
#include "ventopt/propagation.hpp"
#include "ventopt/spectrum.hpp"

namespace ventopt {

inline constexpr double kInf = std::numeric_limits<double>::infinity();
inline constexpr double kPressureSlackTol = 1e-9;   // Pa
inline constexpr double kNoiseFeasTolDb = 1e-6;     // dB above the limit

struct Problem {
    const Network* network = nullptr;
    const ComponentCatalog* catalog = nullptr;
    EconomicParams econ;
    double max_fan_efficiency = 0.75;           // for the hydraulic power bound
    std::optional<double> noise_limit_override; // replaces per-room limits when set
};

struct SolverOptions {
    double tolerance = 1e-3;        // relative optimality claim, folds search grids
    double time_budget_s = 0.0;     // 0 means unlimited
    int threads = 1;
    std::uint64_t seed = 0;
    double length_grid_m = 0.01;    // silencer length resolution
    double length_scan_m = 0.05;    // coarse boundary-scan step before refinement
    bool fan_station_level_add = false;  // exact addition over fans instead of the max rule
    int exact_silencer_slots = 2;   // full pattern enumeration up to this many slots
};

enum class SolveStatus { Optimal, Infeasible, TimeBudget };

inline const char* to_string(SolveStatus s) {
    switch (s) {
        case SolveStatus::Optimal: return "optimal";
        case SolveStatus::Infeasible: return "infeasible";
        case SolveStatus::TimeBudget: return "time_budget";
    }
    return "?";
}

struct FanOperating {
    int unit = -1;  // index into the station's purchased unit list
    double flow_m3s = 0.0;
    double speed = 0.0;
    double pressure_pa = 0.0;
    double power_w = 0.0;
};

struct StationOps {
    bool active = false;
    double pressure_pa = 0.0;
    double power_w = 0.0;
    std::vector<FanOperating> fans;
};

struct FanUnitPurchase {
    std::string line_id;
    double diameter_m = 0.0;
    int copy = 1;
    double cost_eur = 0.0;
};

struct SilencerDesign {
    bool purchased = false;
    int splitters = 0;
    double length_m = 0.0;
    double cost_eur = 0.0;
};

struct EdgeDesign {
    bool station_purchased = false;
    std::vector<FanUnitPurchase> fans;
    SilencerDesign silencer;
    bool vfc_purchased = false;
};

struct Solution {
    SolveStatus status = SolveStatus::Infeasible;
    double objective_eur = kInf;
    double gap = 0.0;
    double lower_bound_eur = 0.0;
    CostBreakdown costs;
    std::map<std::string, EdgeDesign> purchases;                      // by edge id
    std::vector<std::map<std::string, StationOps>> station_ops;       // [scenario][edge]
    std::vector<std::map<std::string, double>> vfc_pressure_pa;       // [scenario][edge]
    std::vector<std::map<std::string, double>> room_dba;              // [scenario][room]
    double max_room_dba = kLevelFloorDb;
    double best_achievable_dba = kInf;  // certificate for infeasible noise limits
    std::string note;
};

struct ParetoPoint {
    double requested_limit_dba = kInf;
    double realized_limit_dba = kInf;
    Solution solution;
    double lower_bound_used_eur = 0.0;
};

struct ParetoFront {
    std::vector<ParetoPoint> points;
    std::optional<double> min_feasible_limit_dba;
    std::optional<double> first_infeasible_limit_dba;
};

/// Scenario-wise lower bound on total fan electric power: peak target pressure
/// times total room flow, scaled by the best fan efficiency.
inline std::vector<double> hydraulic_lower_bound(const Network& net, double max_fan_efficiency) {
    std::vector<double> out;
    for (std::size_t s = 0; s < net.scenarios.size(); ++s) {
        double max_target = 0.0;
        double room_flow = 0.0;
        for (int room : net.room_indices()) {
            max_target = std::max(max_target, net.nodes[room].boundary_pressure_pa[s]);
            for (int e : net.incoming_edges(room)) room_flow += net.edges[e].flow_m3s[s];
        }
        out.push_back(max_fan_efficiency * max_target * room_flow);
    }
    return out;
}

namespace detail {

using Clock = std::chrono::steady_clock;

struct Deadline {
    Clock::time_point end;
    bool enabled = false;
    bool expired() const { return enabled && Clock::now() >= end; }
};

struct UnitRef {
    int candidate = 0;  // index into the slot's candidate list
    int copy = 1;
    const FanProductLine* line = nullptr;
    FanBounds bounds;
    bool clad = false;
    double cost = 0.0;
    std::string key() const {
        return line->id + "@" + std::to_string(bounds.diameter_m) + "#" + std::to_string(copy);
    }
};

struct StationInfo {
    int edge = -1;
    int n_max = 3;
    std::vector<UnitRef> units;   // all purchasable units, candidate-major order
    std::vector<int> rooms;       // room node indices served
};

struct RoomInfo {
    int node = -1;
    std::vector<int> path;           // edges source -> room
    int station = -1;                // index into stations, -1 if none
    std::vector<int> silencers;      // silencer slots on the path
    int vfc_edge = -1;               // slack absorber (dedicated, closest to the room)
    std::vector<int> vfc_edges;      // all VFC edges on the path
    std::size_t suffix_start = 0;    // first path edge that affects only this room
};

struct SilencerState {
    bool on = false;
    int splitters = 0;
    double length_m = 0.0;
};

/// One fully specified candidate design under evaluation.
struct DesignState {
    std::vector<std::vector<int>> fans;          // [station] -> unit indices purchased
    std::vector<SilencerState> silencers;        // [silencer slot]
    std::set<int> vfc_base;                      // always purchased (pinned or forced)
    std::optional<std::set<int>> vfc_allowed;    // purchase restriction (sequential mode)
    // filled by evaluation:
    std::vector<std::vector<StationOps>> ops;    // [scenario][station]
    std::vector<std::map<int, double>> vfc_dp;   // [scenario][edge] -> pressure
    std::set<int> vfc_purchased;                 // edges
    std::vector<std::map<int, double>> room_levels;  // [scenario][room node] -> dB(A)
};

struct Instance {
    const Problem* prob;
    const SolverOptions* opts;
    const Network* net;
    std::vector<StationInfo> stations;
    std::vector<int> silencer_edges;
    std::vector<const SilencerSpec*> silencer_specs;  // parallel to silencer_edges
    std::vector<RoomInfo> rooms;
    std::vector<double> scenario_weight;
    std::vector<int> rooms_below;  // per edge
    double invest_w_fs = 0.0, invest_w_sil = 0.0, invest_w_vfc = 0.0, energy_w = 0.0;

    int station_of_edge(int edge) const {
        for (std::size_t i = 0; i < stations.size(); ++i)
            if (stations[i].edge == edge) return static_cast<int>(i);
        return -1;
    }
    int silencer_slot_of_edge(int edge) const {
        for (std::size_t i = 0; i < silencer_edges.size(); ++i)
            if (silencer_edges[i] == edge) return static_cast<int>(i);
        return -1;
    }
    const SilencerSpec& sil_spec(int slot) const { return *silencer_specs[slot]; }
    double effective_limit(int room_node) const {
        if (prob->noise_limit_override) return *prob->noise_limit_override;
        return net->nodes[room_node].noise_limit_dba.value_or(kInf);
    }
};

inline Instance build_instance(const Problem& prob, const SolverOptions& opts) {
    Instance inst;
    inst.prob = &prob;
    inst.opts = &opts;
    inst.net = prob.network;
    const Network& net = *prob.network;

    for (std::size_t e = 0; e < net.edges.size(); ++e) {
        const Edge& edge = net.edges[e];
        if (edge.slot == SlotKind::FanStation) {
            StationInfo st;
            st.edge = static_cast<int>(e);
            st.n_max = edge.fan_station->max_fans;
            for (std::size_t c = 0; c < edge.fan_station->candidates.size(); ++c) {
                const FanCandidate& cand = edge.fan_station->candidates[c];
                const FanProductLine& line = prob.catalog->fan_line(cand.line_id);
                const FanBounds& b = line.size(cand.diameter_m);
                for (int copy = 1; copy <= cand.max_count; ++copy) {
                    UnitRef u;
                    u.candidate = static_cast<int>(c);
                    u.copy = copy;
                    u.line = &line;
                    u.bounds = b;
                    u.clad = edge.fan_station->clad;
                    u.cost = fan_cost(cand.diameter_m, line, u.clad);
                    st.units.push_back(u);
                }
            }
            st.rooms = net.rooms_downstream(static_cast<int>(e));
            inst.stations.push_back(std::move(st));
        } else if (edge.slot == SlotKind::Silencer) {
            inst.silencer_edges.push_back(static_cast<int>(e));
        }
    }

    for (int slot_edge : inst.silencer_edges)
        inst.silencer_specs.push_back(
            &prob.catalog->silencer(net.edges[slot_edge].silencer->spec_id));
    for (std::size_t e = 0; e < net.edges.size(); ++e)
        inst.rooms_below.push_back(
            static_cast<int>(net.rooms_downstream(static_cast<int>(e)).size()));

    for (int room : net.room_indices()) {
        RoomInfo info;
        info.node = room;
        info.path = net.path_to_room(net.nodes[room].id);
        for (std::size_t i = 0; i < info.path.size(); ++i) {
            const int e = info.path[i];
            const Edge& edge = net.edges[e];
            if (edge.slot == SlotKind::FanStation || inst.rooms_below[e] > 1)
                info.suffix_start = i + 1;
            if (edge.slot == SlotKind::FanStation) {
                if (info.station != -1)
                    throw std::runtime_error(
                        "unsupported topology: two fan stations on the path to room '" +
                        net.nodes[room].id + "'");
                info.station = inst.station_of_edge(e);
            } else if (edge.slot == SlotKind::Silencer) {
                info.silencers.push_back(inst.silencer_slot_of_edge(e));
            } else if (edge.slot == SlotKind::Vfc) {
                info.vfc_edges.push_back(e);
                if (inst.rooms_below[e] == 1) info.vfc_edge = e;  // dedicated, last wins
            }
        }
        inst.rooms.push_back(std::move(info));
    }

    for (const auto& s : net.scenarios) inst.scenario_weight.push_back(s.weight);
    inst.invest_w_fs = invest_cost_weight(prob.econ, ComponentClass::FanStation);
    inst.invest_w_sil = invest_cost_weight(prob.econ, ComponentClass::Silencer);
    inst.invest_w_vfc = invest_cost_weight(prob.econ, ComponentClass::Vfc);
    inst.energy_w = energy_cost_weight(prob.econ);
    return inst;
}

// --------------------------------------------------------------------------
// Fan operating point search

struct OpsCandidate {
    double power_w = kInf;
    std::vector<FanOperating> fans;
};

inline std::optional<FanOperating> operate_fan(const UnitRef& u, double q, double dp) {
    const FanBounds& b = u.bounds;
    if (q < b.flow_min_m3s - 1e-12 || q > b.flow_max_m3s + 1e-12) return std::nullopt;
    q = std::clamp(q, b.flow_min_m3s, b.flow_max_m3s);
    double n;
    try {
        n = fan_speed_for(q, dp, b.diameter_m, *u.line);
    } catch (const std::domain_error&) {
        return std::nullopt;
    }
    const double po = fan_power(q, n, b.diameter_m, *u.line);
    if (po > b.power_max_w + 1e-6) return std::nullopt;
    FanOperating op;
    op.flow_m3s = q;
    op.speed = n;
    op.pressure_pa = dp;
    op.power_w = po;
    return op;
}

/// Minimum-power split of `flow` over the given units at a common pressure.
/// Exhaustive 1-D searches with coarse-grid multistart; coordinate passes for
/// three and more fans.
inline std::optional<OpsCandidate> split_flow(const std::vector<UnitRef>& units,
                                              const std::vector<int>& subset, double flow,
                                              double dp) {
    const int k = static_cast<int>(subset.size());
    auto eval_unit = [&](int i, double q) -> std::optional<FanOperating> {
        auto op = operate_fan(units[subset[i]], q, dp);
        if (op) op->unit = subset[i];
        return op;
    };

    if (k == 1) {
        auto op = eval_unit(0, flow);
        if (!op) return std::nullopt;
        OpsCandidate c;
        c.power_w = op->power_w;
        c.fans = {*op};
        return c;
    }

    if (k == 2) {
        const FanBounds& b0 = units[subset[0]].bounds;
        const FanBounds& b1 = units[subset[1]].bounds;
        double lo = std::max(b0.flow_min_m3s, flow - b1.flow_max_m3s);
        double hi = std::min(b0.flow_max_m3s, flow - b1.flow_min_m3s);
        if (lo > hi + 1e-12) return std::nullopt;
        auto value = [&](double q0) -> double {
            auto a = eval_unit(0, q0);
            auto b = eval_unit(1, flow - q0);
            if (!a || !b) return kInf;
            return a->power_w + b->power_w;
        };
        double best_q = lo, best_v = kInf;
        const int grid = 48;
        for (int i = 0; i <= grid; ++i) {
            const double q = lo + (hi - lo) * i / grid;
            const double v = value(q);
            if (v < best_v) {
                best_v = v;
                best_q = q;
            }
        }
        if (!std::isfinite(best_v)) return std::nullopt;
        double a = std::max(lo, best_q - (hi - lo) / grid);
        double b = std::min(hi, best_q + (hi - lo) / grid);
        const double phi = 0.5 * (std::sqrt(5.0) - 1.0);
        double x1 = b - phi * (b - a), x2 = a + phi * (b - a);
        double f1 = value(x1), f2 = value(x2);
        for (int it = 0; it < 80 && b - a > 1e-10 * std::max(1.0, flow); ++it) {
            if (f1 <= f2) {
                b = x2;
                x2 = x1;
                f2 = f1;
                x1 = b - phi * (b - a);
                f1 = value(x1);
            } else {
                a = x1;
                x1 = x2;
                f1 = f2;
                x2 = a + phi * (b - a);
                f2 = value(x2);
            }
        }
        const double q0 = f1 <= f2 ? x1 : x2;
        if (value(q0) > best_v) return [&]() -> std::optional<OpsCandidate> {
            auto fa = eval_unit(0, best_q);
            auto fb = eval_unit(1, flow - best_q);
            if (!fa || !fb) return std::nullopt;
            OpsCandidate c;
            c.power_w = fa->power_w + fb->power_w;
            c.fans = {*fa, *fb};
            return c;
        }();
        auto fa = eval_unit(0, q0);
        auto fb = eval_unit(1, flow - q0);
        if (!fa || !fb) return std::nullopt;
        OpsCandidate c;
        c.power_w = fa->power_w + fb->power_w;
        c.fans = {*fa, *fb};
        return c;
    }

    // k >= 3: proportional start plus coordinate descent over unit pairs
    std::vector<double> q(k);
    double cap = 0.0, floor_sum = 0.0;
    for (int i = 0; i < k; ++i) {
        cap += units[subset[i]].bounds.flow_max_m3s;
        floor_sum += units[subset[i]].bounds.flow_min_m3s;
    }
    if (flow < floor_sum - 1e-12 || flow > cap + 1e-12) return std::nullopt;
    for (int i = 0; i < k; ++i) {
        const FanBounds& b = units[subset[i]].bounds;
        q[i] = b.flow_min_m3s +
               (flow - floor_sum) * (b.flow_max_m3s - b.flow_min_m3s) / (cap - floor_sum);
    }
    auto total = [&](const std::vector<double>& qs) -> double {
        double sum = 0.0;
        for (int i = 0; i < k; ++i) {
            auto op = eval_unit(i, qs[i]);
            if (!op) return kInf;
            sum += op->power_w;
        }
        return sum;
    };
    double cur = total(q);
    if (!std::isfinite(cur)) return std::nullopt;
    for (int pass = 0; pass < 8; ++pass) {
        double improved = 0.0;
        for (int i = 0; i < k; ++i) {
            for (int j = i + 1; j < k; ++j) {
                const FanBounds& bi = units[subset[i]].bounds;
                const FanBounds& bj = units[subset[j]].bounds;
                const double pair_flow = q[i] + q[j];
                double lo = std::max(bi.flow_min_m3s, pair_flow - bj.flow_max_m3s);
                double hi = std::min(bi.flow_max_m3s, pair_flow - bj.flow_min_m3s);
                if (lo > hi) continue;
                double best_qi = q[i], best_v = cur;
                for (int g = 0; g <= 24; ++g) {
                    const double qi = lo + (hi - lo) * g / 24;
                    std::vector<double> trial = q;
                    trial[i] = qi;
                    trial[j] = pair_flow - qi;
                    const double v = total(trial);
                    if (v < best_v) {
                        best_v = v;
                        best_qi = qi;
                    }
                }
                if (best_v < cur - 1e-12) {
                    improved += cur - best_v;
                    q[i] = best_qi;
                    q[j] = pair_flow - best_qi;
                    cur = best_v;
                }
            }
        }
        if (improved < 1e-9) break;
    }
    OpsCandidate c;
    c.power_w = 0.0;
    for (int i = 0; i < k; ++i) {
        auto op = eval_unit(i, q[i]);
        if (!op) return std::nullopt;
        c.power_w += op->power_w;
        c.fans.push_back(*op);
    }
    return c;
}

/// All distinct active-subset operating points for one station and duty,
/// sorted by electric power.
inline std::vector<OpsCandidate> ops_candidates(const std::vector<UnitRef>& units,
                                                const std::vector<int>& purchased, double flow,
                                                double dp) {
    std::vector<OpsCandidate> out;
    const int m = static_cast<int>(purchased.size());
    std::set<std::vector<std::pair<std::string, int>>> seen;  // multiset signature
    for (unsigned mask = 1; mask < (1u << m); ++mask) {
        std::vector<int> subset;
        std::vector<std::pair<std::string, int>> sig;
        for (int i = 0; i < m; ++i) {
            if (mask & (1u << i)) {
                subset.push_back(purchased[i]);
                const UnitRef& u = units[purchased[i]];
                sig.emplace_back(u.line->id + "/" + std::to_string(u.bounds.diameter_m), 1);
            }
        }
        std::sort(sig.begin(), sig.end());
        for (std::size_t i = 1; i < sig.size(); ++i)
            if (sig[i].first == sig[i - 1].first) {
                sig[i - 1].second += 1;
                sig.erase(sig.begin() + static_cast<long>(i));
                --i;
            }
        if (!seen.insert(sig).second) continue;
        auto cand = split_flow(units, subset, flow, dp);
        if (cand) out.push_back(std::move(*cand));
    }
    std::stable_sort(out.begin(), out.end(),
                     [](const OpsCandidate& a, const OpsCandidate& b) {
                         if (a.power_w != b.power_w) return a.power_w < b.power_w;
                         return a.fans.size() < b.fans.size();
                     });
    return out;
}

// --------------------------------------------------------------------------
// Design evaluation

struct EvalOutcome {
    bool pressure_ok = false;
    bool noise_ok = false;
    double objective = kInf;
    CostBreakdown costs;
    double max_room_dba = kLevelFloorDb;
    double worst_excess_db = -kInf;
    std::string note;
};

struct Evaluator {
    const Instance& inst;

    double silencer_dp(const DesignState& d, int slot, int scenario) const {
        const SilencerState& st = d.silencers[slot];
        if (!st.on) return 0.0;
        const int edge = inst.silencer_edges[slot];
        const SilencerSpec& spec = inst.sil_spec(slot);
        const double q = inst.net->edges[edge].flow_m3s[scenario];
        const SilencerGeometry g = silencer_geometry(spec, st.splitters, q);
        return silencer_pressure_loss(g.velocity_ms, g.gap_m, st.length_m, spec);
    }

    double base_requirement(int room_idx, int scenario) const {
        const RoomInfo& r = inst.rooms[room_idx];
        const Network& net = *inst.net;
        double req = net.nodes[r.node].boundary_pressure_pa[scenario] -
                     net.nodes[net.source_index()].boundary_pressure_pa[scenario];
        for (int e : r.path) req += net.edge_loss_pa(e, scenario);
        return req;
    }

    double requirement(const DesignState& d, int room_idx, int scenario) const {
        double req = base_requirement(room_idx, scenario);
        for (int slot : inst.rooms[room_idx].silencers) req += silencer_dp(d, slot, scenario);
        return req;
    }

    /// Station duty per scenario: the largest room requirement it serves.
    double station_duty(const DesignState& d, int station, int scenario) const {
        double duty = 0.0;
        for (std::size_t r = 0; r < inst.rooms.size(); ++r) {
            if (inst.rooms[r].station == station)
                duty = std::max(duty, requirement(d, static_cast<int>(r), scenario));
        }
        return duty;
    }

    OctaveSpectrum station_noise(const DesignState& d, int station, int scenario) const {
        const StationOps& ops = d.ops[scenario][station];
        OctaveSpectrum noise = OctaveSpectrum::floor();
        for (const auto& f : ops.fans) {
            const UnitRef& u = inst.stations[station].units[f.unit];
            const OctaveSpectrum fn =
                fan_flow_noise(f.flow_m3s, f.pressure_pa, f.speed, u.bounds.diameter_m, *u.line);
            if (inst.opts->fan_station_level_add) {
                noise = level_add(noise, fn);
            } else {
                for (std::size_t b = 0; b < kBandCount; ++b)
                    noise[b] = std::max(noise[b], fn[b]);  // loudest-fan rule
            }
        }
        return noise;
    }

    EdgeTransferFn transfer_fn(const DesignState& d) const {
        return [this, &d](int edge, int scenario) -> EdgeTransfer {
            const Edge& e = inst.net->edges[edge];
            if (e.slot == SlotKind::FanStation) {
                const int st = inst.station_of_edge(edge);
                const StationOps& ops = d.ops[scenario][st];
                if (!ops.active) return {true, {}, {}};
                return {false, OctaveSpectrum::flat(0.0), station_noise(d, st, scenario)};
            }
            if (e.slot == SlotKind::Vfc) {
                const auto it = d.vfc_dp[scenario].find(edge);
                if (it == d.vfc_dp[scenario].end() || it->second <= kPressureSlackTol)
                    return {true, {}, {}};
                const VfcSpec& spec = inst.prob->catalog->vfc(e.vfc->spec_id);
                return {false, OctaveSpectrum::flat(0.0),
                        vfc_flow_noise(e.flow_m3s[scenario], it->second, spec)};
            }
            if (e.slot == SlotKind::Silencer) {
                const int slot = inst.silencer_slot_of_edge(edge);
                const SilencerState& st = d.silencers[slot];
                if (!st.on) return {true, {}, {}};
                const SilencerSpec& spec = inst.sil_spec(slot);
                const SilencerGeometry g =
                    silencer_geometry(spec, st.splitters, e.flow_m3s[scenario]);
                return {false, silencer_damping(st.splitters, st.length_m, spec),
                        silencer_flow_noise(g.velocity_ms, spec)};
            }
            return {true, {}, {}};
        };
    }

    /// Fill operating points, VFC pressures and (optionally) room levels.
    /// In coupled mode the cheapest acoustically feasible active subset is
    /// chosen per station and scenario.
    EvalOutcome evaluate(DesignState& d, bool coupled) const {
        EvalOutcome out;
        const Network& net = *inst.net;
        const std::size_t n_scen = net.scenarios.size();
        d.ops.assign(n_scen, std::vector<StationOps>(inst.stations.size()));
        d.vfc_dp.assign(n_scen, {});
        d.room_levels.assign(n_scen, {});
        d.vfc_purchased = d.vfc_base;
        for (std::size_t e = 0; e < net.edges.size(); ++e) {
            if (net.edges[e].slot == SlotKind::Vfc && net.edges[e].vfc->force_purchase)
                d.vfc_purchased.insert(static_cast<int>(e));
        }

        double mean_power = 0.0;
        for (std::size_t s = 0; s < n_scen; ++s) {
            // duties and slack
            std::vector<double> duty(inst.stations.size(), 0.0);
            for (std::size_t st = 0; st < inst.stations.size(); ++st)
                duty[st] = std::max(0.0, station_duty(d, static_cast<int>(st),
                                                      static_cast<int>(s)));
            for (std::size_t r = 0; r < inst.rooms.size(); ++r) {
                const RoomInfo& room = inst.rooms[r];
                const double req = requirement(d, static_cast<int>(r), static_cast<int>(s));
                const double provided = room.station >= 0 ? duty[room.station] : 0.0;
                const double slack = provided - req;
                if (slack < -kPressureSlackTol) {
                    out.note = "room '" + net.nodes[room.node].id + "' needs " +
                               std::to_string(req) + " Pa in scenario '" +
                               net.scenarios[s].id + "' but no fan station provides it";
                    return out;
                }
                if (slack > kPressureSlackTol) {
                    if (room.vfc_edge < 0) {
                        out.note = "room '" + net.nodes[room.node].id +
                                   "' has pressure slack but no VFC on its path (scenario '" +
                                   net.scenarios[s].id + "')";
                        return out;
                    }
                    if (d.vfc_allowed && !d.vfc_allowed->count(room.vfc_edge)) {
                        out.note = "pinned topology does not include the VFC on edge '" +
                                   net.edges[room.vfc_edge].id + "' needed in scenario '" +
                                   net.scenarios[s].id + "'";
                        return out;
                    }
                    const VfcSpec& spec =
                        inst.prob->catalog->vfc(net.edges[room.vfc_edge].vfc->spec_id);
                    if (slack > spec.pressure_max_pa + kPressureSlackTol) {
                        out.note = "VFC on edge '" + net.edges[room.vfc_edge].id +
                                   "' cannot absorb " + std::to_string(slack) + " Pa";
                        return out;
                    }
                    if (slack < spec.pressure_min_pa - kPressureSlackTol) {
                        out.note = "VFC on edge '" + net.edges[room.vfc_edge].id +
                                   "' cannot throttle below its minimum loss";
                        return out;
                    }
                    d.vfc_dp[s][room.vfc_edge] =
                        std::max(d.vfc_dp[s][room.vfc_edge], slack);
                    d.vfc_purchased.insert(room.vfc_edge);
                }
            }

            // operating points
            for (std::size_t st = 0; st < inst.stations.size(); ++st) {
                const StationInfo& info = inst.stations[st];
                const double flow = net.edges[info.edge].flow_m3s[s];
                StationOps& ops = d.ops[s][st];
                if (flow <= kPressureSlackTol) {
                    if (duty[st] > kPressureSlackTol) {
                        out.note = "station '" + net.edges[info.edge].id +
                                   "' must hold pressure without flow in scenario '" +
                                   net.scenarios[s].id + "'";
                        return out;
                    }
                    ops = StationOps{};
                    continue;
                }
                if (duty[st] <= kPressureSlackTol) {
                    ops = StationOps{};  // free-wheeling duty, station off
                    continue;
                }
                auto cands = ops_candidates(info.units, d.fans[st], flow, duty[st]);
                if (cands.empty()) {
                    out.note = "no purchased fan set on '" + net.edges[info.edge].id +
                               "' covers " + std::to_string(flow) + " m3/s at " +
                               std::to_string(duty[st]) + " Pa (scenario '" +
                               net.scenarios[s].id + "')";
                    return out;
                }
                ops.active = true;
                ops.pressure_pa = duty[st];
                ops.power_w = cands[0].power_w;
                ops.fans = cands[0].fans;
                if (coupled) {
                    // upgrade to the cheapest subset that satisfies this
                    // station's rooms; candidates are power-sorted
                    bool placed = false;
                    for (const auto& cand : cands) {
                        ops.power_w = cand.power_w;
                        ops.fans = cand.fans;
                        const auto levels =
                            propagate_tree(net, static_cast<int>(s), transfer_fn(d));
                        bool ok = true;
                        for (int room : info.rooms) {
                            if (!net.nodes[room].room) continue;
                            const double level = room_level_dba(net, room, levels);
                            if (level >
                                inst.effective_limit(room) + kNoiseFeasTolDb) {
                                ok = false;
                                break;
                            }
                        }
                        if (ok) {
                            placed = true;
                            break;
                        }
                    }
                    if (!placed) {
                        // keep the cheapest point; the caller sees the excess
                        ops.power_w = cands[0].power_w;
                        ops.fans = cands[0].fans;
                    }
                }
                mean_power += inst.scenario_weight[s] * ops.power_w;
            }
        }
        out.pressure_ok = true;

        // room levels and noise feasibility
        out.noise_ok = true;
        for (std::size_t s = 0; s < n_scen; ++s) {
            const auto levels = propagate_tree(net, static_cast<int>(s), transfer_fn(d));
            for (const auto& room : inst.rooms) {
                if (!net.nodes[room.node].room) continue;  // receiver data absent
                const double level = room_level_dba(net, room.node, levels);
                d.room_levels[s][room.node] = level;
                out.max_room_dba = std::max(out.max_room_dba, level);
                const double excess = level - inst.effective_limit(room.node);
                out.worst_excess_db = std::max(out.worst_excess_db, excess);
                if (coupled && excess > kNoiseFeasTolDb) out.noise_ok = false;
            }
        }

        // costs
        for (std::size_t st = 0; st < inst.stations.size(); ++st) {
            for (int u : d.fans[st])
                out.costs.invest_fan_stations_eur += inst.stations[st].units[u].cost;
        }
        for (std::size_t slot = 0; slot < inst.silencer_edges.size(); ++slot) {
            const SilencerState& sil = d.silencers[slot];
            if (sil.on)
                out.costs.invest_silencers_eur +=
                    silencer_cost(sil.splitters, sil.length_m, inst.sil_spec(slot));
        }
        for (int e : d.vfc_purchased) {
            const Edge& edge = inst.net->edges[e];
            const VfcSpec& spec = inst.prob->catalog->vfc(edge.vfc->spec_id);
            out.costs.invest_vfcs_eur += vfc_cost(spec, edge.vfc->clad);
        }
        out.costs.energy_eur = inst.energy_w * mean_power;
        out.objective = inst.invest_w_fs * out.costs.invest_fan_stations_eur +
                        inst.invest_w_sil * out.costs.invest_silencers_eur +
                        inst.invest_w_vfc * out.costs.invest_vfcs_eur + out.costs.energy_eur;
        // report weighted costs so the breakdown sums to the objective
        out.costs.invest_fan_stations_eur *= inst.invest_w_fs;
        out.costs.invest_silencers_eur *= inst.invest_w_sil;
        out.costs.invest_vfcs_eur *= inst.invest_w_vfc;
        return out;
    }
};

}  // namespace detail

// --------------------------------------------------------------------------
// Search

struct SilencerPattern {
    // per slot: -1 = not purchased, otherwise the splitter count
    std::vector<int> splitters;
    double min_invest = 0.0;
};

namespace detail {

inline void enumerate_multisets(const StationInfo& st, std::vector<std::vector<int>>& out) {
    // counts per candidate, capped by copies and by the station limit
    std::vector<int> max_per_cand;
    std::vector<std::vector<int>> units_per_cand;
    for (std::size_t u = 0; u < st.units.size(); ++u) {
        const int c = st.units[u].candidate;
        if (c >= static_cast<int>(max_per_cand.size())) {
            max_per_cand.resize(c + 1, 0);
            units_per_cand.resize(c + 1);
        }
        max_per_cand[c] += 1;
        units_per_cand[c].push_back(static_cast<int>(u));
    }
    std::vector<int> counts(max_per_cand.size(), 0);
    std::vector<std::vector<int>> result;
    std::function<void(std::size_t, int)> rec = [&](std::size_t c, int total) {
        if (c == counts.size()) {
            std::vector<int> units;
            for (std::size_t i = 0; i < counts.size(); ++i)
                for (int k = 0; k < counts[i]; ++k) units.push_back(units_per_cand[i][k]);
            result.push_back(std::move(units));
            return;
        }
        for (int k = 0; k <= max_per_cand[c] && total + k <= st.n_max; ++k) {
            counts[c] = k;
            rec(c + 1, total + k);
        }
        counts[c] = 0;
    };
    rec(0, 0);
    out = std::move(result);
}

struct Combo {
    std::vector<std::vector<int>> fans;  // per station
    double bound = 0.0;                  // valid objective lower bound
    bool airflow_feasible = false;
    double airflow_objective = kInf;
    double fan_invest = 0.0;
    std::string note;
};

struct SearchState {
    double incumbent = kInf;
    DesignState best;
    EvalOutcome best_outcome;
    double best_achievable_dba = kInf;
    bool found = false;
    std::string last_note;

    // deterministic preference among equal objectives
    static int purchased_count(const DesignState& d) {
        int n = 0;
        for (const auto& f : d.fans) n += static_cast<int>(f.size());
        for (const auto& s : d.silencers) n += s.on ? 1 : 0;
        n += static_cast<int>(d.vfc_purchased.size());
        return n;
    }
    static double silencer_length(const DesignState& d) {
        double l = 0.0;
        for (const auto& s : d.silencers)
            if (s.on) l += s.length_m;
        return l;
    }
    static std::vector<int> purchase_key(const DesignState& d) {
        std::vector<int> key;
        for (const auto& f : d.fans) {
            key.push_back(static_cast<int>(f.size()));
            for (int u : f) key.push_back(u);
        }
        for (const auto& s : d.silencers) {
            key.push_back(s.on ? s.splitters : -1);
            key.push_back(s.on ? static_cast<int>(std::lround(s.length_m * 1000)) : -1);
        }
        return key;
    }

    bool offer(const DesignState& d, const EvalOutcome& out) {
        if (!out.pressure_ok || !out.noise_ok) return false;
        constexpr double kTieEps = 1e-9;
        if (found && out.objective > incumbent * (1.0 + kTieEps) + kTieEps) return false;
        if (found && out.objective >= incumbent * (1.0 - kTieEps) - kTieEps) {
            // tie: fewer components, then less silencer length, then catalog order
            const int pc_new = purchased_count(d), pc_old = purchased_count(best);
            if (pc_new > pc_old) return false;
            if (pc_new == pc_old) {
                const double len_new = silencer_length(d), len_old = silencer_length(best);
                if (len_new > len_old + 1e-12) return false;
                if (std::abs(len_new - len_old) <= 1e-12 &&
                    purchase_key(d) >= purchase_key(best))
                    return false;
            }
            if (out.objective > incumbent) return false;
        }
        incumbent = out.objective;
        best = d;
        best_outcome = out;
        found = true;
        return true;
    }
};

class Search {
  public:
    Search(const Problem& prob, const SolverOptions& opts)
        : prob_(prob), opts_(opts), inst_(build_instance(prob, opts)), eval_{inst_} {
        if (opts.time_budget_s > 0.0) {
            deadline_.enabled = true;
            deadline_.end = Clock::now() +
                            std::chrono::microseconds(
                                static_cast<std::int64_t>(opts.time_budget_s * 1e6));
        }
    }

    const Instance& instance() const { return inst_; }

    DesignState blank_design() const {
        DesignState d;
        d.fans.resize(inst_.stations.size());
        d.silencers.assign(inst_.silencer_edges.size(), SilencerState{});
        d.vfc_allowed = vfc_allowed_;
        d.vfc_base = vfc_base_;
        return d;
    }

    /// All station purchase combinations with a valid objective lower bound,
    /// cheapest bound first.
    std::vector<Combo> enumerate_combos() {
        std::vector<std::vector<std::vector<int>>> per_station;
        for (std::size_t s = 0; s < inst_.stations.size(); ++s) {
            std::vector<std::vector<int>> options;
            if (fan_pin_) {
                options = {(*fan_pin_)[s]};
            } else {
                enumerate_multisets(inst_.stations[s], options);
            }
            per_station.push_back(std::move(options));
        }
        std::vector<Combo> combos;
        std::vector<std::vector<int>> pick(inst_.stations.size());
        std::function<void(std::size_t)> rec = [&](std::size_t st) {
            if (st == pick.size()) {
                Combo c;
                c.fans = pick;
                combos.push_back(std::move(c));
                return;
            }
            for (const auto& option : per_station[st]) {
                pick[st] = option;
                rec(st + 1);
            }
        };
        rec(0);

        const std::size_t n = combos.size();
        const int threads = std::max(1, opts_.threads);
        auto eval_range = [&](std::size_t begin, std::size_t end) {
            for (std::size_t i = begin; i < end; ++i) {
                Combo& c = combos[i];
                DesignState d = blank_design();
                d.fans = c.fans;
                for (std::size_t st = 0; st < inst_.stations.size(); ++st)
                    for (int u : c.fans[st]) c.fan_invest += inst_.stations[st].units[u].cost;
                EvalOutcome out = eval_.evaluate(d, /*coupled=*/false);
                c.airflow_feasible = out.pressure_ok;
                if (out.pressure_ok) {
                    c.airflow_objective = out.objective;
                    c.bound = out.objective;
                } else {
                    c.bound = inst_.invest_w_fs * c.fan_invest;
                    c.note = out.note;
                }
            }
        };
        if (threads == 1 || n < 8) {
            eval_range(0, n);
        } else {
            std::vector<std::thread> pool;
            const std::size_t chunk = (n + threads - 1) / threads;
            for (int t = 0; t < threads; ++t) {
                const std::size_t b = std::min(n, t * chunk);
                const std::size_t e = std::min(n, b + chunk);
                if (b < e) pool.emplace_back(eval_range, b, e);
            }
            for (auto& th : pool) th.join();
        }
        std::stable_sort(combos.begin(), combos.end(), [](const Combo& a, const Combo& b) {
            return a.bound < b.bound;
        });
        return combos;
    }

    // -- airflow-only ------------------------------------------------------

    Solution solve_airflow() {
        SearchState state;
        for (const Combo& combo : enumerate_combos()) {
            if (state.found && combo.bound > state.incumbent) break;
            if (!combo.airflow_feasible) {
                if (state.last_note.empty()) state.last_note = combo.note;
                continue;
            }
            DesignState d = blank_design();
            d.fans = combo.fans;
            const EvalOutcome out = eval_.evaluate(d, /*coupled=*/false);
            if (out.pressure_ok) {
                EvalOutcome relaxed = out;
                relaxed.noise_ok = true;  // noise is not a constraint here
                state.offer(d, relaxed);
            } else if (!state.found) {
                state.last_note = out.note;
            }
        }
        return assemble(state, /*coupled=*/false, std::nullopt);
    }

    // -- coupled -----------------------------------------------------------

    Solution solve_coupled(std::optional<double> warm_lower_bound) {
        SearchState state;
        bool budget_hit = false;
        double unexplored_bound = kInf;

        const auto combos = enumerate_combos();
        double airflow_best = kInf;
        for (const auto& c : combos)
            if (c.airflow_feasible) airflow_best = std::min(airflow_best, c.airflow_objective);

        for (std::size_t i = 0; i < combos.size(); ++i) {
            const Combo& combo = combos[i];
            if (state.found && combo.bound > state.incumbent) break;
            if (deadline_.expired()) {
                budget_hit = true;
                for (std::size_t j = i; j < combos.size(); ++j)
                    unexplored_bound = std::min(unexplored_bound, combos[j].bound);
                break;
            }
            complete_with_silencers(combo, state);
        }

        double lb = std::max(warm_lower_bound.value_or(-kInf), hydraulic_objective());
        if (std::isfinite(airflow_best)) lb = std::max(lb, airflow_best);
        Solution sol = assemble(state, /*coupled=*/true, lb);
        if (budget_hit && state.found) {
            sol.status = SolveStatus::TimeBudget;
            const double floor_lb = std::min(unexplored_bound, lb);
            sol.gap = std::max(opts_.tolerance,
                               (sol.objective_eur - floor_lb) /
                                   std::max(1e-12, sol.objective_eur));
        }
        return sol;
    }

    double hydraulic_objective() const {
        // only binding for a single central station
        if (inst_.stations.size() != 1) return 0.0;
        const auto bounds = hydraulic_lower_bound(*inst_.net, prob_.max_fan_efficiency);
        double mean = 0.0;
        for (std::size_t s = 0; s < bounds.size(); ++s)
            mean += inst_.scenario_weight[s] * bounds[s];
        return inst_.energy_w * mean;
    }

  private:
    // minimal invest of a silencer pattern, used for pruning
    double pattern_invest(const SilencerPattern& p) const {
        double invest = 0.0;
        for (std::size_t slot = 0; slot < p.splitters.size(); ++slot) {
            if (p.splitters[slot] < 0) continue;
            const SilencerSpec& spec = inst_.sil_spec(static_cast<int>(slot));
            invest += silencer_cost(p.splitters[slot], spec.length_min_m, spec);
        }
        return invest;
    }

    /// Valid per-band lower bound on a fan station's outlet noise over every
    /// admissible operating point at a duty of at least `duty_min`.
    OctaveSpectrum station_noise_minorant(const Combo& combo, std::size_t st,
                                          double duty_min) const {
        OctaveSpectrum minorant = OctaveSpectrum::flat(kInf);
        for (int u : combo.fans[st]) {
            const UnitRef& unit = inst_.stations[st].units[u];
            const double base = 10.0 * std::log10(unit.bounds.flow_min_m3s) +
                                20.0 * std::log10(std::max(1.0, duty_min));
            for (std::size_t f = 0; f < kBandCount; ++f) {
                const auto& e = unit.line->noise_coeff[f];
                // min of e0*n + e1*n^2 over the admissible speed range
                double poly = std::min(
                    e[0] * unit.bounds.speed_min + e[1] * unit.bounds.speed_min *
                                                       unit.bounds.speed_min,
                    e[0] + e[1]);
                if (e[1] > 0.0) {
                    const double vertex = -e[0] / (2.0 * e[1]);
                    if (vertex > unit.bounds.speed_min && vertex < 1.0)
                        poly = std::min(poly, e[0] * vertex + e[1] * vertex * vertex);
                }
                minorant[f] = std::min(minorant[f],
                                       base + poly + e[2] * unit.bounds.diameter_m + e[3]);
            }
        }
        return minorant;
    }

    /// True when some room provably exceeds its limit for every silencer
    /// configuration under this fan purchase.
    bool floor_infeasible(const Combo& combo) {
        const Network& net = *inst_.net;
        DesignState d = blank_design();
        d.fans = combo.fans;
        for (std::size_t s = 0; s < net.scenarios.size(); ++s) {
            std::vector<double> duty_min(inst_.stations.size(), 0.0);
            for (std::size_t st = 0; st < inst_.stations.size(); ++st)
                duty_min[st] = std::max(
                    0.0, eval_.station_duty(d, static_cast<int>(st), static_cast<int>(s)));
            auto fn = [&](int edge, int scenario) -> EdgeTransfer {
                const Edge& e = net.edges[edge];
                if (e.slot == SlotKind::FanStation) {
                    const int st = inst_.station_of_edge(edge);
                    if (net.edges[edge].flow_m3s[scenario] <= kPressureSlackTol ||
                        duty_min[st] <= kPressureSlackTol || combo.fans[st].empty())
                        return {true, {}, {}};
                    return {false, OctaveSpectrum::flat(0.0),
                            station_noise_minorant(combo, st, duty_min[st])};
                }
                if (e.slot == SlotKind::Silencer) {
                    const int slot = inst_.silencer_slot_of_edge(edge);
                    const SilencerSpec& spec = inst_.sil_spec(slot);
                    OctaveSpectrum best_damping = OctaveSpectrum::flat(0.0);
                    for (int n = spec.splitter_min; n <= spec.splitter_max; ++n) {
                        if (spec.width_m - spec.splitter_width_m * n <= 0.0) continue;
                        const OctaveSpectrum dmp =
                            silencer_damping(n, spec.length_max_m, spec);
                        for (std::size_t f = 0; f < kBandCount; ++f)
                            best_damping[f] = std::max(best_damping[f], dmp[f]);
                    }
                    return {false, best_damping, OctaveSpectrum::floor()};
                }
                return {true, {}, {}};  // VFC noise-free in the optimistic bound
            };
            const auto levels = propagate_tree(net, static_cast<int>(s), fn);
            for (const auto& room : inst_.rooms) {
                if (!net.nodes[room.node].room) continue;
                if (room_level_dba(net, room.node, levels) >
                    inst_.effective_limit(room.node) + kNoiseFeasTolDb)
                    return true;
            }
        }
        return false;
    }

    void complete_with_silencers(const Combo& combo, SearchState& state) {
        if (floor_infeasible(combo)) {
            // record an achievable level for the infeasibility certificate
            DesignState d = blank_design();
            d.fans = combo.fans;
            for (std::size_t slot = 0; slot < inst_.silencer_edges.size(); ++slot) {
                const SilencerSpec& spec = inst_.sil_spec(static_cast<int>(slot));
                int best_n = spec.splitter_min;
                double best_sum = -kInf;
                for (int n = spec.splitter_min; n <= spec.splitter_max; ++n) {
                    if (spec.width_m - spec.splitter_width_m * n <= 0.0) continue;
                    const OctaveSpectrum dmp = silencer_damping(n, spec.length_max_m, spec);
                    double sum = 0.0;
                    for (std::size_t f = 0; f < kBandCount; ++f) sum += dmp[f];
                    if (sum > best_sum) {
                        best_sum = sum;
                        best_n = n;
                    }
                }
                d.silencers[slot] = {true, best_n, spec.length_max_m};
            }
            const EvalOutcome out = eval_.evaluate(d, /*coupled=*/true);
            if (out.pressure_ok)
                state.best_achievable_dba =
                    std::min(state.best_achievable_dba, out.max_room_dba);
            return;
        }
        const int slots = static_cast<int>(inst_.silencer_edges.size());
        if (slots <= opts_.exact_silencer_slots) {
            exact_pattern_search(combo, state);
        } else {
            decomposition_search(combo, state);
        }
    }

    // ---- exact enumeration over silencer patterns (few slots) ------------

    void exact_pattern_search(const Combo& combo, SearchState& state) {
        const int slots = static_cast<int>(inst_.silencer_edges.size());
        std::vector<SilencerPattern> patterns;
        SilencerPattern cur;
        cur.splitters.assign(slots, -1);
        std::function<void(int)> rec = [&](int slot) {
            if (slot == slots) {
                SilencerPattern p = cur;
                p.min_invest = pattern_invest(p);
                patterns.push_back(std::move(p));
                return;
            }
            rec(slot + 1);  // not purchased first
            const SilencerSpec& spec = inst_.sil_spec(slot);
            for (int n = spec.splitter_min; n <= spec.splitter_max; ++n) {
                if (spec.width_m - spec.splitter_width_m * n <= 0.0) continue;
                cur.splitters[slot] = n;
                rec(slot + 1);
            }
            cur.splitters[slot] = -1;
        };
        rec(0);
        std::stable_sort(patterns.begin(), patterns.end(),
                         [](const SilencerPattern& a, const SilencerPattern& b) {
                             return a.min_invest < b.min_invest;
                         });

        const double energy_floor = combo.airflow_feasible
                                        ? combo.airflow_objective -
                                              inst_.invest_w_fs * combo.fan_invest
                                        : 0.0;
        for (const auto& pattern : patterns) {
            if (deadline_.expired()) return;
            const double bound = inst_.invest_w_fs * combo.fan_invest +
                                 inst_.invest_w_sil * pattern.min_invest +
                                 std::max(0.0, energy_floor);
            if (state.found && bound > state.incumbent) continue;
            optimize_lengths(combo, pattern, state);
        }
    }

    std::vector<int> purchased_slots(const SilencerPattern& p) const {
        std::vector<int> out;
        for (std::size_t i = 0; i < p.splitters.size(); ++i)
            if (p.splitters[i] >= 0) out.push_back(static_cast<int>(i));
        return out;
    }

    DesignState design_for(const Combo& combo, const SilencerPattern& p,
                           const std::vector<double>& lengths) const {
        DesignState d;
        d.fans = combo.fans;
        d.silencers.assign(inst_.silencer_edges.size(), SilencerState{});
        const auto slots = purchased_slots(p);
        for (std::size_t k = 0; k < slots.size(); ++k) {
            d.silencers[slots[k]] = {true, p.splitters[slots[k]], lengths[k]};
        }
        d.vfc_allowed = vfc_allowed_;
        d.vfc_base = vfc_base_;
        return d;
    }

    bool config_feasible(const Combo& combo, const SilencerPattern& p,
                         const std::vector<double>& lengths) {
        DesignState d = design_for(combo, p, lengths);
        const EvalOutcome out = eval_.evaluate(d, /*coupled=*/true);
        return out.pressure_ok && out.noise_ok;
    }

    double snap(double l, const SilencerSpec& spec) const {
        const double g = opts_.length_grid_m;
        const double snapped = spec.length_min_m +
                               std::ceil((l - spec.length_min_m) / g - 1e-9) * g;
        return std::clamp(snapped, spec.length_min_m, spec.length_max_m);
    }

    /// Minimal feasible length of one slot with the others held fixed.
    std::optional<double> bisect_length(const Combo& combo, const SilencerPattern& p,
                                        std::vector<double> lengths, std::size_t k) {
        const auto slots = purchased_slots(p);
        const SilencerSpec& spec = inst_.sil_spec(slots[k]);
        lengths[k] = spec.length_max_m;
        if (!config_feasible(combo, p, lengths)) return std::nullopt;
        lengths[k] = spec.length_min_m;
        if (config_feasible(combo, p, lengths)) return spec.length_min_m;
        double lo = spec.length_min_m, hi = spec.length_max_m;
        while (hi - lo > opts_.length_grid_m + 1e-12) {
            const double mid = snap(0.5 * (lo + hi), spec);
            if (mid <= lo || mid >= hi) break;
            lengths[k] = mid;
            (config_feasible(combo, p, lengths) ? hi : lo) = mid;
        }
        return snap(hi, spec);
    }

    void optimize_lengths(const Combo& combo, const SilencerPattern& p, SearchState& state) {
        const auto slots = purchased_slots(p);
        auto submit = [&](const std::vector<double>& lengths) {
            DesignState d = design_for(combo, p, lengths);
            const EvalOutcome out = eval_.evaluate(d, /*coupled=*/true);
            if (out.pressure_ok) {
                state.best_achievable_dba = std::min(state.best_achievable_dba,
                                                     out.max_room_dba);
                if (!out.noise_ok && !state.found) state.last_note = out.note;
            } else if (!state.found && state.last_note.empty()) {
                state.last_note = out.note;
            }
            state.offer(d, out);
        };

        if (slots.empty()) {
            submit({});
            return;
        }
        if (slots.size() == 1) {
            const auto l = bisect_length(combo, p, {0.0}, 0);
            if (l) submit({*l});
            return;
        }
        if (slots.size() == 2) {
            const SilencerSpec& s0 = inst_.sil_spec(slots[0]);
            double best_obj = kInf;
            std::vector<double> best_lengths;
            for (double l0 = s0.length_min_m; l0 <= s0.length_max_m + 1e-9;
                 l0 += opts_.length_scan_m) {
                const double l0s = snap(l0, s0);
                const auto l1 = bisect_length(combo, p, {l0s, 0.0}, 1);
                if (!l1) continue;
                DesignState d = design_for(combo, p, {l0s, *l1});
                const EvalOutcome out = eval_.evaluate(d, /*coupled=*/true);
                if (out.pressure_ok && out.noise_ok && out.objective < best_obj) {
                    best_obj = out.objective;
                    best_lengths = {l0s, *l1};
                }
            }
            if (!best_lengths.empty()) {
                // fine pass around the winning outer length
                for (double l0 = best_lengths[0] - opts_.length_scan_m;
                     l0 <= best_lengths[0] + opts_.length_scan_m + 1e-9;
                     l0 += opts_.length_grid_m) {
                    if (l0 < s0.length_min_m || l0 > s0.length_max_m) continue;
                    const double l0s = snap(l0, s0);
                    const auto l1 = bisect_length(combo, p, {l0s, 0.0}, 1);
                    if (!l1) continue;
                    DesignState d = design_for(combo, p, {l0s, *l1});
                    const EvalOutcome out = eval_.evaluate(d, /*coupled=*/true);
                    if (out.pressure_ok && out.noise_ok && out.objective < best_obj) {
                        best_obj = out.objective;
                        best_lengths = {l0s, *l1};
                    }
                }
                submit(best_lengths);
            } else {
                // record the best achievable level for certificates
                std::vector<double> maxed;
                for (int slot : slots)
                    maxed.push_back(inst_.sil_spec(slot).length_max_m);
                submit(maxed);
            }
            return;
        }
        // more slots than the exact mode expects: greedy coordinate descent
        std::vector<double> lengths;
        for (int slot : slots) lengths.push_back(inst_.sil_spec(slot).length_max_m);
        if (!config_feasible(combo, p, lengths)) {
            submit(lengths);
            return;
        }
        for (int pass = 0; pass < 2; ++pass) {
            for (std::size_t k = 0; k < slots.size(); ++k) {
                const auto l = bisect_length(combo, p, lengths, k);
                if (l) lengths[k] = *l;
            }
        }
        submit(lengths);
    }

    // ---- trunk/branch decomposition (many slots) --------------------------

    void decomposition_search(const Combo& combo, SearchState& state);
    bool branch_fixed_point(const Combo& combo, DesignState& d,
                            const std::vector<std::vector<int>>& branch_slots,
                            std::vector<std::size_t>& stuck);
    double local_room_level(const DesignState& d, std::size_t room_idx, int scenario,
                            int override_slot, const SilencerState& override_cfg,
                            double duty, const std::vector<OctaveSpectrum>& levels) const;
    void shrink_trunk_lengths(const Combo& combo, DesignState& d,
                              const std::vector<int>& trunk_slots,
                              const std::vector<std::vector<int>>& branch_slots);

    Solution assemble(const SearchState& state, bool coupled,
                      std::optional<double> lower_bound) {
        Solution sol;
        if (!state.found) {
            sol.status = SolveStatus::Infeasible;
            sol.note = state.last_note.empty() ? "no feasible design" : state.last_note;
            if (coupled && std::isfinite(state.best_achievable_dba))
                sol.best_achievable_dba = state.best_achievable_dba;
            return sol;
        }
        const DesignState& d = state.best;
        const EvalOutcome& out = state.best_outcome;
        sol.status = SolveStatus::Optimal;
        sol.objective_eur = out.objective;
        sol.costs = out.costs;
        sol.gap = opts_.tolerance;
        sol.max_room_dba = out.max_room_dba;
        sol.best_achievable_dba = state.best_achievable_dba;
        if (lower_bound) sol.lower_bound_eur = *lower_bound;

        const Network& net = *inst_.net;
        for (std::size_t st = 0; st < inst_.stations.size(); ++st) {
            EdgeDesign& ed = sol.purchases[net.edges[inst_.stations[st].edge].id];
            ed.station_purchased = !d.fans[st].empty();
            for (int u : d.fans[st]) {
                const UnitRef& ur = inst_.stations[st].units[u];
                ed.fans.push_back({ur.line->id, ur.bounds.diameter_m, ur.copy, ur.cost});
            }
        }
        for (std::size_t slot = 0; slot < inst_.silencer_edges.size(); ++slot) {
            EdgeDesign& ed = sol.purchases[net.edges[inst_.silencer_edges[slot]].id];
            const SilencerState& s = d.silencers[slot];
            ed.silencer.purchased = s.on;
            if (s.on) {
                ed.silencer.splitters = s.splitters;
                ed.silencer.length_m = s.length_m;
                ed.silencer.cost_eur =
                    silencer_cost(s.splitters, s.length_m, inst_.sil_spec(slot));
            }
        }
        for (std::size_t e = 0; e < net.edges.size(); ++e)
            if (net.edges[e].slot == SlotKind::Vfc) sol.purchases[net.edges[e].id];
        for (int e : d.vfc_purchased) sol.purchases[net.edges[e].id].vfc_purchased = true;

        sol.station_ops.resize(net.scenarios.size());
        sol.vfc_pressure_pa.resize(net.scenarios.size());
        sol.room_dba.resize(net.scenarios.size());
        for (std::size_t s = 0; s < net.scenarios.size(); ++s) {
            for (std::size_t st = 0; st < inst_.stations.size(); ++st)
                sol.station_ops[s][net.edges[inst_.stations[st].edge].id] = d.ops[s][st];
            for (const auto& [edge, dp] : d.vfc_dp[s])
                sol.vfc_pressure_pa[s][net.edges[edge].id] = dp;
            for (const auto& [node, level] : d.room_levels[s])
                sol.room_dba[s][net.nodes[node].id] = level;
        }
        return sol;
    }

  public:
    std::optional<std::set<int>> vfc_allowed_;  // sequential mode pinning
    std::set<int> vfc_base_;
    std::optional<std::vector<std::vector<int>>> fan_pin_;  // per-station unit lists

    const Evaluator& evaluator() const { return eval_; }

    /// Pin fan and VFC purchases to those of an earlier solution.
    void pin_topology(const Solution& airflow) {
        std::vector<std::vector<int>> pin(inst_.stations.size());
        for (std::size_t st = 0; st < inst_.stations.size(); ++st) {
            const auto it = airflow.purchases.find(
                inst_.net->edges[inst_.stations[st].edge].id);
            if (it == airflow.purchases.end()) continue;
            for (const auto& fan : it->second.fans) {
                bool placed = false;
                for (std::size_t u = 0; u < inst_.stations[st].units.size(); ++u) {
                    const UnitRef& ur = inst_.stations[st].units[u];
                    if (ur.line->id == fan.line_id &&
                        ur.bounds.diameter_m == fan.diameter_m && ur.copy == fan.copy) {
                        pin[st].push_back(static_cast<int>(u));
                        placed = true;
                        break;
                    }
                }
                if (!placed)
                    throw std::runtime_error("pin_topology: fan purchase not in catalog");
            }
        }
        fan_pin_ = std::move(pin);

        std::set<int> vfcs;
        for (std::size_t e = 0; e < inst_.net->edges.size(); ++e) {
            const Edge& edge = inst_.net->edges[e];
            if (edge.slot != SlotKind::Vfc) continue;
            const auto it = airflow.purchases.find(edge.id);
            if ((it != airflow.purchases.end() && it->second.vfc_purchased) ||
                edge.vfc->force_purchase)
                vfcs.insert(static_cast<int>(e));
        }
        vfc_base_ = vfcs;
        vfc_allowed_ = vfcs;
    }

  private:
    const Problem& prob_;
    const SolverOptions& opts_;
    Instance inst_;
    Evaluator eval_;
    Deadline deadline_;
};

// ---- trunk/branch decomposition ------------------------------------------

inline void Search::decomposition_search(const Combo& combo, SearchState& state) {
    const Network& net = *inst_.net;
    const int slots = static_cast<int>(inst_.silencer_edges.size());

    // classify silencer slots
    std::vector<int> trunk_slots;
    std::vector<std::vector<int>> branch_slots_of_room(inst_.rooms.size());
    for (int slot = 0; slot < slots; ++slot) {
        const auto rooms = net.rooms_downstream(inst_.silencer_edges[slot]);
        if (rooms.size() == 1) {
            for (std::size_t r = 0; r < inst_.rooms.size(); ++r)
                if (inst_.rooms[r].node == rooms[0])
                    branch_slots_of_room[r].push_back(slot);
        } else {
            trunk_slots.push_back(slot);
        }
    }

    // trunk skeletons: splitter choice (or off) per trunk slot, invest-sorted
    struct Skeleton {
        std::vector<int> splitters;  // per trunk slot, -1 = off
        double invest = 0.0;
    };
    std::vector<Skeleton> skeletons;
    {
        Skeleton cur;
        cur.splitters.assign(trunk_slots.size(), -1);
        std::function<void(std::size_t)> rec = [&](std::size_t i) {
            if (i == trunk_slots.size()) {
                Skeleton s = cur;
                for (std::size_t k = 0; k < trunk_slots.size(); ++k) {
                    if (s.splitters[k] < 0) continue;
                    const SilencerSpec& spec = inst_.sil_spec(trunk_slots[k]);
                    s.invest += silencer_cost(s.splitters[k], spec.length_min_m, spec);
                }
                skeletons.push_back(std::move(s));
                return;
            }
            rec(i + 1);
            const SilencerSpec& spec = inst_.sil_spec(trunk_slots[i]);
            for (int n = spec.splitter_min; n <= spec.splitter_max; ++n) {
                if (spec.width_m - spec.splitter_width_m * n <= 0.0) continue;
                cur.splitters[i] = n;
                rec(i + 1);
            }
            cur.splitters[i] = -1;
        };
        rec(0);
    }
    std::stable_sort(skeletons.begin(), skeletons.end(),
                     [](const Skeleton& a, const Skeleton& b) { return a.invest < b.invest; });

    const double energy_floor =
        combo.airflow_feasible
            ? combo.airflow_objective - inst_.invest_w_fs * combo.fan_invest
            : 0.0;

    for (const Skeleton& skel : skeletons) {
        if (deadline_.expired()) return;
        const double bound = inst_.invest_w_fs * combo.fan_invest +
                             inst_.invest_w_sil * skel.invest + std::max(0.0, energy_floor);
        if (state.found && bound > state.incumbent) continue;

        DesignState d = blank_design();
        d.fans = combo.fans;
        for (std::size_t k = 0; k < trunk_slots.size(); ++k) {
            if (skel.splitters[k] >= 0)
                d.silencers[trunk_slots[k]] = {true, skel.splitters[k],
                                               inst_.sil_spec(trunk_slots[k]).length_min_m};
        }

        bool viable = true;
        for (int round = 0; round < 3 && viable; ++round) {
            std::vector<std::size_t> stuck;
            viable = branch_fixed_point(combo, d, branch_slots_of_room, stuck);
            if (!viable) break;
            if (stuck.empty()) break;
            // grow trunk silencers on the stuck rooms' paths, cheapest first
            bool grew = false;
            for (std::size_t k = 0; k < trunk_slots.size() && !grew; ++k) {
                const int slot = trunk_slots[k];
                if (!d.silencers[slot].on) continue;
                bool on_path = false;
                for (std::size_t r : stuck) {
                    for (int s2 : inst_.rooms[r].silencers)
                        if (s2 == slot) on_path = true;
                }
                if (!on_path) continue;
                const SilencerSpec& spec = inst_.sil_spec(slot);
                if (d.silencers[slot].length_m >= spec.length_max_m - 1e-12) continue;
                d.silencers[slot].length_m =
                    std::min(spec.length_max_m,
                             d.silencers[slot].length_m +
                                 std::max(0.25, (spec.length_max_m - spec.length_min_m) / 4));
                grew = true;
            }
            if (!grew) {
                viable = false;  // nothing left to grow
                break;
            }
        }
        if (!viable) continue;

        EvalOutcome out = eval_.evaluate(d, /*coupled=*/true);
        if (out.pressure_ok)
            state.best_achievable_dba = std::min(state.best_achievable_dba, out.max_room_dba);
        if (!out.pressure_ok || !out.noise_ok) {
            // one repair pass against the final operating points
            std::vector<std::size_t> stuck;
            if (branch_fixed_point(combo, d, branch_slots_of_room, stuck) && stuck.empty()) {
                out = eval_.evaluate(d, /*coupled=*/true);
            }
        }
        if (out.pressure_ok && out.noise_ok) {
            shrink_trunk_lengths(combo, d, trunk_slots, branch_slots_of_room);
            out = eval_.evaluate(d, /*coupled=*/true);
            state.offer(d, out);
        } else if (!state.found && state.last_note.empty()) {
            state.last_note = out.note;
        }
    }
}

inline bool Search::branch_fixed_point(const Combo& combo, DesignState& d,
                                       const std::vector<std::vector<int>>& branch_slots,
                                       std::vector<std::size_t>& stuck) {
    (void)combo;
    const Network& net = *inst_.net;
    stuck.clear();
    for (int iter = 0; iter < 10; ++iter) {
        EvalOutcome probe = eval_.evaluate(d, /*coupled=*/false);
        if (!probe.pressure_ok) {
            // silencer pressure may exceed what the fans can deliver
            return false;
        }
        // spectra with current design, per scenario
        std::vector<std::vector<OctaveSpectrum>> levels;
        for (std::size_t s = 0; s < net.scenarios.size(); ++s)
            levels.push_back(propagate_tree(net, static_cast<int>(s), eval_.transfer_fn(d)));
        std::vector<double> duties(inst_.stations.size() * net.scenarios.size(), 0.0);
        for (std::size_t st = 0; st < inst_.stations.size(); ++st)
            for (std::size_t s = 0; s < net.scenarios.size(); ++s)
                duties[st * net.scenarios.size() + s] =
                    std::max(0.0, eval_.station_duty(d, static_cast<int>(st),
                                                     static_cast<int>(s)));

        stuck.clear();
        bool changed = false;
        for (std::size_t r = 0; r < inst_.rooms.size(); ++r) {
            if (!net.nodes[inst_.rooms[r].node].room) continue;
            const auto& options = branch_slots[r];
            // room feasibility for a candidate branch configuration
            auto feasible = [&](int slot, const SilencerState& cfg) {
                for (std::size_t s = 0; s < net.scenarios.size(); ++s) {
                    const double duty =
                        inst_.rooms[r].station >= 0
                            ? duties[inst_.rooms[r].station * net.scenarios.size() + s]
                            : 0.0;
                    if (local_room_level(d, r, static_cast<int>(s), slot, cfg, duty,
                                         levels[s]) >
                        inst_.effective_limit(inst_.rooms[r].node) + kNoiseFeasTolDb)
                        return false;
                }
                return true;
            };

            SilencerState best_cfg;
            int best_slot = -1;
            double best_cost = kInf;
            if (feasible(-1, SilencerState{})) {
                best_cost = 0.0;  // no branch silencer needed
            }
            if (best_cost > 0.0) {
                for (int slot : options) {
                    const SilencerSpec& spec = inst_.sil_spec(slot);
                    for (int n = spec.splitter_min; n <= spec.splitter_max; ++n) {
                        if (spec.width_m - spec.splitter_width_m * n <= 0.0) continue;
                        SilencerState cfg{true, n, spec.length_max_m};
                        if (!feasible(slot, cfg)) continue;
                        // minimal feasible length on the grid
                        double lo = spec.length_min_m, hi = spec.length_max_m;
                        cfg.length_m = lo;
                        if (feasible(slot, cfg)) {
                            hi = lo;
                        } else {
                            while (hi - lo > opts_.length_grid_m + 1e-12) {
                                const double mid = snap(0.5 * (lo + hi), spec);
                                if (mid <= lo || mid >= hi) break;
                                cfg.length_m = mid;
                                (feasible(slot, cfg) ? hi : lo) = mid;
                            }
                        }
                        cfg.length_m = snap(hi, spec);
                        const double cost = silencer_cost(n, cfg.length_m, spec);
                        if (cost < best_cost) {
                            best_cost = cost;
                            best_cfg = cfg;
                            best_slot = slot;
                        }
                    }
                }
            }
            if (!std::isfinite(best_cost)) {
                stuck.push_back(r);
                continue;
            }
            for (int slot : options) {
                const SilencerState target =
                    (slot == best_slot) ? best_cfg : SilencerState{};
                if (d.silencers[slot].on != target.on ||
                    d.silencers[slot].splitters != target.splitters ||
                    std::abs(d.silencers[slot].length_m - target.length_m) > 1e-12) {
                    d.silencers[slot] = target;
                    changed = true;
                }
            }
        }
        if (!changed) return true;
    }
    return true;
}

inline double Search::local_room_level(const DesignState& d, std::size_t room_idx,
                                       int scenario, int override_slot,
                                       const SilencerState& override_cfg, double duty,
                                       const std::vector<OctaveSpectrum>& levels) const {
    const Network& net = *inst_.net;
    const RoomInfo& room = inst_.rooms[room_idx];

    // requirement including the overridden branch silencer
    double req = eval_.base_requirement(static_cast<int>(room_idx), scenario);
    for (int slot : room.silencers) {
        const SilencerState& st =
            (slot == override_slot) ? override_cfg : d.silencers[slot];
        if (!st.on) continue;
        const SilencerSpec& spec = inst_.sil_spec(slot);
        const double q = net.edges[inst_.silencer_edges[slot]].flow_m3s[scenario];
        const SilencerGeometry g = silencer_geometry(spec, st.splitters, q);
        req += silencer_pressure_loss(g.velocity_ms, g.gap_m, st.length_m, spec);
    }
    const double slack = duty - req;
    if (slack < -kPressureSlackTol) return kInf;  // duty no longer covers this room

    const std::size_t start = room.suffix_start;
    if (start >= room.path.size()) return room_level_dba(levels[room.node], *net.nodes[room.node].room,
                                                         net.nodes[room.node].background
                                                             ? &*net.nodes[room.node].background
                                                             : nullptr);
    OctaveSpectrum level = levels[net.node_index(net.edges[room.path[start]].from)];
    for (std::size_t i = start; i < room.path.size(); ++i) {
        const int e = room.path[i];
        const Edge& edge = net.edges[e];
        switch (edge.slot) {
            case SlotKind::FixedChain: {
                const CombinedFixed c = combine_fixed_chain(edge.fixed_chain);
                level = component_transfer(level, c.damping, c.flow_noise);
                break;
            }
            case SlotKind::Silencer: {
                const int slot = inst_.silencer_slot_of_edge(e);
                const SilencerState& st =
                    (slot == override_slot) ? override_cfg : d.silencers[slot];
                if (!st.on) break;
                const SilencerSpec& spec = inst_.sil_spec(slot);
                const SilencerGeometry g =
                    silencer_geometry(spec, st.splitters, edge.flow_m3s[scenario]);
                level = component_transfer(level,
                                           silencer_damping(st.splitters, st.length_m, spec),
                                           silencer_flow_noise(g.velocity_ms, spec));
                break;
            }
            case SlotKind::Vfc: {
                if (e == room.vfc_edge && slack > kPressureSlackTol) {
                    const VfcSpec& spec = inst_.prob->catalog->vfc(edge.vfc->spec_id);
                    if (slack > spec.pressure_max_pa + kPressureSlackTol) return kInf;
                    level = component_transfer(
                        level, OctaveSpectrum::flat(0.0),
                        vfc_flow_noise(edge.flow_m3s[scenario], slack, spec));
                }
                break;
            }
            default: break;
        }
    }
    const Node& node = net.nodes[room.node];
    const OctaveSpectrum* bg = node.background ? &*node.background : nullptr;
    return room_level_dba(level, *node.room, bg);
}

inline void Search::shrink_trunk_lengths(const Combo& combo, DesignState& d,
                                         const std::vector<int>& trunk_slots,
                                         const std::vector<std::vector<int>>& branch_slots) {
    (void)combo;
    for (int slot : trunk_slots) {
        if (!d.silencers[slot].on) continue;
        const SilencerSpec& spec = inst_.sil_spec(slot);
        auto ok = [&](double l) {
            DesignState trial = d;
            trial.silencers[slot].length_m = l;
            std::vector<std::size_t> stuck;
            if (!branch_fixed_point(Combo{}, trial, branch_slots, stuck) || !stuck.empty())
                return false;
            const EvalOutcome out = eval_.evaluate(trial, /*coupled=*/true);
            if (!out.pressure_ok || !out.noise_ok) return false;
            d = trial;  // keep the re-solved branches
            return true;
        };
        double lo = spec.length_min_m, hi = d.silencers[slot].length_m;
        if (hi <= lo + 1e-12) continue;
        if (ok(lo)) continue;
        while (hi - lo > std::max(opts_.length_grid_m, 0.01) + 1e-12) {
            const double mid = snap(0.5 * (lo + hi), spec);
            if (mid <= lo || mid >= hi) break;
            if (!ok(mid)) lo = mid; else hi = mid;
        }
    }
}

}  // namespace detail

// --------------------------------------------------------------------------
// Public entry points

inline Solution solve_airflow(const Problem& prob, const SolverOptions& opts = {}) {
    detail::Search search(prob, opts);
    return search.solve_airflow();
}

inline Solution solve_coupled(const Problem& prob, const SolverOptions& opts = {},
                              std::optional<double> warm_lower_bound = std::nullopt) {
    detail::Search search(prob, opts);
    return search.solve_coupled(warm_lower_bound);
}

/// Two-step mode: airflow-only purchase decisions are fixed, then silencers
/// and all operating decisions are optimised under the noise limits.
inline Solution solve_sequential(const Problem& prob, const SolverOptions& opts = {}) {
    const Solution airflow = solve_airflow(prob, opts);
    if (airflow.status != SolveStatus::Optimal) {
        Solution out = airflow;
        out.note = "airflow step infeasible: " + airflow.note;
        return out;
    }
    detail::Search search(prob, opts);
    search.pin_topology(airflow);
    Solution out = search.solve_coupled(std::nullopt);
    if (out.status == SolveStatus::Infeasible)
        out.note = "infeasible under the pinned airflow topology: " + out.note;
    return out;
}

/// Noise-limit sweep with lower-bound chaining: each solution's objective is
/// a valid bound for the next, strictly tighter, limit. Aborts at the first
/// infeasible limit.
inline ParetoFront pareto_sweep(const Problem& prob, const SolverOptions& opts,
                                std::vector<double> limits_desc) {
    for (std::size_t i = 1; i < limits_desc.size(); ++i)
        if (limits_desc[i] >= limits_desc[i - 1])
            throw std::invalid_argument("pareto_sweep: limits must be strictly decreasing");

    ParetoFront front;
    Solution airflow = solve_airflow(prob, opts);
    if (airflow.status != SolveStatus::Optimal) return front;

    ParetoPoint p0;
    p0.requested_limit_dba = kInf;
    p0.realized_limit_dba = airflow.max_room_dba;
    p0.solution = airflow;
    front.points.push_back(std::move(p0));
    front.min_feasible_limit_dba = airflow.max_room_dba;

    double chained_bound = airflow.objective_eur;
    for (double limit : limits_desc) {
        Problem sub = prob;
        sub.noise_limit_override = limit;
        Solution sol = solve_coupled(sub, opts, chained_bound);
        if (sol.status == SolveStatus::Infeasible) {
            front.first_infeasible_limit_dba = limit;
            break;
        }
        ParetoPoint pt;
        pt.requested_limit_dba = limit;
        pt.realized_limit_dba = sol.max_room_dba;  // adopted when below the request
        pt.lower_bound_used_eur = chained_bound;
        chained_bound = sol.objective_eur;
        front.min_feasible_limit_dba = pt.realized_limit_dba;
        pt.solution = std::move(sol);
        front.points.push_back(std::move(pt));
    }
    return front;
}

}  // namespace ventopt
