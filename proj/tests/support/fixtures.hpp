#pragma once

// Synthetic sample components and networks shared by the test suites and the
// bundled data files. Coefficients are plausible for desk-scale supply-air
// systems but are generated, not manufacturer data.

#include <array>
#include <cmath>
#include <string>
#include <vector>

#include "ventopt/components.hpp"
#include "ventopt/network.hpp"

namespace vtest {

using namespace ventopt;

/// Fill pressure/power bounds of every size from a box scan of the curves.
inline void finalize_bounds(FanProductLine& line) {
    for (auto& s : line.sizes) {
        double dp_min = 1e300, dp_max = -1e300, po_min = 1e300, po_max = -1e300;
        for (int i = 0; i <= 40; ++i) {
            const double q = s.flow_min_m3s +
                             (s.flow_max_m3s - s.flow_min_m3s) * i / 40.0;
            for (int j = 0; j <= 40; ++j) {
                const double n = s.speed_min + (1.0 - s.speed_min) * j / 40.0;
                const double dp = fan_pressure(q, n, s.diameter_m, line);
                const double po = fan_power(q, n, s.diameter_m, line);
                dp_min = std::min(dp_min, dp);
                dp_max = std::max(dp_max, dp);
                po_min = std::min(po_min, po);
                po_max = std::max(po_max, po);
            }
        }
        s.pressure_min_pa = std::max(0.0, dp_min);
        s.pressure_max_pa = dp_max;
        s.power_min_w = std::max(0.0, po_min);
        s.power_max_w = po_max;
    }
}

/// Premium line: efficient and comparatively quiet.
inline FanProductLine line_ax() {
    FanProductLine l;
    l.id = "AX";
    l.pressure_coeff = {-3.6, 12.0, 4800.0};
    l.power_coeff = {-4.8, 16.0, 6400.0, 3000.0, 50.0};
    l.cost_coeff = {3400.0, 650.0, 500.0, 120.0};
    const std::array<double, kBandCount> base = {8.0, 10.0, 9.0, 6.0, 3.0, -1.0, -5.0, -11.0};
    for (std::size_t f = 0; f < kBandCount; ++f) l.noise_coeff[f] = {4.0, -1.5, -6.0, base[f]};
    for (double d : {0.40, 0.50, 0.63}) {
        FanBounds b;
        b.diameter_m = d;
        b.flow_max_m3s = 28.0 * d * d * d;
        b.flow_min_m3s = 0.15 * b.flow_max_m3s;
        b.speed_min = 0.3;
        l.sizes.push_back(b);
    }
    finalize_bounds(l);
    return l;
}

/// Budget line: cheaper, louder, less efficient.
inline FanProductLine line_br() {
    FanProductLine l;
    l.id = "BR";
    l.pressure_coeff = {-3.0, 8.0, 4200.0};
    l.power_coeff = {-4.0, 14.0, 6100.0, 3600.0, 80.0};
    l.cost_coeff = {2400.0, 420.0, 500.0, 120.0};
    const std::array<double, kBandCount> base = {12.0, 14.0, 13.0, 10.0, 7.0, 3.0, -1.0, -7.0};
    for (std::size_t f = 0; f < kBandCount; ++f) l.noise_coeff[f] = {5.0, -1.0, -5.0, base[f]};
    for (double d : {0.40, 0.50, 0.63}) {
        FanBounds b;
        b.diameter_m = d;
        b.flow_max_m3s = 28.0 * d * d * d;
        b.flow_min_m3s = 0.15 * b.flow_max_m3s;
        b.speed_min = 0.3;
        l.sizes.push_back(b);
    }
    finalize_bounds(l);
    return l;
}

inline SilencerSpec sil_spl60() {
    SilencerSpec s;
    s.id = "SPL-60";
    s.height_m = 0.6;
    s.width_m = 0.6;
    s.splitter_width_m = 0.1;
    s.splitter_min = 2;
    s.splitter_max = 4;
    s.length_min_m = 0.5;
    s.length_max_m = 2.0;
    s.pressure_coeff = {0.55, 0.04, 0.07};
    s.cost_coeff = {140.0, 900.0, 320.0, 180.0};
    const std::array<double, kBandCount> per_m = {3.0, 6.0, 12.0, 22.0, 28.0, 25.0, 18.0, 10.0};
    const std::array<double, kBandCount> per_n = {0.3, 0.5, 1.0, 1.5, 1.5, 1.2, 0.8, 0.4};
    const std::array<double, kBandCount> ln_mix = {0.2, 0.4, 0.8, 1.5, 2.0, 1.8, 1.2, 0.6};
    const std::array<double, kBandCount> base = {0.3, 0.5, 1.0, 1.5, 1.5, 1.2, 0.8, 0.5};
    for (std::size_t f = 0; f < kBandCount; ++f) {
        s.damping_coeff[f] = {0.05, 0.3, ln_mix[f], 1.0, per_n[f], per_m[f], 0.5, base[f]};
        s.noise_coeff[f] = {0.08, 0.9, 4.0, 1.0,
                            std::array<double, kBandCount>{16.0, 18.0, 20.0, 19.0, 17.0,
                                                           14.0, 10.0, 6.0}[f]};
    }
    s.pressure_max_pa = 400.0;
    return s;
}

inline SilencerSpec sil_spl40() {
    SilencerSpec s;
    s.id = "SPL-40";
    s.height_m = 0.4;
    s.width_m = 0.4;
    s.splitter_width_m = 0.08;
    s.splitter_min = 2;
    s.splitter_max = 4;
    s.length_min_m = 0.3;
    s.length_max_m = 1.5;
    s.pressure_coeff = {0.6, 0.03, 0.05};
    s.cost_coeff = {90.0, 700.0, 260.0, 120.0};
    const std::array<double, kBandCount> per_m = {2.0, 5.0, 10.0, 18.0, 22.0, 20.0, 14.0, 8.0};
    const std::array<double, kBandCount> per_n = {0.2, 0.4, 0.8, 1.2, 1.2, 1.0, 0.7, 0.3};
    const std::array<double, kBandCount> ln_mix = {0.1, 0.3, 0.6, 1.2, 1.6, 1.4, 1.0, 0.5};
    const std::array<double, kBandCount> base = {0.2, 0.4, 0.8, 1.2, 1.2, 1.0, 0.6, 0.4};
    for (std::size_t f = 0; f < kBandCount; ++f) {
        s.damping_coeff[f] = {0.04, 0.25, ln_mix[f], 0.8, per_n[f], per_m[f], 0.4, base[f]};
        s.noise_coeff[f] = {0.07, 0.8, 3.5, 0.9,
                            std::array<double, kBandCount>{14.0, 16.0, 18.0, 17.0, 15.0,
                                                           12.0, 8.0, 4.0}[f]};
    }
    s.pressure_max_pa = 350.0;
    return s;
}

inline VfcSpec vfc_vr40() {
    VfcSpec v;
    v.id = "VR-40";
    v.height_m = 0.4;
    v.width_m = 0.4;
    v.cost_coeff = {520.0, 130.0, 200.0};
    const std::array<double, kBandCount> dp_gain = {0.05, 0.07, 0.10, 0.12, 0.12, 0.10,
                                                    0.08, 0.05};
    const std::array<double, kBandCount> base = {16.0, 19.0, 21.0, 20.0, 18.0, 15.0, 11.0, 6.0};
    for (std::size_t f = 0; f < kBandCount; ++f) {
        v.noise_coeff[f] = {dp_gain[f], 0.3, 1.0, 10.0, 5.0, base[f]};
    }
    v.pressure_min_pa = 0.0;
    v.pressure_max_pa = 300.0;
    return v;
}

inline ComponentCatalog sample_catalog() {
    ComponentCatalog c;
    c.fan_lines = {line_ax(), line_br()};
    c.vfcs = {vfc_vr40()};
    c.silencers = {sil_spl60(), sil_spl40()};
    return c;
}

// ---------------------------------------------------------------------------
// Fixed-chain building blocks

inline FixedElement duct_run(const std::string& name, double length_m) {
    FixedElement e;
    e.name = name;
    // internally lined rectangular duct
    const std::array<double, kBandCount> per_m = {1.0, 0.9, 0.8, 0.7, 0.6, 0.5, 0.45, 0.4};
    const std::array<double, kBandCount> noise = {16.0, 15.0, 13.0, 11.0, 9.0, 7.0, 5.0, 2.0};
    for (std::size_t f = 0; f < kBandCount; ++f) {
        e.damping[f] = per_m[f] * length_m;
        e.flow_noise[f] = noise[f];
    }
    return e;
}

inline FixedElement bend(const std::string& name) {
    FixedElement e;
    e.name = name;
    e.damping = OctaveSpectrum({1.0, 2.0, 3.0, 3.0, 2.0, 1.5, 1.0, 1.0});
    e.flow_noise = OctaveSpectrum({20.0, 19.0, 17.0, 15.0, 13.0, 10.0, 7.0, 4.0});
    return e;
}

inline FixedElement outlet(const std::string& name, double noise_offset_db = 0.0) {
    FixedElement e;
    e.name = name;
    e.damping = OctaveSpectrum({9.0, 6.0, 3.0, 1.0, 0.5, 0.0, 0.0, 0.0});  // end reflection
    const std::array<double, kBandCount> noise = {26.0, 25.0, 24.0, 22.0, 20.0, 17.0, 13.0, 8.0};
    for (std::size_t f = 0; f < kBandCount; ++f) e.flow_noise[f] = noise[f] + noise_offset_db;
    return e;
}

// ---------------------------------------------------------------------------
// Networks

/// Minimal valid chain: source -> junction -> room, no component slots.
inline Network chain_network() {
    Network net;
    net.name = "chain";
    net.scenarios = {{"s1", 1.0}};
    net.nodes.push_back({"S", NodeKind::Source, {0.0}, {}, {}, {}, {}});
    net.nodes.push_back({"J", NodeKind::Junction, {}, {}, {}, {}, {}});
    Node room;
    room.id = "R";
    room.kind = NodeKind::Room;
    room.boundary_pressure_pa = {30.0};
    room.noise_limit_dba = 40.0;
    room.room = RoomAcoustics{2.0, 1.2, 15.0, 1, {}};
    net.nodes.push_back(room);

    Edge e1;
    e1.id = "e1";
    e1.from = "S";
    e1.to = "J";
    e1.flow_m3s = {1.0};
    e1.pressure_loss_pa = {0.0};
    net.edges.push_back(e1);
    Edge e2;
    e2.id = "e2";
    e2.from = "J";
    e2.to = "R";
    e2.flow_m3s = {1.0};
    e2.pressure_loss_pa = {0.0};
    net.edges.push_back(e2);
    return net;
}

/// Small two-scenario fixture: fan station (two candidate fans), one fixed
/// chain, one silencer slot and one VFC in series before a single room.
inline Network mini_network() {
    Network net;
    net.name = "mini";
    net.scenarios = {{"s1", 0.6}, {"s2", 0.4}};

    net.nodes.push_back({"S", NodeKind::Source, {0.0, 0.0}, {}, {}, {}, {}});
    net.nodes.push_back({"a", NodeKind::Junction, {}, {}, {}, {}, {}});
    net.nodes.push_back({"b", NodeKind::Junction, {}, {}, {}, {}, {}});
    net.nodes.push_back({"c", NodeKind::Junction, {}, {}, {}, {}, {}});
    Node room;
    room.id = "R";
    room.kind = NodeKind::Room;
    room.boundary_pressure_pa = {30.0, 30.0};
    room.noise_limit_dba = 42.0;
    room.room = RoomAcoustics{2.0, 1.2, 15.0, 1, {}};
    net.nodes.push_back(room);

    Edge fs;
    fs.id = "e_fs";
    fs.from = "S";
    fs.to = "a";
    fs.slot = SlotKind::FanStation;
    fs.flow_m3s = {1.5, 0.9};
    fs.pressure_loss_pa = {0.0, 0.0};
    fs.fan_station = FanStationSlot{2, false, {{"AX", 0.5, 1}, {"BR", 0.5, 1}}};
    net.edges.push_back(fs);

    Edge fix;
    fix.id = "e_fix";
    fix.from = "a";
    fix.to = "b";
    fix.slot = SlotKind::FixedChain;
    fix.flow_m3s = {1.5, 0.9};
    fix.pressure_loss_pa = {180.0, 70.0};
    fix.fixed_chain = {duct_run("main duct", 6.0), bend("bend"), outlet("grille")};
    net.edges.push_back(fix);

    Edge sil;
    sil.id = "e_sil";
    sil.from = "b";
    sil.to = "c";
    sil.slot = SlotKind::Silencer;
    sil.flow_m3s = {1.5, 0.9};
    sil.pressure_loss_pa = {0.0, 0.0};
    sil.silencer = SilencerSlot{"SPL-60"};
    net.edges.push_back(sil);

    Edge vfc;
    vfc.id = "e_vfc";
    vfc.from = "c";
    vfc.to = "R";
    vfc.slot = SlotKind::Vfc;
    vfc.flow_m3s = {1.5, 0.9};
    vfc.pressure_loss_pa = {0.0, 0.0};
    vfc.vfc = VfcSlot{"VR-40", false, false};
    net.edges.push_back(vfc);
    return net;
}

struct CaseRoom {
    std::string id;
    std::string floor;    // feeding junction
    double flow_full;     // m³/s at full load
    double branch_loss;   // Pa at full load
    double outlet_loss;   // Pa at full load
    double limit_dba;
    double absorption;    // m²
    int outlets;
    bool radiation;
};

/// Case-study-sized synthetic network: 7 rooms, 38 components of which 19 are
/// fixed chains (1 fan station, 11 silencer slots, 7 VFCs).
inline Network case_network() {
    Network net;
    net.name = "case";
    net.scenarios = {{"s1", 0.5}, {"s2", 5.0 / 14.0}, {"s3", 1.0 / 7.0}};
    const std::vector<double> load_scale = {1.0, 0.72, 0.45};

    const std::vector<CaseRoom> rooms = {
        {"P1", "F1", 0.55, 45.0, 20.0, 42.0, 25.0, 2, false},
        {"P2", "F1", 0.50, 55.0, 18.0, 42.0, 25.0, 2, false},
        {"P3", "F1", 0.45, 65.0, 22.0, 42.0, 22.0, 2, true},
        {"H1", "F1", 0.25, 18.0, 12.0, 40.0, 12.0, 1, false},
        {"P4", "F2", 0.60, 50.0, 20.0, 42.0, 28.0, 2, false},
        {"P5", "F2", 0.50, 60.0, 18.0, 42.0, 25.0, 2, false},
        {"H2", "F2", 0.20, 15.0, 12.0, 40.0, 12.0, 1, true},
    };

    auto junction = [&](const std::string& id) {
        net.nodes.push_back({id, NodeKind::Junction, {}, {}, {}, {}, {}});
    };
    net.nodes.push_back({"S", NodeKind::Source, {0.0, 0.0, 0.0}, {}, {}, {}, {}});
    for (const char* id : {"s1i", "n1", "n2", "n3", "n4", "n5", "F1", "n6", "n7", "F2"})
        junction(id);

    for (const auto& r : rooms) {
        junction(r.id + "_a");
        junction(r.id + "_b");
        junction(r.id + "_c");
        Node room;
        room.id = r.id;
        room.kind = NodeKind::Room;
        for (std::size_t s = 0; s < 3; ++s)
            room.boundary_pressure_pa.push_back(r.id[0] == 'H' ? 25.0 : 30.0);
        room.noise_limit_dba = r.limit_dba;
        RoomAcoustics ra{2.0, 1.5, r.absorption, r.outlets, {}};
        if (r.radiation) ra.radiation.push_back({-18.0, 8.0, 0.12, r.absorption, 3.0});
        room.room = ra;
        if (r.id[0] == 'P')
            room.background = OctaveSpectrum({25.0, 24.0, 23.0, 22.0, 20.0, 18.0, 15.0, 10.0});
        net.nodes.push_back(room);
    }

    // Per-scenario flow through an edge = sum of downstream room demands.
    auto flows_for = [&](const std::vector<std::string>& served) {
        std::vector<double> out;
        for (std::size_t s = 0; s < 3; ++s) {
            double q = 0.0;
            for (const auto& r : rooms) {
                for (const auto& id : served)
                    if (r.id == id) q += r.flow_full * load_scale[s];
            }
            out.push_back(q);
        }
        return out;
    };
    std::vector<std::string> all_ids, f1_ids, f2_ids;
    for (const auto& r : rooms) {
        all_ids.push_back(r.id);
        (r.floor == "F1" ? f1_ids : f2_ids).push_back(r.id);
    }

    auto add_edge = [&](const std::string& id, const std::string& from, const std::string& to,
                        SlotKind slot, const std::vector<double>& flows,
                        double loss_full) -> Edge& {
        Edge e;
        e.id = id;
        e.from = from;
        e.to = to;
        e.slot = slot;
        e.flow_m3s = flows;
        // quadratic loss law anchored at the full-load operating point
        if (loss_full > 0.0)
            e.loss_coeff_pa_s2_m6 = loss_full / (flows[0] * flows[0]);
        net.edges.push_back(e);
        return net.edges.back();
    };

    add_edge("e_sil_in", "S", "s1i", SlotKind::Silencer, flows_for(all_ids), 0.0)
        .silencer = SilencerSlot{"SPL-60"};
    add_edge("e_fs", "s1i", "n1", SlotKind::FanStation, flows_for(all_ids), 0.0)
        .fan_station = FanStationSlot{
            3, false, {{"AX", 0.5, 2}, {"AX", 0.63, 2}, {"BR", 0.5, 2}, {"BR", 0.63, 2}}};
    add_edge("e_ahu", "n1", "n2", SlotKind::FixedChain, flows_for(all_ids), 40.0)
        .fixed_chain = {duct_run("AHU discharge", 3.0), bend("AHU bend")};
    add_edge("e_sil0", "n2", "n3", SlotKind::Silencer, flows_for(all_ids), 0.0)
        .silencer = SilencerSlot{"SPL-60"};
    add_edge("e_main", "n3", "n4", SlotKind::FixedChain, flows_for(all_ids), 60.0)
        .fixed_chain = {duct_run("main duct", 10.0), bend("main bend")};
    add_edge("e_sil1", "n4", "n5", SlotKind::Silencer, flows_for(f1_ids), 0.0)
        .silencer = SilencerSlot{"SPL-60"};
    add_edge("e_f1", "n5", "F1", SlotKind::FixedChain, flows_for(f1_ids), 45.0)
        .fixed_chain = {duct_run("floor 1 duct", 8.0)};
    add_edge("e_riser", "n4", "n6", SlotKind::FixedChain, flows_for(f2_ids), 30.0)
        .fixed_chain = {duct_run("riser", 5.0), bend("riser bend")};
    add_edge("e_sil2", "n6", "n7", SlotKind::Silencer, flows_for(f2_ids), 0.0)
        .silencer = SilencerSlot{"SPL-60"};
    add_edge("e_f2", "n7", "F2", SlotKind::FixedChain, flows_for(f2_ids), 40.0)
        .fixed_chain = {duct_run("floor 2 duct", 7.0)};

    for (const auto& r : rooms) {
        const auto flows = flows_for({r.id});
        add_edge("e_" + r.id + "_duct", r.floor, r.id + "_a", SlotKind::FixedChain, flows,
                 r.branch_loss)
            .fixed_chain = {duct_run(r.id + " branch", 4.0), bend(r.id + " bend")};
        add_edge("e_" + r.id + "_vfc", r.id + "_a", r.id + "_b", SlotKind::Vfc, flows, 0.0)
            .vfc = VfcSlot{"VR-40", true, false};
        add_edge("e_" + r.id + "_sil", r.id + "_b", r.id + "_c", SlotKind::Silencer, flows, 0.0)
            .silencer = SilencerSlot{"SPL-40"};
        add_edge("e_" + r.id + "_out", r.id + "_c", r.id, SlotKind::FixedChain, flows,
                 r.outlet_loss)
            .fixed_chain = {outlet(r.id + " outlet")};
    }
    return net;
}

}  // namespace vtest
