#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "ventopt/acoustics.hpp"
#include "ventopt/components.hpp"
#include "ventopt/spectrum.hpp"

namespace ventopt {

inline constexpr double kContinuityTolerance = 1e-9;  // m³/s

enum class NodeKind { Source, Room, Junction };
enum class SlotKind { None, FanStation, Vfc, Silencer, FixedChain };

inline const char* to_string(NodeKind k) {
    switch (k) {
        case NodeKind::Source: return "source";
        case NodeKind::Room: return "room";
        case NodeKind::Junction: return "junction";
    }
    return "?";
}

inline const char* to_string(SlotKind k) {
    switch (k) {
        case SlotKind::None: return "none";
        case SlotKind::FanStation: return "fan_station";
        case SlotKind::Vfc: return "vfc";
        case SlotKind::Silencer: return "silencer";
        case SlotKind::FixedChain: return "fixed_chain";
    }
    return "?";
}

struct Node {
    std::string id;
    NodeKind kind = NodeKind::Junction;
    // Predefined pressure per scenario; required at the source and at rooms.
    std::vector<double> boundary_pressure_pa;
    std::optional<double> noise_limit_dba;     // rooms only
    std::optional<RoomAcoustics> room;         // rooms only
    std::optional<OctaveSpectrum> background;  // a-priori pressure levels in the room
    std::optional<OctaveSpectrum> source_spectrum;  // sound power entering at the source
};

/// Candidate fan admissible at a station slot.
struct FanCandidate {
    std::string line_id;
    double diameter_m = 0.5;
    int max_count = 1;
};

struct FanStationSlot {
    int max_fans = 3;  // N_max
    bool clad = false;
    std::vector<FanCandidate> candidates;
};

struct VfcSlot {
    std::string spec_id;
    bool clad = false;
    bool force_purchase = false;
};

struct SilencerSlot {
    std::string spec_id;
};

struct Edge {
    std::string id;
    std::string from;
    std::string to;
    SlotKind slot = SlotKind::None;
    std::vector<double> flow_m3s;           // per scenario, parameter
    std::vector<double> pressure_loss_pa;   // per scenario, precomputed duct loss
    double loss_coeff_pa_s2_m6 = 0.0;       // optional ζ for deriving losses from flow

    std::optional<FanStationSlot> fan_station;
    std::optional<VfcSlot> vfc;
    std::optional<SilencerSlot> silencer;
    std::vector<FixedElement> fixed_chain;
};

struct Scenario {
    std::string id;
    double weight = 1.0;  // relative time share T_s
};

struct ValidationReport {
    std::vector<std::string> errors;
    bool valid() const { return errors.empty(); }
};

struct ContinuityResidual {
    std::string node_id;
    double residual_m3s = 0.0;
};

struct ContinuityReport {
    std::vector<ContinuityResidual> residuals;  // junctions only
    bool pass = true;
};

/// Tree-shaped duct network with per-scenario flows as parameters.
class Network {
  public:
    std::string name;
    std::vector<Node> nodes;
    std::vector<Edge> edges;
    std::vector<Scenario> scenarios;

    int node_index(const std::string& id) const {
        for (std::size_t i = 0; i < nodes.size(); ++i)
            if (nodes[i].id == id) return static_cast<int>(i);
        throw std::out_of_range("unknown node '" + id + "'");
    }
    int edge_index(const std::string& id) const {
        for (std::size_t i = 0; i < edges.size(); ++i)
            if (edges[i].id == id) return static_cast<int>(i);
        throw std::out_of_range("unknown edge '" + id + "'");
    }

    int source_index() const {
        for (std::size_t i = 0; i < nodes.size(); ++i)
            if (nodes[i].kind == NodeKind::Source) return static_cast<int>(i);
        throw std::runtime_error("network has no source node");
    }

    std::vector<int> room_indices() const {
        std::vector<int> out;
        for (std::size_t i = 0; i < nodes.size(); ++i)
            if (nodes[i].kind == NodeKind::Room) out.push_back(static_cast<int>(i));
        return out;
    }

    std::vector<int> outgoing_edges(int node) const {
        std::vector<int> out;
        for (std::size_t e = 0; e < edges.size(); ++e)
            if (edges[e].from == nodes[node].id) out.push_back(static_cast<int>(e));
        return out;
    }

    std::vector<int> incoming_edges(int node) const {
        std::vector<int> out;
        for (std::size_t e = 0; e < edges.size(); ++e)
            if (edges[e].to == nodes[node].id) out.push_back(static_cast<int>(e));
        return out;
    }

    int scenario_index(const std::string& id) const {
        for (std::size_t i = 0; i < scenarios.size(); ++i)
            if (scenarios[i].id == id) return static_cast<int>(i);
        throw std::out_of_range("unknown scenario '" + id + "'");
    }

    double edge_loss_pa(int edge, int scenario) const {
        const Edge& e = edges[edge];
        if (scenario < static_cast<int>(e.pressure_loss_pa.size()))
            return e.pressure_loss_pa[scenario];
        const double q = e.flow_m3s[scenario];
        return e.loss_coeff_pa_s2_m6 * q * q;
    }

    /// Unique edge path from the source to a room, in flow order.
    std::vector<int> path_to_room(const std::string& room_id) const {
        const int target = node_index(room_id);
        if (nodes[target].kind != NodeKind::Room)
            throw std::invalid_argument("node '" + room_id + "' is not a room");
        std::vector<int> path;
        int current = target;
        const int source = source_index();
        while (current != source) {
            const auto in = incoming_edges(current);
            if (in.size() != 1)
                throw std::runtime_error("node '" + nodes[current].id +
                                         "' does not have exactly one incoming edge");
            path.push_back(in[0]);
            current = node_index(edges[in[0]].from);
        }
        std::reverse(path.begin(), path.end());
        return path;
    }

    /// Rooms reachable through the subtree below an edge.
    std::vector<int> rooms_downstream(int edge) const {
        std::vector<int> out;
        std::vector<int> stack{node_index(edges[edge].to)};
        while (!stack.empty()) {
            const int n = stack.back();
            stack.pop_back();
            if (nodes[n].kind == NodeKind::Room) out.push_back(n);
            for (int e : outgoing_edges(n)) stack.push_back(node_index(edges[e].to));
        }
        std::sort(out.begin(), out.end());
        return out;
    }
};

/// Structural and data completeness checks; coupled mode additionally requires
/// room noise limits and receiver parameters.
inline ValidationReport validate_network(const Network& net, bool coupled = true) {
    ValidationReport rep;
    auto fail = [&rep](const std::string& msg) { rep.errors.push_back(msg); };

    if (net.scenarios.empty()) fail("no scenarios defined");
    double weight_sum = 0.0;
    for (const auto& s : net.scenarios) {
        if (s.weight <= 0.0) fail("scenario '" + s.id + "' has nonpositive weight");
        weight_sum += s.weight;
    }
    if (!net.scenarios.empty() && std::abs(weight_sum - 1.0) > 1e-9)
        fail("scenario weights must sum to 1");

    int sources = 0;
    for (const auto& n : net.nodes) {
        if (n.kind == NodeKind::Source) ++sources;
    }
    if (sources != 1) fail("network must have exactly one source node");

    std::set<std::string> ids;
    for (const auto& n : net.nodes)
        if (!ids.insert(n.id).second) fail("duplicate node id '" + n.id + "'");

    for (const auto& e : net.edges) {
        bool endpoints_ok = true;
        if (!ids.count(e.from)) { fail("edge '" + e.id + "' references unknown node '" + e.from + "'"); endpoints_ok = false; }
        if (!ids.count(e.to)) { fail("edge '" + e.id + "' references unknown node '" + e.to + "'"); endpoints_ok = false; }
        if (!endpoints_ok) continue;
        if (e.flow_m3s.size() != net.scenarios.size())
            fail("edge '" + e.id + "' is missing scenario flows");
        for (double q : e.flow_m3s)
            if (q < 0.0) fail("edge '" + e.id + "' has a negative flow");
        if (!e.pressure_loss_pa.empty() && e.pressure_loss_pa.size() != net.scenarios.size())
            fail("edge '" + e.id + "' has an incomplete pressure loss list");
        const bool payload_matches =
            (e.slot == SlotKind::FanStation) == e.fan_station.has_value() &&
            (e.slot == SlotKind::Vfc) == e.vfc.has_value() &&
            (e.slot == SlotKind::Silencer) == e.silencer.has_value() &&
            (e.slot == SlotKind::FixedChain) == !e.fixed_chain.empty();
        if (!payload_matches) fail("edge '" + e.id + "' slot data does not match its slot kind");
    }
    if (!rep.valid()) return rep;

    if (net.edges.size() + 1 != net.nodes.size())
        fail("not a tree: edge count must be node count - 1");
    for (const auto& n : net.nodes) {
        const int idx = net.node_index(n.id);
        const auto in = net.incoming_edges(idx);
        if (n.kind == NodeKind::Source) {
            if (!in.empty()) fail("source node has incoming edges");
        } else if (in.size() != 1) {
            fail("node '" + n.id + "' must have exactly one incoming edge (found " +
                 std::to_string(in.size()) + ")");
        }
        if (n.kind == NodeKind::Room && !net.outgoing_edges(idx).empty())
            fail("room '" + n.id + "' must be a leaf");
        if (n.kind != NodeKind::Room && net.outgoing_edges(idx).empty())
            fail("node '" + n.id + "' is a dead end without a room");
    }
    if (!rep.valid()) return rep;

    // Reachability from the source; a complete intact tree reaches every node.
    std::set<int> seen{net.source_index()};
    std::vector<int> stack{net.source_index()};
    while (!stack.empty()) {
        const int n = stack.back();
        stack.pop_back();
        for (int e : net.outgoing_edges(n)) {
            const int child = net.node_index(net.edges[e].to);
            if (!seen.insert(child).second) {
                fail("cycle detected at node '" + net.nodes[child].id + "'");
                return rep;
            }
            stack.push_back(child);
        }
    }
    for (const auto& n : net.nodes) {
        if (!seen.count(net.node_index(n.id)))
            fail("node '" + n.id + "' is not reachable from the source");
    }

    for (const auto& n : net.nodes) {
        const bool boundary = n.kind != NodeKind::Junction;
        if (boundary && n.boundary_pressure_pa.size() != net.scenarios.size())
            fail("node '" + n.id + "' is missing boundary pressures");
        if (n.kind == NodeKind::Room) {
            if (coupled && !n.noise_limit_dba)
                fail("room '" + n.id + "' is missing a noise limit");
            if (n.noise_limit_dba && *n.noise_limit_dba <= 0.0)
                fail("room '" + n.id + "' has a nonpositive noise limit");
            if (coupled && !n.room) fail("room '" + n.id + "' is missing receiver data");
        }
    }
    return rep;
}

/// Per-junction flow balance for one scenario. Flows are inputs, so this only
/// guards inconsistent data files.
inline ContinuityReport check_continuity(const Network& net, int scenario) {
    ContinuityReport rep;
    for (std::size_t i = 0; i < net.nodes.size(); ++i) {
        if (net.nodes[i].kind != NodeKind::Junction) continue;
        double balance = 0.0;
        for (int e : net.incoming_edges(static_cast<int>(i)))
            balance += net.edges[e].flow_m3s[scenario];
        for (int e : net.outgoing_edges(static_cast<int>(i)))
            balance -= net.edges[e].flow_m3s[scenario];
        rep.residuals.push_back({net.nodes[i].id, balance});
        if (std::abs(balance) > kContinuityTolerance) rep.pass = false;
    }
    return rep;
}

}  // namespace ventopt
