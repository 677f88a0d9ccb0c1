#pragma once

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "ventopt/acoustics.hpp"
#include "ventopt/network.hpp"
#include "ventopt/spectrum.hpp"

namespace ventopt {

/// Acoustic behaviour of one component edge in one scenario. Inactive
/// (or unpurchased) components pass the spectrum through unchanged.
struct EdgeTransfer {
    bool pass_through = false;
    OctaveSpectrum damping = OctaveSpectrum::flat(0.0);
    OctaveSpectrum flow_noise = OctaveSpectrum::floor();
};

/// Supplies the transfer of fan-station, VFC and silencer edges; fixed chains
/// and plain duct edges are handled by the propagation itself.
using EdgeTransferFn = std::function<EdgeTransfer(int edge_index, int scenario)>;

inline EdgeTransfer edge_transfer(const Network& net, int edge, int scenario,
                                  const EdgeTransferFn& fn) {
    const Edge& e = net.edges[edge];
    switch (e.slot) {
        case SlotKind::None: return EdgeTransfer{true, {}, {}};
        case SlotKind::FixedChain: {
            const CombinedFixed c = combine_fixed_chain(e.fixed_chain);
            return EdgeTransfer{false, c.damping, c.flow_noise};
        }
        default: return fn(edge, scenario);
    }
}

/// Sound power spectra at every node for one scenario.
inline std::vector<OctaveSpectrum> propagate_tree(const Network& net, int scenario,
                                                  const EdgeTransferFn& fn) {
    std::vector<OctaveSpectrum> levels(net.nodes.size(), OctaveSpectrum::floor());
    const int source = net.source_index();
    if (net.nodes[source].source_spectrum) levels[source] = *net.nodes[source].source_spectrum;

    std::vector<int> stack{source};
    while (!stack.empty()) {
        const int n = stack.back();
        stack.pop_back();
        for (int e : net.outgoing_edges(n)) {
            const int child = net.node_index(net.edges[e].to);
            const EdgeTransfer t = edge_transfer(net, e, scenario, fn);
            levels[child] = t.pass_through
                                ? levels[n]
                                : component_transfer(levels[n], t.damping, t.flow_noise);
            stack.push_back(child);
        }
    }
    return levels;
}

/// A-weighted level in one room given the already propagated node spectra.
inline double room_level_dba(const Network& net, int room_node,
                             const std::vector<OctaveSpectrum>& node_levels) {
    const Node& node = net.nodes[room_node];
    if (!node.room) throw std::invalid_argument("room_level_dba: node has no receiver data");
    const OctaveSpectrum* bg = node.background ? &*node.background : nullptr;
    return room_level_dba(node_levels[room_node], *node.room, bg);
}

struct TraceRow {
    std::string edge_id;
    OctaveSpectrum level_in;
    OctaveSpectrum damping;
    OctaveSpectrum flow_noise;
    OctaveSpectrum level_out;
    bool pass_through = false;
};

struct PathTrace {
    std::vector<TraceRow> rows;
    OctaveSpectrum room_spectrum;
    double room_dba = kLevelFloorDb;
};

/// Edge-by-edge spectrum trace from the source to one room.
inline PathTrace propagate_path(const Network& net, const std::string& room_id, int scenario,
                                const EdgeTransferFn& fn) {
    const std::vector<int> path = net.path_to_room(room_id);
    PathTrace trace;
    OctaveSpectrum level = OctaveSpectrum::floor();
    const Node& src = net.nodes[net.source_index()];
    if (src.source_spectrum) level = *src.source_spectrum;
    for (int e : path) {
        TraceRow row;
        row.edge_id = net.edges[e].id;
        row.level_in = level;
        const EdgeTransfer t = edge_transfer(net, e, scenario, fn);
        row.pass_through = t.pass_through;
        if (!t.pass_through) {
            row.damping = t.damping;
            row.flow_noise = t.flow_noise;
            level = component_transfer(level, t.damping, t.flow_noise);
        } else {
            row.damping = OctaveSpectrum::flat(0.0);
            row.flow_noise = OctaveSpectrum::floor();
        }
        row.level_out = level;
        trace.rows.push_back(row);
    }
    trace.room_spectrum = level;

    const int room_node = net.node_index(room_id);
    std::vector<OctaveSpectrum> levels(net.nodes.size(), OctaveSpectrum::floor());
    levels[room_node] = level;
    trace.room_dba = room_level_dba(net, room_node, levels);
    return trace;
}

}  // namespace ventopt
