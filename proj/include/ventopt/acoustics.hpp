#pragma once

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "ventopt/spectrum.hpp"

namespace ventopt {

/// Duct segment radiating into a room through its wall.
struct RadiationSegment {
    double insulation_damping_db = 0.0;  // R_ia
    double wall_area_m2 = 1.0;           // S_k
    double duct_cross_section_m2 = 1.0;  // S_1
    double room_absorption_m2 = 1.0;     // A_2
    double solid_angle_index_db = 0.0;   // K
};

/// Receiver-side data converting duct sound power to in-room pressure levels.
struct RoomAcoustics {
    double directivity = 2.0;         // Q
    double listener_distance_m = 1.0; // r_min, outlet to nearest head
    double absorption_area_m2 = 10.0; // A
    int outlet_count = 1;             // n equal outlets
    std::vector<RadiationSegment> radiation;
};

/// Power-to-pressure conversion for airborne propagation through outlets, dB.
inline double conversion_airborne(const RoomAcoustics& room) {
    if (room.listener_distance_m <= 0.0 || room.absorption_area_m2 <= 0.0 ||
        room.outlet_count < 1)
        throw std::domain_error("conversion_airborne: invalid room parameters");
    const double direct = room.directivity /
                          (4.0 * std::numbers::pi * room.listener_distance_m *
                           room.listener_distance_m);
    const double reverberant = 4.0 * room.outlet_count / room.absorption_area_m2;
    const double arg = direct + reverberant;
    if (arg <= 0.0) throw std::domain_error("conversion_airborne: nonpositive argument");
    return 10.0 * std::log10(arg);
}

/// Power-to-pressure conversion for duct-wall radiation, dB.
inline double conversion_radiation(const RadiationSegment& seg) {
    if (seg.wall_area_m2 <= 0.0 || seg.duct_cross_section_m2 <= 0.0 ||
        seg.room_absorption_m2 <= 0.0)
        throw std::domain_error("conversion_radiation: areas must be positive");
    return seg.insulation_damping_db +
           10.0 * std::log10(seg.wall_area_m2 /
                             (seg.duct_cross_section_m2 * seg.room_absorption_m2)) +
           seg.solid_angle_index_db + 6.0;
}

/// Nine-pole acoustic transfer: damp the input, then add the element's own noise.
inline OctaveSpectrum component_transfer(const OctaveSpectrum& input,
                                         const OctaveSpectrum& damping_db,
                                         const OctaveSpectrum& flow_noise) {
    return level_add(damped(input, damping_db), flow_noise);
}

/// A-weighted room level from the duct spectrum arriving at the room node,
/// combining the airborne path, any radiation paths, and a-priori room noise.
inline double room_level_dba(const OctaveSpectrum& duct_spectrum, const RoomAcoustics& room,
                             const OctaveSpectrum* background_pressure = nullptr) {
    double total = a_weighted_total(duct_spectrum,
                                    OctaveSpectrum::flat(conversion_airborne(room)));
    for (const auto& seg : room.radiation) {
        total = level_add(total, a_weighted_total(duct_spectrum,
                                                  OctaveSpectrum::flat(conversion_radiation(seg))));
    }
    if (background_pressure != nullptr) {
        total = level_add(total, a_weighted_total(*background_pressure));
    }
    return total;
}

}  // namespace ventopt
