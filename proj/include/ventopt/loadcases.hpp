#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

namespace ventopt {

/// Outdoor-air demand data of one room.
struct RoomDemandInput {
    std::string room_id;
    double building_flow_m3s = 0.0;      // room-size driven minimum
    double per_person_flow_m3s = 0.0;
    double planner_flow_m3s = 0.0;       // 0 when not provided
    double max_occupancy = 0.0;
    std::vector<double> occupancy_profile;  // hourly fractions in [0,1]
};

/// Required flow for one operating hour: the maximum of the building demand,
/// the occupancy demand, and the occupancy-scaled planner flow.
inline double required_flow(const RoomDemandInput& input, int hour) {
    if (hour < 0 || hour >= static_cast<int>(input.occupancy_profile.size()))
        throw std::out_of_range("required_flow: hour outside occupancy profile");
    const double occupancy = input.occupancy_profile[hour];
    if (occupancy < 0.0 || occupancy > 1.0)
        throw std::domain_error("required_flow: occupancy fraction outside [0,1]");
    if (input.building_flow_m3s < 0.0 || input.per_person_flow_m3s < 0.0 ||
        input.planner_flow_m3s < 0.0 || input.max_occupancy < 0.0)
        throw std::domain_error("required_flow: demand inputs must be >= 0");
    return std::max({input.building_flow_m3s,
                     occupancy * input.max_occupancy * input.per_person_flow_m3s,
                     occupancy * input.planner_flow_m3s});
}

struct LoadCase {
    std::string id;
    double weight = 0.0;               // share of covered hours
    std::vector<double> flows_m3s;     // one entry per room, room order preserved
};

struct LoadCaseSet {
    std::vector<std::string> room_ids;
    std::vector<LoadCase> cases;
};

namespace detail {

inline double sq_dist(const std::vector<double>& a, const std::vector<double>& b) {
    double d = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        const double diff = a[i] - b[i];
        d += diff * diff;
    }
    return d;
}

struct KMeansResult {
    std::vector<std::vector<double>> centroids;
    std::vector<int> assignment;
    double sse = std::numeric_limits<double>::infinity();
};

inline KMeansResult kmeans_single(const std::vector<std::vector<double>>& points, int k,
                                  std::mt19937_64& rng) {
    const int n = static_cast<int>(points.size());
    const std::size_t dim = points[0].size();

    // Seed centroids from k distinct points.
    std::vector<int> order(n);
    for (int i = 0; i < n; ++i) order[i] = i;
    std::shuffle(order.begin(), order.end(), rng);
    KMeansResult res;
    for (int c = 0; c < k; ++c) res.centroids.push_back(points[order[c]]);
    res.assignment.assign(n, 0);

    for (int iter = 0; iter < 200; ++iter) {
        bool changed = false;
        for (int i = 0; i < n; ++i) {
            int best = 0;
            double best_d = sq_dist(points[i], res.centroids[0]);
            for (int c = 1; c < k; ++c) {
                const double d = sq_dist(points[i], res.centroids[c]);
                if (d < best_d) {
                    best_d = d;
                    best = c;
                }
            }
            if (res.assignment[i] != best) {
                res.assignment[i] = best;
                changed = true;
            }
        }
        std::vector<std::vector<double>> sums(k, std::vector<double>(dim, 0.0));
        std::vector<int> counts(k, 0);
        for (int i = 0; i < n; ++i) {
            ++counts[res.assignment[i]];
            for (std::size_t d = 0; d < dim; ++d) sums[res.assignment[i]][d] += points[i][d];
        }
        for (int c = 0; c < k; ++c) {
            if (counts[c] == 0) {
                // Reseed an empty cluster from the point farthest from its centroid.
                int far = 0;
                double far_d = -1.0;
                for (int i = 0; i < n; ++i) {
                    const double d = sq_dist(points[i], res.centroids[res.assignment[i]]);
                    if (d > far_d) {
                        far_d = d;
                        far = i;
                    }
                }
                res.centroids[c] = points[far];
                res.assignment[far] = c;
                changed = true;
                continue;
            }
            for (std::size_t d = 0; d < dim; ++d) res.centroids[c][d] = sums[c][d] / counts[c];
        }
        if (!changed && iter > 0) break;
    }

    res.sse = 0.0;
    for (int i = 0; i < n; ++i) res.sse += sq_dist(points[i], res.centroids[res.assignment[i]]);
    return res;
}

}  // namespace detail

struct ClusterOptions {
    int restarts = 100;
    bool ceil_to_max = false;  // replace centroids by per-coordinate cluster maxima
};

/// k-means over hourly demand vectors; weights are assigned-hour shares.
/// Deterministic for a fixed seed; ties between restarts resolve to the
/// earliest restart.
inline LoadCaseSet cluster_load_cases(const std::vector<std::string>& room_ids,
                                      const std::vector<std::vector<double>>& hourly_vectors,
                                      int k, std::uint64_t seed,
                                      const ClusterOptions& options = {}) {
    if (k < 1) throw std::invalid_argument("cluster_load_cases: k must be >= 1");
    if (hourly_vectors.empty())
        throw std::invalid_argument("cluster_load_cases: no hourly vectors");
    if (k > static_cast<int>(hourly_vectors.size()))
        throw std::invalid_argument("cluster_load_cases: k exceeds the number of hours");
    for (const auto& v : hourly_vectors) {
        if (v.size() != room_ids.size())
            throw std::invalid_argument("cluster_load_cases: vector dimension mismatch");
    }

    detail::KMeansResult best;
    for (int r = 0; r < std::max(1, options.restarts); ++r) {
        std::mt19937_64 rng(seed + static_cast<std::uint64_t>(r) * 0x9e3779b97f4a7c15ULL);
        detail::KMeansResult cur = detail::kmeans_single(hourly_vectors, k, rng);
        if (cur.sse < best.sse) best = std::move(cur);
    }

    const int n = static_cast<int>(hourly_vectors.size());
    std::vector<int> counts(k, 0);
    for (int a : best.assignment) ++counts[a];

    if (options.ceil_to_max) {
        for (int c = 0; c < k; ++c) {
            for (std::size_t d = 0; d < room_ids.size(); ++d) {
                double m = 0.0;
                for (int i = 0; i < n; ++i)
                    if (best.assignment[i] == c) m = std::max(m, hourly_vectors[i][d]);
                best.centroids[c][d] = m;
            }
        }
    }

    // Stable presentation: order cases by descending total demand.
    std::vector<int> order(k);
    for (int c = 0; c < k; ++c) order[c] = c;
    auto total = [&](int c) {
        double t = 0.0;
        for (double v : best.centroids[c]) t += v;
        return t;
    };
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        if (total(a) != total(b)) return total(a) > total(b);
        return a < b;
    });

    LoadCaseSet out;
    out.room_ids = room_ids;
    for (int rank = 0; rank < k; ++rank) {
        const int c = order[rank];
        LoadCase lc;
        lc.id = "s" + std::to_string(rank + 1);
        lc.weight = static_cast<double>(counts[c]) / n;
        lc.flows_m3s = best.centroids[c];
        out.cases.push_back(std::move(lc));
    }
    return out;
}

/// Hourly per-room demand matrix from the room inputs.
inline std::vector<std::vector<double>> hourly_demand_vectors(
    const std::vector<RoomDemandInput>& rooms) {
    if (rooms.empty()) throw std::invalid_argument("hourly_demand_vectors: no rooms");
    const std::size_t hours = rooms.front().occupancy_profile.size();
    for (const auto& r : rooms) {
        if (r.occupancy_profile.size() != hours)
            throw std::invalid_argument("hourly_demand_vectors: profile lengths differ");
    }
    std::vector<std::vector<double>> out(hours, std::vector<double>(rooms.size(), 0.0));
    for (std::size_t h = 0; h < hours; ++h)
        for (std::size_t r = 0; r < rooms.size(); ++r)
            out[h][r] = required_flow(rooms[r], static_cast<int>(h));
    return out;
}

}  // namespace ventopt
