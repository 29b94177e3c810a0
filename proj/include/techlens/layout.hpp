// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 techlens contributors

#pragma once

#include <array>
#include <cmath>
#include <cstdint>
#include <map>
#include <numbers>
#include <random>
#include <string>
#include <vector>

#include "techlens/graph.hpp"

namespace techlens {

/// Node positions produced by force_layout. Identical (graph, seed,
/// iterations) inputs yield identical coordinates bit-for-bit.
struct Layout {
    std::map<std::string, std::array<double, 2>> positions;
    std::uint32_t seed = 0;
    int iterations = 0;

    bool covers(const TagGraph& g) const {
        for (const auto& n : g.nodes)
            if (!positions.count(n.label)) return false;
        return true;
    }
};

/// Weighted spring embedder with simulated-annealing cooling.
///
/// Nodes start on a circle whose phase comes from the seed; repulsion acts
/// between all pairs and attraction along edges scales with edge weight, so
/// heavily co-occurring tags settle closer together. Single nodes sit at the
/// origin. Iterations are sequential and the node order is fixed, keeping
/// the result deterministic.
inline Layout force_layout(const TagGraph& graph, int iterations, std::uint32_t seed) {
    if (iterations < 1) throw DomainError("force_layout needs iterations >= 1");
    Layout layout;
    layout.seed = seed;
    layout.iterations = iterations;

    const std::size_t n = graph.nodes.size();
    if (n == 0) return layout;
    if (n == 1) {
        layout.positions[graph.nodes[0].label] = {0.0, 0.0};
        return layout;
    }

    constexpr double k = 30.0;  // ideal edge length
    const double radius = k * std::sqrt(static_cast<double>(n));
    std::mt19937 rng(seed);
    std::uniform_real_distribution<double> phase_dist(0.0, 2.0 * std::numbers::pi);
    const double phase = phase_dist(rng);

    std::vector<std::array<double, 2>> pos(n);
    for (std::size_t i = 0; i < n; ++i) {
        double angle = phase + 2.0 * std::numbers::pi * static_cast<double>(i) / static_cast<double>(n);
        pos[i] = {radius * std::cos(angle), radius * std::sin(angle)};
    }

    std::map<std::string, std::size_t> index;
    for (std::size_t i = 0; i < n; ++i) index[graph.nodes[i].label] = i;
    struct Spring {
        std::size_t a, b;
        double strength;  // weight / max weight, in (0, 1]
    };
    std::int64_t max_weight = 1;
    for (const auto& e : graph.edges) max_weight = std::max(max_weight, e.weight);
    std::vector<Spring> springs;
    springs.reserve(graph.edges.size());
    for (const auto& e : graph.edges)
        springs.push_back({index.at(e.a), index.at(e.b),
                           static_cast<double>(e.weight) / static_cast<double>(max_weight)});

    std::vector<std::array<double, 2>> disp(n);
    const double t0 = radius / 2.0;
    for (int iter = 0; iter < iterations; ++iter) {
        for (auto& d : disp) d = {0.0, 0.0};

        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j) {
                double dx = pos[i][0] - pos[j][0];
                double dy = pos[i][1] - pos[j][1];
                double dist = std::sqrt(dx * dx + dy * dy);
                if (dist < 1e-9) {
                    // Coincident nodes: push apart along a pair-specific angle.
                    double a = 0.61803398875 * static_cast<double>(i * n + j);
                    dx = std::cos(a);
                    dy = std::sin(a);
                    dist = 1.0;
                }
                double force = k * k / dist;
                disp[i][0] += dx / dist * force;
                disp[i][1] += dy / dist * force;
                disp[j][0] -= dx / dist * force;
                disp[j][1] -= dy / dist * force;
            }

        for (const auto& s : springs) {
            double dx = pos[s.a][0] - pos[s.b][0];
            double dy = pos[s.a][1] - pos[s.b][1];
            double dist = std::sqrt(dx * dx + dy * dy);
            if (dist < 1e-9) continue;
            double force = dist * dist / k * s.strength;
            disp[s.a][0] -= dx / dist * force;
            disp[s.a][1] -= dy / dist * force;
            disp[s.b][0] += dx / dist * force;
            disp[s.b][1] += dy / dist * force;
        }

        double t = t0 * (1.0 - static_cast<double>(iter) / static_cast<double>(iterations)) +
                   0.01;
        for (std::size_t i = 0; i < n; ++i) {
            double len = std::sqrt(disp[i][0] * disp[i][0] + disp[i][1] * disp[i][1]);
            if (len < 1e-12) continue;
            double step = std::min(len, t);
            pos[i][0] += disp[i][0] / len * step;
            pos[i][1] += disp[i][1] / len * step;
        }
    }

    for (std::size_t i = 0; i < n; ++i) layout.positions[graph.nodes[i].label] = pos[i];
    return layout;
}

}  // namespace techlens
