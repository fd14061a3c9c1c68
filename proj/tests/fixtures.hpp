// Hand-built rings, twists, and embeddings used across the test suite. These
// are constructed entry by entry, independently of the catalog and the JSON
// parser, so that round-trip and catalog tests compare against data that did
// not flow through the code under test.
#pragma once

#include <cmath>
#include <complex>
#include <memory>
#include <random>
#include <string>
#include <vector>

#include "fuscat/fuscat.hpp"

namespace fixtures {

using namespace fuscat;

constexpr double pi = 3.14159265358979323846;

/// Ring of a finite group presented by its multiplication table:
/// table[i][j] = index of the product. Exactly one fusion channel per pair.
/// The mutable form lets a fixture plant a deliberate defect before freezing.
inline std::shared_ptr<FusionRing> mutable_group_ring(
    std::string name, std::vector<std::string> labels,
    const std::vector<std::vector<std::size_t>>& table) {
    auto r = std::make_shared<FusionRing>(std::move(name), std::move(labels), 0);
    for (std::size_t i = 0; i < table.size(); ++i)
        for (std::size_t j = 0; j < table[i].size(); ++j)
            r->set_N(i, j, table[i][j], 1);
    return r;
}

inline RingPtr group_ring(std::string name, std::vector<std::string> labels,
                          const std::vector<std::vector<std::size_t>>& table) {
    return mutable_group_ring(std::move(name), std::move(labels), table);
}

inline RingPtr trivial_ring() {
    return group_ring("trivial", {"1"}, {{0}});
}

// {1, psi} with psi^2 = 1; shared by Rep(Z/2) and super vector spaces.
inline RingPtr rep_z2_ring() {
    return group_ring("rep_z2", {"1", "psi"}, {{0, 1}, {1, 0}});
}

inline RingPtr fibonacci_ring() {
    auto r = std::make_shared<FusionRing>("fibonacci", std::vector<std::string>{"1", "tau"}, 0);
    r->set_N(0, 0, 0, 1);
    r->set_N(0, 1, 1, 1);
    r->set_N(1, 0, 1, 1);
    r->set_N(1, 1, 0, 1);
    r->set_N(1, 1, 1, 1); // tau * tau = 1 + tau
    return r;
}

inline RingPtr ising_ring() {
    auto r = std::make_shared<FusionRing>("ising",
                                          std::vector<std::string>{"1", "eps", "sigma"}, 0);
    for (std::size_t i = 0; i < 3; ++i) {
        r->set_N(0, i, i, 1);
        r->set_N(i, 0, i, 1);
    }
    r->set_N(1, 1, 0, 1); // eps * eps = 1
    r->set_N(1, 2, 2, 1); // eps * sigma = sigma
    r->set_N(2, 1, 2, 1);
    r->set_N(2, 2, 0, 1); // sigma * sigma = 1 + eps
    r->set_N(2, 2, 1, 1);
    return r;
}

// Z/2 x Z/2 pointed: {1, e, m, f} with e*m = f and every square trivial.
inline RingPtr toric_ring() {
    return group_ring("toric_code", {"1", "e", "m", "f"},
                      {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}});
}

// Z/3: the smallest ring whose duals are not all self-inverse (a* = b).
inline RingPtr z3_ring() {
    return group_ring("z3", {"1", "a", "b"}, {{0, 1, 2}, {1, 2, 0}, {2, 0, 1}});
}

// Same labels as z3_ring but with b*b = b: breaks associativity while the
// unit law and rigidity still hold, isolating the associativity check.
inline RingPtr z3_broken_ring() {
    auto r = mutable_group_ring("z3_broken", {"1", "a", "b"},
                                {{0, 1, 2}, {1, 2, 0}, {2, 0, 1}});
    r->set_N(2, 2, 1, 0);
    r->set_N(2, 2, 2, 1);
    return r;
}

// Z/3 with an extra channel planted in b*a = 1 + b. Every total fusion matrix
// entry stays positive, so the Perron step converges, but no positive vector
// satisfies the dimension character: d_a d_b = 1 from a*b yet 1 + d_b from
// b*a. Exercises the residual rejection specifically.
inline RingPtr z3_skew_ring() {
    auto r = mutable_group_ring("z3_skew", {"1", "a", "b"},
                                {{0, 1, 2}, {1, 2, 0}, {2, 0, 1}});
    r->set_N(2, 1, 2, 1);
    return r;
}

// The symmetric group S3 as a group ring: the smallest noncommutative valid
// ring. Elements ordered e, r, r2, s, sr, sr2 with r^3 = s^2 = e, srs = r2.
inline RingPtr s3_ring() {
    const std::vector<std::vector<std::size_t>> table = {
        {0, 1, 2, 3, 4, 5},
        {1, 2, 0, 5, 3, 4},
        {2, 0, 1, 4, 5, 3},
        {3, 4, 5, 0, 1, 2},
        {4, 5, 3, 2, 0, 1},
        {5, 3, 4, 1, 2, 0},
    };
    return group_ring("s3", {"e", "r", "r2", "s", "sr", "sr2"}, table);
}

inline RibbonData trivial_ribbon() {
    return RibbonData{trivial_ring(), {{1.0, 0.0}}};
}

inline RibbonData rep_z2_ribbon() {
    return RibbonData{rep_z2_ring(), {{1.0, 0.0}, {1.0, 0.0}}};
}

inline RibbonData svec_ribbon() {
    auto ring = group_ring("svec", {"1", "psi"}, {{0, 1}, {1, 0}});
    return RibbonData{std::move(ring), {{1.0, 0.0}, {-1.0, 0.0}}};
}

inline RibbonData fibonacci_ribbon() {
    return RibbonData{fibonacci_ring(), {{1.0, 0.0}, std::polar(1.0, 4.0 * pi / 5.0)}};
}

inline RibbonData ising_ribbon() {
    return RibbonData{ising_ring(),
                      {{1.0, 0.0}, {-1.0, 0.0}, std::polar(1.0, pi / 8.0)}};
}

// Ising fusion rules with the eps twist flattened to +1. Still legal ribbon
// data for the validator, but the monodromy changes: eps becomes transparent.
inline RibbonData ising_flat_eps_ribbon() {
    return RibbonData{ising_ring(),
                      {{1.0, 0.0}, {1.0, 0.0}, std::polar(1.0, pi / 8.0)}};
}

inline RibbonData toric_ribbon() {
    return RibbonData{toric_ring(),
                      {{1.0, 0.0}, {1.0, 0.0}, {1.0, 0.0}, {-1.0, 0.0}}};
}

inline RibbonData z3_ribbon() {
    const auto omega = std::polar(1.0, 2.0 * pi / 3.0);
    return RibbonData{z3_ring(), {{1.0, 0.0}, omega, omega}};
}

/// Rep(Z/2) embedded in itself by the identity. The degenerate instance where
/// the base exhausts the target.
inline BaseEmbedding rep_z2_self_embedding() {
    return BaseEmbedding{rep_z2_ribbon(), rep_z2_ribbon(), {0, 1}};
}

inline ObjectClass random_class(const RingPtr& ring, std::mt19937& rng,
                                std::uint64_t max_mult = 3) {
    std::uniform_int_distribution<std::uint64_t> dist(0, max_mult);
    ObjectClass out(ring);
    for (std::size_t i = 0; i < ring->size(); ++i) out.set_mult(i, dist(rng));
    return out;
}

} // namespace fixtures
