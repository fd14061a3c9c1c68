#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <sstream>
#include <utility>
#include <vector>

#include "fuscat/diagnostics.hpp"
#include "fuscat/fusion_ring.hpp"

namespace fuscat {

/// Tolerance for the exact ribbon identities (unit twist, dual twist pairing,
/// unit modulus) when checked numerically.
inline constexpr double kRibbonTol = 1e-9;

/// A fusion ring together with one twist scalar per simple. The twists are
/// the only braiding datum the engine keeps; everything braided is derived
/// from the induced monodromy character.
struct RibbonData {
    RingPtr ring;
    std::vector<std::complex<double>> twists;

    std::complex<double> twist(std::size_t i) const {
        ring->label(i);
        if (twists.size() != ring->size())
            throw StructuralError("twist vector length does not match the ring");
        return twists[i];
    }
};

/// Check the ribbon invariants: theta_unit = 1, theta_{i*} = theta_i, and
/// |theta_i| = 1, each within kRibbonTol. Requires a rigid ring (duals must
/// exist to state the pairing rule).
inline ValidationReport validate_ribbon(const RibbonData& rd) {
    ValidationReport report;
    const auto& ring = *rd.ring;
    if (rd.twists.size() != ring.size()) {
        report.fail("twist_shape", "expected " + std::to_string(ring.size()) +
                                       " twists, got " + std::to_string(rd.twists.size()));
        return report;
    }
    if (std::abs(rd.twists[ring.unit()] - 1.0) > kRibbonTol) {
        std::ostringstream os;
        os << "twist of the unit is " << rd.twists[ring.unit()] << ", expected 1";
        report.fail("twist_unit", os.str());
    }
    for (std::size_t i = 0; i < ring.size(); ++i) {
        if (std::abs(std::abs(rd.twists[i]) - 1.0) > kRibbonTol) {
            std::ostringstream os;
            os << "twist of " << ring.label(i) << " has modulus " << std::abs(rd.twists[i])
               << ", expected 1";
            report.fail("twist_modulus", os.str());
        }
        const std::size_t d = dual_of(ring, i);
        if (std::abs(rd.twists[i] - rd.twists[d]) > kRibbonTol) {
            std::ostringstream os;
            os << "twist of " << ring.label(i) << " differs from twist of its dual "
               << ring.label(d);
            report.fail("twist_dual", os.str());
        }
    }
    return report;
}

/// The structure "C over E" at the skeletal level: ribbon data for the base E
/// and the target C, plus the simple map realizing the embedding. map[e] is
/// the index in C of the image of base simple e.
struct BaseEmbedding {
    RibbonData base;
    RibbonData target;
    std::vector<std::size_t> map;

    std::size_t image_of(std::size_t e) const {
        base.ring->label(e);
        if (map.size() != base.ring->size())
            throw StructuralError("embedding map length does not match the base ring");
        const std::size_t c = map[e];
        target.ring->label(c);
        return c;
    }
};

inline bool is_trivial_base(const BaseEmbedding& emb) { return emb.base.ring->size() == 1; }

/// Sorted image of the base simples inside C.
inline std::vector<std::size_t> embedding_image(const BaseEmbedding& emb) {
    std::vector<std::size_t> image;
    for (std::size_t e = 0; e < emb.base.ring->size(); ++e) image.push_back(emb.image_of(e));
    std::sort(image.begin(), image.end());
    return image;
}

/// Check the embedding invariants:
///   embedding_injective  distinct base simples land on distinct simples of C
///   embedding_unit       the base unit lands on the unit of C
///   embedding_fusion     N^E_{e,f}^g = N^C on images, and images of e,f fuse
///                        only into the image (full on the skeleton)
///   embedding_twist      twists agree along the map
/// Structural defects (shape mismatch, out-of-range image) throw instead.
inline ValidationReport validate_embedding(const BaseEmbedding& emb) {
    ValidationReport report;
    const auto& E = *emb.base.ring;
    const auto& C = *emb.target.ring;
    const std::size_t nE = E.size();

    if (emb.map.size() != nE)
        throw StructuralError("embedding map length does not match the base ring");
    for (std::size_t e = 0; e < nE; ++e) emb.image_of(e); // range check

    for (std::size_t e = 0; e < nE; ++e)
        for (std::size_t f = e + 1; f < nE; ++f)
            if (emb.map[e] == emb.map[f]) {
                report.fail("embedding_injective", "base simples " + E.label(e) + " and " +
                                                       E.label(f) + " share the image " +
                                                       C.label(emb.map[e]));
            }

    if (emb.map[E.unit()] != C.unit()) {
        report.fail("embedding_unit", "base unit maps to " + C.label(emb.map[E.unit()]) +
                                          ", expected " + C.label(C.unit()));
    }

    std::vector<bool> in_image(C.size(), false);
    for (std::size_t e = 0; e < nE; ++e) in_image[emb.map[e]] = true;

    for (std::size_t e = 0; e < nE; ++e)
        for (std::size_t f = 0; f < nE; ++f) {
            for (std::size_t g = 0; g < nE; ++g) {
                const auto base_mult = E.N(e, f, g);
                const auto target_mult = C.N(emb.map[e], emb.map[f], emb.map[g]);
                if (base_mult != target_mult) {
                    std::ostringstream os;
                    os << "N" << detail::tuple_str(E, {e, f, g}) << " = " << base_mult
                       << " in the base but N"
                       << detail::tuple_str(C, {emb.map[e], emb.map[f], emb.map[g]}) << " = "
                       << target_mult << " in the target";
                    report.fail("embedding_fusion", os.str());
                }
            }
            for (std::size_t c = 0; c < C.size(); ++c) {
                if (in_image[c]) continue;
                const auto leak = C.N(emb.map[e], emb.map[f], c);
                if (leak) {
                    std::ostringstream os;
                    os << "images of " << E.label(e) << " and " << E.label(f)
                       << " fuse into " << C.label(c) << " (multiplicity " << leak
                       << ") outside the image";
                    report.fail("embedding_fusion", os.str());
                }
            }
        }

    if (emb.base.twists.size() == nE && emb.target.twists.size() == C.size()) {
        for (std::size_t e = 0; e < nE; ++e) {
            const auto diff = std::abs(emb.base.twist(e) - emb.target.twist(emb.map[e]));
            if (diff > kRibbonTol) {
                std::ostringstream os;
                os << "twist of " << E.label(e) << " is " << emb.base.twist(e)
                   << " but its image " << C.label(emb.map[e]) << " carries "
                   << emb.target.twist(emb.map[e]);
                report.fail("embedding_twist", os.str());
            }
        }
    } else {
        report.fail("twist_shape", "both base and target need one twist per simple");
    }

    return report;
}

/// The canonical embedding of the trivial base (one simple, unit twist) into
/// an arbitrary target, sending unit to unit.
inline BaseEmbedding over_trivial_base(RibbonData target) {
    auto ring = std::make_shared<FusionRing>("trivial", std::vector<std::string>{"1"}, 0);
    ring->set_N(0, 0, 0, 1);
    RibbonData base{ring, {std::complex<double>(1.0, 0.0)}};
    std::vector<std::size_t> map{target.ring->unit()};
    return BaseEmbedding{std::move(base), std::move(target), std::move(map)};
}

} // namespace fuscat
