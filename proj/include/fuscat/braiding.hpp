#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <string>
#include <vector>

#include "fuscat/diagnostics.hpp"
#include "fuscat/fp_dimension.hpp"
#include "fuscat/fusion_ring.hpp"
#include "fuscat/ribbon.hpp"

namespace fuscat {

/// Default relative tolerance for deciding transparency from a monodromy
/// entry. Entries are short sums of unit-modulus terms scaled by dimensions,
/// so 1e-6 cleanly separates exact coincidences from rounding noise.
inline constexpr double kTransparencyTol = 1e-6;

/// The monodromy character of a ribbon structure:
///   S~_ij = sum_k N_ij^k d_k theta_k / (theta_i theta_j).
/// A pair (i, j) braids trivially both ways exactly when S~_ij = d_i d_j.
struct MonodromyMatrix {
    RibbonData data;
    std::vector<std::complex<double>> entries; // row-major, n x n

    std::complex<double> at(std::size_t i, std::size_t j) const {
        data.ring->label(i);
        data.ring->label(j);
        return entries[i * data.ring->size() + j];
    }
};

/// Evaluate the monodromy character. The fusion ring must be commutative
/// (otherwise no braiding exists and the request is rejected) and the twists
/// must be unit-modulus, one per simple.
inline MonodromyMatrix monodromy(const RibbonData& rd, const DimensionVector& d) {
    const auto& ring = *rd.ring;
    const std::size_t n = ring.size();
    if (!same_ring(rd.ring, d.ring))
        throw StructuralError("monodromy: dimension vector belongs to a different ring");
    if (rd.twists.size() != n)
        throw StructuralError("monodromy: expected one twist per simple");
    for (std::size_t i = 0; i < n; ++i)
        if (std::abs(std::abs(rd.twists[i]) - 1.0) > kTransparencyTol)
            throw StructuralError("monodromy: twist of '" + ring.label(i) +
                                  "' is not unit-modulus");
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k)
                if (ring.N(i, j, k) != ring.N(j, i, k))
                    throw StructuralError("monodromy: ring '" + ring.name() +
                                          "' is not commutative, no braiding exists");

    MonodromyMatrix out{rd, std::vector<std::complex<double>>(n * n)};
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            std::complex<double> sum = 0.0;
            for (std::size_t k = 0; k < n; ++k) {
                const auto m = ring.N(i, j, k);
                if (m) sum += double(m) * d.dims[k] * rd.twists[k];
            }
            out.entries[i * n + j] = sum / (rd.twists[i] * rd.twists[j]);
        }
    return out;
}

/// Transparency test: |S~_ij - d_i d_j| <= tol * max(1, d_i d_j).
inline bool is_transparent_pair(const MonodromyMatrix& S, const DimensionVector& d,
                                std::size_t i, std::size_t j,
                                double tol = kTransparencyTol) {
    const double target = d.dim(i) * d.dim(j);
    return std::abs(S.at(i, j) - target) <= tol * std::max(1.0, target);
}

/// All simples transparent against every member of `subset`. Monotone
/// decreasing in the subset and always contains the unit.
inline std::vector<std::size_t> centralizer(const MonodromyMatrix& S, const DimensionVector& d,
                                            const std::vector<std::size_t>& subset,
                                            double tol = kTransparencyTol) {
    const std::size_t n = S.data.ring->size();
    std::vector<std::size_t> out;
    for (std::size_t x = 0; x < n; ++x) {
        bool transparent = true;
        for (const std::size_t a : subset)
            if (!is_transparent_pair(S, d, x, a, tol)) {
                transparent = false;
                break;
            }
        if (transparent) out.push_back(x);
    }
    return out;
}

/// The centralizer of the whole category in itself: the transparent simples.
inline std::vector<std::size_t> mueger_center(const MonodromyMatrix& S,
                                              const DimensionVector& d,
                                              double tol = kTransparencyTol) {
    std::vector<std::size_t> all(S.data.ring->size());
    for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
    return centralizer(S, d, all, tol);
}

/// Position of a target category relative to its base:
///   is_symmetric                 every simple is transparent
///   is_over_base                 the image of the base is transparent
///   base_centralizer_equals_base the transparent simples are exactly the image
///   is_umtc_over_E               over the base with no transparency beyond it
struct Classification {
    bool is_symmetric = false;
    bool is_over_base = false;
    bool base_centralizer_equals_base = false;
    bool is_umtc_over_E = false;
    std::vector<std::size_t> transparent_simples;
};

/// Classify the target of an embedding against its base. Structural defects
/// of the embedding (shape, injectivity, unit, fusion compatibility) throw;
/// a twist mismatch between base and image does not block classification,
/// since transparency is read off the target's own monodromy.
inline Classification classify(const BaseEmbedding& emb, double tol = kTransparencyTol) {
    auto embedding_report = validate_embedding(emb);
    for (const auto& v : embedding_report.violations)
        if (v.rule != "embedding_twist")
            throw StructuralError("embedding invalid [" + v.rule + "]: " + v.message);

    const auto d = fpdims(emb.target.ring);
    const auto S = monodromy(emb.target, d);

    Classification out;
    out.transparent_simples = mueger_center(S, d, tol);

    const auto image = embedding_image(emb);
    const auto& center = out.transparent_simples; // sorted by construction

    out.is_symmetric = center.size() == emb.target.ring->size();
    out.is_over_base = std::includes(center.begin(), center.end(), image.begin(), image.end());
    out.base_centralizer_equals_base = center == image;
    out.is_umtc_over_E = out.is_over_base && out.base_centralizer_equals_base;
    return out;
}

} // namespace fuscat
