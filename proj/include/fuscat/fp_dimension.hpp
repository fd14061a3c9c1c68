#pragma once

#include <cmath>
#include <cstddef>
#include <sstream>
#include <vector>

#include "fuscat/diagnostics.hpp"
#include "fuscat/fusion_ring.hpp"
#include "fuscat/ribbon.hpp"

namespace fuscat {

/// Convergence target for successive normalized power-iteration steps.
inline constexpr double kPerronStepTol = 1e-12;
/// Iteration cap for the Perron eigenvector computation.
inline constexpr std::size_t kPerronMaxIterations = 100000;
/// Largest acceptable residual of the dimension character property; a bigger
/// residual means the tensor is not a fusion ring, which is an input defect
/// rather than a numerical one.
inline constexpr double kCharacterTol = 1e-9;

/// Frobenius-Perron dimensions of one ring: d_i per simple, normalized so the
/// unit has dimension 1, plus the category dimension sum_i d_i^2.
struct DimensionVector {
    RingPtr ring;
    std::vector<double> dims;
    double category_dim = 0.0;

    double dim(std::size_t i) const {
        ring->label(i);
        return dims[i];
    }
};

/// Largest deviation of d from the dimension character, max over (i,j) of
/// |d_i d_j - sum_k N_ij^k d_k|.
inline double character_residual(const FusionRing& ring, const std::vector<double>& d) {
    const std::size_t n = ring.size();
    double worst = 0.0;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            double sum = 0.0;
            for (std::size_t k = 0; k < n; ++k) sum += ring.N(i, j, k) * d[k];
            worst = std::max(worst, std::abs(d[i] * d[j] - sum));
        }
    return worst;
}

/// Compute the dimension vector as the Perron eigenvector of the total fusion
/// matrix M = sum_i N_i, with (N_i)_jk = N_ij^k. For a fusion ring, every
/// entry M_jk = sum_i N_ij^k is at least 1 (some summand of k tensor j* fuses
/// with j into k), so M is strictly positive and power iteration converges to
/// the unique positive eigenvector. Iterates are normalized at the unit entry;
/// convergence is declared when successive normalized iterates agree to
/// kPerronStepTol in the max norm.
inline DimensionVector fpdims(const RingPtr& ring_ptr) {
    if (!ring_ptr) throw StructuralError("null ring");
    const auto& ring = *ring_ptr;
    const std::size_t n = ring.size();
    const std::size_t u = ring.unit();

    std::vector<double> M(n * n, 0.0);
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t k = 0; k < n; ++k) {
            double sum = 0.0;
            for (std::size_t i = 0; i < n; ++i) sum += ring.N(i, j, k);
            if (sum < 1.0)
                throw StructuralError("ring '" + ring.name() + "': total fusion matrix entry (" +
                                      ring.label(j) + ", " + ring.label(k) +
                                      ") vanishes; it is at least 1 in any fusion ring");
            M[j * n + k] = sum;
        }

    std::vector<double> v(n, 1.0), w(n, 0.0);
    double step = 0.0;
    bool converged = false;
    for (std::size_t it = 0; it < kPerronMaxIterations; ++it) {
        for (std::size_t j = 0; j < n; ++j) {
            double sum = 0.0;
            for (std::size_t k = 0; k < n; ++k) sum += M[j * n + k] * v[k];
            w[j] = sum;
        }
        const double norm = w[u];
        if (!(norm > 0.0))
            throw StructuralError("ring '" + ring.name() +
                                  "': unit entry of the fusion matrix iterate vanished; the "
                                  "tensor is not a fusion ring");
        for (std::size_t j = 0; j < n; ++j) w[j] /= norm;
        step = 0.0;
        for (std::size_t j = 0; j < n; ++j) step = std::max(step, std::abs(w[j] - v[j]));
        v = w;
        if (step < kPerronStepTol) {
            converged = true;
            break;
        }
    }
    if (!converged) {
        std::ostringstream os;
        os << "ring '" << ring.name() << "': Perron iteration did not converge within "
           << kPerronMaxIterations << " steps (last step " << step << ")";
        throw NumericalError(os.str(), step);
    }

    const double residual = character_residual(ring, v);
    if (residual > kCharacterTol) {
        std::ostringstream os;
        os << "ring '" << ring.name() << "': dimension character residual " << residual
           << " exceeds " << kCharacterTol << "; the tensor is not a fusion ring";
        throw StructuralError(os.str());
    }

    DimensionVector out{ring_ptr, std::move(v), 0.0};
    for (double d : out.dims) out.category_dim += d * d;
    return out;
}

/// Linear extension of the dimension character to classes: sum_i x_i d_i.
inline double fpdim_class(const DimensionVector& d, const ObjectClass& x) {
    if (!same_ring(d.ring, x.ring()))
        throw StructuralError("fpdim_class: class and dimension vector disagree on the ring");
    double sum = 0.0;
    for (std::size_t i = 0; i < x.ring()->size(); ++i) sum += double(x.mults()[i]) * d.dims[i];
    return sum;
}

namespace detail {
inline void check_embedding_dims(const BaseEmbedding& emb, const DimensionVector& d_C,
                                 const DimensionVector& d_E) {
    if (!same_ring(d_C.ring, emb.target.ring) || !same_ring(d_E.ring, emb.base.ring))
        throw StructuralError("dimension vectors do not match the embedding's rings");
}
} // namespace detail

/// Dimension of the relative center of C over E: FPdim(C)^2 / FPdim(E).
inline double relative_center_dim(const BaseEmbedding& emb, const DimensionVector& d_C,
                                  const DimensionVector& d_E) {
    detail::check_embedding_dims(emb, d_C, d_E);
    return d_C.category_dim * d_C.category_dim / d_E.category_dim;
}

/// Dimension of the class of the regular algebra of C over E:
/// FPdim(C) / FPdim(E).
inline double regular_algebra_dim(const BaseEmbedding& emb, const DimensionVector& d_C,
                                  const DimensionVector& d_E) {
    detail::check_embedding_dims(emb, d_C, d_E);
    return d_C.category_dim / d_E.category_dim;
}

} // namespace fuscat
