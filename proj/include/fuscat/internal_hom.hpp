#pragma once

#include <cstdint>
#include <sstream>

#include "fuscat/diagnostics.hpp"
#include "fuscat/fp_dimension.hpp"
#include "fuscat/fusion_ring.hpp"
#include "fuscat/ribbon.hpp"

namespace fuscat {

/// Hom-space dimension between two classes over the same ring: since simples
/// have one-dimensional endomorphisms and no morphisms between distinct
/// simples, dim Hom(m, n) = sum_k m_k n_k.
inline std::uint64_t hom_dim(const ObjectClass& m, const ObjectClass& n) {
    if (!same_ring(m.ring(), n.ring()))
        throw StructuralError("hom_dim: operands live over different rings");
    std::uint64_t sum = 0;
    for (std::size_t k = 0; k < m.ring()->size(); ++k) sum += m.mults()[k] * n.mults()[k];
    return sum;
}

/// The internal hom [m, n]_E of two classes over C, valued in the base E.
/// The embedding makes C a module over E with e acting as (image of e) (x) -,
/// and [m, n]_E represents e |-> Hom_C(e . m, n):
///   mult_e = sum_{i,j} m_i n_j N^C_{map(e), i}^j.
/// By construction dim Hom_E(e, [m,n]_E) = dim Hom_C(e . m, n) for every
/// base simple e.
inline ObjectClass internal_hom_over_base(const BaseEmbedding& emb, const ObjectClass& m,
                                          const ObjectClass& n) {
    if (!same_ring(m.ring(), emb.target.ring) || !same_ring(n.ring(), emb.target.ring))
        throw StructuralError("internal_hom_over_base: classes must live over the target ring");
    const auto& C = *emb.target.ring;
    const std::size_t nC = C.size();
    ObjectClass out(emb.base.ring);
    for (std::size_t e = 0; e < emb.base.ring->size(); ++e) {
        const std::size_t te = emb.image_of(e);
        std::uint64_t mult = 0;
        for (std::size_t i = 0; i < nC; ++i) {
            if (!m.mults()[i]) continue;
            for (std::size_t j = 0; j < nC; ++j) {
                if (!n.mults()[j]) continue;
                mult += m.mults()[i] * n.mults()[j] * C.N(te, i, j);
            }
        }
        out.set_mult(e, mult);
    }
    return out;
}

/// Internal hom plus the dimension cross-check: the multiplicity of the base
/// unit in [m, n]_E must equal dim Hom_C(m, n), because the base unit acts as
/// the identity.
struct EnrichedHomResult {
    ObjectClass base_class;
    std::uint64_t total_dim_check = 0;
};

inline EnrichedHomResult enriched_hom(const BaseEmbedding& emb, const ObjectClass& m,
                                      const ObjectClass& n) {
    EnrichedHomResult out{internal_hom_over_base(emb, m, n), hom_dim(m, n)};
    if (out.base_class.mult(emb.base.ring->unit()) != out.total_dim_check)
        throw StructuralError(
            "internal hom is inconsistent: unit multiplicity differs from dim Hom; "
            "the embedding does not preserve the unit");
    return out;
}

/// Verify the dual-swap identity: the dual (in E) of [m, n]_E equals
/// [n, m]_E componentwise. Mismatches are listed per base simple; an empty
/// report certifies the identity for these operands.
inline ValidationReport internal_hom_dual_swap(const BaseEmbedding& emb, const ObjectClass& m,
                                               const ObjectClass& n) {
    ValidationReport report;
    const ObjectClass lhs = dual_class(internal_hom_over_base(emb, m, n));
    const ObjectClass rhs = internal_hom_over_base(emb, n, m);
    for (std::size_t e = 0; e < emb.base.ring->size(); ++e) {
        if (lhs.mults()[e] != rhs.mults()[e]) {
            std::ostringstream os;
            os << "at base simple " << emb.base.ring->label(e) << ": dual of [m,n] carries "
               << lhs.mults()[e] << " but [n,m] carries " << rhs.mults()[e];
            report.fail("dual_swap", os.str());
        }
    }
    return report;
}

/// Heuristic sanity bound, not an identity: FPdim of the internal hom should
/// not exceed FPdim(m) * FPdim(n). Violations are reported by callers as
/// warnings, never as failures.
inline bool hom_fpdim_bound_ok(const BaseEmbedding& emb, const ObjectClass& m,
                               const ObjectClass& n, const DimensionVector& d_C,
                               const DimensionVector& d_E) {
    const double lhs = fpdim_class(d_E, internal_hom_over_base(emb, m, n));
    const double rhs = fpdim_class(d_C, m) * fpdim_class(d_C, n);
    return lhs <= rhs + 1e-6 * std::max(1.0, rhs);
}

} // namespace fuscat
