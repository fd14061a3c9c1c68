#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "fuscat/diagnostics.hpp"

namespace fuscat {

/// Skeletal data of a fusion ring: an ordered basis of simple labels, a
/// designated unit, and the multiplicity tensor N_ij^k. The tensor is stored
/// densely; absent entries are zero. Instances are built once (constructor
/// plus set_N) and treated as immutable afterwards, shared via RingPtr.
class FusionRing {
public:
    FusionRing(std::string name, std::vector<std::string> simples, std::size_t unit_index)
        : name_(std::move(name)), simples_(std::move(simples)), unit_(unit_index) {
        if (simples_.empty())
            throw StructuralError("fusion ring needs at least one simple");
        for (std::size_t i = 0; i < simples_.size(); ++i)
            for (std::size_t j = i + 1; j < simples_.size(); ++j)
                if (simples_[i] == simples_[j])
                    throw StructuralError("duplicate simple label '" + simples_[i] + "'");
        if (unit_ >= simples_.size())
            throw StructuralError("unit index out of range");
        tensor_.assign(simples_.size() * simples_.size() * simples_.size(), 0);
    }

    const std::string& name() const noexcept { return name_; }
    std::size_t size() const noexcept { return simples_.size(); }
    std::size_t unit() const noexcept { return unit_; }
    const std::vector<std::string>& simples() const noexcept { return simples_; }

    const std::string& label(std::size_t i) const {
        check_index(i);
        return simples_[i];
    }

    std::optional<std::size_t> index_of(std::string_view label) const {
        for (std::size_t i = 0; i < simples_.size(); ++i)
            if (simples_[i] == label) return i;
        return std::nullopt;
    }

    std::uint32_t N(std::size_t i, std::size_t j, std::size_t k) const {
        check_index(i);
        check_index(j);
        check_index(k);
        return tensor_[flat(i, j, k)];
    }

    void set_N(std::size_t i, std::size_t j, std::size_t k, std::uint32_t mult) {
        check_index(i);
        check_index(j);
        check_index(k);
        tensor_[flat(i, j, k)] = mult;
    }

    /// Structural equality: same labels in the same order, same unit, same
    /// tensor. Used to decide whether two independently loaded rings are
    /// interchangeable.
    bool same_structure(const FusionRing& other) const noexcept {
        return simples_ == other.simples_ && unit_ == other.unit_ && tensor_ == other.tensor_;
    }

    bool operator==(const FusionRing& other) const noexcept {
        return name_ == other.name_ && same_structure(other);
    }

private:
    std::size_t flat(std::size_t i, std::size_t j, std::size_t k) const noexcept {
        const std::size_t n = simples_.size();
        return (i * n + j) * n + k;
    }

    void check_index(std::size_t i) const {
        if (i >= simples_.size()) {
            std::ostringstream os;
            os << "simple index " << i << " out of range for ring '" << name_ << "' (n = "
               << simples_.size() << ")";
            throw StructuralError(os.str());
        }
    }

    std::string name_;
    std::vector<std::string> simples_;
    std::size_t unit_;
    std::vector<std::uint32_t> tensor_;
};

using RingPtr = std::shared_ptr<const FusionRing>;

inline bool same_ring(const RingPtr& a, const RingPtr& b) {
    if (a == b) return true;
    if (!a || !b) return false;
    return a->same_structure(*b);
}

/// A Grothendieck-ring element: a nonnegative-integer combination of the
/// simples of one ring. Defects, handles, internal homs and surface
/// invariants are all values of this type.
class ObjectClass {
public:
    explicit ObjectClass(RingPtr ring) : ring_(require(std::move(ring))), mults_(ring_->size(), 0) {}

    ObjectClass(RingPtr ring, std::vector<std::uint64_t> mults)
        : ring_(require(std::move(ring))), mults_(std::move(mults)) {
        if (mults_.size() != ring_->size())
            throw StructuralError("class vector length does not match the ring");
    }

    static ObjectClass unit_class(RingPtr ring) {
        ObjectClass x(std::move(ring));
        x.mults_[x.ring_->unit()] = 1;
        return x;
    }

    static ObjectClass simple(RingPtr ring, std::size_t i) {
        ObjectClass x(std::move(ring));
        x.ring_->label(i); // bounds check
        x.mults_[i] = 1;
        return x;
    }

    const RingPtr& ring() const noexcept { return ring_; }

    std::uint64_t mult(std::size_t i) const {
        ring_->label(i);
        return mults_[i];
    }

    void set_mult(std::size_t i, std::uint64_t m) {
        ring_->label(i);
        mults_[i] = m;
    }

    void add(std::size_t i, std::uint64_t m) {
        ring_->label(i);
        std::uint64_t sum = 0;
        if (__builtin_add_overflow(mults_[i], m, &sum))
            throw std::overflow_error("class multiplicity exceeds the 64-bit range");
        mults_[i] = sum;
    }

    const std::vector<std::uint64_t>& mults() const noexcept { return mults_; }

    bool is_zero() const noexcept {
        for (auto m : mults_)
            if (m) return false;
        return true;
    }

    std::uint64_t total_mass() const noexcept {
        std::uint64_t t = 0;
        for (auto m : mults_) t += m;
        return t;
    }

    bool operator==(const ObjectClass& other) const noexcept {
        return same_ring(ring_, other.ring_) && mults_ == other.mults_;
    }

private:
    static RingPtr require(RingPtr ring) {
        if (!ring) throw StructuralError("null ring");
        return ring;
    }

    RingPtr ring_;
    std::vector<std::uint64_t> mults_;
};

/// "2*1 + tau" style rendering; the zero class prints as "0".
inline std::string format_class(const ObjectClass& x) {
    std::string out;
    for (std::size_t i = 0; i < x.ring()->size(); ++i) {
        const auto m = x.mults()[i];
        if (!m) continue;
        if (!out.empty()) out += " + ";
        if (m != 1) out += std::to_string(m) + "*";
        out += x.ring()->label(i);
    }
    return out.empty() ? "0" : out;
}

namespace detail {
inline std::string tuple_str(const FusionRing& r, std::initializer_list<std::size_t> idx) {
    std::string out = "(";
    bool first = true;
    for (auto i : idx) {
        if (!first) out += ", ";
        out += r.label(i);
        first = false;
    }
    return out + ")";
}
} // namespace detail

/// Check the fusion-ring axioms and report every violation with its offending
/// index tuple. Rules reported:
///   unit_law       N_{u,j}^k = delta_jk and N_{j,u}^k = delta_jk
///   associativity  sum_m N_ij^m N_mk^l = sum_m N_jk^m N_im^l
///   rigidity       exactly one j per i with N_ij^u = 1 (and no entry > 1)
///   dual_compat    N_ij^k = N_{j*,i*}^{k*} = N_{i*,k}^j (Frobenius reciprocity)
/// Commutativity is not an axiom here; a noncommutative ring is reported with
/// a warning because no braiding can exist on it.
inline ValidationReport validate_fusion_ring(const FusionRing& ring) {
    ValidationReport report;
    const std::size_t n = ring.size();
    const std::size_t u = ring.unit();

    for (std::size_t j = 0; j < n; ++j) {
        for (std::size_t k = 0; k < n; ++k) {
            const std::uint32_t want = (j == k) ? 1 : 0;
            if (ring.N(u, j, k) != want) {
                std::ostringstream os;
                os << "N" << detail::tuple_str(ring, {u, j, k}) << " = " << ring.N(u, j, k)
                   << ", expected " << want;
                report.fail("unit_law", os.str());
            }
            if (ring.N(j, u, k) != want) {
                std::ostringstream os;
                os << "N" << detail::tuple_str(ring, {j, u, k}) << " = " << ring.N(j, u, k)
                   << ", expected " << want;
                report.fail("unit_law", os.str());
            }
        }
    }

    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k)
                for (std::size_t l = 0; l < n; ++l) {
                    std::uint64_t lhs = 0, rhs = 0;
                    for (std::size_t m = 0; m < n; ++m) {
                        lhs += std::uint64_t(ring.N(i, j, m)) * ring.N(m, k, l);
                        rhs += std::uint64_t(ring.N(j, k, m)) * ring.N(i, m, l);
                    }
                    if (lhs != rhs) {
                        std::ostringstream os;
                        os << "at " << detail::tuple_str(ring, {i, j, k, l}) << ": (i j) k gives "
                           << lhs << ", i (j k) gives " << rhs;
                        report.fail("associativity", os.str());
                    }
                }

    std::vector<std::optional<std::size_t>> dual(n);
    bool rigid = true;
    for (std::size_t i = 0; i < n; ++i) {
        std::vector<std::size_t> hits;
        bool clean = true;
        for (std::size_t j = 0; j < n; ++j) {
            const auto m = ring.N(i, j, u);
            if (m == 0) continue;
            hits.push_back(j);
            if (m > 1) {
                std::ostringstream os;
                os << "N" << detail::tuple_str(ring, {i, j, u}) << " = " << m << " exceeds 1";
                report.fail("rigidity", os.str());
                clean = false;
            }
        }
        if (hits.size() != 1) {
            std::ostringstream os;
            os << "simple " << ring.label(i) << " has " << hits.size()
               << " candidate duals, expected exactly one";
            report.fail("rigidity", os.str());
            clean = false;
        }
        if (clean && hits.size() == 1) {
            dual[i] = hits[0];
        } else {
            rigid = false;
        }
    }
    // The pairing must be two-sided: i* pairs back with i.
    if (rigid) {
        for (std::size_t i = 0; i < n; ++i) {
            if (ring.N(*dual[i], i, u) != 1) {
                std::ostringstream os;
                os << "N" << detail::tuple_str(ring, {*dual[i], i, u})
                   << " = " << ring.N(*dual[i], i, u) << ", expected 1 (dual pairing of "
                   << ring.label(i) << " is one-sided)";
                report.fail("rigidity", os.str());
                rigid = false;
            }
        }
    }

    if (rigid) {
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                for (std::size_t k = 0; k < n; ++k) {
                    const auto base = ring.N(i, j, k);
                    const auto swapped = ring.N(*dual[j], *dual[i], *dual[k]);
                    if (base != swapped) {
                        std::ostringstream os;
                        os << "N" << detail::tuple_str(ring, {i, j, k}) << " = " << base
                           << " but N" << detail::tuple_str(ring, {*dual[j], *dual[i], *dual[k]})
                           << " = " << swapped;
                        report.fail("dual_compat", os.str());
                    }
                    const auto frobenius = ring.N(*dual[i], k, j);
                    if (base != frobenius) {
                        std::ostringstream os;
                        os << "N" << detail::tuple_str(ring, {i, j, k}) << " = " << base
                           << " but N" << detail::tuple_str(ring, {*dual[i], k, j})
                           << " = " << frobenius;
                        report.fail("dual_compat", os.str());
                    }
                }
    }

    [&] {
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                for (std::size_t k = 0; k < n; ++k)
                    if (ring.N(i, j, k) != ring.N(j, i, k)) {
                        std::ostringstream os;
                        os << "N" << detail::tuple_str(ring, {i, j, k}) << " = "
                           << ring.N(i, j, k) << " differs from N"
                           << detail::tuple_str(ring, {j, i, k}) << " = " << ring.N(j, i, k)
                           << "; the ring admits no braiding";
                        report.warn("commutativity", os.str());
                        return;
                    }
    }();

    return report;
}

/// The unique j with N_ij^unit = 1. Throws if the ring is not rigid at i,
/// since the dual is then undefined.
inline std::size_t dual_of(const FusionRing& ring, std::size_t i) {
    const std::size_t n = ring.size();
    const std::size_t u = ring.unit();
    std::optional<std::size_t> found;
    for (std::size_t j = 0; j < n; ++j) {
        const auto m = ring.N(i, j, u);
        if (m == 0) continue;
        if (m > 1 || found)
            throw StructuralError("ring '" + ring.name() + "' is not rigid at simple '" +
                                  ring.label(i) + "'");
        found = j;
    }
    if (!found)
        throw StructuralError("ring '" + ring.name() + "' is not rigid at simple '" +
                              ring.label(i) + "'");
    return *found;
}

/// Grothendieck-ring product: mults_k = sum_{i,j} a_i b_j N_ij^k.
inline ObjectClass fuse(const ObjectClass& a, const ObjectClass& b) {
    if (!same_ring(a.ring(), b.ring()))
        throw StructuralError("fuse: operands live over different rings");
    const auto& ring = *a.ring();
    const std::size_t n = ring.size();
    ObjectClass out(a.ring());
    for (std::size_t i = 0; i < n; ++i) {
        if (!a.mults()[i]) continue;
        for (std::size_t j = 0; j < n; ++j) {
            if (!b.mults()[j]) continue;
            std::uint64_t w = 0;
            if (__builtin_mul_overflow(a.mults()[i], b.mults()[j], &w))
                throw std::overflow_error("class multiplicity exceeds the 64-bit range");
            for (std::size_t k = 0; k < n; ++k) {
                const auto m = ring.N(i, j, k);
                if (!m) continue;
                std::uint64_t term = 0;
                if (__builtin_mul_overflow(w, std::uint64_t(m), &term))
                    throw std::overflow_error("class multiplicity exceeds the 64-bit range");
                out.add(k, term);
            }
        }
    }
    return out;
}

/// Componentwise dual: sum m_i [i] maps to sum m_i [i*].
inline ObjectClass dual_class(const ObjectClass& x) {
    ObjectClass out(x.ring());
    for (std::size_t i = 0; i < x.ring()->size(); ++i)
        if (x.mults()[i]) out.add(dual_of(*x.ring(), i), x.mults()[i]);
    return out;
}

} // namespace fuscat
