#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <map>
#include <memory>
#include <numbers>
#include <optional>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "fuscat/io.hpp"

namespace fuscat {

/// Reference quantities for one catalog entry. The test suite re-derives all
/// of them; the table records expectations plus how each value was obtained.
struct CatalogExpected {
    std::vector<double> dims;
    double category_dim = 0.0;
    std::vector<std::string> center;      // labels of the transparent simples
    std::vector<std::uint64_t> genus_gsd; // g = 1, 2, 3 over the trivial base; empty when
                                          // the genus series needs a supplied handle
    std::map<std::string, std::string> derivations;
};

struct CatalogEntry {
    std::string id;
    std::string description;
    std::string category_json; // canonical category file text
    CatalogExpected expected;
};

namespace detail {

struct EntryData {
    std::string name;
    std::vector<std::string> simples;
    std::size_t unit = 0;
    // non-unit fusion entries; the unit rows follow from the unit law
    std::vector<std::tuple<std::size_t, std::size_t, std::size_t, std::uint32_t>> fusion;
    std::vector<std::complex<double>> twists;
    std::optional<ParsedCategory::BaseRef> base;
};

inline std::string entry_text(const EntryData& d) {
    auto ring = std::make_shared<FusionRing>(d.name, d.simples, d.unit);
    for (std::size_t s = 0; s < ring->size(); ++s) {
        ring->set_N(d.unit, s, s, 1);
        ring->set_N(s, d.unit, s, 1);
    }
    for (const auto& [i, j, k, m] : d.fusion) ring->set_N(i, j, k, m);
    ParsedCategory cat{std::move(ring), d.twists, d.base};
    return serialize_category(cat);
}

} // namespace detail

/// The built-in examples: the trivial category, the two symmetric base
/// categories on Z/2 fusion, three modular categories, and the identity
/// embedding of Rep(Z/2) into itself as the degenerate over-base instance.
inline const std::vector<CatalogEntry>& builtin_catalog() {
    static const std::vector<CatalogEntry> entries = [] {
        using std::complex;
        const complex<double> one(1.0, 0.0);
        const complex<double> minus_one(-1.0, 0.0);
        const double phi = (1.0 + std::sqrt(5.0)) / 2.0;
        const double pi = std::numbers::pi;

        std::vector<CatalogEntry> out;

        {
            detail::EntryData d{"trivial", {"1"}, 0, {}, {one}, std::nullopt};
            CatalogExpected e;
            e.dims = {1.0};
            e.category_dim = 1.0;
            e.center = {"1"};
            e.genus_gsd = {1, 1, 1};
            e.derivations = {
                {"dims", "unit law alone; the total fusion matrix is (1)"},
                {"center", "a single simple is transparent against itself"},
                {"genus_gsd", "handle class is the unit, so every genus gives 1; matches the "
                              "Verlinde sum with D = d_1 = 1"},
            };
            out.push_back({d.name, "the unit fusion category with a single simple",
                           detail::entry_text(d), std::move(e)});
        }

        {
            detail::EntryData d{"rep_z2", {"1", "psi"}, 0, {{1, 1, 0, 1}}, {one, one},
                                std::nullopt};
            CatalogExpected e;
            e.dims = {1.0, 1.0};
            e.category_dim = 2.0;
            e.center = {"1", "psi"};
            e.derivations = {
                {"dims", "pointed Z/2 fusion, every simple invertible"},
                {"center", "monodromy matrix is all ones, every pair transparent"},
            };
            out.push_back({d.name, "representations of Z/2 with trivial twists; symmetric",
                           detail::entry_text(d), std::move(e)});
        }

        {
            detail::EntryData d{"svec", {"1", "psi"}, 0, {{1, 1, 0, 1}}, {one, minus_one},
                                std::nullopt};
            CatalogExpected e;
            e.dims = {1.0, 1.0};
            e.category_dim = 2.0;
            e.center = {"1", "psi"};
            e.derivations = {
                {"dims", "pointed Z/2 fusion, every simple invertible"},
                {"center", "monodromy of (psi, psi) is theta_1/theta_psi^2 = 1 = d_psi^2"},
            };
            out.push_back({d.name,
                           "super vector spaces: Z/2 fusion with the fermionic twist; symmetric",
                           detail::entry_text(d), std::move(e)});
        }

        {
            detail::EntryData d{"fibonacci",
                                {"1", "tau"},
                                0,
                                {{1, 1, 0, 1}, {1, 1, 1, 1}},
                                {one, std::polar(1.0, 4.0 * pi / 5.0)},
                                std::nullopt};
            CatalogExpected e;
            e.dims = {1.0, phi};
            e.category_dim = 1.0 + phi * phi;
            e.center = {"1"};
            e.genus_gsd = {2, 5, 15};
            e.derivations = {
                {"dims", "largest root of x^2 = x + 1, the golden ratio"},
                {"center", "monodromy of (tau, tau) is (1 + phi theta_tau)/theta_tau^2, far "
                           "from phi^2"},
                {"genus_gsd", "handle class 2*1 + tau powered by hand (g=3: 15*1 + 20*tau); "
                              "agrees with the Verlinde sum, D^2 = phi + 2"},
            };
            out.push_back({d.name,
                           "Fibonacci category: one nontrivial simple with tau^2 = 1 + tau",
                           detail::entry_text(d), std::move(e)});
        }

        {
            detail::EntryData d{"ising",
                                {"1", "eps", "sigma"},
                                0,
                                {{1, 1, 0, 1},
                                 {1, 2, 2, 1},
                                 {2, 1, 2, 1},
                                 {2, 2, 0, 1},
                                 {2, 2, 1, 1}},
                                {one, minus_one, std::polar(1.0, pi / 8.0)},
                                std::nullopt};
            CatalogExpected e;
            e.dims = {1.0, 1.0, std::sqrt(2.0)};
            e.category_dim = 4.0;
            e.center = {"1"};
            e.genus_gsd = {3, 10, 36};
            e.derivations = {
                {"dims", "sigma^2 = 1 + eps forces d_sigma = sqrt(2); category dim 1+1+2"},
                {"center", "monodromy of (eps, sigma) is -sqrt(2) and of (sigma, sigma) is 0"},
                {"genus_gsd", "handle class 3*1 + eps powered by hand; agrees with the "
                              "Verlinde sum with D = 2"},
            };
            out.push_back({d.name, "Ising category: three simples with sigma^2 = 1 + eps",
                           detail::entry_text(d), std::move(e)});
        }

        {
            detail::EntryData d{"toric_code",
                                {"1", "e", "m", "f"},
                                0,
                                {{1, 1, 0, 1},
                                 {1, 2, 3, 1},
                                 {1, 3, 2, 1},
                                 {2, 1, 3, 1},
                                 {2, 2, 0, 1},
                                 {2, 3, 1, 1},
                                 {3, 1, 2, 1},
                                 {3, 2, 1, 1},
                                 {3, 3, 0, 1}},
                                {one, one, one, minus_one},
                                std::nullopt};
            CatalogExpected e;
            e.dims = {1.0, 1.0, 1.0, 1.0};
            e.category_dim = 4.0;
            e.center = {"1"};
            e.genus_gsd = {4, 16, 64};
            e.derivations = {
                {"dims", "pointed Z/2 x Z/2 fusion, every simple invertible"},
                {"center", "monodromy of (e, m) is theta_f = -1, and symmetrically for the "
                           "other nontrivial pairs"},
                {"genus_gsd", "handle class 4*1, so gsd(g) = 4^g; agrees with the Verlinde "
                              "sum with all d_i = 1, D = 2"},
            };
            out.push_back({d.name,
                           "toric code: Z/2 x Z/2 pointed fusion with one fermionic simple",
                           detail::entry_text(d), std::move(e)});
        }

        {
            ParsedCategory::BaseRef ref;
            ref.category = "rep_z2";
            ref.embedding = {{"1", "1"}, {"psi", "psi"}};
            detail::EntryData d{"rep_z2_over_rep_z2", {"1", "psi"}, 0, {{1, 1, 0, 1}},
                                {one, one}, ref};
            CatalogExpected e;
            e.dims = {1.0, 1.0};
            e.category_dim = 2.0;
            e.center = {"1", "psi"};
            e.derivations = {
                {"dims", "same ring as rep_z2"},
                {"center", "same monodromy as rep_z2: everything transparent, and the center "
                           "coincides with the embedded base"},
                {"genus_gsd", "not tabulated: over a nontrivial base the genus series needs a "
                              "supplied handle class"},
            };
            out.push_back({d.name,
                           "Rep(Z/2) over itself via the identity embedding; the degenerate "
                           "over-base instance",
                           detail::entry_text(d), std::move(e)});
        }

        return out;
    }();
    return entries;
}

inline const CatalogEntry* catalog_find(const std::string& id) {
    for (const auto& e : builtin_catalog())
        if (e.id == id) return &e;
    return nullptr;
}

/// Entries hold canonical text and load through the ordinary file parser, so
/// the catalog exercises the same code path as user files.
inline ParsedCategory load_catalog_entry(const CatalogEntry& entry) {
    return parse_category_file(entry.category_json);
}

inline ParsedCategory load_catalog_category(const std::string& id) {
    const auto* entry = catalog_find(id);
    if (!entry) throw StructuralError("no catalog entry named '" + id + "'");
    return load_catalog_entry(*entry);
}

/// Resolve a file's base reference against the catalog. Returns nothing when
/// the file has no base reference.
inline std::optional<ParsedCategory> resolve_catalog_base(const ParsedCategory& target) {
    if (!target.base) return std::nullopt;
    const auto* entry = catalog_find(target.base->category);
    if (!entry)
        throw SemanticError("base.category", "base category '" + target.base->category +
                                                 "' is not in the catalog; supply it with "
                                                 "--base <file>");
    return load_catalog_entry(*entry);
}

} // namespace fuscat
