#pragma once

#include <algorithm>
#include <cctype>
#include <complex>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "json.hpp"

#include "fuscat/diagnostics.hpp"
#include "fuscat/fact_homology.hpp"
#include "fuscat/fusion_ring.hpp"
#include "fuscat/ribbon.hpp"

namespace fuscat {

/// Maximum deviation of a twist from unit modulus the parser accepts; the
/// ribbon validator applies the stricter kRibbonTol afterwards.
inline constexpr double kParseTwistTol = 1e-6;

/// Malformed JSON text. Reports the position the tokenizer reached.
class ParseError : public std::runtime_error {
public:
    ParseError(int line, int column, const std::string& message)
        : std::runtime_error("line " + std::to_string(line) + ", column " +
                             std::to_string(column) + ": " + message),
          line_(line), column_(column) {}

    int line() const noexcept { return line_; }
    int column() const noexcept { return column_; }

private:
    int line_;
    int column_;
};

/// Well-formed JSON carrying an invalid value: unknown label, negative
/// multiplicity, and so on. Reports the offending field path.
class SemanticError : public std::runtime_error {
public:
    SemanticError(std::string path, const std::string& message)
        : std::runtime_error("at " + path + ": " + message), path_(std::move(path)) {}

    const std::string& path() const noexcept { return path_; }

private:
    std::string path_;
};

/// A parsed category file: the ring, optional twists, and the optional
/// reference to a base category (resolved later against a second file or the
/// catalog).
struct ParsedCategory {
    struct BaseRef {
        std::string category;
        std::vector<std::pair<std::string, std::string>> embedding; // base label -> target label
    };

    RingPtr ring;
    std::optional<std::vector<std::complex<double>>> twists;
    std::optional<BaseRef> base;

    bool has_twists() const noexcept { return twists.has_value(); }

    RibbonData ribbon() const {
        if (!twists)
            throw SemanticError("twists", "category '" + ring->name() +
                                              "' supplies no twists, which this operation needs");
        return RibbonData{ring, *twists};
    }
};

namespace detail {

using json = nlohmann::ordered_json;

inline std::pair<int, int> line_column(const std::string& text, std::size_t byte) {
    // byte is 1-based, pointing one past the last consumed character.
    std::size_t pos = byte ? byte - 1 : 0;
    pos = std::min(pos, text.size());
    int line = 1, column = 1;
    for (std::size_t i = 0; i < pos; ++i) {
        if (text[i] == '\n') {
            ++line;
            column = 1;
        } else {
            ++column;
        }
    }
    return {line, column};
}

inline json parse_json(const std::string& text) {
    try {
        return json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        auto [line, column] = line_column(text, e.byte);
        std::string reason = e.what();
        // Trim nlohmann's "[json.exception.parse_error.101] parse error at ..." prefix
        // down to the explanatory tail to avoid repeating the location twice.
        if (auto cut = reason.find("]: "); cut != std::string::npos) reason = reason.substr(cut + 3);
        throw ParseError(line, column, reason);
    }
}

inline void require_keys(const json& obj, const std::string& where,
                         std::initializer_list<const char*> allowed) {
    for (const auto& item : obj.items()) {
        bool known = false;
        for (const char* a : allowed)
            if (item.key() == a) {
                known = true;
                break;
            }
        if (!known)
            throw SemanticError(where.empty() ? item.key() : where + "." + item.key(),
                                "unknown field");
    }
}

inline std::string trimmed(const std::string& s) {
    std::size_t b = 0, e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
    return s.substr(b, e - b);
}

} // namespace detail

inline ParsedCategory parse_category_file(const std::string& text) {
    const auto j = detail::parse_json(text);
    if (!j.is_object()) throw SemanticError("$", "expected a JSON object");
    detail::require_keys(j, "", {"name", "simples", "unit", "fusion", "twists", "base"});

    if (!j.contains("name") || !j["name"].is_string())
        throw SemanticError("name", "required string field");
    const std::string name = j["name"].get<std::string>();

    if (!j.contains("simples") || !j["simples"].is_array() || j["simples"].empty())
        throw SemanticError("simples", "required nonempty array of labels");
    std::vector<std::string> simples;
    for (std::size_t i = 0; i < j["simples"].size(); ++i) {
        const auto& s = j["simples"][i];
        if (!s.is_string())
            throw SemanticError("simples[" + std::to_string(i) + "]", "labels must be strings");
        simples.push_back(s.get<std::string>());
    }
    for (std::size_t i = 0; i < simples.size(); ++i)
        for (std::size_t k = i + 1; k < simples.size(); ++k)
            if (simples[i] == simples[k])
                throw SemanticError("simples[" + std::to_string(k) + "]",
                                    "duplicate label '" + simples[k] + "'");

    if (!j.contains("unit") || !j["unit"].is_string())
        throw SemanticError("unit", "required string field");
    const std::string unit_label = j["unit"].get<std::string>();
    const auto unit_it = std::find(simples.begin(), simples.end(), unit_label);
    if (unit_it == simples.end())
        throw SemanticError("unit", "label '" + unit_label + "' is not listed in simples");
    const std::size_t unit_index = std::size_t(unit_it - simples.begin());

    auto ring = std::make_shared<FusionRing>(name, simples, unit_index);
    auto index_of = [&](const std::string& label, const std::string& path) {
        const auto idx = ring->index_of(label);
        if (!idx) throw SemanticError(path, "unknown label '" + label + "'");
        return *idx;
    };

    if (!j.contains("fusion") || !j["fusion"].is_array())
        throw SemanticError("fusion", "required array of [i, j, k, multiplicity] entries");
    std::set<std::tuple<std::size_t, std::size_t, std::size_t>> given;
    for (std::size_t t = 0; t < j["fusion"].size(); ++t) {
        const std::string path = "fusion[" + std::to_string(t) + "]";
        const auto& entry = j["fusion"][t];
        if (!entry.is_array() || entry.size() != 4)
            throw SemanticError(path, "expected [i_label, j_label, k_label, multiplicity]");
        for (int c = 0; c < 3; ++c)
            if (!entry[c].is_string())
                throw SemanticError(path + "[" + std::to_string(c) + "]",
                                    "labels must be strings");
        const std::size_t fi = index_of(entry[0].get<std::string>(), path + "[0]");
        const std::size_t fj = index_of(entry[1].get<std::string>(), path + "[1]");
        const std::size_t fk = index_of(entry[2].get<std::string>(), path + "[2]");
        if (!entry[3].is_number_integer())
            throw SemanticError(path + "[3]", "multiplicity must be an integer");
        const auto mult = entry[3].get<std::int64_t>();
        if (mult < 0)
            throw SemanticError(path, "negative multiplicity at " + path);
        if (mult > std::int64_t(UINT32_MAX))
            throw SemanticError(path + "[3]", "multiplicity out of range");
        if (!given.insert({fi, fj, fk}).second)
            throw SemanticError(path, "duplicate fusion tuple (" + entry[0].get<std::string>() +
                                          ", " + entry[1].get<std::string>() + ", " +
                                          entry[2].get<std::string>() + ")");
        ring->set_N(fi, fj, fk, std::uint32_t(mult));
    }
    // Entries forced by the unit law may be omitted; fill the ones not given
    // explicitly so minimal files (one simple, empty fusion) stay valid.
    for (std::size_t s = 0; s < ring->size(); ++s) {
        if (!given.count({unit_index, s, s})) ring->set_N(unit_index, s, s, 1);
        if (!given.count({s, unit_index, s})) ring->set_N(s, unit_index, s, 1);
    }

    std::optional<std::vector<std::complex<double>>> parsed_twists;
    if (j.contains("twists") && !j["twists"].is_null()) {
        if (!j["twists"].is_object())
            throw SemanticError("twists", "expected an object mapping labels to [re, im]");
        std::vector<std::complex<double>> twists(ring->size());
        std::vector<bool> seen(ring->size(), false);
        for (const auto& item : j["twists"].items()) {
            const std::string path = "twists." + item.key();
            const std::size_t idx = index_of(item.key(), path);
            const auto& v = item.value();
            if (!v.is_array() || v.size() != 2 || !v[0].is_number() || !v[1].is_number())
                throw SemanticError(path, "expected [re, im]");
            const std::complex<double> theta(v[0].get<double>(), v[1].get<double>());
            if (std::abs(std::abs(theta) - 1.0) > kParseTwistTol)
                throw SemanticError(path, "twist modulus deviates from 1 by more than " +
                                              std::to_string(kParseTwistTol));
            if (seen[idx]) throw SemanticError(path, "duplicate twist entry");
            seen[idx] = true;
            twists[idx] = theta;
        }
        for (std::size_t s = 0; s < ring->size(); ++s)
            if (!seen[s])
                throw SemanticError("twists",
                                    "missing entry for simple '" + ring->label(s) + "'");
        parsed_twists = std::move(twists);
    }

    std::optional<ParsedCategory::BaseRef> parsed_base;
    if (j.contains("base") && !j["base"].is_null()) {
        const auto& b = j["base"];
        if (!b.is_object()) throw SemanticError("base", "expected an object");
        detail::require_keys(b, "base", {"category", "embedding"});
        if (!b.contains("category") || !b["category"].is_string())
            throw SemanticError("base.category", "required string field");
        ParsedCategory::BaseRef ref;
        ref.category = b["category"].get<std::string>();
        if (b.contains("embedding")) {
            if (!b["embedding"].is_object())
                throw SemanticError("base.embedding",
                                    "expected an object mapping base labels to target labels");
            for (const auto& item : b["embedding"].items()) {
                const std::string path = "base.embedding." + item.key();
                if (!item.value().is_string())
                    throw SemanticError(path, "target label must be a string");
                const std::string target_label = item.value().get<std::string>();
                index_of(target_label, path); // must be a simple of this file
                ref.embedding.emplace_back(item.key(), target_label);
            }
        }
        parsed_base = std::move(ref);
    }

    return ParsedCategory{std::move(ring), std::move(parsed_twists), std::move(parsed_base)};
}

/// Canonical serialization: fixed key order, full sorted nonzero fusion list,
/// twists in simple order, embedding entries sorted by base label, two-space
/// indentation, trailing newline. parse followed by serialize is the identity
/// on canonical files.
inline std::string serialize_category(const ParsedCategory& cat) {
    using detail::json;
    const auto& ring = *cat.ring;
    json j;
    j["name"] = ring.name();
    j["simples"] = ring.simples();
    j["unit"] = ring.label(ring.unit());
    json fusion = json::array();
    for (std::size_t i = 0; i < ring.size(); ++i)
        for (std::size_t k = 0; k < ring.size(); ++k)
            for (std::size_t l = 0; l < ring.size(); ++l) {
                const auto m = ring.N(i, k, l);
                if (m)
                    fusion.push_back(json::array(
                        {ring.label(i), ring.label(k), ring.label(l), m}));
            }
    j["fusion"] = std::move(fusion);
    if (cat.twists) {
        json tw = json::object();
        for (std::size_t i = 0; i < ring.size(); ++i)
            tw[ring.label(i)] = json::array({(*cat.twists)[i].real(), (*cat.twists)[i].imag()});
        j["twists"] = std::move(tw);
    }
    if (cat.base) {
        json b;
        b["category"] = cat.base->category;
        if (!cat.base->embedding.empty()) {
            auto pairs = cat.base->embedding;
            std::sort(pairs.begin(), pairs.end());
            json emb = json::object();
            for (const auto& [from, to] : pairs) emb[from] = to;
            b["embedding"] = std::move(emb);
        }
        j["base"] = std::move(b);
    }
    return j.dump(2) + "\n";
}

/// One weighted term "label" or "k*label" with k a positive integer.
inline ObjectClass parse_weighted_term(const std::string& term, const RingPtr& ring,
                                       const std::string& path) {
    const std::string t = detail::trimmed(term);
    if (t.empty()) throw SemanticError(path, "empty term");
    std::uint64_t weight = 1;
    std::string label = t;
    if (const auto star = t.find('*'); star != std::string::npos) {
        const std::string head = detail::trimmed(t.substr(0, star));
        label = detail::trimmed(t.substr(star + 1));
        if (head.empty() || !std::all_of(head.begin(), head.end(), [](unsigned char c) {
                return std::isdigit(c);
            }))
            throw SemanticError(path, "weight '" + head + "' is not a positive integer");
        weight = 0;
        for (char c : head) {
            weight = weight * 10 + std::uint64_t(c - '0');
            if (weight > (std::uint64_t(1) << 32))
                throw SemanticError(path, "weight out of range");
        }
        if (weight == 0) throw SemanticError(path, "weight must be positive");
    }
    const auto idx = ring->index_of(label);
    if (!idx) throw SemanticError(path, "unknown label '" + label + "'");
    ObjectClass out(ring);
    out.set_mult(*idx, weight);
    return out;
}

/// A comma list of weighted terms denotes their tensor product:
/// "sigma,2*tau" is sigma (x) 2tau. The empty list is the unit class.
inline ObjectClass parse_class_expr(const std::string& expr, const RingPtr& ring,
                                    const std::string& path = "class") {
    if (detail::trimmed(expr).empty()) throw SemanticError(path, "empty class expression");
    ObjectClass acc = ObjectClass::unit_class(ring);
    std::size_t begin = 0;
    std::size_t part = 0;
    while (begin <= expr.size()) {
        const auto comma = expr.find(',', begin);
        const std::string term =
            expr.substr(begin, comma == std::string::npos ? std::string::npos : comma - begin);
        acc = fuse(acc, parse_weighted_term(term, ring,
                                            path + "[" + std::to_string(part) + "]"));
        if (comma == std::string::npos) break;
        begin = comma + 1;
        ++part;
    }
    return acc;
}

/// A class in JSON form: either an array of weighted-term strings (tensor
/// product, same grammar as the CLI) or an object {label: mult} (direct sum
/// form, the shape --json output uses).
inline ObjectClass parse_class_json(const detail::json& v, const RingPtr& ring,
                                    const std::string& path) {
    if (v.is_array()) {
        ObjectClass acc = ObjectClass::unit_class(ring);
        for (std::size_t i = 0; i < v.size(); ++i) {
            const std::string term_path = path + "[" + std::to_string(i) + "]";
            if (!v[i].is_string()) throw SemanticError(term_path, "expected a term string");
            acc = fuse(acc, parse_weighted_term(v[i].get<std::string>(), ring, term_path));
        }
        return acc;
    }
    if (v.is_object()) {
        ObjectClass out(ring);
        for (const auto& item : v.items()) {
            const std::string entry_path = path + "." + item.key();
            const auto idx = ring->index_of(item.key());
            if (!idx) throw SemanticError(entry_path, "unknown label '" + item.key() + "'");
            if (!item.value().is_number_integer() || item.value().get<std::int64_t>() < 0)
                throw SemanticError(entry_path, "multiplicity must be a nonnegative integer");
            out.set_mult(*idx, item.value().get<std::uint64_t>());
        }
        return out;
    }
    throw SemanticError(path, "expected an array of terms or an object {label: mult}");
}

/// Parse a surface description against the target ring C. Only the two
/// evaluable configurations are accepted; anything else is rejected as
/// unsupported with a description of what is supported.
inline SurfaceSpec parse_surface_spec(const std::string& text, const RingPtr& ring) {
    const auto j = detail::parse_json(text);
    if (!j.is_object()) throw SemanticError("$", "expected a JSON object");
    detail::require_keys(j, "", {"variant", "genus", "defects", "handle", "defect_fpdim"});

    if (!j.contains("variant") || !j["variant"].is_string())
        throw SemanticError("variant", "required string field (\"closed\" or \"cylinder\")");
    const std::string variant = j["variant"].get<std::string>();

    SurfaceSpec spec;
    if (variant == "closed") {
        spec.variant = SurfaceVariant::closed_surface;
    } else if (variant == "cylinder") {
        spec.variant = SurfaceVariant::cylinder_line_defect;
    } else {
        throw UnsupportedError("unsupported surface variant '" + variant +
                               "'; supported configurations: \"closed\" (closed surface with "
                               "point defects), \"cylinder\" (cylinder with one line defect)");
    }

    if (j.contains("genus")) {
        if (!j["genus"].is_number_integer())
            throw SemanticError("genus", "must be an integer");
        const auto g = j["genus"].get<std::int64_t>();
        if (g < 0) throw SemanticError("genus", "genus must be nonnegative");
        if (g > 1000000) throw SemanticError("genus", "genus out of range");
        spec.genus = unsigned(g);
    }

    if (j.contains("defects")) {
        if (!j["defects"].is_array())
            throw SemanticError("defects", "expected an array of defect term lists");
        for (std::size_t i = 0; i < j["defects"].size(); ++i) {
            const std::string path = "defects[" + std::to_string(i) + "]";
            const auto& d = j["defects"][i];
            if (!d.is_array()) throw SemanticError(path, "each defect is an array of terms");
            spec.defects.push_back(parse_class_json(d, ring, path));
        }
    }

    if (j.contains("handle"))
        spec.handle_override = parse_class_json(j["handle"], ring, "handle");

    if (j.contains("defect_fpdim")) {
        if (!j["defect_fpdim"].is_number())
            throw SemanticError("defect_fpdim", "must be a number");
        spec.defect_fpdim = j["defect_fpdim"].get<double>();
        if (!(*spec.defect_fpdim > 0))
            throw SemanticError("defect_fpdim", "must be positive");
    }

    if (spec.variant == SurfaceVariant::cylinder_line_defect) {
        if (spec.genus != 0)
            throw UnsupportedError("the cylinder configuration carries no genus");
        if (!spec.defects.empty())
            throw UnsupportedError("the cylinder configuration carries no point defects; only "
                                   "the single line defect is supported");
        if (spec.handle_override)
            throw UnsupportedError("the cylinder configuration takes no handle class");
        if (!spec.defect_fpdim)
            throw SemanticError("defect_fpdim", "required for the cylinder variant");
    } else if (spec.defect_fpdim) {
        throw SemanticError("defect_fpdim", "only meaningful for the cylinder variant");
    }

    return spec;
}

/// Build the embedding for a parsed target and an optionally supplied parsed
/// base. Resolution: an explicit base wins; a file-level base reference must
/// then agree by name. Without any base, the trivial base is assumed. The
/// simple map comes from the file's base.embedding block when present, and
/// from label-name matching otherwise.
inline BaseEmbedding assemble_embedding(const ParsedCategory& target,
                                        const std::optional<ParsedCategory>& base) {
    if (!base) {
        if (target.base)
            throw SemanticError("base.category",
                                "file refers to base category '" + target.base->category +
                                    "', which was not supplied");
        return over_trivial_base(target.ribbon());
    }

    if (target.base && target.base->category != base->ring->name())
        throw SemanticError("base.category", "file refers to base '" + target.base->category +
                                                 "' but the supplied base is '" +
                                                 base->ring->name() + "'");

    RibbonData base_rd = base->ribbon();
    RibbonData target_rd = target.ribbon();
    const std::size_t nE = base_rd.ring->size();
    std::vector<std::size_t> map(nE, 0);

    if (target.base && !target.base->embedding.empty()) {
        std::vector<bool> seen(nE, false);
        for (const auto& [from, to] : target.base->embedding) {
            const std::string path = "base.embedding." + from;
            const auto e = base_rd.ring->index_of(from);
            if (!e)
                throw SemanticError(path, "label '" + from + "' is not a simple of base '" +
                                              base_rd.ring->name() + "'");
            const auto c = target_rd.ring->index_of(to);
            if (!c)
                throw SemanticError(path, "label '" + to + "' is not a simple of '" +
                                              target_rd.ring->name() + "'");
            if (seen[*e]) throw SemanticError(path, "duplicate entry for '" + from + "'");
            seen[*e] = true;
            map[*e] = *c;
        }
        for (std::size_t e = 0; e < nE; ++e)
            if (!seen[e])
                throw SemanticError("base.embedding", "no image given for base simple '" +
                                                          base_rd.ring->label(e) + "'");
    } else {
        for (std::size_t e = 0; e < nE; ++e) {
            const auto c = target_rd.ring->index_of(base_rd.ring->label(e));
            if (!c)
                throw SemanticError("base.embedding",
                                    "cannot infer the image of base simple '" +
                                        base_rd.ring->label(e) +
                                        "'; add a base.embedding block to the target file");
            map[e] = *c;
        }
    }

    return BaseEmbedding{std::move(base_rd), std::move(target_rd), std::move(map)};
}

} // namespace fuscat
