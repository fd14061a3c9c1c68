// Command-line surface for the fusion-category engine: validation, dimension
// and braiding analysis, internal homs, surface invariants, and the built-in
// catalog. Exit codes: 0 success, 1 semantic or validation failure, 2 syntax
// error in an input file, 3 unsupported surface configuration.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "fuscat/fuscat.hpp"

namespace {

using namespace fuscat;
using nlohmann::ordered_json;

struct Options {
    bool json = false;
    double tol = kTransparencyTol;
    bool force = false;
};

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw StructuralError("cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

std::string fmt10(double x) {
    std::ostringstream os;
    os.precision(10);
    os << x;
    return os.str();
}

ordered_json class_to_json(const ObjectClass& x) {
    ordered_json out = ordered_json::object();
    for (std::size_t i = 0; i < x.ring()->size(); ++i)
        if (x.mults()[i]) out[x.ring()->label(i)] = x.mults()[i];
    return out;
}

ordered_json report_to_json(const ValidationReport& report) {
    ordered_json out;
    out["violations"] = ordered_json::array();
    out["warnings"] = ordered_json::array();
    for (const auto& v : report.violations)
        out["violations"].push_back({{"rule", v.rule}, {"message", v.message}});
    for (const auto& w : report.warnings)
        out["warnings"].push_back({{"rule", w.rule}, {"message", w.message}});
    return out;
}

std::string labels_csv(const RingPtr& ring, const std::vector<std::size_t>& indices) {
    std::string out;
    for (const auto i : indices) {
        if (!out.empty()) out += ", ";
        out += ring->label(i);
    }
    return out;
}

ordered_json labels_json(const RingPtr& ring, const std::vector<std::size_t>& indices) {
    ordered_json out = ordered_json::array();
    for (const auto i : indices) out.push_back(ring->label(i));
    return out;
}

ParsedCategory load_category(const std::string& path) {
    return parse_category_file(read_file(path));
}

void require_valid(const ParsedCategory& cat) {
    const auto report = validate_fusion_ring(*cat.ring);
    if (!report.ok())
        throw StructuralError("category '" + cat.ring->name() + "' fails validation:\n" +
                              report.to_string());
}

/// Resolution chain for the base: an explicit --base file wins, then a
/// file-level base reference resolved against the catalog, then the trivial
/// base.
std::optional<ParsedCategory> resolve_base(const ParsedCategory& target,
                                           const std::string& base_path) {
    if (!base_path.empty()) return load_category(base_path);
    return resolve_catalog_base(target);
}

BaseEmbedding make_embedding(const ParsedCategory& target, const std::string& base_path) {
    require_valid(target);
    auto base = resolve_base(target, base_path);
    if (base) require_valid(*base);
    return assemble_embedding(target, base);
}

int cmd_validate(const Options& opt, const std::string& file, const std::string& base_path) {
    const auto cat = load_category(file);
    const auto ring_report = validate_fusion_ring(*cat.ring);

    std::optional<ValidationReport> twist_report;
    if (cat.has_twists() && ring_report.ok()) twist_report = validate_ribbon(cat.ribbon());

    std::optional<ValidationReport> embedding_report;
    if (ring_report.ok() && (!base_path.empty() || cat.base)) {
        auto base = resolve_base(cat, base_path);
        if (base) {
            require_valid(*base);
            embedding_report = validate_embedding(assemble_embedding(cat, base));
        }
    }

    bool ok = ring_report.ok() && (!twist_report || twist_report->ok()) &&
              (!embedding_report || embedding_report->ok());

    if (opt.json) {
        ordered_json out;
        out["ring"] = report_to_json(ring_report);
        if (twist_report) out["twists"] = report_to_json(*twist_report);
        if (embedding_report) out["embedding"] = report_to_json(*embedding_report);
        out["ok"] = ok;
        std::cout << out.dump(2) << "\n";
    } else {
        std::cout << "ring: " << ring_report.to_string();
        if (twist_report) std::cout << "twists: " << twist_report->to_string();
        if (embedding_report) std::cout << "embedding: " << embedding_report->to_string();
    }
    return ok ? 0 : 1;
}

int cmd_fpdim(const Options& opt, const std::string& file) {
    const auto cat = load_category(file);
    require_valid(cat);
    const auto d = fpdims(cat.ring);
    if (opt.json) {
        ordered_json out;
        out["dims"] = ordered_json::object();
        for (std::size_t i = 0; i < cat.ring->size(); ++i)
            out["dims"][cat.ring->label(i)] = d.dims[i];
        out["category_dim"] = d.category_dim;
        std::cout << out.dump(2) << "\n";
    } else {
        for (std::size_t i = 0; i < cat.ring->size(); ++i)
            std::cout << cat.ring->label(i) << ": " << fmt10(d.dims[i]) << "\n";
        std::cout << "category_dim: " << fmt10(d.category_dim) << "\n";
    }
    return 0;
}

int cmd_center(const Options& opt, const std::string& file) {
    const auto cat = load_category(file);
    require_valid(cat);
    const auto d = fpdims(cat.ring);
    const auto S = monodromy(cat.ribbon(), d);
    const auto center = mueger_center(S, d, opt.tol);
    if (opt.json) {
        ordered_json out;
        out["center"] = labels_json(cat.ring, center);
        std::cout << out.dump(2) << "\n";
    } else {
        std::cout << "center: " << labels_csv(cat.ring, center) << "\n";
    }
    return 0;
}

int cmd_centralizer(const Options& opt, const std::string& file, const std::string& subset_csv) {
    const auto cat = load_category(file);
    require_valid(cat);

    std::vector<std::size_t> subset;
    std::stringstream ss(subset_csv);
    std::string item;
    while (std::getline(ss, item, ',')) {
        const auto label = detail::trimmed(item);
        if (label.empty()) continue;
        const auto idx = cat.ring->index_of(label);
        if (!idx) throw SemanticError("subset", "unknown label '" + label + "'");
        subset.push_back(*idx);
    }
    for (const auto i : subset) {
        const auto di = dual_of(*cat.ring, i);
        if (std::find(subset.begin(), subset.end(), di) == subset.end()) {
            std::cerr << "warning: subset is not closed under duals (" << cat.ring->label(i)
                      << " is listed, its dual " << cat.ring->label(di) << " is not)\n";
            break;
        }
    }

    const auto d = fpdims(cat.ring);
    const auto S = monodromy(cat.ribbon(), d);
    const auto result = centralizer(S, d, subset, opt.tol);
    if (opt.json) {
        ordered_json out;
        out["centralizer"] = labels_json(cat.ring, result);
        std::cout << out.dump(2) << "\n";
    } else {
        std::cout << "centralizer: " << labels_csv(cat.ring, result) << "\n";
    }
    return 0;
}

int cmd_classify(const Options& opt, const std::string& file, const std::string& base_path) {
    const auto cat = load_category(file);
    const auto emb = make_embedding(cat, base_path);
    const auto cls = classify(emb, opt.tol);
    if (opt.json) {
        ordered_json out;
        out["is_symmetric"] = cls.is_symmetric;
        out["is_over_base"] = cls.is_over_base;
        out["base_centralizer_equals_base"] = cls.base_centralizer_equals_base;
        out["is_umtc_over_E"] = cls.is_umtc_over_E;
        out["transparent_simples"] = labels_json(cat.ring, cls.transparent_simples);
        std::cout << out.dump(2) << "\n";
    } else {
        std::cout << "is_symmetric: " << (cls.is_symmetric ? "true" : "false") << "\n"
                  << "is_over_base: " << (cls.is_over_base ? "true" : "false") << "\n"
                  << "base_centralizer_equals_base: "
                  << (cls.base_centralizer_equals_base ? "true" : "false") << "\n"
                  << "is_umtc_over_E: " << (cls.is_umtc_over_E ? "true" : "false") << "\n"
                  << "transparent_simples: " << labels_csv(cat.ring, cls.transparent_simples)
                  << "\n";
    }
    return 0;
}

int cmd_hom(const Options& opt, const std::string& file, const std::string& base_path,
            const std::string& from_expr, const std::string& to_expr) {
    const auto cat = load_category(file);
    const auto emb = make_embedding(cat, base_path);
    const auto m = parse_class_expr(from_expr, emb.target.ring, "--from");
    const auto n = parse_class_expr(to_expr, emb.target.ring, "--to");
    const auto result = enriched_hom(emb, m, n);

    const auto d_C = fpdims(emb.target.ring);
    const auto d_E = fpdims(emb.base.ring);
    const bool bound_ok = hom_fpdim_bound_ok(emb, m, n, d_C, d_E);
    if (!bound_ok)
        std::cerr << "warning: FPdim of the internal hom exceeds FPdim(m) * FPdim(n); the "
                     "heuristic bound does not hold for this input\n";

    if (opt.json) {
        ordered_json out;
        out["hom"] = class_to_json(result.base_class);
        out["hom_dim"] = result.total_dim_check;
        out["fpdim_bound_ok"] = bound_ok;
        std::cout << out.dump(2) << "\n";
    } else {
        std::cout << "[" << format_class(m) << ", " << format_class(n)
                  << "]_E = " << format_class(result.base_class) << "\n"
                  << "dim Hom_C = " << result.total_dim_check << "\n";
    }
    return 0;
}

int cmd_fh(const Options& opt, const std::string& file, const std::string& base_path,
           const std::string& surface_path, std::optional<unsigned> genus,
           const std::vector<std::string>& defect_exprs) {
    const auto cat = load_category(file);
    const auto emb = make_embedding(cat, base_path);

    SurfaceSpec spec;
    if (!surface_path.empty()) {
        if (genus || !defect_exprs.empty())
            throw StructuralError("--surface excludes the inline --genus/--defect options");
        spec = parse_surface_spec(read_file(surface_path), emb.target.ring);
    } else {
        spec.variant = SurfaceVariant::closed_surface;
        spec.genus = genus.value_or(0);
        for (std::size_t i = 0; i < defect_exprs.size(); ++i)
            spec.defects.push_back(parse_class_expr(
                defect_exprs[i], emb.target.ring, "--defect[" + std::to_string(i) + "]"));
    }

    if (spec.variant == SurfaceVariant::cylinder_line_defect) {
        const auto d_C = fpdims(emb.target.ring);
        const auto d_E = fpdims(emb.base.ring);
        const auto report = fh_cylinder_check(emb, spec, d_C, d_E);
        if (opt.json) {
            ordered_json out;
            out["fpdim_condition"] = report.dim_condition_holds;
            out["defect_fpdim"] = report.defect_fpdim;
            out["category_fpdim"] = report.category_fpdim;
            out["conclusion"] = report.conclusion;
            std::cout << out.dump(2) << "\n";
        } else {
            std::cout << report.to_string();
        }
        return 0;
    }

    const auto result = fh_closed_surface(emb, spec, opt.tol, opt.force);
    if (opt.json) {
        ordered_json out;
        out["invariant"] = class_to_json(result.invariant_class);
        out["gsd"] = result.gsd;
        out["log"] = result.derivation_log;
        std::cout << out.dump(2) << "\n";
    } else {
        for (const auto& line : result.derivation_log) std::cout << line << "\n";
        std::cout << "invariant: " << format_class(result.invariant_class) << "\n"
                  << "gsd: " << result.gsd << "\n";
    }
    return 0;
}

int cmd_morita(const Options& opt, const std::string& file_c, const std::string& file_d,
               const std::string& base_path) {
    const auto cat_c = load_category(file_c);
    const auto cat_d = load_category(file_d);
    const auto emb_c = make_embedding(cat_c, base_path);
    const auto emb_d = make_embedding(cat_d, base_path);
    const auto d_C = fpdims(emb_c.target.ring);
    const auto d_D = fpdims(emb_d.target.ring);
    const auto d_E = fpdims(emb_c.base.ring);
    const auto report = morita_necessary(emb_c, emb_d, d_C, d_D, d_E);
    if (opt.json) {
        ordered_json out;
        out["fpdim_equal"] = report.fpdim_equal;
        out["center_dim_equal"] = report.center_dim_equal;
        out["regular_dim_equal"] = report.regular_dim_equal;
        out["possibly_equivalent"] = report.possibly_equivalent();
        out["verdict"] = report.verdict;
        std::cout << out.dump(2) << "\n";
    } else {
        std::cout << report.to_string();
    }
    return 0;
}

int cmd_catalog_list(const Options& opt) {
    if (opt.json) {
        ordered_json out = ordered_json::array();
        for (const auto& e : builtin_catalog()) {
            ordered_json item;
            item["id"] = e.id;
            item["simples"] = load_catalog_entry(e).ring->size();
            item["description"] = e.description;
            out.push_back(std::move(item));
        }
        std::cout << out.dump(2) << "\n";
    } else {
        for (const auto& e : builtin_catalog())
            std::cout << e.id << "  (" << load_catalog_entry(e).ring->size()
                      << " simples)  " << e.description << "\n";
    }
    return 0;
}

int cmd_catalog_show(const Options& opt, const std::string& id) {
    const auto* entry = catalog_find(id);
    if (!entry) throw StructuralError("no catalog entry named '" + id + "'");
    if (opt.json) {
        ordered_json out;
        out["id"] = entry->id;
        out["description"] = entry->description;
        out["category"] = ordered_json::parse(entry->category_json);
        ordered_json expected;
        expected["dims"] = entry->expected.dims;
        expected["category_dim"] = entry->expected.category_dim;
        expected["center"] = entry->expected.center;
        expected["genus_gsd"] = entry->expected.genus_gsd;
        expected["derivations"] = entry->expected.derivations;
        out["expected"] = std::move(expected);
        std::cout << out.dump(2) << "\n";
    } else {
        std::cout << entry->category_json;
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"skeletal fusion-category engine: validation, classification over a base, "
                 "and surface invariants"};
    app.require_subcommand(1);

    Options opt;
    app.add_flag("--json", opt.json, "emit machine-readable JSON");
    app.add_option("--tol", opt.tol, "transparency tolerance (default 1e-6)")
        ->check(CLI::PositiveNumber);
    app.add_flag("--force", opt.force, "bypass the anomaly-free gate (logged warning)");

    std::string file, base_path, subset_csv, from_expr, to_expr, surface_path, file_d, show_id;
    std::optional<unsigned> genus;
    std::vector<std::string> defect_exprs;
    int rc = 0;

    // Let the global flags (--json, --tol, --force) appear after a subcommand.
    const auto add_sub = [](CLI::App& parent, const std::string& name, const std::string& desc) {
        auto* sub = parent.add_subcommand(name, desc);
        sub->fallthrough();
        return sub;
    };

    auto* validate = add_sub(app, "validate", "check a category file's axioms");
    validate->add_option("file", file)->required();
    validate->add_option("--base", base_path, "base category file for the embedding checks");
    validate->callback([&] { rc = cmd_validate(opt, file, base_path); });

    auto* fpdim = add_sub(app, "fpdim", "Frobenius-Perron dimensions");
    fpdim->add_option("file", file)->required();
    fpdim->callback([&] { rc = cmd_fpdim(opt, file); });

    auto* center = add_sub(app, "center", "Mueger center (transparent simples)");
    center->add_option("file", file)->required();
    center->callback([&] { rc = cmd_center(opt, file); });

    auto* central = add_sub(app, "centralizer", "centralizer of a subset of simples");
    central->add_option("file", file)->required();
    central->add_option("--subset", subset_csv, "comma-separated labels")->required();
    central->callback([&] { rc = cmd_centralizer(opt, file, subset_csv); });

    auto* classify_cmd = add_sub(app, "classify", "position relative to the base");
    classify_cmd->add_option("file", file)->required();
    classify_cmd->add_option("--base", base_path, "base category file");
    classify_cmd->callback([&] { rc = cmd_classify(opt, file, base_path); });

    auto* hom = add_sub(app, "hom", "internal hom [m, n] valued in the base");
    hom->add_option("file", file)->required();
    hom->add_option("--base", base_path, "base category file");
    hom->add_option("--from", from_expr, "source class (comma list = tensor product)")
        ->required();
    hom->add_option("--to", to_expr, "target class")->required();
    hom->callback([&] { rc = cmd_hom(opt, file, base_path, from_expr, to_expr); });

    auto* fh = add_sub(app, "fh", "surface invariant and ground-state degeneracy");
    fh->add_option("file", file)->required();
    fh->add_option("--base", base_path, "base category file");
    fh->add_option("--surface", surface_path, "surface spec file");
    fh->add_option("--genus", genus, "genus for an inline closed surface");
    fh->add_option("--defect", defect_exprs, "point defect class; repeatable");
    fh->callback([&] { rc = cmd_fh(opt, file, base_path, surface_path, genus, defect_exprs); });

    auto* morita = add_sub(app, "morita", "necessary conditions for Morita equivalence");
    morita->add_option("file_c", file)->required();
    morita->add_option("file_d", file_d)->required();
    morita->add_option("--base", base_path, "shared base category file");
    morita->callback([&] { rc = cmd_morita(opt, file, file_d, base_path); });

    auto* catalog = add_sub(app, "catalog", "built-in examples");
    catalog->require_subcommand(1);
    auto* list = add_sub(*catalog, "list", "list entries");
    list->callback([&] { rc = cmd_catalog_list(opt); });
    auto* show = add_sub(*catalog, "show", "print one entry's category file");
    show->add_option("id", show_id)->required();
    show->callback([&] { rc = cmd_catalog_show(opt, show_id); });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    } catch (const fuscat::ParseError& e) {
        std::cerr << "syntax error: " << e.what() << "\n";
        return 2;
    } catch (const fuscat::UnsupportedError& e) {
        std::cerr << "unsupported: " << e.what() << "\n";
        return 3;
    } catch (const fuscat::AnomalyGateError& e) {
        std::cerr << "rejected: " << e.what() << "\n"
                  << "rerun with --force to evaluate outside the proven regime\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return rc;
}
