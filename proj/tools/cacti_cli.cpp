// Command line front end: load presentations, run the axiom and identity
// checkers, compute cohomology, verify induced morphisms, and emit
// deterministic reports.  Exit codes: 0 = all checks pass, 1 = a mathematical
// check failed, 2 = usage, IO or parse problem.

#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "cacti/catalog.hpp"
#include "cacti/identities.hpp"
#include "cacti/io.hpp"
#include "cacti/module_algebra.hpp"

using namespace cacti;

namespace {

constexpr const char* kVersion = "0.1.0";

struct CommonOpts {
    std::string field;
    std::string format = "text";
    int max_ext = 4;
    int max_q = 3;
    int samples = 100;
    std::uint64_t seed = 0;
    bool seed_set = false;
};

std::optional<Field> parse_field(const std::string& s) {
    if (s.empty()) return std::nullopt;
    if (s == "QQ" || s == "Q") return Field::rationals();
    std::string digits = s;
    if (digits.rfind("F_", 0) == 0) digits = digits.substr(2);
    else if (digits.rfind("p=", 0) == 0) digits = digits.substr(2);
    return Field::prime(std::stol(digits));
}

std::string header(const std::string& command, const std::string& config) {
    return "# cacti " + std::string(kVersion) + "\n# command: " + command +
           (config.empty() ? "" : " " + config) + "\n";
}

/// reports carry the file's basename so they are stable across checkouts
std::string base_name(const std::string& path) {
    auto slash = path.find_last_of('/');
    return slash == std::string::npos ? path : path.substr(slash + 1);
}

void print_report(const AxiomReport& rep, const std::string& format) {
    if (format == "structured") std::cout << io::report_json(rep).dump(2) << "\n";
    else std::cout << rep.str();
}

int finish(const AxiomReport& rep, const std::string& format) {
    print_report(rep, format);
    bool ok = rep.all_passed();
    std::cout << "result: " << (ok ? "PASS" : "FAIL") << "\n";
    return ok ? 0 : 1;
}

BialgebraPresentation load_bialgebra_opt(const std::string& path, const std::string& field) {
    BialgebraPresentation P = io::load_bialgebra(path);
    if (auto f = parse_field(field)) P = io::field_cast(P, *f);
    return P;
}

AlgebraPresentation load_algebra_opt(const std::string& path, const std::string& field) {
    AlgebraPresentation P = io::load_algebra(path);
    if (auto f = parse_field(field)) P = io::field_cast(P, *f);
    return P;
}

void check_cobar_cap(int dim_v, int max_ext) {
    double size = 1;
    for (int i = 0; i < max_ext + 1; ++i) size *= dim_v;
    if (size > 1e7)
        throw UnsupportedParams("(dim V)^(max_ext+1) exceeds 10^7; lower --max-ext");
}

int cmd_check(const std::string& file, const std::string& kind, const CommonOpts& opts) {
    if (kind == "bialgebra") {
        BialgebraPresentation P = load_bialgebra_opt(file, opts.field);
        std::cout << header("check", "kind=bialgebra file=" + base_name(file) + " field=" + P.field.str());
        std::cout << "presentation: " << P.name << " (dim " << P.dim() << ")\n";
        return finish(check_axioms(P), opts.format);
    }
    if (kind == "algebra") {
        AlgebraPresentation P = load_algebra_opt(file, opts.field);
        std::cout << header("check", "kind=algebra file=" + base_name(file) + " field=" + P.field.str());
        std::cout << "presentation: " << P.name << " (dim " << P.dim() << ")\n";
        return finish(check_axioms(P), opts.format);
    }
    if (kind == "action") {
        ActionMap act = io::load_action(file);
        std::cout << header("check", "kind=action file=" + base_name(file) + " field=" + act.A->field.str());
        std::cout << "action: " << act.H->name << " on " << act.A->name << "\n";
        AxiomReport rep = check_axioms(*act.H);
        AxiomReport repA = check_axioms(*act.A);
        for (auto& c : repA.checks) rep.checks.push_back(std::move(c));
        AxiomReport repAct = check_module_algebra(act);
        for (auto& c : repAct.checks) rep.checks.push_back(std::move(c));
        return finish(rep, opts.format);
    }
    if (kind == "morphism") {
        MorphismMatrix f = io::load_morphism(file);
        std::cout << header("check", "kind=morphism file=" + base_name(file));
        std::cout << "morphism: " << f.source->name << " -> " << f.target->name << "\n";
        return finish(check_bialgebra_morphism(f), opts.format);
    }
    throw CLI::ValidationError("unknown kind '" + kind + "'");
}

int cmd_cobar_cohomology(const std::string& file, const CommonOpts& opts, bool dump_matrices) {
    BialgebraPresentation P = load_bialgebra_opt(file, opts.field);
    std::cout << header("cobar-cohomology",
                        "file=" + base_name(file) + " field=" + P.field.str() + " max-ext=" + std::to_string(opts.max_ext));
    auto Hp = std::make_shared<const BialgebraPresentation>(P);
    auto K = std::make_shared<const CounitKernel>(counit_kernel(Hp));
    check_cobar_cap(K->dim(), opts.max_ext);
    std::cout << "complex: Omega(" << P.name << "), dim V = " << K->dim() << "\n";

    AxiomReport dsq = check_d_squared(K, std::min(opts.max_ext + 1, 4));
    if (!dsq.all_passed()) {
        std::cout << dsq.str();
        std::cout << "result: FAIL\n";
        return 1;
    }

    CobarComplex C{K};
    BettiTable t = betti_table(C, 1, opts.max_ext);
    t.complex_id = "Omega(" + P.name + ")";
    if (opts.format == "structured") {
        ordered_json j;
        j["complex"] = t.complex_id;
        j["rows"] = io::betti_json(t);
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << io::betti_text(t);
    }
    for (const auto& row : t.rows) {
        if (row.betti <= 0 || row.lower_bound_only) continue;
        auto reps = representatives(C, row.p, row.q);
        std::cout << "H^(" << row.p << "," << row.q << ") representatives:\n";
        for (std::size_t i = 0; i < reps.size() && i < 8; ++i)
            std::cout << "  " << render_element(reps[i]) << "\n";
    }
    if (dump_matrices) {
        for (int q = 1; q <= opts.max_ext; ++q)
            for (long p : C.internal_degrees(q)) {
                std::cout << "matrix d: (" << p << "," << q << ") -> (" << p << "," << q + 1 << ")\n";
                std::cout << io::matrix_triplets(differential_matrix(C, p, q));
            }
    }
    std::cout << "result: PASS\n";
    return 0;
}

int cmd_hochschild_cohomology(const std::string& file, const CommonOpts& opts, bool dump_matrices) {
    AlgebraPresentation P = load_algebra_opt(file, opts.field);
    std::cout << header("hochschild-cohomology",
                        "file=" + base_name(file) + " field=" + P.field.str() + " max-q=" + std::to_string(opts.max_q));
    AxiomReport alg = check_axioms(P);
    if (!alg.all_passed()) {
        std::cout << alg.str();
        std::cout << "result: FAIL\n";
        return 1;
    }
    auto Ap = std::make_shared<const AlgebraPresentation>(P);
    HochschildComplex C{Ap};
    C.check_cap(opts.max_q + 1);
    std::cout << "complex: C(" << P.name << "), dim A = " << P.dim() << "\n";
    BettiTable t = betti_table(C, 0, opts.max_q);
    t.complex_id = "C(" + P.name + ")";
    if (opts.format == "structured") {
        ordered_json j;
        j["complex"] = t.complex_id;
        j["rows"] = io::betti_json(t);
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << io::betti_text(t);
    }
    for (const auto& row : t.rows) {
        if (row.betti <= 0 || row.lower_bound_only || row.q > 2) continue;
        auto reps = representatives(C, row.p, row.q);
        std::cout << "HH^(" << row.p << "," << row.q << ") representatives:\n";
        for (std::size_t i = 0; i < reps.size() && i < 8; ++i)
            std::cout << "  " << C.render(reps[i]) << "\n";
    }
    if (dump_matrices) {
        for (int q = 0; q <= opts.max_q; ++q)
            for (long p : C.internal_degrees(q)) {
                std::cout << "matrix d: (" << p << "," << q << ") -> (" << p << "," << q + 1 << ")\n";
                std::cout << io::matrix_triplets(differential_matrix(C, p, q));
            }
    }
    std::cout << "result: PASS\n";
    return 0;
}

int cmd_identities(const std::string& file, const std::string& side, const CommonOpts& opts) {
    if (!opts.seed_set) throw CLI::ValidationError("--seed is mandatory for sampled commands");
    if (side == "cobar") {
        BialgebraPresentation P = load_bialgebra_opt(file, opts.field);
        std::cout << header("identities", "side=cobar file=" + base_name(file) + " field=" + P.field.str() +
                                              " samples=" + std::to_string(opts.samples) +
                                              " seed=" + std::to_string(opts.seed) +
                                              " max-ext=" + std::to_string(opts.max_ext));
        auto K = std::make_shared<const CounitKernel>(
            counit_kernel(std::make_shared<const BialgebraPresentation>(P)));
        CobarSide s{K, opts.max_ext};
        return finish(check_all_identities(s, opts.samples, opts.seed, opts.max_ext), opts.format);
    }
    if (side == "hochschild") {
        AlgebraPresentation P = load_algebra_opt(file, opts.field);
        std::cout << header("identities", "side=hochschild file=" + base_name(file) + " field=" + P.field.str() +
                                              " samples=" + std::to_string(opts.samples) +
                                              " seed=" + std::to_string(opts.seed) +
                                              " max-q=" + std::to_string(opts.max_q));
        auto Ap = std::make_shared<const AlgebraPresentation>(P);
        return finish(well_graded_report(Ap, opts.max_q, opts.samples, opts.seed), opts.format);
    }
    throw CLI::ValidationError("side must be cobar or hochschild");
}

int cmd_induced(const std::string& file, const CommonOpts& opts, bool verify, int image_cap) {
    if (!opts.seed_set && verify) throw CLI::ValidationError("--seed is mandatory for --verify");
    ActionMap act = io::load_action(file);
    std::cout << header("induced", "file=" + base_name(file) + " verify=" + (verify ? "yes" : "no") +
                                       " image=" + std::to_string(image_cap) +
                                       (verify ? " samples=" + std::to_string(opts.samples) +
                                                     " seed=" + std::to_string(opts.seed)
                                               : ""));
    std::cout << "action: " << act.H->name << " on " << act.A->name << "\n";
    AxiomReport rep = check_module_algebra(act);
    if (!rep.all_passed()) {
        print_report(rep, opts.format);
        std::cout << "result: FAIL\n";
        return 1;
    }
    std::cout << "module-algebra axioms: pass\n";
    auto K = std::make_shared<const CounitKernel>(counit_kernel(act.H));

    if (verify) {
        AxiomReport v = verify_cacti_morphism(act, K, std::min(opts.max_ext, 4), opts.samples, opts.seed);
        print_report(v, opts.format);
        if (!v.all_passed()) {
            std::cout << "result: FAIL\n";
            return 1;
        }
    }

    if (image_cap > 0) {
        check_cobar_cap(K->dim(), image_cap);
        CobarComplex CC{K};
        HochschildComplex HC{act.A};
        for (int n = 1; n <= image_cap; ++n) {
            for (long p : CC.internal_degrees(n)) {
                auto reps = representatives(CC, p, n);
                // dimension of the image inside HH^{p,n}(A)
                auto tgt = HC.basis(p, n);
                SparseMatrix din = n > 0 ? differential_matrix(HC, p, n - 1)
                                         : SparseMatrix(static_cast<int>(tgt.size()), 0, act.A->field);
                Echelon image_rows = rref(din.transpose());
                SparseMatrix span(static_cast<int>(reps.size()), static_cast<int>(tgt.size()), act.A->field);
                for (std::size_t i = 0; i < reps.size(); ++i) {
                    SumCochain img = induced(act, *K, reps[i]);
                    span.row_data[i] = image_rows.reduce(HC.to_vec(img, tgt));
                }
                int image_dim = rank(span);
                std::cout << "n=" << n << " p=" << p << ": dim H^n(Omega H) = " << reps.size()
                          << ", image dim in HH^n(A) = " << image_dim << "\n";
                if (n == 2) {
                    for (const auto& r : reps) {
                        SumCochain img = induced(act, *K, r);
                        std::cout << "  image of " << render_element(r) << ":\n    " << HC.render(img)
                                  << "\n";
                        bool cocycle = HC.d(img).is_zero();
                        std::cout << "    coboundary of image: " << (cocycle ? "closed" : "NOT CLOSED")
                                  << "\n";
                        CohomologyClass<HochschildComplex> cls{img, p, 2, false, std::nullopt};
                        auto b = class_bracket(HC, cls, cls);
                        std::cout << "    self bracket class: " << (b.zero_class ? "zero" : "nonzero")
                                  << "\n";
                    }
                }
            }
        }
    }
    std::cout << "result: PASS\n";
    return 0;
}

int cmd_dual(const std::string& file, const CommonOpts& opts, const std::string& out_path) {
    BialgebraPresentation P = load_bialgebra_opt(file, opts.field);
    std::cout << header("dual", "file=" + base_name(file) + " field=" + P.field.str());
    BialgebraPresentation D = dual_bialgebra(P);
    std::cout << "dual: " << D.name << " (dim " << D.dim() << ")\n";
    AxiomReport rep = check_axioms(D);
    if (!out_path.empty()) {
        std::ofstream out(out_path);
        out << io::bialgebra_to_json(D).dump(2) << "\n";
        std::cout << "written: " << out_path << "\n";
    } else if (opts.format == "structured") {
        std::cout << io::bialgebra_to_json(D).dump(2) << "\n";
    }
    return finish(rep, opts.format);
}

int cmd_extract(const std::string& file, const CommonOpts& opts) {
    BialgebraPresentation P = load_bialgebra_opt(file, opts.field);
    std::cout << header("extract", "file=" + base_name(file) + " field=" + P.field.str());
    auto Hp = std::make_shared<const BialgebraPresentation>(P);
    auto K = std::make_shared<const CounitKernel>(counit_kernel(Hp));
    AxiomReport dsq = check_d_squared(K, 3);
    if (!dsq.all_passed()) {
        std::cout << dsq.str();
        std::cout << "input rejected: the cobar differential does not square to zero\n";
        std::cout << "result: FAIL\n";
        return 1;
    }
    BialgebraPresentation R = extract_bialgebra(cobar_shaped_data(*K));
    R.name = P.name;
    bool match = presentations_equal(P, R);
    std::cout << "extracted bialgebra from the cacti structure on Omega(" << P.name << ")\n";
    std::cout << "round trip structure constants: " << (match ? "exact match" : "MISMATCH") << "\n";
    std::cout << "result: " << (match ? "PASS" : "FAIL") << "\n";
    return match ? 0 : 1;
}

int cmd_lift(const std::string& file, const CommonOpts& opts) {
    if (!opts.seed_set) throw CLI::ValidationError("--seed is mandatory for sampled commands");
    MorphismMatrix f = io::load_morphism(file);
    std::cout << header("lift", "file=" + base_name(file) + " samples=" + std::to_string(opts.samples) +
                                    " seed=" + std::to_string(opts.seed) +
                                    " max-ext=" + std::to_string(opts.max_ext));
    AxiomReport base = check_bialgebra_morphism(f);
    if (!base.all_passed()) {
        print_report(base, opts.format);
        std::cout << "result: FAIL\n";
        return 1;
    }
    std::cout << "bialgebra morphism axioms: pass\n";
    auto [lift, rep] = lift_bialgebra_morphism(f, opts.max_ext, opts.samples, opts.seed);
    (void)lift;
    return finish(rep, opts.format);
}

int cmd_skew_cocycle(const std::string& file, const CommonOpts& opts) {
    auto [A, chain] = io::load_skew_chain(file);
    std::cout << header("skew-cocycle", "file=" + base_name(file) + " field=" + A->field.str());
    std::cout << "algebra: " << A->name << ", chain length " << chain.length() << "\n";
    AxiomReport inv = check_skew_chain(*A, chain);
    if (!inv.all_passed()) {
        print_report(inv, opts.format);
        std::cout << "result: FAIL\n";
        return 1;
    }
    SkewCocycleResult res = skew_cocycle(A, chain);
    std::cout << "chain invariants: pass\n";
    std::cout << "compatibility: "
              << (res.compatible ? "compatible (g_1 = id, h_i = g_{i+1}, h_n = id)"
                                 : "INCOMPATIBLE (" + res.incompatibility + ")")
              << "\n";
    std::cout << "cochain f: " << render_cochain(res.f) << "\n";
    if (opts.format == "structured") std::cout << io::cochain_to_json(res.f).dump(2) << "\n";
    Cochain df = hdiff_external(res.f);
    bool cocycle = df.is_zero();
    std::cout << "coboundary of f: " << (cocycle ? "0" : render_cochain(df)) << "\n";
    std::cout << "result: " << (cocycle ? "PASS" : "FAIL") << "\n";
    return cocycle ? 0 : 1;
}

int cmd_catalog(const std::string& id, const CommonOpts& opts, const std::string& out_path) {
    Field f = parse_field(opts.field).value_or(Field::rationals());
    CatalogEntry e = make_example(id, f);
    ordered_json j = e.bialgebra ? io::bialgebra_to_json(*e.bialgebra) : io::algebra_core_to_json(*e.algebra);
    if (!out_path.empty()) {
        std::ofstream out(out_path);
        out << j.dump(2) << "\n";
        std::cout << "written: " << out_path << "\n";
    } else {
        std::cout << j.dump(2) << "\n";
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact cobar / Hochschild cacti-algebra engine"};
    app.set_version_flag("--version", std::string("cacti ") + kVersion);
    app.require_subcommand(1);

    CommonOpts opts;
    std::string file, kind = "bialgebra", side = "cobar", out_path, catalog_id;
    bool verify = false, dump_matrices = false;
    int image_cap = 0;

    auto add_common = [&](CLI::App* sub, bool sampled) {
        sub->add_option("--field", opts.field, "field override: QQ or a prime p");
        sub->add_option("--format", opts.format, "text or structured")
            ->check(CLI::IsMember({"text", "structured"}));
        sub->add_option("--max-ext", opts.max_ext, "external degree cap");
        sub->add_option("--max-q", opts.max_q, "cochain arity cap");
        if (sampled) {
            sub->add_option("--samples", opts.samples, "sample count");
            sub->add_option("--seed", opts.seed, "RNG seed (mandatory for sampled commands)")
                ->each([&](const std::string&) { opts.seed_set = true; });
        }
    };

    auto* c_check = app.add_subcommand("check", "run the axiom checker on a presentation file");
    c_check->add_option("file", file)->required();
    c_check->add_option("--kind", kind, "bialgebra | algebra | action | morphism")
        ->check(CLI::IsMember({"bialgebra", "algebra", "action", "morphism"}));
    add_common(c_check, false);

    auto* c_cobar = app.add_subcommand("cobar-cohomology", "Betti table of Omega(H)");
    c_cobar->add_option("file", file)->required();
    c_cobar->add_flag("--matrices", dump_matrices, "dump differential matrices as triplets");
    add_common(c_cobar, false);

    auto* c_hoch = app.add_subcommand("hochschild-cohomology", "Betti table of C(A)");
    c_hoch->add_option("file", file)->required();
    c_hoch->add_flag("--matrices", dump_matrices, "dump differential matrices as triplets");
    add_common(c_hoch, false);

    auto* c_ident = app.add_subcommand("identities", "run the cacti identity suite");
    c_ident->add_option("file", file)->required();
    c_ident->add_option("--side", side, "cobar | hochschild")
        ->check(CLI::IsMember({"cobar", "hochschild"}));
    add_common(c_ident, true);

    auto* c_induced = app.add_subcommand("induced", "induced map Omega(H) -> C(A) of an action");
    c_induced->add_option("file", file)->required();
    c_induced->add_flag("--verify", verify, "verify the cacti-morphism conditions");
    c_induced->add_option("--image", image_cap, "report image dimensions up to this degree");
    add_common(c_induced, true);

    auto* c_dual = app.add_subcommand("dual", "dual bialgebra");
    c_dual->add_option("file", file)->required();
    c_dual->add_option("-o,--output", out_path, "write the dual presentation here");
    add_common(c_dual, false);

    auto* c_extract = app.add_subcommand("extract", "bialgebra extraction round trip");
    c_extract->add_option("file", file)->required();
    add_common(c_extract, false);

    auto* c_lift = app.add_subcommand("lift", "lift a bialgebra morphism to the cobar constructions");
    c_lift->add_option("file", file)->required();
    add_common(c_lift, true);

    auto* c_skew = app.add_subcommand("skew-cocycle", "build d_1(a_1)...d_n(a_n) from a skew chain");
    c_skew->add_option("file", file)->required();
    add_common(c_skew, false);

    auto* c_cat = app.add_subcommand("catalog", "emit a named catalog presentation");
    c_cat->add_option("id", catalog_id, "e.g. sweedler4, taft(3), group_algebra(2), trunc_poly(2)")
        ->required();
    c_cat->add_option("-o,--output", out_path, "write the presentation here");
    add_common(c_cat, false);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (*c_check) return cmd_check(file, kind, opts);
        if (*c_cobar) return cmd_cobar_cohomology(file, opts, dump_matrices);
        if (*c_hoch) return cmd_hochschild_cohomology(file, opts, dump_matrices);
        if (*c_ident) return cmd_identities(file, side, opts);
        if (*c_induced) return cmd_induced(file, opts, verify, image_cap);
        if (*c_dual) return cmd_dual(file, opts, out_path);
        if (*c_extract) return cmd_extract(file, opts);
        if (*c_lift) return cmd_lift(file, opts);
        if (*c_skew) return cmd_skew_cocycle(file, opts);
        if (*c_cat) return cmd_catalog(catalog_id, opts, out_path);
    } catch (const CLI::ValidationError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
