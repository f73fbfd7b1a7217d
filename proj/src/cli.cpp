#include "leibniz/cli.hpp"

#include "leibniz/algebra_io.hpp"
#include "leibniz/catalog.hpp"
#include "leibniz/criteria.hpp"
#include "leibniz/random_algebra.hpp"
#include "leibniz/sequences.hpp"
#include "leibniz/suite.hpp"
#include "leibniz/zstar.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <cstdlib>
#include <ostream>
#include <sstream>

#include <omp.h>

namespace leibniz {

namespace {

using json = nlohmann::ordered_json;
using Clock = std::chrono::steady_clock;

struct Options {
    std::string file;
    std::string ideal;
    std::string out;
    std::string name;
    std::string field = "Q";
    std::string reproducer_dir = ".";
    bool skip_check = false;
    bool all_central = false;
    bool steps_set = false;
    std::size_t max_dim = 12;
    std::size_t dim = 0;
    std::size_t steps = 0;
    std::size_t random_count = 20;
    std::size_t suite_max_dim = 5;
    std::uint64_t seed = 1;
};

struct ReportContext {
    std::string command;
    std::ostream* out;
    Clock::time_point start;
};

long long ms_since(Clock::time_point start) {
    return std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - start).count();
}

json scalar_json(const Scalar& x, const Field& F) {
    if (F.kind() == Field::Kind::Prime) return json(x.get_num().get_ui());
    return json(F.format(x));
}

json vector_json(const std::vector<Scalar>& v, const Field& F) {
    json a = json::array();
    for (const Scalar& x : v) a.push_back(scalar_json(x, F));
    return a;
}

json basis_json(const Subspace& s) {
    json a = json::array();
    for (std::size_t i = 0; i < s.dim(); ++i)
        a.push_back(vector_json(s.basis_vector(i), s.field()));
    return a;
}

json violations_json(const std::vector<std::array<std::size_t, 3>>& vs) {
    json a = json::array();
    for (const auto& t : vs) a.push_back({t[0] + 1, t[1] + 1, t[2] + 1});
    return a;
}

json sequence_json(const SequenceReport& r) {
    json nodes = json::array();
    for (std::size_t i = 0; i < r.node_names.size(); ++i)
        nodes.push_back({{"name", r.node_names[i]}, {"dim", r.node_dims[i]}});
    json joints = json::array();
    for (const JointReport& jr : r.joints)
        joints.push_back({{"at", jr.at},
                          {"image_dim", jr.image_dim},
                          {"kernel_dim", jr.kernel_dim},
                          {"exact", jr.exact}});
    return {{"name", r.name},
            {"nodes", nodes},
            {"map_ranks", r.map_ranks},
            {"joints", joints},
            {"pass", r.pass}};
}

struct Loaded {
    LeibnizAlgebra L;
    std::string path;
    std::string digest;
    std::vector<std::array<std::size_t, 3>> violations;
};

json input_json(const Loaded& in) {
    return {{"path", in.path},
            {"digest", in.digest},
            {"name", in.L.name()},
            {"field", field_to_json(in.L.field())},
            {"dim", in.L.dim()}};
}

Loaded load_algebra(const std::string& path, bool skip_check, std::size_t max_dim) {
    LeibnizAlgebra L = read_algebra_file(path);
    if (L.dim() > max_dim)
        throw InputError("input dimension " + std::to_string(L.dim()) + " exceeds the cap " +
                         std::to_string(max_dim) + "; raise --max-dim to allow it");
    Loaded in{std::move(L), path, "", {}};
    in.digest = algebra_digest(in.L);
    if (!skip_check) in.violations = leibniz_violations(in.L);
    return in;
}

int emit(const ReportContext& ctx, const json& input, json result, bool pass, int code) {
    json rep;
    rep["command"] = ctx.command;
    rep["input"] = input;
    rep["result"] = std::move(result);
    rep["pass"] = pass;
    rep["timing_ms"] = ms_since(ctx.start);
    *ctx.out << rep.dump(2) << "\n";
    return code;
}

int emit_seeded(const ReportContext& ctx, const json& input, json result, bool pass, int code,
                std::uint64_t seed) {
    json rep;
    rep["command"] = ctx.command;
    rep["input"] = input;
    rep["result"] = std::move(result);
    rep["pass"] = pass;
    rep["seed"] = seed;
    rep["timing_ms"] = ms_since(ctx.start);
    *ctx.out << rep.dump(2) << "\n";
    return code;
}

// Shared guard: a loaded table that fails the identity ends the command with
// the violation report and exit code 1.
int emit_identity_failure(const ReportContext& ctx, const Loaded& in) {
    json result{{"holds", false},
                {"violation_count", in.violations.size()},
                {"violations", violations_json(in.violations)}};
    return emit(ctx, input_json(in), std::move(result), false, 1);
}

Subspace parse_ideal(const LeibnizAlgebra& L, const std::string& text) {
    if (text == "none") return Subspace::zero(L.dim(), L.field());
    std::vector<std::vector<Scalar>> gens;
    std::stringstream ss(text);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        tok.erase(std::remove(tok.begin(), tok.end(), ' '), tok.end());
        if (tok.size() < 2 || tok[0] != 'e' ||
            tok.find_first_not_of("0123456789", 1) != std::string::npos)
            throw InputError("ideal: token '" + tok +
                             "' is not e<K> (1-based basis index) or 'none'");
        const std::size_t k = static_cast<std::size_t>(std::stoull(tok.substr(1)));
        if (k < 1 || k > L.dim())
            throw InputError("ideal: index " + std::to_string(k) + " outside 1.." +
                             std::to_string(L.dim()));
        std::vector<Scalar> v(L.dim(), Scalar(0));
        v[k - 1] = Scalar(1);
        gens.push_back(std::move(v));
    }
    if (gens.empty()) throw InputError("ideal: no tokens");
    return Subspace::from_vectors(gens, L.dim(), L.field());
}

// An empty descriptor means the full center; anything else must still be central.
Subspace resolve_ideal(const LeibnizAlgebra& L, const std::string& text) {
    Subspace Z = text.empty() ? center(L) : parse_ideal(L, text);
    if (!is_central_ideal(L, Z))
        throw InputError("--ideal does not span a central ideal of the input");
    return Z;
}

int cmd_check(const Options& opt, const ReportContext& ctx) {
    Loaded in = load_algebra(opt.file, false, opt.max_dim);
    const bool holds = in.violations.empty();
    json result{{"holds", holds},
                {"violation_count", in.violations.size()},
                {"violations", violations_json(in.violations)}};
    return emit(ctx, input_json(in), std::move(result), holds, holds ? 0 : 1);
}

int cmd_invariants(const Options& opt, const ReportContext& ctx) {
    Loaded in = load_algebra(opt.file, opt.skip_check, opt.max_dim);
    if (!in.violations.empty()) return emit_identity_failure(ctx, in);
    const std::size_t t = multiplier_dim(in.L);
    json result{{"dim", in.L.dim()},
                {"derived_dim", derived(in.L).dim()},
                {"center_dim", center(in.L).dim()},
                {"h2_dim", t},
                {"multiplier_dim", t},
                {"nilpotent", is_nilpotent(in.L)}};
    return emit(ctx, input_json(in), std::move(result), true, 0);
}

int cmd_cover(const Options& opt, const ReportContext& ctx) {
    Loaded in = load_algebra(opt.file, opt.skip_check, opt.max_dim);
    if (!in.violations.empty()) return emit_identity_failure(ctx, in);
    const CohomologyGroup h2F(in.L, TrivialModule{1});
    std::vector<TwoCochain> reps;
    for (std::size_t j = 0; j < h2F.dim(); ++j) {
        std::vector<Scalar> cls(h2F.dim(), Scalar(0));
        cls[j] = Scalar(1);
        reps.push_back(h2F.rep_of(cls));
    }
    const CentralExtension cov = cover_from_classes(in.L, h2F, reps);
    const bool stem = is_stem(cov);
    const bool bijective = tra_bijective_on_cover(h2F, cov);
    if (!opt.out.empty()) {
        write_algebra_file(cov.total, opt.out);
        const LeibnizAlgebra back = read_algebra_file(opt.out);
        if (back != cov.total || !verify_leibniz(back))
            throw Error("emitted cover file failed its reread check");
    }
    json result{{"multiplier_dim", h2F.dim()},
                {"total_dim", cov.total.dim()},
                {"kernel_dim", cov.kernel.dim()},
                {"is_stem", stem},
                {"tra_bijective", bijective},
                {"out", opt.out.empty() ? json(nullptr) : json(opt.out)}};
    const bool pass = stem && bijective;
    return emit(ctx, input_json(in), std::move(result), pass, pass ? 0 : 3);
}

int cmd_zstar(const Options& opt, const ReportContext& ctx, bool verdict_only) {
    Loaded in = load_algebra(opt.file, opt.skip_check, opt.max_dim);
    if (!in.violations.empty()) return emit_identity_failure(ctx, in);
    const Subspace zs = z_star(in.L); // throws FindingError when the routes disagree
    const Subspace zc = center(in.L);
    const bool uni = zs == zc;
    json result;
    if (verdict_only) {
        result = json{{"unicentral", uni}, {"z_star_dim", zs.dim()}, {"center_dim", zc.dim()}};
    } else {
        result = json{{"z_star_dim", zs.dim()},
                      {"z_star_basis", basis_json(zs)},
                      {"center_dim", zc.dim()},
                      {"center_basis", basis_json(zc)},
                      {"routes_agree", true},
                      {"unicentral", uni}};
    }
    return emit(ctx, input_json(in), std::move(result), true, 0);
}

int cmd_sequences(const Options& opt, const ReportContext& ctx) {
    Loaded in = load_algebra(opt.file, opt.skip_check, opt.max_dim);
    if (!in.violations.empty()) return emit_identity_failure(ctx, in);
    std::vector<Subspace> ideals;
    if (opt.all_central)
        ideals = central_ideal_samples(in.L, 8, 1);
    else
        ideals.push_back(resolve_ideal(in.L, opt.ideal));
    json items = json::array();
    bool all_pass = true;
    for (const Subspace& Z : ideals) {
        const CentralContext c = central_context(in.L, Z);
        json seqs = json::array();
        bool pass = true;
        for (const SequenceReport& r :
             {check_five_term(c.ft), check_extended(c), check_ganea(c), check_stallings(c)}) {
            seqs.push_back(sequence_json(r));
            pass = pass && r.pass;
        }
        items.push_back({{"ideal_dim", Z.dim()},
                         {"ideal_basis", basis_json(Z)},
                         {"sequences", seqs},
                         {"pass", pass}});
        all_pass = all_pass && pass;
    }
    json result{{"ideals", items}, {"all_exact", all_pass}};
    return emit(ctx, input_json(in), std::move(result), all_pass, all_pass ? 0 : 3);
}

int cmd_criteria(const Options& opt, const ReportContext& ctx) {
    Loaded in = load_algebra(opt.file, opt.skip_check, opt.max_dim);
    if (!in.violations.empty()) return emit_identity_failure(ctx, in);
    const Subspace Z = resolve_ideal(in.L, opt.ideal);
    const CentralContext c = central_context(in.L, Z);
    const CriteriaReport r = criteria_report(c, z_star(in.L));
    json result{{"ideal_dim", Z.dim()},
                {"delta_trivial", r.delta_trivial},
                {"beta_injective", r.beta_injective},
                {"dim_identity_holds", r.dim_identity_holds},
                {"z_in_zstar", r.z_in_zstar},
                {"consistent", r.consistent},
                {"all_hold", r.delta_trivial && r.beta_injective && r.dim_identity_holds &&
                                 r.z_in_zstar}};
    return emit(ctx, input_json(in), std::move(result), r.consistent, r.consistent ? 0 : 3);
}

int cmd_random(const Options& opt, const ReportContext& ctx) {
    const Field F = parse_field_flag(opt.field);
    if (opt.dim == 0) throw InputError("--dim must be positive");
    if (opt.dim > opt.max_dim)
        throw InputError("--dim exceeds the cap " + std::to_string(opt.max_dim) +
                         "; raise --max-dim to allow it");
    const LeibnizAlgebra L = opt.steps_set
                                 ? random_nilpotent(F, opt.dim, opt.seed, opt.steps)
                                 : random_nilpotent(F, opt.dim, opt.seed);
    if (!verify_leibniz(L)) throw Error("generated table failed the identity check");
    if (!is_nilpotent(L)) throw Error("generated algebra is not nilpotent");
    write_algebra_file(L, opt.out);
    const Loaded in{L, opt.out, algebra_digest(L), {}};
    json result{{"out", opt.out},
                {"steps", opt.steps_set ? json(opt.steps) : json(nullptr)},
                {"nilpotent", true}};
    return emit_seeded(ctx, input_json(in), std::move(result), true, 0, opt.seed);
}

int cmd_suite(const Options& opt, const ReportContext& ctx) {
    SuiteConfig cfg;
    cfg.field = parse_field_flag(opt.field);
    cfg.random_count = opt.random_count;
    cfg.max_dim = opt.suite_max_dim < 2 ? 2 : opt.suite_max_dim;
    cfg.base_seed = opt.seed;
    cfg.reproducer_dir = opt.reproducer_dir;
    const SuiteOutcome o = run_suite(cfg);
    const std::string label = "suite:field=" + cfg.field.name() +
                              ":random=" + std::to_string(cfg.random_count) +
                              ":max_dim=" + std::to_string(cfg.max_dim) +
                              ":seed=" + std::to_string(cfg.base_seed);
    json input{{"path", ""},
               {"digest", "fnv1a:" + fnv1a_hex(label)},
               {"name", label},
               {"field", field_to_json(cfg.field)},
               {"dim", 0}};
    json fails = json::array();
    for (const SuiteFailure& f : o.failures)
        fails.push_back({{"algebra", f.algebra},
                         {"digest", f.digest},
                         {"property", f.property},
                         {"detail", f.detail},
                         {"reproducer", f.reproducer}});
    json result{{"algebras", o.algebras},
                {"checks", o.checks},
                {"checks_by_property", o.checks_by_property},
                {"failure_count", o.failures.size()},
                {"failures", fails}};
    const bool pass = o.failures.empty();
    return emit_seeded(ctx, input, std::move(result), pass, pass ? 0 : 3, opt.seed);
}

int cmd_catalog(const Options& opt, const ReportContext& ctx) {
    const Field F = parse_field_flag(opt.field);
    if (opt.name.empty()) {
        json input{{"path", ""},
                   {"digest", ""},
                   {"name", "catalog"},
                   {"field", field_to_json(F)},
                   {"dim", 0}};
        json result{{"names", catalog_names()}};
        return emit(ctx, input, std::move(result), true, 0);
    }
    const LeibnizAlgebra L = catalog(opt.name, F);
    if (!opt.out.empty()) {
        write_algebra_file(L, opt.out);
        if (read_algebra_file(opt.out) != L)
            throw Error("emitted catalog file failed its reread check");
    }
    const Loaded in{L, opt.out, algebra_digest(L), {}};
    json result{{"name", L.name()},
                {"dim", L.dim()},
                {"out", opt.out.empty() ? json(nullptr) : json(opt.out)}};
    return emit(ctx, input_json(in), std::move(result), true, 0);
}

void apply_thread_env(std::ostream& err) {
    const char* env = std::getenv("LEIBNIZ_MULT_THREADS");
    if (env == nullptr || *env == '\0') return;
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end == nullptr || *end != '\0' || v < 1) {
        err << "ignoring LEIBNIZ_MULT_THREADS='" << env << "' (want a positive integer)\n";
        return;
    }
    omp_set_num_threads(static_cast<int>(v));
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    apply_thread_env(err);

    Options opt;
    CLI::App app{"Workbench for second cohomology, multipliers, covers, and central"
                 " extensions of finite-dimensional Leibniz algebras"};
    app.require_subcommand(1);

    auto add_input = [&](CLI::App* cmd, bool with_skip) {
        cmd->add_option("file", opt.file, "algebra file (JSON)")->required();
        cmd->add_option("--max-dim", opt.max_dim, "largest accepted dimension");
        if (with_skip)
            cmd->add_flag("--skip-check", opt.skip_check,
                          "trust the table instead of checking the identity first");
    };

    CLI::App* c_check = app.add_subcommand("check", "verify the defining identity");
    add_input(c_check, false);

    CLI::App* c_inv = app.add_subcommand(
        "invariants", "dimensions of the derived subalgebra, center, and multiplier");
    add_input(c_inv, true);

    CLI::App* c_cover = app.add_subcommand("cover", "build the multiplier cover");
    add_input(c_cover, true);
    c_cover->add_option("--out", opt.out, "write the cover as an algebra file");

    CLI::App* c_zstar = app.add_subcommand("zstar", "compute Z*, the exterior center");
    add_input(c_zstar, true);

    CLI::App* c_uni = app.add_subcommand("unicentral", "decide whether Z* equals the center");
    add_input(c_uni, true);

    CLI::App* c_seq =
        app.add_subcommand("sequences", "machine-check the exact sequences for a central ideal");
    add_input(c_seq, true);
    c_seq->add_option("--ideal", opt.ideal,
                      "central ideal as e<K> tokens, e.g. e2 or e1,e3; 'none' for zero;"
                      " defaults to the center");
    c_seq->add_flag("--all-central", opt.all_central, "sweep a sampled family of central ideals");

    CLI::App* c_crit =
        app.add_subcommand("criteria", "the four equivalent unicentrality criteria for an ideal");
    add_input(c_crit, true);
    c_crit->add_option("--ideal", opt.ideal, "central ideal, as in sequences");

    CLI::App* c_rand = app.add_subcommand("random", "generate a random nilpotent algebra file");
    c_rand->add_option("--seed", opt.seed, "generator seed")->required();
    c_rand->add_option("--dim", opt.dim, "target dimension")->required();
    CLI::Option* steps_opt =
        c_rand->add_option("--steps", opt.steps, "exact number of central extension steps");
    c_rand->add_option("--field", opt.field, "Q (default) or GF:p");
    c_rand->add_option("--out", opt.out, "output algebra file")->required();
    c_rand->add_option("--max-dim", opt.max_dim, "largest accepted dimension");

    CLI::App* c_suite =
        app.add_subcommand("suite", "run every property family over catalog plus random corpora");
    c_suite->add_option("--seeds", opt.random_count, "number of random corpus algebras");
    c_suite->add_option("--max-dim", opt.suite_max_dim, "largest random corpus dimension");
    c_suite->add_option("--field", opt.field, "Q (default) or GF:p");
    c_suite->add_option("--seed", opt.seed, "base seed for the corpus");
    c_suite->add_option("--reproducer-dir", opt.reproducer_dir,
                        "directory for failure reproducer files ('' disables)");

    CLI::App* c_cat = app.add_subcommand("catalog", "list or emit the built-in algebras");
    c_cat->add_option("--name", opt.name, "catalog name, e.g. heisenberg or cyclic:3");
    c_cat->add_option("--field", opt.field, "Q (default) or GF:p");
    c_cat->add_option("--out", opt.out, "write the algebra file here");

    std::vector<const char*> argv;
    argv.push_back("leibniz");
    for (const std::string& a : args) argv.push_back(a.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return 0;
    } catch (const CLI::ParseError& e) {
        err << e.what() << "\n";
        return 2;
    }
    opt.steps_set = steps_opt->count() > 0;

    const ReportContext ctx{app.get_subcommands().front()->get_name(), &out, Clock::now()};
    try {
        if (c_check->parsed()) return cmd_check(opt, ctx);
        if (c_inv->parsed()) return cmd_invariants(opt, ctx);
        if (c_cover->parsed()) return cmd_cover(opt, ctx);
        if (c_zstar->parsed()) return cmd_zstar(opt, ctx, false);
        if (c_uni->parsed()) return cmd_zstar(opt, ctx, true);
        if (c_seq->parsed()) return cmd_sequences(opt, ctx);
        if (c_crit->parsed()) return cmd_criteria(opt, ctx);
        if (c_rand->parsed()) return cmd_random(opt, ctx);
        if (c_suite->parsed()) return cmd_suite(opt, ctx);
        if (c_cat->parsed()) return cmd_catalog(opt, ctx);
        err << "unknown command\n";
        return 2;
    } catch (const InputError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const FindingError& e) {
        err << "finding: " << e.what() << "\n";
        return 3;
    } catch (const Error& e) {
        err << "internal finding: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
}

} // namespace leibniz
