#include "lieinv/cli.hpp"

#include <ostream>

#include "CLI11.hpp"
#include "lieinv/catalog.hpp"
#include "lieinv/io.hpp"
#include "lieinv/report.hpp"
#include "lieinv/verify.hpp"

namespace lieinv::cli {

namespace {

struct Config {
    std::string algebra;
    std::string file;
    std::string spec;
    std::string named;
    std::vector<int> subalgebra;  // 1-based as typed
    std::optional<int> l_prime;
    std::string format = "text";
    bool verify = false;
    std::string only;
    bool strict = false;
    int jobs = 1;
};

LieAlgebra resolve_algebra(const Config& c)
{
    if (!c.file.empty()) return algebra_from_json(parse_json(read_file(c.file)));
    return catalog(c.algebra);
}

/// The catalog matrix for a catalog name with the catalog generators. The brackets are not
/// compared: extraction checks every coefficient against `g` itself.
std::optional<MatrixRecipe> known_recipe(const LieAlgebra& g)
{
    try {
        if (catalog(g.name()).generators() != g.generators()) return std::nullopt;
        MatrixRecipe r = recipe_for(g.name());
        for (const auto& v : *matrix_universe(r.base))
            if (v != r.t && !index_of(g.coordinates(), v)) return std::nullopt;
        return r;
    } catch (const UnknownName&) {
    } catch (const BadParams&) {
    }
    return std::nullopt;
}

void print(std::ostream& out, const Config& c, const Json& j, const std::string& text)
{
    if (c.format == "json")
        out << dump(j);
    else
        out << text;
}

/// Runs the reference checks about one algebra when --verify is given.
int finish(std::ostream& out, std::ostream& err, const Config& c, const std::string& subject, const Json& report,
           const std::string& text)
{
    if (!c.verify) {
        print(out, c, report, text);
        return ok;
    }
    VerifyOptions opt;
    opt.subject = subject;
    opt.jobs = c.jobs;
    const VerifyReport v = run_verify(opt);
    if (c.format == "json")
        out << dump(Json{{"report", report}, {"verification", to_json(v)}});
    else
        out << text << "verification:\n" << (v.checks.empty() ? "no reference checks for this algebra\n" : render_text(v));
    if (!v.passed()) {
        err << "verification failed: " << *v.first_failure() << "\n";
        return verify_failed;
    }
    return ok;
}

int cmd_catalog(std::ostream& out, const Config& c)
{
    if (!c.algebra.empty() || !c.file.empty()) {
        const LieAlgebra g = resolve_algebra(c);
        print(out, c, to_json(g), "algebra: " + g.name() + "\ndim: " + std::to_string(g.dim()) + "\n" + bracket_table(g));
        return ok;
    }
    Json list = Json::array();
    std::string text;
    for (const auto& n : catalog_listing()) {
        const LieAlgebra g = catalog(n);
        list.push_back({{"name", n}, {"dim", g.dim()}, {"kinematical", is_kinematical(n)}});
        text += n + "  dim " + std::to_string(g.dim()) + "\n";
    }
    for (const auto& f : catalog_families()) text += f + "  family\n";
    print(out, c, Json{{"algebras", list}, {"families", catalog_families()}}, text);
    return ok;
}

int cmd_invariants(std::ostream& out, std::ostream& err, const Config& c)
{
    const LieAlgebra g = resolve_algebra(c);
    const InvariantsReport r = build_invariants_report(g, known_recipe(g));
    return finish(out, err, c, g.name(), to_json(r), render_text(r));
}

int cmd_contract(std::ostream& out, std::ostream& err, const Config& c)
{
    ContractionSpec spec;
    if (!c.named.empty()) {
        spec = named_contraction(c.named);
    } else {
        const Json j = parse_json(read_file(c.spec));
        const bool explicit_source = !c.algebra.empty() || !c.file.empty();
        spec = spec_from_json(j, [&](std::string_view name) {
            return explicit_source ? resolve_algebra(c) : catalog(name);
        });
    }
    const ContractionReport r = build_contraction_report(spec, known_recipe(spec.algebra));
    const int code = finish(out, err, c, spec.algebra.name(), to_json(r), render_text(r));
    if (r.diagnostic) {
        err << r.diagnostic->kind << ": " << r.diagnostic->message << "\n";
        return r.diagnostic->kind == "CountMismatch" ? count_mismatch : dependent;
    }
    return code;
}

int cmd_mlp(std::ostream& out, std::ostream& err, const Config& c)
{
    const LieAlgebra g = resolve_algebra(c);
    const auto recipe = known_recipe(g);
    if (!recipe) throw UnknownName("no matrix is known for " + g.name());
    std::vector<int> h;
    if (c.subalgebra.empty()) {
        if (!is_kinematical(g.name())) throw BadParams("--subalgebra is required for " + g.name());
        h = rotation_indices();
    } else {
        for (int i : c.subalgebra) h.push_back(i - 1);
    }
    const MLPReport r = mlp_analyze(g, *recipe, h, c.l_prime);
    return finish(out, err, c, g.name(), to_json(r), render_text(r));
}

int cmd_verify(std::ostream& out, std::ostream& err, const Config& c)
{
    VerifyOptions opt;
    opt.only = c.only;
    opt.strict = c.strict;
    opt.jobs = c.jobs;
    const VerifyReport v = run_verify(opt);
    print(out, c, to_json(v), render_text(v));
    if (!v.passed()) {
        err << "verification failed: " << *v.first_failure() << "\n";
        return verify_failed;
    }
    return ok;
}

void add_source(CLI::App* sub, Config& c)
{
    auto* a = sub->add_option("--algebra,-a", c.algebra, "catalog name, e.g. so32, iso31, isp4, so(2,2)");
    auto* f = sub->add_option("--file,-f", c.file, "algebra definition (JSON)");
    a->excludes(f);
    f->excludes(a);
}

void add_format(CLI::App* sub, Config& c)
{
    sub->add_option("--format", c.format, "output format")->check(CLI::IsMember({"text", "json"}));
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    Config c;
    CLI::App app{"Invariants of Lie algebras by the matrix method, contractions and missing labels", "lieinv"};
    app.require_subcommand(1);

    auto* catalog_cmd = app.add_subcommand("catalog", "list catalog algebras or print one bracket table");
    add_source(catalog_cmd, c);
    add_format(catalog_cmd, c);

    auto* inv = app.add_subcommand("invariants", "compute and check the invariants of an algebra");
    add_source(inv, c);
    add_format(inv, c);
    inv->add_flag("--verify", c.verify, "also run the reference checks about this algebra");

    auto* con = app.add_subcommand("contract", "contract an algebra and follow its invariants to the limit");
    auto* spec = con->add_option("--spec,-s", c.spec, "contraction spec (JSON)")->check(CLI::ExistingFile);
    auto* named = con->add_option("--named", c.named, "catalog contraction, e.g. so32_to_iso31");
    spec->excludes(named);
    named->excludes(spec);
    add_source(con, c);
    add_format(con, c);
    con->add_flag("--verify", c.verify, "also run the reference checks about the source algebra");

    auto* mlp = app.add_subcommand("mlp", "missing label analysis for a subalgebra chain");
    add_source(mlp, c);
    mlp->add_option("--subalgebra", c.subalgebra, "1-based generator indices (default: rotations)")->delimiter(',');
    mlp->add_option("--l-prime", c.l_prime, "override the computed l'");
    add_format(mlp, c);
    mlp->add_flag("--verify", c.verify, "also run the reference checks about this algebra");

    auto* ver = app.add_subcommand("verify", "run the reference check suite");
    ver->add_option("--only", c.only, "one check group")
        ->check(CLI::IsMember(verify_groups()));
    ver->add_flag("--strict", c.strict, "compare with the displayed formulas literally");
    ver->add_option("--jobs,-j", c.jobs, "worker threads")->check(CLI::PositiveNumber);
    add_format(ver, c);

    try {
        app.parse(std::vector<std::string>(args.rbegin(), args.rend()));
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? ok : usage_or_parse;
    }

    try {
        if (*catalog_cmd) return cmd_catalog(out, c);
        if (c.algebra.empty() && c.file.empty() && !*ver && !(*con && (!c.spec.empty() || !c.named.empty())))
            throw BadParams("one of --algebra or --file is required");
        if (*inv) return cmd_invariants(out, err, c);
        if (*con) {
            if (c.spec.empty() && c.named.empty()) throw BadParams("one of --spec or --named is required");
            return cmd_contract(out, err, c);
        }
        if (*mlp) return cmd_mlp(out, err, c);
        return cmd_verify(out, err, c);
    } catch (const NonInvariantCoefficient& e) {
        err << "NonInvariantCoefficient: " << e.what() << "\n";
        return non_invariant;
    } catch (const DivergentContraction& e) {
        err << "DivergentContraction: " << e.what() << "; (i, j, k) = (" << e.i + 1 << ", " << e.j + 1 << ", "
            << e.k + 1 << ")\n";
        return divergent;
    } catch (const CountMismatch& e) {
        err << "CountMismatch: " << e.what() << "\n";
        return count_mismatch;
    } catch (const NotClosed& e) {
        err << "NotClosed: " << e.what() << "\n";
        return not_closed;
    } catch (const DependentInvariants& e) {
        err << "DependentInvariants: " << e.what() << "\n";
        return dependent;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return usage_or_parse;
    }
}

}  // namespace lieinv::cli
