#include "lieinv/verify.hpp"

#include <algorithm>
#include <atomic>
#include <sstream>
#include <thread>

#include "lieinv/catalog.hpp"
#include "lieinv/contraction.hpp"
#include "lieinv/invariance.hpp"
#include "lieinv/mlp.hpp"
#include "lieinv/reference.hpp"

namespace lieinv {

namespace {

struct Check {
    std::string group;
    std::string subject;
    std::function<std::string()> body;  // returns detail; throws CheckFailed on mismatch
};

struct CheckFailed : std::runtime_error {
    using std::runtime_error::runtime_error;
};

void require(bool ok, const std::string& what)
{
    if (!ok) throw CheckFailed(what);
}

enum class Match { exact, negated, differs };

Match compare(const MultiPoly& got, const MultiPoly& want)
{
    if (got == want) return Match::exact;
    if (got == -want) return Match::negated;
    return Match::differs;
}

/// Checks one displayed coefficient; returns a note when only the sign differs.
std::string match_coefficient(const MultiPoly& got, const MultiPoly& want, const std::string& label, bool strict)
{
    const Match m = compare(got, want);
    if (m == Match::exact) return "";
    if (m == Match::negated && !strict) return label + " up to sign";
    throw CheckFailed(label + " = " + got.to_string() + ", expected " + want.to_string());
}

std::string join(const std::vector<std::string>& parts)
{
    std::string out;
    for (const auto& p : parts) {
        if (p.empty()) continue;
        if (!out.empty()) out += "; ";
        out += p;
    }
    return out;
}

int expected_count(const std::string& name) { return name == "static" ? 4 : 2; }

std::string formulas_check(const VerifySources& src, const std::string& name, bool strict)
{
    const MultiPoly p = evaluate_recipe(src.recipe(name));
    if (name == "static") {
        const MultiPoly want = reference_static_polynomial();
        require(p == want, "P(T) = " + p.to_string() + ", expected " + want.to_string());
        return "P(T) exact";
    }
    const auto ref = reference_coefficients(name);
    require(p.degree_in("T") == 5, "P(T) has degree " + std::to_string(p.degree_in("T")) + " in T");
    require(p.coefficient("T", 5) == MultiPoly(1L), "T^5 coefficient is not 1");
    for (unsigned k : {0u, 2u, 4u})
        require(p.coefficient("T", k).is_zero(), "T^" + std::to_string(k) + " coefficient is nonzero");
    const std::string d = join({match_coefficient(p.coefficient("T", 3), ref->c2, "C2", strict),
                                match_coefficient(p.coefficient("T", 1), ref->c4, "C4", strict)});
    return d.empty() ? "C2, C4 exact" : d;
}

std::string invariance_check(const VerifySources& src, const std::string& name)
{
    const LieAlgebra g = src.algebra(name);
    const InvariantSet s = invariants_from_recipe(src.recipe(name), g);
    const auto ops = coadjoint_operators(g);
    int passed = 0;
    for (const auto& m : s.members)
        for (const auto& op : ops) {
            require(op.apply(m.poly).is_zero(), m.provenance + " is not annihilated by " + g.generators()[op.generator()]);
            ++passed;
        }
    require(static_cast<int>(s.size()) == expected_count(name),
            std::to_string(s.size()) + " invariants, expected " + std::to_string(expected_count(name)));
    return std::to_string(passed) + " operator checks";
}

std::string counts_check(const VerifySources& src, const std::string& name)
{
    const int n = num_invariants(src.algebra(name));
    require(n == expected_count(name), "N = " + std::to_string(n) + ", expected " + std::to_string(expected_count(name)));
    return "N = " + std::to_string(n);
}

std::string contraction_check(const VerifySources& src, const std::string& name, bool strict, bool with_formulas)
{
    const ContractionSpec named = named_contraction(name);
    std::map<std::string, int> exps;
    for (int i = 0; i < named.algebra.dim(); ++i) exps[named.algebra.generators()[i]] = named.exponents[i];
    const ContractionSpec spec = make_spec(src.algebra(named.algebra.name()), exps, named.name);
    const std::string target = named_contraction_target(name);
    const LieAlgebra contracted = contract_algebra(spec);
    require(contracted.table() == src.algebra(target).table(), "contracted brackets differ from " + target);
    if (!with_formulas) return "brackets equal " + target;
    const PipelineResult r = contraction_pipeline(spec, src.recipe(spec.algebra.name()));
    const auto ref = reference_coefficients(target);
    require(r.invariants.size() == 2, std::to_string(r.invariants.size()) + " limit invariants");
    const std::string d = join({match_coefficient(r.limit.coefficient("T", 3), ref->c2, "C2", strict),
                                match_coefficient(r.limit.coefficient("T", 1), ref->c4, "C4", strict)});
    return "alpha = " + std::to_string(r.alpha) + (d.empty() ? "" : "; " + d);
}

std::string labels_check(const VerifySources& src, const std::string& name, bool strict)
{
    const LieAlgebra g = src.algebra(name);
    const MLPReport r = mlp_analyze(g, src.recipe(name), rotation_indices());
    const auto row = published_label_row(name);
    const auto& f = kinematical_functions();
    const bool is_static = name == "static";
    auto flagged = [&](const char* flag) { return std::find(r.flags.begin(), r.flags.end(), flag) != r.flags.end(); };

    require(r.n == (is_static ? 1 : 2) && r.m == (is_static ? 2 : 4),
            "n, m = " + std::to_string(r.n) + ", " + std::to_string(r.m));
    require(r.n_prime == 4, "N' = " + std::to_string(r.n_prime));

    std::vector<MultiPoly> base = r.casimirs.polys();
    for (const auto& s : r.subalgebra_casimirs.members) base.push_back(s.poly);
    const SubalgebraSelection h = subalgebra(g, rotation_indices());
    for (const auto& l : r.accepted_labels) require(annihilated_by_subalgebra(h, l), "accepted label not annihilated");

    if (strict) {
        for (const auto& c : row->casimirs)
            require(is_invariant(g, c), "listed Casimir " + c.to_string() + " is not invariant");
        if (is_static) {
            require(r.accepted_labels.empty() && r.method_fails, "static should yield no label");
        } else {
            require(r.accepted_labels.size() == row->reduced_yield.size() &&
                        functionally_equivalent(r.accepted_labels, row->reduced_yield, base),
                    "accepted labels are not equivalent to the listed yield");
        }
    } else if (name == "galilei") {
        require(r.accepted_labels.empty() && r.method_fails && flagged("published_label_discrepancy"),
                "expected no label and a flagged discrepancy");
    } else if (name == "carroll") {
        require(!r.accepted_labels.empty() && flagged("published_label_discrepancy"), "expected a flagged discrepancy");
    } else if (is_static) {
        require(r.accepted_labels.empty() && r.method_fails, "static should yield no label");
    } else {
        const bool newton = name == "newton_plus" || name == "newton_minus";
        const std::vector<MultiPoly> want = newton ? std::vector<MultiPoly>{f.I2} : std::vector<MultiPoly>{f.I2, f.I3, f.I5};
        require(r.accepted_labels.size() == want.size() && functionally_equivalent(r.accepted_labels, want, base),
                "accepted labels are not equivalent to the expected set");
        if (!newton)
            require(static_cast<int>(r.accepted_labels.size()) + r.surviving_casimirs == r.n_prime,
                    "accepted + surviving Casimirs != N'");
    }

    // The missing-label column: annihilated by the rotations and independent of the Casimirs.
    const int base_rank = independence_rank(r.casimirs.polys());
    for (const auto& l : row->missing_labels) {
        require(annihilated_by_subalgebra(h, l), "label " + l.to_string() + " is not annihilated");
        std::vector<MultiPoly> with = r.casimirs.polys();
        with.push_back(l);
        require(independence_rank(with) == base_rank + 1, "label " + l.to_string() + " depends on the Casimirs");
    }
    return std::to_string(r.accepted_labels.size()) + " accepted label(s)" +
           (r.flags.empty() ? "" : ", flags: " + [&] {
               std::string s;
               for (const auto& fl : r.flags) s += (s.empty() ? "" : " ") + fl;
               return s;
           }());
}

std::string identity_check(bool strict)
{
    const auto& f = kinematical_functions();
    const MultiPoly lhs = f.M * f.M;
    const MultiPoly rhs = strict ? dependency_rhs_literal() : dependency_rhs();
    require(lhs == rhs, "M^2 - rhs = " + (lhs - rhs).to_string());
    return strict ? "displayed relation holds" : "Gram relation holds";
}

std::string rank_check()
{
    const auto& f = kinematical_functions();
    std::vector<MultiPoly> fs = f.list();
    const int r7 = independence_rank(fs);
    fs.push_back(f.M);
    const int r8 = independence_rank(fs);
    require(r7 == 7 && r8 == 7, "ranks " + std::to_string(r7) + ", " + std::to_string(r8));
    return "rank 7, with M still 7";
}

std::string isp_check(const VerifySources& src)
{
    const LieAlgebra g = src.algebra("isp4");
    const MatrixRecipe recipe = src.recipe("isp4");
    const MultiPoly p = evaluate_recipe(recipe);
    for (unsigned k = 0; k <= p.degree_in(recipe.t); ++k)
        if (k != 1 && k != 3)
            require(p.coefficient(recipe.t, k).is_zero(), "unexpected T^" + std::to_string(k) + " term");
    const InvariantSet s = extract_invariants(p, g, recipe.t);
    require(s.size() == 2, std::to_string(s.size()) + " invariants");
    require(s.members[0].degree == 3 && s.members[1].degree == 5, "degrees are not 3 and 5");
    const auto ops = coadjoint_operators(g);
    require(ops.size() == 14, "dimension is not 14");
    for (const auto& m : s.members)
        for (const auto& op : ops)
            require(op.apply(m.poly).is_zero(), m.provenance + " fails " + g.generators()[op.generator()]);
    require(independence_rank(s.polys()) == 2 && num_invariants(g) == 2, "not 2 independent invariants");
    return "degrees 3 and 5, 28 operator checks";
}

std::vector<Check> all_checks(const VerifySources& src, bool strict)
{
    std::vector<Check> out;
    const auto& names = kinematical_names();
    for (const auto& n : names)
        out.push_back({"formulas", n, [=, &src] { return formulas_check(src, n, strict); }});
    for (const auto& n : names) out.push_back({"invariance", n, [=, &src] { return invariance_check(src, n); }});
    for (const auto& n : names) out.push_back({"counts", n, [=, &src] { return counts_check(src, n); }});
    for (const auto& c : named_contractions()) {
        const bool formulas = c == "so32_to_iso31" || c == "so41_to_iso4";
        out.push_back({"contraction", c, [=, &src] { return contraction_check(src, c, strict, formulas); }});
    }
    for (const auto& n : names) out.push_back({"labels", n, [=, &src] { return labels_check(src, n, strict); }});
    out.push_back({"identity", "dependency", [=] { return identity_check(strict); }});
    out.push_back({"identity", "rank", [] { return rank_check(); }});
    out.push_back({"isp", "isp4", [&src] { return isp_check(src); }});
    return out;
}

bool about(const Check& c, const std::string& subject)
{
    if (subject.empty() || c.subject == subject) return true;
    if (c.group != "contraction") return false;
    const auto spec = named_contraction(c.subject);
    return spec.algebra.name() == subject || named_contraction_target(c.subject) == subject;
}

}  // namespace

VerifySources default_sources()
{
    return {[](std::string_view n) { return catalog(n); }, [](std::string_view n) { return recipe_for(n); }};
}

const std::vector<std::string>& verify_groups()
{
    static const std::vector<std::string> g = {"formulas", "invariance", "counts", "contraction",
                                               "labels",   "identity",   "isp"};
    return g;
}

bool VerifyReport::passed() const
{
    return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed; });
}

std::optional<std::string> VerifyReport::first_failure() const
{
    for (const auto& c : checks)
        if (!c.passed) return c.name;
    return std::nullopt;
}

VerifyReport run_verify(const VerifyOptions& options, const VerifySources& sources)
{
    const auto& groups = verify_groups();
    if (!options.only.empty() && std::find(groups.begin(), groups.end(), options.only) == groups.end())
        throw UnknownName("unknown check group '" + options.only + "'");
    const std::string subject = options.subject.empty() ? "" : [&] {
        const std::string c = canonical_kinematical_name(options.subject);
        return c.empty() ? options.subject : c;
    }();

    std::vector<Check> selected;
    for (auto& c : all_checks(sources, options.strict))
        if ((options.only.empty() || c.group == options.only) && about(c, subject)) selected.push_back(std::move(c));

    VerifyReport rep;
    rep.strict = options.strict;
    rep.checks.resize(selected.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i; (i = next++) < selected.size();) {
            const Check& c = selected[i];
            CheckResult& r = rep.checks[i];
            r.name = c.group + "/" + c.subject;
            r.group = c.group;
            try {
                r.detail = c.body();
                r.passed = true;
            } catch (const std::exception& e) {
                r.detail = e.what();
            }
        }
    };
    const int jobs = std::max(1, std::min<int>(options.jobs, static_cast<int>(selected.size())));
    std::vector<std::thread> pool;
    for (int t = 1; t < jobs; ++t) pool.emplace_back(worker);
    worker();
    for (auto& t : pool) t.join();
    return rep;
}

std::string render_text(const VerifyReport& r)
{
    std::ostringstream os;
    int passed = 0;
    for (const auto& c : r.checks) {
        os << (c.passed ? "PASS " : "FAIL ") << c.name << ": " << c.detail << "\n";
        passed += c.passed;
    }
    os << passed << "/" << r.checks.size() << " checks passed" << (r.strict ? " (strict)" : "") << "\n";
    if (auto f = r.first_failure()) os << "first failure: " << *f << "\n";
    return os.str();
}

}  // namespace lieinv
