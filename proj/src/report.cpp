#include "lieinv/report.hpp"

#include <sstream>

#include "lieinv/catalog.hpp"
#include "lieinv/invariance.hpp"

namespace lieinv {

namespace {

Universe with_t(const Universe& coords, const std::string& t = "T")
{
    return merge_universes(coords, make_universe({t}));
}

void write_entries(std::ostringstream& os, const std::vector<InvariantEntry>& entries)
{
    int idx = 1;
    for (const auto& e : entries) {
        os << "  [" << idx++ << "] degree " << e.degree << ", " << e.provenance << "\n"
           << "      " << e.poly << "\n"
           << "      annihilated by " << e.operators_passed << "/" << e.operators_checked << " coadjoint operators"
           << (e.verified() ? "" : "  FAILED") << "\n";
    }
}

void write_set(std::ostringstream& os, const InvariantSet& s)
{
    for (const auto& m : s.members) os << "  " << m.poly << "    (degree " << m.degree << ", " << m.provenance << ")\n";
    if (s.members.empty()) os << "  (none)\n";
}

}  // namespace

std::vector<InvariantEntry> check_entries(const LieAlgebra& g, const InvariantSet& s)
{
    const auto ops = coadjoint_operators(g);
    std::vector<InvariantEntry> out;
    for (const auto& m : s.members) {
        InvariantEntry e{m.poly, m.degree, m.provenance, static_cast<int>(ops.size()), 0};
        for (const auto& op : ops)
            if (op.apply(m.poly).is_zero()) ++e.operators_passed;
        out.push_back(std::move(e));
    }
    return out;
}

InvariantsReport build_invariants_report(const LieAlgebra& g, const std::optional<MatrixRecipe>& recipe)
{
    InvariantsReport r;
    r.algebra = g.name();
    r.dim = g.dim();
    r.n_invariants = num_invariants(g);
    const Universe u = with_t(g.coordinates(), recipe ? recipe->t : "T");
    InvariantSet s;
    s.algebra = g.name();
    if (recipe) {
        r.method = "matrix";
        const MultiPoly p = evaluate_recipe(*recipe);
        r.polynomial = p.over(u);
        s = simplify_invariants(extract_invariants(p, g, recipe->t), g);
    } else {
        r.method = "kernel";
        for (const auto& p : polynomial_invariants(g))
            s.members.push_back({p, static_cast<int>(p.total_degree()),
                                 "homogeneous kernel, degree " + std::to_string(p.total_degree())});
        if (r.n_invariants == g.dim())
            r.notes.push_back("N(g) = dim g: every coordinate function is an invariant");
        else if (static_cast<int>(s.size()) < r.n_invariants)
            r.notes.push_back("only " + std::to_string(s.size()) + " of N(g) = " + std::to_string(r.n_invariants) +
                              " invariants are polynomials of degree <= 4");
    }
    for (auto& m : s.members) m.poly = m.poly.over(u);
    r.invariants = check_entries(g, s);
    r.independence_rank = independence_rank(s.polys());
    if (recipe && canonical_kinematical_name(g.name()) == "static")
        r.notes.push_back("h is itself central; the matrix produces h^2");
    return r;
}

ContractionReport build_contraction_report(const ContractionSpec& spec, const std::optional<MatrixRecipe>& recipe)
{
    ContractionReport r;
    r.name = spec.name.empty() ? spec.algebra.name() + "'" : spec.name;
    r.source = spec.algebra.name();
    r.exponents = spec.exponents;
    r.contracted = contract_algebra(spec);
    r.n_source = num_invariants(spec.algebra);
    r.n_contracted = num_invariants(r.contracted);
    if (r.n_source != r.n_contracted) {
        r.diagnostic = ContractionDiagnostic{"CountMismatch", "N(g) = " + std::to_string(r.n_source) +
                                                                  " but the contraction has N = " +
                                                                  std::to_string(r.n_contracted)};
        return r;
    }
    if (!recipe) return r;
    const Universe u = with_t(spec.algebra.coordinates(), recipe->t);
    const EpsLimit lim = contract_charpoly(rescale(evaluate_recipe(*recipe), spec));
    r.alpha = lim.alpha;
    r.limit = lim.limit.over(u);
    InvariantSet s = extract_invariants(lim.limit, r.contracted, recipe->t);
    for (auto& m : s.members) m.poly = m.poly.over(u);
    r.invariants = check_entries(r.contracted, s);
    const int rank = independence_rank(s.polys());
    if (rank < r.n_contracted)
        r.diagnostic = ContractionDiagnostic{"DependentInvariants", "limit coefficients have rank " +
                                                                        std::to_string(rank) + " < N(g') = " +
                                                                        std::to_string(r.n_contracted)};
    return r;
}

std::string render_text(const InvariantsReport& r)
{
    std::ostringstream os;
    os << "algebra: " << r.algebra << "\n"
       << "dim: " << r.dim << "\n"
       << "N(g): " << r.n_invariants << "\n"
       << "method: " << r.method << "\n";
    if (r.polynomial) os << "P(T) = " << *r.polynomial << "\n";
    os << "invariants:\n";
    write_entries(os, r.invariants);
    os << "independence rank: " << r.independence_rank << "\n";
    for (const auto& n : r.notes) os << "note: " << n << "\n";
    return os.str();
}

std::string render_text(const ContractionReport& r)
{
    std::ostringstream os;
    os << "contraction: " << r.name << " (source " << r.source << ")\n" << "exponents:";
    const auto& gens = r.contracted.generators();
    for (std::size_t i = 0; i < gens.size(); ++i) os << " " << gens[i] << "=" << r.exponents[i];
    os << "\ncontracted brackets:\n" << bracket_table(r.contracted)
       << "N(source): " << r.n_source << "\n"
       << "N(contracted): " << r.n_contracted << "\n";
    if (r.alpha) os << "alpha: " << *r.alpha << "\n";
    if (r.limit) os << "limit: " << *r.limit << "\n";
    if (!r.invariants.empty()) {
        os << "invariants:\n";
        write_entries(os, r.invariants);
    }
    if (r.diagnostic) os << "diagnostic: " << r.diagnostic->kind << ": " << r.diagnostic->message << "\n";
    return os.str();
}

std::string render_text(const MLPReport& r)
{
    std::ostringstream os;
    os << "algebra: " << r.algebra << "\nsubalgebra:";
    for (int i : r.subalgebra_indices) os << " " << i + 1;
    os << "\nn: " << r.n << "\nm: " << r.m << "\nl': " << r.l_prime << "\nN': " << r.n_prime
       << "\nsurviving Casimirs: " << r.surviving_casimirs << "\nCasimirs:\n";
    write_set(os, r.casimirs);
    os << "subalgebra Casimirs:\n";
    write_set(os, r.subalgebra_casimirs);
    os << "reduced P(T) = " << r.reduced_polynomial << "\ncandidates:\n";
    for (const auto& v : r.verdicts)
        os << "  " << (v.accepted ? "accept " : "reject ") << v.poly << "\n"
           << "      " << v.origin << "; " << v.reason << "\n";
    os << "accepted labels:\n";
    for (const auto& p : r.accepted_labels) os << "  " << p << "\n";
    if (r.accepted_labels.empty()) os << "  (none)\n";
    os << "method fails: " << (r.method_fails ? "yes" : "no") << "\n";
    for (const auto& f : r.flags) os << "flag: " << f << "\n";
    for (const auto& n : r.notes) os << "note: " << n << "\n";
    return os.str();
}

}  // namespace lieinv
