#include "lieinv/gelfand.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <set>

#include "lieinv/catalog.hpp"
#include "lieinv/invariance.hpp"

namespace lieinv {

std::vector<MultiPoly> InvariantSet::polys() const
{
    std::vector<MultiPoly> out;
    out.reserve(members.size());
    for (const auto& m : members) out.push_back(m.poly);
    return out;
}

namespace {

const Universe& kinematical_universe()
{
    static const Universe u = make_universe({"j1", "j2", "j3", "p1", "p2", "p3", "k1", "k2", "k3", "h", "T"});
    return u;
}

PolyMatrix from_rows(const std::vector<std::vector<const char*>>& rows, const Universe& u)
{
    const auto n = static_cast<Eigen::Index>(rows.size());
    PolyMatrix m(n, n);
    for (Eigen::Index i = 0; i < n; ++i)
        for (Eigen::Index j = 0; j < n; ++j) m(i, j) = parse_poly(rows[i][j], u).over(u);
    return m;
}

using Rows = std::vector<std::vector<const char*>>;

// Rows 1-3 shared by the de Sitter, inhomogeneous and Carroll matrices.
const std::vector<const char*> kRow1 = {"0", "j3", "j2", "-k1", "p1"};
const std::vector<const char*> kRow2 = {"-j3", "0", "j1", "k2", "-p2"};
const std::vector<const char*> kRow3 = {"-j2", "-j1", "0", "-k3", "p3"};
const std::vector<const char*> kRow4 = {"-k1", "k2", "-k3", "0", "h"};

const std::vector<const char*> kNewton1 = {"0", "0", "0", "-k1", "p1"};
const std::vector<const char*> kNewton2 = {"0", "0", "0", "k2", "-p2"};
const std::vector<const char*> kNewton3 = {"0", "0", "0", "-k3", "p3"};
const std::vector<const char*> kNewton4 = {"-k1", "k2", "-k3", "0", "0"};

}  // namespace

PolyMatrix gelfand_matrix_so(int p, int q)
{
    const int n = p + q;
    if (p < 0 || q < 0 || n < 3) throw BadSignature("so(p,q) needs p, q >= 0 and p + q >= 3");
    const LieAlgebra g = so_algebra(p, q);
    auto metric = [p](int mu) { return mu < p ? 1 : -1; };
    PolyMatrix m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = MultiPoly::zero(g.coordinates());
    int idx = 0;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j, ++idx) {
            const MultiPoly e = g.coordinate(idx);
            m(i, j) = e * Rational(-metric(j));
            m(j, i) = e * Rational(metric(i));
        }
    return m;
}

MatrixRecipe kinematical_matrix(std::string_view name)
{
    const std::string canon = canonical_kinematical_name(name);
    if (canon.empty()) throw UnknownName("no kinematical matrix for '" + std::string(name) + "'");
    const Universe& u = kinematical_universe();
    MatrixRecipe r;
    r.algebra = canon;
    r.complete_leading = true;
    if (canon == "so32" || canon == "iso31") {
        r.base = from_rows({kRow1, kRow2, kRow3, kRow4, {"p1", "-p2", "p3", "-h", "0"}}, u);
    } else if (canon == "so41" || canon == "iso4") {
        r.base = from_rows({kRow1, kRow2, kRow3, kRow4, {"-p1", "p2", "-p3", "h", "0"}}, u);
    } else if (canon == "newton_minus") {
        r.base = from_rows({kNewton1, kNewton2, kNewton3, kNewton4, {"p1", "-p2", "p3", "0", "0"}}, u);
    } else if (canon == "newton_plus") {
        r.base = from_rows({kNewton1, kNewton2, kNewton3, kNewton4, {"-p1", "p2", "-p3", "0", "0"}}, u);
    } else if (canon == "carroll") {
        r.base = from_rows({kRow1, kRow2, kRow3, {"-k1", "k2", "-k3", "T", "h"}, {"-p1", "p2", "-p3", "h", "T"}}, u);
        r.t_dependent = true;
    } else if (canon == "galilei") {
        r.base = from_rows({kNewton1, kNewton2, kNewton3, kNewton4, {"-p1", "p2", "-p3", "0", "T"}}, u);
        r.t_dependent = true;
    } else {  // static
        r.base = from_rows({{"0", "0", "0", "-k1", "p1*T"},
                            {"0", "0", "0", "k2", "-p2*T"},
                            {"0", "0", "0", "-k3", "p3*T"},
                            {"-k1", "k2", "-k3", "0", "-h*T"},
                            {"-p1", "p2", "-p3", "-h", "0"}},
                           u);
        r.t_dependent = true;
    }
    if (canon == "iso31") {
        r.combine = Combine::plus_T_times_minor;
        r.minor_row = r.minor_col = 5;
    } else if (canon == "iso4") {
        // Deleting row/column 5 gives a non-invariant C2; row/column 4 carries the contracted directions.
        r.combine = Combine::plus_T_times_minor;
        r.minor_row = r.minor_col = 4;
    }
    return r;
}

MatrixRecipe isp_matrix(int n)
{
    if (n < 2) throw BadParams("isp(2N) needs N >= 2");
    const LieAlgebra g = isp_algebra(n);
    const Universe u = merge_universes(g.coordinates(), make_universe({"T"}));
    auto var = [&](const std::string& name) { return MultiPoly::variable(u, name); };
    auto s = [](int i) { return std::to_string(i + 1); };
    auto sym = [&](const char* prefix_lo, int i, int j) {
        const int a = std::min(i, j), b = std::max(i, j);
        return std::string(prefix_lo) == "L" ? "x_m" + s(a) + "_" + s(b) : "x_" + s(a) + "_m" + s(b);
    };
    const MultiPoly t = var("T");
    const int size = 2 * n + 1;
    PolyMatrix c(size, size);
    for (int i = 0; i < size; ++i)
        for (int j = 0; j < size; ++j) c(i, j) = MultiPoly::zero(u);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            c(i, j) = var("x_" + s(i) + "_" + s(j));
            c(i, n + j) = -var(sym("L", i, j));
            c(n + i, j) = var(sym("R", i, j));
            c(n + i, n + j) = -var("x_" + s(j) + "_" + s(i));
        }
        c(i, 2 * n) = var("p" + s(i)) * t;
        c(n + i, 2 * n) = var("q" + s(i)) * t;
        c(2 * n, i) = -var("q" + s(i));
        c(2 * n, n + i) = var("p" + s(i));
    }
    MatrixRecipe r;
    r.algebra = g.name();
    r.base = c;
    r.combine = Combine::plus_T_times_minor;
    r.minor_row = r.minor_col = size;
    r.t_dependent = true;
    return r;
}

MatrixRecipe so_recipe(int p, int q)
{
    MatrixRecipe r;
    r.algebra = "so(" + std::to_string(p) + "," + std::to_string(q) + ")";
    r.base = gelfand_matrix_so(p, q);
    return r;
}

MatrixRecipe recipe_for(std::string_view name)
{
    if (is_kinematical(name)) return kinematical_matrix(name);
    const LieAlgebra g = catalog(name);  // throws UnknownName
    if (g.name().rfind("isp(", 0) == 0) return isp_matrix(std::stoi(g.name().substr(4)) / 2);
    if (g.name().rfind("so(", 0) == 0) {
        const auto comma = g.name().find(',');
        return so_recipe(std::stoi(g.name().substr(3, comma - 3)), std::stoi(g.name().substr(comma + 1)));
    }
    throw UnknownName("no matrix recipe for '" + std::string(name) + "'");
}

MultiPoly evaluate_recipe(const MatrixRecipe& r)
{
    const Eigen::Index n = r.base.rows();
    MultiPoly p = charpoly(r.base, r.t);  // (-1)^n |D - T Id|
    if (r.combine == Combine::plus_T_times_minor) {
        const PolyMatrix minor = minor_matrix(r.base, r.minor_row - 1, r.minor_col - 1);
        // charpoly(minor) = (-1)^(n-1) |minor - T Id|, so the sign flips to (-1)^n.
        const MultiPoly tv = MultiPoly::variable(p.universe(), r.t);
        p -= tv * charpoly(minor, r.t);
    }
    p = p.over(merge_universes(p.universe(), matrix_universe(r.base)));
    if (r.complete_leading && p.coefficient(r.t, static_cast<unsigned>(n)).is_zero())
        p += pow(MultiPoly::variable(p.universe(), r.t), static_cast<unsigned>(n));
    return p;
}

InvariantSet extract_invariants(const MultiPoly& p, const LieAlgebra& g, std::string_view t)
{
    InvariantSet s;
    s.algebra = g.name();
    // Constant coefficients (the leading one included) carry no invariant.
    const unsigned d = p.degree_in(t);
    for (unsigned k = d + 1; k-- > 0;) {
        MultiPoly c = p.coefficient(t, k);
        if (c.is_constant()) continue;
        Universe target = merge_universes(g.coordinates(), c.universe());
        try {
            c = c.over(g.coordinates());
        } catch (const std::invalid_argument&) {
            c = c.over(target);
        }
        const auto bad = failing_generators(g, c);
        if (!bad.empty())
            throw NonInvariantCoefficient("coefficient of " + std::string(t) + "^" + std::to_string(k) + " (" +
                                              c.to_string() + ") is not annihilated by the operator of " +
                                              g.generators()[bad.front()],
                                          static_cast<int>(k));
        s.members.push_back({c, c.total_degree(), "coefficient of " + std::string(t) + "^" + std::to_string(k)});
    }
    return s;
}

std::vector<MultiPoly> block_parts(const MultiPoly& p)
{
    const auto& vars = p.variables();
    auto block = [](const std::string& v) {
        std::string b;
        for (char ch : v) {
            if (!std::isalpha(static_cast<unsigned char>(ch))) break;
            b += ch;
        }
        return b;
    };
    std::map<std::set<std::string>, std::vector<MultiPoly::Term>> groups;
    std::vector<std::set<std::string>> order;
    for (const auto& t : p.terms()) {
        std::set<std::string> key;
        for (std::size_t i = 0; i < vars.size(); ++i)
            if (t.monomial.exponent(i)) key.insert(block(vars[i]));
        if (!groups.count(key)) order.push_back(key);
        groups[key].push_back(t);
    }
    std::vector<MultiPoly> parts;
    for (const auto& key : order) parts.push_back(sign_normalized(MultiPoly::from_terms(p.universe(), groups[key])));
    return parts;
}

InvariantSet simplify_invariants(const InvariantSet& s, const LieAlgebra& g)
{
    const int target = num_invariants(g);
    if (independence_rank(s.polys()) >= target) return s;
    std::vector<Invariant> expanded;
    for (const auto& m : s.members) {
        const auto parts = block_parts(m.poly);
        const bool split = parts.size() > 1 &&
                           std::all_of(parts.begin(), parts.end(), [&](const MultiPoly& q) { return is_invariant(g, q); });
        if (!split) {
            expanded.push_back(m);
            continue;
        }
        for (const auto& q : parts) expanded.push_back({q, q.total_degree(), "part of " + m.provenance});
    }
    InvariantSet out;
    out.algebra = s.algebra;
    std::vector<MultiPoly> kept;
    for (const auto& m : expanded) {
        if (!independent_basis({m.poly}, kept).empty()) {
            kept.push_back(m.poly);
            out.members.push_back(m);
        }
    }
    return out;
}

InvariantSet invariants_from_recipe(const MatrixRecipe& r, const LieAlgebra& g)
{
    return simplify_invariants(extract_invariants(evaluate_recipe(r), g, r.t), g);
}

std::optional<std::pair<PolyMatrix, PolyMatrix>> d1_decomposition(std::string_view name)
{
    const std::string canon = canonical_kinematical_name(name);
    const Universe& u = kinematical_universe();
    const std::vector<const char*> zero = {"0", "0", "0", "0", "0"};
    const Rows d2_k = {{"0", "0", "0", "-k1", "0"}, {"0", "0", "0", "k2", "0"}, {"0", "0", "0", "-k3", "0"}};
    const Rows iso4_d1 = {{"0", "j3", "j2", "0", "p1"}, {"-j3", "0", "j1", "0", "-p2"}, {"-j2", "-j1", "0", "0", "p3"}};
    if (canon == "iso31")
        return std::pair{from_rows({kRow1, kRow2, kRow3, kRow4, zero}, u),
                         from_rows({zero, zero, zero, zero, {"p1", "-p2", "p3", "-h", "0"}}, u)};
    if (canon == "iso4")
        return std::pair{from_rows({iso4_d1[0], iso4_d1[1], iso4_d1[2], kRow4, {"-p1", "p2", "-p3", "0", "0"}}, u),
                         from_rows({d2_k[0], d2_k[1], d2_k[2], zero, {"0", "0", "0", "h", "0"}}, u)};
    if (canon == "carroll")
        return std::pair{from_rows({iso4_d1[0], iso4_d1[1], iso4_d1[2], kRow4, zero}, u),
                         from_rows({d2_k[0], d2_k[1], d2_k[2], {"0", "0", "0", "T", "0"}, {"-p1", "p2", "-p3", "h", "T"}}, u)};
    return std::nullopt;
}

std::optional<std::pair<int, int>> homomorphism_defect(const LieAlgebra& g, const PolyMatrix& m)
{
    std::map<std::string, Rational> point;
    for (const auto& v : *matrix_universe(m)) point[v] = Rational(0);
    point["T"] = Rational(1);
    std::vector<RationalMatrix> images;
    for (int i = 0; i < g.dim(); ++i) {
        PolyMatrix d(m.rows(), m.cols());
        for (Eigen::Index a = 0; a < m.rows(); ++a)
            for (Eigen::Index b = 0; b < m.cols(); ++b) d(a, b) = differentiate(m(a, b), g.coordinate_name(i));
        images.push_back(evaluate(d, point));
    }
    for (int i = 0; i < g.dim(); ++i)
        for (int j = i + 1; j < g.dim(); ++j) {
            RationalMatrix lhs = images[i] * images[j] - images[j] * images[i];
            RationalMatrix rhs = RationalMatrix::Constant(m.rows(), m.cols(), Rational(0));
            for (const auto& t : g.bracket(i, j)) rhs += images[t.k] * t.c;
            for (Eigen::Index a = 0; a < m.rows(); ++a)
                for (Eigen::Index b = 0; b < m.cols(); ++b)
                    if (lhs(a, b) != rhs(a, b)) return std::pair{i, j};
        }
    return std::nullopt;
}

}  // namespace lieinv
