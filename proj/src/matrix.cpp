#include "lieinv/matrix.hpp"

#include <random>
#include <sstream>

namespace lieinv {

int rank_exact(const RationalMatrix& m) { return rank_fraction_free(m); }

RationalMatrix evaluate(const PolyMatrix& m, const std::map<std::string, Rational>& point)
{
    RationalMatrix out(m.rows(), m.cols());
    for (Eigen::Index i = 0; i < m.rows(); ++i)
        for (Eigen::Index j = 0; j < m.cols(); ++j) out(i, j) = evaluate(m(i, j), point);
    return out;
}

PolyMatrix substitute(const PolyMatrix& m, const std::map<std::string, MultiPoly>& bindings)
{
    PolyMatrix out(m.rows(), m.cols());
    for (Eigen::Index i = 0; i < m.rows(); ++i)
        for (Eigen::Index j = 0; j < m.cols(); ++j) out(i, j) = substitute(m(i, j), bindings);
    return out;
}

Universe matrix_universe(const PolyMatrix& m)
{
    Universe u = make_universe({});
    for (Eigen::Index i = 0; i < m.rows(); ++i)
        for (Eigen::Index j = 0; j < m.cols(); ++j) u = merge_universes(u, m(i, j).universe());
    return u;
}

PolyMatrix unify(const PolyMatrix& m)
{
    const Universe u = matrix_universe(m);
    PolyMatrix out(m.rows(), m.cols());
    for (Eigen::Index i = 0; i < m.rows(); ++i)
        for (Eigen::Index j = 0; j < m.cols(); ++j) out(i, j) = m(i, j).over(u);
    return out;
}

MultiPoly charpoly(const PolyMatrix& m, std::string_view t)
{
    if (m.rows() != m.cols()) throw std::invalid_argument("charpoly: matrix is not square");
    Universe u = matrix_universe(m);
    if (!index_of(u, t)) u = merge_universes(u, make_universe({std::string(t)}));
    const MultiPoly tv = MultiPoly::variable(u, t);
    PolyMatrix shifted(m.rows(), m.cols());
    for (Eigen::Index i = 0; i < m.rows(); ++i)
        for (Eigen::Index j = 0; j < m.cols(); ++j) shifted(i, j) = m(i, j).over(u) - (i == j ? tv : MultiPoly::zero(u));
    MultiPoly det = determinant(shifted).over(u);
    return m.rows() % 2 ? -det : det;
}

std::vector<MultiPoly> collect(const MultiPoly& p, std::string_view t)
{
    const unsigned d = p.degree_in(t);
    std::vector<MultiPoly> out;
    out.reserve(d + 1);
    for (unsigned k = 0; k <= d; ++k) out.push_back(p.coefficient(t, k));
    return out;
}

std::map<std::string, Rational> sample_point(const std::vector<std::string>& variables, unsigned seed)
{
    std::mt19937 gen(seed);
    std::map<std::string, Rational> point;
    for (const auto& v : variables) {
        const long num = static_cast<long>(gen() % 20001) - 10000;
        const long den = static_cast<long>(gen() % 10000) + 1;
        point.emplace(v, Rational(num, den));
    }
    return point;
}

GenericRank generic_rank(const PolyMatrix& m, std::size_t term_budget)
{
    GenericRank r;
    const PolyMatrix u = unify(m);
    const Universe uv = matrix_universe(u);
    const auto& vars = *uv;
    for (unsigned seed : kRankSeeds) {
        const int k = rank_exact(evaluate(u, sample_point(vars, seed)));
        r.per_point.push_back(k);
        r.evaluated = std::max(r.evaluated, k);
    }
    try {
        r.symbolic = rank_fraction_free(u, term_budget);
    } catch (const TermBudgetExceeded&) {
        r.symbolic.reset();
    }
    return r;
}

int rank_over_function_field(const PolyMatrix& m, std::size_t term_budget)
{
    const GenericRank r = generic_rank(m, term_budget);
    if (r.symbolic && *r.symbolic != r.evaluated)
        throw std::logic_error("rank_over_function_field: symbolic rank " + std::to_string(*r.symbolic) +
                               " disagrees with evaluated rank " + std::to_string(r.evaluated));
    return r.evaluated;
}

bool equal(const PolyMatrix& a, const PolyMatrix& b)
{
    if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
    for (Eigen::Index i = 0; i < a.rows(); ++i)
        for (Eigen::Index j = 0; j < a.cols(); ++j)
            if (a(i, j) != b(i, j)) return false;
    return true;
}

std::string to_string(const PolyMatrix& m)
{
    std::ostringstream os;
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        os << "[";
        for (Eigen::Index j = 0; j < m.cols(); ++j) os << (j ? ", " : "") << m(i, j).to_string();
        os << "]\n";
    }
    return os.str();
}

}  // namespace lieinv
