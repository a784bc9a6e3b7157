#ifndef LIEINV_MATRIX_HPP
#define LIEINV_MATRIX_HPP

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Core>

#include "lieinv/multipoly.hpp"
#include "lieinv/rational.hpp"

namespace Eigen {

template <>
struct NumTraits<lieinv::Rational> : GenericNumTraits<lieinv::Rational> {
    using Real = lieinv::Rational;
    using NonInteger = lieinv::Rational;
    using Literal = lieinv::Rational;
    enum { IsComplex = 0, IsInteger = 0, IsSigned = 1, RequireInitialization = 1, ReadCost = 1, AddCost = 4, MulCost = 8 };
};

template <>
struct NumTraits<lieinv::MultiPoly> : GenericNumTraits<lieinv::MultiPoly> {
    using Real = lieinv::MultiPoly;
    using NonInteger = lieinv::MultiPoly;
    using Literal = lieinv::MultiPoly;
    enum { IsComplex = 0, IsInteger = 0, IsSigned = 1, RequireInitialization = 1, ReadCost = 1, AddCost = 16, MulCost = 64 };
};

}  // namespace Eigen

namespace lieinv {

template <class Scalar>
using DenseMatrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

using PolyMatrix = DenseMatrix<MultiPoly>;
using RationalMatrix = DenseMatrix<Rational>;

/// Raised by the symbolic elimination when an intermediate entry exceeds the term budget.
struct TermBudgetExceeded : std::runtime_error {
    TermBudgetExceeded() : std::runtime_error("term budget exceeded") {}
};

namespace detail {

inline std::size_t entry_size(const Rational&) { return 1; }
inline std::size_t entry_size(const MultiPoly& p) { return p.num_terms(); }

template <class Scalar>
void check_square(const DenseMatrix<Scalar>& m)
{
    if (m.rows() != m.cols()) throw std::invalid_argument("matrix is not square");
}

}  // namespace detail

/// Fraction-free Gaussian elimination (Bareiss). Every division is exact, so the
/// entries stay in the coefficient ring. Pivots are chosen by smallest `pivot_cost`.
template <class Scalar>
Scalar determinant_bareiss(DenseMatrix<Scalar> m)
{
    detail::check_square(m);
    const Eigen::Index n = m.rows();
    if (n == 0) return Scalar(1L);
    Scalar prev(1L);
    bool negate = false;
    for (Eigen::Index k = 0; k + 1 < n; ++k) {
        Eigen::Index best = -1;
        for (Eigen::Index i = k; i < n; ++i)
            if (!is_zero(m(i, k)) && (best < 0 || pivot_cost(m(i, k)) < pivot_cost(m(best, k)))) best = i;
        if (best < 0) return Scalar(0L);
        if (best != k) {
            m.row(k).swap(m.row(best));
            negate = !negate;
        }
        for (Eigen::Index i = k + 1; i < n; ++i) {
            for (Eigen::Index j = k + 1; j < n; ++j) {
                Scalar v = m(k, k) * m(i, j) - m(i, k) * m(k, j);
                m(i, j) = exact_quotient(v, prev);
            }
            m(i, k) = Scalar(0L);
        }
        prev = m(k, k);
    }
    Scalar det = m(n - 1, n - 1);
    return negate ? Scalar(-det) : det;
}

/// Laplace expansion along the first row. Exponential; an independent check for small matrices.
template <class Scalar>
Scalar determinant_cofactor(const DenseMatrix<Scalar>& m)
{
    detail::check_square(m);
    const Eigen::Index n = m.rows();
    if (n == 0) return Scalar(1L);
    if (n == 1) return m(0, 0);
    if (n == 2) return m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0);
    Scalar sum(0L);
    for (Eigen::Index j = 0; j < n; ++j) {
        if (is_zero(m(0, j))) continue;
        DenseMatrix<Scalar> sub(n - 1, n - 1);
        for (Eigen::Index r = 1; r < n; ++r)
            for (Eigen::Index c = 0, cc = 0; c < n; ++c) {
                if (c == j) continue;
                sub(r - 1, cc++) = m(r, c);
            }
        Scalar term = m(0, j) * determinant_cofactor(sub);
        if (j % 2)
            sum -= term;
        else
            sum += term;
    }
    return sum;
}

/// Bareiss, falling back to cofactor expansion for n <= 5 if an exact division fails.
template <class Scalar>
Scalar determinant(const DenseMatrix<Scalar>& m)
{
    try {
        return determinant_bareiss(m);
    } catch (const std::domain_error&) {
        if (m.rows() > 5) throw;
        return determinant_cofactor(m);
    }
}

/// Rank by fraction-free elimination with full pivoting. Throws TermBudgetExceeded
/// when an entry grows beyond `term_budget` terms (0 = unlimited).
template <class Scalar>
int rank_fraction_free(DenseMatrix<Scalar> m, std::size_t term_budget = 0)
{
    const Eigen::Index rows = m.rows();
    const Eigen::Index cols = m.cols();
    Scalar prev(1L);
    int rank = 0;
    for (Eigen::Index k = 0; k < std::min(rows, cols); ++k) {
        Eigen::Index bi = -1, bj = -1;
        for (Eigen::Index i = k; i < rows; ++i)
            for (Eigen::Index j = k; j < cols; ++j)
                if (!is_zero(m(i, j)) && (bi < 0 || pivot_cost(m(i, j)) < pivot_cost(m(bi, bj)))) {
                    bi = i;
                    bj = j;
                }
        if (bi < 0) break;
        m.row(k).swap(m.row(bi));
        m.col(k).swap(m.col(bj));
        ++rank;
        for (Eigen::Index i = k + 1; i < rows; ++i) {
            const bool lead_zero = is_zero(m(i, k));
            for (Eigen::Index j = k + 1; j < cols; ++j) {
                Scalar v = lead_zero ? Scalar(m(k, k) * m(i, j)) : Scalar(m(k, k) * m(i, j) - m(i, k) * m(k, j));
                m(i, j) = exact_quotient(v, prev);
                if (term_budget && detail::entry_size(m(i, j)) > term_budget) throw TermBudgetExceeded();
            }
            m(i, k) = Scalar(0L);
        }
        prev = m(k, k);
    }
    return rank;
}

/// Rank of a rational matrix.
int rank_exact(const RationalMatrix& m);

RationalMatrix evaluate(const PolyMatrix& m, const std::map<std::string, Rational>& point);
PolyMatrix substitute(const PolyMatrix& m, const std::map<std::string, MultiPoly>& bindings);

/// Union of the entry universes, in order of first appearance.
Universe matrix_universe(const PolyMatrix& m);
/// Re-expresses every entry over one common universe.
PolyMatrix unify(const PolyMatrix& m);

/// The matrix with row `row` and column `col` removed (0-based).
template <class Scalar>
DenseMatrix<Scalar> minor_matrix(const DenseMatrix<Scalar>& m, Eigen::Index row, Eigen::Index col)
{
    if (row < 0 || row >= m.rows() || col < 0 || col >= m.cols()) throw std::out_of_range("minor_matrix index");
    DenseMatrix<Scalar> out(m.rows() - 1, m.cols() - 1);
    for (Eigen::Index i = 0, oi = 0; i < m.rows(); ++i) {
        if (i == row) continue;
        for (Eigen::Index j = 0, oj = 0; j < m.cols(); ++j) {
            if (j == col) continue;
            out(oi, oj++) = m(i, j);
        }
        ++oi;
    }
    return out;
}

/// det(M - T Id) multiplied by (-1)^n, which is monic in T whenever the
/// entries of M do not involve T. The result is collected over a universe containing T.
MultiPoly charpoly(const PolyMatrix& m, std::string_view t = "T");

/// Coefficient list c_0..c_d of a polynomial in `t` (c_k multiplies t^k).
std::vector<MultiPoly> collect(const MultiPoly& p, std::string_view t);

/// Deterministic pseudo-random point: numerators in [-10^4, 10^4], denominators in [1, 10^4].
std::map<std::string, Rational> sample_point(const std::vector<std::string>& variables, unsigned seed);

inline constexpr unsigned kRankSeeds[] = {1, 2, 3};
inline constexpr std::size_t kDefaultTermBudget = 2000;

struct GenericRank {
    std::optional<int> symbolic;  // empty when the term budget was exhausted
    int evaluated = 0;            // maximum over the sample points
    std::vector<int> per_point;
};

GenericRank generic_rank(const PolyMatrix& m, std::size_t term_budget = kDefaultTermBudget);

/// Generic rank over the field of rational functions. Runs both the symbolic and the
/// evaluation path and throws std::logic_error if they disagree.
int rank_over_function_field(const PolyMatrix& m, std::size_t term_budget = kDefaultTermBudget);

bool equal(const PolyMatrix& a, const PolyMatrix& b);
std::string to_string(const PolyMatrix& m);

}  // namespace lieinv

#endif  // LIEINV_MATRIX_HPP
