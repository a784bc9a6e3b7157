#ifndef LIEINV_TESTS_SUPPORT_HPP
#define LIEINV_TESTS_SUPPORT_HPP

#include <random>
#include <string>
#include <vector>

#include "lieinv/lie_algebra.hpp"
#include "lieinv/matrix.hpp"
#include "lieinv/multipoly.hpp"

namespace testing {

using lieinv::MultiPoly;
using lieinv::PolyMatrix;
using lieinv::Rational;

/// Parses over a fresh universe; variables appear in order of first use.
inline MultiPoly P(const std::string& text) { return lieinv::parse_poly(text, lieinv::make_universe({})); }

/// Parses over a given universe.
inline MultiPoly P(const std::string& text, const lieinv::Universe& u) { return lieinv::parse_poly(text, u); }

/// Dot products and the triple product on the kinematical coordinates, written out by hand.
struct Kin {
    lieinv::Universe u = lieinv::make_universe({"j1", "j2", "j3", "p1", "p2", "p3", "k1", "k2", "k3", "h", "T"});
    MultiPoly v(const std::string& s) const { return P(s, u); }
    MultiPoly jj() const { return v("j1^2+j2^2+j3^2"); }
    MultiPoly pp() const { return v("p1^2+p2^2+p3^2"); }
    MultiPoly kk() const { return v("k1^2+k2^2+k3^2"); }
    MultiPoly pk() const { return v("p1*k1+p2*k2+p3*k3"); }
    MultiPoly jk() const { return v("j1*k1+j2*k2+j3*k3"); }
    MultiPoly jp() const { return v("j1*p1+j2*p2+j3*p3"); }
    MultiPoly h() const { return v("h"); }
    MultiPoly M() const { return v("j1*(p2*k3-p3*k2) - j2*(p1*k3-p3*k1) + j3*(p1*k2-p2*k1)"); }
};

/// Seeded generators for property tests.
class Gen {
public:
    explicit Gen(unsigned seed) : rng_(seed) {}

    int integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }

    Rational rational(int range = 9)
    {
        const int num = integer(-range, range);
        const int den = integer(1, range);
        return Rational(num, den);
    }

    Rational nonzero_rational(int range = 9)
    {
        Rational r;
        do r = rational(range);
        while (r.is_zero());
        return r;
    }

    /// Sum of up to `max_terms` random terms of total degree <= max_degree.
    MultiPoly poly(const lieinv::Universe& u, int max_terms, int max_degree)
    {
        MultiPoly p = MultiPoly::zero(u);
        const int terms = integer(0, max_terms);
        for (int t = 0; t < terms; ++t) {
            MultiPoly m(u, rational());
            const int deg = integer(0, max_degree);
            for (int d = 0; d < deg; ++d)
                m *= MultiPoly::variable(u, (*u)[static_cast<std::size_t>(integer(0, static_cast<int>(u->size()) - 1))]);
            p += m;
        }
        return p;
    }

    PolyMatrix matrix(const lieinv::Universe& u, int n, int max_terms, int max_degree)
    {
        PolyMatrix m(n, n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) m(i, j) = poly(u, max_terms, max_degree);
        return m;
    }

private:
    std::mt19937 rng_;
};

/// Exact Gaussian elimination on a dense rational matrix, independent of the library.
inline Rational gauss_det(std::vector<std::vector<Rational>> a)
{
    const std::size_t n = a.size();
    Rational det(1);
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (p < n && a[p][c].is_zero()) ++p;
        if (p == n) return Rational(0);
        if (p != c) {
            std::swap(a[p], a[c]);
            det = -det;
        }
        det *= a[c][c];
        for (std::size_t r = c + 1; r < n; ++r) {
            const Rational f = a[r][c] / a[c][c];
            for (std::size_t k = c; k < n; ++k) a[r][k] -= f * a[c][k];
        }
    }
    return det;
}

inline std::size_t gauss_rank(std::vector<std::vector<Rational>> a)
{
    std::size_t rank = 0;
    const std::size_t rows = a.size(), cols = rows ? a[0].size() : 0;
    for (std::size_t c = 0; c < cols && rank < rows; ++c) {
        std::size_t p = rank;
        while (p < rows && a[p][c].is_zero()) ++p;
        if (p == rows) continue;
        std::swap(a[p], a[rank]);
        for (std::size_t r = rank + 1; r < rows; ++r) {
            const Rational f = a[r][c] / a[rank][c];
            for (std::size_t k = c; k < cols; ++k) a[r][k] -= f * a[rank][k];
        }
        ++rank;
    }
    return rank;
}

/// Sum over cyclic (i, j, k) of [[X_i, X_j], X_k], from the structure constants alone.
inline bool brute_jacobi(const lieinv::LieAlgebra& g)
{
    const int n = g.dim();
    std::vector<std::vector<std::vector<Rational>>> c(n, std::vector<std::vector<Rational>>(n, std::vector<Rational>(n)));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k) c[i][j][k] = g.structure(i, j, k);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            for (int k = j + 1; k < n; ++k)
                for (int l = 0; l < n; ++l) {
                    Rational s;
                    for (int m = 0; m < n; ++m)
                        s += c[i][j][m] * c[m][k][l] + c[j][k][m] * c[m][i][l] + c[k][i][m] * c[m][j][l];
                    if (!s.is_zero()) return false;
                }
    return true;
}

}  // namespace testing

#endif  // LIEINV_TESTS_SUPPORT_HPP
