#ifndef LIEINV_GELFAND_HPP
#define LIEINV_GELFAND_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "lieinv/lie_algebra.hpp"
#include "lieinv/matrix.hpp"

namespace lieinv {

enum class Combine { plain, plus_T_times_minor };

/// A matrix together with the rule that turns it into a polynomial in T.
struct MatrixRecipe {
    std::string algebra;
    PolyMatrix base;
    Combine combine = Combine::plain;
    int minor_row = 0;  // 1-based, used by plus_T_times_minor
    int minor_col = 0;
    bool t_dependent = false;
    /// Add T^N when the combined determinant has no pure T^N term.
    bool complete_leading = false;
    std::string t = "T";
};

struct Invariant {
    MultiPoly poly;
    int degree = 0;
    std::string provenance;  // e.g. "coefficient of T^3"
};

struct InvariantSet {
    std::string algebra;
    std::vector<Invariant> members;

    std::vector<MultiPoly> polys() const;
    std::size_t size() const { return members.size(); }
};

/// Generic matrix for so(p,q): (i,j) = -g_jj e_ij and (j,i) = g_ii e_ij for i < j.
PolyMatrix gelfand_matrix_so(int p, int q);

/// The 5x5 matrix D of a kinematical algebra (any catalog alias).
MatrixRecipe kinematical_matrix(std::string_view name);

/// (2N+1)x(2N+1) matrix C of Isp(2N,R) with the composite rule on the last row/column minor.
MatrixRecipe isp_matrix(int n);

/// Plain recipe for so(p,q) on its E-basis.
MatrixRecipe so_recipe(int p, int q);

/// The recipe for any catalog algebra that has one; throws UnknownName otherwise.
MatrixRecipe recipe_for(std::string_view name);

/// (-1)^N (|D - T Id| [+ T |minor - T Id|]), collected in T.
MultiPoly evaluate_recipe(const MatrixRecipe& r);

/// Nonconstant coefficients of the powers of T, highest power first. Every coefficient
/// must be annihilated by all coadjoint operators of g, else NonInvariantCoefficient.
InvariantSet extract_invariants(const MultiPoly& p, const LieAlgebra& g, std::string_view t = "T");

/// Splits a polynomial by the set of variable blocks each term touches. A block is the
/// alphabetic prefix of a variable name (j1 -> "j").
std::vector<MultiPoly> block_parts(const MultiPoly& p);

/// When the coefficient set has rank below N(g), replaces coefficients whose block
/// parts are all invariant by those parts, then reduces to an independent basis.
InvariantSet simplify_invariants(const InvariantSet& s, const LieAlgebra& g);

/// Recipe evaluation, extraction and (if needed) simplification in one call.
InvariantSet invariants_from_recipe(const MatrixRecipe& r, const LieAlgebra& g);

/// The split D = D1 + D2 of the inhomogeneous and Carroll matrices.
std::optional<std::pair<PolyMatrix, PolyMatrix>> d1_decomposition(std::string_view name);

/// Linear map X_i -> dM/dx_i (T set to 1). Returns the first pair (i, j) where the bracket
/// of the images differs from the image of the bracket, or nullopt for a homomorphism.
std::optional<std::pair<int, int>> homomorphism_defect(const LieAlgebra& g, const PolyMatrix& m);

}  // namespace lieinv

#endif  // LIEINV_GELFAND_HPP
