#ifndef LIEINV_CONTRACTION_HPP
#define LIEINV_CONTRACTION_HPP

#include <map>
#include <string>
#include <vector>

#include "lieinv/gelfand.hpp"
#include "lieinv/lie_algebra.hpp"

namespace lieinv {

/// Diagonal rescaling X_i -> eps^(-a_i) X_i. A bracket term C_ij^k then scales as
/// eps^(-(a_i + a_j - a_k)), so with eps -> infinity terms of net degree 0 survive,
/// positive net degree vanishes and negative net degree diverges.
struct ContractionSpec {
    std::string name;
    LieAlgebra algebra;
    std::vector<int> exponents;  // one per generator
};

/// Exponents keyed by generator name. A key may also name a block: "P" covers P1, P2, P3.
/// Unlisted generators get 0. Throws UnknownName for keys that match nothing.
ContractionSpec make_spec(const LieAlgebra& g, const std::map<std::string, int>& exponents, std::string name = "");

struct ScaledTerm {
    int i, j, k;  // 0-based, i < j
    Rational c;
    int net_degree;  // a_i + a_j - a_k
};

std::vector<ScaledTerm> transformed_structure(const ContractionSpec& spec);

/// Throws DivergentContraction with the first offending (i, j, k).
LieAlgebra contract_algebra(const ContractionSpec& spec);

struct EpsLimit {
    int alpha = 0;
    MultiPoly limit;
};

/// alpha = degree in eps; the limit is the coefficient of eps^alpha.
EpsLimit contract_charpoly(const MultiPoly& p_eps, std::string_view eps = "eps");

/// Substitutes x_i -> eps^(a_i) x_i, the coordinate form of the basis change.
MultiPoly rescale(const MultiPoly& p, const ContractionSpec& spec, std::string_view eps = "eps");

struct PipelineResult {
    LieAlgebra contracted;
    MultiPoly p;      // P(T) of the original algebra
    MultiPoly p_eps;  // after the basis change
    int alpha = 0;
    MultiPoly limit;
    InvariantSet invariants;  // of the contracted algebra
};

/// Steps: recipe polynomial, basis change, eps-limit, coefficient extraction, independence.
/// Throws CountMismatch when N(g) != N(g') and DependentInvariants when the limit
/// coefficients have rank below N(g').
PipelineResult contraction_pipeline(const ContractionSpec& spec, const MatrixRecipe& recipe);

/// Catalog contractions between kinematical algebras, e.g. "so32_to_iso31".
ContractionSpec named_contraction(std::string_view name);
/// Target catalog algebra of a named contraction.
std::string named_contraction_target(std::string_view name);
std::vector<std::string> named_contractions();

}  // namespace lieinv

#endif  // LIEINV_CONTRACTION_HPP
