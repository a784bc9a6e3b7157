#ifndef LIEINV_MLP_HPP
#define LIEINV_MLP_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "lieinv/gelfand.hpp"
#include "lieinv/lie_algebra.hpp"

namespace lieinv {

/// The functions I1..I7 and M on the kinematical coordinates.
struct KinematicalFunctions {
    MultiPoly I1, I2, I3, I4, I5, I6, I7, M;
    std::vector<MultiPoly> list() const { return {I1, I2, I3, I4, I5, I6, I7}; }
};
const KinematicalFunctions& kinematical_functions();

/// One row of the published table for the chain so(3) -> g.
struct PublishedLabelRow {
    std::string algebra;
    std::vector<MultiPoly> casimirs;
    std::vector<MultiPoly> missing_labels;
    std::vector<MultiPoly> reduced_yield;  // empty for the static row
};
std::optional<PublishedLabelRow> published_label_row(std::string_view algebra);

struct LabelVerdict {
    MultiPoly poly;
    std::string origin;
    bool annihilated = false;
    bool raises_rank = false;
    bool accepted = false;
    std::string reason;
};

struct MLPReport {
    std::string algebra;
    std::vector<int> subalgebra_indices;  // 0-based
    int n = 0;
    int m = 0;
    int l_prime = 0;
    int n_prime = 0;
    InvariantSet casimirs;
    InvariantSet subalgebra_casimirs;
    MultiPoly reduced_polynomial;
    std::vector<MultiPoly> reduced_candidates;
    std::vector<LabelVerdict> verdicts;
    std::vector<MultiPoly> accepted_labels;
    /// Independent Casimirs that survive the substitution h-variables -> 0, counted over the accepted labels.
    int surviving_casimirs = 0;
    bool method_fails = false;
    std::vector<std::string> flags;
    std::vector<std::string> notes;
};

/// n = (dim g - N(g) - dim h - N(h)) / 2 + l', m = 2n. Throws NegativeCount.
std::pair<int, int> missing_label_count(const LieAlgebra& g, const SubalgebraSelection& h, int l_prime);

/// Members whose variables all belong to the subalgebra.
int compute_l_prime(const InvariantSet& g_invariants, const SubalgebraSelection& h);

/// (number of non-h coordinates) - generic rank of the rows i in h, columns j not in h of A(g).
int reduced_solution_count(const LieAlgebra& g, const SubalgebraSelection& h);

/// Substitutes every h-coordinate by 0 and switches to the plain characteristic polynomial.
MatrixRecipe reduced_recipe(const MatrixRecipe& r, const SubalgebraSelection& h);

/// True when every polynomial of `b` depends on `a` plus `base` and vice versa.
bool functionally_equivalent(const std::vector<MultiPoly>& a, const std::vector<MultiPoly>& b,
                             const std::vector<MultiPoly>& base);

/// Full analysis; subalgebra defaults to the rotations for kinematical algebras.
MLPReport mlp_analyze(std::string_view algebra, std::optional<std::vector<int>> h_indices = std::nullopt,
                      std::optional<int> l_prime_override = std::nullopt);
/// Same analysis for an explicit algebra and recipe.
MLPReport mlp_analyze(const LieAlgebra& g, const MatrixRecipe& recipe, const std::vector<int>& h_indices,
                      std::optional<int> l_prime_override = std::nullopt);

}  // namespace lieinv

#endif  // LIEINV_MLP_HPP
