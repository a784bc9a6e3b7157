#ifndef LIEINV_INVARIANCE_HPP
#define LIEINV_INVARIANCE_HPP

#include <string>
#include <utility>
#include <vector>

#include "lieinv/lie_algebra.hpp"
#include "lieinv/multipoly.hpp"

namespace lieinv {

/// X_i = -sum_{j,k} C_ij^k x_k d/dx_j, stored as (coordinate name, coefficient) pairs.
class CoadjointOperator {
public:
    CoadjointOperator(const LieAlgebra& g, int generator);

    int generator() const { return generator_; }
    const std::vector<std::pair<std::string, MultiPoly>>& components() const { return components_; }

    MultiPoly apply(const MultiPoly& f) const;

private:
    int generator_;
    std::vector<std::pair<std::string, MultiPoly>> components_;
};

std::vector<CoadjointOperator> coadjoint_operators(const LieAlgebra& g);

MultiPoly apply(const CoadjointOperator& op, const MultiPoly& f);
bool is_invariant(const LieAlgebra& g, const MultiPoly& f);
bool annihilated_by_subalgebra(const SubalgebraSelection& h, const MultiPoly& f);

/// Indices of the generators whose operator does not annihilate f.
std::vector<int> failing_generators(const LieAlgebra& g, const MultiPoly& f);

/// Jacobian matrix d f_a / d x_b over the union of the universes of `polys`.
PolyMatrix jacobian(const std::vector<MultiPoly>& polys);

/// Generic rank of the Jacobian.
int independence_rank(const std::vector<MultiPoly>& polys);

/// Greedy, in input order: keeps each polynomial that raises the rank over
/// `already_have` and the ones kept so far.
std::vector<MultiPoly> independent_basis(const std::vector<MultiPoly>& polys,
                                         const std::vector<MultiPoly>& already_have = {});

/// Polynomial invariants found by solving the linear system for homogeneous
/// polynomials of degree 1..max_degree. Returns a functionally independent set,
/// lowest degree first, stopping once N(g) are found.
std::vector<MultiPoly> polynomial_invariants(const LieAlgebra& g, int max_degree = 4);

}  // namespace lieinv

#endif  // LIEINV_INVARIANCE_HPP
