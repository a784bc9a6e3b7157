#ifndef LIEINV_LIE_ALGEBRA_HPP
#define LIEINV_LIE_ALGEBRA_HPP

#include <array>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "lieinv/errors.hpp"
#include "lieinv/matrix.hpp"
#include "lieinv/multipoly.hpp"
#include "lieinv/rational.hpp"

namespace lieinv {

struct BracketTerm {
    int k;
    Rational c;
};

/// [X_i, X_j] = sum of c X_k over `terms` (0-based indices).
struct Bracket {
    int i;
    int j;
    std::vector<BracketTerm> terms;
};

/// Finite-dimensional Lie algebra over Q given by structure constants C_ij^k.
/// Only i < j is stored; C_ji^k = -C_ij^k.
class LieAlgebra {
public:
    LieAlgebra() = default;

    const std::string& name() const { return name_; }
    int dim() const { return static_cast<int>(generators_.size()); }
    const std::vector<std::string>& generators() const { return generators_; }
    /// Coordinate functions on the dual space, one per generator.
    const Universe& coordinates() const { return coords_; }
    const std::string& coordinate_name(int i) const { return (*coords_)[static_cast<std::size_t>(i)]; }
    MultiPoly coordinate(int i) const { return MultiPoly::variable(coords_, coordinate_name(i)); }

    std::optional<int> index_of_generator(std::string_view name) const;

    /// C_ij^k for any ordered pair.
    Rational structure(int i, int j, int k) const;
    /// Nonzero terms of [X_i, X_j] for any ordered pair.
    std::vector<BracketTerm> bracket(int i, int j) const;
    /// Sparse table, i < j, nonzero terms only, ascending (i, j, k).
    const std::map<std::pair<int, int>, std::map<int, Rational>>& table() const { return table_; }

    bool is_abelian() const { return table_.empty(); }

    friend bool operator==(const LieAlgebra& a, const LieAlgebra& b)
    {
        return a.generators_ == b.generators_ && a.table_ == b.table_;
    }

private:
    friend LieAlgebra make_algebra(std::string, std::vector<std::string>, const std::vector<Bracket>&,
                                   std::vector<std::string>);

    std::string name_;
    std::vector<std::string> generators_;
    Universe coords_;
    std::map<std::pair<int, int>, std::map<int, Rational>> table_;
};

/// Builds and validates an algebra. Coordinates default to the lowercased generator names.
/// Throws IndexError for bad indices or [X_i, X_i] terms and JacobiViolation with the first witness.
LieAlgebra make_algebra(std::string name, std::vector<std::string> generators, const std::vector<Bracket>& brackets,
                        std::vector<std::string> coordinates = {});

/// First (i, j, k, l) with i < j < k where the Jacobi sum is nonzero.
std::optional<std::array<int, 4>> jacobi_witness(const LieAlgebra& g);

/// Closed subset of generators of a parent algebra.
class SubalgebraSelection {
public:
    SubalgebraSelection(std::shared_ptr<const LieAlgebra> parent, std::vector<int> indices)
        : parent_(std::move(parent)), indices_(std::move(indices))
    {
    }

    const LieAlgebra& parent() const { return *parent_; }
    const std::vector<int>& indices() const { return indices_; }
    bool contains(int i) const;
    /// The subalgebra as an algebra in its own right, with the parent's coordinate names.
    LieAlgebra as_algebra() const;

private:
    std::shared_ptr<const LieAlgebra> parent_;
    std::vector<int> indices_;
};

/// Throws IndexError for invalid indices and NotClosed when a bracket leaves the span.
SubalgebraSelection subalgebra(const LieAlgebra& g, std::vector<int> indices);

/// A(g): (i, j) entry is sum_k C_ij^k x_k.
PolyMatrix commutator_matrix(const LieAlgebra& g);

/// N(g) = dim g - generic rank of A(g).
int num_invariants(const LieAlgebra& g);

/// Human-readable bracket table, one nonzero bracket per line.
std::string bracket_table(const LieAlgebra& g);

}  // namespace lieinv

#endif  // LIEINV_LIE_ALGEBRA_HPP
