#ifndef LIEINV_CATALOG_HPP
#define LIEINV_CATALOG_HPP

#include <string>
#include <string_view>
#include <vector>

#include "lieinv/lie_algebra.hpp"

namespace lieinv {

/// Scalar coefficients of a kinematical algebra on the basis (J1,J2,J3,P1,P2,P3,K1,K2,K3,H):
/// [H,P] = hp K, [H,K] = hk P, [P,P] = pp J, [K,K] = kk J, [P,K] = pk H, plus isotropy.
struct KinematicalCoefficients {
    int hp, hk, pp, kk, pk;
};

/// Canonical ASCII names of the nine kinematical algebras of the catalog.
const std::vector<std::string>& kinematical_names();

/// Maps aliases ("so(3,2)", "adS", "newton_minus", ...) to the canonical name, or "" if unknown.
std::string canonical_kinematical_name(std::string_view name);
bool is_kinematical(std::string_view name);
KinematicalCoefficients kinematical_coefficients(std::string_view name);

LieAlgebra kinematical_algebra(std::string_view name);
LieAlgebra kinematical_algebra(const std::string& name, KinematicalCoefficients c);

/// so(p,q) on the basis E_{mu,nu} (mu < nu), metric diag(1,..,1,-1,..,-1).
LieAlgebra so_algebra(int p, int q);

/// Isp(2N,R) = sp(2N,R) semidirect with the abelian translations P_i, Q_i. Basis order:
/// X_{i,j}, X_{-i,j} (i <= j), X_{i,-j} (i <= j), P_1..P_N, Q_1..Q_N.
LieAlgebra isp_algebra(int n);

/// Resolves any catalog name: the kinematical aliases, "so(p,q)", "isp(2N)" / "isp4".
/// so(3,2) and so(4,1) resolve to the kinematical basis. Throws UnknownName / BadParams.
LieAlgebra catalog(std::string_view name);

/// Concrete catalog entries, for listings.
std::vector<std::string> catalog_listing();
/// Parametrised families accepted by `catalog`.
std::vector<std::string> catalog_families();

/// The rotation subalgebra {J1, J2, J3} of a kinematical algebra.
inline std::vector<int> rotation_indices() { return {0, 1, 2}; }

}  // namespace lieinv

#endif  // LIEINV_CATALOG_HPP
