#include "lieinv/reference.hpp"

#include "lieinv/catalog.hpp"
#include "lieinv/mlp.hpp"

namespace lieinv {

std::optional<ReferenceCoefficients> reference_coefficients(std::string_view algebra)
{
    const std::string canon = canonical_kinematical_name(algebra);
    const auto& f = kinematical_functions();
    const MultiPoly h2 = f.I1 * f.I1;
    const MultiPoly jj = f.I4, pp = f.I2, kk = f.I3, pk = f.I5, jk = f.I6, jp = f.I7;
    const MultiPoly gram = pp * kk - pk * pk;
    const MultiPoly twoMh = MultiPoly(2L) * f.M * f.I1;
    if (canon == "so32") return ReferenceCoefficients{jj - pp - kk + h2, jj * h2 + gram - jp * jp - jk * jk - twoMh};
    if (canon == "so41") return ReferenceCoefficients{jj + pp - kk - h2, -(jj * h2) - gram + jp * jp - jk * jk + twoMh};
    if (canon == "newton_minus") return ReferenceCoefficients{-pp - kk, gram};
    if (canon == "newton_plus") return ReferenceCoefficients{pp - kk, gram};
    if (canon == "iso31") return ReferenceCoefficients{h2 - pp, jj * h2 + pp * kk - jp * jp - pk * pk - twoMh};
    if (canon == "iso4") return ReferenceCoefficients{-h2 - kk, jj * h2 + pp * kk + jk * jk - pk * pk - twoMh};
    if (canon == "carroll") return ReferenceCoefficients{h2, jj * h2 + pp * kk - pk * pk - twoMh};
    if (canon == "galilei") return ReferenceCoefficients{pp, gram};
    return std::nullopt;
}

MultiPoly reference_static_polynomial()
{
    const auto& f = kinematical_functions();
    const Universe u = merge_universes(f.I1.universe(), make_universe({"T"}));
    const MultiPoly t = MultiPoly::variable(u, "T");
    return pow(t, 5) + (f.I2 - f.I1 * f.I1) * pow(t, 4) - f.I3 * pow(t, 3) - (f.I2 * f.I3 - f.I5 * f.I5) * pow(t, 2);
}

MultiPoly dependency_rhs_literal()
{
    const auto& f = kinematical_functions();
    return f.I5 * f.I5 * f.I4 + f.I7 * f.I7 * f.I3 - f.I6 * f.I6 * f.I2 - f.I2 * f.I3 * f.I4 -
           MultiPoly(2L) * f.I5 * f.I6 * f.I7;
}

MultiPoly dependency_rhs()
{
    const auto& f = kinematical_functions();
    return f.I2 * f.I3 * f.I4 + MultiPoly(2L) * f.I5 * f.I6 * f.I7 - f.I4 * f.I5 * f.I5 - f.I2 * f.I6 * f.I6 -
           f.I3 * f.I7 * f.I7;
}

}  // namespace lieinv
