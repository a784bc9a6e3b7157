#ifndef LIEINV_REFERENCE_HPP
#define LIEINV_REFERENCE_HPP

#include <optional>
#include <string_view>

#include "lieinv/multipoly.hpp"

namespace lieinv {

/// Displayed coefficients of P(T) = T^5 + C2 T^3 + C4 T for a kinematical algebra.
struct ReferenceCoefficients {
    MultiPoly c2;
    MultiPoly c4;
};

/// Available for every kinematical algebra except static.
std::optional<ReferenceCoefficients> reference_coefficients(std::string_view algebra);

/// T^5 + (I2 - I1^2) T^4 - I3 T^3 - (I2 I3 - I5^2) T^2 for the static algebra.
MultiPoly reference_static_polynomial();

/// Right-hand side of the dependency relation for M^2 exactly as displayed:
/// I5^2 I4 + I7^2 I3 - I6^2 I2 - I2 I3 I4 - 2 I5 I6 I7.
MultiPoly dependency_rhs_literal();

/// Gram-determinant form: I2 I3 I4 + 2 I5 I6 I7 - I4 I5^2 - I2 I6^2 - I3 I7^2.
MultiPoly dependency_rhs();

}  // namespace lieinv

#endif  // LIEINV_REFERENCE_HPP
