#ifndef LIEINV_ERRORS_HPP
#define LIEINV_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace lieinv {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct JacobiViolation : Error {
    JacobiViolation(std::string msg, int i, int j, int k, int l) : Error(std::move(msg)), i(i), j(j), k(k), l(l) {}
    int i, j, k, l;  // 0-based witness
};

struct IndexError : Error { using Error::Error; };
struct UnknownName : Error { using Error::Error; };
struct BadParams : Error { using Error::Error; };
struct BadSignature : BadParams { using BadParams::BadParams; };
struct NotClosed : Error { using Error::Error; };
struct ParseError : Error { using Error::Error; };

struct NonInvariantCoefficient : Error {
    NonInvariantCoefficient(std::string msg, int power) : Error(std::move(msg)), power(power) {}
    int power;  // T-power of the offending coefficient
};

struct DivergentContraction : Error {
    DivergentContraction(std::string msg, int i, int j, int k) : Error(std::move(msg)), i(i), j(j), k(k) {}
    int i, j, k;  // 0-based offending bracket term
};

struct CountMismatch : Error { using Error::Error; };
struct DependentInvariants : Error { using Error::Error; };
struct NegativeCount : Error { using Error::Error; };

}  // namespace lieinv

#endif  // LIEINV_ERRORS_HPP
