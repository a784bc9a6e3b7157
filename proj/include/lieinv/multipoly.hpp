#ifndef LIEINV_MULTIPOLY_HPP
#define LIEINV_MULTIPOLY_HPP

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "lieinv/rational.hpp"

namespace lieinv {

/// Ordered, immutable list of variable names shared between polynomials.
using Universe = std::shared_ptr<const std::vector<std::string>>;

Universe make_universe(std::vector<std::string> names);
/// Variables of `a` followed by the variables of `b` that `a` lacks.
Universe merge_universes(const Universe& a, const Universe& b);
std::optional<std::size_t> index_of(const Universe& u, std::string_view name);

/// Exponent vector of a term. Byte 0 holds the total degree and bytes 1..n the
/// per-variable exponents, so plain byte comparison is graded lexicographic order.
class Monomial {
public:
    Monomial() : key_(1, '\0') {}
    explicit Monomial(std::size_t num_vars) : key_(num_vars + 1, '\0') {}

    std::size_t size() const { return key_.size() - 1; }
    unsigned degree() const { return static_cast<unsigned char>(key_[0]); }
    unsigned exponent(std::size_t var) const { return static_cast<unsigned char>(key_[var + 1]); }
    void set_exponent(std::size_t var, unsigned e);
    bool divides(const Monomial& other) const;

    const std::string& key() const { return key_; }

    friend Monomial operator*(const Monomial& a, const Monomial& b);
    friend Monomial operator/(const Monomial& a, const Monomial& b);
    friend bool operator==(const Monomial& a, const Monomial& b) { return a.key_ == b.key_; }
    /// Graded lexicographic comparison over the declared variable order.
    friend bool operator<(const Monomial& a, const Monomial& b) { return a.key_ < b.key_; }
    friend bool operator>(const Monomial& a, const Monomial& b) { return b.key_ < a.key_; }

private:
    std::string key_;
};

/// Sparse multivariate polynomial over the rationals in named commuting variables.
///
/// Terms are kept sorted in decreasing graded-lexicographic order with no zero
/// coefficients, so equal polynomials over the same universe have identical term lists.
/// Binary operations on polynomials over different universes first re-embed both
/// operands in the merged universe (matched by variable name).
class MultiPoly {
public:
    struct Term {
        Monomial monomial;
        Rational coeff;
    };

    MultiPoly() : universe_(empty_universe()) {}
    explicit MultiPoly(Rational constant);
    explicit MultiPoly(long constant) : MultiPoly(Rational(constant)) {}
    MultiPoly(Universe universe, Rational constant);

    static MultiPoly variable(const Universe& universe, std::string_view name);
    static MultiPoly variable(std::string_view name);
    static MultiPoly zero(const Universe& universe) { return MultiPoly(universe, Rational(0)); }
    static MultiPoly from_terms(Universe universe, std::vector<Term> terms);

    const Universe& universe() const { return universe_; }
    const std::vector<std::string>& variables() const { return *universe_; }
    const std::vector<Term>& terms() const { return terms_; }
    std::size_t num_terms() const { return terms_.size(); }

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    Rational constant_term() const;
    /// -1 for the zero polynomial.
    int total_degree() const;
    bool is_homogeneous() const;
    unsigned degree_in(std::string_view var) const;
    const Term& leading_term() const;
    Rational leading_coefficient() const;

    /// Names of the variables that occur with a nonzero exponent, in universe order.
    std::vector<std::string> support() const;

    /// Coefficient of var^k when the polynomial is collected in `var`.
    MultiPoly coefficient(std::string_view var, unsigned k) const;

    /// Same polynomial expressed over `target`, which must contain every variable used.
    MultiPoly over(const Universe& target) const;

    MultiPoly operator-() const;
    MultiPoly& operator+=(const MultiPoly& rhs);
    MultiPoly& operator-=(const MultiPoly& rhs);
    MultiPoly& operator*=(const MultiPoly& rhs);
    MultiPoly& operator*=(const Rational& rhs);

    friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
    friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
    friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
    friend MultiPoly operator*(MultiPoly a, const Rational& c) { return a *= c; }
    friend MultiPoly operator*(const Rational& c, MultiPoly a) { return a *= c; }

    friend bool operator==(const MultiPoly& a, const MultiPoly& b);
    friend bool operator!=(const MultiPoly& a, const MultiPoly& b) { return !(a == b); }

    /// Canonical text: graded-lex order, explicit `*` and `^`, rationals as a/b.
    std::string to_string() const;

private:
    static const Universe& empty_universe();
    void normalize();

    Universe universe_;
    std::vector<Term> terms_;
};

MultiPoly pow(const MultiPoly& base, unsigned exponent);
MultiPoly differentiate(const MultiPoly& p, std::string_view var);
/// Simultaneous substitution; unbound variables stay unchanged.
MultiPoly substitute(const MultiPoly& p, const std::map<std::string, MultiPoly>& bindings);
Rational evaluate(const MultiPoly& p, const std::map<std::string, Rational>& point);
/// Quotient a/b; throws std::domain_error when b does not divide a.
MultiPoly exact_quotient(const MultiPoly& a, const MultiPoly& b);
/// Multiplies by the sign that makes the leading coefficient positive.
MultiPoly sign_normalized(const MultiPoly& p);
/// Divides by the leading coefficient.
MultiPoly monic(const MultiPoly& p);

inline bool is_zero(const MultiPoly& p) { return p.is_zero(); }
inline std::size_t pivot_cost(const MultiPoly& p) { return p.num_terms(); }

/// Parses expressions built from rationals, variables, + - * ^ and parentheses.
/// Unknown variables are appended to the universe.
MultiPoly parse_poly(std::string_view text, const Universe& universe);

std::ostream& operator<<(std::ostream& os, const MultiPoly& p);

}  // namespace lieinv

#endif  // LIEINV_MULTIPOLY_HPP
