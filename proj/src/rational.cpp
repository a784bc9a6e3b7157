#include "lieinv/rational.hpp"

#include <stdexcept>

namespace lieinv {

Rational::Rational(long numerator, long denominator) : value_(numerator, denominator)
{
    if (denominator == 0) throw std::domain_error("Rational: zero denominator");
    value_.canonicalize();
}

Rational::Rational(mpq_class value) : value_(std::move(value)) { value_.canonicalize(); }

Rational Rational::parse(std::string_view text)
{
    std::string cleaned;
    for (char c : text)
        if (c != ' ' && c != '\t') cleaned.push_back(c);
    if (cleaned.empty()) throw std::invalid_argument("Rational::parse: empty string");
    if (cleaned.front() == '+') cleaned.erase(0, 1);
    const auto slash = cleaned.find('/');
    auto check_digits = [&](std::string_view part, bool allow_sign) {
        std::size_t start = (allow_sign && !part.empty() && part.front() == '-') ? 1 : 0;
        if (part.size() <= start) throw std::invalid_argument("Rational::parse: bad number '" + std::string(text) + "'");
        for (std::size_t i = start; i < part.size(); ++i)
            if (part[i] < '0' || part[i] > '9')
                throw std::invalid_argument("Rational::parse: bad number '" + std::string(text) + "'");
    };
    if (slash == std::string::npos) {
        check_digits(cleaned, true);
        return Rational(mpq_class(mpz_class(cleaned, 10)));
    }
    const std::string num = cleaned.substr(0, slash);
    const std::string den = cleaned.substr(slash + 1);
    check_digits(num, true);
    check_digits(den, false);
    mpz_class d(den, 10);
    if (d == 0) throw std::domain_error("Rational::parse: zero denominator");
    return Rational(mpq_class(mpz_class(num, 10), d));
}

std::string Rational::to_string() const
{
    if (is_integer()) return value_.get_num().get_str();
    return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

Rational& Rational::operator+=(const Rational& rhs)
{
    value_ += rhs.value_;
    return *this;
}

Rational& Rational::operator-=(const Rational& rhs)
{
    value_ -= rhs.value_;
    return *this;
}

Rational& Rational::operator*=(const Rational& rhs)
{
    value_ *= rhs.value_;
    return *this;
}

Rational& Rational::operator/=(const Rational& rhs)
{
    if (rhs.is_zero()) throw std::domain_error("Rational: division by zero");
    value_ /= rhs.value_;
    return *this;
}

Rational exact_quotient(const Rational& a, const Rational& b) { return a / b; }

Rational abs(const Rational& x) { return x.sign() < 0 ? -x : x; }

Rational pow(const Rational& base, unsigned exponent)
{
    Rational result(1);
    Rational b = base;
    while (exponent) {
        if (exponent & 1u) result *= b;
        exponent >>= 1u;
        if (exponent) b *= b;
    }
    return result;
}

std::ostream& operator<<(std::ostream& os, const Rational& x) { return os << x.to_string(); }

}  // namespace lieinv
