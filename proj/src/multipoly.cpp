#include "lieinv/multipoly.hpp"

#include <algorithm>
#include <cctype>
#include <limits>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

namespace lieinv {

Universe make_universe(std::vector<std::string> names)
{
    for (std::size_t i = 0; i < names.size(); ++i)
        for (std::size_t j = i + 1; j < names.size(); ++j)
            if (names[i] == names[j]) throw std::invalid_argument("duplicate variable '" + names[i] + "'");
    return std::make_shared<const std::vector<std::string>>(std::move(names));
}

Universe merge_universes(const Universe& a, const Universe& b)
{
    if (a == b) return a;
    if (*a == *b) return a;
    std::vector<std::string> names = *a;
    bool grew = false;
    for (const auto& v : *b)
        if (std::find(a->begin(), a->end(), v) == a->end()) {
            names.push_back(v);
            grew = true;
        }
    if (!grew) return a;
    if (names == *b) return b;
    return make_universe(std::move(names));
}

std::optional<std::size_t> index_of(const Universe& u, std::string_view name)
{
    for (std::size_t i = 0; i < u->size(); ++i)
        if ((*u)[i] == name) return i;
    return std::nullopt;
}

// ---------------------------------------------------------------------------
// Monomial

void Monomial::set_exponent(std::size_t var, unsigned e)
{
    const unsigned old = exponent(var);
    const unsigned deg = degree() - old + e;
    if (e > 255 || deg > 255) throw std::overflow_error("Monomial: exponent exceeds 255");
    key_[var + 1] = static_cast<char>(e);
    key_[0] = static_cast<char>(deg);
}

bool Monomial::divides(const Monomial& other) const
{
    for (std::size_t i = 0; i < size(); ++i)
        if (exponent(i) > other.exponent(i)) return false;
    return true;
}

Monomial operator*(const Monomial& a, const Monomial& b)
{
    Monomial r(a.size());
    for (std::size_t i = 0; i < a.key_.size(); ++i) {
        const unsigned e = static_cast<unsigned char>(a.key_[i]) + static_cast<unsigned char>(b.key_[i]);
        if (e > 255) throw std::overflow_error("Monomial: exponent exceeds 255");
        r.key_[i] = static_cast<char>(e);
    }
    return r;
}

Monomial operator/(const Monomial& a, const Monomial& b)
{
    Monomial r(a.size());
    for (std::size_t i = 0; i < a.key_.size(); ++i)
        r.key_[i] = static_cast<char>(static_cast<unsigned char>(a.key_[i]) - static_cast<unsigned char>(b.key_[i]));
    return r;
}

namespace {

Monomial remap(const Monomial& m, const std::vector<std::size_t>& target_index, std::size_t target_size)
{
    Monomial r(target_size);
    for (std::size_t i = 0; i < m.size(); ++i)
        if (m.exponent(i)) r.set_exponent(target_index[i], m.exponent(i));
    return r;
}

bool term_greater(const MultiPoly::Term& a, const MultiPoly::Term& b) { return a.monomial > b.monomial; }

}  // namespace

// ---------------------------------------------------------------------------
// MultiPoly

const Universe& MultiPoly::empty_universe()
{
    static const Universe empty = make_universe({});
    return empty;
}

MultiPoly::MultiPoly(Rational constant) : MultiPoly(empty_universe(), std::move(constant)) {}

MultiPoly::MultiPoly(Universe universe, Rational constant) : universe_(std::move(universe))
{
    if (!constant.is_zero()) terms_.push_back({Monomial(universe_->size()), std::move(constant)});
}

MultiPoly MultiPoly::variable(const Universe& universe, std::string_view name)
{
    const auto idx = index_of(universe, name);
    if (!idx) throw std::invalid_argument("variable '" + std::string(name) + "' not in universe");
    MultiPoly p;
    p.universe_ = universe;
    Monomial m(universe->size());
    m.set_exponent(*idx, 1);
    p.terms_.push_back({std::move(m), Rational(1)});
    return p;
}

MultiPoly MultiPoly::variable(std::string_view name) { return variable(make_universe({std::string(name)}), name); }

MultiPoly MultiPoly::from_terms(Universe universe, std::vector<Term> terms)
{
    MultiPoly p;
    p.universe_ = std::move(universe);
    for (const auto& t : terms)
        if (t.monomial.size() != p.universe_->size())
            throw std::invalid_argument("MultiPoly::from_terms: monomial length mismatch");
    p.terms_ = std::move(terms);
    p.normalize();
    return p;
}

void MultiPoly::normalize()
{
    std::sort(terms_.begin(), terms_.end(), term_greater);
    std::vector<Term> merged;
    merged.reserve(terms_.size());
    for (auto& t : terms_) {
        if (!merged.empty() && merged.back().monomial == t.monomial)
            merged.back().coeff += t.coeff;
        else
            merged.push_back(std::move(t));
    }
    std::erase_if(merged, [](const Term& t) { return t.coeff.is_zero(); });
    terms_ = std::move(merged);
}

bool MultiPoly::is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].monomial.degree() == 0); }

Rational MultiPoly::constant_term() const
{
    if (!terms_.empty() && terms_.back().monomial.degree() == 0) return terms_.back().coeff;
    return Rational(0);
}

int MultiPoly::total_degree() const { return terms_.empty() ? -1 : static_cast<int>(terms_.front().monomial.degree()); }

bool MultiPoly::is_homogeneous() const
{
    return std::all_of(terms_.begin(), terms_.end(),
                       [&](const Term& t) { return t.monomial.degree() == terms_.front().monomial.degree(); });
}

unsigned MultiPoly::degree_in(std::string_view var) const
{
    const auto idx = index_of(universe_, var);
    if (!idx) return 0;
    unsigned d = 0;
    for (const auto& t : terms_) d = std::max(d, t.monomial.exponent(*idx));
    return d;
}

const MultiPoly::Term& MultiPoly::leading_term() const
{
    if (terms_.empty()) throw std::domain_error("leading term of the zero polynomial");
    return terms_.front();
}

Rational MultiPoly::leading_coefficient() const { return terms_.empty() ? Rational(0) : terms_.front().coeff; }

std::vector<std::string> MultiPoly::support() const
{
    std::vector<bool> used(universe_->size(), false);
    for (const auto& t : terms_)
        for (std::size_t i = 0; i < used.size(); ++i)
            if (t.monomial.exponent(i)) used[i] = true;
    std::vector<std::string> out;
    for (std::size_t i = 0; i < used.size(); ++i)
        if (used[i]) out.push_back((*universe_)[i]);
    return out;
}

MultiPoly MultiPoly::coefficient(std::string_view var, unsigned k) const
{
    MultiPoly out;
    out.universe_ = universe_;
    const auto idx = index_of(universe_, var);
    if (!idx) {
        if (k == 0) return *this;
        return out;
    }
    for (const auto& t : terms_) {
        if (t.monomial.exponent(*idx) != k) continue;
        Monomial m = t.monomial;
        m.set_exponent(*idx, 0);
        out.terms_.push_back({std::move(m), t.coeff});
    }
    out.normalize();
    return out;
}

MultiPoly MultiPoly::over(const Universe& target) const
{
    if (target == universe_ || *target == *universe_) {
        MultiPoly p = *this;
        p.universe_ = target;
        return p;
    }
    std::vector<std::size_t> map(universe_->size(), std::numeric_limits<std::size_t>::max());
    for (std::size_t i = 0; i < universe_->size(); ++i) {
        if (auto j = index_of(target, (*universe_)[i])) map[i] = *j;
    }
    const auto used = support();
    for (const auto& v : used)
        if (!index_of(target, v)) throw std::invalid_argument("MultiPoly::over: variable '" + v + "' missing in target");
    MultiPoly out;
    out.universe_ = target;
    out.terms_.reserve(terms_.size());
    for (const auto& t : terms_) out.terms_.push_back({remap(t.monomial, map, target->size()), t.coeff});
    out.normalize();
    return out;
}

namespace {

void align(MultiPoly& a, MultiPoly& b)
{
    if (a.universe() == b.universe()) return;
    const Universe u = merge_universes(a.universe(), b.universe());
    if (a.universe() != u) a = a.over(u);
    if (b.universe() != u) b = b.over(u);
}

std::vector<MultiPoly::Term> merge_terms(const std::vector<MultiPoly::Term>& a, const std::vector<MultiPoly::Term>& b,
                                         bool subtract)
{
    std::vector<MultiPoly::Term> out;
    out.reserve(a.size() + b.size());
    std::size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
        if (j == b.size() || (i < a.size() && a[i].monomial > b[j].monomial)) {
            out.push_back(a[i++]);
        } else if (i == a.size() || b[j].monomial > a[i].monomial) {
            out.push_back(subtract ? MultiPoly::Term{b[j].monomial, -b[j].coeff} : b[j]);
            ++j;
        } else {
            Rational c = subtract ? a[i].coeff - b[j].coeff : a[i].coeff + b[j].coeff;
            if (!c.is_zero()) out.push_back({a[i].monomial, std::move(c)});
            ++i;
            ++j;
        }
    }
    return out;
}

}  // namespace

MultiPoly MultiPoly::operator-() const
{
    MultiPoly r = *this;
    for (auto& t : r.terms_) t.coeff = -t.coeff;
    return r;
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& rhs)
{
    if (universe_ == rhs.universe_) {
        terms_ = merge_terms(terms_, rhs.terms_, false);
        return *this;
    }
    MultiPoly b = rhs;
    align(*this, b);
    terms_ = merge_terms(terms_, b.terms_, false);
    return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& rhs)
{
    if (universe_ == rhs.universe_) {
        terms_ = merge_terms(terms_, rhs.terms_, true);
        return *this;
    }
    MultiPoly b = rhs;
    align(*this, b);
    terms_ = merge_terms(terms_, b.terms_, true);
    return *this;
}

MultiPoly& MultiPoly::operator*=(const Rational& rhs)
{
    if (rhs.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& t : terms_) t.coeff *= rhs;
    return *this;
}

MultiPoly& MultiPoly::operator*=(const MultiPoly& rhs)
{
    *this = *this * rhs;
    return *this;
}

MultiPoly operator*(const MultiPoly& lhs, const MultiPoly& rhs)
{
    if (lhs.is_zero() || rhs.is_zero()) {
        MultiPoly z;
        z.universe_ = merge_universes(lhs.universe_, rhs.universe_);
        return z;
    }
    MultiPoly a = lhs;
    MultiPoly b = rhs;
    align(a, b);
    if (a.is_constant()) return b *= a.terms_.front().coeff;
    if (b.is_constant()) return a *= b.terms_.front().coeff;

    std::unordered_map<std::string, Rational> acc;
    acc.reserve(a.terms_.size() * b.terms_.size());
    for (const auto& s : a.terms_)
        for (const auto& t : b.terms_) {
            Monomial m = s.monomial * t.monomial;
            auto [it, inserted] = acc.try_emplace(m.key(), s.coeff);
            if (inserted)
                it->second *= t.coeff;
            else
                it->second += s.coeff * t.coeff;
        }
    MultiPoly out;
    out.universe_ = a.universe_;
    out.terms_.reserve(acc.size());
    const std::size_t n = a.universe_->size();
    for (auto& [key, c] : acc) {
        if (c.is_zero()) continue;
        Monomial m(n);
        for (std::size_t i = 0; i < n; ++i)
            if (key[i + 1]) m.set_exponent(i, static_cast<unsigned char>(key[i + 1]));
        out.terms_.push_back({std::move(m), std::move(c)});
    }
    std::sort(out.terms_.begin(), out.terms_.end(), term_greater);
    return out;
}

bool operator==(const MultiPoly& a, const MultiPoly& b)
{
    if (a.universe_ == b.universe_ || *a.universe_ == *b.universe_) {
        if (a.terms_.size() != b.terms_.size()) return false;
        for (std::size_t i = 0; i < a.terms_.size(); ++i)
            if (!(a.terms_[i].monomial == b.terms_[i].monomial) || a.terms_[i].coeff != b.terms_[i].coeff) return false;
        return true;
    }
    if (a.terms_.size() != b.terms_.size()) return false;
    return (a - b).is_zero();
}

std::string MultiPoly::to_string() const
{
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& t : terms_) {
        Rational c = t.coeff;
        if (first) {
            if (c.sign() < 0) os << "-";
        } else {
            os << (c.sign() < 0 ? " - " : " + ");
        }
        c = abs(c);
        first = false;
        bool wrote = false;
        if (!c.is_one() || t.monomial.degree() == 0) {
            os << c.to_string();
            wrote = true;
        }
        for (std::size_t i = 0; i < universe_->size(); ++i) {
            const unsigned e = t.monomial.exponent(i);
            if (!e) continue;
            if (wrote) os << "*";
            os << (*universe_)[i];
            if (e > 1) os << "^" << e;
            wrote = true;
        }
    }
    return os.str();
}

// ---------------------------------------------------------------------------
// Free functions

MultiPoly pow(const MultiPoly& base, unsigned exponent)
{
    MultiPoly result(base.universe(), Rational(1));
    MultiPoly b = base;
    while (exponent) {
        if (exponent & 1u) result = result * b;
        exponent >>= 1u;
        if (exponent) b = b * b;
    }
    return result;
}

MultiPoly differentiate(const MultiPoly& p, std::string_view var)
{
    const auto idx = index_of(p.universe(), var);
    if (!idx) return MultiPoly::zero(p.universe());
    std::vector<MultiPoly::Term> out;
    for (const auto& t : p.terms()) {
        const unsigned e = t.monomial.exponent(*idx);
        if (!e) continue;
        Monomial m = t.monomial;
        m.set_exponent(*idx, e - 1);
        out.push_back({std::move(m), t.coeff * Rational(static_cast<long>(e))});
    }
    return MultiPoly::from_terms(p.universe(), std::move(out));
}

MultiPoly substitute(const MultiPoly& p, const std::map<std::string, MultiPoly>& bindings)
{
    const auto& vars = p.variables();
    std::vector<const MultiPoly*> image(vars.size(), nullptr);
    bool any = false;
    for (std::size_t i = 0; i < vars.size(); ++i)
        if (auto it = bindings.find(vars[i]); it != bindings.end()) {
            image[i] = &it->second;
            any = true;
        }
    if (!any) return p;

    // Power cache per substituted variable.
    std::vector<std::vector<MultiPoly>> powers(vars.size());
    auto power_of = [&](std::size_t i, unsigned e) -> const MultiPoly& {
        auto& cache = powers[i];
        if (cache.empty()) cache.push_back(MultiPoly(image[i]->universe(), Rational(1)));
        while (cache.size() <= e) cache.push_back(cache.back() * *image[i]);
        return cache[e];
    };

    MultiPoly result = MultiPoly::zero(p.universe());
    for (const auto& t : p.terms()) {
        Monomial kept = t.monomial;
        MultiPoly factor(p.universe(), t.coeff);
        for (std::size_t i = 0; i < vars.size(); ++i) {
            const unsigned e = t.monomial.exponent(i);
            if (!e || !image[i]) continue;
            kept.set_exponent(i, 0);
            factor = factor * power_of(i, e);
            if (factor.is_zero()) break;
        }
        if (factor.is_zero()) continue;
        result += factor * MultiPoly::from_terms(p.universe(), {{kept, Rational(1)}});
    }
    return result;
}

Rational evaluate(const MultiPoly& p, const std::map<std::string, Rational>& point)
{
    const auto& vars = p.variables();
    std::vector<const Rational*> value(vars.size(), nullptr);
    for (std::size_t i = 0; i < vars.size(); ++i)
        if (auto it = point.find(vars[i]); it != point.end()) value[i] = &it->second;
    Rational sum(0);
    for (const auto& t : p.terms()) {
        Rational term = t.coeff;
        for (std::size_t i = 0; i < vars.size(); ++i) {
            const unsigned e = t.monomial.exponent(i);
            if (!e) continue;
            if (!value[i]) throw std::invalid_argument("evaluate: no value for variable '" + vars[i] + "'");
            term *= pow(*value[i], e);
        }
        sum += term;
    }
    return sum;
}

MultiPoly exact_quotient(const MultiPoly& lhs, const MultiPoly& rhs)
{
    if (rhs.is_zero()) throw std::domain_error("exact_quotient: division by zero polynomial");
    MultiPoly a = lhs;
    MultiPoly b = rhs;
    if (a.universe() != b.universe()) {
        const Universe u = merge_universes(a.universe(), b.universe());
        a = a.over(u);
        b = b.over(u);
    }
    if (b.is_constant()) return a * (Rational(1) / b.terms().front().coeff);

    const auto& lead = b.terms().front();
    std::map<Monomial, Rational, std::greater<>> rem;
    for (const auto& t : a.terms()) rem.emplace(t.monomial, t.coeff);
    std::vector<MultiPoly::Term> quotient;
    while (!rem.empty()) {
        auto it = rem.begin();
        if (!lead.monomial.divides(it->first))
            throw std::domain_error("exact_quotient: divisor does not divide dividend");
        const Monomial qm = it->first / lead.monomial;
        const Rational qc = it->second / lead.coeff;
        for (const auto& t : b.terms()) {
            Monomial m = qm * t.monomial;
            Rational c = qc * t.coeff;
            auto [pos, inserted] = rem.try_emplace(std::move(m), -c);
            if (!inserted) {
                pos->second -= c;
                if (pos->second.is_zero()) rem.erase(pos);
            }
        }
        quotient.push_back({qm, qc});
    }
    return MultiPoly::from_terms(a.universe(), std::move(quotient));
}

MultiPoly sign_normalized(const MultiPoly& p) { return p.leading_coefficient().sign() < 0 ? -p : p; }

MultiPoly monic(const MultiPoly& p)
{
    if (p.is_zero()) return p;
    return p * (Rational(1) / p.leading_coefficient());
}

std::ostream& operator<<(std::ostream& os, const MultiPoly& p) { return os << p.to_string(); }

// ---------------------------------------------------------------------------
// Parser

namespace {

class PolyParser {
public:
    PolyParser(std::string_view text, Universe universe) : text_(text), universe_(std::move(universe)) {}

    MultiPoly parse()
    {
        MultiPoly p = expression();
        skip_ws();
        if (pos_ != text_.size()) fail("unexpected character");
        return p;
    }

private:
    [[noreturn]] void fail(const std::string& why) const
    {
        throw std::invalid_argument("parse_poly: " + why + " at position " + std::to_string(pos_) + " in '" +
                                    std::string(text_) + "'");
    }

    void skip_ws()
    {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    bool accept(char c)
    {
        skip_ws();
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    MultiPoly expression()
    {
        MultiPoly acc = MultiPoly::zero(universe_);
        bool negate = false;
        if (accept('-'))
            negate = true;
        else
            accept('+');
        MultiPoly t = term();
        acc = negate ? acc - t : acc + t;
        for (;;) {
            if (accept('+'))
                acc += term();
            else if (accept('-'))
                acc -= term();
            else
                break;
        }
        return acc;
    }

    MultiPoly term()
    {
        MultiPoly acc = power();
        for (;;) {
            if (accept('*')) {
                acc = acc * power();
            } else if (accept('/')) {
                skip_ws();
                const Rational d = integer();
                if (d.is_zero()) fail("division by zero");
                acc *= Rational(1) / d;
            } else {
                break;
            }
        }
        return acc;
    }

    MultiPoly power()
    {
        MultiPoly base = factor();
        if (accept('^')) {
            skip_ws();
            const Rational e = integer();
            if (e.sign() < 0 || !e.is_integer()) fail("bad exponent");
            base = pow(base, static_cast<unsigned>(std::stoul(e.numerator())));
        }
        return base;
    }

    Rational integer()
    {
        const std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        if (start == pos_) fail("expected integer");
        return Rational::parse(text_.substr(start, pos_ - start));
    }

    MultiPoly factor()
    {
        skip_ws();
        if (pos_ >= text_.size()) fail("unexpected end");
        const char c = text_[pos_];
        if (c == '(') {
            ++pos_;
            MultiPoly inner = expression();
            if (!accept(')')) fail("expected ')'");
            return inner;
        }
        if (c == '-') {
            ++pos_;
            return -power();
        }
        if (std::isdigit(static_cast<unsigned char>(c))) return MultiPoly(universe_, integer());
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            const std::size_t start = pos_;
            while (pos_ < text_.size() &&
                   (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
                ++pos_;
            const std::string name(text_.substr(start, pos_ - start));
            if (!index_of(universe_, name)) {
                auto names = *universe_;
                names.push_back(name);
                universe_ = make_universe(std::move(names));
            }
            return MultiPoly::variable(universe_, name);
        }
        fail(std::string("unexpected '") + c + "'");
    }

    std::string_view text_;
    Universe universe_;
    std::size_t pos_ = 0;
};

}  // namespace

MultiPoly parse_poly(std::string_view text, const Universe& universe)
{
    PolyParser parser(text, universe);
    MultiPoly p = parser.parse();
    // Re-embed so that every result of one parse shares the widest universe seen.
    return p.over(merge_universes(universe, p.universe()));
}

}  // namespace lieinv
