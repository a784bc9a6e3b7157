#include "lieinv/lie_algebra.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <sstream>

namespace lieinv {

std::optional<int> LieAlgebra::index_of_generator(std::string_view name) const
{
    for (std::size_t i = 0; i < generators_.size(); ++i)
        if (generators_[i] == name) return static_cast<int>(i);
    return std::nullopt;
}

Rational LieAlgebra::structure(int i, int j, int k) const
{
    if (i == j) return Rational(0);
    const bool flip = i > j;
    auto it = table_.find(flip ? std::pair{j, i} : std::pair{i, j});
    if (it == table_.end()) return Rational(0);
    auto t = it->second.find(k);
    if (t == it->second.end()) return Rational(0);
    return flip ? -t->second : t->second;
}

std::vector<BracketTerm> LieAlgebra::bracket(int i, int j) const
{
    std::vector<BracketTerm> out;
    if (i == j) return out;
    const bool flip = i > j;
    auto it = table_.find(flip ? std::pair{j, i} : std::pair{i, j});
    if (it == table_.end()) return out;
    for (const auto& [k, c] : it->second) out.push_back({k, flip ? -c : c});
    return out;
}

LieAlgebra make_algebra(std::string name, std::vector<std::string> generators, const std::vector<Bracket>& brackets,
                        std::vector<std::string> coordinates)
{
    const int n = static_cast<int>(generators.size());
    if (n == 0) throw BadParams("algebra '" + name + "' has no generators");
    if (coordinates.empty()) {
        coordinates.reserve(generators.size());
        for (const auto& g : generators) {
            std::string c;
            for (char ch : g)
                if (std::isalnum(static_cast<unsigned char>(ch)) || ch == '_') c += static_cast<char>(std::tolower(ch));
            coordinates.push_back(c);
        }
    }
    if (coordinates.size() != generators.size()) throw BadParams("coordinate count differs from generator count");

    LieAlgebra g;
    g.name_ = std::move(name);
    g.generators_ = std::move(generators);
    try {
        g.coords_ = make_universe(std::move(coordinates));
    } catch (const std::invalid_argument& e) {
        throw BadParams(e.what());
    }

    auto in_range = [n](int x) { return x >= 0 && x < n; };
    for (const auto& b : brackets) {
        if (!in_range(b.i) || !in_range(b.j))
            throw IndexError("bracket index out of range: [" + std::to_string(b.i) + ", " + std::to_string(b.j) + "]");
        if (b.i == b.j) {
            if (std::any_of(b.terms.begin(), b.terms.end(), [](const BracketTerm& t) { return !t.c.is_zero(); }))
                throw IndexError("nonzero self-bracket [X_" + std::to_string(b.i) + ", X_" + std::to_string(b.i) + "]");
            continue;
        }
        const bool flip = b.i > b.j;
        auto& row = g.table_[flip ? std::pair{b.j, b.i} : std::pair{b.i, b.j}];
        for (const auto& t : b.terms) {
            if (!in_range(t.k)) throw IndexError("bracket result index out of range: " + std::to_string(t.k));
            row[t.k] += flip ? -t.c : t.c;
        }
    }
    for (auto it = g.table_.begin(); it != g.table_.end();) {
        std::erase_if(it->second, [](const auto& kv) { return kv.second.is_zero(); });
        it = it->second.empty() ? g.table_.erase(it) : std::next(it);
    }

    if (auto w = jacobi_witness(g)) {
        const auto& [i, j, k, l] = *w;
        throw JacobiViolation("Jacobi identity fails for (" + g.generators_[i] + ", " + g.generators_[j] + ", " +
                                  g.generators_[k] + ") in component " + g.generators_[l],
                              i, j, k, l);
    }
    return g;
}

std::optional<std::array<int, 4>> jacobi_witness(const LieAlgebra& g)
{
    const int n = g.dim();
    std::vector<Rational> c(static_cast<std::size_t>(n) * n * n);
    auto at = [&](int i, int j, int k) -> Rational& { return c[(static_cast<std::size_t>(i) * n + j) * n + k]; };
    for (const auto& [ij, terms] : g.table())
        for (const auto& [k, v] : terms) {
            at(ij.first, ij.second, k) = v;
            at(ij.second, ij.first, k) = -v;
        }
    std::vector<Rational> sum(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            for (int k = j + 1; k < n; ++k) {
                std::fill(sum.begin(), sum.end(), Rational(0));
                for (int m = 0; m < n; ++m) {
                    const Rational& a = at(i, j, m);
                    const Rational& b = at(j, k, m);
                    const Rational& d = at(k, i, m);
                    if (a.is_zero() && b.is_zero() && d.is_zero()) continue;
                    for (int l = 0; l < n; ++l) {
                        if (!a.is_zero()) sum[l] += a * at(m, k, l);
                        if (!b.is_zero()) sum[l] += b * at(m, i, l);
                        if (!d.is_zero()) sum[l] += d * at(m, j, l);
                    }
                }
                for (int l = 0; l < n; ++l)
                    if (!sum[l].is_zero()) return std::array<int, 4>{i, j, k, l};
            }
    return std::nullopt;
}

bool SubalgebraSelection::contains(int i) const { return std::find(indices_.begin(), indices_.end(), i) != indices_.end(); }

LieAlgebra SubalgebraSelection::as_algebra() const
{
    std::vector<std::string> names, coords;
    std::map<int, int> local;
    for (int i : indices_) {
        local[i] = static_cast<int>(names.size());
        names.push_back(parent_->generators()[i]);
        coords.push_back(parent_->coordinate_name(i));
    }
    std::vector<Bracket> brackets;
    for (const auto& [ij, terms] : parent_->table()) {
        if (!contains(ij.first) || !contains(ij.second)) continue;
        Bracket b{local[ij.first], local[ij.second], {}};
        for (const auto& [k, c] : terms) b.terms.push_back({local.at(k), c});
        brackets.push_back(std::move(b));
    }
    return make_algebra(parent_->name() + "|sub", std::move(names), brackets, std::move(coords));
}

SubalgebraSelection subalgebra(const LieAlgebra& g, std::vector<int> indices)
{
    std::sort(indices.begin(), indices.end());
    if (std::adjacent_find(indices.begin(), indices.end()) != indices.end()) throw IndexError("duplicate subalgebra index");
    for (int i : indices)
        if (i < 0 || i >= g.dim()) throw IndexError("subalgebra index out of range: " + std::to_string(i));
    SubalgebraSelection sel(std::make_shared<const LieAlgebra>(g), indices);
    for (std::size_t a = 0; a < indices.size(); ++a)
        for (std::size_t b = a + 1; b < indices.size(); ++b)
            for (const auto& t : g.bracket(indices[a], indices[b]))
                if (!sel.contains(t.k))
                    throw NotClosed("[" + g.generators()[indices[a]] + ", " + g.generators()[indices[b]] +
                                    "] has a component along " + g.generators()[t.k]);
    return sel;
}

PolyMatrix commutator_matrix(const LieAlgebra& g)
{
    const int n = g.dim();
    PolyMatrix a(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) a(i, j) = MultiPoly::zero(g.coordinates());
    for (const auto& [ij, terms] : g.table()) {
        MultiPoly e = MultiPoly::zero(g.coordinates());
        for (const auto& [k, c] : terms) e += g.coordinate(k) * c;
        a(ij.first, ij.second) = e;
        a(ij.second, ij.first) = -e;
    }
    return a;
}

int num_invariants(const LieAlgebra& g) { return g.dim() - rank_over_function_field(commutator_matrix(g)); }

std::string bracket_table(const LieAlgebra& g)
{
    std::ostringstream os;
    const auto& names = g.generators();
    for (const auto& [ij, terms] : g.table()) {
        MultiPoly e = MultiPoly::zero(make_universe(names));
        for (const auto& [k, c] : terms) e += MultiPoly::variable(e.universe(), names[k]) * c;
        os << "[" << names[ij.first] << ", " << names[ij.second] << "] = " << e.to_string() << "\n";
    }
    return os.str();
}

}  // namespace lieinv
