#include "lieinv/catalog.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <regex>

namespace lieinv {

namespace {

struct KinematicalEntry {
    const char* name;
    KinematicalCoefficients c;
};

// Table of scalar bracket coefficients (hp, hk, pp, kk, pk).
constexpr KinematicalEntry kKinematical[] = {
    {"so41", {1, 1, 1, -1, 1}},   {"so32", {-1, 1, -1, -1, 1}}, {"iso31", {0, 1, 0, -1, 1}},
    {"iso4", {1, 0, 1, 0, 1}},    {"newton_plus", {1, 1, 0, 0, 0}}, {"newton_minus", {-1, 1, 0, 0, 0}},
    {"carroll", {0, 0, 0, 0, 1}}, {"galilei", {0, 1, 0, 0, 0}},  {"static", {0, 0, 0, 0, 0}},
};

std::string squash(std::string_view s)
{
    std::string out;
    for (char ch : s)
        if (!std::isspace(static_cast<unsigned char>(ch))) out += static_cast<char>(std::tolower(ch));
    return out;
}

int levi_civita(int a, int b, int c)
{
    if (a == b || b == c || a == c) return 0;
    return ((a + 1) % 3 == b) ? 1 : -1;
}

}  // namespace

const std::vector<std::string>& kinematical_names()
{
    static const std::vector<std::string> names = [] {
        std::vector<std::string> v;
        for (const auto& e : kKinematical) v.emplace_back(e.name);
        return v;
    }();
    return names;
}

std::string canonical_kinematical_name(std::string_view name)
{
    static const std::map<std::string, std::string> aliases = {
        {"so32", "so32"},       {"so(3,2)", "so32"},         {"ads", "so32"},
        {"so41", "so41"},       {"so(4,1)", "so41"},         {"ds", "so41"},
        {"iso31", "iso31"},     {"iso(3,1)", "iso31"},       {"poincare", "iso31"},
        {"iso4", "iso4"},       {"iso(4)", "iso4"},          {"euclidean", "iso4"},
        {"newton_plus", "newton_plus"},   {"nplus", "newton_plus"},   {"ne+", "newton_plus"},
        {"newton_minus", "newton_minus"}, {"nminus", "newton_minus"}, {"ne-", "newton_minus"},
        {"carroll", "carroll"}, {"galilei", "galilei"},      {"static", "static"},
    };
    auto it = aliases.find(squash(name));
    return it == aliases.end() ? std::string() : it->second;
}

bool is_kinematical(std::string_view name) { return !canonical_kinematical_name(name).empty(); }

KinematicalCoefficients kinematical_coefficients(std::string_view name)
{
    const std::string canon = canonical_kinematical_name(name);
    for (const auto& e : kKinematical)
        if (canon == e.name) return e.c;
    throw UnknownName("unknown kinematical algebra '" + std::string(name) + "'");
}

LieAlgebra kinematical_algebra(std::string_view name)
{
    return kinematical_algebra(canonical_kinematical_name(name).empty() ? std::string(name)
                                                                        : canonical_kinematical_name(name),
                               kinematical_coefficients(name));
}

LieAlgebra kinematical_algebra(const std::string& name, KinematicalCoefficients c)
{
    const std::vector<std::string> gens = {"J1", "J2", "J3", "P1", "P2", "P3", "K1", "K2", "K3", "H"};
    constexpr int J = 0, P = 3, K = 6, H = 9;
    std::vector<Bracket> br;
    auto add = [&br](int i, int j, int k, int coeff) {
        if (coeff) br.push_back({i, j, {{k, Rational(coeff)}}});
    };
    for (int a = 0; a < 3; ++a)
        for (int b = 0; b < 3; ++b) {
            for (int d = 0; d < 3; ++d) {
                const int e = levi_civita(a, b, d);
                if (!e) continue;
                if (a < b) {
                    add(J + a, J + b, J + d, e);
                    add(P + a, P + b, J + d, c.pp * e);
                    add(K + a, K + b, J + d, c.kk * e);
                }
                add(J + a, P + b, P + d, e);
                add(J + a, K + b, K + d, e);
            }
        }
    for (int a = 0; a < 3; ++a) {
        add(H, P + a, K + a, c.hp);
        add(H, K + a, P + a, c.hk);
        add(P + a, K + a, H, c.pk);
    }
    return make_algebra(name, gens, br);
}

LieAlgebra so_algebra(int p, int q)
{
    const int n = p + q;
    if (p < 0 || q < 0 || n < 3) throw BadSignature("so(p,q) needs p, q >= 0 and p + q >= 3");
    auto metric = [p](int mu) { return mu < p ? 1 : -1; };
    auto label = [n](int a, int b) {
        return n < 10 ? std::to_string(a + 1) + std::to_string(b + 1)
                      : std::to_string(a + 1) + "_" + std::to_string(b + 1);
    };
    std::vector<std::string> gens, coords;
    std::map<std::pair<int, int>, int> index;
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b) {
            index[{a, b}] = static_cast<int>(gens.size());
            gens.push_back("E" + label(a, b));
            coords.push_back("e" + label(a, b));
        }
    // E_ab = -E_ba; returns (index, sign) or index -1 for E_aa.
    auto elem = [&](int a, int b) -> std::pair<int, int> {
        if (a == b) return {-1, 0};
        return a < b ? std::pair{index.at({a, b}), 1} : std::pair{index.at({b, a}), -1};
    };
    std::vector<Bracket> br;
    for (const auto& [ab, x] : index)
        for (const auto& [ls, y] : index) {
            if (y <= x) continue;
            const auto [mu, nu] = ab;
            const auto [la, si] = ls;
            std::map<int, Rational> acc;
            auto add = [&](int g, int a, int b) {
                if (!g) return;
                auto [k, s] = elem(a, b);
                if (k >= 0) acc[k] += Rational(g * s);
            };
            add(mu == la ? metric(mu) : 0, nu, si);
            add(mu == si ? metric(mu) : 0, la, nu);
            add(nu == la ? -metric(nu) : 0, mu, si);
            add(nu == si ? -metric(nu) : 0, la, mu);
            Bracket b{x, y, {}};
            for (const auto& [k, v] : acc)
                if (!v.is_zero()) b.terms.push_back({k, v});
            if (!b.terms.empty()) br.push_back(std::move(b));
        }
    return make_algebra("so(" + std::to_string(p) + "," + std::to_string(q) + ")", gens, br, coords);
}

LieAlgebra isp_algebra(int n)
{
    if (n < 2) throw BadParams("isp(2N) needs N >= 2");
    const int m = 2 * n;
    using Mat = std::vector<std::vector<int>>;
    auto zero = [m] { return Mat(m, std::vector<int>(m, 0)); };

    std::vector<std::string> gens, coords;
    std::vector<Mat> mats;
    auto idx = [](int i) { return std::to_string(i + 1); };
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            Mat z = zero();
            z[i][j] = 1;
            z[n + j][n + i] = -1;
            mats.push_back(z);
            gens.push_back("X_{" + idx(i) + "," + idx(j) + "}");
            coords.push_back("x_" + idx(i) + "_" + idx(j));
        }
    for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j) {
            Mat z = zero();
            z[i][n + j] -= 1;
            z[j][n + i] -= 1;
            mats.push_back(z);
            gens.push_back("X_{-" + idx(i) + "," + idx(j) + "}");
            coords.push_back("x_m" + idx(i) + "_" + idx(j));
        }
    for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j) {
            Mat z = zero();
            z[n + i][j] += 1;
            z[n + j][i] += 1;
            mats.push_back(z);
            gens.push_back("X_{" + idx(i) + ",-" + idx(j) + "}");
            coords.push_back("x_" + idx(i) + "_m" + idx(j));
        }
    const int ns = static_cast<int>(mats.size());
    for (int i = 0; i < n; ++i) {
        gens.push_back("P" + idx(i));
        coords.push_back("p" + idx(i));
    }
    for (int i = 0; i < n; ++i) {
        gens.push_back("Q" + idx(i));
        coords.push_back("q" + idx(i));
    }

    // Coordinates of an sp(2N) matrix in the basis above.
    const int gl = n * n;
    auto decompose = [&](const Mat& z) {
        std::map<int, Rational> c;
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                if (z[i][j]) c[i * n + j] += Rational(z[i][j]);
        int off = gl;
        for (int i = 0; i < n; ++i)
            for (int j = i; j < n; ++j, ++off)
                if (z[i][n + j]) c[off] += i == j ? Rational(-z[i][n + j], 2) : Rational(-z[i][n + j]);
        for (int i = 0; i < n; ++i)
            for (int j = i; j < n; ++j, ++off)
                if (z[n + i][j]) c[off] += i == j ? Rational(z[n + i][j], 2) : Rational(z[n + i][j]);
        return c;
    };

    std::vector<Bracket> br;
    for (int a = 0; a < ns; ++a) {
        for (int b = a + 1; b < ns; ++b) {
            Mat z = zero();
            for (int r = 0; r < m; ++r)
                for (int s = 0; s < m; ++s)
                    for (int t = 0; t < m; ++t) z[r][s] += mats[a][r][t] * mats[b][t][s] - mats[b][r][t] * mats[a][t][s];
            Bracket bk{a, b, {}};
            for (const auto& [k, v] : decompose(z))
                if (!v.is_zero()) bk.terms.push_back({k, v});
            if (!bk.terms.empty()) br.push_back(std::move(bk));
        }
        for (int t = 0; t < m; ++t) {
            Bracket bk{a, ns + t, {}};
            for (int r = 0; r < m; ++r)
                if (mats[a][r][t]) bk.terms.push_back({ns + r, Rational(mats[a][r][t])});
            if (!bk.terms.empty()) br.push_back(std::move(bk));
        }
    }
    return make_algebra("isp(" + std::to_string(m) + ")", gens, br, coords);
}

LieAlgebra catalog(std::string_view name)
{
    if (is_kinematical(name)) return kinematical_algebra(name);
    const std::string s = squash(name);
    std::smatch mt;
    static const std::regex so_re(R"(so\((\d+),(\d+)\))");
    static const std::regex so_short(R"(so(\d)(\d))");
    static const std::regex isp_re(R"(isp\((\d+)(?:,r)?\))");
    static const std::regex isp_short(R"(isp(\d+))");
    if (std::regex_match(s, mt, so_re) || std::regex_match(s, mt, so_short))
        return so_algebra(std::stoi(mt[1]), std::stoi(mt[2]));
    if (std::regex_match(s, mt, isp_re) || std::regex_match(s, mt, isp_short)) {
        const int two_n = std::stoi(mt[1]);
        if (two_n % 2) throw BadParams("isp(2N) needs an even argument, got " + std::string(mt[1]));
        return isp_algebra(two_n / 2);
    }
    throw UnknownName("unknown algebra '" + std::string(name) + "'");
}

std::vector<std::string> catalog_listing()
{
    std::vector<std::string> out = kinematical_names();
    out.push_back("isp4");
    return out;
}

std::vector<std::string> catalog_families() { return {"so(p,q)", "isp(2N)"}; }

}  // namespace lieinv
