#include "lieinv/io.hpp"

#include <fstream>
#include <sstream>

namespace lieinv {

namespace {

template <class F>
auto guarded(const char* what, F&& f) -> decltype(f())
{
    try {
        return f();
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string(what) + ": " + e.what());
    } catch (const std::logic_error& e) {
        throw ParseError(std::string(what) + ": " + e.what());
    }
}

const Json& field(const Json& j, const char* key)
{
    if (!j.is_object()) throw ParseError("expected a JSON object");
    auto it = j.find(key);
    if (it == j.end()) throw ParseError(std::string("missing field '") + key + "'");
    return *it;
}

Rational rational_field(const Json& c)
{
    if (c.is_number_integer()) return Rational(c.get<long>());
    if (c.is_string()) return Rational::parse(c.get<std::string>());
    throw ParseError("coefficient must be a rational string or an integer");
}

/// Union of the universes of `polys`, in first-seen order.
Universe common_universe(const std::vector<const MultiPoly*>& polys)
{
    Universe u = make_universe({});
    for (const auto* p : polys) u = merge_universes(u, p->universe());
    return u;
}

Json names(const Universe& u) { return Json(std::vector<std::string>(u->begin(), u->end())); }

std::string text(const MultiPoly& p, const Universe& u) { return p.over(u).to_string(); }

MultiPoly poly_field(const Json& j, const char* key, const Universe& u)
{
    return parse_poly(field(j, key).get<std::string>(), u);
}

Universe universe_field(const Json& j) { return make_universe(field(j, "variables").get<std::vector<std::string>>()); }

Json entry_json(const InvariantEntry& e, const Universe& u)
{
    return Json{{"polynomial", text(e.poly, u)},
                {"degree", e.degree},
                {"provenance", e.provenance},
                {"operators_checked", e.operators_checked},
                {"operators_passed", e.operators_passed},
                {"verified", e.verified()}};
}

InvariantEntry entry_from(const Json& j, const Universe& u)
{
    return InvariantEntry{poly_field(j, "polynomial", u), field(j, "degree").get<int>(),
                          field(j, "provenance").get<std::string>(), field(j, "operators_checked").get<int>(),
                          field(j, "operators_passed").get<int>()};
}

Json set_json(const InvariantSet& s, const Universe& u)
{
    Json members = Json::array();
    for (const auto& m : s.members)
        members.push_back({{"polynomial", text(m.poly, u)}, {"degree", m.degree}, {"provenance", m.provenance}});
    return Json{{"algebra", s.algebra}, {"members", members}};
}

InvariantSet set_from(const Json& j, const Universe& u)
{
    InvariantSet s;
    s.algebra = field(j, "algebra").get<std::string>();
    for (const auto& m : field(j, "members"))
        s.members.push_back(
            {poly_field(m, "polynomial", u), field(m, "degree").get<int>(), field(m, "provenance").get<std::string>()});
    return s;
}

Json poly_list(const std::vector<MultiPoly>& ps, const Universe& u)
{
    Json out = Json::array();
    for (const auto& p : ps) out.push_back(text(p, u));
    return out;
}

std::vector<MultiPoly> poly_list_from(const Json& j, const Universe& u)
{
    std::vector<MultiPoly> out;
    for (const auto& s : j) out.push_back(parse_poly(s.get<std::string>(), u));
    return out;
}

}  // namespace

Json parse_json(std::string_view text)
{
    try {
        return Json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what());
    }
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

std::string read_file(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot read '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

LieAlgebra algebra_from_json(const Json& j)
{
    return guarded("algebra definition", [&] {
        const std::string name = field(j, "name").get<std::string>();
        const auto gens = field(j, "generators").get<std::vector<std::string>>();
        if (gens.empty()) throw ParseError("an algebra needs at least one generator");
        std::vector<Bracket> brackets;
        if (auto it = j.find("brackets"); it != j.end()) {
            if (!it->is_array()) throw ParseError("'brackets' must be an array");
            for (const auto& b : *it) {
                Bracket br{field(b, "i").get<int>() - 1, field(b, "j").get<int>() - 1, {}};
                for (const auto& t : field(b, "terms"))
                    br.terms.push_back({field(t, "k").get<int>() - 1, rational_field(field(t, "c"))});
                brackets.push_back(std::move(br));
            }
        }
        std::vector<std::string> coords;
        if (auto it = j.find("coordinates"); it != j.end()) coords = it->get<std::vector<std::string>>();
        return make_algebra(name, gens, brackets, coords);
    });
}

Json to_json(const LieAlgebra& g)
{
    Json brackets = Json::array();
    for (const auto& [ij, terms] : g.table()) {
        Json ts = Json::array();
        for (const auto& [k, c] : terms) ts.push_back({{"k", k + 1}, {"c", c.to_string()}});
        brackets.push_back({{"i", ij.first + 1}, {"j", ij.second + 1}, {"terms", ts}});
    }
    return Json{{"name", g.name()},
                {"generators", g.generators()},
                {"coordinates", names(g.coordinates())},
                {"brackets", brackets}};
}

ContractionSpec spec_from_json(const Json& j, const AlgebraResolver& resolve)
{
    return guarded("contraction spec", [&] {
        const LieAlgebra g = resolve(field(j, "algebra").get<std::string>());
        const Json& e = field(j, "exponents");
        if (!e.is_object()) throw ParseError("'exponents' must be an object");
        std::map<std::string, int> exps;
        for (const auto& [k, v] : e.items()) exps[k] = v.get<int>();
        std::string name = j.contains("name") ? j["name"].get<std::string>() : "";
        return make_spec(g, exps, std::move(name));
    });
}

Json to_json(const ContractionSpec& s)
{
    Json e = Json::object();
    for (int i = 0; i < s.algebra.dim(); ++i) e[s.algebra.generators()[i]] = s.exponents[i];
    return Json{{"name", s.name}, {"algebra", s.algebra.name()}, {"exponents", e}};
}

Json to_json(const InvariantsReport& r)
{
    std::vector<const MultiPoly*> ps;
    if (r.polynomial) ps.push_back(&*r.polynomial);
    for (const auto& e : r.invariants) ps.push_back(&e.poly);
    const Universe u = common_universe(ps);
    Json j{{"algebra", r.algebra}, {"dim", r.dim}, {"n_invariants", r.n_invariants}, {"method", r.method}};
    j["variables"] = names(u);
    if (r.polynomial) j["polynomial"] = text(*r.polynomial, u);
    Json inv = Json::array();
    for (const auto& e : r.invariants) inv.push_back(entry_json(e, u));
    j["invariants"] = inv;
    j["independence_rank"] = r.independence_rank;
    j["notes"] = r.notes;
    return j;
}

InvariantsReport invariants_report_from_json(const Json& j)
{
    return guarded("invariants report", [&] {
        const Universe u = universe_field(j);
        InvariantsReport r;
        r.algebra = field(j, "algebra").get<std::string>();
        r.dim = field(j, "dim").get<int>();
        r.n_invariants = field(j, "n_invariants").get<int>();
        r.method = field(j, "method").get<std::string>();
        if (j.contains("polynomial")) r.polynomial = poly_field(j, "polynomial", u);
        for (const auto& e : field(j, "invariants")) r.invariants.push_back(entry_from(e, u));
        r.independence_rank = field(j, "independence_rank").get<int>();
        r.notes = field(j, "notes").get<std::vector<std::string>>();
        return r;
    });
}

Json to_json(const ContractionReport& r)
{
    std::vector<const MultiPoly*> ps;
    if (r.limit) ps.push_back(&*r.limit);
    for (const auto& e : r.invariants) ps.push_back(&e.poly);
    const Universe u = common_universe(ps);
    Json e = Json::object();
    for (int i = 0; i < r.contracted.dim(); ++i) e[r.contracted.generators()[i]] = r.exponents[i];
    Json j{{"name", r.name}, {"source", r.source}, {"exponents", e}, {"contracted", to_json(r.contracted)},
           {"n_source", r.n_source}, {"n_contracted", r.n_contracted}};
    if (r.alpha) j["alpha"] = *r.alpha;
    j["variables"] = names(u);
    if (r.limit) j["limit"] = text(*r.limit, u);
    Json inv = Json::array();
    for (const auto& x : r.invariants) inv.push_back(entry_json(x, u));
    j["invariants"] = inv;
    if (r.diagnostic) j["diagnostic"] = {{"kind", r.diagnostic->kind}, {"message", r.diagnostic->message}};
    return j;
}

ContractionReport contraction_report_from_json(const Json& j)
{
    return guarded("contraction report", [&] {
        const Universe u = universe_field(j);
        ContractionReport r;
        r.name = field(j, "name").get<std::string>();
        r.source = field(j, "source").get<std::string>();
        r.contracted = algebra_from_json(field(j, "contracted"));
        const Json& e = field(j, "exponents");
        for (const auto& g : r.contracted.generators()) r.exponents.push_back(field(e, g.c_str()).get<int>());
        r.n_source = field(j, "n_source").get<int>();
        r.n_contracted = field(j, "n_contracted").get<int>();
        if (j.contains("alpha")) r.alpha = j["alpha"].get<int>();
        if (j.contains("limit")) r.limit = poly_field(j, "limit", u);
        for (const auto& x : field(j, "invariants")) r.invariants.push_back(entry_from(x, u));
        if (j.contains("diagnostic"))
            r.diagnostic = ContractionDiagnostic{field(j["diagnostic"], "kind").get<std::string>(),
                                                 field(j["diagnostic"], "message").get<std::string>()};
        return r;
    });
}

Json to_json(const MLPReport& r)
{
    std::vector<const MultiPoly*> ps;
    for (const auto& m : r.casimirs.members) ps.push_back(&m.poly);
    for (const auto& m : r.subalgebra_casimirs.members) ps.push_back(&m.poly);
    ps.push_back(&r.reduced_polynomial);
    for (const auto& p : r.reduced_candidates) ps.push_back(&p);
    for (const auto& v : r.verdicts) ps.push_back(&v.poly);
    for (const auto& p : r.accepted_labels) ps.push_back(&p);
    const Universe u = common_universe(ps);

    std::vector<int> sub;
    for (int i : r.subalgebra_indices) sub.push_back(i + 1);
    Json verdicts = Json::array();
    for (const auto& v : r.verdicts)
        verdicts.push_back({{"polynomial", text(v.poly, u)},
                            {"origin", v.origin},
                            {"annihilated", v.annihilated},
                            {"raises_rank", v.raises_rank},
                            {"accepted", v.accepted},
                            {"reason", v.reason}});
    return Json{{"algebra", r.algebra},
                {"subalgebra", sub},
                {"n", r.n},
                {"m", r.m},
                {"l_prime", r.l_prime},
                {"n_prime", r.n_prime},
                {"surviving_casimirs", r.surviving_casimirs},
                {"variables", names(u)},
                {"casimirs", set_json(r.casimirs, u)},
                {"subalgebra_casimirs", set_json(r.subalgebra_casimirs, u)},
                {"reduced_polynomial", text(r.reduced_polynomial, u)},
                {"reduced_candidates", poly_list(r.reduced_candidates, u)},
                {"verdicts", verdicts},
                {"accepted_labels", poly_list(r.accepted_labels, u)},
                {"method_fails", r.method_fails},
                {"flags", r.flags},
                {"notes", r.notes}};
}

MLPReport mlp_report_from_json(const Json& j)
{
    return guarded("mlp report", [&] {
        const Universe u = universe_field(j);
        MLPReport r;
        r.algebra = field(j, "algebra").get<std::string>();
        for (int i : field(j, "subalgebra").get<std::vector<int>>()) r.subalgebra_indices.push_back(i - 1);
        r.n = field(j, "n").get<int>();
        r.m = field(j, "m").get<int>();
        r.l_prime = field(j, "l_prime").get<int>();
        r.n_prime = field(j, "n_prime").get<int>();
        r.surviving_casimirs = field(j, "surviving_casimirs").get<int>();
        r.casimirs = set_from(field(j, "casimirs"), u);
        r.subalgebra_casimirs = set_from(field(j, "subalgebra_casimirs"), u);
        r.reduced_polynomial = poly_field(j, "reduced_polynomial", u);
        r.reduced_candidates = poly_list_from(field(j, "reduced_candidates"), u);
        for (const auto& v : field(j, "verdicts"))
            r.verdicts.push_back({poly_field(v, "polynomial", u), field(v, "origin").get<std::string>(),
                                  field(v, "annihilated").get<bool>(), field(v, "raises_rank").get<bool>(),
                                  field(v, "accepted").get<bool>(), field(v, "reason").get<std::string>()});
        r.accepted_labels = poly_list_from(field(j, "accepted_labels"), u);
        r.method_fails = field(j, "method_fails").get<bool>();
        r.flags = field(j, "flags").get<std::vector<std::string>>();
        r.notes = field(j, "notes").get<std::vector<std::string>>();
        return r;
    });
}

Json to_json(const VerifyReport& r)
{
    Json checks = Json::array();
    for (const auto& c : r.checks)
        checks.push_back({{"name", c.name}, {"group", c.group}, {"passed", c.passed}, {"detail", c.detail}});
    const auto first = r.first_failure();
    return Json{{"strict", r.strict},
                {"passed", r.passed()},
                {"first_failure", first ? Json(*first) : Json(nullptr)},
                {"checks", checks}};
}

VerifyReport verify_report_from_json(const Json& j)
{
    return guarded("verify report", [&] {
        VerifyReport r;
        r.strict = field(j, "strict").get<bool>();
        for (const auto& c : field(j, "checks"))
            r.checks.push_back({field(c, "name").get<std::string>(), field(c, "group").get<std::string>(),
                                field(c, "passed").get<bool>(), field(c, "detail").get<std::string>()});
        return r;
    });
}

}  // namespace lieinv
