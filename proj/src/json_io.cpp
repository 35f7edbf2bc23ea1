#include "motzeta/json_io.hpp"

#include "motzeta/errors.hpp"

#include <algorithm>
#include <fstream>
#include <limits>
#include <sstream>

namespace motzeta::io {

namespace {

const json& field(const json& j, const char* key, const std::string& where)
{
    if (!j.is_object())
        throw ParseError(where + ": expected an object");
    auto it = j.find(key);
    if (it == j.end())
        throw ParseError(where + ": missing field \"" + key + "\"");
    return *it;
}

long long_from_json(const json& j, const std::string& where)
{
    Integer n = integer_from_json(j, where);
    if (!n.fits_slong_p())
        throw ParseError(where + ": integer out of range");
    return n.get_si();
}

long parse_exponent_key(const std::string& key, const std::string& where)
{
    try {
        std::size_t used = 0;
        long k = std::stol(key, &used);
        if (used == key.size())
            return k;
    } catch (const std::exception&) {
    }
    throw ParseError(where + ": exponent key \"" + key + "\" is not an integer");
}

} // namespace

json integer_to_json(const Integer& n)
{
    static const Integer lo(std::to_string(std::numeric_limits<std::int64_t>::min()));
    static const Integer hi(std::to_string(std::numeric_limits<std::int64_t>::max()));
    if (n >= lo && n <= hi)
        return json(std::stoll(n.get_str()));
    return json(n.get_str());
}

Integer integer_from_json(const json& j, const std::string& where)
{
    if (j.is_number_integer())
        return Integer(j.dump());
    if (j.is_string()) {
        Integer n;
        if (n.set_str(j.get<std::string>(), 10) != 0)
            throw ParseError(where + ": \"" + j.get<std::string>() + "\" is not a decimal integer");
        return n;
    }
    throw ParseError(where + ": expected an integer");
}

json to_json(const MotivicClass& c)
{
    json j = json::object();
    for (const auto& [k, coeff] : c.terms())
        j[std::to_string(k)] = integer_to_json(coeff);
    return j;
}

MotivicClass class_from_json(const json& j, const std::string& where)
{
    if (!j.is_object())
        throw ParseError(where + ": a class is an object mapping exponents to coefficients");
    MotivicClass c;
    for (const auto& [key, value] : j.items())
        c += MotivicClass::monomial(integer_from_json(value, where + "[" + key + "]"),
                                    parse_exponent_key(key, where));
    return c;
}

json to_json(const MotivicSeries& s)
{
    json coeffs = json::array();
    for (const auto& [e, c] : s.coeffs())
        coeffs.push_back({{"exp", e.entries()}, {"class", to_json(c)}});
    return {{"arity", s.arity()}, {"order", s.order()}, {"coeffs", coeffs}};
}

namespace {

template <class Target>
Target read_graded(const json& j, const char* what)
{
    const long arity = long_from_json(field(j, "arity", what), std::string(what) + ".arity");
    const long order = long_from_json(field(j, "order", what), std::string(what) + ".order");
    if (arity < 1 || order < 0)
        throw ParseError(std::string(what) + ": arity must be >= 1 and order >= 0");
    Target out(static_cast<std::size_t>(arity), order);
    const json& coeffs = field(j, "coeffs", what);
    if (!coeffs.is_array())
        throw ParseError(std::string(what) + ".coeffs: expected an array");
    std::size_t idx = 0;
    for (const auto& entry : coeffs) {
        std::string where = std::string(what) + ".coeffs[" + std::to_string(idx++) + "]";
        const json& exp = field(entry, "exp", where);
        if (!exp.is_array() || exp.size() != static_cast<std::size_t>(arity))
            throw ParseError(where + ".exp: expected " + std::to_string(arity) + " entries");
        std::vector<long> e;
        for (const auto& x : exp) {
            long v = long_from_json(x, where + ".exp");
            if (v < 0)
                throw ParseError(where + ".exp: negative exponent");
            e.push_back(v);
        }
        out.add_term(ExponentVector(std::move(e)), class_from_json(field(entry, "class", where), where + ".class"));
    }
    return out;
}

} // namespace

MotivicSeries series_from_json(const json& j) { return read_graded<MotivicSeries>(j, "series"); }

json to_json(const ExpCoefficients& b)
{
    json coeffs = json::array();
    for (const auto& [e, c] : b.coeffs())
        coeffs.push_back({{"exp", e.entries()}, {"class", to_json(c)}});
    return {{"arity", b.arity()}, {"order", b.order()}, {"coeffs", coeffs}};
}

ExpCoefficients exp_coefficients_from_json(const json& j)
{
    try {
        return read_graded<ExpCoefficients>(j, "exp_coefficients");
    } catch (const DomainError& e) {
        throw ParseError(std::string("exp_coefficients: ") + e.what());
    }
}

json to_json(const ResolutionData& res)
{
    json comps = json::array();
    for (const auto& c : res.components) {
        json jc = {{"id", c.id},
                   {"kind", c.is_exceptional() ? "exceptional" : "strict"},
                   {"N", c.N},
                   {"nu", c.nu}};
        if (c.M)
            jc["M"] = *c.M;
        comps.push_back(jc);
    }
    json strata = json::array();
    for (const auto& s : res.strata)
        strata.push_back({{"members", s.members}, {"class", to_json(s.cls)}});
    return {{"ambient_dim", res.ambient_dim}, {"components", comps}, {"strata", strata}};
}

ResolutionData resolution_from_json(const json& j)
{
    ResolutionData res;
    res.ambient_dim = static_cast<int>(long_from_json(field(j, "ambient_dim", "resolution"), "ambient_dim"));
    const json& comps = field(j, "components", "resolution");
    if (!comps.is_array())
        throw ParseError("resolution.components: expected an array");
    std::size_t idx = 0;
    for (const auto& jc : comps) {
        std::string where = "components[" + std::to_string(idx++) + "]";
        Component c;
        const json& id = field(jc, "id", where);
        if (!id.is_string())
            throw ParseError(where + ".id: expected a string");
        c.id = id.get<std::string>();
        const json& kind = field(jc, "kind", where);
        if (kind == "exceptional")
            c.kind = ComponentKind::exceptional;
        else if (kind == "strict")
            c.kind = ComponentKind::strict;
        else
            throw ParseError(where + ".kind: expected \"exceptional\" or \"strict\"");
        c.N = long_from_json(field(jc, "N", where), where + ".N");
        c.nu = long_from_json(field(jc, "nu", where), where + ".nu");
        if (auto it = jc.find("M"); it != jc.end() && !it->is_null())
            c.M = long_from_json(*it, where + ".M");
        res.components.push_back(std::move(c));
    }
    const json& strata = field(j, "strata", "resolution");
    if (!strata.is_array())
        throw ParseError("resolution.strata: expected an array");
    idx = 0;
    for (const auto& js : strata) {
        std::string where = "strata[" + std::to_string(idx++) + "]";
        Stratum s;
        const json& members = field(js, "members", where);
        if (!members.is_array())
            throw ParseError(where + ".members: expected an array");
        for (const auto& m : members) {
            if (!m.is_string())
                throw ParseError(where + ".members: expected strings");
            s.members.push_back(m.get<std::string>());
        }
        std::sort(s.members.begin(), s.members.end());
        s.cls = class_from_json(field(js, "class", where), where + ".class");
        res.strata.push_back(std::move(s));
    }
    return res;
}

json to_json(const CyclotomicFactorization& z)
{
    json factors = json::object();
    for (const auto& [m, e] : z.factors())
        factors[std::to_string(m)] = e;
    return {{"factors", factors}};
}

CyclotomicFactorization factorization_from_json(const json& j)
{
    const json& factors = field(j, "factors", "factorization");
    if (!factors.is_object())
        throw ParseError("factorization.factors: expected an object");
    CyclotomicFactorization z;
    for (const auto& [key, value] : factors.items()) {
        long m = parse_exponent_key(key, "factors");
        if (m < 1)
            throw ParseError("factors: index must be positive");
        z.multiply(m, long_from_json(value, "factors[" + key + "]"));
    }
    return z;
}

json to_json(const RationalFunctionS& rf)
{
    auto form = rf.integer_form();
    json num = json::array();
    json den = json::array();
    for (const auto& c : form.numerator)
        num.push_back(integer_to_json(c));
    for (const auto& c : form.denominator)
        den.push_back(integer_to_json(c));
    return {{"numerator", num}, {"denominator", den}, {"scale", to_string(form.scale)}, {"text", rf.to_string()}};
}

RationalFunctionS rational_function_from_json(const json& j)
{
    auto read_poly = [&](const char* key) {
        const json& arr = field(j, key, "rational_function");
        if (!arr.is_array())
            throw ParseError(std::string("rational_function.") + key + ": expected an array");
        std::vector<Rational> coeffs;
        for (const auto& c : arr)
            coeffs.emplace_back(integer_from_json(c, key));
        return UPoly(std::move(coeffs));
    };
    const json& scale_j = field(j, "scale", "rational_function");
    Rational scale;
    if (!scale_j.is_string() || scale.set_str(scale_j.get<std::string>(), 10) != 0)
        throw ParseError("rational_function.scale: expected a rational string like \"2\" or \"-3/4\"");
    scale.canonicalize();
    UPoly den = read_poly("denominator");
    if (den.is_zero())
        throw ParseError("rational_function.denominator: zero polynomial");
    return RationalFunctionS(read_poly("numerator") * scale, den);
}

json to_json(const PoleReport& report)
{
    json entries = json::array();
    for (const auto& e : report.entries)
        entries.push_back({{"pole", to_string(e.pole.q)},
                           {"order", e.pole.order},
                           {"root_of_unity_order", e.root_order},
                           {"eigenvalue", e.eigenvalue}});
    return {{"poles", entries},
            {"holds", report.holds},
            {"verdict", report.verdict()},
            {"convention", report.convention}};
}

json read_file(const std::filesystem::path& path)
{
    std::ifstream in(path);
    if (!in)
        throw ParseError("cannot open " + path.string());
    try {
        return json::parse(in);
    } catch (const json::parse_error& e) {
        throw ParseError(path.string() + ": " + e.what());
    }
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

void write_file(const std::filesystem::path& path, const json& j)
{
    std::ofstream out(path);
    if (!out)
        throw ParseError("cannot write " + path.string());
    out << dump(j);
}

} // namespace motzeta::io
