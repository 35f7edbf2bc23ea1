#include "motzeta/topological_zeta.hpp"

#include "motzeta/errors.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

namespace motzeta {

RationalFunctionS::RationalFunctionS(const UPoly& num, const UPoly& den) : num_(num), den_(den)
{
    if (den_.is_zero())
        throw DomainError("rational function with zero denominator");
    canonicalize();
}

void RationalFunctionS::canonicalize()
{
    if (num_.is_zero()) {
        den_ = UPoly::constant(1);
        return;
    }
    UPoly g = gcd(num_, den_);
    if (g.degree() > 0) {
        num_ = divmod(num_, g).first;
        den_ = divmod(den_, g).first;
    }
    Rational lead = den_.leading();
    num_ *= Rational(1) / lead;
    den_ *= Rational(1) / lead;
}

RationalFunctionS::IntegerForm RationalFunctionS::integer_form() const
{
    IntegerForm form;
    auto [dc, dp] = den_.primitive_part();
    if (num_.is_zero()) {
        form.scale = 0;
        form.numerator = {};
        form.denominator = dp;
        return form;
    }
    auto [nc, np] = num_.primitive_part();
    form.scale = nc / dc;
    form.scale.canonicalize();
    form.numerator = std::move(np);
    form.denominator = std::move(dp);
    return form;
}

Rational RationalFunctionS::operator()(const Rational& s) const
{
    Rational d = den_(s);
    if (d == 0)
        throw DomainError("rational function evaluated at a pole");
    Rational v = num_(s) / d;
    v.canonicalize();
    return v;
}

RationalFunctionS& RationalFunctionS::operator+=(const RationalFunctionS& o)
{
    num_ = num_ * o.den_ + o.num_ * den_;
    den_ = den_ * o.den_;
    canonicalize();
    return *this;
}

RationalFunctionS& RationalFunctionS::operator*=(const RationalFunctionS& o)
{
    num_ *= o.num_;
    den_ *= o.den_;
    canonicalize();
    return *this;
}

std::string RationalFunctionS::to_string() const
{
    RationalRoots rr = rational_roots(den_);
    // Denominator as a product of primitive linear factors (a s + b), poles
    // in descending order, with the leftover absorbed into the numerator.
    UPoly product = UPoly::constant(1);
    std::vector<std::string> factors;
    for (auto it = rr.roots.rbegin(); it != rr.roots.rend(); ++it) {
        const auto& [q, mult] = *it;
        UPoly lin = UPoly::linear(Integer(q.get_den()), -Integer(q.get_num()));
        for (long k = 0; k < mult; ++k) {
            product *= lin;
            factors.push_back("(" + lin.to_string() + ")");
        }
    }
    UPoly rest = rr.cofactor;
    if (rest.degree() > 0) {
        auto [c, ints] = rest.primitive_part();
        std::vector<Rational> q(ints.begin(), ints.end());
        UPoly prim(q);
        product *= prim;
        factors.push_back("(" + prim.to_string() + ")");
    }
    // den_ = lambda * product
    Rational lambda = den_.leading() / product.leading();
    UPoly top = num_ * (Rational(1) / lambda);

    std::string out = "(" + top.to_string() + ")";
    if (factors.empty())
        return out;
    std::string bottom;
    for (const auto& f : factors)
        bottom += f;
    return out + "/" + (factors.size() > 1 ? "(" + bottom + ")" : bottom);
}

namespace {

RationalFunctionS stratum_sum(const ResolutionData& res, const std::function<long(const Component&)>& weight)
{
    RationalFunctionS total;
    for (const auto& s : res.strata) {
        if (!res.touches_exceptional(s))
            continue;
        Integer chi = euler_char(s.cls);
        if (chi == 0)
            continue;
        UPoly den = UPoly::constant(1);
        for (const auto& id : s.members) {
            const Component& c = res.component(id);
            den *= UPoly::linear(c.N, weight(c));
        }
        total += RationalFunctionS(UPoly::constant(Rational(chi)), den);
    }
    return total;
}

} // namespace

RationalFunctionS z_top(const ResolutionData& res)
{
    return stratum_sum(res, [](const Component& c) { return c.nu; });
}

RationalFunctionS z_branch(const ResolutionData& res, const ZetaOptions& opts)
{
    for (const auto& c : res.components)
        if (!c.M)
            throw DomainError("the branch zeta function needs field \"M\", missing on component '" + c.id + "'");
    const bool plus = opts.branch_weight == BranchWeight::nu_plus_M;
    return stratum_sum(res, [plus](const Component& c) { return plus ? c.nu + *c.M : c.nu - *c.M; });
}

std::vector<Pole> poles(const RationalFunctionS& rf)
{
    RationalRoots rr = rational_roots(rf.denominator());
    if (rr.cofactor.degree() > 0)
        throw DomainError("denominator has an irreducible nonlinear factor: " + rr.cofactor.to_string());
    std::vector<Pole> out;
    for (const auto& [q, mult] : rr.roots)
        out.push_back({q, mult});
    return out;
}

bool eigenvalue_test(const CyclotomicFactorization& zf, const Rational& q)
{
    Rational r = q;
    r.canonicalize();
    const Integer d = r.get_den();
    if (d == 1)
        return true;
    long sum = 0;
    for (const auto& [m, e] : zf.factors())
        if (Integer(m) % d == 0)
            sum += e;
    return sum != 0;
}

std::string PoleReport::verdict() const
{
    if (holds)
        return "holds";
    std::string out = "FAILS at ";
    bool first = true;
    for (const auto& e : entries) {
        if (e.eigenvalue)
            continue;
        out += (first ? "s=" : ", s=") + motzeta::to_string(e.pole.q);
        first = false;
    }
    return out;
}

PoleReport mc_check(const RationalFunctionS& rf, const CyclotomicFactorization& zf)
{
    PoleReport report;
    report.convention = "eigenvalue 1 is always accepted (local monodromy at smooth points of f^-1(0)); "
                        "other eigenvalues come from zeta_f at the origin";
    for (const auto& p : poles(rf)) {
        PoleReport::Entry e;
        e.pole = p;
        Rational q = p.q;
        q.canonicalize();
        e.root_order = static_cast<long>(Integer(q.get_den()).get_si());
        e.eigenvalue = eigenvalue_test(zf, p.q);
        report.holds = report.holds && e.eigenvalue;
        report.entries.push_back(e);
    }
    return report;
}

} // namespace motzeta
