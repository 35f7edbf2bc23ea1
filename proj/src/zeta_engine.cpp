#include "motzeta/zeta_engine.hpp"

#include "motzeta/errors.hpp"
#include "motzeta/power_structure.hpp"

#include <sstream>

namespace motzeta {

std::string to_string(SpaceKind s)
{
    switch (s) {
    case SpaceKind::arcs:
        return "arcs";
    case SpaceKind::arcs_mod_cstar:
        return "arcs-mod-cstar";
    case SpaceKind::branches:
        return "branches";
    }
    return "?";
}

SpaceKind parse_space(const std::string& text)
{
    if (text == "arcs")
        return SpaceKind::arcs;
    if (text == "arcs-mod-cstar" || text == "arcs_mod_cstar")
        return SpaceKind::arcs_mod_cstar;
    if (text == "branches")
        return SpaceKind::branches;
    throw UsageError("unknown space '" + text + "'");
}

std::string to_string(BranchWeight w) { return w == BranchWeight::nu_plus_M ? "nu-plus-m" : "nu-minus-m"; }

BranchWeight parse_branch_weight(const std::string& text)
{
    if (text == "nu-plus-m" || text == "nu_plus_M")
        return BranchWeight::nu_plus_M;
    if (text == "nu-minus-m" || text == "nu_minus_M")
        return BranchWeight::nu_minus_M;
    throw UsageError("unknown branch weight '" + text + "'");
}

CyclotomicFactorization::CyclotomicFactorization(const FactorMap& factors)
{
    for (const auto& [m, e] : factors)
        multiply(m, e);
}

long CyclotomicFactorization::exponent(long m) const
{
    auto it = factors_.find(m);
    return it == factors_.end() ? 0 : it->second;
}

void CyclotomicFactorization::multiply(long m, long e)
{
    if (m < 1)
        throw UsageError("cyclotomic factor index must be positive");
    if (e == 0)
        return;
    long& slot = factors_[m];
    slot += e;
    if (slot == 0)
        factors_.erase(m);
}

MotivicSeries CyclotomicFactorization::taylor(long order) const
{
    MotivicSeries r = MotivicSeries::one(1, order);
    for (const auto& [m, e] : factors_) {
        MotivicSeries f = MotivicSeries::one(1, order);
        f.add_term(ExponentVector{m}, -1);
        r *= f.pow(e);
    }
    return r;
}

std::string CyclotomicFactorization::to_string() const
{
    if (factors_.empty())
        return "1";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, e] : factors_) {
        if (!first)
            os << "*";
        first = false;
        os << "(1-t";
        if (m != 1)
            os << "^" << m;
        os << ")";
        if (e != 1)
            os << "^(" << e << ")";
    }
    return os.str();
}

namespace {

void require_M(const ResolutionData& res, const char* what)
{
    if (!res.has_M())
        for (const auto& c : res.components)
            if (!c.M)
                throw DomainError(std::string(what) + " needs field \"M\", missing on component '" + c.id + "'");
}

long weight(const Component& c, SpaceKind space, const ZetaOptions& opts)
{
    if (space != SpaceKind::branches)
        return c.nu;
    return opts.branch_weight == BranchWeight::nu_plus_M ? c.nu + *c.M : c.nu - *c.M;
}

MotivicClass l_minus_one_power(std::size_t k) { return (MotivicClass::lefschetz() - MotivicClass(1)).pow(k); }

MotivicSeries contact_series_impl(const ResolutionData& res, SpaceKind space, long order, const ZetaOptions& opts)
{
    if (space == SpaceKind::branches)
        require_M(res, "the branch contact series");
    MotivicSeries total(1, order);
    for (const auto& s : res.strata) {
        if (!res.touches_exceptional(s))
            continue;
        MotivicSeries term = MotivicSeries::constant(1, order, l_minus_one_power(s.members.size() - 1) * s.cls);
        for (const auto& id : s.members) {
            const Component& c = res.component(id);
            term *= expand_geometric_factor(MotivicClass::lefschetz(-weight(c, space, opts)), ExponentVector{c.N},
                                            order);
        }
        total += term;
    }
    if (space == SpaceKind::arcs)
        total *= MotivicClass::lefschetz() - MotivicClass(1);
    return total;
}

void require_monodromy_space(SpaceKind space)
{
    if (space == SpaceKind::arcs)
        throw DomainError("the motivic monodromy zeta function is defined for arcs mod C* and branches only");
}

} // namespace

MotivicSeries contact_series(const ResolutionData& res, SpaceKind space, long order, const ZetaOptions& opts)
{
    return contact_series_impl(res, space, order, opts);
}

MotivicSeries two_variable_contact_series(const ResolutionData& res, long order)
{
    require_M(res, "the two-variable contact series");
    MotivicSeries total(2, order);
    for (const auto& s : res.strata) {
        if (!res.touches_exceptional(s))
            continue;
        MotivicSeries term = MotivicSeries::constant(2, order, l_minus_one_power(s.members.size() - 1) * s.cls);
        for (const auto& id : s.members) {
            const Component& c = res.component(id);
            term *= expand_geometric_factor(MotivicClass::lefschetz(-c.nu), ExponentVector{c.N, *c.M}, order);
        }
        total += term;
    }
    return total * (MotivicClass::lefschetz() - MotivicClass(1));
}

long mobius(long n)
{
    if (n < 1)
        throw UsageError("mobius: argument must be positive");
    long result = 1;
    for (long p = 2; p * p <= n; ++p) {
        if (n % p != 0)
            continue;
        n /= p;
        if (n % p == 0)
            return 0;
        result = -result;
    }
    if (n > 1)
        result = -result;
    return result;
}

MotivicSeries eta(const ResolutionData& res, SpaceKind space, long order, const ZetaOptions& opts)
{
    return ps_exp(ExpCoefficients::from_series(contact_series(res, space, order, opts)));
}

MotivicSeries motivic_monodromy_zeta(const ResolutionData& res, SpaceKind space, long order, const ZetaOptions& opts)
{
    require_monodromy_space(space);
    const MotivicSeries x = contact_series(res, space, order, opts);

    // c_n = sum_{k | n} mu(k) chi_g(X_{n/k}); zeta = prod_n (1 - t^n)^{-c_n}
    MotivicSeries by_divisors = MotivicSeries::one(1, order);
    for (long n = 1; n <= order; ++n) {
        MotivicClass c;
        for (long k = 1; k <= n; ++k)
            if (n % k == 0 && mobius(k) != 0)
                c += MotivicClass(mobius(k)) * x.coefficient(n / k);
        if (!c.is_zero())
            by_divisors *= pow_one_minus_monomial(0, ExponentVector{n}, c, order);
    }

    // Exp(sum_i mu(i) X(t^i))
    MotivicSeries combined(1, order);
    for (long i = 1; i <= order; ++i)
        if (long mu = mobius(i); mu != 0)
            combined += substitute_power(x, 0, i) * MotivicClass(mu);
    MotivicSeries by_exp = ps_exp(ExpCoefficients::from_series(combined));

    if (!(by_divisors == by_exp))
        throw std::logic_error("motivic_monodromy_zeta: divisor-sum and Exp constructions disagree");
    return by_divisors;
}

MotivicSeries theorem1_expansion(const ResolutionData& res, SpaceKind space, long order, const ZetaOptions& opts)
{
    require_monodromy_space(space);
    if (space == SpaceKind::branches)
        require_M(res, "the branch product formula");

    MotivicSeries result = MotivicSeries::one(1, order);
    for (long m = 1; m <= order; ++m) {
        const long mu = mobius(m);
        if (mu == 0)
            continue;
        for (const auto& s : res.strata) {
            if (!res.touches_exceptional(s))
                continue;
            const MotivicClass exponent =
                MotivicClass(-mu) * l_minus_one_power(s.members.size() - 1) * s.cls;
            std::vector<long> N, w;
            for (const auto& id : s.members) {
                const Component& c = res.component(id);
                N.push_back(c.N);
                w.push_back(weight(c, space, opts));
            }
            // Enumerate k in Z_{>=1}^{|I|} with m * (k . N) <= order, in
            // lexicographic order.
            std::vector<long> k(N.size(), 1);
            auto dot = [&](const std::vector<long>& v) {
                long acc = 0;
                for (std::size_t i = 0; i < k.size(); ++i)
                    acc += k[i] * v[i];
                return acc;
            };
            long base = 0;
            for (long n : N)
                base += n;
            if (m * base > order)
                continue;
            while (true) {
                const long deg = m * dot(N);
                MotivicSeries factor = MotivicSeries::one(1, order);
                factor.add_term(ExponentVector{deg}, -MotivicClass::lefschetz(-dot(w)));
                result *= ps_pow(factor, exponent);

                // advance the odometer, skipping tuples past the order
                std::size_t pos = k.size();
                while (pos > 0) {
                    --pos;
                    ++k[pos];
                    if (m * dot(N) <= order)
                        break;
                    k[pos] = 1;
                    if (pos == 0) {
                        pos = k.size() + 1;
                        break;
                    }
                }
                if (pos > k.size())
                    break;
            }
        }
    }
    return result;
}

CyclotomicFactorization acampo_zeta(const ResolutionData& res)
{
    CyclotomicFactorization z;
    for (const auto& c : res.components) {
        if (!c.is_exceptional())
            continue;
        Integer chi = euler_char(res.singleton_class(c.id));
        z.multiply(c.N, -chi.get_si());
    }
    return z;
}

MotivicSeries euler_specialize_series(const MotivicSeries& a)
{
    MotivicSeries r(a.arity(), a.order());
    for (const auto& [e, c] : a.coeffs())
        r.add_term(e, MotivicClass(euler_char(c)));
    return r;
}

} // namespace motzeta
