#include "motzeta/power_structure.hpp"

#include "motzeta/errors.hpp"

namespace motzeta {

ExpCoefficients::ExpCoefficients(std::size_t arity, long order) : arity_(arity), order_(order)
{
    if (arity == 0)
        throw UsageError("series need at least one variable");
}

ExpCoefficients ExpCoefficients::from_series(const MotivicSeries& s)
{
    if (!s.constant_term().is_zero())
        throw DomainError("Exp is only defined on series without constant term");
    ExpCoefficients b(s.arity(), s.order());
    for (const auto& [e, c] : s.coeffs())
        b.add_term(e, c);
    return b;
}

MotivicClass ExpCoefficients::coefficient(const ExponentVector& e) const
{
    auto it = coeffs_.find(e);
    return it == coeffs_.end() ? MotivicClass{} : it->second;
}

void ExpCoefficients::add_term(const ExponentVector& e, const MotivicClass& c)
{
    if (e.arity() != arity_)
        throw UsageError("exponent vector arity does not match");
    if (e.is_zero())
        throw DomainError("Exp coefficients are indexed by nonzero exponent vectors");
    if (e.total() > order_ || c.is_zero())
        return;
    auto [it, inserted] = coeffs_.try_emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero())
            coeffs_.erase(it);
    }
}

ExpCoefficients& ExpCoefficients::operator+=(const ExpCoefficients& o)
{
    if (o.arity_ != arity_)
        throw UsageError("Exp coefficient arity mismatch");
    if (o.order_ < order_) {
        ExpCoefficients cut(arity_, o.order_);
        for (const auto& [e, c] : coeffs_)
            cut.add_term(e, c);
        *this = std::move(cut);
    }
    for (const auto& [e, c] : o.coeffs_)
        add_term(e, c);
    return *this;
}

ExpCoefficients& ExpCoefficients::operator*=(const MotivicClass& m)
{
    CoeffMap scaled;
    for (const auto& [e, c] : coeffs_) {
        MotivicClass p = c * m;
        if (!p.is_zero())
            scaled.emplace(e, std::move(p));
    }
    coeffs_ = std::move(scaled);
    return *this;
}

MotivicSeries ExpCoefficients::to_series() const
{
    MotivicSeries s(arity_, order_);
    for (const auto& [e, c] : coeffs_)
        s.add_term(e, c);
    return s;
}

namespace {

// (1 - L^j t^a)^{-n} for an integer n, by the binomial series.
MotivicSeries pow_one_minus_monomial_int(long j, const ExponentVector& a, const Integer& n, long order)
{
    MotivicSeries r = MotivicSeries::one(a.arity(), order);
    if (n == 0)
        return r;
    // (1 - X)^{-n} = sum_k C(n + k - 1, k) X^k, valid for every integer n
    for (long k = 1; k * a.total() <= order; ++k) {
        Integer c = binomial(n + k - 1, static_cast<unsigned long>(k));
        if (c == 0)
            continue;
        r.add_term(a.scaled(k), MotivicClass::monomial(c, j * k));
    }
    return r;
}

} // namespace

MotivicSeries pow_one_minus_monomial(long j, const ExponentVector& a, const MotivicClass& m, long order)
{
    if (a.is_zero())
        throw DomainError("pow_one_minus_monomial: zero exponent vector");
    MotivicSeries r = MotivicSeries::one(a.arity(), order);
    for (const auto& [k, c] : m.terms())
        r *= pow_one_minus_monomial_int(j + k, a, c, order);
    return r;
}

MotivicSeries ps_exp(const ExpCoefficients& b)
{
    MotivicSeries r = MotivicSeries::one(b.arity(), b.order());
    for (const auto& [e, c] : b.coeffs())
        r *= pow_one_minus_monomial(0, e, c, b.order());
    return r;
}

ExpCoefficients ps_log(const MotivicSeries& a)
{
    if (!a.constant_term().is_one())
        throw DomainError("ps_log: constant term is not 1");
    ExpCoefficients b(a.arity(), a.order());
    MotivicSeries residual = a;
    // Multiplying by (1 - t^e)^{a_e} clears the t^e coefficient and touches
    // only exponents strictly above e in the graded order.
    while (true) {
        auto it = residual.coeffs().begin();
        if (it != residual.coeffs().end() && it->first.is_zero())
            ++it;
        if (it == residual.coeffs().end())
            break;
        const ExponentVector e = it->first;
        const MotivicClass c = it->second;
        b.add_term(e, c);
        residual *= pow_one_minus_monomial(0, e, -c, a.order());
    }
    return b;
}

MotivicSeries ps_pow(const MotivicSeries& a, const MotivicClass& m)
{
    if (!a.constant_term().is_one())
        throw DomainError("ps_pow: constant term is not 1");
    return ps_exp(ps_log(a) * m);
}

MotivicSeries kapranov_zeta(const MotivicClass& z, long order)
{
    return pow_one_minus_monomial(0, ExponentVector{1}, z, order);
}

} // namespace motzeta
