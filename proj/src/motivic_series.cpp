#include "motzeta/motivic_series.hpp"

#include "motzeta/errors.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>

namespace motzeta {

ExponentVector::ExponentVector(std::vector<long> entries) : entries_(std::move(entries))
{
    for (long e : entries_) {
        if (e < 0)
            throw UsageError("exponent vectors must have nonnegative entries");
        total_ += e;
    }
}

ExponentVector::ExponentVector(std::initializer_list<long> entries)
    : ExponentVector(std::vector<long>(entries))
{
}

ExponentVector ExponentVector::unit(std::size_t arity, std::size_t v, long k)
{
    std::vector<long> e(arity, 0);
    e.at(v) = k;
    return ExponentVector(std::move(e));
}

ExponentVector ExponentVector::zero(std::size_t arity) { return ExponentVector(std::vector<long>(arity, 0)); }

ExponentVector ExponentVector::operator+(const ExponentVector& o) const
{
    ExponentVector r = *this;
    for (std::size_t i = 0; i < r.entries_.size(); ++i)
        r.entries_[i] += o.entries_[i];
    r.total_ += o.total_;
    return r;
}

ExponentVector ExponentVector::scaled(long k) const
{
    ExponentVector r = *this;
    for (long& e : r.entries_)
        e *= k;
    r.total_ *= k;
    return r;
}

std::strong_ordering operator<=>(const ExponentVector& a, const ExponentVector& b)
{
    if (auto c = a.total_ <=> b.total_; c != 0)
        return c;
    return a.entries_ <=> b.entries_;
}

MotivicSeries::MotivicSeries(std::size_t arity, long order) : arity_(arity), order_(order)
{
    if (arity == 0)
        throw UsageError("series need at least one variable");
    if (order < 0)
        throw UsageError("truncation order must be nonnegative");
}

MotivicSeries MotivicSeries::one(std::size_t arity, long order) { return constant(arity, order, 1); }

MotivicSeries MotivicSeries::constant(std::size_t arity, long order, const MotivicClass& c)
{
    MotivicSeries s(arity, order);
    s.add_term(ExponentVector::zero(arity), c);
    return s;
}

MotivicSeries MotivicSeries::univariate(long order, const std::vector<MotivicClass>& coeffs)
{
    MotivicSeries s(1, order);
    for (std::size_t k = 0; k < coeffs.size(); ++k)
        s.add_term(ExponentVector{static_cast<long>(k)}, coeffs[k]);
    return s;
}

MotivicClass MotivicSeries::coefficient(const ExponentVector& e) const
{
    auto it = coeffs_.find(e);
    return it == coeffs_.end() ? MotivicClass{} : it->second;
}

MotivicClass MotivicSeries::coefficient(long k) const
{
    if (arity_ != 1)
        throw UsageError("scalar coefficient index on a multivariate series");
    return coefficient(ExponentVector{k});
}

MotivicClass MotivicSeries::constant_term() const { return coefficient(ExponentVector::zero(arity_)); }

void MotivicSeries::add_term(const ExponentVector& e, const MotivicClass& c)
{
    if (e.arity() != arity_)
        throw UsageError("exponent vector arity does not match series arity");
    if (e.total() > order_ || c.is_zero())
        return;
    auto [it, inserted] = coeffs_.try_emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero())
            coeffs_.erase(it);
    }
}

MotivicSeries MotivicSeries::truncated(long order) const
{
    MotivicSeries r(arity_, std::min(order, order_));
    for (const auto& [e, c] : coeffs_) {
        if (e.total() > r.order_)
            break;
        r.coeffs_.emplace_hint(r.coeffs_.end(), e, c);
    }
    return r;
}

void MotivicSeries::check_compatible(const MotivicSeries& o) const
{
    if (arity_ != o.arity_)
        throw UsageError("series arity mismatch: " + std::to_string(arity_) + " vs " + std::to_string(o.arity_));
}

MotivicSeries& MotivicSeries::operator+=(const MotivicSeries& o)
{
    check_compatible(o);
    if (o.order_ < order_)
        *this = truncated(o.order_);
    for (const auto& [e, c] : o.coeffs_)
        add_term(e, c);
    return *this;
}

MotivicSeries& MotivicSeries::operator-=(const MotivicSeries& o)
{
    check_compatible(o);
    if (o.order_ < order_)
        *this = truncated(o.order_);
    for (const auto& [e, c] : o.coeffs_)
        add_term(e, -c);
    return *this;
}

MotivicSeries operator*(const MotivicSeries& a, const MotivicSeries& b)
{
    a.check_compatible(b);
    MotivicSeries r(a.arity_, std::min(a.order_, b.order_));
    for (const auto& [ea, ca] : a.coeffs_) {
        if (ea.total() > r.order_)
            break;
        for (const auto& [eb, cb] : b.coeffs_) {
            // coefficient maps iterate in graded order
            if (ea.total() + eb.total() > r.order_)
                break;
            r.add_term(ea + eb, ca * cb);
        }
    }
    return r;
}

MotivicSeries& MotivicSeries::operator*=(const MotivicSeries& o)
{
    *this = *this * o;
    return *this;
}

MotivicSeries& MotivicSeries::operator*=(const MotivicClass& c)
{
    if (c.is_zero()) {
        coeffs_.clear();
        return *this;
    }
    for (auto& [e, coeff] : coeffs_)
        coeff *= c;
    return *this;
}

MotivicSeries MotivicSeries::pow(long n) const
{
    MotivicSeries base = n < 0 ? series_invert(*this) : *this;
    unsigned long k = n < 0 ? static_cast<unsigned long>(-n) : static_cast<unsigned long>(n);
    MotivicSeries result = one(arity_, order_);
    while (k > 0) {
        if (k & 1UL)
            result *= base;
        k >>= 1;
        if (k > 0)
            base *= base;
    }
    return result;
}

std::string MotivicSeries::to_string() const
{
    if (coeffs_.empty())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : coeffs_) {
        if (!first)
            os << " + ";
        first = false;
        os << "(" << c << ")";
        for (std::size_t v = 0; v < arity_; ++v) {
            if (e[v] == 0)
                continue;
            os << "*t";
            if (arity_ > 1)
                os << (v + 1);
            if (e[v] != 1)
                os << "^" << e[v];
        }
    }
    os << " + O(" << (order_ + 1) << ")";
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const MotivicSeries& s) { return os << s.to_string(); }

MotivicSeries series_arith(const MotivicSeries& a, const MotivicSeries& b, ArithOp op)
{
    switch (op) {
    case ArithOp::add:
        return a + b;
    case ArithOp::sub:
        return a - b;
    case ArithOp::mul:
        return a * b;
    }
    return a;
}

MotivicSeries series_invert(const MotivicSeries& a)
{
    if (!a.constant_term().is_one())
        throw DomainError("series_invert: constant term is not 1");
    // a = 1 + b with b in the augmentation ideal: 1/a = sum_k (-b)^k
    MotivicSeries neg_b = MotivicSeries::one(a.arity(), a.order()) - a;
    MotivicSeries result = MotivicSeries::one(a.arity(), a.order());
    MotivicSeries power = result;
    for (long k = 1; k <= a.order(); ++k) {
        power *= neg_b;
        if (power.is_zero())
            break;
        result += power;
    }
    return result;
}

MotivicSeries substitute_power(const MotivicSeries& a, std::size_t v, long k)
{
    if (v >= a.arity())
        throw UsageError("substitute_power: variable index out of range");
    if (k < 1)
        throw UsageError("substitute_power: power must be positive");
    MotivicSeries r(a.arity(), a.order());
    for (const auto& [e, c] : a.coeffs()) {
        std::vector<long> entries = e.entries();
        entries[v] *= k;
        r.add_term(ExponentVector(std::move(entries)), c);
    }
    return r;
}

MotivicSeries scale_variable(const MotivicSeries& a, std::size_t v, long j)
{
    if (v >= a.arity())
        throw UsageError("scale_variable: variable index out of range");
    MotivicSeries r(a.arity(), a.order());
    for (const auto& [e, c] : a.coeffs())
        r.add_term(e, c.shifted(j * e[v]));
    return r;
}

MotivicSeries specialize_variable(const MotivicSeries& a, std::size_t v, long j)
{
    if (a.arity() < 2)
        throw UsageError("specialize_variable needs at least two variables");
    if (v >= a.arity())
        throw UsageError("specialize_variable: variable index out of range");
    MotivicSeries r(a.arity() - 1, a.order());
    for (const auto& [e, c] : a.coeffs()) {
        std::vector<long> rest;
        rest.reserve(a.arity() - 1);
        for (std::size_t i = 0; i < a.arity(); ++i)
            if (i != v)
                rest.push_back(e[i]);
        r.add_term(ExponentVector(std::move(rest)), c.shifted(j * e[v]));
    }
    return r;
}

MotivicSeries expand_geometric_factor(const MotivicClass& c, const ExponentVector& a, long order)
{
    if (a.is_zero())
        throw DomainError("expand_geometric_factor: zero exponent vector does not converge");
    MotivicSeries r(a.arity(), order);
    MotivicClass ck = c;
    for (long k = 1; k * a.total() <= order; ++k) {
        r.add_term(a.scaled(k), ck);
        ck *= c;
    }
    return r;
}

} // namespace motzeta
