#include "motzeta/upoly.hpp"

#include "motzeta/errors.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace motzeta {

UPoly::UPoly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs))
{
    for (auto& c : coeffs_)
        c.canonicalize();
    trim();
}

void UPoly::trim()
{
    while (!coeffs_.empty() && coeffs_.back() == 0)
        coeffs_.pop_back();
}

Rational UPoly::coefficient(long k) const
{
    if (k < 0 || k > degree())
        return 0;
    return coeffs_[static_cast<std::size_t>(k)];
}

Rational UPoly::leading() const { return coeffs_.empty() ? Rational(0) : coeffs_.back(); }

Rational UPoly::operator()(const Rational& s) const
{
    Rational acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
        acc = acc * s + *it;
    return acc;
}

UPoly& UPoly::operator+=(const UPoly& o)
{
    if (o.coeffs_.size() > coeffs_.size())
        coeffs_.resize(o.coeffs_.size(), Rational(0));
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i)
        coeffs_[i] += o.coeffs_[i];
    trim();
    return *this;
}

UPoly& UPoly::operator-=(const UPoly& o)
{
    if (o.coeffs_.size() > coeffs_.size())
        coeffs_.resize(o.coeffs_.size(), Rational(0));
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i)
        coeffs_[i] -= o.coeffs_[i];
    trim();
    return *this;
}

UPoly& UPoly::operator*=(const UPoly& o)
{
    if (is_zero() || o.is_zero()) {
        coeffs_.clear();
        return *this;
    }
    std::vector<Rational> r(coeffs_.size() + o.coeffs_.size() - 1, Rational(0));
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        for (std::size_t j = 0; j < o.coeffs_.size(); ++j)
            r[i + j] += coeffs_[i] * o.coeffs_[j];
    coeffs_ = std::move(r);
    trim();
    return *this;
}

UPoly& UPoly::operator*=(const Rational& c)
{
    for (auto& x : coeffs_)
        x *= c;
    trim();
    return *this;
}

UPoly UPoly::derivative() const
{
    std::vector<Rational> r;
    for (std::size_t i = 1; i < coeffs_.size(); ++i)
        r.push_back(coeffs_[i] * static_cast<long>(i));
    return UPoly(std::move(r));
}

UPoly UPoly::monic() const
{
    if (is_zero())
        return *this;
    UPoly r = *this;
    r *= Rational(1) / leading();
    return r;
}

std::pair<Rational, std::vector<Integer>> UPoly::primitive_part() const
{
    if (is_zero())
        return {Rational(0), {}};
    Integer den_lcm = 1;
    for (const auto& c : coeffs_)
        den_lcm = lcm(den_lcm, Integer(c.get_den()));
    std::vector<Integer> ints;
    Integer g = 0;
    for (const auto& c : coeffs_) {
        Integer v = Integer(c.get_num()) * (den_lcm / Integer(c.get_den()));
        g = gcd(g, v);
        ints.push_back(v);
    }
    if (ints.back() < 0)
        g = -g;
    for (auto& v : ints)
        v /= g;
    Rational content(g, den_lcm);
    content.canonicalize();
    return {content, ints};
}

std::string UPoly::to_string(const std::string& var) const
{
    if (coeffs_.empty())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (long k = degree(); k >= 0; --k) {
        const Rational& c = coeffs_[static_cast<std::size_t>(k)];
        if (c == 0)
            continue;
        Rational mag = abs(c);
        if (first) {
            if (c < 0)
                os << "-";
        } else {
            os << (c < 0 ? "-" : "+");
        }
        first = false;
        if (k == 0 || mag != 1)
            os << motzeta::to_string(mag);
        if (k >= 1)
            os << var;
        if (k >= 2)
            os << "^" << k;
    }
    return os.str();
}

std::pair<UPoly, UPoly> divmod(const UPoly& a, const UPoly& b)
{
    if (b.is_zero())
        throw DomainError("polynomial division by zero");
    std::vector<Rational> rem = a.coeffs();
    long db = b.degree();
    long da = a.degree();
    if (da < db)
        return {UPoly{}, a};
    std::vector<Rational> quot(static_cast<std::size_t>(da - db + 1), Rational(0));
    const Rational lead = b.leading();
    for (long k = da - db; k >= 0; --k) {
        Rational q = rem[static_cast<std::size_t>(k + db)] / lead;
        quot[static_cast<std::size_t>(k)] = q;
        if (q == 0)
            continue;
        for (long i = 0; i <= db; ++i)
            rem[static_cast<std::size_t>(k + i)] -= q * b.coeffs()[static_cast<std::size_t>(i)];
    }
    rem.resize(static_cast<std::size_t>(db));
    return {UPoly(std::move(quot)), UPoly(std::move(rem))};
}

UPoly gcd(const UPoly& a, const UPoly& b)
{
    UPoly x = a;
    UPoly y = b;
    while (!y.is_zero()) {
        UPoly r = divmod(x, y).second;
        x = std::move(y);
        y = std::move(r);
    }
    return x.monic();
}

namespace {

std::vector<Integer> positive_divisors(Integer n)
{
    n = abs(n);
    std::vector<Integer> small;
    std::vector<Integer> large;
    for (Integer d = 1; d * d <= n; ++d) {
        if (n % d != 0)
            continue;
        small.push_back(d);
        if (d * d != n)
            large.push_back(n / d);
    }
    small.insert(small.end(), large.rbegin(), large.rend());
    return small;
}

} // namespace

RationalRoots rational_roots(const UPoly& p)
{
    if (p.is_zero())
        throw DomainError("rational_roots of the zero polynomial");
    RationalRoots out;
    UPoly rest = p;

    long zero_mult = 0;
    while (rest.degree() > 0 && rest.coefficient(0) == 0) {
        rest = divmod(rest, UPoly::linear(1, 0)).first;
        ++zero_mult;
    }

    std::vector<std::pair<Rational, long>> found;
    if (rest.degree() > 0) {
        auto [content, ints] = rest.primitive_part();
        std::set<Rational> candidates;
        for (const auto& num : positive_divisors(ints.front()))
            for (const auto& den : positive_divisors(ints.back())) {
                Rational q(num, den);
                q.canonicalize();
                candidates.insert(q);
                candidates.insert(-q);
            }
        for (const auto& q : candidates) {
            long mult = 0;
            while (rest.degree() > 0 && rest(q) == 0) {
                rest = divmod(rest, UPoly::linear(1, -q)).first;
                ++mult;
            }
            if (mult > 0)
                found.emplace_back(q, mult);
        }
    }
    if (zero_mult > 0)
        found.emplace_back(Rational(0), zero_mult);
    std::sort(found.begin(), found.end());
    out.roots = std::move(found);
    out.cofactor = std::move(rest);
    return out;
}

} // namespace motzeta
