#include "motzeta/motivic_class.hpp"

#include <ostream>
#include <sstream>

namespace motzeta {

MotivicClass::MotivicClass(const Integer& n)
{
    if (n != 0)
        terms_.emplace(0, n);
}

MotivicClass::MotivicClass(std::initializer_list<std::pair<const long, Integer>> terms)
{
    for (const auto& [k, c] : terms)
        add_term(k, c);
}

MotivicClass MotivicClass::lefschetz(long k) { return monomial(1, k); }

MotivicClass MotivicClass::monomial(const Integer& c, long k)
{
    MotivicClass r;
    r.add_term(k, c);
    return r;
}

bool MotivicClass::is_one() const
{
    return terms_.size() == 1 && terms_.begin()->first == 0 && terms_.begin()->second == 1;
}

Integer MotivicClass::coefficient(long k) const
{
    auto it = terms_.find(k);
    return it == terms_.end() ? Integer(0) : it->second;
}

long MotivicClass::min_degree() const { return terms_.empty() ? 0 : terms_.begin()->first; }
long MotivicClass::max_degree() const { return terms_.empty() ? 0 : terms_.rbegin()->first; }

void MotivicClass::add_term(long k, const Integer& c)
{
    if (c == 0)
        return;
    auto [it, inserted] = terms_.try_emplace(k, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0)
            terms_.erase(it);
    }
}

MotivicClass& MotivicClass::operator+=(const MotivicClass& o)
{
    for (const auto& [k, c] : o.terms_)
        add_term(k, c);
    return *this;
}

MotivicClass& MotivicClass::operator-=(const MotivicClass& o)
{
    for (const auto& [k, c] : o.terms_)
        add_term(k, -c);
    return *this;
}

MotivicClass& MotivicClass::operator*=(const MotivicClass& o)
{
    *this = *this * o;
    return *this;
}

MotivicClass operator*(const MotivicClass& a, const MotivicClass& b)
{
    MotivicClass r;
    for (const auto& [i, ci] : a.terms_)
        for (const auto& [j, cj] : b.terms_)
            r.add_term(i + j, ci * cj);
    return r;
}

MotivicClass operator-(const MotivicClass& a)
{
    MotivicClass r;
    for (const auto& [k, c] : a.terms_)
        r.terms_.emplace(k, -c);
    return r;
}

MotivicClass MotivicClass::shifted(long k) const
{
    MotivicClass r;
    for (const auto& [i, c] : terms_)
        r.terms_.emplace(i + k, c);
    return r;
}

MotivicClass MotivicClass::pow(unsigned long n) const
{
    MotivicClass result(1);
    MotivicClass base = *this;
    while (n > 0) {
        if (n & 1UL)
            result *= base;
        n >>= 1;
        if (n > 0)
            base *= base;
    }
    return result;
}

std::string MotivicClass::to_string() const
{
    if (terms_.empty())
        return "0";
    std::ostringstream os;
    bool first = true;
    // highest power of L first
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [k, c] = *it;
        Integer mag = abs(c);
        if (first) {
            if (c < 0)
                os << "-";
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        first = false;
        if (k == 0) {
            os << mag.get_str();
            continue;
        }
        if (mag != 1)
            os << mag.get_str() << "*";
        os << "L";
        if (k != 1)
            os << "^" << (k < 0 ? "(" + std::to_string(k) + ")" : std::to_string(k));
    }
    return os.str();
}

MotivicClass mc_arith(const MotivicClass& a, const MotivicClass& b, ArithOp op)
{
    switch (op) {
    case ArithOp::add:
        return a + b;
    case ArithOp::sub:
        return a - b;
    case ArithOp::mul:
        return a * b;
    }
    return {};
}

Integer euler_char(const MotivicClass& a)
{
    Integer s = 0;
    for (const auto& [k, c] : a.terms())
        s += c;
    return s;
}

std::ostream& operator<<(std::ostream& os, const MotivicClass& a) { return os << a.to_string(); }

} // namespace motzeta
