#include "motzeta/bipoly.hpp"

#include "motzeta/errors.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace motzeta {

BiPoly::BiPoly(const Rational& c) { add_term({0, 0}, c); }

BiPoly BiPoly::x() { return monomial(1, 1, 0); }
BiPoly BiPoly::y() { return monomial(1, 0, 1); }

BiPoly BiPoly::monomial(const Rational& c, long i, long j)
{
    BiPoly p;
    p.add_term({i, j}, c);
    return p;
}

void BiPoly::add_term(const Monomial& m, const Rational& c)
{
    if (c == 0)
        return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0)
            terms_.erase(it);
    }
}

Rational BiPoly::coefficient(long i, long j) const
{
    auto it = terms_.find({i, j});
    return it == terms_.end() ? Rational(0) : it->second;
}

long BiPoly::total_degree() const
{
    long d = -1;
    for (const auto& [m, c] : terms_)
        d = std::max(d, m.first + m.second);
    return d;
}

long BiPoly::degree_x() const
{
    long d = -1;
    for (const auto& [m, c] : terms_)
        d = std::max(d, m.first);
    return d;
}

long BiPoly::degree_y() const
{
    long d = -1;
    for (const auto& [m, c] : terms_)
        d = std::max(d, m.second);
    return d;
}

long BiPoly::multiplicity() const
{
    if (terms_.empty())
        return -1;
    long d = terms_.begin()->first.first + terms_.begin()->first.second;
    for (const auto& [m, c] : terms_)
        d = std::min(d, m.first + m.second);
    return d;
}

BiPoly BiPoly::homogeneous_part(long k) const
{
    BiPoly p;
    for (const auto& [m, c] : terms_)
        if (m.first + m.second == k)
            p.terms_.emplace(m, c);
    return p;
}

BiPoly& BiPoly::operator+=(const BiPoly& o)
{
    for (const auto& [m, c] : o.terms_)
        add_term(m, c);
    return *this;
}

BiPoly& BiPoly::operator-=(const BiPoly& o)
{
    for (const auto& [m, c] : o.terms_)
        add_term(m, -c);
    return *this;
}

BiPoly operator*(const BiPoly& a, const BiPoly& b)
{
    BiPoly r;
    for (const auto& [ma, ca] : a.terms_)
        for (const auto& [mb, cb] : b.terms_)
            r.add_term({ma.first + mb.first, ma.second + mb.second}, ca * cb);
    return r;
}

BiPoly& BiPoly::operator*=(const BiPoly& o)
{
    *this = *this * o;
    return *this;
}

BiPoly operator-(const BiPoly& a)
{
    BiPoly r;
    for (const auto& [m, c] : a.terms_)
        r.terms_.emplace(m, -c);
    return r;
}

BiPoly BiPoly::pow(unsigned long n) const
{
    BiPoly result(1);
    for (unsigned long i = 0; i < n; ++i)
        result *= *this;
    return result;
}

BiPoly BiPoly::derivative_x() const
{
    BiPoly r;
    for (const auto& [m, c] : terms_)
        if (m.first > 0)
            r.add_term({m.first - 1, m.second}, c * m.first);
    return r;
}

BiPoly BiPoly::derivative_y() const
{
    BiPoly r;
    for (const auto& [m, c] : terms_)
        if (m.second > 0)
            r.add_term({m.first, m.second - 1}, c * m.second);
    return r;
}

BiPoly BiPoly::blowup_x_chart(const Rational& c, long m) const
{
    BiPoly r;
    for (const auto& [mono, coeff] : terms_) {
        const auto [i, j] = mono;
        long xpow = i + j - m;
        if (xpow < 0)
            throw DomainError("blowup: exceptional power exceeds the multiplicity");
        // x^i (x (y + c))^j = x^{i+j} sum_l C(j, l) c^{j-l} y^l
        Rational cpow = 1;
        std::vector<Rational> cpows(static_cast<std::size_t>(j + 1));
        for (long l = 0; l <= j; ++l) {
            cpows[static_cast<std::size_t>(l)] = cpow;
            cpow *= c;
        }
        for (long l = 0; l <= j; ++l) {
            Rational t = coeff * Rational(binomial(j, static_cast<unsigned long>(l))) *
                         cpows[static_cast<std::size_t>(j - l)];
            r.add_term({xpow, l}, t);
        }
    }
    return r;
}

BiPoly BiPoly::blowup_y_chart(long m) const
{
    BiPoly r;
    for (const auto& [mono, coeff] : terms_) {
        const auto [i, j] = mono;
        long ypow = i + j - m;
        if (ypow < 0)
            throw DomainError("blowup: exceptional power exceeds the multiplicity");
        r.add_term({i, ypow}, coeff);
    }
    return r;
}

UPoly BiPoly::restrict_y(const Rational& y0) const
{
    std::vector<Rational> coeffs(static_cast<std::size_t>(std::max(degree_x(), 0L) + 1), Rational(0));
    for (const auto& [m, c] : terms_) {
        Rational v = c;
        for (long k = 0; k < m.second; ++k)
            v *= y0;
        coeffs[static_cast<std::size_t>(m.first)] += v;
    }
    return UPoly(std::move(coeffs));
}

UPoly BiPoly::coefficient_of_x(long i) const
{
    std::vector<Rational> coeffs(static_cast<std::size_t>(std::max(degree_y(), 0L) + 1), Rational(0));
    for (const auto& [m, c] : terms_)
        if (m.first == i)
            coeffs[static_cast<std::size_t>(m.second)] += c;
    return UPoly(std::move(coeffs));
}

std::string BiPoly::to_string() const
{
    if (terms_.empty())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        Rational mag = abs(c);
        if (first) {
            if (c < 0)
                os << "-";
        } else {
            os << (c < 0 ? "-" : "+");
        }
        first = false;
        bool constant = m.first == 0 && m.second == 0;
        if (constant || mag != 1) {
            os << motzeta::to_string(mag);
            if (!constant)
                os << "*";
        }
        if (m.first > 0)
            os << "x" << (m.first > 1 ? "^" + std::to_string(m.first) : "");
        if (m.first > 0 && m.second > 0)
            os << "*";
        if (m.second > 0)
            os << "y" << (m.second > 1 ? "^" + std::to_string(m.second) : "");
    }
    return os.str();
}

namespace {

class Parser {
public:
    explicit Parser(std::string_view text) : text_(text) {}

    BiPoly parse()
    {
        BiPoly p = expr();
        skip_space();
        if (pos_ != text_.size())
            fail("unexpected character '" + std::string(1, text_[pos_]) + "'");
        return p;
    }

private:
    [[noreturn]] void fail(const std::string& what) const
    {
        throw ParseError("polynomial parse error at position " + std::to_string(pos_) + ": " + what);
    }

    void skip_space()
    {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
    }

    bool accept(char ch)
    {
        skip_space();
        if (pos_ < text_.size() && text_[pos_] == ch) {
            ++pos_;
            return true;
        }
        return false;
    }

    BiPoly expr()
    {
        BiPoly acc = term();
        while (true) {
            if (accept('+'))
                acc += term();
            else if (accept('-'))
                acc -= term();
            else
                return acc;
        }
    }

    BiPoly term()
    {
        BiPoly acc = unary();
        while (accept('*'))
            acc *= unary();
        return acc;
    }

    BiPoly unary()
    {
        if (accept('-'))
            return -unary();
        if (accept('+'))
            return unary();
        return power();
    }

    BiPoly power()
    {
        BiPoly base = primary();
        if (accept('^')) {
            Integer e = integer_literal();
            if (e > 4096)
                fail("exponent too large");
            return base.pow(e.get_ui());
        }
        return base;
    }

    Integer integer_literal()
    {
        skip_space();
        std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
        if (start == pos_)
            fail("expected an integer");
        return Integer(std::string(text_.substr(start, pos_ - start)));
    }

    BiPoly primary()
    {
        skip_space();
        if (pos_ >= text_.size())
            fail("unexpected end of input");
        char ch = text_[pos_];
        if (ch == '(') {
            ++pos_;
            BiPoly inner = expr();
            if (!accept(')'))
                fail("expected ')'");
            return inner;
        }
        if (ch == 'x' || ch == 'y') {
            ++pos_;
            return ch == 'x' ? BiPoly::x() : BiPoly::y();
        }
        if (std::isdigit(static_cast<unsigned char>(ch))) {
            Rational value(integer_literal());
            if (accept('/')) {
                Integer den = integer_literal();
                if (den == 0)
                    fail("zero denominator");
                value /= Rational(den);
            }
            return BiPoly(value);
        }
        fail("unexpected character '" + std::string(1, ch) + "'");
    }

    std::string_view text_;
    std::size_t pos_ = 0;
};

bool univariate_squarefree(const UPoly& p)
{
    if (p.degree() <= 0)
        return true;
    return gcd(p, p.derivative()).degree() == 0;
}

} // namespace

BiPoly parse_bipoly(std::string_view text) { return Parser(text).parse(); }

bool is_squarefree(const BiPoly& f)
{
    if (f.is_zero())
        return false;
    // Factors free of x live in the content with respect to x.
    UPoly content;
    for (long i = 0; i <= f.degree_x(); ++i)
        content = gcd(content, f.coefficient_of_x(i));
    if (!univariate_squarefree(content))
        return false;
    if (f.degree_x() <= 0)
        return true;

    // A repeated factor involving x makes gcd(f, f_x) nontrivial at every
    // specialization y = y0. Otherwise the discriminant is a nonzero
    // polynomial in y of degree <= 2d^2, so among 2d^2 + d + 1 sample points
    // some avoids both its roots and those of the leading coefficient.
    const UPoly lead = f.coefficient_of_x(f.degree_x());
    const long d = f.total_degree();
    const long samples = 2 * d * d + d + 1;
    const BiPoly fx = f.derivative_x();
    long tried = 0;
    for (long k = 0; tried < samples; ++k) {
        Rational y0 = (k % 2 == 0) ? Rational(k / 2) : Rational(-(k / 2) - 1);
        if (lead(y0) == 0)
            continue;
        ++tried;
        UPoly p = f.restrict_y(y0);
        if (gcd(p, fx.restrict_y(y0)).degree() == 0)
            return true;
    }
    return false;
}

} // namespace motzeta
