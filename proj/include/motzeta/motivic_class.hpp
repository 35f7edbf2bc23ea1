#pragma once

#include "motzeta/integer.hpp"

#include <compare>
#include <initializer_list>
#include <iosfwd>
#include <map>
#include <string>
#include <utility>

namespace motzeta {

/// An element of Z[L, 1/L], the part of the localized Grothendieck ring of
/// complex varieties that the zeta formulas live in. L is the class of the
/// affine line.
///
/// Terms are stored sparsely as exponent -> coefficient; zero coefficients
/// are never stored, so structural equality is ring equality.
class MotivicClass {
public:
    using TermMap = std::map<long, Integer>;

    MotivicClass() = default;
    MotivicClass(long n) : MotivicClass(Integer(n)) {}
    MotivicClass(const Integer& n);
    MotivicClass(std::initializer_list<std::pair<const long, Integer>> terms);

    /// L^k
    static MotivicClass lefschetz(long k = 1);
    /// c * L^k
    static MotivicClass monomial(const Integer& c, long k);

    const TermMap& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    bool is_one() const;
    /// True when the class is c * L^k for a single (c, k).
    bool is_monomial() const noexcept { return terms_.size() == 1; }
    Integer coefficient(long k) const;
    long min_degree() const;
    long max_degree() const;

    MotivicClass& operator+=(const MotivicClass& o);
    MotivicClass& operator-=(const MotivicClass& o);
    MotivicClass& operator*=(const MotivicClass& o);
    /// Multiply by L^k.
    MotivicClass shifted(long k) const;
    MotivicClass pow(unsigned long n) const;

    friend MotivicClass operator+(MotivicClass a, const MotivicClass& b) { return a += b; }
    friend MotivicClass operator-(MotivicClass a, const MotivicClass& b) { return a -= b; }
    friend MotivicClass operator*(const MotivicClass& a, const MotivicClass& b);
    friend MotivicClass operator-(const MotivicClass& a);

    friend bool operator==(const MotivicClass&, const MotivicClass&) = default;

    std::string to_string() const;

private:
    void add_term(long k, const Integer& c);

    TermMap terms_;
};

enum class ArithOp { add, sub, mul };

MotivicClass mc_arith(const MotivicClass& a, const MotivicClass& b, ArithOp op);

/// The Euler characteristic morphism, i.e. evaluation at L = 1.
Integer euler_char(const MotivicClass& a);

std::ostream& operator<<(std::ostream& os, const MotivicClass& a);

} // namespace motzeta
