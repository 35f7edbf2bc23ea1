#pragma once

#include "motzeta/integer.hpp"
#include "motzeta/upoly.hpp"

#include <map>
#include <string>
#include <string_view>
#include <utility>

namespace motzeta {

/// Sparse polynomial in x, y over Q. Monomials are keyed by (deg_x, deg_y).
class BiPoly {
public:
    using Monomial = std::pair<long, long>;
    using TermMap = std::map<Monomial, Rational>;

    BiPoly() = default;
    BiPoly(const Rational& c);

    static BiPoly x();
    static BiPoly y();
    static BiPoly monomial(const Rational& c, long i, long j);

    const TermMap& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    Rational coefficient(long i, long j) const;
    long total_degree() const;
    long degree_x() const;
    long degree_y() const;

    /// Order of vanishing at the origin (least total degree of a term);
    /// 0 when the constant term is nonzero, -1 for the zero polynomial.
    long multiplicity() const;
    /// Homogeneous part of total degree k.
    BiPoly homogeneous_part(long k) const;

    BiPoly& operator+=(const BiPoly& o);
    BiPoly& operator-=(const BiPoly& o);
    BiPoly& operator*=(const BiPoly& o);
    friend BiPoly operator+(BiPoly a, const BiPoly& b) { return a += b; }
    friend BiPoly operator-(BiPoly a, const BiPoly& b) { return a -= b; }
    friend BiPoly operator*(const BiPoly& a, const BiPoly& b);
    friend BiPoly operator-(const BiPoly& a);
    friend bool operator==(const BiPoly&, const BiPoly&) = default;

    BiPoly pow(unsigned long n) const;
    BiPoly derivative_x() const;
    BiPoly derivative_y() const;

    /// g(x, y) -> g(x, x*(y + c)), then divided by x^m.
    BiPoly blowup_x_chart(const Rational& c, long m) const;
    /// g(x, y) -> g(x*y, y), then divided by y^m.
    BiPoly blowup_y_chart(long m) const;

    /// g(x, y0) as a polynomial in x.
    UPoly restrict_y(const Rational& y0) const;
    /// Coefficient of x^i as a polynomial in y.
    UPoly coefficient_of_x(long i) const;

    std::string to_string() const;

private:
    void add_term(const Monomial& m, const Rational& c);
    TermMap terms_;
};

/// Parses integer/rational coefficients, + - * ^, parentheses and the
/// variables x and y, e.g. "(x^2+y^3)*(y^2+x^3)" or "3/2*x - y".
BiPoly parse_bipoly(std::string_view text);

/// True iff the polynomial has no repeated nonconstant factor over Q.
bool is_squarefree(const BiPoly& f);

} // namespace motzeta
