#pragma once

#include "motzeta/integer.hpp"

#include <string>
#include <utility>
#include <vector>

namespace motzeta {

/// Dense univariate polynomial over Q, coefficients in ascending degree.
class UPoly {
public:
    UPoly() = default;
    explicit UPoly(std::vector<Rational> coeffs);
    UPoly(std::initializer_list<Rational> coeffs) : UPoly(std::vector<Rational>(coeffs)) {}

    static UPoly constant(const Rational& c) { return UPoly({c}); }
    /// a*s + b
    static UPoly linear(const Rational& a, const Rational& b) { return UPoly({b, a}); }

    bool is_zero() const noexcept { return coeffs_.empty(); }
    /// Degree; -1 for the zero polynomial.
    long degree() const noexcept { return static_cast<long>(coeffs_.size()) - 1; }
    const std::vector<Rational>& coeffs() const noexcept { return coeffs_; }
    Rational coefficient(long k) const;
    Rational leading() const;

    Rational operator()(const Rational& s) const;

    UPoly& operator+=(const UPoly& o);
    UPoly& operator-=(const UPoly& o);
    UPoly& operator*=(const UPoly& o);
    UPoly& operator*=(const Rational& c);
    friend UPoly operator+(UPoly a, const UPoly& b) { return a += b; }
    friend UPoly operator-(UPoly a, const UPoly& b) { return a -= b; }
    friend UPoly operator*(UPoly a, const UPoly& b) { return a *= b; }
    friend UPoly operator*(UPoly a, const Rational& c) { return a *= c; }
    friend bool operator==(const UPoly&, const UPoly&) = default;

    UPoly derivative() const;
    UPoly monic() const;

    /// Splits this = content * primitive, with primitive having coprime
    /// integer coefficients and a positive leading coefficient.
    std::pair<Rational, std::vector<Integer>> primitive_part() const;

    std::string to_string(const std::string& var = "s") const;

private:
    void trim();
    std::vector<Rational> coeffs_;
};

/// Euclidean division; throws on division by zero.
std::pair<UPoly, UPoly> divmod(const UPoly& a, const UPoly& b);

/// Monic gcd (zero if both inputs are zero).
UPoly gcd(const UPoly& a, const UPoly& b);

struct RationalRoots {
    /// Distinct rational roots in ascending order, with multiplicities.
    std::vector<std::pair<Rational, long>> roots;
    /// What is left after dividing out all (s - root)^multiplicity.
    UPoly cofactor;
};

/// Exact rational root finding by the rational root theorem.
RationalRoots rational_roots(const UPoly& p);

} // namespace motzeta
