#pragma once

#include "motzeta/resolution.hpp"
#include "motzeta/upoly.hpp"
#include "motzeta/zeta_engine.hpp"

#include <string>
#include <vector>

namespace motzeta {

/// Quotient of polynomials in s over Q, kept with gcd(num, den) = 1 and a
/// monic denominator.
class RationalFunctionS {
public:
    RationalFunctionS() : num_(), den_(UPoly::constant(1)) {}
    RationalFunctionS(const UPoly& num, const UPoly& den);
    RationalFunctionS(const Rational& c) : RationalFunctionS(UPoly::constant(c), UPoly::constant(1)) {}

    const UPoly& numerator() const noexcept { return num_; }
    const UPoly& denominator() const noexcept { return den_; }

    /// value = scale * P / Q with P, Q primitive integer polynomials and the
    /// leading coefficient of Q positive.
    struct IntegerForm {
        Rational scale;
        std::vector<Integer> numerator;   // ascending degree
        std::vector<Integer> denominator; // ascending degree
    };
    IntegerForm integer_form() const;

    Rational operator()(const Rational& s) const;

    RationalFunctionS& operator+=(const RationalFunctionS& o);
    RationalFunctionS& operator*=(const RationalFunctionS& o);
    friend RationalFunctionS operator+(RationalFunctionS a, const RationalFunctionS& b) { return a += b; }
    friend RationalFunctionS operator*(RationalFunctionS a, const RationalFunctionS& b) { return a *= b; }
    friend bool operator==(const RationalFunctionS&, const RationalFunctionS&) = default;

    /// Expanded numerator over the denominator's linear factors, e.g.
    /// "(8s^2+24s+14)/((10s+7)(4s+3)(s+1))".
    std::string to_string() const;

private:
    void canonicalize();
    UPoly num_;
    UPoly den_;
};

struct Pole {
    Rational q;
    long order = 1;
    friend bool operator==(const Pole&, const Pole&) = default;
};

/// Z_top,0 = sum over strata of chi(E_I°) prod 1/(N_i s + nu_i).
RationalFunctionS z_top(const ResolutionData& res);
/// The branch variant with weights nu_i + M_i (or nu_i - M_i under the
/// alternative convention).
RationalFunctionS z_branch(const ResolutionData& res, const ZetaOptions& opts = {});

/// Poles with orders, ascending. Throws DomainError if the denominator has an
/// irreducible factor of degree > 1.
std::vector<Pole> poles(const RationalFunctionS& rf);

/// exp(-2 pi i q) is a monodromy eigenvalue at some point of f^{-1}(0):
/// either it is 1 (smooth points), or a primitive d-th root of unity with
/// d = den(q) that is a zero or pole of zeta_f.
bool eigenvalue_test(const CyclotomicFactorization& zf, const Rational& q);

struct PoleReport {
    struct Entry {
        Pole pole;
        long root_order = 1; ///< order of exp(-2 pi i q) as a root of unity
        bool eigenvalue = false;
    };
    std::vector<Entry> entries;
    bool holds = true;
    std::string convention;

    /// "holds" or "FAILS at s=-3/4" (all failing poles, comma separated).
    std::string verdict() const;
};

PoleReport mc_check(const RationalFunctionS& rf, const CyclotomicFactorization& zf);

} // namespace motzeta
