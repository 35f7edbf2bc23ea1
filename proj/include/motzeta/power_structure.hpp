#pragma once

#include "motzeta/motivic_series.hpp"

#include <map>

namespace motzeta {

/// The exponents a_k of a factorization A = prod_k (1 - t^k)^{-a_k}, i.e.
/// the preimage of A under Exp. Keys are nonzero exponent vectors of total
/// degree <= order.
class ExpCoefficients {
public:
    using CoeffMap = std::map<ExponentVector, MotivicClass>;

    ExpCoefficients(std::size_t arity, long order);
    /// Reads the coefficients of a series without constant term.
    static ExpCoefficients from_series(const MotivicSeries& s);

    std::size_t arity() const noexcept { return arity_; }
    long order() const noexcept { return order_; }
    const CoeffMap& coeffs() const noexcept { return coeffs_; }

    MotivicClass coefficient(const ExponentVector& e) const;
    void add_term(const ExponentVector& e, const MotivicClass& c);

    ExpCoefficients& operator+=(const ExpCoefficients& o);
    ExpCoefficients& operator*=(const MotivicClass& m);
    friend ExpCoefficients operator+(ExpCoefficients a, const ExpCoefficients& b) { return a += b; }
    friend ExpCoefficients operator*(ExpCoefficients a, const MotivicClass& m) { return a *= m; }

    /// The additive series sum_k a_k t^k.
    MotivicSeries to_series() const;

    friend bool operator==(const ExpCoefficients&, const ExpCoefficients&) = default;

private:
    std::size_t arity_;
    long order_;
    CoeffMap coeffs_;
};

/// (1 - L^j t^a)^{-m}. Writing m = sum_k c_k L^k this is
/// prod_k (1 - L^{j+k} t^a)^{-c_k}, each factor an ordinary integer power.
MotivicSeries pow_one_minus_monomial(long j, const ExponentVector& a, const MotivicClass& m, long order);

/// Exp: sum a_k t^k  ->  prod (1 - t^k)^{-a_k}.
MotivicSeries ps_exp(const ExpCoefficients& b);

/// Inverse of ps_exp. Peels one factor per exponent in ascending graded order.
ExpCoefficients ps_log(const MotivicSeries& a);

/// The power structure A(t)^m.
MotivicSeries ps_pow(const MotivicSeries& a, const MotivicClass& m);

/// Kapranov zeta (1 - t)^{-z}; the t^k coefficient is [S^k Z] when z = [Z].
MotivicSeries kapranov_zeta(const MotivicClass& z, long order);

} // namespace motzeta
