#pragma once

#include "motzeta/motivic_class.hpp"

#include <cstddef>
#include <initializer_list>
#include <iosfwd>
#include <map>
#include <string>
#include <vector>

namespace motzeta {

/// A multi-index in Z_{>=0}^r.
class ExponentVector {
public:
    ExponentVector() = default;
    explicit ExponentVector(std::vector<long> entries);
    ExponentVector(std::initializer_list<long> entries);

    /// The unit vector e_v in r variables, scaled by k.
    static ExponentVector unit(std::size_t arity, std::size_t v, long k = 1);
    static ExponentVector zero(std::size_t arity);

    std::size_t arity() const noexcept { return entries_.size(); }
    long total() const noexcept { return total_; }
    bool is_zero() const noexcept { return total_ == 0; }
    long operator[](std::size_t i) const { return entries_[i]; }
    const std::vector<long>& entries() const noexcept { return entries_; }

    ExponentVector operator+(const ExponentVector& o) const;
    ExponentVector scaled(long k) const;

    // Graded order: by total degree first, then lexicographically.
    friend std::strong_ordering operator<=>(const ExponentVector& a, const ExponentVector& b);
    friend bool operator==(const ExponentVector& a, const ExponentVector& b)
    {
        return a.entries_ == b.entries_;
    }

private:
    std::vector<long> entries_;
    long total_ = 0;
};

/// Truncated power series in r >= 1 variables with MotivicClass coefficients.
/// Terms of total degree > order are discarded by every operation.
class MotivicSeries {
public:
    using CoeffMap = std::map<ExponentVector, MotivicClass>;

    MotivicSeries(std::size_t arity, long order);

    static MotivicSeries one(std::size_t arity, long order);
    static MotivicSeries constant(std::size_t arity, long order, const MotivicClass& c);
    /// Univariate series from coefficients of t^0, t^1, ...
    static MotivicSeries univariate(long order, const std::vector<MotivicClass>& coeffs);

    std::size_t arity() const noexcept { return arity_; }
    long order() const noexcept { return order_; }
    const CoeffMap& coeffs() const noexcept { return coeffs_; }
    bool is_zero() const noexcept { return coeffs_.empty(); }

    MotivicClass coefficient(const ExponentVector& e) const;
    /// Univariate convenience accessor.
    MotivicClass coefficient(long k) const;
    MotivicClass constant_term() const;

    /// Adds c * t^e (ignored when e exceeds the order).
    void add_term(const ExponentVector& e, const MotivicClass& c);

    /// Same series cut down to a smaller order.
    MotivicSeries truncated(long order) const;

    MotivicSeries& operator+=(const MotivicSeries& o);
    MotivicSeries& operator-=(const MotivicSeries& o);
    MotivicSeries& operator*=(const MotivicSeries& o);
    MotivicSeries& operator*=(const MotivicClass& c);

    friend MotivicSeries operator+(MotivicSeries a, const MotivicSeries& b) { return a += b; }
    friend MotivicSeries operator-(MotivicSeries a, const MotivicSeries& b) { return a -= b; }
    friend MotivicSeries operator*(const MotivicSeries& a, const MotivicSeries& b);
    friend MotivicSeries operator*(MotivicSeries a, const MotivicClass& c) { return a *= c; }
    friend MotivicSeries operator*(const MotivicClass& c, MotivicSeries a) { return a *= c; }

    /// Integer power; negative exponents go through series_invert.
    MotivicSeries pow(long n) const;

    friend bool operator==(const MotivicSeries&, const MotivicSeries&) = default;

    std::string to_string() const;

private:
    void check_compatible(const MotivicSeries& o) const;

    std::size_t arity_;
    long order_;
    CoeffMap coeffs_;
};

std::ostream& operator<<(std::ostream& os, const MotivicSeries& s);

MotivicSeries series_arith(const MotivicSeries& a, const MotivicSeries& b, ArithOp op);

/// Multiplicative inverse up to the order of `a`; the constant term must be 1.
MotivicSeries series_invert(const MotivicSeries& a);

/// t_v -> t_v^k.
MotivicSeries substitute_power(const MotivicSeries& a, std::size_t v, long k);

/// t_v -> L^j t_v.
MotivicSeries scale_variable(const MotivicSeries& a, std::size_t v, long j);

/// t_v -> L^j, removing variable v. Only meaningful when the caller's order
/// leaves enough room in t_v for the coefficients it later reads.
MotivicSeries specialize_variable(const MotivicSeries& a, std::size_t v, long j);

/// c t^a / (1 - c t^a) = sum_{k>=1} c^k t^{ka}, truncated at `order`.
/// c must be a monomial class L^j (coefficient 1).
MotivicSeries expand_geometric_factor(const MotivicClass& c, const ExponentVector& a, long order);

} // namespace motzeta
