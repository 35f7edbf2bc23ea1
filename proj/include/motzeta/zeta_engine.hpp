#pragma once

#include "motzeta/motivic_series.hpp"
#include "motzeta/resolution.hpp"

#include <map>
#include <string>

namespace motzeta {

enum class SpaceKind { arcs, arcs_mod_cstar, branches };

/// Weight used for a component in the branch formulas: nu + M as printed in
/// the branch integral, or nu - M as suggested by substituting T -> L in the
/// arcs-with-order identity.
enum class BranchWeight { nu_plus_M, nu_minus_M };

struct ZetaOptions {
    BranchWeight branch_weight = BranchWeight::nu_plus_M;
};

std::string to_string(SpaceKind s);
SpaceKind parse_space(const std::string& text);
std::string to_string(BranchWeight w);
BranchWeight parse_branch_weight(const std::string& text);

/// prod_m (1 - t^m)^{e_m}, stored with no zero exponents.
class CyclotomicFactorization {
public:
    using FactorMap = std::map<long, long>;

    CyclotomicFactorization() = default;
    explicit CyclotomicFactorization(const FactorMap& factors);

    const FactorMap& factors() const noexcept { return factors_; }
    long exponent(long m) const;
    void multiply(long m, long e);

    /// Taylor expansion with integer coefficients (as constant classes).
    MotivicSeries taylor(long order) const;
    std::string to_string() const;

    friend bool operator==(const CyclotomicFactorization&, const CyclotomicFactorization&) = default;

private:
    FactorMap factors_;
};

/// Generating series sum_n chi_g(X_n) t^n of the measure of the set of
/// arcs (or arcs mod C*, or branches) along which f has order n.
MotivicSeries contact_series(const ResolutionData& res, SpaceKind space, long order, const ZetaOptions& opts = {});

/// Arcs series refined by the order of the arc: variables (t, T), each
/// component contributing the monomial L^{-nu} t^N T^M.
MotivicSeries two_variable_contact_series(const ResolutionData& res, long order);

long mobius(long n);

/// eta_S = Exp(contact series).
MotivicSeries eta(const ResolutionData& res, SpaceKind space, long order, const ZetaOptions& opts = {});

/// prod_i eta_S(t^i)^{mu(i)}; space must be arcs_mod_cstar or branches.
/// Built through the divisor-sum exponents and, independently, as Exp of the
/// Moebius-combined contact series; the two must agree.
MotivicSeries motivic_monodromy_zeta(const ResolutionData& res, SpaceKind space, long order,
                                     const ZetaOptions& opts = {});

/// The same series evaluated as the double product over m, strata and
/// multi-indices k, every factor raised with ps_pow.
MotivicSeries theorem1_expansion(const ResolutionData& res, SpaceKind space, long order,
                                 const ZetaOptions& opts = {});

/// A'Campo: zeta_f = prod over exceptional E_i of (1 - t^{N_i})^{-chi(E_i°)}.
CyclotomicFactorization acampo_zeta(const ResolutionData& res);

/// Coefficientwise Euler characteristic; the result has constant classes.
MotivicSeries euler_specialize_series(const MotivicSeries& a);

} // namespace motzeta
