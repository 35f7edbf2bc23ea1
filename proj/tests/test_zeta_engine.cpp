#include "motzeta/curve_resolver.hpp"
#include "motzeta/errors.hpp"
#include "motzeta/power_structure.hpp"
#include "motzeta/zeta_engine.hpp"

#include "oracles.hpp"

#include <doctest.h>

using namespace motzeta;
using oracle::c;
using oracle::L;

namespace {

const ResolutionData& cusp()
{
    static const ResolutionData r = resolve_germ("x^2+y^3").data;
    return r;
}

const ResolutionData& smooth()
{
    static const ResolutionData r = resolve_germ("x").data;
    return r;
}

const ResolutionData& two_cusps()
{
    static const ResolutionData r = resolve_germ("(x^2+y^3)*(y^2+x^3)").data;
    return r;
}

ResolutionData single_component()
{
    ResolutionData r;
    r.components = {{"E1", ComponentKind::exceptional, 1, 1, 1}};
    r.strata = {{{"E1"}, c(1)}};
    return r;
}

} // namespace

TEST_CASE("contact series of the cusp, arcs mod C*")
{
    auto x = contact_series(cusp(), SpaceKind::arcs_mod_cstar, 6);
    CHECK(x.coefficient(1).is_zero());
    CHECK(x.coefficient(2) == L(-1));
    CHECK(x.coefficient(3) == L(-2));
    CHECK(x.coefficient(6) == L(-4));
    CHECK(euler_specialize_series(x) == MotivicSeries::univariate(6, {0, 0, 1, 1, 1, 0, 1}));
}

TEST_CASE("contact series of a smooth germ matches the jet-count oracle")
{
    auto x = contact_series(smooth(), SpaceKind::arcs, 6);
    for (long n = 1; n <= 6; ++n)
        CHECK(x.coefficient(n) == oracle::monomial_jet_measure(1, 0, n));
}

TEST_CASE("contact series of the node matches the jet-count oracle")
{
    auto x = contact_series(resolve_germ("x*y").data, SpaceKind::arcs, 5);
    for (long n = 1; n <= 5; ++n)
        CHECK(x.coefficient(n) == oracle::monomial_jet_measure(1, 1, n));
}

TEST_CASE("arcs series is (L-1) times arcs mod C*")
{
    for (const auto* r : {&cusp(), &smooth(), &two_cusps()})
        CHECK(contact_series(*r, SpaceKind::arcs, 10) ==
              contact_series(*r, SpaceKind::arcs_mod_cstar, 10) * (L() - c(1)));
}

TEST_CASE("branch series needs M")
{
    ResolutionData r = cusp();
    r.components[1].M.reset();
    CHECK_THROWS_WITH_AS(contact_series(r, SpaceKind::branches, 4), doctest::Contains("\"M\""), DomainError);
    CHECK_NOTHROW(contact_series(r, SpaceKind::arcs, 4));
}

TEST_CASE("two-variable contact series")
{
    auto two = two_variable_contact_series(smooth(), 6);
    // (L-1) [E1°] L^{-nu} = (L-1) L L^{-2}
    CHECK(two.coefficient({1, 1}) == (L() - c(1)) * L(-1));

    for (const auto* r : {&cusp(), &smooth(), &two_cusps()}) {
        const long order = 8;
        auto series = two_variable_contact_series(*r, 2 * order);
        // M <= N, so total degree 2*order covers every t^n, n <= order
        CHECK(specialize_variable(series, 1, -1).truncated(order) ==
              contact_series(*r, SpaceKind::branches, order) * (L() - c(1)));
        CHECK(specialize_variable(series, 1, 0).truncated(order) == contact_series(*r, SpaceKind::arcs, order));

        ZetaOptions minus{BranchWeight::nu_minus_M};
        CHECK(specialize_variable(series, 1, 1).truncated(order) ==
              contact_series(*r, SpaceKind::branches, order, minus) * (L() - c(1)));
    }
}

TEST_CASE("mobius values")
{
    CHECK(mobius(1) == 1);
    CHECK(mobius(4) == 0);
    CHECK(mobius(6) == 1);
    CHECK(mobius(30) == -1);
    CHECK(mobius(7) == -1);
    CHECK(mobius(12) == 0);
    CHECK_THROWS_AS(mobius(0), UsageError);
}

TEST_CASE("eta")
{
    ResolutionData empty;
    empty.components = {{"E1", ComponentKind::exceptional, 1, 1, 1}};
    CHECK(eta(empty, SpaceKind::arcs_mod_cstar, 6) == MotivicSeries::one(1, 6));

    auto e = eta(cusp(), SpaceKind::arcs_mod_cstar, 8);
    CHECK(e.coefficient(0) == c(1));
    CHECK(e.coefficient(1).is_zero());
    CHECK(e.coefficient(2) == L(-1));

    for (const auto* r : {&cusp(), &smooth(), &two_cusps()})
        CHECK(euler_specialize_series(eta(*r, SpaceKind::arcs, 8)) == MotivicSeries::one(1, 8));
}

TEST_CASE("motivic monodromy zeta")
{
    auto z = motivic_monodromy_zeta(cusp(), SpaceKind::arcs_mod_cstar, 8);
    CHECK(z.coefficient(2) == L(-1));
    CHECK(z.coefficient(3) == L(-2));
    CHECK(euler_specialize_series(z) == acampo_zeta(cusp()).taylor(8));
    CHECK_THROWS_AS(motivic_monodromy_zeta(cusp(), SpaceKind::arcs, 8), DomainError);

    ResolutionData empty;
    empty.components = {{"E1", ComponentKind::exceptional, 1, 1, 1}};
    CHECK(motivic_monodromy_zeta(empty, SpaceKind::branches, 6) == MotivicSeries::one(1, 6));
}

TEST_CASE("product formula")
{
    CHECK(theorem1_expansion(cusp(), SpaceKind::arcs_mod_cstar, 1) == MotivicSeries::one(1, 1));

    // hand expansion for a single E (N = 1, nu = 1, [E°] = 1), D = 2:
    // m=1: (1 - L^-1 t)^{-1} (1 - L^-2 t^2)^{-1}; m=2: (1 - L^-1 t^2)^{+1}
    auto hand = MotivicSeries::univariate(2, {1, L(-1), L(-2) + L(-2) - L(-1)});
    CHECK(theorem1_expansion(single_component(), SpaceKind::arcs_mod_cstar, 2) == hand);
    CHECK(motivic_monodromy_zeta(single_component(), SpaceKind::arcs_mod_cstar, 2) == hand);

    for (auto space : {SpaceKind::arcs_mod_cstar, SpaceKind::branches})
        CHECK(theorem1_expansion(cusp(), space, 8) == motivic_monodromy_zeta(cusp(), space, 8));
}

TEST_CASE("A'Campo zeta")
{
    CHECK(acampo_zeta(cusp()) == CyclotomicFactorization({{2, -1}, {3, -1}, {6, 1}}));
    CHECK(acampo_zeta(two_cusps()) == CyclotomicFactorization({{5, -2}, {10, 2}}));
    CHECK(acampo_zeta(resolve_germ("x*y").data).factors().empty());
    // (1 - t + t^2) * (1 + t + t^2 + ...) = 1 + t^2 + t^3 + ...
    CHECK(acampo_zeta(cusp()).taylor(5) == MotivicSeries::univariate(5, {1, 0, 1, 1, 1, 1}));
}

TEST_CASE("euler_specialize_series examples")
{
    CHECK(euler_specialize_series(MotivicSeries::univariate(3, {1, L(), L(2), L(3)})) ==
          MotivicSeries::univariate(3, {1, 1, 1, 1}));
    CHECK(euler_specialize_series(MotivicSeries::univariate(3, {L(), L(2) + c(4)}) * (L() - c(1))).is_zero());
}

TEST_CASE("branch weight convention changes branch series only")
{
    ZetaOptions minus{BranchWeight::nu_minus_M};
    CHECK(contact_series(cusp(), SpaceKind::arcs_mod_cstar, 8, minus) ==
          contact_series(cusp(), SpaceKind::arcs_mod_cstar, 8));
    CHECK_FALSE(contact_series(cusp(), SpaceKind::branches, 8, minus) ==
                contact_series(cusp(), SpaceKind::branches, 8));
    // f = x: the t^1 branch coefficient is L^{-2} as printed and 1 under nu - M
    CHECK(contact_series(smooth(), SpaceKind::branches, 3).coefficient(1) == L(-2));
    CHECK(contact_series(smooth(), SpaceKind::branches, 3, minus).coefficient(1) == c(1));
}
