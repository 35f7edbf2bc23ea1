#include "motzeta/curve_resolver.hpp"
#include "motzeta/errors.hpp"
#include "motzeta/topological_zeta.hpp"

#include "oracles.hpp"

#include <doctest.h>

using namespace motzeta;

namespace {

RationalFunctionS ratio(const UPoly& num, const UPoly& den) { return RationalFunctionS(num, den); }
UPoly lin(long a, long b) { return UPoly::linear(a, b); }

const ResolutionData& germ(const char* poly)
{
    static std::map<std::string, ResolutionData> cache;
    auto it = cache.find(poly);
    if (it == cache.end())
        it = cache.emplace(poly, resolve_germ(poly).data).first;
    return it->second;
}

} // namespace

TEST_CASE("z_top examples")
{
    CHECK(z_top(germ("x^2+y^3")) == ratio(lin(4, 5), lin(1, 1) * lin(6, 5)));
    CHECK(z_top(germ("x")) == ratio(UPoly::constant(1), lin(1, 1)));
    CHECK(z_top(germ("x*y")) == ratio(UPoly::constant(1), lin(1, 1) * lin(1, 1)));
}

TEST_CASE("z_branch examples")
{
    const auto& g = germ("(x^2+y^3)*(y^2+x^3)");
    auto zb = z_branch(g);
    CHECK(zb == ratio(UPoly{14, 24, 8}, lin(10, 7) * lin(4, 3) * lin(1, 1)));
    CHECK(zb(0) == Rational(2, 3));
    CHECK(zb.to_string() == "(8s^2+24s+14)/((10s+7)(4s+3)(s+1))");
    CHECK(z_branch(germ("x")) == ratio(lin(1, 2), lin(1, 3) * lin(1, 1)));

    ResolutionData no_m = germ("x");
    no_m.components[0].M.reset();
    CHECK_THROWS_AS(z_branch(no_m), DomainError);
}

TEST_CASE("canonicalization keeps gcd 1 and evaluates like the raw stratum sum")
{
    std::mt19937 rng(7);
    std::uniform_int_distribution<long> num(-40, 40), den(1, 17);
    for (const char* poly : {"x^2+y^3", "(x^2+y^3)*(y^2+x^3)", "x*y", "x^3+y^5", "y*(y-x^2)"}) {
        const auto& r = germ(poly);
        auto top = z_top(r);
        auto branch = z_branch(r);
        CHECK(gcd(top.numerator(), top.denominator()).degree() == 0);
        for (int i = 0; i < 20; ++i) {
            Rational s(num(rng), den(rng));
            s.canonicalize();
            bool at_factor_zero = false;
            for (const auto& comp : r.components)
                at_factor_zero = at_factor_zero || Rational(comp.N) * s + comp.nu == 0 ||
                                 Rational(comp.N) * s + comp.nu + *comp.M == 0;
            if (at_factor_zero)
                continue;
            CHECK(top(s) == oracle::stratum_sum_at(r, s, [](const Component& comp) { return comp.nu; }));
            CHECK(branch(s) ==
                  oracle::stratum_sum_at(r, s, [](const Component& comp) { return comp.nu + *comp.M; }));
        }
    }
}

TEST_CASE("poles")
{
    auto p = poles(z_branch(germ("(x^2+y^3)*(y^2+x^3)")));
    REQUIRE(p.size() == 3);
    CHECK(p[0] == Pole{Rational(-1), 1});
    CHECK(p[1] == Pole{Rational(-3, 4), 1});
    CHECK(p[2] == Pole{Rational(-7, 10), 1});

    auto cusp = poles(z_top(germ("x^2+y^3")));
    REQUIRE(cusp.size() == 2);
    CHECK(cusp[0].q == -1);
    CHECK(cusp[1].q == Rational(-5, 6));

    auto cancelled = poles(ratio(lin(1, 1), lin(1, 1) * lin(1, 2)));
    REQUIRE(cancelled.size() == 1);
    CHECK(cancelled[0].q == -2);

    CHECK_THROWS_AS(poles(ratio(UPoly::constant(1), UPoly{1, 0, 1})), DomainError);
}

TEST_CASE("every pole is -w/N for some component")
{
    for (const char* poly : {"x^2+y^3", "(x^2+y^3)*(y^2+x^3)", "x^3+y^5", "y*(y-x^2)"}) {
        const auto& r = germ(poly);
        for (bool branch : {false, true}) {
            for (const auto& p : poles(branch ? z_branch(r) : z_top(r))) {
                bool found = false;
                for (const auto& comp : r.components) {
                    long w = branch ? comp.nu + *comp.M : comp.nu;
                    Rational candidate(-w, comp.N);
                    candidate.canonicalize();
                    found = found || p.q == candidate;
                }
                CHECK(found);
            }
        }
    }
}

TEST_CASE("eigenvalue_test")
{
    CyclotomicFactorization zf({{5, -2}, {10, 2}});
    CHECK(eigenvalue_test(zf, Rational(-7, 10)));
    CHECK_FALSE(eigenvalue_test(zf, Rational(-3, 4)));
    CHECK(eigenvalue_test(zf, Rational(-1)));
    CHECK(eigenvalue_test(CyclotomicFactorization{}, Rational(-1)));
    // only the reduced denominator matters
    CHECK(eigenvalue_test(zf, Rational(-14, 20)) == eigenvalue_test(zf, Rational(-7, 10)));
    CHECK(eigenvalue_test(zf, Rational(-3, 4)) == eigenvalue_test(zf, Rational(-1, 4)));
}

TEST_CASE("mc_check")
{
    const auto& cusp = germ("x^2+y^3");
    auto report = mc_check(z_top(cusp), acampo_zeta(cusp));
    CHECK(report.holds);
    CHECK(report.verdict() == "holds");

    const auto& g = germ("(x^2+y^3)*(y^2+x^3)");
    auto branch = mc_check(z_branch(g), acampo_zeta(g));
    CHECK_FALSE(branch.holds);
    CHECK(branch.verdict() == "FAILS at s=-3/4");

    auto top = mc_check(z_top(g), acampo_zeta(g));
    CHECK(top.holds);
    for (const auto& e : top.entries)
        CHECK(e.pole.q != Rational(-3, 5));
}
