#include "motzeta/bipoly.hpp"
#include "motzeta/errors.hpp"
#include "motzeta/upoly.hpp"

#include <doctest.h>

using namespace motzeta;

TEST_CASE("upoly division and gcd")
{
    UPoly a{-1, 0, 1}; // s^2 - 1
    UPoly b{1, 1};     // s + 1
    auto [q, r] = divmod(a, b);
    CHECK(q == UPoly{-1, 1});
    CHECK(r.is_zero());
    CHECK(gcd(a, UPoly{2, 2}) == UPoly{1, 1});
    CHECK(gcd(UPoly{1, 0, 1}, UPoly{0, 1}).degree() == 0);
    CHECK_THROWS_AS(divmod(a, UPoly{}), DomainError);
}

TEST_CASE("rational roots with multiplicities")
{
    // (10s+7)(4s+3)(s+1)^2 s
    UPoly p = UPoly::linear(10, 7) * UPoly::linear(4, 3) * UPoly::linear(1, 1) * UPoly::linear(1, 1) *
              UPoly::linear(1, 0);
    auto rr = rational_roots(p);
    REQUIRE(rr.roots.size() == 4);
    CHECK(rr.roots[0] == std::pair<Rational, long>{Rational(-1), 2});
    CHECK(rr.roots[1] == std::pair<Rational, long>{Rational(-3, 4), 1});
    CHECK(rr.roots[2] == std::pair<Rational, long>{Rational(-7, 10), 1});
    CHECK(rr.roots[3] == std::pair<Rational, long>{Rational(0), 1});
    CHECK(rr.cofactor.degree() == 0);

    auto irr = rational_roots(UPoly{1, 0, 1} * UPoly::linear(2, -1));
    CHECK(irr.roots.size() == 1);
    CHECK(irr.cofactor.degree() == 2);
}

TEST_CASE("primitive part")
{
    auto [content, ints] = (UPoly{Rational(7, 2), Rational(6), Rational(2)}).primitive_part();
    CHECK(content == Rational(1, 2));
    CHECK(ints == std::vector<Integer>{7, 12, 4});
}

TEST_CASE("parse_bipoly")
{
    BiPoly f = parse_bipoly("(x^2+y^3)*(y^2+x^3)");
    CHECK(f.coefficient(2, 2) == 1);
    CHECK(f.coefficient(5, 0) == 1);
    CHECK(f.coefficient(0, 5) == 1);
    CHECK(f.coefficient(3, 3) == 1);
    CHECK(f.terms().size() == 4);
    CHECK(parse_bipoly("3/2*x - -y") == BiPoly::monomial(Rational(3, 2), 1, 0) + BiPoly::y());
    CHECK(parse_bipoly("x*y - x*y").is_zero());
    CHECK_THROWS_AS(parse_bipoly("x + z"), ParseError);
    CHECK_THROWS_AS(parse_bipoly("(x + y"), ParseError);
    CHECK_THROWS_AS(parse_bipoly("x^"), ParseError);
}

TEST_CASE("multiplicity examples")
{
    CHECK(parse_bipoly("x^2 + y^3").multiplicity() == 2);
    CHECK(parse_bipoly("x*y").multiplicity() == 2);
    CHECK(parse_bipoly("x").multiplicity() == 1);
    CHECK(parse_bipoly("1 + x").multiplicity() == 0);
}

TEST_CASE("blowup charts")
{
    BiPoly f = parse_bipoly("x^2 + y^3");
    // y-chart: (xy)^2 + y^3 = y^2 (x^2 + y)
    CHECK(f.blowup_y_chart(2) == parse_bipoly("x^2 + y"));
    // x-chart at slope 1: x^2 + x^3 (y+1)^3, divided by x^2
    CHECK(f.blowup_x_chart(1, 2) == parse_bipoly("1 + x*(y+1)^3"));
}

TEST_CASE("squarefree detection")
{
    CHECK(is_squarefree(parse_bipoly("x^2 + y^3")));
    CHECK(is_squarefree(parse_bipoly("(x^2+y^3)*(y^2+x^3)")));
    CHECK(is_squarefree(parse_bipoly("y*(x+1)")));
    CHECK_FALSE(is_squarefree(parse_bipoly("(x + y)^2")));
    CHECK_FALSE(is_squarefree(parse_bipoly("y^2*(x+1)")));
    CHECK_FALSE(is_squarefree(parse_bipoly("(x^2 - y^3)^2 * x")));
    CHECK_FALSE(is_squarefree(BiPoly()));
}
