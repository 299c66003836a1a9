#include <doctest.h>

#include <vector>

#include "dedekind/parse.hpp"
#include "dedekind/poly.hpp"
#include "check.hpp"
#include "generators.hpp"

using namespace dedekind;
using dedekind::testing::Rng;
using dedekind::testing::uniform;

namespace {

Poly P(const std::string& text, const ValuationDescriptor& d) { return parse_poly(text, d); }

ResiduePoly R(std::uint32_t q, std::vector<long> c) { return ResiduePoly(q, c); }

std::vector<ValuationDescriptor> variants()
{
    return {ValuationDescriptor::padic(2),         ValuationDescriptor::padic(3),
            ValuationDescriptor::lex(2),           ValuationDescriptor::lex(3),
            ValuationDescriptor::lambda_trivial(2), ValuationDescriptor::lambda_composite(2, 2),
            ValuationDescriptor::lambda_composite(3, 2)};
}

const auto Q2 = ValuationDescriptor::padic(2);
const auto LEX2 = ValuationDescriptor::lex(2);
const auto LEX3 = ValuationDescriptor::lex(3);

} // namespace

TEST_CASE("gauss_valuation")
{
    const auto z = GroupDescriptor::integer();
    CHECK(gauss_valuation(P("5*x^2 + 25*x + 1", ValuationDescriptor::padic(5))) == GroupElement::make(z, 0));
    CHECK(gauss_valuation(P("4*x + 6", Q2)) == GroupElement::make(z, 1));
    CHECK(gauss_valuation(P("(Y)*x + (X)", LEX2)) == GroupElement::make(GroupDescriptor::lex_pair(), 0, 1));
    CHECK(gauss_valuation(Poly(Q2)).is_infinite());
}

TEST_CASE("euclid_divide")
{
    const auto d1 = euclid_divide(P("x^2 - 5", Q2), P("x + 1", Q2));
    CHECK(d1.quotient == P("x - 1", Q2));
    CHECK(d1.remainder == P("-4", Q2));

    const auto d2 = euclid_divide(P("x^3 + (Y)*x + (X)", LEX2), P("x", LEX2));
    CHECK(d2.quotient == P("x^2 + (Y)", LEX2));
    CHECK(d2.remainder == P("(X)", LEX2));

    const Poly f = P("x^4 + (X/(1+Y))*x + 3", LEX3);
    const auto d3 = euclid_divide(f, f);
    CHECK(d3.quotient == P("1", LEX3));
    CHECK(d3.remainder.is_zero());

    const auto d4 = euclid_divide(P("x", Q2), P("x^3 + 1", Q2));
    CHECK(d4.quotient.is_zero());
    CHECK(d4.remainder == P("x", Q2));

    CHECK_ERRC(euclid_divide(P("x^2", Q2), P("2*x + 1", Q2)), Errc::PreconditionError);
    CHECK_ERRC(euclid_divide(P("x^2", Q2), P("1", Q2)), Errc::PreconditionError);
}

TEST_CASE("reduce and lift")
{
    CHECK(reduce(P("x^2 - 5", Q2)) == R(2, {1, 0, 1}));
    CHECK(reduce(P("x^3 + (Y)*x + (X)", LEX2)) == R(2, {0, 0, 0, 1}));
    CHECK(reduce(P("3*x + 6", ValuationDescriptor::padic(3))).is_zero());
    CHECK_ERRC(reduce(P("x/2", Q2)), Errc::NotIntegral);

    CHECK(lift_monic(R(2, {1, 1}), Q2) == P("x + 1", Q2));
    CHECK(lift_monic(R(2, {0, 1}), LEX2) == P("x", LEX2));
    const auto q3 = ValuationDescriptor::padic(3);
    for (long a = 0; a < 3; ++a) {
        for (long b = 0; b < 3; ++b) {
            const ResiduePoly p = R(3, {a, b, 1});
            CHECK(reduce(lift_monic(p, q3)) == p);
            CHECK(lift_monic(p, q3).is_monic());
        }
    }
}

TEST_CASE("derivative, gcd, separability")
{
    CHECK(derivative(P("x^2 - 5", Q2)) == P("2*x", Q2));
    CHECK(gcd_over_K(P("x^2 - 5", Q2), P("2*x", Q2)) == P("1", Q2));
    CHECK(gcd_over_K(P("x^2 - 1", Q2), P("3*x + 3", Q2)) == P("x + 1", Q2));
    CHECK(gcd_over_K(P("x^2 - (Y)^2", LEX3), P("x^3 - (Y)^3", LEX3)) == P("x - (Y)", LEX3));

    CHECK(derivative(P("x^3 + (Y)", LEX3)).is_zero());
    CHECK(gcd_over_K(P("x^3 + (Y)", LEX3), Poly(LEX3)) == P("x^3 + (Y)", LEX3));
    CHECK_ERRC(gcd_over_K(Poly(LEX3), Poly(LEX3)), Errc::PreconditionError);

    CHECK(is_separable(P("x^2 - 5", Q2)));
    CHECK_FALSE(is_separable(P("x^3 + (Y)", LEX3)));
    CHECK(is_separable(P("x^3 + (Y)", LEX2)));
    CHECK_FALSE(is_separable(P("(x + 1)^2*(x - 3)", Q2)));
    CHECK_FALSE(is_separable(P("x^4 + (X)*x^2 + (Y)", LEX2)));
    CHECK(is_separable(P("x^3 + (X)", ValuationDescriptor::lambda_trivial(2))));
    CHECK_FALSE(is_separable(P("x^3 + (X)", ValuationDescriptor::lambda_trivial(3))));
}

TEST_CASE("degree cap")
{
    const Poly big = P("x^40 + 2", Q2);
    CHECK_ERRC(check_degree(big), Errc::SizeLimit);
    CHECK_NOTHROW(check_degree(big, 64));
    CHECK_NOTHROW(check_degree(P("x^32", Q2)));
}

TEST_CASE("rendering round-trips through the parser")
{
    CHECK(to_string(P("x^3 + (Y)*x + (X)", LEX2)) == "x^3 + (Y)*x + (X)");
    CHECK(to_string(P("x^2 - 5", Q2)) == "x^2 - 5");
    CHECK(to_string(P("x/2", Q2)) == "(1/2)*x");
    CHECK(to_string(P("Z^3 + Y", LEX2)) == "x^3 + (Y)");
    CHECK(to_string(Poly(Q2)) == "0");
    Rng rng(21);
    for (const auto& d : variants()) {
        for (int i = 0; i < 100; ++i) {
            const Poly f = testing::random_integral_poly(d, uniform(rng, 0, 4), rng);
            CHECK(P(to_string(f), d) == f);
        }
    }
    CHECK_ERRC(P("x^2 +", Q2), Errc::ParseError);
    CHECK_ERRC(P("x / (x + 1)", Q2), Errc::ParseError);
    CHECK_ERRC(P("x^99999", Q2), Errc::ParseError);
    CHECK_ERRC(P("x + (Y)", ValuationDescriptor::padic(3)), Errc::ParseError);
}

TEST_CASE("property: division identity with integral quotient and remainder")
{
    Rng rng(31);
    for (const auto& d : variants()) {
        const int count = d.kind == ValuationKind::PAdicRationals ? 10000 : 1500;
        for (int i = 0; i < count; ++i) {
            const Poly f = testing::random_integral_poly(d, uniform(rng, 0, 6), rng);
            const Poly phi = testing::random_monic_integral(d, uniform(rng, 1, 3), rng);
            const auto [q, r] = euclid_divide(f, phi);
            CHECK(r.degree() < phi.degree());
            CHECK(q * phi + r == f);
            CHECK(q.is_integral());
            CHECK(r.is_integral());
        }
    }
}

TEST_CASE("property: Gauss valuation is multiplicative and reduce is a homomorphism")
{
    Rng rng(37);
    for (const auto& d : variants()) {
        for (int i = 0; i < 500; ++i) {
            const Poly f = testing::random_integral_poly(d, uniform(rng, 0, 4), rng);
            const Poly g = testing::random_integral_poly(d, uniform(rng, 0, 4), rng);
            CHECK(gauss_valuation(f * g) == gauss_valuation(f) + gauss_valuation(g));
            CHECK(reduce(f * g) == reduce(f) * reduce(g));
            CHECK(reduce(f + g) == reduce(f) + reduce(g));
        }
    }
}

TEST_CASE("property: general division over K")
{
    Rng rng(41);
    for (const auto& d : variants()) {
        for (int i = 0; i < 100; ++i) {
            const Poly f = testing::random_integral_poly(d, uniform(rng, 0, 5), rng);
            Poly g = testing::random_integral_poly(d, uniform(rng, 0, 3), rng);
            if (g.is_zero()) continue;
            g = g.scaled(testing::random_element(d, rng) + FieldElement::one(d));
            if (g.is_zero()) continue;
            const auto [q, r] = divide(f, g);
            CHECK(q * g + r == f);
            CHECK(r.degree() < g.degree());
        }
    }
}

TEST_CASE("property: separability agrees with the gcd over K")
{
    Rng rng(149);
    for (const auto& d : {ValuationDescriptor::lex(2), ValuationDescriptor::lex(3),
                          ValuationDescriptor::lambda_trivial(2), ValuationDescriptor::lambda_trivial(5)}) {
        for (int i = 0; i < 60; ++i) {
            const long deg = uniform(rng, 1, 3);
            const Poly f = testing::coin(rng) ? testing::random_structured(d, deg, rng)
                                              : testing::random_monic_integral(d, deg, rng);
            const Poly df = derivative(f);
            const bool expected = !df.is_zero() && gcd_over_K(f, df).degree() == 0;
            CHECK(is_separable(f) == expected);
        }
    }
}
