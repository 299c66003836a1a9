#include <doctest.h>

#include <vector>

#include "dedekind/criterion.hpp"
#include "dedekind/oracle.hpp"
#include "dedekind/parse.hpp"
#include "check.hpp"
#include "generators.hpp"

using namespace dedekind;
using dedekind::testing::Rng;
using dedekind::testing::uniform;

namespace {

Poly P(const std::string& text, const ValuationDescriptor& d) { return parse_poly(text, d); }

Poly integer_poly(const ValuationDescriptor& d, const std::vector<long>& lower)
{
    std::vector<FieldElement> c;
    for (long v : lower) c.push_back(FieldElement::from_integer(d, v));
    c.push_back(FieldElement::one(d));
    return Poly(d, std::move(c));
}

} // namespace

TEST_CASE("classical gcd form")
{
    const auto q2 = ValuationDescriptor::padic(2);
    CHECK_FALSE(oracle::classical_dedekind_qp(P("x^2 - 5", q2)));
    CHECK(oracle::classical_dedekind_qp(P("x^2 - 3", q2)));
    CHECK(oracle::classical_dedekind_qp(P("x^2 - 3", ValuationDescriptor::padic(3))));
    CHECK(oracle::classical_dedekind_qp(P("x^2 + x + 1", q2)));
    CHECK_FALSE(oracle::classical_dedekind_qp(P("x^2 - 18", ValuationDescriptor::padic(3))));
    CHECK_ERRC(oracle::classical_dedekind_qp(P("x^2 + (Y)", ValuationDescriptor::lex(2))), Errc::DomainError);
    CHECK_ERRC(oracle::classical_dedekind_qp(P("x^2 - 1/2", q2)), Errc::NotIntegral);
    CHECK_ERRC(oracle::classical_dedekind_qp(P("(x - 1)^2", q2)), Errc::InseparableInput);
}

TEST_CASE("quadratic table")
{
    CHECK_FALSE(oracle::quadratic_table(5, 2));
    CHECK(oracle::quadratic_table(3, 2));
    CHECK(oracle::quadratic_table(7, 5));
    CHECK(oracle::quadratic_table(-1, 2));
    CHECK_FALSE(oracle::quadratic_table(-3, 2));
    CHECK(oracle::quadratic_table(5, 5));
    CHECK_ERRC(oracle::quadratic_table(4, 2), Errc::PreconditionError);
    CHECK_ERRC(oracle::quadratic_table(1, 2), Errc::PreconditionError);
    CHECK_ERRC(oracle::quadratic_table(3, 6), Errc::PreconditionError);
    CHECK(oracle::is_squarefree(-30));
    CHECK_FALSE(oracle::is_squarefree(-18));
}

TEST_CASE("exhaustive factorization")
{
    CHECK(oracle::exhaustive_factor(ResiduePoly(2, {1, 0, 1})) ==
          ResidueFactorization{2, {{ResiduePoly(2, {1, 1}), 2}}});
    const auto irr = oracle::exhaustive_factor(ResiduePoly(2, {1, 1, 0, 0, 1}));
    REQUIRE(irr.factors.size() == 1);
    CHECK(irr.factors[0].multiplicity == 1);
    CHECK(oracle::exhaustive_factor(ResiduePoly(3, {0, 0, 0, 1})) ==
          ResidueFactorization{3, {{ResiduePoly(3, {0, 1}), 3}}});
    CHECK_ERRC(oracle::exhaustive_factor(ResiduePoly(2, {1, 0, 0, 0, 0, 0, 0, 1})), Errc::SizeLimit);
    CHECK_ERRC(oracle::exhaustive_factor(ResiduePoly(11, {1, 1})), Errc::SizeLimit);
}

TEST_CASE("property: quadratic table agrees with both criterion paths")
{
    for (long d = -50; d <= 50; ++d) {
        if (d == 0 || d == 1 || !oracle::is_squarefree(d)) continue;
        for (const std::uint32_t p : {2u, 3u, 5u, 7u}) {
            const auto desc = ValuationDescriptor::padic(p);
            const Poly f = integer_poly(desc, {-d, 0});
            const bool expected = oracle::quadratic_table(d, p);
            CHECK(oracle::classical_dedekind_qp(f) == expected);
            CHECK(dedekind_test(f).closed() == expected);
            CHECK(ershov_test(f).verdict == dedekind_test(f).verdict);
        }
    }
}

TEST_CASE("property: classical form agrees with the criterion over Q_p")
{
    Rng rng(211);
    for (const std::uint32_t p : {2u, 3u, 5u}) {
        const auto d = ValuationDescriptor::padic(p);
        // Every monic linear and quadratic polynomial with coefficients in [-20, 20].
        for (long a = -20; a <= 20; ++a) {
            CHECK(oracle::classical_dedekind_qp(integer_poly(d, {a})) == dedekind_test(integer_poly(d, {a})).closed());
            for (long b = -20; b <= 20; ++b) {
                const Poly f = integer_poly(d, {a, b});
                if (!is_separable(f)) continue;
                CHECK(oracle::classical_dedekind_qp(f) == dedekind_test(f).closed());
            }
        }
        // Degrees 3 and 4 sampled from the same grid.
        for (int i = 0; i < 1500; ++i) {
            std::vector<long> c(static_cast<std::size_t>(uniform(rng, 3, 4)));
            for (auto& x : c) x = uniform(rng, -20, 20);
            const Poly f = integer_poly(d, c);
            if (!is_separable(f)) continue;
            CHECK(oracle::classical_dedekind_qp(f) == dedekind_test(f).closed());
        }
    }
}
