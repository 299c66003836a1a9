#include <doctest.h>

#include "dedekind/valuegroup.hpp"
#include "check.hpp"
#include "generators.hpp"

using namespace dedekind;
using dedekind::testing::Rng;
using dedekind::testing::uniform;

namespace {

const GroupDescriptor Z = GroupDescriptor::integer();
const GroupDescriptor LEX = GroupDescriptor::lex_pair();
const GroupDescriptor SQRT2 = GroupDescriptor::dense_quadratic(2);
const GroupDescriptor LAMBDA = GroupDescriptor::scaled();

bool rank_one(const GroupDescriptor& d)
{
    return d.kind == GroupKind::IntegerRankOne || d.kind == GroupKind::ScaledInteger;
}

GroupElement random_element(const GroupDescriptor& d, Rng& rng, long range)
{
    const long a = uniform(rng, -range, range);
    return rank_one(d) ? GroupElement::make(d, a) : GroupElement::make(d, a, uniform(rng, -range, range));
}

GroupElement random_positive(const GroupDescriptor& d, Rng& rng, long range)
{
    for (;;) {
        const GroupElement g = random_element(d, rng, range);
        if (is_positive(g)) return g;
    }
}

} // namespace

TEST_CASE("compare follows the lex order on Z^2")
{
    CHECK(compare(GroupElement::make(LEX, 0, 1), GroupElement::make(LEX, 1, 0)) == std::strong_ordering::less);
    CHECK(compare(GroupElement::make(LEX, 1, -100), GroupElement::make(LEX, 0, 100)) == std::strong_ordering::greater);
    CHECK(compare(GroupElement::zero(Z), GroupElement::zero(Z)) == std::strong_ordering::equal);
}

TEST_CASE("compare on Z + Z*sqrt(2) is exact")
{
    // 3 - 2*sqrt(2): 9 > 8, so positive.
    CHECK(compare(GroupElement::make(SQRT2, 3, -2), GroupElement::zero(SQRT2)) == std::strong_ordering::greater);
    CHECK(compare(GroupElement::make(SQRT2, -3, 2), GroupElement::zero(SQRT2)) == std::strong_ordering::less);
    CHECK(compare(GroupElement::make(SQRT2, 1, 0), GroupElement::make(SQRT2, 0, 1)) == std::strong_ordering::less);
    // Convergent 99/70 of sqrt(2): 99^2 - 2*70^2 = 1.
    CHECK(is_positive(GroupElement::make(SQRT2, 99, -70)));
    CHECK(!is_positive(GroupElement::make(SQRT2, -99, 70)));
    CHECK(!is_positive(GroupElement::make(SQRT2, 0, 0)));

    const mpz_class big("123456789012345678901234567890");
    CHECK(is_positive(GroupElement::make(SQRT2, big, 1)));
}

TEST_CASE("mixing descriptors is rejected")
{
    CHECK_ERRC(compare(GroupElement::make(Z, 1), GroupElement::make(LEX, 0, 1)), Errc::DomainError);
    CHECK_ERRC(add(GroupElement::make(Z, 1), GroupElement::make(LAMBDA, 1)), Errc::DomainError);
    CHECK_ERRC(GroupDescriptor::dense_quadratic(4), Errc::DomainError);
    CHECK_ERRC(GroupDescriptor::dense_quadratic(1), Errc::DomainError);
}

TEST_CASE("min_positive")
{
    CHECK(*min_positive(Z) == GroupElement::make(Z, 1));
    CHECK(*min_positive(LEX) == GroupElement::make(LEX, 0, 1));
    CHECK(*min_positive(LAMBDA) == GroupElement::make(LAMBDA, 1));
    CHECK_FALSE(min_positive(SQRT2).has_value());
    CHECK_FALSE(min_positive(GroupDescriptor::dense_quadratic(3)).has_value());
}

TEST_CASE("add, scalar_mul, is_positive")
{
    CHECK(add(GroupElement::make(LEX, 0, 1), GroupElement::make(LEX, 1, -1)) == GroupElement::make(LEX, 1, 0));
    CHECK(scalar_mul(3, GroupElement::make(SQRT2, 1, 0)) == GroupElement::make(SQRT2, 3, 0));
    CHECK(scalar_mul(-2, GroupElement::make(LEX, 1, 3)) == GroupElement::make(LEX, -2, -6));
    CHECK_FALSE(is_positive(GroupElement::make(LEX, 0, -2)));
    CHECK(is_positive(GroupElement::make(LEX, 1, -2)));
    CHECK(GroupElement::make(LEX, 2, 5) - GroupElement::make(LEX, 2, 5) == GroupElement::zero(LEX));
}

TEST_CASE("infinity absorbs and dominates")
{
    for (const auto& d : {Z, LEX, SQRT2, LAMBDA}) {
        const GroupElement inf = GroupElement::infinity(d);
        const GroupElement x = rank_one(d) ? GroupElement::make(d, 1000000) : GroupElement::make(d, 1000000, 1000000);
        CHECK((inf + x).is_infinite());
        CHECK(compare(inf, x) == std::strong_ordering::greater);
        CHECK(compare(x, inf) == std::strong_ordering::less);
        CHECK(inf == GroupElement::infinity(d));
        CHECK(is_positive(inf));
    }
}

TEST_CASE("exact_quotient")
{
    CHECK(*exact_quotient(GroupElement::make(LEX, 0, 6), GroupElement::make(LEX, 0, 1)) == 6);
    CHECK_FALSE(exact_quotient(GroupElement::make(LEX, 1, 0), GroupElement::make(LEX, 0, 1)).has_value());
    CHECK(*exact_quotient(GroupElement::make(Z, -4), GroupElement::make(Z, 2)) == -2);
    CHECK_FALSE(exact_quotient(GroupElement::make(Z, 3), GroupElement::make(Z, 2)).has_value());
    CHECK(*exact_quotient(GroupElement::make(LAMBDA, 0), GroupElement::make(LAMBDA, 1)) == 0);
}

TEST_CASE("rendering and parsing")
{
    CHECK(to_string(GroupElement::make(Z, -3)) == "-3");
    CHECK(to_string(GroupElement::make(LEX, 0, 1)) == "(0,1)");
    CHECK(to_string(GroupElement::make(LAMBDA, 2)) == "2*lambda");
    CHECK(to_string(GroupElement::make(LAMBDA, 1)) == "lambda");
    CHECK(to_string(GroupElement::make(SQRT2, 3, -2)) == "3 - 2*sqrt(2)");
    CHECK(to_string(GroupElement::infinity(Z)) == "inf");

    Rng rng(7);
    for (const auto& d : {Z, LEX, SQRT2, LAMBDA}) {
        for (int i = 0; i < 500; ++i) {
            const GroupElement g = random_element(d, rng, 50);
            CHECK(parse_group_element(to_string(g), d) == g);
        }
        CHECK(parse_group_element("inf", d).is_infinite());
    }
    CHECK_ERRC(parse_group_element("(1,", LEX), Errc::ParseError);
}

TEST_CASE("property: totality and translation invariance")
{
    Rng rng(11);
    for (const auto& d : {Z, LEX, SQRT2, LAMBDA}) {
        for (int i = 0; i < 3000; ++i) {
            const GroupElement x = random_element(d, rng, 1000000);
            const GroupElement y = random_element(d, rng, 1000000);
            const GroupElement z = random_element(d, rng, 1000000);
            const int relations = (x < y) + (x == y) + (x > y);
            CHECK(relations == 1);
            CHECK(compare(x, y) == compare(x + z, y + z));
            CHECK(compare(x, y) == compare(-y, -x));
            CHECK(x + y == y + x);
            CHECK((x + y) + z == x + (y + z));
        }
    }
}

TEST_CASE("property: min_positive lies below every positive element")
{
    Rng rng(13);
    for (const auto& d : {Z, LEX, LAMBDA}) {
        const GroupElement m = *min_positive(d);
        CHECK(is_positive(m));
        for (int i = 0; i < 10000; ++i) {
            CHECK(compare(m, random_positive(d, rng, 1000)) != std::strong_ordering::greater);
        }
    }
}

TEST_CASE("property: dense groups have positive elements below any positive element")
{
    Rng rng(17);
    for (const std::uint32_t radicand : {2u, 3u, 5u, 7u}) {
        const GroupDescriptor d = GroupDescriptor::dense_quadratic(radicand);
        for (int i = 0; i < 100; ++i) {
            const GroupElement g = random_positive(d, rng, 1000);
            const auto below = positive_below(g);
            REQUIRE(below.has_value());
            CHECK(is_positive(*below));
            CHECK(*below < g);
        }
    }
    CHECK_FALSE(positive_below(GroupElement::make(Z, 1)).has_value());
}
