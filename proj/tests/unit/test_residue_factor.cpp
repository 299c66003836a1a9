#include <doctest.h>

#include <algorithm>
#include <thread>
#include <vector>

#include "dedekind/oracle.hpp"
#include "dedekind/residue_factor.hpp"
#include "check.hpp"
#include "generators.hpp"

using namespace dedekind;
using dedekind::testing::Rng;
using dedekind::testing::uniform;

namespace {

ResiduePoly R(std::uint32_t q, std::vector<long> c) { return ResiduePoly(q, c); }

ResidueFactorization F(std::uint32_t q, std::vector<ResidueFactor> f) { return {q, std::move(f)}; }

void check_well_formed(const ResiduePoly& p, const ResidueFactorization& fac)
{
    CHECK(fac.product() == monic(p));
    CHECK(fac.total_degree() == p.degree());
    for (std::size_t i = 0; i < fac.factors.size(); ++i) {
        CHECK(fac.factors[i].phi.is_monic());
        CHECK(is_irreducible(fac.factors[i].phi));
        CHECK(fac.factors[i].multiplicity >= 1);
        if (i > 0) CHECK(fac.factors[i - 1].phi < fac.factors[i].phi);
    }
}

// Product of `count` distinct random irreducibles of degree <= max_deg.
ResiduePoly random_squarefree(std::uint32_t q, int count, long max_deg, Rng& rng)
{
    std::vector<ResiduePoly> picked;
    ResiduePoly out = ResiduePoly::monomial(q, 1, 0);
    while (static_cast<int>(picked.size()) < count) {
        const ResiduePoly phi = testing::random_irreducible(q, uniform(rng, 1, max_deg), rng);
        if (std::find(picked.begin(), picked.end(), phi) != picked.end()) continue;
        picked.push_back(phi);
        out = out * phi;
    }
    return out;
}

} // namespace

TEST_CASE("factor examples")
{
    CHECK(factor(R(2, {1, 0, 1})) == F(2, {{R(2, {1, 1}), 2}}));
    CHECK(factor(R(2, {0, 0, 0, 1})) == F(2, {{R(2, {0, 1}), 3}}));
    CHECK(factor(R(5, {1, 0, 1})) == F(5, {{R(5, {2, 1}), 1}, {R(5, {3, 1}), 1}}));
    CHECK(factor(R(3, {1, 0, 2})) == F(3, {{R(3, {1, 1}), 1}, {R(3, {2, 1}), 1}}));
    // x^6 + x^3 over F3 = x^3 (x + 1)^3
    CHECK(factor(R(3, {0, 0, 0, 1, 0, 0, 1})) == F(3, {{R(3, {0, 1}), 3}, {R(3, {1, 1}), 3}}));
    CHECK_ERRC(factor(R(2, {1})), Errc::PreconditionError);
    CHECK_ERRC(factor(ResiduePoly(2)), Errc::PreconditionError);
}

TEST_CASE("is_irreducible examples")
{
    CHECK(is_irreducible(R(2, {1, 1, 1})));
    CHECK_FALSE(is_irreducible(R(2, {1, 0, 1})));
    CHECK(is_irreducible(R(2, {1, 1, 0, 1})));
    CHECK(is_irreducible(R(2, {1, 1, 0, 0, 1})));
    CHECK_FALSE(is_irreducible(R(2, {1, 0, 1, 0, 1})));
    CHECK(is_irreducible(R(7, {3, 1})));
    CHECK_ERRC(is_irreducible(R(7, {1})), Errc::PreconditionError);
}

TEST_CASE("monic_irreducibles counts match the necklace formula")
{
    CHECK(monic_irreducibles(2, 1).size() == 2);
    CHECK(monic_irreducibles(2, 2).size() == 1);
    CHECK(monic_irreducibles(2, 3).size() == 2);
    CHECK(monic_irreducibles(2, 4).size() == 3);
    CHECK(monic_irreducibles(2, 6).size() == 9);
    CHECK(monic_irreducibles(3, 2).size() == 3);
    CHECK(monic_irreducibles(3, 3).size() == 8);
    CHECK(monic_irreducibles(5, 2).size() == 10);
}

TEST_CASE("squarefree decomposition")
{
    // (x+1)^2 * x^3 over F2: l = 2 part (x+1), l = 3 part x.
    const ResiduePoly p = pow(R(2, {1, 1}), 2) * pow(R(2, {0, 1}), 3);
    const auto parts = squarefree_decomposition(p);
    ResiduePoly product = ResiduePoly::monomial(2, 1, 0);
    for (const auto& part : parts) product = product * pow(part.phi, part.multiplicity);
    CHECK(product == p);
    // p-th powers: (x^2 + x + 1)^3 over F3 has zero derivative.
    const ResiduePoly c = pow(R(3, {1, 1, 1}), 3);
    CHECK(derivative(c).is_zero());
    check_well_formed(c, factor(c));
}

TEST_CASE("property: factorization agrees with exhaustive search")
{
    for (const std::uint32_t q : {2u, 3u}) {
        for (long deg = 1; deg <= 4; ++deg) {
            ResiduePoly::Coeffs c(static_cast<std::size_t>(deg) + 1, 0);
            c.back() = 1;
            for (;;) {
                const ResiduePoly p = ResiduePoly::from_canonical(q, c);
                const auto fac = factor(p);
                CHECK(fac == oracle::exhaustive_factor(p));
                check_well_formed(p, fac);
                std::size_t i = 0;
                while (i + 1 < c.size() && ++c[i] == q) c[i++] = 0;
                if (i + 1 == c.size()) break;
            }
        }
    }
}

TEST_CASE("property: enumeration and Cantor-Zassenhaus splitting agree")
{
    Rng rng(43);
    for (const std::uint32_t q : {2u, 3u, 5u, 7u, 11u, 101u}) {
        for (int i = 0; i < 60; ++i) {
            const ResiduePoly p = random_squarefree(q, static_cast<int>(uniform(rng, 1, 4)), q > 7 ? 2 : 3, rng);
            auto a = detail::split_by_enumeration(p);
            auto b = detail::split_by_cantor_zassenhaus(p);
            std::sort(a.begin(), a.end());
            std::sort(b.begin(), b.end());
            CHECK(a == b);
        }
    }
}

TEST_CASE("property: random factorizations reconstruct")
{
    Rng rng(47);
    for (const std::uint32_t q : {2u, 3u, 5u, 13u, 65521u}) {
        for (int i = 0; i < 100; ++i) {
            const ResiduePoly p = testing::random_monic_residue(q, uniform(rng, 1, q > 13 ? 8 : 12), rng);
            check_well_formed(p, factor(p));
        }
    }
}

TEST_CASE("monic_irreducibles is safe to call concurrently")
{
    std::vector<std::thread> threads;
    std::vector<std::size_t> sizes(8);
    for (std::size_t t = 0; t < sizes.size(); ++t) {
        threads.emplace_back([&sizes, t] {
            const std::uint32_t q = t % 2 == 0 ? 13 : 17;
            sizes[t] = monic_irreducibles(q, 3).size();
            for (int i = 0; i < 20; ++i) (void)factor(ResiduePoly(q, {1, 2, 3, 4, 5, 1}));
        });
    }
    for (auto& th : threads) th.join();
    // (q^3 - q)/3
    for (std::size_t t = 0; t < sizes.size(); ++t) CHECK(sizes[t] == (t % 2 == 0 ? 728u : 1632u));
}
