#include "dedekind/oracle.hpp"

#include <algorithm>
#include <cstdlib>

namespace dedekind::oracle {

bool classical_dedekind_qp(const Poly& f)
{
    const auto& d = f.descriptor();
    if (d.kind != ValuationKind::PAdicRationals) fail(Errc::DomainError, "classical form needs (Q, nu_p)");
    if (f.degree() < 1 || !f.is_monic()) fail(Errc::NotMonic, to_string(f) + " is not monic");
    if (!f.is_integral()) fail(Errc::NotIntegral, to_string(f) + " is not p-integral");
    if (!is_separable(f)) fail(Errc::InseparableInput, to_string(f) + " is inseparable");

    const ResiduePoly f_bar = reduce(f);
    ResiduePoly g_bar = ResiduePoly::monomial(d.p, 1, 0);
    for (const auto& fac : factor(f_bar).factors) g_bar = g_bar * fac.phi;
    const auto [h_bar, zero] = divrem(f_bar, g_bar);
    if (!zero.is_zero()) fail(Errc::PreconditionError, "internal error: radical does not divide f-bar");

    const Poly g = lift(g_bar, d);
    const Poly h = lift(h_bar, d);
    const Poly t = (g * h - f).scaled(FieldElement::from_rational(d, mpq_class(1, d.p)));
    const ResiduePoly t_bar = reduce(t);
    return gcd(gcd(t_bar, g_bar), h_bar).degree() == 0;
}

bool is_squarefree(long d)
{
    if (d == 0) return false;
    long n = std::labs(d);
    for (long k = 2; k * k <= n; ++k) {
        if (n % (k * k) == 0) return false;
    }
    return true;
}

bool quadratic_table(long d, long p)
{
    if (d == 0 || d == 1 || !is_squarefree(d)) {
        fail(Errc::PreconditionError, std::to_string(d) + " is not a squarefree non-square");
    }
    if (!is_prime(static_cast<std::uint64_t>(p))) fail(Errc::PreconditionError, std::to_string(p) + " is not prime");
    if (p != 2) return true;
    const long r = ((d % 4) + 4) % 4;
    return r != 1;
}

namespace {

// Next monic polynomial of the same degree in odometer order; false after the last.
bool next_monic(ResiduePoly::Coeffs& c, std::uint32_t q)
{
    const std::size_t deg = c.size() - 1;
    std::size_t i = 0;
    while (i < deg && ++c[i] == q) c[i++] = 0;
    return i < deg;
}

} // namespace

ResidueFactorization exhaustive_factor(const ResiduePoly& p)
{
    const std::uint32_t q = p.modulus();
    if (p.degree() < 1) fail(Errc::PreconditionError, "cannot factor a constant");
    if (p.degree() > 6 || q > 9) fail(Errc::SizeLimit, "exhaustive factorization is limited to deg <= 6, q <= 9");

    ResiduePoly rest = monic(p);
    std::vector<ResidueFactor> found;
    // The smallest-degree monic divisor of degree >= 1 is irreducible.
    while (rest.degree() >= 1) {
        bool split = false;
        for (long deg = 1; deg <= rest.degree() && !split; ++deg) {
            ResiduePoly::Coeffs c(static_cast<std::size_t>(deg) + 1, 0);
            c.back() = 1;
            do {
                const ResiduePoly cand = ResiduePoly::from_canonical(q, c);
                auto [quot, r] = divrem(rest, cand);
                if (r.is_zero()) {
                    auto it = std::find_if(found.begin(), found.end(),
                                           [&](const ResidueFactor& f) { return f.phi == cand; });
                    if (it == found.end()) {
                        found.push_back({cand, 1});
                    } else {
                        ++it->multiplicity;
                    }
                    rest = quot;
                    split = true;
                    break;
                }
            } while (next_monic(c, q));
        }
    }
    std::sort(found.begin(), found.end(), [](const ResidueFactor& a, const ResidueFactor& b) { return a.phi < b.phi; });
    return {q, std::move(found)};
}

} // namespace dedekind::oracle
