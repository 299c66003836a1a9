#include "dedekind/residue_factor.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <random>
#include <utility>

namespace dedekind {

namespace {

// Trial division is used while the irreducible tables it needs stay this small.
constexpr double kEnumerationBudget = 4096.0;

ResiduePoly x_poly(std::uint32_t q) { return ResiduePoly::monomial(q, 1, 1); }

ResiduePoly one_poly(std::uint32_t q) { return ResiduePoly::monomial(q, 1, 0); }

ResiduePoly powmod(const ResiduePoly& base, const mpz_class& e, const ResiduePoly& m)
{
    return ResiduePoly::from_canonical(base.modulus(), dense::powmod(base.field(), base.coeffs(), e, m.coeffs()));
}

ResiduePoly exact_quotient(const ResiduePoly& a, const ResiduePoly& b)
{
    auto [q, r] = divrem(a, b);
    if (!r.is_zero()) fail(Errc::PreconditionError, "inexact residue division");
    return q;
}

// g with g^p = f, for f whose derivative vanishes (all exponents divisible by p).
ResiduePoly pth_root(const ResiduePoly& f)
{
    const std::uint32_t p = f.modulus();
    ResiduePoly::Coeffs out;
    for (std::size_t i = 0; i < f.coeffs().size(); i += p) out.push_back(f.coeffs()[i]);
    // a^p = a in F_p, so coefficients carry over unchanged.
    return ResiduePoly::from_canonical(p, std::move(out));
}

double power_estimate(std::uint32_t q, unsigned k)
{
    double v = 1;
    for (unsigned i = 0; i < k; ++i) v *= q;
    return v;
}

void sort_canonical(std::vector<ResiduePoly>& v) { std::sort(v.begin(), v.end()); }

// Equal-degree splitting of a monic squarefree f whose irreducible factors all have degree d.
void equal_degree_split(const ResiduePoly& f, unsigned d, std::mt19937_64& rng, std::vector<ResiduePoly>& out)
{
    const long n = f.degree();
    if (n == static_cast<long>(d)) {
        out.push_back(f);
        return;
    }
    const std::uint32_t q = f.modulus();
    std::uniform_int_distribution<std::uint32_t> coeff(0, q - 1);
    mpz_class qd;
    mpz_ui_pow_ui(qd.get_mpz_t(), q, d);
    for (;;) {
        ResiduePoly::Coeffs a(static_cast<std::size_t>(n));
        for (auto& c : a) c = coeff(rng);
        ResiduePoly r = ResiduePoly::from_canonical(q, std::move(a));
        if (r.degree() < 1) continue;
        ResiduePoly b;
        if (q == 2) {
            // Trace map r + r^2 + ... + r^(2^(d-1)) mod f.
            ResiduePoly t = r;
            ResiduePoly acc = r;
            for (unsigned i = 1; i < d; ++i) {
                t = rem(t * t, f);
                acc = acc + t;
            }
            b = acc;
        } else {
            b = powmod(r, (qd - 1) / 2, f) - one_poly(q);
        }
        ResiduePoly g = gcd(f, b);
        if (g.degree() > 0 && g.degree() < n) {
            equal_degree_split(g, d, rng, out);
            equal_degree_split(exact_quotient(f, g), d, rng, out);
            return;
        }
    }
}

struct IrreducibleTable {
    std::mutex mutex;
    std::map<std::pair<std::uint32_t, unsigned>, std::unique_ptr<const std::vector<ResiduePoly>>> tables;
};

IrreducibleTable& irreducible_table()
{
    static IrreducibleTable table;
    return table;
}

} // namespace

std::vector<std::size_t> ResidueFactorization::repeated() const
{
    std::vector<std::size_t> idx;
    for (std::size_t i = 0; i < factors.size(); ++i) {
        if (factors[i].multiplicity >= 2) idx.push_back(i);
    }
    return idx;
}

ResiduePoly ResidueFactorization::product() const
{
    ResiduePoly r = one_poly(q);
    for (const auto& f : factors) r = r * pow(f.phi, f.multiplicity);
    return r;
}

long ResidueFactorization::total_degree() const
{
    long t = 0;
    for (const auto& f : factors) t += static_cast<long>(f.multiplicity) * f.phi.degree();
    return t;
}

bool is_irreducible(const ResiduePoly& p)
{
    if (p.degree() < 1) fail(Errc::PreconditionError, "irreducibility needs degree >= 1");
    const ResiduePoly f = monic(p);
    const std::uint32_t q = f.modulus();
    const ResiduePoly x = x_poly(q);
    ResiduePoly h = rem(x, f);
    for (long i = 1; 2 * i <= f.degree(); ++i) {
        h = powmod(h, q, f);
        if (gcd(f, h - x).degree() > 0) return false;
    }
    return true;
}

std::vector<ResidueFactor> squarefree_decomposition(const ResiduePoly& p)
{
    if (p.degree() < 1) return {};
    const ResiduePoly f = monic(p);
    const std::uint32_t q = f.modulus();
    std::map<unsigned, ResiduePoly> parts;
    auto record = [&](const ResiduePoly& g, unsigned m) {
        if (g.degree() < 1) return;
        auto [it, inserted] = parts.try_emplace(m, g);
        if (!inserted) it->second = it->second * g;
    };

    ResiduePoly c = gcd(f, derivative(f));
    ResiduePoly w = exact_quotient(f, c);
    unsigned i = 1;
    while (w.degree() > 0) {
        ResiduePoly y = gcd(w, c);
        record(exact_quotient(w, y), i);
        ++i;
        w = y;
        c = exact_quotient(c, y);
    }
    if (c.degree() > 0) {
        for (const auto& [g, m] : squarefree_decomposition(pth_root(c))) record(g, m * q);
    }

    std::vector<ResidueFactor> out;
    for (auto& [m, g] : parts) out.push_back({monic(g), m});
    return out;
}

const std::vector<ResiduePoly>& monic_irreducibles(std::uint32_t q, unsigned degree)
{
    IrreducibleTable& table = irreducible_table();
    std::lock_guard<std::mutex> lock(table.mutex);
    auto& slot = table.tables[{q, degree}];
    if (!slot) {
        if (degree == 0 || power_estimate(q, degree) > 1e7) {
            fail(Errc::SizeLimit, "refusing to enumerate irreducibles of degree " + std::to_string(degree) +
                                      " over F_" + std::to_string(q));
        }
        auto list = std::make_unique<std::vector<ResiduePoly>>();
        ResiduePoly::Coeffs c(degree + 1, 0);
        c[degree] = 1;
        // Odometer over the lower coefficients.
        for (;;) {
            ResiduePoly cand = ResiduePoly::from_canonical(q, c);
            if (is_irreducible(cand)) list->push_back(cand);
            std::size_t i = 0;
            while (i < degree && ++c[i] == q) c[i++] = 0;
            if (i == degree) break;
        }
        sort_canonical(*list);
        slot = std::move(list);
    }
    return *slot;
}

namespace detail {

std::vector<ResiduePoly> split_by_enumeration(const ResiduePoly& squarefree)
{
    std::vector<ResiduePoly> out;
    ResiduePoly g = monic(squarefree);
    for (unsigned d = 1; 2 * static_cast<long>(d) <= g.degree(); ++d) {
        for (const auto& phi : monic_irreducibles(g.modulus(), d)) {
            if (2 * phi.degree() > g.degree()) break;
            auto [quot, r] = divrem(g, phi);
            if (r.is_zero()) {
                out.push_back(phi);
                g = quot;
            }
        }
    }
    if (g.degree() >= 1) out.push_back(g);
    sort_canonical(out);
    return out;
}

std::vector<ResiduePoly> split_by_cantor_zassenhaus(const ResiduePoly& squarefree)
{
    std::vector<ResiduePoly> out;
    ResiduePoly g = monic(squarefree);
    const std::uint32_t q = g.modulus();
    const ResiduePoly x = x_poly(q);
    std::mt19937_64 rng(0x5eed'dede'4b1dULL);
    ResiduePoly h = x;
    for (unsigned d = 1; 2 * static_cast<long>(d) <= g.degree(); ++d) {
        h = powmod(h, q, g);
        ResiduePoly block = gcd(g, h - x);
        if (block.degree() > 0) {
            equal_degree_split(block, d, rng, out);
            g = exact_quotient(g, block);
            h = rem(h, g);
        }
    }
    if (g.degree() >= 1) out.push_back(g);
    sort_canonical(out);
    return out;
}

} // namespace detail

ResidueFactorization factor(const ResiduePoly& p)
{
    if (p.degree() < 1) fail(Errc::PreconditionError, "cannot factor a constant residue polynomial");
    ResidueFactorization result;
    result.q = p.modulus();
    for (const auto& [part, m] : squarefree_decomposition(p)) {
        const unsigned half = static_cast<unsigned>(part.degree() / 2);
        const bool small = power_estimate(part.modulus(), half) <= kEnumerationBudget;
        auto pieces = small ? detail::split_by_enumeration(part) : detail::split_by_cantor_zassenhaus(part);
        for (auto& phi : pieces) result.factors.push_back({std::move(phi), m});
    }
    std::sort(result.factors.begin(), result.factors.end(),
              [](const ResidueFactor& a, const ResidueFactor& b) { return a.phi < b.phi; });

    if (!(result.product() == monic(p))) {
        fail(Errc::PreconditionError, "internal error: factorization of " + to_string(p) + " does not reconstruct");
    }
    return result;
}

} // namespace dedekind
