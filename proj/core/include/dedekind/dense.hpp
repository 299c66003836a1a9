#pragma once

// Dense univariate polynomial kernels over a coefficient field context.
// A polynomial is a coefficient vector, index = degree, with no trailing
// zeros; the empty vector is the zero polynomial.

#include <algorithm>
#include <cstddef>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "dedekind/error.hpp"

namespace dedekind::dense {

template <class F>
using Vec = std::vector<typename F::Elem>;

template <class F>
void trim(const F& k, Vec<F>& a)
{
    while (!a.empty() && k.is_zero(a.back())) a.pop_back();
}

template <class F>
long degree(const Vec<F>& a)
{
    return static_cast<long>(a.size()) - 1;
}

template <class F>
Vec<F> constant(const F& k, typename F::Elem c)
{
    if (k.is_zero(c)) return {};
    return {std::move(c)};
}

template <class F>
Vec<F> add(const F& k, const Vec<F>& a, const Vec<F>& b)
{
    Vec<F> r(std::max(a.size(), b.size()), k.zero());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i];
    for (std::size_t i = 0; i < b.size(); ++i) r[i] = k.add(r[i], b[i]);
    trim(k, r);
    return r;
}

template <class F>
Vec<F> sub(const F& k, const Vec<F>& a, const Vec<F>& b)
{
    Vec<F> r(std::max(a.size(), b.size()), k.zero());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i];
    for (std::size_t i = 0; i < b.size(); ++i) r[i] = k.sub(r[i], b[i]);
    trim(k, r);
    return r;
}

template <class F>
Vec<F> scale(const F& k, const Vec<F>& a, const typename F::Elem& c)
{
    if (k.is_zero(c)) return {};
    Vec<F> r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = k.mul(a[i], c);
    trim(k, r);
    return r;
}

template <class F>
Vec<F> mul(const F& k, const Vec<F>& a, const Vec<F>& b)
{
    if (a.empty() || b.empty()) return {};
    Vec<F> r(a.size() + b.size() - 1, k.zero());
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (k.is_zero(a[i])) continue;
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = k.add(r[i + j], k.mul(a[i], b[j]));
    }
    trim(k, r);
    return r;
}

/// Multiplies by x^shift.
template <class F>
Vec<F> shift(const F& k, const Vec<F>& a, std::size_t n)
{
    if (a.empty()) return {};
    Vec<F> r(n, k.zero());
    r.insert(r.end(), a.begin(), a.end());
    return r;
}

template <class F>
std::pair<Vec<F>, Vec<F>> divrem(const F& k, const Vec<F>& a, const Vec<F>& b)
{
    if (b.empty()) fail(Errc::DivisionByZero, "polynomial division by zero");
    Vec<F> r = a;
    if (a.size() < b.size()) return {Vec<F>{}, std::move(r)};
    Vec<F> q(a.size() - b.size() + 1, k.zero());
    const auto lead_inv = k.inv(b.back());
    for (std::size_t i = q.size(); i-- > 0;) {
        const auto& top = r[i + b.size() - 1];
        if (k.is_zero(top)) continue;
        auto c = k.mul(top, lead_inv);
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = k.sub(r[i + j], k.mul(c, b[j]));
        q[i] = std::move(c);
    }
    trim(k, q);
    trim(k, r);
    return {std::move(q), std::move(r)};
}

template <class F>
Vec<F> rem(const F& k, const Vec<F>& a, const Vec<F>& b)
{
    return divrem(k, a, b).second;
}

/// Exact quotient; throws PreconditionError when b does not divide a.
template <class F>
Vec<F> divexact(const F& k, const Vec<F>& a, const Vec<F>& b)
{
    auto [q, r] = divrem(k, a, b);
    if (!r.empty()) fail(Errc::PreconditionError, "inexact polynomial division");
    return std::move(q);
}

template <class F>
Vec<F> make_monic(const F& k, const Vec<F>& a)
{
    if (a.empty() || k.is_one(a.back())) return a;
    return scale(k, a, k.inv(a.back()));
}

/// Monic gcd; gcd(0, 0) = 0.
template <class F>
Vec<F> gcd(const F& k, Vec<F> a, Vec<F> b)
{
    while (!b.empty()) {
        Vec<F> r = rem(k, a, b);
        a = std::move(b);
        b = std::move(r);
    }
    return make_monic(k, a);
}

template <class F>
Vec<F> derivative(const F& k, const Vec<F>& a)
{
    if (a.size() <= 1) return {};
    Vec<F> r(a.size() - 1);
    for (std::size_t i = 1; i < a.size(); ++i) r[i - 1] = k.mul(a[i], k.from_int(static_cast<long>(i)));
    trim(k, r);
    return r;
}

template <class F>
Vec<F> pow(const F& k, Vec<F> base, unsigned e)
{
    Vec<F> r = constant(k, k.one());
    while (e) {
        if (e & 1U) r = mul(k, r, base);
        e >>= 1U;
        if (e) base = mul(k, base, base);
    }
    return r;
}

/// base^e mod m.
template <class F>
Vec<F> powmod(const F& k, Vec<F> base, const mpz_class& e, const Vec<F>& m)
{
    Vec<F> r = rem(k, constant(k, k.one()), m);
    base = rem(k, base, m);
    if (sgn(e) == 0) return r;
    for (std::size_t i = mpz_sizeinbase(e.get_mpz_t(), 2); i-- > 0;) {
        r = rem(k, mul(k, r, r), m);
        if (mpz_tstbit(e.get_mpz_t(), i)) r = rem(k, mul(k, r, base), m);
    }
    return r;
}

} // namespace dedekind::dense
