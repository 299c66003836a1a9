#pragma once

// Sparse polynomials in the base-field variables X and Y.
//
// Terms live in an exponent map ordered by total degree, then lex (X
// before Y).  Division and gcd convert to a recursive dense form
// F[X][Y] (outer index = Y degree) and use primitive pseudo-remainder
// sequences with univariate gcds for the contents.

#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "dedekind/dense.hpp"
#include "dedekind/error.hpp"

namespace dedekind {

struct Monomial {
    std::uint32_t x = 0;
    std::uint32_t y = 0;

    std::uint32_t total() const { return x + y; }
    friend bool operator==(const Monomial&, const Monomial&) = default;
};

/// Total degree first, then lex with X dominant.
struct MonomialOrder {
    bool operator()(const Monomial& a, const Monomial& b) const
    {
        if (a.total() != b.total()) return a.total() < b.total();
        if (a.x != b.x) return a.x < b.x;
        return a.y < b.y;
    }
};

template <class F>
class MPoly {
public:
    using Elem = typename F::Elem;
    using Terms = std::map<Monomial, Elem, MonomialOrder>;

    MPoly() = default;
    explicit MPoly(F field) : field_(std::move(field)) {}

    static MPoly constant(const F& k, const Elem& c) { return monomial(k, c, {}); }
    static MPoly monomial(const F& k, const Elem& c, Monomial m)
    {
        MPoly r(k);
        if (!k.is_zero(c)) r.terms_.emplace(m, c);
        return r;
    }

    const F& field() const { return field_; }
    const Terms& terms() const { return terms_; }

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == Monomial{}); }
    Elem constant_value() const
    {
        if (terms_.empty()) return field_.zero();
        auto it = terms_.find(Monomial{});
        return it == terms_.end() ? field_.zero() : it->second;
    }
    /// Leading term under MonomialOrder; requires nonzero.
    const std::pair<const Monomial, Elem>& leading() const { return *terms_.rbegin(); }

    std::uint32_t degree_x() const
    {
        std::uint32_t d = 0;
        for (const auto& [m, c] : terms_) d = std::max(d, m.x);
        return d;
    }
    std::uint32_t degree_y() const
    {
        std::uint32_t d = 0;
        for (const auto& [m, c] : terms_) d = std::max(d, m.y);
        return d;
    }

    void add_term(Monomial m, const Elem& c)
    {
        if (field_.is_zero(c)) return;
        auto [it, inserted] = terms_.try_emplace(m, c);
        if (!inserted) {
            it->second = field_.add(it->second, c);
            if (field_.is_zero(it->second)) terms_.erase(it);
        }
    }

    MPoly operator-() const
    {
        MPoly r(field_);
        for (const auto& [m, c] : terms_) r.terms_.emplace_hint(r.terms_.end(), m, field_.neg(c));
        return r;
    }
    MPoly& operator+=(const MPoly& o)
    {
        for (const auto& [m, c] : o.terms_) add_term(m, c);
        return *this;
    }
    MPoly& operator-=(const MPoly& o)
    {
        for (const auto& [m, c] : o.terms_) add_term(m, field_.neg(c));
        return *this;
    }
    friend MPoly operator+(MPoly a, const MPoly& b) { return a += b; }
    friend MPoly operator-(MPoly a, const MPoly& b) { return a -= b; }
    friend MPoly operator*(const MPoly& a, const MPoly& b)
    {
        MPoly r(a.field_);
        for (const auto& [ma, ca] : a.terms_) {
            for (const auto& [mb, cb] : b.terms_) {
                r.add_term({ma.x + mb.x, ma.y + mb.y}, a.field_.mul(ca, cb));
            }
        }
        return r;
    }
    MPoly scaled(const Elem& c) const
    {
        MPoly r(field_);
        if (field_.is_zero(c)) return r;
        for (const auto& [m, v] : terms_) r.terms_.emplace_hint(r.terms_.end(), m, field_.mul(v, c));
        return r;
    }

    friend bool operator==(const MPoly& a, const MPoly& b) { return a.terms_ == b.terms_; }

private:
    F field_{};
    Terms terms_;
};

namespace detail {

template <class F>
using Rec = std::vector<dense::Vec<F>>;

template <class F>
Rec<F> to_rec(const MPoly<F>& p)
{
    const F& k = p.field();
    Rec<F> r;
    if (p.is_zero()) return r;
    r.resize(p.degree_y() + 1);
    for (const auto& [m, c] : p.terms()) {
        auto& row = r[m.y];
        if (row.size() <= m.x) row.resize(m.x + 1, k.zero());
        row[m.x] = c;
    }
    return r;
}

template <class F>
MPoly<F> from_rec(const F& k, const Rec<F>& r)
{
    MPoly<F> p(k);
    for (std::size_t j = 0; j < r.size(); ++j) {
        for (std::size_t i = 0; i < r[j].size(); ++i) {
            p.add_term({static_cast<std::uint32_t>(i), static_cast<std::uint32_t>(j)}, r[j][i]);
        }
    }
    return p;
}

template <class F>
void rec_trim(Rec<F>& a)
{
    while (!a.empty() && a.back().empty()) a.pop_back();
}

template <class F>
dense::Vec<F> rec_content(const F& k, const Rec<F>& a)
{
    dense::Vec<F> g;
    for (const auto& c : a) {
        g = dense::gcd(k, std::move(g), c);
        if (g.size() == 1) break;
    }
    return g;
}

template <class F>
Rec<F> rec_divexact_coeff(const F& k, const Rec<F>& a, const dense::Vec<F>& c)
{
    Rec<F> r(a.size());
    for (std::size_t j = 0; j < a.size(); ++j) {
        if (!a[j].empty()) r[j] = dense::divexact(k, a[j], c);
    }
    return r;
}

template <class F>
Rec<F> rec_primitive(const F& k, const Rec<F>& a)
{
    if (a.empty()) return a;
    const auto c = rec_content(k, a);
    if (c.size() == 1 && k.is_one(c[0])) return a;
    return rec_divexact_coeff(k, a, c);
}

// Pseudo-remainder of a by b with respect to Y.
template <class F>
Rec<F> rec_prem(const F& k, Rec<F> a, const Rec<F>& b)
{
    const auto& lb = b.back();
    while (!a.empty() && a.size() >= b.size()) {
        const std::size_t shift = a.size() - b.size();
        const dense::Vec<F> la = a.back();
        for (auto& c : a) c = dense::mul(k, c, lb);
        for (std::size_t j = 0; j < b.size(); ++j) {
            a[j + shift] = dense::sub(k, a[j + shift], dense::mul(k, la, b[j]));
        }
        rec_trim<F>(a);
    }
    return a;
}

// Exact division in F[X][Y]; throws PreconditionError when inexact.
template <class F>
Rec<F> rec_divexact(const F& k, Rec<F> a, const Rec<F>& b)
{
    if (b.empty()) fail(Errc::DivisionByZero, "polynomial division by zero");
    if (a.empty()) return {};
    if (a.size() < b.size()) fail(Errc::PreconditionError, "inexact polynomial division");
    Rec<F> q(a.size() - b.size() + 1);
    while (!a.empty() && a.size() >= b.size()) {
        const std::size_t shift = a.size() - b.size();
        dense::Vec<F> t = dense::divexact(k, a.back(), b.back());
        for (std::size_t j = 0; j < b.size(); ++j) {
            a[j + shift] = dense::sub(k, a[j + shift], dense::mul(k, t, b[j]));
        }
        q[shift] = std::move(t);
        rec_trim<F>(a);
    }
    if (!a.empty()) fail(Errc::PreconditionError, "inexact polynomial division");
    rec_trim<F>(q);
    return q;
}

template <class F>
Rec<F> rec_mul_coeff(const F& k, const Rec<F>& a, const dense::Vec<F>& c)
{
    Rec<F> r(a.size());
    for (std::size_t j = 0; j < a.size(); ++j) r[j] = dense::mul(k, a[j], c);
    rec_trim<F>(r);
    return r;
}

} // namespace detail

/// Leading coefficient (under MonomialOrder) scaled to one.
template <class F>
MPoly<F> normalized(const MPoly<F>& p)
{
    if (p.is_zero()) return p;
    const auto& lc = p.leading().second;
    if (p.field().is_one(lc)) return p;
    return p.scaled(p.field().inv(lc));
}

template <class F>
MPoly<F> divexact(const MPoly<F>& a, const MPoly<F>& b)
{
    const F& k = a.field();
    if (b.is_constant()) {
        if (b.is_zero()) fail(Errc::DivisionByZero, "polynomial division by zero");
        return a.scaled(k.inv(b.constant_value()));
    }
    return detail::from_rec(k, detail::rec_divexact(k, detail::to_rec(a), detail::to_rec(b)));
}

/// gcd normalized so that its leading coefficient is one; gcd(0, 0) = 0.
template <class F>
MPoly<F> gcd(const MPoly<F>& a, const MPoly<F>& b)
{
    const F& k = a.field();
    if (a.is_zero()) return normalized(b);
    if (b.is_zero()) return normalized(a);
    if (a.is_constant() || b.is_constant()) return MPoly<F>::constant(k, k.one());

    auto ra = detail::to_rec(a);
    auto rb = detail::to_rec(b);
    const auto ca = detail::rec_content(k, ra);
    const auto cb = detail::rec_content(k, rb);
    const auto c = dense::gcd(k, ca, cb);
    ra = detail::rec_divexact_coeff(k, ra, ca);
    rb = detail::rec_divexact_coeff(k, rb, cb);
    if (ra.size() < rb.size()) std::swap(ra, rb);
    while (!rb.empty()) {
        auto r = detail::rec_primitive(k, detail::rec_prem(k, ra, rb));
        ra = std::move(rb);
        rb = std::move(r);
    }
    // ra is primitive; if it has Y-degree 0 it is a unit of F[X][Y] over the content.
    if (ra.size() == 1) ra = {dense::constant(k, k.one())};
    return normalized(detail::from_rec(k, detail::rec_mul_coeff(k, ra, c)));
}

} // namespace dedekind
