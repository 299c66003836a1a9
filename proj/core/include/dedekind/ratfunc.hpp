#pragma once

#include <utility>

#include "dedekind/mpoly.hpp"

namespace dedekind {

/// Reduced fraction num/den of MPoly, with gcd(num, den) = 1 and the
/// leading coefficient of den equal to one.  Zero is 0/1.
template <class F>
class RationalFunction {
public:
    using Poly = MPoly<F>;
    using Elem = typename F::Elem;

    RationalFunction() : RationalFunction(F{}) {}
    explicit RationalFunction(const F& k) : num_(k), den_(Poly::constant(k, k.one())) {}
    explicit RationalFunction(Poly num) : num_(std::move(num)), den_(Poly::constant(num_.field(), num_.field().one())) {}

    /// Reduces and normalizes an arbitrary fraction.
    RationalFunction(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den))
    {
        if (den_.is_zero()) fail(Errc::DivisionByZero, "zero denominator");
        canonicalize();
    }

    static RationalFunction constant(const F& k, const Elem& c) { return RationalFunction(Poly::constant(k, c)); }

    const F& field() const { return num_.field(); }
    const Poly& num() const { return num_; }
    const Poly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_constant() const { return num_.is_constant() && den_.is_constant(); }
    bool is_polynomial() const { return den_.is_constant(); }

    RationalFunction operator-() const
    {
        RationalFunction r = *this;
        r.num_ = -r.num_;
        return r;
    }

    friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b)
    {
        if (a.den_ == b.den_) return from_parts(a.num_ + b.num_, a.den_);
        return from_parts(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) { return a + (-b); }
    friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b)
    {
        if (a.is_zero() || b.is_zero()) return RationalFunction(a.field());
        if (a.is_polynomial() && b.is_polynomial()) {
            // Both denominators are the constant one.
            RationalFunction r(a.field());
            r.num_ = a.num_ * b.num_;
            return r;
        }
        // Cross-cancel so the result is already reduced.
        const Poly g1 = gcd(a.num_, b.den_);
        const Poly g2 = gcd(b.num_, a.den_);
        RationalFunction r(a.field());
        r.num_ = divexact(a.num_, g1) * divexact(b.num_, g2);
        r.den_ = divexact(a.den_, g2) * divexact(b.den_, g1);
        r.normalize_den();
        return r;
    }
    RationalFunction inverse() const
    {
        if (is_zero()) fail(Errc::DivisionByZero, "division by zero");
        RationalFunction r(field());
        r.num_ = den_;
        r.den_ = num_;
        r.normalize_den();
        return r;
    }
    friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) { return a * b.inverse(); }

    friend bool operator==(const RationalFunction& a, const RationalFunction& b)
    {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }

    /// Re-runs reduction; a canonical value is a fixed point.
    RationalFunction recanonicalized() const { return RationalFunction(num_, den_); }

private:
    static RationalFunction from_parts(Poly num, Poly den)
    {
        RationalFunction r(num.field());
        r.num_ = std::move(num);
        r.den_ = std::move(den);
        r.canonicalize();
        return r;
    }

    void canonicalize()
    {
        const F& k = den_.field();
        if (num_.is_zero()) {
            den_ = Poly::constant(k, k.one());
            return;
        }
        if (!den_.is_constant()) {
            Poly g = gcd(num_, den_);
            if (!g.is_constant()) {
                num_ = divexact(num_, g);
                den_ = divexact(den_, g);
            }
        }
        normalize_den();
    }

    void normalize_den()
    {
        const F& k = den_.field();
        const Elem lc = den_.leading().second;
        if (k.is_one(lc)) return;
        const Elem inv = k.inv(lc);
        num_ = num_.scaled(inv);
        den_ = den_.scaled(inv);
    }

    Poly num_;
    Poly den_;
};

} // namespace dedekind
