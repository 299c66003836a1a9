#pragma once

// Coefficient field contexts.  Algorithms are written against a context
// object (zero/one/add/mul/inv ...) so the same code runs over Q and F_p.

#include <cstdint>
#include <string>

#include <gmpxx.h>

#include "dedekind/error.hpp"

namespace dedekind {

struct RationalField {
    using Elem = mpq_class;

    Elem zero() const { return 0; }
    Elem one() const { return 1; }
    Elem from_int(long v) const { return v; }
    Elem from_mpz(const mpz_class& v) const { return Elem(v); }
    bool is_zero(const Elem& a) const { return sgn(a) == 0; }
    bool is_one(const Elem& a) const { return a == 1; }
    Elem add(const Elem& a, const Elem& b) const { return a + b; }
    Elem sub(const Elem& a, const Elem& b) const { return a - b; }
    Elem mul(const Elem& a, const Elem& b) const { return a * b; }
    Elem neg(const Elem& a) const { return -a; }
    Elem inv(const Elem& a) const
    {
        if (is_zero(a)) fail(Errc::DivisionByZero, "division by zero in Q");
        return 1 / a;
    }
    Elem div(const Elem& a, const Elem& b) const { return a * inv(b); }
    std::string str(const Elem& a) const { return a.get_str(); }

    friend bool operator==(const RationalField&, const RationalField&) = default;
};

/// F_p for a prime p < 2^31.  Elements are canonical representatives in [0, p).
struct PrimeField {
    using Elem = std::uint32_t;

    std::uint32_t p = 2;

    Elem zero() const { return 0; }
    Elem one() const { return 1 % p; }
    Elem from_int(long v) const
    {
        long r = v % static_cast<long>(p);
        return static_cast<Elem>(r < 0 ? r + static_cast<long>(p) : r);
    }
    Elem from_mpz(const mpz_class& v) const
    {
        mpz_class r;
        mpz_fdiv_r_ui(r.get_mpz_t(), v.get_mpz_t(), p);
        return static_cast<Elem>(r.get_ui());
    }
    bool is_zero(Elem a) const { return a == 0; }
    bool is_one(Elem a) const { return a == 1; }
    Elem add(Elem a, Elem b) const
    {
        std::uint64_t s = std::uint64_t(a) + b;
        return static_cast<Elem>(s >= p ? s - p : s);
    }
    Elem sub(Elem a, Elem b) const { return a >= b ? a - b : static_cast<Elem>(std::uint64_t(a) + p - b); }
    Elem mul(Elem a, Elem b) const { return static_cast<Elem>((std::uint64_t(a) * b) % p); }
    Elem neg(Elem a) const { return a == 0 ? 0 : p - a; }
    Elem pow(Elem a, std::uint64_t e) const
    {
        Elem r = one();
        while (e) {
            if (e & 1) r = mul(r, a);
            a = mul(a, a);
            e >>= 1;
        }
        return r;
    }
    Elem inv(Elem a) const
    {
        if (a == 0) fail(Errc::DivisionByZero, "division by zero in F_" + std::to_string(p));
        // Extended Euclid on (a, p).
        std::int64_t t = 0, new_t = 1;
        std::int64_t r = p, new_r = a;
        while (new_r != 0) {
            std::int64_t q = r / new_r;
            std::int64_t tmp = t - q * new_t;
            t = new_t;
            new_t = tmp;
            tmp = r - q * new_r;
            r = new_r;
            new_r = tmp;
        }
        if (t < 0) t += p;
        return static_cast<Elem>(t);
    }
    Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }
    std::string str(Elem a) const { return std::to_string(a); }

    friend bool operator==(const PrimeField&, const PrimeField&) = default;
};

bool is_prime(std::uint64_t n);

} // namespace dedekind
