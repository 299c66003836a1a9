#pragma once

// Valued base fields (K, nu) with exact arithmetic.
//
//   PAdicRationals(p)        K = Q,        nu = nu_p,                          Gamma = Z
//   LexBivariate(q)          K = F_q(X,Y), nu = lex-minimal exponent pair,     Gamma = Z^2 lex
//   LambdaTrivial(q)         K = F_q(X),   w(sum a_i X^i) = min{i}*lambda,      Gamma = lambda*Z
//   LambdaComposite(p, d)    K = Q(X),     w(sum a_i X^i) = min{nu_p(a_i) + i*sqrt(d)}
//
// Every variant has a finite prime residue field and a unique term of
// minimal value in each nonzero polynomial, so residues are ratios of
// minimal-term coefficients.

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <variant>

#include <gmpxx.h>

#include "dedekind/coeff.hpp"
#include "dedekind/ratfunc.hpp"
#include "dedekind/valuegroup.hpp"

namespace dedekind {

enum class ValuationKind : std::uint8_t {
    PAdicRationals,
    LexBivariate,
    LambdaTrivial,
    LambdaComposite,
};

struct ValuationDescriptor {
    ValuationKind kind = ValuationKind::PAdicRationals;
    /// Residue characteristic (= q, since only prime residue fields are supported).
    std::uint32_t p = 2;
    /// d with lambda = sqrt(d); 0 leaves lambda symbolic (LambdaTrivial only).
    std::uint32_t radicand = 0;

    static ValuationDescriptor padic(std::uint32_t p);
    static ValuationDescriptor lex(std::uint32_t q);
    static ValuationDescriptor lambda_trivial(std::uint32_t q, std::uint32_t radicand = 0);
    static ValuationDescriptor lambda_composite(std::uint32_t p, std::uint32_t radicand);

    GroupDescriptor group() const;
    /// Q-based variants store rational coefficients; the others F_q.
    bool rational_coefficients() const
    {
        return kind == ValuationKind::PAdicRationals || kind == ValuationKind::LambdaComposite;
    }
    bool has_variable(char v) const;
    PrimeField residue_field() const { return PrimeField{p}; }

    friend bool operator==(const ValuationDescriptor&, const ValuationDescriptor&) = default;
};

/// "qp:5", "lex:F2", "lambda-trivial:F3:sqrt2", "lambda-composite:p2:sqrt2".
std::string to_string(const ValuationDescriptor& d);
ValuationDescriptor parse_descriptor(std::string_view text);

class ResidueElement {
public:
    ResidueElement() = default;
    ResidueElement(std::uint32_t q, long value) : q_(q), value_(PrimeField{q}.from_int(value)) {}

    std::uint32_t modulus() const { return q_; }
    std::uint32_t value() const { return value_; }

    friend ResidueElement operator+(ResidueElement a, ResidueElement b) { return a.with(a.ctx().add(a.value_, b.check(a).value_)); }
    friend ResidueElement operator-(ResidueElement a, ResidueElement b) { return a.with(a.ctx().sub(a.value_, b.check(a).value_)); }
    friend ResidueElement operator*(ResidueElement a, ResidueElement b) { return a.with(a.ctx().mul(a.value_, b.check(a).value_)); }
    ResidueElement inverse() const { return with(ctx().inv(value_)); }
    friend bool operator==(const ResidueElement&, const ResidueElement&) = default;

private:
    PrimeField ctx() const { return PrimeField{q_}; }
    ResidueElement with(std::uint32_t v) const
    {
        ResidueElement r = *this;
        r.value_ = v;
        return r;
    }
    const ResidueElement& check(const ResidueElement& other) const
    {
        if (q_ != other.q_) fail(Errc::DomainError, "residue fields differ");
        return *this;
    }

    std::uint32_t q_ = 2;
    std::uint32_t value_ = 0;
};

class FieldElement {
public:
    using QFunc = RationalFunction<RationalField>;
    using PFunc = RationalFunction<PrimeField>;

    FieldElement() : FieldElement(ValuationDescriptor{}) {}
    explicit FieldElement(const ValuationDescriptor& d);

    static FieldElement zero(const ValuationDescriptor& d) { return FieldElement(d); }
    static FieldElement one(const ValuationDescriptor& d) { return from_integer(d, 1); }
    static FieldElement from_integer(const ValuationDescriptor& d, const mpz_class& n);
    /// a/b; over F_q requires b to be invertible mod q.
    static FieldElement from_rational(const ValuationDescriptor& d, const mpq_class& r);
    /// c * X^i * Y^j with an integer coefficient c.
    static FieldElement monomial(const ValuationDescriptor& d, const mpz_class& c, Monomial m);
    /// The base-field variable 'X' or 'Y'; DomainError if absent from K.
    static FieldElement variable(const ValuationDescriptor& d, char name);

    const ValuationDescriptor& descriptor() const { return desc_; }
    bool is_zero() const;
    bool is_one() const;
    /// Constant with value in the prime subfield / Q.
    bool is_constant() const;

    FieldElement operator-() const;
    friend FieldElement operator+(const FieldElement& a, const FieldElement& b);
    friend FieldElement operator-(const FieldElement& a, const FieldElement& b);
    friend FieldElement operator*(const FieldElement& a, const FieldElement& b);
    friend FieldElement operator/(const FieldElement& a, const FieldElement& b);
    FieldElement& operator+=(const FieldElement& o) { return *this = *this + o; }
    FieldElement& operator-=(const FieldElement& o) { return *this = *this - o; }
    FieldElement& operator*=(const FieldElement& o) { return *this = *this * o; }
    friend bool operator==(const FieldElement& a, const FieldElement& b);

    FieldElement inverse() const;
    FieldElement recanonicalized() const;

    const std::variant<QFunc, PFunc>& value() const { return value_; }

private:
    FieldElement(const ValuationDescriptor& d, QFunc v);
    FieldElement(const ValuationDescriptor& d, PFunc v);

    ValuationDescriptor desc_;
    std::variant<QFunc, PFunc> value_;
};

FieldElement pow(FieldElement x, long n);

/// nu(x); Infinity for x = 0.
GroupElement valuation(const FieldElement& x);
bool in_valuation_ring(const FieldElement& x);
bool in_maximal_ideal(const FieldElement& x);

/// Image in k_nu of a unit; NotAUnit unless valuation(x) == 0.
ResidueElement residue(const FieldElement& x);
/// Canonical representative: integer in [0, p) or a constant of F_q.
FieldElement lift(const ResidueElement& r, const ValuationDescriptor& d);

/// Element of value min(Gamma^+), or nullopt when Gamma^+ has no minimum.
std::optional<FieldElement> uniformizer(const ValuationDescriptor& d);
/// A prime power, monomial, or product realizing the given finite value.
FieldElement element_of_value(const GroupElement& g, const ValuationDescriptor& d);

std::string to_string(const FieldElement& x);

} // namespace dedekind
