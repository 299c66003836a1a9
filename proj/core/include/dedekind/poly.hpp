#pragma once

// Dense univariate polynomials over a valued base field K.

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "dedekind/residue_poly.hpp"
#include "dedekind/valued_field.hpp"

namespace dedekind {

inline constexpr std::size_t kDefaultDegreeCap = 32;

class Poly {
public:
    Poly() = default;
    explicit Poly(const ValuationDescriptor& d) : desc_(d) {}
    /// Ascending coefficients; trailing zeros are trimmed.
    Poly(const ValuationDescriptor& d, std::vector<FieldElement> coeffs);

    static Poly constant(const FieldElement& c);
    static Poly monomial(const FieldElement& c, std::size_t degree);
    /// The main variable.
    static Poly x(const ValuationDescriptor& d);

    const ValuationDescriptor& descriptor() const { return desc_; }
    const std::vector<FieldElement>& coeffs() const { return c_; }
    FieldElement coeff(std::size_t i) const { return i < c_.size() ? c_[i] : FieldElement::zero(desc_); }
    const FieldElement& leading() const { return c_.back(); }
    long degree() const { return static_cast<long>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    bool is_monic() const { return !c_.empty() && c_.back().is_one(); }
    /// All coefficients in R_nu.
    bool is_integral() const;

    Poly operator-() const;
    friend Poly operator+(const Poly& a, const Poly& b);
    friend Poly operator-(const Poly& a, const Poly& b);
    friend Poly operator*(const Poly& a, const Poly& b);
    Poly scaled(const FieldElement& c) const;
    friend bool operator==(const Poly& a, const Poly& b) { return a.desc_ == b.desc_ && a.c_ == b.c_; }

private:
    void trim();

    ValuationDescriptor desc_{};
    std::vector<FieldElement> c_;
};

Poly pow(const Poly& a, unsigned e);

/// min of the coefficient valuations; Infinity for the zero polynomial.
GroupElement gauss_valuation(const Poly& p);

struct Division {
    Poly quotient;
    Poly remainder;
};

/// f = q*phi + r with deg r < deg phi, for monic phi of degree >= 1.
Division euclid_divide(const Poly& f, const Poly& phi);
/// Division over K by any nonzero divisor.
Division divide(const Poly& f, const Poly& g);

/// Coefficientwise residue; NotIntegral if some coefficient has negative value.
ResiduePoly reduce(const Poly& p);
/// Monic lift with canonical coefficient representatives.
Poly lift_monic(const ResiduePoly& p, const ValuationDescriptor& d);
/// Coefficientwise canonical lift of any residue polynomial.
Poly lift(const ResiduePoly& p, const ValuationDescriptor& d);

Poly derivative(const Poly& p);
/// Monic gcd over K; PreconditionError for gcd(0, 0).
Poly gcd_over_K(const Poly& a, const Poly& b);
bool is_separable(const Poly& f);

/// Throws SizeLimit when deg p exceeds cap.
void check_degree(const Poly& p, std::size_t cap = kDefaultDegreeCap);

/// Renders in the CLI grammar, e.g. "x^3 + (Y)*x + (X)".
std::string to_string(const Poly& p, std::string_view var = "x");

} // namespace dedekind
