#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "dedekind/coeff.hpp"
#include "dedekind/dense.hpp"
#include "dedekind/valued_field.hpp"

namespace dedekind {

/// Dense polynomial over the prime residue field F_q.
class ResiduePoly {
public:
    using Coeffs = std::vector<std::uint32_t>;

    ResiduePoly() = default;
    explicit ResiduePoly(std::uint32_t q) : q_(q) {}
    /// Coefficients by ascending degree, reduced mod q and trimmed.
    ResiduePoly(std::uint32_t q, const std::vector<long>& coeffs);
    static ResiduePoly from_canonical(std::uint32_t q, Coeffs coeffs);
    static ResiduePoly monomial(std::uint32_t q, std::uint32_t c, std::size_t degree);

    std::uint32_t modulus() const { return q_; }
    PrimeField field() const { return PrimeField{q_}; }
    const Coeffs& coeffs() const { return c_; }
    long degree() const { return static_cast<long>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    bool is_one() const { return c_.size() == 1 && c_[0] == 1; }
    bool is_monic() const { return !c_.empty() && c_.back() == 1; }
    ResidueElement coeff(std::size_t i) const { return ResidueElement(q_, i < c_.size() ? c_[i] : 0); }
    ResidueElement leading() const { return coeff(c_.empty() ? 0 : c_.size() - 1); }

    friend ResiduePoly operator+(const ResiduePoly& a, const ResiduePoly& b);
    friend ResiduePoly operator-(const ResiduePoly& a, const ResiduePoly& b);
    friend ResiduePoly operator*(const ResiduePoly& a, const ResiduePoly& b);
    friend bool operator==(const ResiduePoly&, const ResiduePoly&) = default;

    /// Degree first, then coefficients from the top down.
    friend bool operator<(const ResiduePoly& a, const ResiduePoly& b);

private:
    std::uint32_t q_ = 2;
    Coeffs c_;
};

std::pair<ResiduePoly, ResiduePoly> divrem(const ResiduePoly& a, const ResiduePoly& b);
ResiduePoly rem(const ResiduePoly& a, const ResiduePoly& b);
bool divides(const ResiduePoly& d, const ResiduePoly& a);
ResiduePoly gcd(const ResiduePoly& a, const ResiduePoly& b);
ResiduePoly monic(const ResiduePoly& a);
ResiduePoly derivative(const ResiduePoly& a);
ResiduePoly pow(const ResiduePoly& a, unsigned e);

std::string to_string(const ResiduePoly& p, std::string_view var = "x");

} // namespace dedekind
