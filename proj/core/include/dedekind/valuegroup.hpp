#pragma once

// Totally ordered abelian value groups.
//
// Four concrete groups are supported:
//   IntegerRankOne   Z with the usual order
//   LexPairRankTwo   Z^2, first coordinate dominant
//   DenseQuadratic   Z + Z*sqrt(d) inside R, d > 0 not a square
//   ScaledInteger    lambda*Z, printed as multiples of "lambda"
//
// Coordinates are arbitrary precision and every comparison is exact.

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace dedekind {

enum class GroupKind : std::uint8_t {
    IntegerRankOne,
    LexPairRankTwo,
    DenseQuadratic,
    ScaledInteger,
};

struct GroupDescriptor {
    GroupKind kind = GroupKind::IntegerRankOne;
    /// d with lambda = sqrt(d); only meaningful for DenseQuadratic.
    std::uint32_t radicand = 0;

    static GroupDescriptor integer() { return {GroupKind::IntegerRankOne, 0}; }
    static GroupDescriptor lex_pair() { return {GroupKind::LexPairRankTwo, 0}; }
    static GroupDescriptor scaled() { return {GroupKind::ScaledInteger, 0}; }
    /// Throws DomainError unless d > 1 is not a perfect square.
    static GroupDescriptor dense_quadratic(std::uint32_t d);

    friend bool operator==(const GroupDescriptor&, const GroupDescriptor&) = default;
};

std::string to_string(const GroupDescriptor& d);

class GroupElement {
public:
    /// Zero of IntegerRankOne.
    GroupElement() = default;

    static GroupElement zero(const GroupDescriptor& d);
    static GroupElement infinity(const GroupDescriptor& d);
    /// (a) for rank-one kinds, (a, b) for LexPair, a + b*lambda for DenseQuadratic.
    static GroupElement make(const GroupDescriptor& d, mpz_class a, mpz_class b = 0);

    const GroupDescriptor& descriptor() const { return desc_; }
    bool is_infinite() const { return infinite_; }
    const mpz_class& first() const { return a_; }
    const mpz_class& second() const { return b_; }

    bool is_zero() const { return !infinite_ && a_ == 0 && b_ == 0; }

    GroupElement operator-() const;
    GroupElement& operator+=(const GroupElement& rhs);
    GroupElement& operator-=(const GroupElement& rhs);
    friend GroupElement operator+(GroupElement lhs, const GroupElement& rhs) { return lhs += rhs; }
    friend GroupElement operator-(GroupElement lhs, const GroupElement& rhs) { return lhs -= rhs; }

    friend std::strong_ordering operator<=>(const GroupElement& x, const GroupElement& y);
    friend bool operator==(const GroupElement& x, const GroupElement& y)
    {
        return (x <=> y) == std::strong_ordering::equal;
    }

private:
    GroupDescriptor desc_{};
    bool infinite_ = false;
    mpz_class a_ = 0;
    mpz_class b_ = 0;
};

/// Total order; throws DomainError when descriptors differ.
std::strong_ordering compare(const GroupElement& x, const GroupElement& y);
GroupElement add(const GroupElement& x, const GroupElement& y);
GroupElement scalar_mul(const mpz_class& n, const GroupElement& x);
bool is_positive(const GroupElement& x);

/// Minimum of the positive cone, or nullopt for dense groups.
std::optional<GroupElement> min_positive(const GroupDescriptor& d);

/// If x == m * unit for an integer m, returns m.
std::optional<mpz_class> exact_quotient(const GroupElement& x, const GroupElement& unit);

/// A positive element strictly below the positive element g; only exists
/// for DenseQuadratic.  Built from continued-fraction convergents of sqrt(d).
std::optional<GroupElement> positive_below(const GroupElement& g);

std::string to_string(const GroupElement& x);
/// Parses the grammar produced by to_string for the given descriptor.
GroupElement parse_group_element(std::string_view text, const GroupDescriptor& d);

} // namespace dedekind
