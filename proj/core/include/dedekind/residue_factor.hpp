#pragma once

// Monic irreducible factorization over the prime residue field F_q.

#include <cstddef>
#include <cstdint>
#include <vector>

#include "dedekind/residue_poly.hpp"

namespace dedekind {

struct ResidueFactor {
    ResiduePoly phi;
    unsigned multiplicity = 0;

    friend bool operator==(const ResidueFactor&, const ResidueFactor&) = default;
};

/// f-bar = prod phi_i^{l_i}, phi_i pairwise distinct monic irreducibles,
/// sorted by degree and then by coefficients from the top down.
struct ResidueFactorization {
    std::uint32_t q = 2;
    std::vector<ResidueFactor> factors;

    std::size_t distinct_count() const { return factors.size(); }
    /// Indices i with l_i >= 2.
    std::vector<std::size_t> repeated() const;
    /// prod phi_i^{l_i} (monic).
    ResiduePoly product() const;
    /// sum l_i * deg(phi_i).
    long total_degree() const;

    friend bool operator==(const ResidueFactorization&, const ResidueFactorization&) = default;
};

/// Factors the monic associate of p; PreconditionError for constants.
ResidueFactorization factor(const ResiduePoly& p);

/// True iff p has no monic factor of degree in [1, deg/2].
bool is_irreducible(const ResiduePoly& p);

/// Squarefree decomposition of a monic polynomial: pairwise coprime
/// squarefree parts with their multiplicities (parts with equal
/// multiplicity are merged).
std::vector<ResidueFactor> squarefree_decomposition(const ResiduePoly& p);

/// All monic irreducibles of the given degree, in canonical order.
/// Memoized per (q, degree); safe to call from several threads.
const std::vector<ResiduePoly>& monic_irreducibles(std::uint32_t q, unsigned degree);

namespace detail {
/// The two splitting strategies behind factor(), exposed for cross-checks.
/// Both take a monic squarefree polynomial and return its monic
/// irreducible factors in canonical order.
std::vector<ResiduePoly> split_by_enumeration(const ResiduePoly& squarefree);
std::vector<ResiduePoly> split_by_cantor_zassenhaus(const ResiduePoly& squarefree);
} // namespace detail

} // namespace dedekind
