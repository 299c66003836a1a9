#pragma once

// Independent ground truth for cross-checking the criterion engine.
// Nothing here calls into criterion.hpp.

#include "dedekind/poly.hpp"
#include "dedekind/residue_factor.hpp"

namespace dedekind::oracle {

enum class Source {
    ClassicalGcdForm,
    QuadraticTable,
    ExhaustiveFactor,
};

/// Classical gcd form of Dedekind's criterion over (Q, nu_p): with
/// f-bar = prod g_i-bar^{e_i}, g = prod lift(g_i-bar), h = lift(f-bar / g-bar)
/// and T = (g*h - f)/p, Z_(p)[alpha] is maximal iff gcd(T-bar, g-bar, h-bar) = 1.
bool classical_dedekind_qp(const Poly& f);

/// Z[sqrt(d)] is p-maximal: always for odd p, and for p = 2 iff d != 1 mod 4.
/// d must be squarefree and != 0, 1.
bool quadratic_table(long d, long p);

bool is_squarefree(long d);

/// Factorization by exhaustive search for monic divisors; deg <= 6, q <= 9.
ResidueFactorization exhaustive_factor(const ResiduePoly& p);

} // namespace dedekind::oracle
