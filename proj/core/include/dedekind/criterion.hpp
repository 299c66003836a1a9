#pragma once

// Integral closedness of R_nu[alpha] for a root alpha of a monic,
// integral, separable, irreducible f.
//
// The core test divides f by a monic lift phi_i of every residue factor
// phi_i-bar with multiplicity l_i >= 2 and compares the Gauss value of
// the remainder r_i with sigma = min(Gamma^+):
//
//     closed  <=>  nuG(r_i) == sigma  for every i with l_i >= 2.
//
// With no repeated residue factor the ring is always closed; with a
// repeated factor and no minimum in Gamma^+ it never is.  Two equivalent
// formulations (f = prod phi_i^l_i + pi*T, and M = (f - prod phi_i^l_i)/pi)
// are provided for cross-checking.

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "dedekind/poly.hpp"
#include "dedekind/residue_factor.hpp"

namespace dedekind {

enum class Verdict {
    Closed,
    NotClosed,
    /// NotClosed because Gamma^+ has no minimum while some l_i >= 2.
    GroupHasNoMinWithRepeatedFactor,
};

enum class IrreducibilityMode {
    /// Refuse unless certify_irreducible produces a certificate.
    Strict,
    /// The caller vouches for irreducibility; recorded in the report.
    Assert,
};

enum class Irreducibility {
    CertifiedResidueIrreducible,
    CertifiedEisenstein,
    AssertedByCaller,
    Unknown,
};

std::string_view verdict_name(Verdict v);
std::string_view irreducibility_name(Irreducibility c);
inline bool is_closed(Verdict v) { return v == Verdict::Closed; }

using LiftChooser = std::function<Poly(const ResiduePoly&, const ValuationDescriptor&)>;

struct CheckOptions {
    IrreducibilityMode mode = IrreducibilityMode::Assert;
    std::size_t max_degree = kDefaultDegreeCap;
    /// Monic lift of each residue factor; canonical coefficient lifts when empty.
    LiftChooser lift;
};

struct FactorCertificate {
    ResiduePoly phi_bar;
    Poly phi;
    unsigned l = 0;
    Poly quotient;
    Poly r;
    GroupElement r_value;
    /// r_value == sigma; only meaningful when l >= 2.
    bool passes = true;
};

struct DedekindReport {
    Poly f;
    ResidueFactorization factorization;
    Verdict verdict = Verdict::Closed;
    std::optional<GroupElement> sigma;
    std::vector<FactorCertificate> certificates;
    bool separable = true;
    Irreducibility irreducibility = Irreducibility::AssertedByCaller;

    bool closed() const { return is_closed(verdict); }
    /// Indices of certificates with l >= 2.
    std::vector<std::size_t> repeated() const;
};

DedekindReport dedekind_test(const Poly& f, const CheckOptions& options = {});

struct ErshovResult {
    Verdict verdict = Verdict::Closed;
    /// prod phi_i^{l_i} over the lifts.
    Poly product;
    /// f - product.
    Poly difference;
    /// Witness f = product + pi*T with nuG(T) = 0; absent when difference = 0.
    std::optional<FieldElement> pi;
    std::optional<Poly> t;
    std::optional<ResiduePoly> t_bar;
};

ErshovResult ershov_test(const Poly& f, const CheckOptions& options = {});

struct MFormResult {
    Verdict verdict = Verdict::Closed;
    FieldElement pi;
    Poly m;
    ResiduePoly m_bar;
};

/// Requires a minimum sigma (NoMinimum otherwise) and a repeated residue
/// factor (PreconditionError otherwise).
MFormResult dedekind_test_m_form(const Poly& f, const CheckOptions& options = {});

enum class EisensteinReason {
    Eisenstein,
    NoMinimum,
    SeveralResidueFactors,
    RemainderValue,
};

std::string_view eisenstein_reason_name(EisensteinReason r);

struct EisensteinResult {
    bool eisenstein = false;
    EisensteinReason reason = EisensteinReason::RemainderValue;
    std::optional<Poly> psi;
    std::optional<Poly> r;
    std::optional<GroupElement> r_value;
    std::optional<GroupElement> sigma;
};

/// g-bar a positive power of one irreducible psi-bar and nuG(g mod psi) == sigma.
EisensteinResult is_nu_eisenstein(const Poly& g);

/// Residue-irreducible or Eisenstein certificate; Unknown otherwise.
Irreducibility certify_irreducible(const Poly& f);

struct RamificationRow {
    Poly phi;
    unsigned e = 0;
    long f = 0;
    /// "sigma/l" rendering of w_i(phi_i(alpha)) when l >= 2; informational.
    std::optional<std::string> phi_alpha_value;
};

struct RamificationReport {
    std::size_t s = 0;
    std::vector<RamificationRow> rows;
    long total = 0;
};

/// PreconditionError unless report.verdict is Closed.
RamificationReport ramification_report(const DedekindReport& report);

/// Fast path for f = X^n - a with a in M_nu, n >= 2.
DedekindReport radical_test(long n, const FieldElement& a, const CheckOptions& options = {});

struct RadicalTransform {
    long n = 0;
    mpz_class m;
    mpz_class u;
    mpz_class v;
    FieldElement pi;
    FieldElement a_transformed;
    Poly g;
    bool eisenstein = false;
};

/// With nu(a) = m*sigma and gcd(m, n) = 1, finds m*v - n*u = 1 with
/// 0 <= v < n and A = a^v / pi^(n*u) of value sigma; g = X^n - A.
RadicalTransform radical_transform(long n, const FieldElement& a);

} // namespace dedekind
