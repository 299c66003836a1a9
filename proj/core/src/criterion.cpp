#include "dedekind/criterion.hpp"

namespace dedekind {

std::string_view verdict_name(Verdict v)
{
    switch (v) {
    case Verdict::Closed: return "CLOSED";
    case Verdict::NotClosed: return "NOT_CLOSED";
    case Verdict::GroupHasNoMinWithRepeatedFactor: return "NOT_CLOSED";
    }
    return "?";
}

std::string_view irreducibility_name(Irreducibility c)
{
    switch (c) {
    case Irreducibility::CertifiedResidueIrreducible: return "CERTIFIED_RESIDUE_IRREDUCIBLE";
    case Irreducibility::CertifiedEisenstein: return "CERTIFIED_EISENSTEIN";
    case Irreducibility::AssertedByCaller: return "ASSERTED_BY_CALLER";
    case Irreducibility::Unknown: return "UNKNOWN";
    }
    return "?";
}

std::string_view eisenstein_reason_name(EisensteinReason r)
{
    switch (r) {
    case EisensteinReason::Eisenstein: return "EISENSTEIN";
    case EisensteinReason::NoMinimum: return "NO_MINIMUM";
    case EisensteinReason::SeveralResidueFactors: return "SEVERAL_RESIDUE_FACTORS";
    case EisensteinReason::RemainderValue: return "REMAINDER_VALUE";
    }
    return "?";
}

std::vector<std::size_t> DedekindReport::repeated() const
{
    std::vector<std::size_t> idx;
    for (std::size_t i = 0; i < certificates.size(); ++i) {
        if (certificates[i].l >= 2) idx.push_back(i);
    }
    return idx;
}

namespace {

void require_monic_integral(const Poly& f)
{
    if (f.degree() < 1) fail(Errc::PreconditionError, "polynomial must have degree >= 1");
    if (!f.is_monic()) fail(Errc::NotMonic, to_string(f) + " is not monic");
    if (!f.is_integral()) fail(Errc::NotIntegral, to_string(f) + " has a coefficient outside R_nu");
}

// Residue factorization with the chosen monic lifts, shared by all formulations.
struct Prepared {
    ResidueFactorization factorization;
    std::vector<Poly> lifts;
    std::optional<GroupElement> sigma;
    Irreducibility irreducibility = Irreducibility::AssertedByCaller;

    bool has_repeated() const { return !factorization.repeated().empty(); }
};

Prepared prepare(const Poly& f, const CheckOptions& options)
{
    require_monic_integral(f);
    check_degree(f, options.max_degree);
    if (!is_separable(f)) fail(Errc::InseparableInput, to_string(f) + " is inseparable");

    Prepared prep;
    prep.irreducibility = certify_irreducible(f);
    if (prep.irreducibility == Irreducibility::Unknown) {
        if (options.mode == IrreducibilityMode::Strict) {
            fail(Errc::IrreducibilityUncertified,
                 "no irreducibility certificate for " + to_string(f) + " (use assert mode to vouch for it)");
        }
        prep.irreducibility = Irreducibility::AssertedByCaller;
    }

    const auto& d = f.descriptor();
    prep.factorization = factor(reduce(f));
    prep.sigma = min_positive(d.group());
    for (const auto& [phi_bar, l] : prep.factorization.factors) {
        Poly phi = options.lift ? options.lift(phi_bar, d) : lift_monic(phi_bar, d);
        if (!phi.is_monic() || !(reduce(phi) == phi_bar)) {
            fail(Errc::PreconditionError, to_string(phi) + " is not a monic lift of " + to_string(phi_bar));
        }
        prep.lifts.push_back(std::move(phi));
    }
    return prep;
}

Poly lifted_product(const Poly& f, const Prepared& prep)
{
    Poly product = Poly::constant(FieldElement::one(f.descriptor()));
    for (std::size_t i = 0; i < prep.lifts.size(); ++i) {
        product = product * pow(prep.lifts[i], prep.factorization.factors[i].multiplicity);
    }
    return product;
}

Poly divide_coefficients(const Poly& p, const FieldElement& c)
{
    return p.scaled(c.inverse());
}

Verdict verdict_from(const Prepared& prep, bool all_pass)
{
    if (!prep.has_repeated()) return Verdict::Closed;
    if (!prep.sigma) return Verdict::GroupHasNoMinWithRepeatedFactor;
    return all_pass ? Verdict::Closed : Verdict::NotClosed;
}

} // namespace

DedekindReport dedekind_test(const Poly& f, const CheckOptions& options)
{
    const Prepared prep = prepare(f, options);
    DedekindReport report;
    report.f = f;
    report.factorization = prep.factorization;
    report.sigma = prep.sigma;
    report.separable = true;
    report.irreducibility = prep.irreducibility;

    bool all_pass = true;
    for (std::size_t i = 0; i < prep.lifts.size(); ++i) {
        FactorCertificate cert;
        cert.phi_bar = prep.factorization.factors[i].phi;
        cert.phi = prep.lifts[i];
        cert.l = prep.factorization.factors[i].multiplicity;
        auto [q, r] = euclid_divide(f, cert.phi);
        cert.quotient = std::move(q);
        cert.r = std::move(r);
        cert.r_value = gauss_valuation(cert.r);
        if (cert.l >= 2) {
            // phi-bar^2 | f-bar forces r-bar = 0.
            if (!is_positive(cert.r_value)) {
                fail(Errc::PreconditionError, "internal error: remainder of a repeated factor is not in M_nu[x]");
            }
            cert.passes = prep.sigma && cert.r_value == *prep.sigma;
            all_pass = all_pass && cert.passes;
        }
        report.certificates.push_back(std::move(cert));
    }
    report.verdict = verdict_from(prep, all_pass);
    return report;
}

ErshovResult ershov_test(const Poly& f, const CheckOptions& options)
{
    const Prepared prep = prepare(f, options);
    ErshovResult out;
    out.product = lifted_product(f, prep);
    out.difference = f - out.product;
    if (!out.difference.is_zero()) {
        const GroupElement value = gauss_valuation(out.difference);
        out.pi = element_of_value(value, f.descriptor());
        out.t = divide_coefficients(out.difference, *out.pi);
        out.t_bar = reduce(*out.t);
    }

    if (!prep.has_repeated()) {
        out.verdict = Verdict::Closed;
        return out;
    }
    if (!prep.sigma) {
        out.verdict = Verdict::GroupHasNoMinWithRepeatedFactor;
        return out;
    }
    if (!out.pi) {
        // f = prod phi_i^l_i with some l_i >= 2 cannot be separable.
        fail(Errc::PreconditionError, "internal error: repeated factor with f equal to the lifted product");
    }
    bool closed = valuation(*out.pi) == *prep.sigma;
    for (std::size_t i : prep.factorization.repeated()) {
        closed = closed && !divides(prep.factorization.factors[i].phi, *out.t_bar);
    }
    out.verdict = closed ? Verdict::Closed : Verdict::NotClosed;
    return out;
}

MFormResult dedekind_test_m_form(const Poly& f, const CheckOptions& options)
{
    const Prepared prep = prepare(f, options);
    if (!prep.sigma) fail(Errc::NoMinimum, "Gamma^+ has no minimum; use dedekind_test");
    if (!prep.has_repeated()) fail(Errc::PreconditionError, "no residue factor is repeated");

    MFormResult out;
    out.pi = *uniformizer(f.descriptor());
    out.m = divide_coefficients(f - lifted_product(f, prep), out.pi);
    if (!out.m.is_integral()) fail(Errc::NotIntegral, "internal error: M is not integral");
    out.m_bar = reduce(out.m);
    bool closed = true;
    for (std::size_t i : prep.factorization.repeated()) {
        closed = closed && !divides(prep.factorization.factors[i].phi, out.m_bar);
    }
    out.verdict = closed ? Verdict::Closed : Verdict::NotClosed;
    return out;
}

EisensteinResult is_nu_eisenstein(const Poly& g)
{
    require_monic_integral(g);
    const auto& d = g.descriptor();
    EisensteinResult out;
    out.sigma = min_positive(d.group());
    if (!out.sigma) {
        out.reason = EisensteinReason::NoMinimum;
        return out;
    }
    const ResidueFactorization fac = factor(reduce(g));
    if (fac.distinct_count() != 1) {
        out.reason = EisensteinReason::SeveralResidueFactors;
        return out;
    }
    out.psi = lift_monic(fac.factors.front().phi, d);
    out.r = euclid_divide(g, *out.psi).remainder;
    out.r_value = gauss_valuation(*out.r);
    out.eisenstein = *out.r_value == *out.sigma;
    out.reason = out.eisenstein ? EisensteinReason::Eisenstein : EisensteinReason::RemainderValue;
    return out;
}

Irreducibility certify_irreducible(const Poly& f)
{
    require_monic_integral(f);
    // f monic, so deg f-bar = deg f and a factorization over K would reduce to one of f-bar.
    if (is_irreducible(reduce(f))) return Irreducibility::CertifiedResidueIrreducible;
    if (is_nu_eisenstein(f).eisenstein) return Irreducibility::CertifiedEisenstein;
    return Irreducibility::Unknown;
}

RamificationReport ramification_report(const DedekindReport& report)
{
    if (!report.closed()) {
        fail(Errc::PreconditionError, "ramification data needs an integrally closed R_nu[alpha]");
    }
    RamificationReport out;
    out.s = report.certificates.size();
    for (const auto& cert : report.certificates) {
        RamificationRow row;
        row.phi = cert.phi;
        row.e = cert.l;
        row.f = cert.phi.degree();
        if (cert.l >= 2 && report.sigma) row.phi_alpha_value = to_string(*report.sigma) + "/" + std::to_string(cert.l);
        out.total += static_cast<long>(row.e) * row.f;
        out.rows.push_back(std::move(row));
    }
    if (out.total != report.f.degree()) {
        fail(Errc::PreconditionError, "internal error: sum of e_i*f_i differs from deg f");
    }
    return out;
}

DedekindReport radical_test(long n, const FieldElement& a, const CheckOptions& options)
{
    const auto& d = a.descriptor();
    if (n < 2) fail(Errc::PreconditionError, "radical test needs n >= 2");
    if (!in_maximal_ideal(a)) fail(Errc::PreconditionError, to_string(a) + " is not in M_nu");

    Poly f = Poly::monomial(FieldElement::one(d), static_cast<std::size_t>(n)) - Poly::constant(a);
    check_degree(f, options.max_degree);
    if (!is_separable(f)) fail(Errc::InseparableInput, to_string(f) + " is inseparable");

    DedekindReport report;
    report.f = f;
    report.irreducibility = certify_irreducible(f);
    if (report.irreducibility == Irreducibility::Unknown) {
        if (options.mode == IrreducibilityMode::Strict) {
            fail(Errc::IrreducibilityUncertified, "no irreducibility certificate for " + to_string(f));
        }
        report.irreducibility = Irreducibility::AssertedByCaller;
    }
    report.sigma = min_positive(d.group());

    // f-bar = x^n: a single residue factor x with multiplicity n.
    const ResiduePoly x_bar = ResiduePoly::monomial(d.p, 1, 1);
    report.factorization.q = d.p;
    report.factorization.factors.push_back({x_bar, static_cast<unsigned>(n)});

    FactorCertificate cert;
    cert.phi_bar = x_bar;
    cert.phi = Poly::x(d);
    cert.l = static_cast<unsigned>(n);
    cert.quotient = Poly::monomial(FieldElement::one(d), static_cast<std::size_t>(n - 1));
    cert.r = Poly::constant(-a);
    cert.r_value = valuation(a);
    cert.passes = report.sigma && cert.r_value == *report.sigma;
    report.verdict = !report.sigma ? Verdict::GroupHasNoMinWithRepeatedFactor
                                   : (cert.passes ? Verdict::Closed : Verdict::NotClosed);
    report.certificates.push_back(std::move(cert));
    return report;
}

RadicalTransform radical_transform(long n, const FieldElement& a)
{
    const auto& d = a.descriptor();
    if (n < 1) fail(Errc::PreconditionError, "radical transform needs n >= 1");
    const auto sigma = min_positive(d.group());
    if (!sigma) fail(Errc::NoMinimum, "Gamma^+ has no minimum in " + to_string(d));

    const GroupElement value = valuation(a);
    const auto m = exact_quotient(value, *sigma);
    if (!m || *m < 0) {
        fail(Errc::ValueNotMultipleOfSigma, "nu(a) = " + to_string(value) + " is not a non-negative multiple of " +
                                                to_string(*sigma));
    }
    mpz_class g, s, t;
    const mpz_class nz = n;
    mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), m->get_mpz_t(), nz.get_mpz_t());
    if (g != 1) fail(Errc::GcdNotOne, "gcd(m, n) = gcd(" + m->get_str() + ", " + nz.get_str() + ") is not 1");

    RadicalTransform out;
    out.n = n;
    out.m = *m;
    // s*m + t*n = 1; normalize v = s mod n into [0, n).
    mpz_fdiv_r(out.v.get_mpz_t(), s.get_mpz_t(), nz.get_mpz_t());
    out.u = (out.m * out.v - 1) / nz;
    if (out.m * out.v - nz * out.u != 1) fail(Errc::PreconditionError, "internal error: Bezout identity failed");

    out.pi = *uniformizer(d);
    const mpz_class pi_exponent = nz * out.u;
    if (!out.v.fits_slong_p() || !pi_exponent.fits_slong_p()) fail(Errc::SizeLimit, "exponents too large");
    out.a_transformed = pow(a, out.v.get_si()) / pow(out.pi, pi_exponent.get_si());
    if (!(valuation(out.a_transformed) == *sigma)) {
        fail(Errc::PreconditionError, "internal error: transformed element does not have value sigma");
    }
    out.g = Poly::monomial(FieldElement::one(d), static_cast<std::size_t>(n)) - Poly::constant(out.a_transformed);
    out.eisenstein = is_nu_eisenstein(out.g).eisenstein;
    return out;
}

} // namespace dedekind
