#include "dedekind/valued_field.hpp"

#include <sstream>
#include <vector>

namespace dedekind {

namespace {

using QPoly = MPoly<RationalField>;
using PPoly = MPoly<PrimeField>;

// nu_p of a nonzero integer.
long padic_order(const mpz_class& n, std::uint32_t p)
{
    if (n == 0) fail(Errc::DomainError, "p-adic order of zero");
    mpz_class tmp = n;
    mpz_class prime = p;
    return static_cast<long>(mpz_remove(tmp.get_mpz_t(), tmp.get_mpz_t(), prime.get_mpz_t()));
}

long padic_order(const mpq_class& r, std::uint32_t p)
{
    return padic_order(r.get_num(), p) - padic_order(r.get_den(), p);
}

// Residue of a p-adic unit r.
std::uint32_t padic_unit_residue(const mpq_class& r, std::uint32_t p)
{
    PrimeField k{p};
    return k.div(k.from_mpz(r.get_num()), k.from_mpz(r.get_den()));
}

// The unique term of minimal value of a nonzero polynomial.
struct MinimalTerm {
    GroupElement value;
    Monomial monomial;
};

MinimalTerm minimal_term(const QPoly& f, const ValuationDescriptor& d)
{
    const GroupDescriptor g = d.group();
    std::optional<MinimalTerm> best;
    for (const auto& [m, c] : f.terms()) {
        GroupElement v = d.kind == ValuationKind::PAdicRationals
                             ? GroupElement::make(g, padic_order(c, d.p))
                             : GroupElement::make(g, padic_order(c, d.p), m.x);
        if (!best || v < best->value) best = MinimalTerm{std::move(v), m};
    }
    return *best;
}

MinimalTerm minimal_term(const PPoly& f, const ValuationDescriptor& d)
{
    const GroupDescriptor g = d.group();
    std::optional<MinimalTerm> best;
    for (const auto& [m, c] : f.terms()) {
        GroupElement v = d.kind == ValuationKind::LexBivariate ? GroupElement::make(g, m.x, m.y)
                                                               : GroupElement::make(g, m.x);
        if (!best || v < best->value) best = MinimalTerm{std::move(v), m};
    }
    return *best;
}

std::uint32_t parse_uint(std::string_view s, std::string_view whole)
{
    if (s.empty() || s.size() > 9) fail(Errc::ParseError, "malformed field descriptor '" + std::string(whole) + "'");
    std::uint32_t v = 0;
    for (char c : s) {
        if (c < '0' || c > '9') fail(Errc::ParseError, "malformed field descriptor '" + std::string(whole) + "'");
        v = v * 10 + static_cast<std::uint32_t>(c - '0');
    }
    return v;
}

void require_prime(std::uint32_t p)
{
    if (!is_prime(p)) fail(Errc::ParseError, std::to_string(p) + " is not prime");
}

std::vector<std::string_view> split(std::string_view s, char sep)
{
    std::vector<std::string_view> parts;
    std::size_t start = 0;
    for (;;) {
        const auto pos = s.find(sep, start);
        parts.push_back(s.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start));
        if (pos == std::string_view::npos) break;
        start = pos + 1;
    }
    return parts;
}

std::uint32_t parse_prefixed(std::string_view s, std::string_view prefix, std::string_view whole)
{
    if (s.substr(0, prefix.size()) != prefix) {
        fail(Errc::ParseError, "expected '" + std::string(prefix) + "...' in field descriptor '" + std::string(whole) + "'");
    }
    return parse_uint(s.substr(prefix.size()), whole);
}

template <class F>
std::string render_mpoly(const MPoly<F>& f)
{
    if (f.is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    const F& k = f.field();
    for (auto it = f.terms().rbegin(); it != f.terms().rend(); ++it) {
        const Monomial m = it->first;
        typename F::Elem c = it->second;
        bool negative = false;
        if constexpr (std::is_same_v<F, RationalField>) {
            if (c < 0) {
                negative = true;
                c = -c;
            }
        }
        if (first) {
            if (negative) out << "-";
        } else {
            out << (negative ? " - " : " + ");
        }
        first = false;
        std::ostringstream vars;
        if (m.x > 0) vars << "X" << (m.x > 1 ? "^" + std::to_string(m.x) : "");
        if (m.y > 0) vars << (m.x > 0 ? "*" : "") << "Y" << (m.y > 1 ? "^" + std::to_string(m.y) : "");
        const std::string v = vars.str();
        if (v.empty()) {
            out << k.str(c);
        } else if (k.is_one(c)) {
            out << v;
        } else {
            out << k.str(c) << "*" << v;
        }
    }
    return out.str();
}

template <class F>
std::string render_fraction(const RationalFunction<F>& f)
{
    std::string num = render_mpoly(f.num());
    if (f.is_polynomial()) return num;
    if (f.num().terms().size() > 1 || num.find('/') != std::string::npos) num = "(" + num + ")";
    return num + "/(" + render_mpoly(f.den()) + ")";
}

} // namespace

bool is_prime(std::uint64_t n)
{
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) return false;
    }
    return true;
}

// ---------------------------------------------------------------------------
// ValuationDescriptor

ValuationDescriptor ValuationDescriptor::padic(std::uint32_t p)
{
    if (!is_prime(p)) fail(Errc::DomainError, std::to_string(p) + " is not prime");
    return {ValuationKind::PAdicRationals, p, 0};
}

ValuationDescriptor ValuationDescriptor::lex(std::uint32_t q)
{
    if (!is_prime(q)) fail(Errc::DomainError, "residue field order " + std::to_string(q) + " is not prime");
    return {ValuationKind::LexBivariate, q, 0};
}

ValuationDescriptor ValuationDescriptor::lambda_trivial(std::uint32_t q, std::uint32_t radicand)
{
    if (!is_prime(q)) fail(Errc::DomainError, "residue field order " + std::to_string(q) + " is not prime");
    if (radicand != 0) (void)GroupDescriptor::dense_quadratic(radicand);
    return {ValuationKind::LambdaTrivial, q, radicand};
}

ValuationDescriptor ValuationDescriptor::lambda_composite(std::uint32_t p, std::uint32_t radicand)
{
    if (!is_prime(p)) fail(Errc::DomainError, std::to_string(p) + " is not prime");
    (void)GroupDescriptor::dense_quadratic(radicand);
    return {ValuationKind::LambdaComposite, p, radicand};
}

GroupDescriptor ValuationDescriptor::group() const
{
    switch (kind) {
    case ValuationKind::PAdicRationals: return GroupDescriptor::integer();
    case ValuationKind::LexBivariate: return GroupDescriptor::lex_pair();
    case ValuationKind::LambdaTrivial: return GroupDescriptor::scaled();
    case ValuationKind::LambdaComposite: return GroupDescriptor::dense_quadratic(radicand);
    }
    return GroupDescriptor::integer();
}

bool ValuationDescriptor::has_variable(char v) const
{
    switch (kind) {
    case ValuationKind::PAdicRationals: return false;
    case ValuationKind::LexBivariate: return v == 'X' || v == 'Y';
    case ValuationKind::LambdaTrivial:
    case ValuationKind::LambdaComposite: return v == 'X';
    }
    return false;
}

std::string to_string(const ValuationDescriptor& d)
{
    const std::string p = std::to_string(d.p);
    switch (d.kind) {
    case ValuationKind::PAdicRationals: return "qp:" + p;
    case ValuationKind::LexBivariate: return "lex:F" + p;
    case ValuationKind::LambdaTrivial:
        return "lambda-trivial:F" + p + (d.radicand ? ":sqrt" + std::to_string(d.radicand) : "");
    case ValuationKind::LambdaComposite: return "lambda-composite:p" + p + ":sqrt" + std::to_string(d.radicand);
    }
    return "?";
}

ValuationDescriptor parse_descriptor(std::string_view text)
{
    const auto parts = split(text, ':');
    const std::string_view head = parts[0];
    auto bad = [&]() -> ValuationDescriptor {
        fail(Errc::ParseError, "malformed field descriptor '" + std::string(text) + "'");
    };
    if (head == "qp") {
        if (parts.size() != 2) return bad();
        const auto p = parse_uint(parts[1], text);
        require_prime(p);
        return ValuationDescriptor::padic(p);
    }
    if (head == "lex") {
        if (parts.size() != 2) return bad();
        const auto q = parse_prefixed(parts[1], "F", text);
        require_prime(q);
        return ValuationDescriptor::lex(q);
    }
    if (head == "lambda-trivial") {
        if (parts.size() != 2 && parts.size() != 3) return bad();
        const auto q = parse_prefixed(parts[1], "F", text);
        require_prime(q);
        std::uint32_t d = 0;
        if (parts.size() == 3) d = parse_prefixed(parts[2], "sqrt", text);
        try {
            return ValuationDescriptor::lambda_trivial(q, d);
        } catch (const Error& e) {
            fail(Errc::ParseError, e.what());
        }
    }
    if (head == "lambda-composite") {
        if (parts.size() != 3) return bad();
        const auto p = parse_prefixed(parts[1], "p", text);
        require_prime(p);
        const auto d = parse_prefixed(parts[2], "sqrt", text);
        try {
            return ValuationDescriptor::lambda_composite(p, d);
        } catch (const Error& e) {
            fail(Errc::ParseError, e.what());
        }
    }
    return bad();
}

// ---------------------------------------------------------------------------
// FieldElement

FieldElement::FieldElement(const ValuationDescriptor& d) : desc_(d)
{
    if (d.rational_coefficients()) {
        value_ = QFunc(RationalField{});
    } else {
        value_ = PFunc(d.residue_field());
    }
}

FieldElement::FieldElement(const ValuationDescriptor& d, QFunc v) : desc_(d), value_(std::move(v)) {}
FieldElement::FieldElement(const ValuationDescriptor& d, PFunc v) : desc_(d), value_(std::move(v)) {}

FieldElement FieldElement::from_integer(const ValuationDescriptor& d, const mpz_class& n)
{
    return monomial(d, n, {});
}

FieldElement FieldElement::from_rational(const ValuationDescriptor& d, const mpq_class& r)
{
    if (d.rational_coefficients()) {
        mpq_class c = r;
        c.canonicalize();
        return FieldElement(d, QFunc::constant(RationalField{}, c));
    }
    return from_integer(d, r.get_num()) / from_integer(d, r.get_den());
}

FieldElement FieldElement::monomial(const ValuationDescriptor& d, const mpz_class& c, Monomial m)
{
    if ((m.x > 0 && !d.has_variable('X')) || (m.y > 0 && !d.has_variable('Y'))) {
        fail(Errc::DomainError, "variable not present in " + to_string(d));
    }
    if (d.rational_coefficients()) {
        return FieldElement(d, QFunc(QPoly::monomial(RationalField{}, mpq_class(c), m)));
    }
    const PrimeField k = d.residue_field();
    return FieldElement(d, PFunc(PPoly::monomial(k, k.from_mpz(c), m)));
}

FieldElement FieldElement::variable(const ValuationDescriptor& d, char name)
{
    if (!d.has_variable(name)) {
        fail(Errc::DomainError, std::string("variable ") + name + " is not part of " + to_string(d));
    }
    return monomial(d, 1, name == 'X' ? Monomial{1, 0} : Monomial{0, 1});
}

bool FieldElement::is_zero() const
{
    return std::visit([](const auto& v) { return v.is_zero(); }, value_);
}

bool FieldElement::is_one() const
{
    return std::visit(
        [](const auto& v) { return v.is_constant() && v.field().is_one(v.num().constant_value()); }, value_);
}

bool FieldElement::is_constant() const
{
    return std::visit([](const auto& v) { return v.is_constant(); }, value_);
}

namespace {

template <class Op>
FieldElement binary(const FieldElement& a, const FieldElement& b, Op op, const char* what)
{
    if (!(a.descriptor() == b.descriptor())) {
        fail(Errc::DomainError, std::string("field mismatch in ") + what + ": " + to_string(a.descriptor()) + " vs " +
                                    to_string(b.descriptor()));
    }
    return op();
}

} // namespace

FieldElement FieldElement::operator-() const
{
    return std::visit([&](const auto& v) { return FieldElement(desc_, -v); }, value_);
}

FieldElement operator+(const FieldElement& a, const FieldElement& b)
{
    return binary(a, b, [&] {
        return std::visit(
            [&](const auto& x) {
                using T = std::decay_t<decltype(x)>;
                return FieldElement(a.desc_, x + std::get<T>(b.value_));
            },
            a.value_);
    }, "add");
}

FieldElement operator-(const FieldElement& a, const FieldElement& b)
{
    return binary(a, b, [&] {
        return std::visit(
            [&](const auto& x) {
                using T = std::decay_t<decltype(x)>;
                return FieldElement(a.desc_, x - std::get<T>(b.value_));
            },
            a.value_);
    }, "sub");
}

FieldElement operator*(const FieldElement& a, const FieldElement& b)
{
    return binary(a, b, [&] {
        return std::visit(
            [&](const auto& x) {
                using T = std::decay_t<decltype(x)>;
                return FieldElement(a.desc_, x * std::get<T>(b.value_));
            },
            a.value_);
    }, "mul");
}

FieldElement operator/(const FieldElement& a, const FieldElement& b)
{
    return binary(a, b, [&] {
        return std::visit(
            [&](const auto& x) {
                using T = std::decay_t<decltype(x)>;
                return FieldElement(a.desc_, x / std::get<T>(b.value_));
            },
            a.value_);
    }, "div");
}

bool operator==(const FieldElement& a, const FieldElement& b)
{
    return a.desc_ == b.desc_ && a.value_ == b.value_;
}

FieldElement FieldElement::inverse() const
{
    return std::visit([&](const auto& v) { return FieldElement(desc_, v.inverse()); }, value_);
}

FieldElement FieldElement::recanonicalized() const
{
    return std::visit([&](const auto& v) { return FieldElement(desc_, v.recanonicalized()); }, value_);
}

FieldElement pow(FieldElement x, long n)
{
    if (n < 0) return pow(x.inverse(), -n);
    FieldElement r = FieldElement::one(x.descriptor());
    while (n) {
        if (n & 1) r *= x;
        n >>= 1;
        if (n) x *= x;
    }
    return r;
}

// ---------------------------------------------------------------------------
// Valuation, residue, lift

GroupElement valuation(const FieldElement& x)
{
    const auto& d = x.descriptor();
    if (x.is_zero()) return GroupElement::infinity(d.group());
    return std::visit(
        [&](const auto& v) {
            return minimal_term(v.num(), d).value - minimal_term(v.den(), d).value;
        },
        x.value());
}

bool in_valuation_ring(const FieldElement& x)
{
    return !(valuation(x) < GroupElement::zero(x.descriptor().group()));
}

bool in_maximal_ideal(const FieldElement& x)
{
    return valuation(x) > GroupElement::zero(x.descriptor().group());
}

ResidueElement residue(const FieldElement& x)
{
    const auto& d = x.descriptor();
    if (x.is_zero()) fail(Errc::NotAUnit, "residue of zero is taken in M_nu, not of a unit");
    return std::visit(
        [&](const auto& v) -> ResidueElement {
            const MinimalTerm top = minimal_term(v.num(), d);
            const MinimalTerm bottom = minimal_term(v.den(), d);
            if (!(top.value == bottom.value)) {
                fail(Errc::NotAUnit, to_string(x) + " has valuation " + to_string(top.value - bottom.value) +
                                         ", not 0");
            }
            // Unique minimal terms: equal values force equal monomials.
            const auto& a = v.num().terms().at(top.monomial);
            const auto& b = v.den().terms().at(bottom.monomial);
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, FieldElement::QFunc>) {
                return ResidueElement(d.p, static_cast<long>(padic_unit_residue(mpq_class(a / b), d.p)));
            } else {
                return ResidueElement(d.p, static_cast<long>(v.field().div(a, b)));
            }
        },
        x.value());
}

FieldElement lift(const ResidueElement& r, const ValuationDescriptor& d)
{
    if (r.modulus() != d.p) fail(Errc::DomainError, "residue field does not match " + to_string(d));
    return FieldElement::from_integer(d, r.value());
}

std::optional<FieldElement> uniformizer(const ValuationDescriptor& d)
{
    const auto sigma = min_positive(d.group());
    if (!sigma) return std::nullopt;
    return element_of_value(*sigma, d);
}

FieldElement element_of_value(const GroupElement& g, const ValuationDescriptor& d)
{
    if (g.is_infinite()) fail(Errc::NoUniformizerAtValue, "no element has valuation inf other than 0");
    if (!(g.descriptor() == d.group())) fail(Errc::DomainError, "value is not in the value group of " + to_string(d));
    const auto exponent = [](const mpz_class& v) {
        if (!v.fits_slong_p()) fail(Errc::SizeLimit, "exponent too large");
        return v.get_si();
    };
    const auto x = [&] { return FieldElement::variable(d, 'X'); };
    switch (d.kind) {
    case ValuationKind::PAdicRationals:
        return pow(FieldElement::from_integer(d, d.p), exponent(g.first()));
    case ValuationKind::LexBivariate:
        return pow(x(), exponent(g.first())) * pow(FieldElement::variable(d, 'Y'), exponent(g.second()));
    case ValuationKind::LambdaTrivial:
        return pow(x(), exponent(g.first()));
    case ValuationKind::LambdaComposite:
        return pow(FieldElement::from_integer(d, d.p), exponent(g.first())) * pow(x(), exponent(g.second()));
    }
    fail(Errc::NoUniformizerAtValue, "unsupported valued field");
}

std::string to_string(const FieldElement& x)
{
    return std::visit([](const auto& v) { return render_fraction(v); }, x.value());
}

} // namespace dedekind
