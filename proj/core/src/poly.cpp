#include "dedekind/poly.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <mutex>
#include <optional>
#include <random>
#include <sstream>

#include "dedekind/residue_factor.hpp"

namespace dedekind {

// ---------------------------------------------------------------------------
// ResiduePoly

ResiduePoly::ResiduePoly(std::uint32_t q, const std::vector<long>& coeffs) : q_(q)
{
    const PrimeField k{q};
    c_.reserve(coeffs.size());
    for (long v : coeffs) c_.push_back(k.from_int(v));
    dense::trim(k, c_);
}

ResiduePoly ResiduePoly::from_canonical(std::uint32_t q, Coeffs coeffs)
{
    ResiduePoly r(q);
    r.c_ = std::move(coeffs);
    dense::trim(r.field(), r.c_);
    return r;
}

ResiduePoly ResiduePoly::monomial(std::uint32_t q, std::uint32_t c, std::size_t degree)
{
    Coeffs v(degree + 1, 0);
    v[degree] = c % q;
    return from_canonical(q, std::move(v));
}

namespace {

void same_field(const ResiduePoly& a, const ResiduePoly& b)
{
    if (a.modulus() != b.modulus()) fail(Errc::DomainError, "residue fields differ");
}

} // namespace

ResiduePoly operator+(const ResiduePoly& a, const ResiduePoly& b)
{
    same_field(a, b);
    return ResiduePoly::from_canonical(a.q_, dense::add(a.field(), a.c_, b.c_));
}

ResiduePoly operator-(const ResiduePoly& a, const ResiduePoly& b)
{
    same_field(a, b);
    return ResiduePoly::from_canonical(a.q_, dense::sub(a.field(), a.c_, b.c_));
}

ResiduePoly operator*(const ResiduePoly& a, const ResiduePoly& b)
{
    same_field(a, b);
    return ResiduePoly::from_canonical(a.q_, dense::mul(a.field(), a.c_, b.c_));
}

bool operator<(const ResiduePoly& a, const ResiduePoly& b)
{
    if (a.c_.size() != b.c_.size()) return a.c_.size() < b.c_.size();
    return std::lexicographical_compare(a.c_.rbegin(), a.c_.rend(), b.c_.rbegin(), b.c_.rend());
}

std::pair<ResiduePoly, ResiduePoly> divrem(const ResiduePoly& a, const ResiduePoly& b)
{
    same_field(a, b);
    auto [q, r] = dense::divrem(a.field(), a.coeffs(), b.coeffs());
    return {ResiduePoly::from_canonical(a.modulus(), std::move(q)),
            ResiduePoly::from_canonical(a.modulus(), std::move(r))};
}

ResiduePoly rem(const ResiduePoly& a, const ResiduePoly& b) { return divrem(a, b).second; }

bool divides(const ResiduePoly& d, const ResiduePoly& a) { return rem(a, d).is_zero(); }

ResiduePoly gcd(const ResiduePoly& a, const ResiduePoly& b)
{
    same_field(a, b);
    return ResiduePoly::from_canonical(a.modulus(), dense::gcd(a.field(), a.coeffs(), b.coeffs()));
}

ResiduePoly monic(const ResiduePoly& a)
{
    return ResiduePoly::from_canonical(a.modulus(), dense::make_monic(a.field(), a.coeffs()));
}

ResiduePoly derivative(const ResiduePoly& a)
{
    return ResiduePoly::from_canonical(a.modulus(), dense::derivative(a.field(), a.coeffs()));
}

ResiduePoly pow(const ResiduePoly& a, unsigned e)
{
    return ResiduePoly::from_canonical(a.modulus(), dense::pow(a.field(), a.coeffs(), e));
}

namespace {

std::string power_of(std::string_view var, std::size_t k)
{
    std::string s(var);
    if (k > 1) s += "^" + std::to_string(k);
    return s;
}

bool is_integer_literal(std::string_view s)
{
    if (!s.empty() && s.front() == '-') s.remove_prefix(1);
    return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; });
}

bool is_rational_literal(std::string_view s)
{
    const auto slash = s.find('/');
    if (slash == std::string_view::npos) return false;
    const auto den = s.substr(slash + 1);
    return is_integer_literal(s.substr(0, slash)) && !den.empty() && den.front() != '-' && is_integer_literal(den);
}

// Joins already-signed terms: "x^2", "-5" -> "x^2 - 5".
std::string join_terms(const std::vector<std::pair<bool, std::string>>& terms)
{
    if (terms.empty()) return "0";
    std::ostringstream out;
    for (std::size_t i = 0; i < terms.size(); ++i) {
        const auto& [negative, body] = terms[i];
        if (i == 0) {
            out << (negative ? "-" : "") << body;
        } else {
            out << (negative ? " - " : " + ") << body;
        }
    }
    return out.str();
}

} // namespace

std::string to_string(const ResiduePoly& p, std::string_view var)
{
    std::vector<std::pair<bool, std::string>> terms;
    for (std::size_t k = p.coeffs().size(); k-- > 0;) {
        const std::uint32_t c = p.coeffs()[k];
        if (c == 0) continue;
        if (k == 0) {
            terms.emplace_back(false, std::to_string(c));
        } else if (c == 1) {
            terms.emplace_back(false, power_of(var, k));
        } else {
            terms.emplace_back(false, std::to_string(c) + "*" + power_of(var, k));
        }
    }
    return join_terms(terms);
}

// ---------------------------------------------------------------------------
// Poly

Poly::Poly(const ValuationDescriptor& d, std::vector<FieldElement> coeffs) : desc_(d), c_(std::move(coeffs))
{
    for (const auto& c : c_) {
        if (!(c.descriptor() == d)) fail(Errc::DomainError, "coefficient field does not match " + to_string(d));
    }
    trim();
}

Poly Poly::constant(const FieldElement& c) { return Poly(c.descriptor(), {c}); }

Poly Poly::monomial(const FieldElement& c, std::size_t degree)
{
    std::vector<FieldElement> v(degree + 1, FieldElement::zero(c.descriptor()));
    v[degree] = c;
    return Poly(c.descriptor(), std::move(v));
}

Poly Poly::x(const ValuationDescriptor& d) { return monomial(FieldElement::one(d), 1); }

void Poly::trim()
{
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

bool Poly::is_integral() const
{
    return std::all_of(c_.begin(), c_.end(), [](const FieldElement& c) { return in_valuation_ring(c); });
}

Poly Poly::operator-() const
{
    Poly r = *this;
    for (auto& c : r.c_) c = -c;
    return r;
}

namespace {

void same_field(const Poly& a, const Poly& b)
{
    if (!(a.descriptor() == b.descriptor())) {
        fail(Errc::DomainError, "polynomials over different fields: " + to_string(a.descriptor()) + " vs " +
                                    to_string(b.descriptor()));
    }
}

} // namespace

Poly operator+(const Poly& a, const Poly& b)
{
    same_field(a, b);
    Poly r = a.c_.size() >= b.c_.size() ? a : b;
    const Poly& other = a.c_.size() >= b.c_.size() ? b : a;
    for (std::size_t i = 0; i < other.c_.size(); ++i) r.c_[i] += other.c_[i];
    r.trim();
    return r;
}

Poly operator-(const Poly& a, const Poly& b) { return a + (-b); }

Poly operator*(const Poly& a, const Poly& b)
{
    same_field(a, b);
    if (a.is_zero() || b.is_zero()) return Poly(a.desc_);
    std::vector<FieldElement> r(a.c_.size() + b.c_.size() - 1, FieldElement::zero(a.desc_));
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i].is_zero()) continue;
        for (std::size_t j = 0; j < b.c_.size(); ++j) {
            if (b.c_[j].is_zero()) continue;
            r[i + j] += a.c_[i] * b.c_[j];
        }
    }
    return Poly(a.desc_, std::move(r));
}

Poly Poly::scaled(const FieldElement& c) const
{
    Poly r = *this;
    for (auto& v : r.c_) v *= c;
    r.trim();
    return r;
}

Poly pow(const Poly& a, unsigned e)
{
    Poly r = Poly::constant(FieldElement::one(a.descriptor()));
    Poly base = a;
    while (e) {
        if (e & 1U) r = r * base;
        e >>= 1U;
        if (e) base = base * base;
    }
    return r;
}

GroupElement gauss_valuation(const Poly& p)
{
    GroupElement best = GroupElement::infinity(p.descriptor().group());
    for (const auto& c : p.coeffs()) {
        if (c.is_zero()) continue;
        GroupElement v = valuation(c);
        if (v < best) best = std::move(v);
    }
    return best;
}

namespace {

// Long division; lead_inv is the inverse of g's leading coefficient.
Division long_division(const Poly& f, const Poly& g, const FieldElement& lead_inv)
{
    const auto& d = f.descriptor();
    if (f.degree() < g.degree()) return {Poly(d), f};
    std::vector<FieldElement> r = f.coeffs();
    std::vector<FieldElement> q(r.size() - g.coeffs().size() + 1, FieldElement::zero(d));
    const std::size_t n = g.coeffs().size();
    for (std::size_t i = q.size(); i-- > 0;) {
        const FieldElement top = r[i + n - 1];
        if (top.is_zero()) continue;
        FieldElement c = lead_inv.is_one() ? top : top * lead_inv;
        for (std::size_t j = 0; j < n; ++j) {
            if (!g.coeffs()[j].is_zero()) r[i + j] -= c * g.coeffs()[j];
        }
        q[i] = std::move(c);
    }
    r.resize(n - 1, FieldElement::zero(d));
    return {Poly(d, std::move(q)), Poly(d, std::move(r))};
}

} // namespace

Division euclid_divide(const Poly& f, const Poly& phi)
{
    same_field(f, phi);
    if (phi.degree() < 1) fail(Errc::PreconditionError, "divisor must have degree >= 1");
    if (!phi.is_monic()) fail(Errc::PreconditionError, "divisor " + to_string(phi) + " is not monic");
    return long_division(f, phi, FieldElement::one(f.descriptor()));
}

Division divide(const Poly& f, const Poly& g)
{
    same_field(f, g);
    if (g.is_zero()) fail(Errc::DivisionByZero, "polynomial division by zero");
    return long_division(f, g, g.leading().inverse());
}

ResiduePoly reduce(const Poly& p)
{
    const auto& d = p.descriptor();
    ResiduePoly::Coeffs out;
    out.reserve(p.coeffs().size());
    const GroupElement zero = GroupElement::zero(d.group());
    for (const auto& c : p.coeffs()) {
        if (c.is_zero()) {
            out.push_back(0);
            continue;
        }
        const GroupElement v = valuation(c);
        if (v < zero) fail(Errc::NotIntegral, "coefficient " + to_string(c) + " has negative valuation " + to_string(v));
        out.push_back(v == zero ? residue(c).value() : 0);
    }
    return ResiduePoly::from_canonical(d.p, std::move(out));
}

Poly lift(const ResiduePoly& p, const ValuationDescriptor& d)
{
    if (p.modulus() != d.p) fail(Errc::DomainError, "residue field does not match " + to_string(d));
    std::vector<FieldElement> c;
    c.reserve(p.coeffs().size());
    for (std::uint32_t v : p.coeffs()) c.push_back(FieldElement::from_integer(d, v));
    return Poly(d, std::move(c));
}

Poly lift_monic(const ResiduePoly& p, const ValuationDescriptor& d)
{
    if (!p.is_monic()) fail(Errc::PreconditionError, "residue polynomial " + to_string(p) + " is not monic");
    return lift(p, d);
}

Poly derivative(const Poly& p)
{
    const auto& d = p.descriptor();
    if (p.degree() < 1) return Poly(d);
    std::vector<FieldElement> c;
    c.reserve(p.coeffs().size() - 1);
    for (std::size_t i = 1; i < p.coeffs().size(); ++i) {
        c.push_back(p.coeffs()[i] * FieldElement::from_integer(d, static_cast<long>(i)));
    }
    return Poly(d, std::move(c));
}

Poly gcd_over_K(const Poly& a, const Poly& b)
{
    same_field(a, b);
    if (a.is_zero() && b.is_zero()) fail(Errc::PreconditionError, "gcd(0, 0) is undefined");
    auto make_monic = [](const Poly& p) { return p.is_monic() ? p : p.scaled(p.leading().inverse()); };
    Poly x = a.is_zero() ? b : make_monic(a);
    Poly y = b.is_zero() ? Poly(b.descriptor()) : make_monic(b);
    if (x.degree() < y.degree()) std::swap(x, y);
    while (!y.is_zero()) {
        if (y.degree() == 0) return Poly::constant(FieldElement::one(a.descriptor()));
        Poly r = euclid_divide(x, y).remainder;
        x = std::move(y);
        y = r.is_zero() ? std::move(r) : make_monic(r);
    }
    return make_monic(x);
}

namespace {

// GF(p^k) = F_p[t]/(m) as a coefficient context for the dense kernels.
struct ExtensionField {
    using Elem = dense::Vec<PrimeField>;

    PrimeField base;
    Elem modulus;
    mpz_class order;

    Elem zero() const { return {}; }
    Elem one() const { return {1}; }
    Elem from_int(long v) const { return dense::constant(base, base.from_int(v)); }
    bool is_zero(const Elem& a) const { return a.empty(); }
    bool is_one(const Elem& a) const { return a.size() == 1 && a[0] == 1; }
    Elem add(const Elem& a, const Elem& b) const { return dense::add(base, a, b); }
    Elem sub(const Elem& a, const Elem& b) const { return dense::sub(base, a, b); }
    Elem mul(const Elem& a, const Elem& b) const { return dense::rem(base, dense::mul(base, a, b), modulus); }
    Elem neg(const Elem& a) const { return dense::sub(base, Elem{}, a); }
    Elem inv(const Elem& a) const
    {
        if (a.empty()) fail(Errc::DivisionByZero, "division by zero in an extension field");
        return dense::powmod(base, a, order - 2, modulus);
    }
};

const ExtensionField& extension_field(std::uint32_t p)
{
    static std::mutex lock;
    static std::map<std::uint32_t, ExtensionField> cache;
    const std::scoped_lock guard(lock);
    if (auto it = cache.find(p); it != cache.end()) return it->second;

    unsigned k = 1;
    mpz_class order = p;
    while (order < (mpz_class(1) << 24)) {
        order *= p;
        ++k;
    }
    // First irreducible x^k + ... in counting order.
    std::vector<std::uint32_t> digits(k, 0);
    for (;;) {
        auto c = digits;
        c.push_back(1);
        const auto m = ResiduePoly::from_canonical(p, std::move(c));
        if (is_irreducible(m)) {
            return cache.emplace(p, ExtensionField{PrimeField{p}, m.coeffs(), order}).first->second;
        }
        for (auto& d : digits) {
            if (++d < p) break;
            d = 0;
        }
    }
}

template <class K, class F>
typename K::Elem evaluate(const K& k, const MPoly<F>& f, const std::pair<typename K::Elem, typename K::Elem>& at,
                          const std::function<typename K::Elem(const typename F::Elem&)>& embed)
{
    std::vector<typename K::Elem> xs{k.one()}, ys{k.one()};
    typename K::Elem sum = k.zero();
    for (const auto& [m, c] : f.terms()) {
        while (xs.size() <= m.x) xs.push_back(k.mul(xs.back(), at.first));
        while (ys.size() <= m.y) ys.push_back(k.mul(ys.back(), at.second));
        sum = k.add(sum, k.mul(embed(c), k.mul(xs[m.x], ys[m.y])));
    }
    return sum;
}

// Specializes the coefficients of f at a point over a finite field.  A
// separable specialization with nonvanishing denominators and leading
// coefficient proves f separable.
template <class K, class F>
bool separable_at(const Poly& f, const K& k, const std::pair<typename K::Elem, typename K::Elem>& at,
                  const std::function<typename K::Elem(const typename F::Elem&)>& embed)
{
    dense::Vec<K> g;
    for (const auto& c : f.coeffs()) {
        const auto& v = std::get<RationalFunction<F>>(c.value());
        const auto den = evaluate(k, v.den(), at, embed);
        if (k.is_zero(den)) return false;
        g.push_back(k.mul(evaluate(k, v.num(), at, embed), k.inv(den)));
    }
    if (k.is_zero(g.back())) return false;
    const auto dg = dense::derivative(k, g);
    return !dg.empty() && dense::gcd(k, g, dg).size() == 1;
}

bool separable_by_specialization(const Poly& f)
{
    constexpr int kAttempts = 4;
    std::mt19937_64 rng(0x5eed);
    if (f.descriptor().rational_coefficients()) {
        // Q(X) -> F_l, X -> a, for the prime l = 2^31 - 1.
        const PrimeField k{2147483647U};
        const std::function<PrimeField::Elem(const mpq_class&)> embed = [&k](const mpq_class& c) {
            const auto den = k.from_mpz(c.get_den());
            return k.is_zero(den) ? k.zero() : k.div(k.from_mpz(c.get_num()), den);
        };
        for (const auto& c : f.coeffs()) {
            for (const auto* part : {&std::get<FieldElement::QFunc>(c.value()).num(),
                                     &std::get<FieldElement::QFunc>(c.value()).den()}) {
                for (const auto& term : part->terms()) {
                    if (k.is_zero(k.from_mpz(term.second.get_den()))) return false;
                }
            }
        }
        for (int attempt = 0; attempt < kAttempts; ++attempt) {
            const auto a = static_cast<PrimeField::Elem>(rng() % k.p);
            if (separable_at<PrimeField, RationalField>(f, k, {a, 0}, embed)) return true;
        }
        return false;
    }
    const ExtensionField& k = extension_field(f.descriptor().p);
    const std::function<ExtensionField::Elem(const std::uint32_t&)> embed = [&k](const std::uint32_t& c) {
        return dense::constant(k.base, c);
    };
    const std::size_t width = k.modulus.size() - 1;
    auto random_elem = [&] {
        ExtensionField::Elem e(width);
        for (auto& c : e) c = static_cast<std::uint32_t>(rng() % k.base.p);
        dense::trim(k.base, e);
        return e;
    };
    for (int attempt = 0; attempt < kAttempts; ++attempt) {
        if (separable_at<ExtensionField, PrimeField>(f, k, {random_elem(), random_elem()}, embed)) return true;
    }
    return false;
}

} // namespace

bool is_separable(const Poly& f)
{
    if (f.degree() < 1) fail(Errc::PreconditionError, "separability needs degree >= 1");
    const Poly df = derivative(f);
    if (df.is_zero()) return false;
    if (f.coeffs()[0].is_zero() && f.coeffs()[1].is_zero()) return false;
    if (separable_by_specialization(f)) return true;
    return gcd_over_K(f, df).degree() == 0;
}

void check_degree(const Poly& p, std::size_t cap)
{
    if (p.degree() > static_cast<long>(cap)) {
        fail(Errc::SizeLimit, "degree " + std::to_string(p.degree()) + " exceeds the cap of " + std::to_string(cap));
    }
}

std::string to_string(const Poly& p, std::string_view var)
{
    std::vector<std::pair<bool, std::string>> terms;
    for (std::size_t k = p.coeffs().size(); k-- > 0;) {
        const FieldElement& c = p.coeffs()[k];
        if (c.is_zero()) continue;
        std::string s = to_string(c);
        bool negative = false;
        const bool literal = c.is_constant() && (is_integer_literal(s) || is_rational_literal(s));
        if (literal && s.front() == '-') {
            negative = true;
            s.erase(s.begin());
        }
        if (!literal || s.find('/') != std::string::npos) s = "(" + s + ")";
        if (k == 0) {
            terms.emplace_back(negative, s);
        } else if (literal && s == "1") {
            terms.emplace_back(negative, power_of(var, k));
        } else {
            terms.emplace_back(negative, s + "*" + power_of(var, k));
        }
    }
    return join_terms(terms);
}

} // namespace dedekind
