#include "dedekind/valuegroup.hpp"

#include <cctype>
#include <sstream>
#include <vector>

#include "dedekind/error.hpp"

namespace dedekind {

namespace {

void require_same(const GroupElement& x, const GroupElement& y)
{
    if (!(x.descriptor() == y.descriptor())) {
        fail(Errc::DomainError, "value group mismatch: " + to_string(x.descriptor()) + " vs " +
                                    to_string(y.descriptor()));
    }
}

int sgn(const mpz_class& v) { return ::sgn(v); }

// Sign of a + b*sqrt(d) for non-square d.
int quadratic_sign(const mpz_class& a, const mpz_class& b, std::uint32_t d)
{
    const int sa = sgn(a);
    const int sb = sgn(b);
    if (sa >= 0 && sb >= 0) return (sa > 0 || sb > 0) ? 1 : 0;
    if (sa <= 0 && sb <= 0) return -1;
    // Opposite signs; a^2 != d*b^2 because sqrt(d) is irrational.
    const mpz_class diff = a * a - mpz_class(d) * b * b;
    return sa * sgn(diff);
}

bool is_perfect_square(std::uint32_t d)
{
    mpz_class v(d);
    return mpz_perfect_square_p(v.get_mpz_t()) != 0;
}

std::string strip_spaces(std::string_view text)
{
    std::string out;
    for (char c : text) {
        if (!std::isspace(static_cast<unsigned char>(c))) out.push_back(c);
    }
    return out;
}

mpz_class parse_integer(const std::string& s, std::string_view whole)
{
    mpz_class v;
    if (s.empty() || v.set_str(s, 10) != 0) {
        fail(Errc::ParseError, "malformed group element '" + std::string(whole) + "'");
    }
    return v;
}

// Splits "3-2*sqrt(2)" into {"3", "-2*sqrt(2)"}.
std::vector<std::string> signed_terms(const std::string& s)
{
    std::vector<std::string> terms;
    std::string cur;
    int depth = 0;
    for (std::size_t i = 0; i < s.size(); ++i) {
        const char c = s[i];
        if (c == '(') ++depth;
        if (c == ')') --depth;
        if ((c == '+' || c == '-') && depth == 0 && !cur.empty()) {
            terms.push_back(cur);
            cur.clear();
        }
        cur.push_back(c);
    }
    if (!cur.empty()) terms.push_back(cur);
    return terms;
}

// Parses "[sign][int*]symbol" returning the integer multiplier, or nullopt
// when the term does not end in symbol.
std::optional<mpz_class> symbol_multiple(std::string term, const std::string& symbol,
                                         std::string_view whole)
{
    if (term.size() < symbol.size() || term.compare(term.size() - symbol.size(), symbol.size(), symbol) != 0) {
        return std::nullopt;
    }
    term.resize(term.size() - symbol.size());
    if (term.empty() || term == "+") return mpz_class(1);
    if (term == "-") return mpz_class(-1);
    if (term.back() != '*') fail(Errc::ParseError, "malformed group element '" + std::string(whole) + "'");
    term.pop_back();
    if (!term.empty() && term.front() == '+') term.erase(term.begin());
    return parse_integer(term, whole);
}

} // namespace

GroupDescriptor GroupDescriptor::dense_quadratic(std::uint32_t d)
{
    if (d < 2 || is_perfect_square(d)) {
        fail(Errc::DomainError, "sqrt(" + std::to_string(d) + ") is not irrational");
    }
    return {GroupKind::DenseQuadratic, d};
}

std::string to_string(const GroupDescriptor& d)
{
    switch (d.kind) {
    case GroupKind::IntegerRankOne: return "Z";
    case GroupKind::LexPairRankTwo: return "Z^2 (lex)";
    case GroupKind::DenseQuadratic: return "Z + Z*sqrt(" + std::to_string(d.radicand) + ")";
    case GroupKind::ScaledInteger: return "lambda*Z";
    }
    return "?";
}

GroupElement GroupElement::zero(const GroupDescriptor& d)
{
    GroupElement g;
    g.desc_ = d;
    return g;
}

GroupElement GroupElement::infinity(const GroupDescriptor& d)
{
    GroupElement g;
    g.desc_ = d;
    g.infinite_ = true;
    return g;
}

GroupElement GroupElement::make(const GroupDescriptor& d, mpz_class a, mpz_class b)
{
    if ((d.kind == GroupKind::IntegerRankOne || d.kind == GroupKind::ScaledInteger) && b != 0) {
        fail(Errc::DomainError, "rank-one value group takes a single coordinate");
    }
    GroupElement g;
    g.desc_ = d;
    g.a_ = std::move(a);
    g.b_ = std::move(b);
    return g;
}

GroupElement GroupElement::operator-() const
{
    if (infinite_) fail(Errc::DomainError, "negation of infinity");
    GroupElement g = *this;
    g.a_ = -a_;
    g.b_ = -b_;
    return g;
}

GroupElement& GroupElement::operator+=(const GroupElement& rhs)
{
    require_same(*this, rhs);
    if (infinite_ || rhs.infinite_) {
        infinite_ = true;
        a_ = 0;
        b_ = 0;
        return *this;
    }
    a_ += rhs.a_;
    b_ += rhs.b_;
    return *this;
}

GroupElement& GroupElement::operator-=(const GroupElement& rhs)
{
    require_same(*this, rhs);
    if (rhs.infinite_) fail(Errc::DomainError, "subtraction of infinity");
    if (infinite_) return *this;
    a_ -= rhs.a_;
    b_ -= rhs.b_;
    return *this;
}

std::strong_ordering operator<=>(const GroupElement& x, const GroupElement& y)
{
    require_same(x, y);
    if (x.infinite_ || y.infinite_) {
        if (x.infinite_ && y.infinite_) return std::strong_ordering::equal;
        return x.infinite_ ? std::strong_ordering::greater : std::strong_ordering::less;
    }
    const mpz_class da = x.a_ - y.a_;
    const mpz_class db = x.b_ - y.b_;
    int s = 0;
    switch (x.desc_.kind) {
    case GroupKind::IntegerRankOne:
    case GroupKind::ScaledInteger: s = sgn(da); break;
    case GroupKind::LexPairRankTwo: s = da != 0 ? sgn(da) : sgn(db); break;
    case GroupKind::DenseQuadratic: s = quadratic_sign(da, db, x.desc_.radicand); break;
    }
    if (s < 0) return std::strong_ordering::less;
    if (s > 0) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

std::strong_ordering compare(const GroupElement& x, const GroupElement& y) { return x <=> y; }

GroupElement add(const GroupElement& x, const GroupElement& y) { return x + y; }

GroupElement scalar_mul(const mpz_class& n, const GroupElement& x)
{
    if (x.is_infinite()) {
        if (n <= 0) fail(Errc::DomainError, "non-positive multiple of infinity");
        return x;
    }
    return GroupElement::make(x.descriptor(), n * x.first(), n * x.second());
}

bool is_positive(const GroupElement& x)
{
    return x > GroupElement::zero(x.descriptor());
}

std::optional<GroupElement> min_positive(const GroupDescriptor& d)
{
    switch (d.kind) {
    case GroupKind::IntegerRankOne:
    case GroupKind::ScaledInteger: return GroupElement::make(d, 1);
    case GroupKind::LexPairRankTwo: return GroupElement::make(d, 0, 1);
    case GroupKind::DenseQuadratic: return std::nullopt;
    }
    return std::nullopt;
}

std::optional<mpz_class> exact_quotient(const GroupElement& x, const GroupElement& unit)
{
    require_same(x, unit);
    if (x.is_infinite() || unit.is_infinite() || unit.is_zero()) return std::nullopt;
    // unit = (u1, u2); find m with x = m*unit componentwise.
    std::optional<mpz_class> m;
    auto component = [&](const mpz_class& xv, const mpz_class& uv) {
        if (uv == 0) return xv == 0;
        if (!mpz_divisible_p(xv.get_mpz_t(), uv.get_mpz_t())) return false;
        mpz_class q = xv / uv;
        if (m && *m != q) return false;
        m = q;
        return true;
    };
    if (!component(x.first(), unit.first()) || !component(x.second(), unit.second())) return std::nullopt;
    return m;
}

std::optional<GroupElement> positive_below(const GroupElement& g)
{
    const GroupDescriptor& d = g.descriptor();
    if (d.kind != GroupKind::DenseQuadratic || !is_positive(g) || g.is_infinite()) return std::nullopt;

    // Continued fraction of sqrt(n): p_k - q_k*sqrt(n) -> 0 with alternating sign.
    const mpz_class n = d.radicand;
    const mpz_class a0 = sqrt(n);
    mpz_class m = 0, den = 1, a = a0;
    mpz_class p_prev = 1, p = a0;
    mpz_class q_prev = 0, q = 1;
    for (;;) {
        GroupElement e = GroupElement::make(d, p, -q);
        if (!is_positive(e)) e = -e;
        if (e < g) return e;
        m = den * a - m;
        den = (n - m * m) / den;
        a = (a0 + m) / den;
        mpz_class p_next = a * p + p_prev;
        mpz_class q_next = a * q + q_prev;
        p_prev = p;
        p = p_next;
        q_prev = q;
        q = q_next;
    }
}

std::string to_string(const GroupElement& x)
{
    if (x.is_infinite()) return "inf";
    const auto& d = x.descriptor();
    switch (d.kind) {
    case GroupKind::IntegerRankOne: return x.first().get_str();
    case GroupKind::LexPairRankTwo: return "(" + x.first().get_str() + "," + x.second().get_str() + ")";
    case GroupKind::ScaledInteger: {
        const mpz_class& k = x.first();
        if (k == 0) return "0";
        if (k == 1) return "lambda";
        if (k == -1) return "-lambda";
        return k.get_str() + "*lambda";
    }
    case GroupKind::DenseQuadratic: {
        const std::string root = "sqrt(" + std::to_string(d.radicand) + ")";
        const mpz_class& a = x.first();
        const mpz_class& b = x.second();
        if (b == 0) return a.get_str();
        std::ostringstream out;
        mpz_class mag = abs(b);
        std::string tail = mag == 1 ? root : mag.get_str() + "*" + root;
        if (a == 0) {
            out << (b < 0 ? "-" : "") << tail;
        } else {
            out << a.get_str() << (b < 0 ? " - " : " + ") << tail;
        }
        return out.str();
    }
    }
    return "?";
}

GroupElement parse_group_element(std::string_view text, const GroupDescriptor& d)
{
    const std::string s = strip_spaces(text);
    if (s == "inf") return GroupElement::infinity(d);
    switch (d.kind) {
    case GroupKind::IntegerRankOne: return GroupElement::make(d, parse_integer(s, text));
    case GroupKind::LexPairRankTwo: {
        if (s.size() < 5 || s.front() != '(' || s.back() != ')') break;
        const auto comma = s.find(',');
        if (comma == std::string::npos) break;
        return GroupElement::make(d, parse_integer(s.substr(1, comma - 1), text),
                                  parse_integer(s.substr(comma + 1, s.size() - comma - 2), text));
    }
    case GroupKind::ScaledInteger: {
        if (auto k = symbol_multiple(s, "lambda", text)) return GroupElement::make(d, *k);
        return GroupElement::make(d, parse_integer(s, text));
    }
    case GroupKind::DenseQuadratic: {
        const std::string root = "sqrt(" + std::to_string(d.radicand) + ")";
        mpz_class a = 0, b = 0;
        for (auto term : signed_terms(s)) {
            if (auto k = symbol_multiple(term, root, text)) {
                b += *k;
            } else {
                if (term.front() == '+') term.erase(term.begin());
                a += parse_integer(term, text);
            }
        }
        return GroupElement::make(d, a, b);
    }
    }
    fail(Errc::ParseError, "malformed group element '" + std::string(text) + "'");
}

} // namespace dedekind
