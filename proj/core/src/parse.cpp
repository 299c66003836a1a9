#include "dedekind/parse.hpp"

#include <cctype>
#include <string>

namespace dedekind {

namespace {

constexpr unsigned long kMaxExponent = 4096;

class Parser {
public:
    Parser(std::string_view text, const ValuationDescriptor& d, bool allow_main_variable)
        : text_(text), desc_(d), allow_main_(allow_main_variable)
    {
    }

    Poly parse()
    {
        skip_space();
        if (at_end()) error("empty expression");
        Poly p = expr();
        skip_space();
        if (!at_end()) error(std::string("unexpected '") + text_[pos_] + "'");
        return p;
    }

private:
    Poly expr()
    {
        skip_space();
        bool negate = false;
        if (peek() == '+' || peek() == '-') {
            negate = get() == '-';
        }
        Poly acc = term();
        if (negate) acc = -acc;
        for (;;) {
            skip_space();
            const char c = peek();
            if (c != '+' && c != '-') break;
            get();
            Poly rhs = term();
            acc = c == '+' ? acc + rhs : acc - rhs;
        }
        return acc;
    }

    Poly term()
    {
        Poly acc = unary();
        for (;;) {
            skip_space();
            const char c = peek();
            if (c != '*' && c != '/') break;
            get();
            Poly rhs = unary();
            if (c == '*') {
                acc = acc * rhs;
            } else {
                if (rhs.degree() > 0) error("division by a polynomial in the main variable");
                if (rhs.is_zero()) error("division by zero");
                acc = acc.scaled(rhs.leading().inverse());
            }
        }
        return acc;
    }

    Poly unary()
    {
        skip_space();
        if (peek() == '-') {
            get();
            return -unary();
        }
        if (peek() == '+') {
            get();
            return unary();
        }
        return power();
    }

    Poly power()
    {
        Poly base = primary();
        skip_space();
        if (peek() != '^') return base;
        get();
        skip_space();
        const std::size_t start = pos_;
        while (std::isdigit(static_cast<unsigned char>(peek()))) get();
        if (start == pos_) error("expected a non-negative integer exponent");
        const std::string digits(text_.substr(start, pos_ - start));
        if (digits.size() > 6 || std::stoul(digits) > kMaxExponent) error("exponent too large");
        return pow(base, static_cast<unsigned>(std::stoul(digits)));
    }

    Poly primary()
    {
        skip_space();
        const char c = peek();
        if (c == '(') {
            get();
            Poly inner = expr();
            skip_space();
            if (get() != ')') error("expected ')'");
            return inner;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            const std::size_t start = pos_;
            while (std::isdigit(static_cast<unsigned char>(peek()))) get();
            const mpz_class n(std::string(text_.substr(start, pos_ - start)));
            return Poly::constant(FieldElement::from_integer(desc_, n));
        }
        if (c == 'x' || c == 'Z') {
            get();
            if (!allow_main_) error("the main variable is not allowed in a field element");
            return Poly::x(desc_);
        }
        if (c == 'X' || c == 'Y') {
            get();
            if (!desc_.has_variable(c)) {
                error(std::string("variable ") + c + " is not part of " + to_string(desc_));
            }
            return Poly::constant(FieldElement::variable(desc_, c));
        }
        if (at_end()) error("unexpected end of input");
        error(std::string("unexpected '") + c + "'");
    }

    void skip_space()
    {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }
    bool at_end() const { return pos_ >= text_.size(); }
    char peek() const { return at_end() ? '\0' : text_[pos_]; }
    char get() { return at_end() ? '\0' : text_[pos_++]; }

    [[noreturn]] void error(const std::string& what) const
    {
        fail(Errc::ParseError, "cannot parse '" + std::string(text_) + "' at offset " + std::to_string(pos_) + ": " + what);
    }

    std::string_view text_;
    const ValuationDescriptor& desc_;
    bool allow_main_;
    std::size_t pos_ = 0;
};

} // namespace

FieldElement parse_field_element(std::string_view text, const ValuationDescriptor& d)
{
    const Poly p = Parser(text, d, false).parse();
    return p.coeff(0);
}

Poly parse_poly(std::string_view text, const ValuationDescriptor& d)
{
    return Parser(text, d, true).parse();
}

} // namespace dedekind
