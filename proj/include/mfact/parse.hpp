#ifndef MFACT_PARSE_HPP
#define MFACT_PARSE_HPP

#include <cctype>
#include <string>
#include <string_view>

#include "polynomial.hpp"

namespace mfact {

// Cursor over source text that tracks line/column for diagnostics.
class TextCursor {
public:
    explicit TextCursor(std::string_view text) : text_(text) {}

    bool eof() const { return pos_ >= text_.size(); }
    char peek() const { return eof() ? '\0' : text_[pos_]; }

    char get()
    {
        char c = peek();
        ++pos_;
        if (c == '\n') {
            ++line_;
            col_ = 1;
        } else {
            ++col_;
        }
        return c;
    }

    void skip_space(bool skip_newlines = true)
    {
        while (!eof()) {
            char c = peek();
            if (c == '#') { // comment to end of line
                while (!eof() && peek() != '\n')
                    get();
                continue;
            }
            if (c == '\n' && !skip_newlines)
                return;
            if (std::isspace(static_cast<unsigned char>(c)))
                get();
            else
                return;
        }
    }

    bool try_consume(char c)
    {
        if (peek() == c) {
            get();
            return true;
        }
        return false;
    }

    [[noreturn]] void error(const std::string& expected) const
    {
        fail(ErrorKind::ParseError, "line " + std::to_string(line_) + ", column " +
                                        std::to_string(col_) + ": expected " + expected);
    }

    void expect(char c)
    {
        if (!try_consume(c))
            error(std::string("'") + c + "'");
    }

    std::string identifier()
    {
        skip_space();
        if (!std::isalpha(static_cast<unsigned char>(peek())) && peek() != '_')
            error("identifier");
        std::string s;
        while (!eof() && (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_'))
            s.push_back(get());
        return s;
    }

    long natural()
    {
        skip_space();
        if (!std::isdigit(static_cast<unsigned char>(peek())))
            error("number");
        long v = 0;
        while (!eof() && std::isdigit(static_cast<unsigned char>(peek()))) {
            v = v * 10 + (get() - '0');
            if (v > 1'000'000'000L)
                error("smaller number");
        }
        return v;
    }

    std::size_t line() const { return line_; }
    std::size_t column() const { return col_; }

private:
    std::string_view text_;
    std::size_t pos_ = 0;
    std::size_t line_ = 1;
    std::size_t col_ = 1;
};

// Recursive-descent parser for the polynomial syntax: integer or a/b
// coefficients, declared variable names, operators + - *, exponent ^,
// parentheses.
template <class K>
class PolynomialParser {
public:
    PolynomialParser(TextCursor& cur, RingPtr ring) : cur_(cur), ring_(std::move(ring)) {}

    Polynomial<K> parse() { return expression(); }

private:
    Polynomial<K> expression()
    {
        cur_.skip_space();
        bool neg = false;
        while (cur_.peek() == '+' || cur_.peek() == '-') {
            if (cur_.get() == '-')
                neg = !neg;
            cur_.skip_space();
        }
        Polynomial<K> acc = term();
        if (neg)
            acc = -acc;
        cur_.skip_space();
        while (cur_.peek() == '+' || cur_.peek() == '-') {
            char op = cur_.get();
            Polynomial<K> t = term();
            acc = (op == '+') ? acc + t : acc - t;
            cur_.skip_space();
        }
        return acc;
    }

    Polynomial<K> term()
    {
        Polynomial<K> acc = factor();
        cur_.skip_space();
        while (cur_.peek() == '*') {
            cur_.get();
            acc = acc * factor();
            cur_.skip_space();
        }
        return acc;
    }

    Polynomial<K> factor()
    {
        cur_.skip_space();
        bool neg = false;
        while (cur_.peek() == '-') {
            cur_.get();
            neg = !neg;
            cur_.skip_space();
        }
        Polynomial<K> base = atom();
        cur_.skip_space();
        if (cur_.peek() == '^') {
            cur_.get();
            long e = cur_.natural();
            Polynomial<K> acc = Polynomial<K>::one(ring_);
            for (long i = 0; i < e; ++i)
                acc = acc * base;
            base = acc;
        }
        return neg ? -base : base;
    }

    Polynomial<K> atom()
    {
        cur_.skip_space();
        char c = cur_.peek();
        if (c == '(') {
            cur_.get();
            Polynomial<K> p = expression();
            cur_.skip_space();
            cur_.expect(')');
            return p;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            long num = cur_.natural();
            if (cur_.peek() == '/') {
                cur_.get();
                long den = cur_.natural();
                if (den == 0)
                    cur_.error("nonzero denominator");
                return Polynomial<K>::constant(ring_, scalar_from_fraction<K>(*ring_, num, den));
            }
            return Polynomial<K>::from_long(ring_, num);
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::string name = cur_.identifier();
            for (std::size_t i = 0; i < ring_->nvars(); ++i)
                if (ring_->variables[i] == name)
                    return Polynomial<K>::variable(ring_, i);
            cur_.error("declared variable (unknown name '" + name + "')");
        }
        cur_.error("polynomial atom");
    }

    TextCursor& cur_;
    RingPtr ring_;
};

template <class K>
Polynomial<K> parse_polynomial(const std::string& text, const RingPtr& ring)
{
    TextCursor cur(text);
    PolynomialParser<K> parser(cur, ring);
    Polynomial<K> p = parser.parse();
    cur.skip_space();
    if (!cur.eof())
        cur.error("end of input");
    return p;
}

} // namespace mfact

#endif
