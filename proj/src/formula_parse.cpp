#include <cctype>
#include <vector>

#include "hahn/error.hpp"
#include "hahn/formula.hpp"

namespace hahn::logic {

namespace {

struct Token {
    enum class Kind { ident, number, symbol, end };
    Kind kind;
    std::string text;
    std::size_t pos;
};

std::vector<Token> lex(std::string_view text) {
    std::vector<Token> out;
    std::size_t i = 0;
    while (i < text.size()) {
        const char c = text[i];
        if (std::isspace(static_cast<unsigned char>(c))) {
            ++i;
        } else if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            const std::size_t start = i;
            while (i < text.size() && (std::isalnum(static_cast<unsigned char>(text[i])) || text[i] == '_')) ++i;
            out.push_back({Token::Kind::ident, std::string(text.substr(start, i - start)), start});
        } else if (std::isdigit(static_cast<unsigned char>(c))) {
            const std::size_t start = i;
            while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
            out.push_back({Token::Kind::number, std::string(text.substr(start, i - start)), start});
        } else if (c == '<' && i + 1 < text.size() && text[i + 1] == '=') {
            out.push_back({Token::Kind::symbol, "<=", i});
            i += 2;
        } else if (std::string_view("+-*^=<&|!().").find(c) != std::string_view::npos) {
            out.push_back({Token::Kind::symbol, std::string(1, c), i});
            ++i;
        } else {
            throw SyntaxError(i, std::string("unexpected character '") + c + "'");
        }
    }
    out.push_back({Token::Kind::end, "", text.size()});
    return out;
}

bool is_keyword(const std::string& s) { return s == "Ex" || s == "All" || s.rfind("Div_", 0) == 0; }

class Parser {
public:
    explicit Parser(std::vector<Token> tokens) : tokens_(std::move(tokens)) {}

    FormulaPtr whole_formula() {
        FormulaPtr f = formula();
        expect_end();
        return f;
    }

    TermPtr whole_term() {
        TermPtr t = sum();
        expect_end();
        return t;
    }

private:
    const Token& peek() const { return tokens_[pos_]; }
    bool at_symbol(std::string_view s) const {
        return peek().kind == Token::Kind::symbol && peek().text == s;
    }
    bool at_ident(std::string_view s) const { return peek().kind == Token::Kind::ident && peek().text == s; }

    [[noreturn]] void fail(const std::string& msg) const {
        const Token& t = peek();
        throw SyntaxError(t.pos, msg + (t.kind == Token::Kind::end ? " (found end of input)" : " (found '" + t.text + "')"));
    }

    void expect_symbol(std::string_view s) {
        if (!at_symbol(s)) fail("expected '" + std::string(s) + "'");
        ++pos_;
    }

    void expect_end() {
        if (peek().kind != Token::Kind::end) fail("unexpected trailing input");
    }

    FormulaPtr formula() {
        if (at_ident("Ex") || at_ident("All")) {
            const bool is_exists = peek().text == "Ex";
            ++pos_;
            if (peek().kind != Token::Kind::ident || is_keyword(peek().text)) fail("expected a variable after binder");
            std::string name = peek().text;
            ++pos_;
            expect_symbol(".");
            FormulaPtr body = formula();
            return is_exists ? exists(std::move(name), std::move(body)) : forall(std::move(name), std::move(body));
        }
        return disjunction();
    }

    FormulaPtr disjunction() {
        FormulaPtr left = conjunction();
        while (at_symbol("|")) {
            ++pos_;
            left = lor(left, conjunction());
        }
        return left;
    }

    FormulaPtr conjunction() {
        FormulaPtr left = unary();
        while (at_symbol("&")) {
            ++pos_;
            left = land(left, unary());
        }
        return left;
    }

    FormulaPtr unary() {
        if (at_symbol("!")) {
            ++pos_;
            return lnot(unary());
        }
        if (at_ident("Ex") || at_ident("All")) return formula();
        if (at_symbol("(")) {
            // Either a parenthesized formula or an atom whose left term
            // starts with '('; try the formula reading first.
            const std::size_t saved = pos_;
            try {
                ++pos_;
                FormulaPtr inner = formula();
                expect_symbol(")");
                return inner;
            } catch (const SyntaxError& first) {
                pos_ = saved;
                try {
                    return atom();
                } catch (const SyntaxError& second) {
                    if (first.position() > second.position()) throw first;
                    throw;
                }
            }
        }
        return atom();
    }

    FormulaPtr atom() {
        if (peek().kind == Token::Kind::ident && peek().text.rfind("Div_", 0) == 0) {
            const std::string digits = peek().text.substr(4);
            if (digits.empty() || digits.find_first_not_of("0123456789") != std::string::npos || digits.size() > 3) {
                fail("Div_ needs a modulus");
            }
            ++pos_;
            expect_symbol("(");
            TermPtr t = sum();
            expect_symbol(")");
            return div_atom(std::stoi(digits), std::move(t));
        }
        TermPtr lhs = sum();
        if (at_symbol("=")) {
            ++pos_;
            return eq(lhs, sum());
        }
        if (at_symbol("<")) {
            ++pos_;
            return lt(lhs, sum());
        }
        if (at_symbol("<=")) {
            ++pos_;
            return le(lhs, sum());
        }
        fail("expected '=', '<' or '<='");
    }

    TermPtr sum() {
        TermPtr left = product();
        while (at_symbol("+") || at_symbol("-")) {
            const bool plus = peek().text == "+";
            ++pos_;
            TermPtr right = product();
            left = plus ? add(left, right) : sub(left, right);
        }
        return left;
    }

    TermPtr product() {
        TermPtr left = signed_factor();
        while (at_symbol("*")) {
            ++pos_;
            left = mul(left, signed_factor());
        }
        return left;
    }

    TermPtr signed_factor() {
        if (at_symbol("-")) {
            ++pos_;
            return neg(signed_factor());
        }
        return power();
    }

    TermPtr power() {
        TermPtr base = primary();
        if (at_symbol("^")) {
            ++pos_;
            if (peek().kind != Token::Kind::number || peek().text.size() > 6) fail("expected a small exponent");
            const auto e = static_cast<unsigned>(std::stoul(peek().text));
            ++pos_;
            return pow(std::move(base), e);
        }
        return base;
    }

    TermPtr primary() {
        const Token& t = peek();
        if (t.kind == Token::Kind::ident && !is_keyword(t.text)) {
            ++pos_;
            return var(t.text);
        }
        if (t.kind == Token::Kind::number) {
            ++pos_;
            return num(mpz_class(t.text));
        }
        if (at_symbol("(")) {
            ++pos_;
            TermPtr inner = sum();
            expect_symbol(")");
            return inner;
        }
        fail("expected a term");
    }

    std::vector<Token> tokens_;
    std::size_t pos_ = 0;
};

}  // namespace

FormulaPtr parse(std::string_view text, Signature sig) {
    FormulaPtr f = Parser(lex(text)).whole_formula();
    check_signature(f, sig);
    check_scoping(f);
    return f;
}

TermPtr parse_term(std::string_view text, Signature sig) {
    TermPtr t = Parser(lex(text)).whole_term();
    check_signature(eq(t, t), sig);
    return t;
}

}  // namespace hahn::logic
