#include "ginvar/parser.hpp"

#include <algorithm>
#include <cctype>
#include <map>

#include "ginvar/error.hpp"

namespace ginvar {

namespace {

struct Token {
    enum Kind { Word, Number, Punct, End } kind = End;
    std::string text;
    int line = 0, col = 0;
};

class Lexer {
public:
    explicit Lexer(std::string_view text) {
        int line = 1, col = 1;
        bool comment = false;
        for (char ch : text) {
            if (ch == '\n') {
                comment = false;
                flush();
                line += 1;
                col = 1;
                continue;
            }
            if (ch == '#') comment = true;
            if (comment || std::isspace(static_cast<unsigned char>(ch))) flush();
            else scan(ch, line, col);
            col += 1;
        }
        flush();
        toks_.push_back({Token::End, "", line, col});
    }

    const Token& peek() const { return toks_[pos_]; }
    Token next() { return toks_[pos_ < toks_.size() - 1 ? pos_++ : pos_]; }

private:
    void scan(char ch, int line, int col) {
        bool alpha = std::isalpha(static_cast<unsigned char>(ch)) || ch == '_';
        bool digit = std::isdigit(static_cast<unsigned char>(ch));
        if (alpha || digit) {
            Token::Kind want = alpha ? Token::Word : Token::Number;
            // identifiers may contain digits after the first character
            bool extends = !cur_.text.empty() &&
                           (cur_.kind == want || (cur_.kind == Token::Word && digit));
            if (!extends) {
                flush();
                cur_ = {want, "", line, col};
            }
            cur_.text += ch;
        } else {
            flush();
            toks_.push_back({Token::Punct, std::string(1, ch), line, col});
        }
    }
    void flush() {
        if (!cur_.text.empty()) toks_.push_back(cur_);
        cur_ = {};
    }

    Token cur_;
    std::vector<Token> toks_;
    size_t pos_ = 0;
};

[[noreturn]] void fail(const Token& at, const std::string& msg) {
    throw ParseError(at.line, at.col, msg);
}

long to_long(const Token& t) {
    try {
        return std::stol(t.text);
    } catch (const std::exception&) {
        fail(t, "number out of range: " + t.text);
    }
}

template <class F> struct GenParser {
    Lexer& lex;
    const F& field;
    const std::map<std::string, int>& varindex; // name -> 1-based index
    int nvars;

    Monomial parse_monomial() {
        Monomial m = Monomial::one(nvars);
        while (true) {
            const Token& t = lex.peek();
            if (t.kind != Token::Word) fail(t, "expected a variable name");
            auto it = varindex.find(t.text);
            if (it == varindex.end()) fail(t, "unknown variable '" + t.text + "'");
            lex.next();
            int exp = 1;
            if (lex.peek().kind == Token::Punct && lex.peek().text == "^") {
                lex.next();
                Token e = lex.next();
                if (e.kind != Token::Number) fail(e, "expected an exponent");
                exp = static_cast<int>(to_long(e));
                if (exp < 1) fail(e, "exponent must be positive");
            }
            m.e[it->second - 1] += exp;
            m.deg += exp;
            if (lex.peek().kind == Token::Punct && lex.peek().text == "*" ) {
                lex.next();
                continue;
            }
            return m;
        }
    }

    typename F::Elem parse_coeff(bool negative) {
        Token num = lex.next();
        typename F::Elem c = field.from_int(to_long(num));
        if (lex.peek().kind == Token::Punct && lex.peek().text == "/") {
            lex.next();
            Token den = lex.next();
            if (den.kind != Token::Number) fail(den, "expected a denominator");
            typename F::Elem d = field.from_int(to_long(den));
            if (field.is_zero(d)) fail(den, "zero denominator");
            c = field.div(c, d);
        }
        return negative ? field.neg(c) : c;
    }

    // term: coeff, coeff '*' monomial, or monomial
    Term<F> parse_term(bool negative, const Token& at) {
        if (lex.peek().kind == Token::Number) {
            typename F::Elem c = parse_coeff(negative);
            if (lex.peek().kind == Token::Punct && lex.peek().text == "*") {
                lex.next();
                return {c, parse_monomial()};
            }
            fail(at, "constant term; generators must be homogeneous of positive degree");
        }
        if (lex.peek().kind == Token::Word) {
            typename F::Elem c = negative ? field.neg(field.one()) : field.one();
            return {c, parse_monomial()};
        }
        fail(lex.peek(), "expected a term");
    }

    Polynomial<F> parse_poly() {
        std::vector<Term<F>> terms;
        bool negative = false;
        if (lex.peek().kind == Token::Punct && (lex.peek().text == "-" || lex.peek().text == "+")) {
            negative = lex.peek().text == "-";
            lex.next();
        }
        Token at = lex.peek();
        terms.push_back(parse_term(negative, at));
        while (lex.peek().kind == Token::Punct && (lex.peek().text == "+" || lex.peek().text == "-")) {
            negative = lex.next().text == "-";
            Token here = lex.peek();
            terms.push_back(parse_term(negative, here));
        }
        Polynomial<F> f = make_poly(std::move(terms), MonomialOrder::grevlex, field);
        if (!f.is_homogeneous()) {
            fail(at, "inhomogeneous generator: has terms of degree " +
                         std::to_string(f.terms.back().m.deg) + " and " +
                         std::to_string(f.terms.front().m.deg));
        }
        return f;
    }

    std::vector<Polynomial<F>> parse_list() {
        std::vector<Polynomial<F>> gens;
        if (lex.peek().kind == Token::End) return gens;
        while (true) {
            Polynomial<F> f = parse_poly();
            bool dup = false;
            for (const auto& g : gens)
                if (f.equals(g, field)) { dup = true; break; }
            if (!dup && !f.is_zero()) gens.push_back(std::move(f));
            const Token& t = lex.peek();
            if (t.kind == Token::End) return gens;
            if (t.kind == Token::Punct && t.text == ",") {
                lex.next();
                continue;
            }
            fail(t, "expected ',' or end of input");
        }
    }
};

} // namespace

ParsedIdeal parse_ideal(std::string_view text) {
    Lexer lex(text);

    Token t = lex.next();
    if (!(t.kind == Token::Word && t.text == "field")) fail(t, "expected 'field'");
    Token fkind = lex.next();
    unsigned long characteristic = 0;
    if (fkind.kind == Token::Word && fkind.text == "Q") {
        characteristic = 0;
    } else if (fkind.kind == Token::Word && fkind.text == "Fp") {
        Token p = lex.next();
        if (p.kind != Token::Number) fail(p, "expected a prime after 'Fp'");
        long v = to_long(p);
        if (v < 2 || static_cast<unsigned long>(v) >= (1UL << 31) || !is_prime(static_cast<unsigned long>(v)))
            fail(p, "characteristic must be a prime below 2^31");
        characteristic = static_cast<unsigned long>(v);
    } else {
        fail(fkind, "field must be 'Q' or 'Fp <prime>'");
    }

    t = lex.next();
    if (!(t.kind == Token::Word && t.text == "vars")) fail(t, "expected 'vars'");
    std::vector<std::string> vars;
    std::map<std::string, int> varindex;
    while (lex.peek().kind == Token::Word && lex.peek().text != "gens") {
        Token v = lex.next();
        if (varindex.count(v.text)) fail(v, "duplicate variable '" + v.text + "'");
        vars.push_back(v.text);
        varindex[v.text] = static_cast<int>(vars.size());
    }
    if (vars.empty()) fail(lex.peek(), "expected at least one variable");

    t = lex.next();
    if (!(t.kind == Token::Word && t.text == "gens")) fail(t, "expected 'gens'");

    if (characteristic == 0) {
        IdealInput<RationalField> out;
        out.vars = vars;
        GenParser<RationalField> gp{lex, out.field, varindex, static_cast<int>(vars.size())};
        out.gens = gp.parse_list();
        return out;
    }
    IdealInput<PrimeField> out{PrimeField(characteristic), vars, {}};
    GenParser<PrimeField> gp{lex, out.field, varindex, static_cast<int>(vars.size())};
    out.gens = gp.parse_list();
    return out;
}

namespace {

template <class F> std::string print_input(const IdealInput<F>& in, const std::string& fieldline) {
    std::string s = fieldline + "\nvars";
    for (const auto& v : in.vars) s += " " + v;
    s += "\ngens ";
    for (size_t k = 0; k < in.gens.size(); ++k) {
        if (k) s += ", ";
        s += poly_str(in.gens[k], in.vars, in.field);
    }
    s += "\n";
    return s;
}

} // namespace

std::string print_ideal(const ParsedIdeal& input) {
    if (const auto* q = std::get_if<IdealInput<RationalField>>(&input))
        return print_input(*q, "field Q");
    const auto& p = std::get<IdealInput<PrimeField>>(input);
    return print_input(p, "field Fp " + std::to_string(p.field.characteristic()));
}

} // namespace ginvar
