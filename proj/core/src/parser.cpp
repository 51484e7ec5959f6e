#include "autstab/parser.hpp"

#include <cctype>

#include "autstab/error.hpp"

namespace autstab {

namespace {

class Parser {
public:
    Parser(const std::string& text, SignaturePtr sig) : text_(text), sig_(std::move(sig)) {}

    Element run() {
        Element e = parse_expr();
        skip_ws();
        if (pos_ != text_.size()) error("trailing input");
        return e;
    }

private:
    [[noreturn]] void error(const std::string& what) const {
        fail(ErrorCode::ParseError, what + " at position " + std::to_string(pos_));
    }

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    bool consume(char c) {
        skip_ws();
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    char peek() {
        skip_ws();
        return pos_ < text_.size() ? text_[pos_] : '\0';
    }

    Element parse_expr() {
        Element acc = parse_term();
        while (true) {
            if (consume('+')) {
                acc += parse_term();
            } else if (consume('-')) {
                acc -= parse_term();
            } else {
                return acc;
            }
        }
    }

    Element parse_term() {
        const bool negate = consume('-');
        Element acc = parse_factor();
        while (consume('*')) acc *= parse_factor();
        return negate ? -acc : acc;
    }

    Element parse_factor() {
        Element base = parse_base();
        if (!consume('^')) return base;
        bool neg = consume('-');
        skip_ws();
        if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
            error("expected exponent digits");
        }
        long e = 0;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
            e = e * 10 + (text_[pos_] - '0');
            if (e > 1'000'000) error("exponent too large");
            ++pos_;
        }
        return base.pow(static_cast<int>(neg ? -e : e));
    }

    Element parse_base() {
        skip_ws();
        if (pos_ >= text_.size()) error("unexpected end of input");
        const char c = text_[pos_];
        if (std::isdigit(static_cast<unsigned char>(c))) return parse_number();
        if (std::isalpha(static_cast<unsigned char>(c))) return parse_symbol();
        if (c == '(') {
            ++pos_;
            Element e = parse_expr();
            if (!consume(')')) error("expected ')'");
            return e;
        }
        error(std::string("unexpected character '") + c + "'");
    }

    Element parse_number() {
        mpz_class num = parse_integer();
        if (consume('/')) {
            skip_ws();
            if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
                error("expected denominator digits");
            }
            mpz_class den = parse_integer();
            if (den == 0) fail(ErrorCode::DivisionByZero, "zero denominator in literal");
            return Element::constant(sig_, Scalar::from_mpq(sig_->field(), mpq_class(num, den)));
        }
        return Element::constant(sig_, Scalar::from_mpq(sig_->field(), mpq_class(num)));
    }

    mpz_class parse_integer() {
        mpz_class v = 0;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
            v = v * 10 + (text_[pos_] - '0');
            ++pos_;
        }
        return v;
    }

    Element parse_symbol() {
        std::size_t start = pos_;
        while (pos_ < text_.size() &&
               (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
            ++pos_;
        }
        std::string name = text_.substr(start, pos_ - start);
        const int g = sig_->generator_index(name);
        if (g < 0) {
            fail(ErrorCode::UnknownSymbol,
                 "'" + name + "' at position " + std::to_string(start));
        }
        return Element::generator(sig_, g);
    }

    const std::string& text_;
    std::size_t pos_ = 0;
    SignaturePtr sig_;
};

}  // namespace

Element parse_element(const std::string& text, SignaturePtr sig) {
    if (!sig) fail(ErrorCode::SignatureMismatch, "parse needs a signature");
    return Parser(text, std::move(sig)).run();
}

std::string format_monomial(const AlgebraSignature& sig, const Monomial& m) {
    if (static_cast<int>(m.exponents.size()) != sig.generator_count()) {
        fail(ErrorCode::LengthMismatch, "monomial arity does not match signature");
    }
    std::string out;
    for (int g = 0; g < sig.generator_count(); ++g) {
        const std::int32_t e = m.exponents[static_cast<std::size_t>(g)];
        if (e == 0) continue;
        if (!out.empty()) out += '*';
        out += sig.generator_name(g);
        if (e != 1) {
            out += '^';
            out += std::to_string(e);
        }
    }
    return out.empty() ? "1" : out;
}

std::string format_element(const Element& f) {
    if (f.is_zero()) return "0";
    const AlgebraSignature& sig = *f.signature();
    std::string out;
    bool first = true;
    for (auto it = f.terms().rbegin(); it != f.terms().rend(); ++it) {
        const auto& [m, c] = *it;
        const bool neg = c.sign() < 0;
        const Scalar mag = neg ? -c : c;
        if (first) {
            if (neg) out += '-';
            first = false;
        } else {
            out += neg ? " - " : " + ";
        }
        if (m.is_unit()) {
            out += mag.to_string();
        } else if (mag.is_one()) {
            out += format_monomial(sig, m);
        } else {
            out += mag.to_string() + "*" + format_monomial(sig, m);
        }
    }
    return out;
}

}  // namespace autstab
