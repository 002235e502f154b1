#include "charp/parse.hpp"

#include <cctype>

namespace charp {

namespace {

class Parser {
public:
    Parser(const std::string& text, std::uint32_t p, std::size_t nvars)
        : text_(text), p_(p), nvars_(nvars) {}

    MultiPoly parse() {
        std::vector<std::pair<Monomial, std::int64_t>> terms;
        terms.push_back(parse_term(std::nullopt));
        skip_ws();
        while (!at_end()) {
            char c = peek();
            if (c != '+' && c != '-') throw ParseError("expected '+' or '-'", pos_);
            ++pos_;
            terms.push_back(parse_term(c == '-' ? -1 : +1));
            skip_ws();
        }
        return MultiPoly::from_terms(p_, nvars_, std::move(terms));
    }

private:
    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }
    bool at_end() {
        skip_ws();
        return pos_ >= text_.size();
    }
    char peek() {
        skip_ws();
        if (pos_ >= text_.size()) throw ParseError("unexpected end of input", pos_);
        return text_[pos_];
    }

    std::int64_t parse_integer() {
        skip_ws();
        std::size_t start = pos_;
        std::uint64_t v = 0;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
            v = v * 10 + static_cast<std::uint64_t>(text_[pos_] - '0');
            v %= p_;  // reduce on ingest so arbitrarily long literals are fine
            ++pos_;
        }
        if (pos_ == start) throw ParseError("expected integer", pos_);
        return static_cast<std::int64_t>(v);
    }

    // factor ::= 'x' index ['^' integer]
    void parse_factor(Monomial& m) {
        skip_ws();
        if (peek() != 'x') throw ParseError("expected variable", pos_);
        ++pos_;
        if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_])))
            throw ParseError("expected variable index", pos_);
        std::size_t idx_pos = pos_;
        std::uint64_t idx = 0;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
            idx = idx * 10 + static_cast<std::uint64_t>(text_[pos_] - '0');
            if (idx > 1000000) throw ParseError("variable index out of range", idx_pos);
            ++pos_;
        }
        if (idx >= nvars_)
            throw ParseError("variable x" + std::to_string(idx) + " out of range (nvars=" +
                                 std::to_string(nvars_) + ")",
                             idx_pos);
        std::uint64_t e = 1;
        skip_ws();
        if (pos_ < text_.size() && text_[pos_] == '^') {
            ++pos_;
            skip_ws();
            std::size_t exp_pos = pos_;
            if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_])))
                throw ParseError("expected exponent", pos_);
            e = 0;
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
                e = e * 10 + static_cast<std::uint64_t>(text_[pos_] - '0');
                if (e > Monomial::kMaxExponent) throw ParseError("exponent too large", exp_pos);
                ++pos_;
            }
        }
        m[idx] += static_cast<std::uint32_t>(e);
    }

    // term ::= [sign] [integer '*'] factor ('*' factor)*
    std::pair<Monomial, std::int64_t> parse_term(std::optional<int> outer_sign) {
        std::int64_t sign = outer_sign.value_or(1);
        skip_ws();
        if (!outer_sign) {
            // leading sign of the very first term
            if (!at_end() && (peek() == '+' || peek() == '-')) {
                if (peek() == '-') sign = -1;
                ++pos_;
            }
        }
        std::int64_t coeff = 1;
        skip_ws();
        if (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
            coeff = parse_integer();
            if (peek() != '*') throw ParseError("expected '*' after coefficient", pos_);
            ++pos_;
        }
        Monomial m(nvars_);
        parse_factor(m);
        while (true) {
            skip_ws();
            if (pos_ < text_.size() && text_[pos_] == '*') {
                ++pos_;
                parse_factor(m);
            } else {
                break;
            }
        }
        return {std::move(m), sign * coeff};
    }

    const std::string& text_;
    std::uint32_t p_;
    std::size_t nvars_;
    std::size_t pos_ = 0;
};

}  // namespace

MultiPoly poly_parse(const std::string& text, std::uint32_t p, std::size_t nvars) {
    require_prime(p);
    Parser parser(text, p, nvars);
    return parser.parse();
}

}  // namespace charp
