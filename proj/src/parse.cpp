#include "hyperphase/parse.hpp"

#include <array>
#include <cctype>
#include <cmath>
#include <string>
#include <vector>

#include "hyperphase/error.hpp"
#include "hyperphase/motions.hpp"

namespace hyperphase {

namespace {

using cd = std::complex<double>;

class ExpressionParser {
public:
    ExpressionParser(std::string_view text, std::size_t offset) : text_(text), offset_(offset) {}

    cd parse_expression() {
        cd value = parse_term();
        for (;;) {
            skip_space();
            if (accept('+')) {
                value += parse_term();
            } else if (accept('-')) {
                value -= parse_term();
            } else {
                return value;
            }
        }
    }

    // Parses one expression that must be followed by end of input or one of
    // `terminators`.
    cd parse_until(std::string_view terminators) {
        skip_space();
        if (at_end() || terminators.find(peek()) != std::string_view::npos) {
            fail("expected a number");
        }
        cd value = parse_expression();
        skip_space();
        if (!at_end() && terminators.find(peek()) == std::string_view::npos) {
            fail(std::string("unexpected character '") + peek() + "'");
        }
        return value;
    }

    std::size_t position() const { return pos_; }
    bool at_end() const { return pos_ >= text_.size(); }
    char peek() const { return text_[pos_]; }

    bool accept(char c) {
        skip_space();
        if (!at_end() && peek() == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    void expect(char c) {
        if (!accept(c)) fail(std::string("expected '") + c + "'");
    }

    [[noreturn]] void fail(const std::string& message) const {
        throw ParseError(message, offset_ + pos_);
    }

    void skip_space() {
        while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
    }

private:
    bool starts_primary() {
        skip_space();
        if (at_end()) return false;
        const char c = peek();
        return std::isdigit(static_cast<unsigned char>(c)) || std::isalpha(static_cast<unsigned char>(c)) ||
               c == '.' || c == '(';
    }

    cd parse_term() {
        cd value = parse_unary();
        for (;;) {
            skip_space();
            if (accept('*')) {
                value *= parse_unary();
            } else if (accept('/')) {
                const std::size_t at = pos_;
                const cd divisor = parse_unary();
                if (divisor == 0.0) throw ParseError("division by zero", offset_ + at);
                value /= divisor;
            } else if (starts_primary()) {
                value *= parse_power();
            } else {
                return value;
            }
        }
    }

    cd parse_unary() {
        skip_space();
        if (accept('-')) return -parse_unary();
        if (accept('+')) return parse_unary();
        return parse_power();
    }

    cd parse_power() {
        const cd base = parse_primary();
        if (accept('^')) {
            const cd exponent = parse_unary();
            if (exponent.imag() == 0.0 && exponent.real() == std::round(exponent.real())) {
                return std::pow(base, static_cast<int>(exponent.real()));
            }
            return std::pow(base, exponent);
        }
        return base;
    }

    cd parse_primary() {
        skip_space();
        if (at_end()) fail("unexpected end of input");
        const char c = peek();
        if (c == '(') {
            ++pos_;
            const cd value = parse_expression();
            expect(')');
            return value;
        }
        if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') return parse_literal();
        if (std::isalpha(static_cast<unsigned char>(c))) return parse_identifier();
        fail(std::string("unexpected character '") + c + "'");
    }

    cd parse_literal() {
        const std::size_t start = pos_;
        auto digits = [&] {
            while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
        };
        digits();
        if (!at_end() && peek() == '.') {
            ++pos_;
            digits();
        }
        // Exponent only when digits follow, so "2e" stays 2 * e.
        if (!at_end() && (peek() == 'e' || peek() == 'E')) {
            std::size_t look = pos_ + 1;
            if (look < text_.size() && (text_[look] == '+' || text_[look] == '-')) ++look;
            if (look < text_.size() && std::isdigit(static_cast<unsigned char>(text_[look]))) {
                pos_ = look;
                digits();
            }
        }
        const std::string token(text_.substr(start, pos_ - start));
        if (token == ".") throw ParseError("malformed number", offset_ + start);
        return std::stod(token);
    }

    cd parse_identifier() {
        const std::size_t start = pos_;
        while (!at_end() && std::isalpha(static_cast<unsigned char>(peek()))) ++pos_;
        std::string name(text_.substr(start, pos_ - start));
        if (name == "sqrt") {
            if (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) {
                const std::size_t dstart = pos_;
                while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
                return std::sqrt(std::stod(std::string(text_.substr(dstart, pos_ - dstart))));
            }
            expect('(');
            const cd value = parse_expression();
            expect(')');
            return std::sqrt(value);
        }
        if (name == "pi") return kPi;
        if (name == "i") return cd(0.0, 1.0);
        if (name == "e") return std::exp(1.0);
        throw ParseError("unknown identifier '" + name + "'", offset_ + start);
    }

    std::string_view text_;
    std::size_t offset_;
    std::size_t pos_ = 0;
};

double require_real(cd value, std::size_t position) {
    if (value.imag() != 0.0) throw ParseError("expected a real number", position);
    return value.real();
}

// Splits `text` on `sep` at parenthesis depth 0, returning piece offsets.
std::vector<std::pair<std::size_t, std::string_view>> split_top(std::string_view text, char sep) {
    std::vector<std::pair<std::size_t, std::string_view>> parts;
    int depth = 0;
    std::size_t start = 0;
    for (std::size_t i = 0; i < text.size(); ++i) {
        if (text[i] == '(') ++depth;
        if (text[i] == ')') --depth;
        if (text[i] == sep && depth == 0) {
            parts.emplace_back(start, text.substr(start, i - start));
            start = i + 1;
        }
    }
    parts.emplace_back(start, text.substr(start));
    return parts;
}

cd parse_at(std::string_view text, std::size_t offset) {
    ExpressionParser p(text, offset);
    return p.parse_until("");
}

GenCircle parse_curve_at(std::string_view text, std::size_t offset) {
    std::size_t lead = 0;
    while (lead < text.size() && std::isspace(static_cast<unsigned char>(text[lead]))) ++lead;
    text.remove_prefix(lead);
    offset += lead;
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) {
        text.remove_suffix(1);
    }

    auto args_of = [&](std::string_view keyword) {
        const std::size_t open = keyword.size();
        if (text.size() < open + 2 || text[open] != '(' || text.back() != ')') {
            throw ParseError("expected " + std::string(keyword) + "(...)", offset + open);
        }
        return split_top(text.substr(open + 1, text.size() - open - 2), ',');
    };

    if (text.starts_with("circle")) {
        const auto args = args_of("circle");
        const std::size_t base = offset + 7;
        if (args.size() != 2) throw ParseError("circle takes (center, radius)", base);
        const cd center = parse_at(args[0].second, base + args[0].first);
        const double radius =
            require_real(parse_at(args[1].second, base + args[1].first), base + args[1].first);
        if (!(radius > 0.0)) throw ParseError("circle radius must be positive", base + args[1].first);
        return GenCircle::circle(center, radius);
    }
    if (text.starts_with("line")) {
        const auto args = args_of("line");
        const std::size_t base = offset + 5;
        if (args.size() == 1) {
            return GenCircle::vertical(
                require_real(parse_at(args[0].second, base + args[0].first), base));
        }
        if (args.size() == 2) {
            const cd point = parse_at(args[0].second, base + args[0].first);
            const double angle = require_real(parse_at(args[1].second, base + args[1].first),
                                              base + args[1].first);
            return GenCircle::line(point, angle);
        }
        throw ParseError("line takes (x) or (base, angle)", base);
    }
    throw ParseError("expected circle(...) or line(...)", offset);
}

}  // namespace

std::complex<double> parse_complex(std::string_view text) { return parse_at(text, 0); }

double parse_real(std::string_view text) { return require_real(parse_complex(text), 0); }

ParamRange parse_range(std::string_view text) {
    const auto colon = text.find(':');
    if (colon == std::string_view::npos) throw ParseError("expected lo:hi", 0);
    const double lo = require_real(parse_at(text.substr(0, colon), 0), 0);
    const double hi = require_real(parse_at(text.substr(colon + 1), colon + 1), colon + 1);
    return {lo, hi};
}

GenCircle parse_curve(std::string_view text) { return parse_curve_at(text, 0); }

Mobius parse_motion(std::string_view text) {
    const auto colon = text.find(':');
    if (colon == std::string_view::npos) {
        throw ParseError("expected mobius:, reflect: or preset:", 0);
    }
    const std::string_view kind = text.substr(0, colon);
    const std::string_view body = text.substr(colon + 1);
    const std::size_t base = colon + 1;

    if (kind == "mobius") {
        const auto parts = split_top(body, ',');
        if (parts.size() != 4) throw ParseError("mobius needs four coefficients a,b,c,d", base);
        std::array<cd, 4> k;
        for (std::size_t i = 0; i < 4; ++i) k[i] = parse_at(parts[i].second, base + parts[i].first);
        return Mobius(k[0], k[1], k[2], k[3]);
    }
    if (kind == "reflect") {
        const auto parts = split_top(body, ';');
        if (parts.size() != 2) throw ParseError("reflect needs two curves separated by ';'", base);
        const GenCircle first = parse_curve_at(parts[0].second, base + parts[0].first);
        const GenCircle second = parse_curve_at(parts[1].second, base + parts[1].first);
        return motion_from_reflections(first, second);
    }
    if (kind == "preset") {
        std::string name(body);
        for (const auto& p : motion_presets()) {
            if (p.name == name) return p.motion;
        }
        throw ParseError("unknown preset '" + name + "'", base);
    }
    throw ParseError("unknown motion kind '" + std::string(kind) + "'", 0);
}

}  // namespace hyperphase
