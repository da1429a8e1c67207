#include <cctype>
#include <charconv>
#include <string>

#include "gtrig/errors.hpp"
#include "gtrig/poly.hpp"

namespace gtrig {
namespace {

// Recursive-descent reader over the input with whitespace removed; offsets
// in errors refer to the original text.
class Parser {
public:
    explicit Parser(std::string_view text) : length_(text.size()) {
        for (std::size_t i = 0; i < text.size(); ++i) {
            if (std::isspace(static_cast<unsigned char>(text[i]))) continue;
            chars_.push_back(text[i]);
            offsets_.push_back(i);
        }
    }

    // Signed sum of terms, accumulated per power. No zero check.
    ComplexVector terms() {
        if (chars_.empty()) fail("empty expression");
        ComplexVector acc(kMaxDegree + 1, Complex{});
        int top = 0;
        bool first = true;
        while (pos_ < chars_.size()) {
            double sign = 1.0;
            if (peek('+') || peek('-')) {
                sign = chars_[pos_] == '-' ? -1.0 : 1.0;
                ++pos_;
            } else if (!first) {
                fail("expected '+' or '-'");
            }
            const auto [coef, power] = term();
            acc[power] += sign * coef;
            top = std::max(top, power);
            first = false;
        }
        acc.resize(top + 1);
        return acc;
    }

private:
    [[noreturn]] void fail(const std::string& msg) const {
        throw ParseError(msg, pos_ < offsets_.size() ? offsets_[pos_] : length_);
    }

    bool peek(char c) const { return pos_ < chars_.size() && chars_[pos_] == c; }

    bool at_number() const {
        return pos_ < chars_.size() &&
               (std::isdigit(static_cast<unsigned char>(chars_[pos_])) || chars_[pos_] == '.');
    }

    double number() {
        double v = 0.0;
        const char* first = chars_.data() + pos_;
        const char* last = chars_.data() + chars_.size();
        const auto [ptr, ec] = std::from_chars(first, last, v);
        if (ec != std::errc{} || ptr == first) fail("malformed number");
        if (!std::isfinite(v)) fail("number out of range");
        pos_ += static_cast<std::size_t>(ptr - first);
        return v;
    }

    // `n`, `ni`, or `i`; sets `imaginary` when the component carries i.
    bool component(Complex& out) {
        if (at_number()) {
            const double v = number();
            if (peek('i')) {
                ++pos_;
                out = Complex{0.0, v};
                return true;
            }
            out = Complex{v, 0.0};
            return false;
        }
        if (peek('i')) {
            ++pos_;
            out = kI;
            return true;
        }
        fail("expected a number or 'i'");
    }

    Complex parenthesized() {
        ++pos_;  // '('
        double sign = 1.0;
        if (peek('+') || peek('-')) {
            sign = chars_[pos_] == '-' ? -1.0 : 1.0;
            ++pos_;
        }
        Complex value;
        const bool first_imag = component(value);
        value *= sign;
        if (peek('+') || peek('-')) {
            if (first_imag) fail("imaginary part must come last");
            const double s = chars_[pos_] == '-' ? -1.0 : 1.0;
            ++pos_;
            Complex imag;
            if (!component(imag)) fail("expected imaginary part ending in 'i'");
            value += s * imag;
        }
        if (!peek(')')) fail("expected ')'");
        ++pos_;
        return value;
    }

    std::pair<Complex, int> term() {
        Complex coef{1.0};
        bool have_coef = false;
        if (peek('(')) {
            coef = parenthesized();
            have_coef = true;
        } else if (at_number() || peek('i')) {
            component(coef);
            have_coef = true;
        }
        if (peek('*')) {
            if (!have_coef) fail("'*' without a coefficient");
            ++pos_;
            if (!peek('x')) fail("expected 'x' after '*'");
        }
        if (!peek('x')) {
            if (!have_coef) fail("expected a term");
            return {coef, 0};
        }
        ++pos_;
        int power = 1;
        if (peek('^')) {
            ++pos_;
            const std::size_t start = pos_;
            long value = 0;
            while (pos_ < chars_.size() && std::isdigit(static_cast<unsigned char>(chars_[pos_]))) {
                if (value <= kMaxDegree) value = value * 10 + (chars_[pos_] - '0');
                ++pos_;
            }
            if (pos_ == start) fail("expected exponent digits");
            if (value > kMaxDegree) {
                pos_ = start;
                fail("degree exceeds " + std::to_string(kMaxDegree));
            }
            power = static_cast<int>(value);
        }
        return {coef, power};
    }

    std::vector<char> chars_;
    std::vector<std::size_t> offsets_;
    std::size_t length_;
    std::size_t pos_ = 0;
};

std::string shortest(double v) {
    char buf[64];
    const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, ptr);
}

}  // namespace

Polynomial parse_polynomial(std::string_view text) {
    ComplexVector acc = Parser(text).terms();
    for (const auto& c : acc) {
        if (c != Complex{}) return Polynomial(std::move(acc));
    }
    throw InputError("zero polynomial");
}

Polynomial parse_coefficients(std::string_view text) {
    ComplexVector coeffs;
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t comma = text.find(',', start);
        if (comma == std::string_view::npos) comma = text.size();
        const auto item = text.substr(start, comma - start);
        ComplexVector value;
        try {
            value = Parser(item).terms();
        } catch (const ParseError& e) {
            throw ParseError("coefficient " + std::to_string(coeffs.size()) + ": malformed",
                             start + e.offset());
        }
        if (value.size() != 1) throw ParseError("coefficient must be a constant", start);
        coeffs.push_back(value[0]);
        start = comma + 1;
    }
    if (coeffs.size() > kMaxDegree + 1) throw InputError("degree exceeds " + std::to_string(kMaxDegree));
    return Polynomial(std::move(coeffs));
}

Complex parse_complex(std::string_view text) {
    const ComplexVector value = Parser(text).terms();
    if (value.size() != 1) throw ParseError("expected a complex constant", 0);
    return value[0];
}

std::string to_string(const Polynomial& p) {
    std::string out;
    for (int k = p.degree(); k >= 0; --k) {
        const Complex c = p[k];
        if (c == Complex{}) continue;
        char sep = '+';
        std::string coef;
        if (c.imag() == 0.0) {
            if (std::signbit(c.real())) sep = '-';
            const double mag = std::abs(c.real());
            if (mag != 1.0 || k == 0) coef = shortest(mag);
        } else {
            coef = "(";
            if (c.real() != 0.0) {
                coef += shortest(c.real());
                coef += std::signbit(c.imag()) ? '-' : '+';
            } else if (std::signbit(c.imag())) {
                coef += '-';
            }
            coef += shortest(std::abs(c.imag())) + "i)";
        }
        if (!out.empty() || sep == '-') out += sep;
        out += coef;
        if (k >= 1) out += 'x';
        if (k >= 2) out += '^' + std::to_string(k);
    }
    return out;
}

}  // namespace gtrig
