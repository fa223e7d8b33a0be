#include "sharpchar/parse.hpp"

#include <cctype>
#include <string>

#include "sharpchar/errors.hpp"

namespace sharpchar {
namespace {

class ValueParser {
public:
    explicit ValueParser(std::string_view text) : text_(text) {}

    Cyclotomic parse_single() {
        Cyclotomic v = expr();
        skip_ws();
        if (pos_ != text_.size()) fail("unexpected trailing input");
        return v;
    }

    std::vector<Cyclotomic> parse_set() {
        skip_ws();
        expect('{');
        std::vector<Cyclotomic> out;
        skip_ws();
        if (!consume('}')) {
            out.push_back(expr());
            while (skip_ws(), consume(',')) out.push_back(expr());
            skip_ws();
            expect('}');
        }
        skip_ws();
        if (pos_ != text_.size()) fail("unexpected trailing input");
        return out;
    }

private:
    [[noreturn]] void fail(const std::string& message) const {
        throw parse_error(message, pos_);
    }

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }

    bool consume(char c) {
        if (peek() != c) return false;
        ++pos_;
        return true;
    }

    void expect(char c) {
        if (!consume(c)) fail(std::string("expected '") + c + "'");
    }

    // unsigned decimal literal
    BigInt integer_literal() {
        skip_ws();
        const std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        if (pos_ == start) fail("expected an integer");
        return BigInt(std::string(text_.substr(start, pos_ - start)));
    }

    std::int64_t small_int(const char* what, std::int64_t limit) {
        const std::size_t at = pos_;
        const BigInt v = integer_literal();
        if (v > limit) throw parse_error(std::string(what) + " too large", at);
        return v.convert_to<std::int64_t>();
    }

    Cyclotomic expr() {
        skip_ws();
        Cyclotomic acc = term();
        for (;;) {
            skip_ws();
            if (consume('+')) acc += term();
            else if (consume('-')) acc -= term();
            else return acc;
        }
    }

    Cyclotomic term() {
        Cyclotomic acc = factor();
        for (;;) {
            skip_ws();
            if (!consume('*')) return acc;
            acc *= factor();
        }
    }

    Cyclotomic factor() {
        Cyclotomic base = atom();
        skip_ws();
        if (!consume('^')) return base;
        skip_ws();
        const bool neg = consume('-');
        const std::int64_t e = small_int("exponent", 1000000);
        return pow(base, neg ? -e : e);
    }

    Cyclotomic atom() {
        skip_ws();
        if (consume('-')) return -atom();
        if (consume('(')) {
            Cyclotomic v = expr();
            skip_ws();
            expect(')');
            return v;
        }
        if (peek() == 'z') {
            ++pos_;
            skip_ws();
            expect('(');
            const std::size_t at = pos_;
            const std::int64_t n = small_int("root order", 1000000);
            if (n < 1) throw parse_error("root order must be positive", at);
            skip_ws();
            expect(')');
            return root_of_unity(n, 1);
        }
        if (std::isdigit(static_cast<unsigned char>(peek()))) {
            const BigInt num = integer_literal();
            skip_ws();
            if (consume('/')) {
                const std::size_t at = pos_;
                const BigInt den = integer_literal();
                if (den == 0) throw parse_error("zero denominator", at);
                return Cyclotomic(Rational(num, den));
            }
            return Cyclotomic(Rational(num));
        }
        fail("expected a value");
    }

    std::string_view text_;
    std::size_t pos_ = 0;
};

} // namespace

Cyclotomic parse_value(std::string_view text) {
    return ValueParser(text).parse_single();
}

std::vector<Cyclotomic> parse_value_set(std::string_view text) {
    return ValueParser(text).parse_set();
}

} // namespace sharpchar
