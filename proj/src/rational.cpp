#include "aep/rational.hpp"

#include <cctype>
#include <cstdlib>

namespace aep {

namespace {

bool parse_int(std::string_view text, std::int64_t& out) {
    if (text.empty()) return false;
    std::size_t i = 0;
    bool negative = false;
    if (text[0] == '+' || text[0] == '-') {
        negative = text[0] == '-';
        i = 1;
    }
    if (i == text.size()) return false;
    std::int64_t value = 0;
    for (; i < text.size(); ++i) {
        if (!std::isdigit(static_cast<unsigned char>(text[i]))) return false;
        value = value * 10 + (text[i] - '0');
    }
    out = negative ? -value : value;
    return true;
}

}  // namespace

std::optional<Rational> parse_rational(std::string_view text) {
    if (text.empty()) return std::nullopt;
    if (auto slash = text.find('/'); slash != std::string_view::npos) {
        std::int64_t num = 0;
        std::int64_t den = 0;
        if (!parse_int(text.substr(0, slash), num)) return std::nullopt;
        if (!parse_int(text.substr(slash + 1), den)) return std::nullopt;
        if (den == 0) return std::nullopt;
        return Rational(num, den);
    }
    if (auto dot = text.find('.'); dot != std::string_view::npos) {
        std::string_view whole = text.substr(0, dot);
        std::string_view frac = text.substr(dot + 1);
        if (frac.empty() || frac.size() > 15) return std::nullopt;
        bool negative = !whole.empty() && whole[0] == '-';
        std::int64_t whole_value = 0;
        if (!whole.empty() && whole != "-" && whole != "+") {
            if (!parse_int(whole, whole_value)) return std::nullopt;
        }
        std::int64_t frac_value = 0;
        std::int64_t scale = 1;
        for (char c : frac) {
            if (!std::isdigit(static_cast<unsigned char>(c))) return std::nullopt;
            frac_value = frac_value * 10 + (c - '0');
            scale *= 10;
        }
        Rational magnitude(std::llabs(whole_value), 1);
        magnitude += Rational(frac_value, scale);
        return negative || whole_value < 0 ? -magnitude : magnitude;
    }
    std::int64_t value = 0;
    if (!parse_int(text, value)) return std::nullopt;
    return Rational(value);
}

std::string to_string(const Rational& value) {
    if (value.denominator() == 1) return std::to_string(value.numerator());
    return std::to_string(value.numerator()) + "/" + std::to_string(value.denominator());
}

double to_double(const Rational& value) {
    return boost::rational_cast<double>(value);
}

}  // namespace aep
