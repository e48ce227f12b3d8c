#include <netrel/error.hpp>
#include <netrel/rational.hpp>

#include <array>
#include <charconv>
#include <cmath>
#include <string>

namespace netrel {

namespace {

bool all_digits(std::string_view s)
{
    if (s.empty())
        return false;
    for (char c : s)
        if (c < '0' || c > '9')
            return false;
    return true;
}

// GMP treats a leading zero as an octal prefix.
BigInt decimal_int(std::string_view digits)
{
    auto first = digits.find_first_not_of('0');
    if (first == std::string_view::npos)
        return BigInt(0);
    return BigInt(std::string(digits.substr(first)));
}

[[noreturn]] void bad(std::string_view text)
{
    throw Error(ErrorCode::ParseError, "not a number: \"" + std::string(text) + "\"");
}

Rational parse_decimal(std::string_view text, std::string_view full)
{
    bool negative = false;
    if (!text.empty() && (text.front() == '-' || text.front() == '+')) {
        negative = text.front() == '-';
        text.remove_prefix(1);
    }
    long exponent = 0;
    if (auto e = text.find_first_of("eE"); e != std::string_view::npos) {
        auto exp_text = text.substr(e + 1);
        text = text.substr(0, e);
        bool exp_negative = false;
        if (!exp_text.empty() && (exp_text.front() == '-' || exp_text.front() == '+')) {
            exp_negative = exp_text.front() == '-';
            exp_text.remove_prefix(1);
        }
        if (!all_digits(exp_text) || exp_text.size() > 6)
            bad(full);
        exponent = std::stol(std::string(exp_text));
        if (exp_negative)
            exponent = -exponent;
    }
    std::string digits;
    if (auto dot = text.find('.'); dot != std::string_view::npos) {
        auto whole = text.substr(0, dot);
        auto frac = text.substr(dot + 1);
        if ((!whole.empty() && !all_digits(whole)) || (!frac.empty() && !all_digits(frac)) ||
            (whole.empty() && frac.empty()))
            bad(full);
        digits = std::string(whole) + std::string(frac);
        exponent -= static_cast<long>(frac.size());
    } else {
        if (!all_digits(text))
            bad(full);
        digits = std::string(text);
    }
    Rational value{decimal_int(digits)};
    BigInt scale = boost::multiprecision::pow(BigInt(10), static_cast<unsigned>(std::labs(exponent)));
    if (exponent >= 0)
        value *= scale;
    else
        value /= scale;
    return negative ? Rational(-value) : value;
}

} // namespace

Rational parse_rational(std::string_view text)
{
    while (!text.empty() && (text.front() == ' ' || text.front() == '\t'))
        text.remove_prefix(1);
    while (!text.empty() && (text.back() == ' ' || text.back() == '\t'))
        text.remove_suffix(1);
    if (auto slash = text.find('/'); slash != std::string_view::npos) {
        auto num = text.substr(0, slash);
        auto den = text.substr(slash + 1);
        bool negative = !num.empty() && num.front() == '-';
        if (negative || (!num.empty() && num.front() == '+'))
            num.remove_prefix(1);
        if (!all_digits(num) || !all_digits(den))
            bad(text);
        BigInt d = decimal_int(den);
        if (d == 0)
            bad(text);
        Rational value(decimal_int(num), d);
        return negative ? Rational(-value) : value;
    }
    return parse_decimal(text, text);
}

Rational rational_from_double(double value)
{
    if (!std::isfinite(value))
        throw Error(ErrorCode::ParseError, "non-finite number");
    std::array<char, 64> buf{};
    auto [end, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), value);
    return parse_rational(std::string_view(buf.data(), static_cast<std::size_t>(end - buf.data())));
}

std::string to_string(const Rational& value)
{
    if (denominator(value) == 1)
        return numerator(value).str();
    return numerator(value).str() + "/" + denominator(value).str();
}

std::string format_double(double value, int significant_digits)
{
    std::array<char, 64> buf{};
    auto [end, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), value,
                                   std::chars_format::general, significant_digits);
    return std::string(buf.data(), end);
}

} // namespace netrel
