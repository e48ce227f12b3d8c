#include <netrel/polynomial.hpp>

namespace netrel {

namespace {

// Appends one signed term; `monomial` is empty for the constant term.
void append_term(std::string& out, const Rational& c, const std::string& monomial)
{
    const bool negative = c < 0;
    const Rational magnitude = negative ? Rational(-c) : c;
    if (out.empty())
        out += negative ? "-" : "";
    else
        out += negative ? " - " : " + ";
    const bool integral = denominator(magnitude) == 1;
    if (monomial.empty()) {
        out += to_string(magnitude);
    } else if (magnitude != 1) {
        out += integral ? to_string(magnitude) : "(" + to_string(magnitude) + ")";
        out += monomial;
    } else {
        out += monomial;
    }
}

std::string power_of(const std::string& var, std::size_t k)
{
    if (k == 0)
        return {};
    return k == 1 ? var : var + "^" + std::to_string(k);
}

} // namespace

std::string to_string(const Poly& poly, const std::string& var)
{
    std::string out;
    const auto& c = poly.coeffs();
    for (std::size_t i = 0; i < c.size(); ++i)
        if (c[i] != 0)
            append_term(out, c[i], power_of(var, i));
    return out.empty() ? "0" : out;
}

std::string to_string(const Poly2& poly)
{
    std::string out;
    for (const auto& [key, c] : poly.terms()) {
        std::string monomial = power_of("p", key.first);
        if (key.second > 0)
            monomial += (monomial.empty() ? "" : "*") + power_of("rho", key.second);
        append_term(out, c, monomial);
    }
    return out.empty() ? "0" : out;
}

std::vector<std::string> coefficient_strings(const Poly& poly)
{
    std::vector<std::string> out;
    out.reserve(poly.coeffs().size());
    for (const auto& c : poly.coeffs())
        out.push_back(to_string(c));
    return out;
}

Poly poly_from_strings(const std::vector<std::string>& coeffs)
{
    std::vector<Rational> v;
    v.reserve(coeffs.size());
    for (const auto& s : coeffs)
        v.push_back(parse_rational(s));
    return Poly(std::move(v));
}

} // namespace netrel
