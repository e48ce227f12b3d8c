#ifndef NETREL_RATIONAL_HPP
#define NETREL_RATIONAL_HPP

#include <boost/multiprecision/gmp.hpp>

#include <string>
#include <string_view>

namespace netrel {

// Expression templates off: polynomial and template code deduces value types
// from arithmetic results.
using BigInt = boost::multiprecision::number<boost::multiprecision::gmp_int, boost::multiprecision::et_off>;
using Rational =
    boost::multiprecision::number<boost::multiprecision::gmp_rational, boost::multiprecision::et_off>;

/// Parses "3", "-2/7", "0.125" or "1e-3" exactly. Throws ParseError.
Rational parse_rational(std::string_view text);

/// Exact rational value of a finite double, going through its shortest
/// round-trip decimal form so that 0.1 becomes 1/10.
Rational rational_from_double(double value);

/// "n" for integers, "n/d" otherwise.
std::string to_string(const Rational& value);

inline double to_double(const Rational& value) { return value.convert_to<double>(); }

/// Locale-independent %.{digits}g rendering with '.' as decimal separator.
std::string format_double(double value, int significant_digits = 12);

} // namespace netrel

#endif
