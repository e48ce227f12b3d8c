#ifndef NETREL_POLYNOMIAL_HPP
#define NETREL_POLYNOMIAL_HPP

#include <netrel/rational.hpp>

#include <algorithm>
#include <cstddef>
#include <map>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

namespace netrel {

/// Dense univariate polynomial in p. coeffs()[i] multiplies p^i.
///
/// Always canonical: trailing zero coefficients are dropped, so the zero
/// polynomial has no coefficients and equality is coefficient equality.
template <class Scalar>
class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(std::vector<Scalar> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

    static Polynomial constant(Scalar c) { return Polynomial(std::vector<Scalar>{std::move(c)}); }

    static Polynomial monomial(Scalar c, std::size_t power)
    {
        std::vector<Scalar> v(power + 1, Scalar(0));
        v[power] = std::move(c);
        return Polynomial(std::move(v));
    }

    // The indeterminate p and its complement 1 - p.
    static Polynomial p() { return monomial(Scalar(1), 1); }
    static Polynomial one_minus_p() { return Polynomial(std::vector<Scalar>{Scalar(1), Scalar(-1)}); }

    const std::vector<Scalar>& coeffs() const noexcept { return coeffs_; }
    bool is_zero() const noexcept { return coeffs_.empty(); }
    // Degree of the zero polynomial is reported as 0.
    std::size_t degree() const noexcept { return coeffs_.empty() ? 0 : coeffs_.size() - 1; }

    Scalar coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : Scalar(0); }

    // Lowest power with a nonzero coefficient; 0 for the zero polynomial.
    std::size_t lowest_power() const
    {
        for (std::size_t i = 0; i < coeffs_.size(); ++i)
            if (coeffs_[i] != 0)
                return i;
        return 0;
    }

    template <class T = Scalar>
    T operator()(const T& x) const
    {
        T acc(0);
        for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
            acc = acc * x + static_cast<T>(*it);
        return acc;
    }

    Polynomial& operator+=(const Polynomial& o)
    {
        if (o.coeffs_.size() > coeffs_.size())
            coeffs_.resize(o.coeffs_.size(), Scalar(0));
        for (std::size_t i = 0; i < o.coeffs_.size(); ++i)
            coeffs_[i] += o.coeffs_[i];
        trim();
        return *this;
    }

    Polynomial& operator-=(const Polynomial& o)
    {
        if (o.coeffs_.size() > coeffs_.size())
            coeffs_.resize(o.coeffs_.size(), Scalar(0));
        for (std::size_t i = 0; i < o.coeffs_.size(); ++i)
            coeffs_[i] -= o.coeffs_[i];
        trim();
        return *this;
    }

    Polynomial& operator*=(const Scalar& c)
    {
        for (auto& a : coeffs_)
            a *= c;
        trim();
        return *this;
    }

    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator-(Polynomial a)
    {
        for (auto& c : a.coeffs_)
            c = -c;
        return a;
    }
    friend Polynomial operator*(Polynomial a, const Scalar& c) { return a *= c; }
    friend Polynomial operator*(const Scalar& c, Polynomial a) { return a *= c; }

    friend Polynomial operator*(const Polynomial& a, const Polynomial& b)
    {
        if (a.is_zero() || b.is_zero())
            return {};
        std::vector<Scalar> out(a.coeffs_.size() + b.coeffs_.size() - 1, Scalar(0));
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
            if (a.coeffs_[i] == 0)
                continue;
            for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
                out[i + j] += a.coeffs_[i] * b.coeffs_[j];
        }
        return Polynomial(std::move(out));
    }
    Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }

    friend bool operator==(const Polynomial&, const Polynomial&) = default;

private:
    void trim()
    {
        while (!coeffs_.empty() && coeffs_.back() == 0)
            coeffs_.pop_back();
    }

    std::vector<Scalar> coeffs_;
};

template <class Scalar>
Polynomial<Scalar> pow(Polynomial<Scalar> base, std::size_t exponent)
{
    auto result = Polynomial<Scalar>::constant(Scalar(1));
    while (exponent > 0) {
        if (exponent & 1u)
            result *= base;
        exponent >>= 1;
        if (exponent > 0)
            base *= base;
    }
    return result;
}

// p^i (1 - p)^j, the probability of one specific pattern of i failed and
// j working links under uniform outage probability.
template <class Scalar>
Polynomial<Scalar> bernoulli_term(std::size_t failed, std::size_t working)
{
    return pow(Polynomial<Scalar>::p(), failed) * pow(Polynomial<Scalar>::one_minus_p(), working);
}

/// Sparse bivariate polynomial in (p, rho), keyed by (power of p, power of rho).
/// Canonical: zero terms are never stored.
template <class Scalar>
class Polynomial2 {
public:
    using Key = std::pair<std::size_t, std::size_t>;

    Polynomial2() = default;
    template <class N>
        requires std::is_arithmetic_v<N>
    explicit Polynomial2(N c)
    {
        add(Key{0, 0}, Scalar(c));
    }

    static Polynomial2 constant(Scalar c) { return term(std::move(c), 0, 0); }
    static Polynomial2 term(Scalar c, std::size_t p_power, std::size_t rho_power)
    {
        Polynomial2 out;
        out.add(Key{p_power, rho_power}, c);
        return out;
    }
    static Polynomial2 p() { return term(Scalar(1), 1, 0); }
    static Polynomial2 rho() { return term(Scalar(1), 0, 1); }

    const std::map<Key, Scalar>& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }

    Scalar coeff(std::size_t p_power, std::size_t rho_power) const
    {
        auto it = terms_.find(Key{p_power, rho_power});
        return it == terms_.end() ? Scalar(0) : it->second;
    }

    template <class T = Scalar>
    T operator()(const T& p_value, const T& rho_value) const
    {
        T acc(0);
        for (const auto& [key, c] : terms_) {
            T t = static_cast<T>(c);
            for (std::size_t i = 0; i < key.first; ++i)
                t *= p_value;
            for (std::size_t i = 0; i < key.second; ++i)
                t *= rho_value;
            acc += t;
        }
        return acc;
    }

    /// Substitutes a value for rho, leaving a polynomial in p.
    Polynomial<Scalar> at_rho(const Scalar& rho_value) const
    {
        std::size_t degree = 0;
        for (const auto& [key, c] : terms_)
            degree = std::max(degree, key.first);
        std::vector<Scalar> out(terms_.empty() ? 0 : degree + 1, Scalar(0));
        for (const auto& [key, c] : terms_) {
            Scalar t = c;
            for (std::size_t i = 0; i < key.second; ++i)
                t *= rho_value;
            out[key.first] += t;
        }
        return Polynomial<Scalar>(std::move(out));
    }

    Polynomial2& operator+=(const Polynomial2& o)
    {
        for (const auto& [key, c] : o.terms_)
            add(key, c);
        return *this;
    }
    Polynomial2& operator-=(const Polynomial2& o)
    {
        for (const auto& [key, c] : o.terms_)
            add(key, Scalar(-c));
        return *this;
    }

    friend Polynomial2 operator+(Polynomial2 a, const Polynomial2& b) { return a += b; }
    friend Polynomial2 operator-(Polynomial2 a, const Polynomial2& b) { return a -= b; }
    friend Polynomial2 operator*(const Polynomial2& a, const Polynomial2& b)
    {
        Polynomial2 out;
        for (const auto& [ka, ca] : a.terms_)
            for (const auto& [kb, cb] : b.terms_)
                out.add(Key{ka.first + kb.first, ka.second + kb.second}, ca * cb);
        return out;
    }
    Polynomial2& operator*=(const Polynomial2& o) { return *this = *this * o; }

    friend bool operator==(const Polynomial2&, const Polynomial2&) = default;

private:
    void add(const Key& key, const Scalar& c)
    {
        if (c == 0)
            return;
        auto [it, inserted] = terms_.try_emplace(key, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0)
                terms_.erase(it);
        }
    }

    std::map<Key, Scalar> terms_;
};

template <class Scalar>
Polynomial2<Scalar> pow(Polynomial2<Scalar> base, std::size_t exponent)
{
    auto result = Polynomial2<Scalar>::constant(Scalar(1));
    for (std::size_t i = 0; i < exponent; ++i)
        result *= base;
    return result;
}

using Poly = Polynomial<Rational>;
using Poly2 = Polynomial2<Rational>;

/// Human rendering in ascending powers, e.g. "p + p^2 - p^3" or
/// "2 - 4p + 4p^2". Non-integer coefficients are parenthesized: "(1/2)p".
std::string to_string(const Poly& poly, const std::string& var = "p");

/// Human rendering of a bivariate polynomial, ascending in p then rho,
/// e.g. "2p^2*rho - p^4".
std::string to_string(const Poly2& poly);

/// Coefficient strings in ascending order, e.g. {"0","1","1","-1"}.
std::vector<std::string> coefficient_strings(const Poly& poly);

Poly poly_from_strings(const std::vector<std::string>& coeffs);

} // namespace netrel

#endif
