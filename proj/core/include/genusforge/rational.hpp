#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace genusforge {

using BigInt = boost::multiprecision::cpp_int;

/// Base class of every error the library raises on purpose.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed user input: descriptors, rational literals, command parameters.
class ValidationError : public Error {
public:
    using Error::Error;
};

/// Structurally valid input to which the requested computation does not
/// apply (parity violations, vanishing Pontryagin classes, odd dimensions
/// fed to even-dimensional bounds, ...).
class PreconditionError : public Error {
public:
    using Error::Error;
};

/// Unreadable or unwritable files.
class IoError : public Error {
public:
    using Error::Error;
};

/// Exact rational scalar. Every quantity in the library is one of these;
/// there is no floating point anywhere. Values are kept in lowest terms
/// with a positive denominator.
class Rational {
public:
    Rational() = default;
    Rational(int n) : value_(n) {}
    Rational(long long n) : value_(n) {}
    Rational(const BigInt& n) : value_(n) {}
    Rational(const BigInt& num, const BigInt& den) {
        if (den == 0)
            throw PreconditionError("rational with zero denominator");
        // cpp_rational requires a positive denominator
        value_ = den < 0 ? boost::multiprecision::cpp_rational(-num, -den)
                         : boost::multiprecision::cpp_rational(num, den);
    }

    /// Parses "p/q" or "p" with optional leading sign. Rejects zero
    /// denominators and any other shape; this is the descriptor literal
    /// format, so errors are ValidationErrors.
    static Rational parse(std::string_view text);

    BigInt numerator() const { return boost::multiprecision::numerator(value_); }
    BigInt denominator() const { return boost::multiprecision::denominator(value_); }

    bool is_zero() const { return value_.is_zero(); }
    bool is_integer() const { return denominator() == 1; }
    int sign() const { return value_.sign(); }

    /// "p/q", or just "p" when the denominator is 1.
    std::string str() const;

    Rational operator-() const { return Rational(boost::multiprecision::cpp_rational(-value_)); }

    Rational& operator+=(const Rational& o) { value_ += o.value_; return *this; }
    Rational& operator-=(const Rational& o) { value_ -= o.value_; return *this; }
    Rational& operator*=(const Rational& o) { value_ *= o.value_; return *this; }
    Rational& operator/=(const Rational& o) {
        if (o.is_zero())
            throw PreconditionError("rational division by zero");
        value_ /= o.value_;
        return *this;
    }

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) = default;
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        if (a.value_ < b.value_) return std::strong_ordering::less;
        if (b.value_ < a.value_) return std::strong_ordering::greater;
        return std::strong_ordering::equal;
    }

private:
    explicit Rational(boost::multiprecision::cpp_rational v) : value_(std::move(v)) {}

    boost::multiprecision::cpp_rational value_;
};

/// n! as an exact integer.
BigInt factorial(int n);

/// Binomial coefficient C(n, k), zero outside 0 <= k <= n.
BigInt binomial(int n, int k);

/// 2^n for n >= 0.
BigInt pow2(int n);

} // namespace genusforge
