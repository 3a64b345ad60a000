#pragma once

#include "genusforge/rational.hpp"

#include <vector>

namespace genusforge {

/// Which characteristic series / multiplicative sequence is meant.
/// L is the signature sequence, Ahat the spin index sequence.
enum class SeriesKind { L, Ahat };

std::string to_string(SeriesKind kind);

/// Truncated formal power series over Rational. The coefficient of z^n is
/// coeff(n); everything beyond the truncation order is unknown, not zero,
/// so binary operations truncate to the shorter operand.
class PowerSeries {
public:
    /// Zero series of the given truncation order.
    explicit PowerSeries(int truncation_order)
        : coeffs_(static_cast<size_t>(truncation_order) + 1) {
        if (truncation_order < 0)
            throw PreconditionError("negative truncation order");
    }
    explicit PowerSeries(std::vector<Rational> coefficients) : coeffs_(std::move(coefficients)) {
        if (coeffs_.empty())
            throw PreconditionError("power series needs at least the constant term");
    }

    static PowerSeries one(int truncation_order) {
        PowerSeries s(truncation_order);
        s.coeffs_[0] = Rational(1);
        return s;
    }

    int truncation_order() const { return static_cast<int>(coeffs_.size()) - 1; }
    const Rational& coeff(int n) const { return coeffs_.at(static_cast<size_t>(n)); }
    void set_coeff(int n, Rational v) { coeffs_.at(static_cast<size_t>(n)) = std::move(v); }
    const std::vector<Rational>& coefficients() const { return coeffs_; }

    PowerSeries truncate(int order) const;

    friend PowerSeries operator+(const PowerSeries& a, const PowerSeries& b);
    friend PowerSeries operator-(const PowerSeries& a, const PowerSeries& b);

    /// Exact Cauchy product, truncated to the shorter operand.
    friend PowerSeries operator*(const PowerSeries& a, const PowerSeries& b);

    /// Exact quotient by recursive back-substitution. The divisor must have
    /// a nonzero constant term.
    friend PowerSeries operator/(const PowerSeries& a, const PowerSeries& b);

    friend bool operator==(const PowerSeries& a, const PowerSeries& b) = default;

private:
    std::vector<Rational> coeffs_;
};

/// Bernoulli number B_n in the convention B_1 = -1/2. Values are cached;
/// the cache is guarded by a mutex, so concurrent callers are fine.
Rational bernoulli(int n);

/// The one-variable characteristic series in z = x^2:
///   L:    sqrt(z)/tanh(sqrt(z))
///   Ahat: (sqrt(z)/2)/sinh(sqrt(z)/2)
/// computed as an exact quotient of the even parts of the defining
/// hyperbolic expansions. Coefficient 0 is always 1.
PowerSeries characteristic_series(SeriesKind kind, int order);

} // namespace genusforge
