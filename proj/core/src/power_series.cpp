#include "genusforge/power_series.hpp"

#include <algorithm>
#include <mutex>

namespace genusforge {

std::string to_string(SeriesKind kind) {
    return kind == SeriesKind::L ? "L" : "Ahat";
}

PowerSeries PowerSeries::truncate(int order) const {
    if (order < 0)
        throw PreconditionError("negative truncation order");
    const int n = std::min(order, truncation_order());
    PowerSeries out(n);
    for (int i = 0; i <= n; ++i)
        out.coeffs_[static_cast<size_t>(i)] = coeffs_[static_cast<size_t>(i)];
    return out;
}

PowerSeries operator+(const PowerSeries& a, const PowerSeries& b) {
    const int n = std::min(a.truncation_order(), b.truncation_order());
    PowerSeries out(n);
    for (int i = 0; i <= n; ++i)
        out.coeffs_[static_cast<size_t>(i)] = a.coeff(i) + b.coeff(i);
    return out;
}

PowerSeries operator-(const PowerSeries& a, const PowerSeries& b) {
    const int n = std::min(a.truncation_order(), b.truncation_order());
    PowerSeries out(n);
    for (int i = 0; i <= n; ++i)
        out.coeffs_[static_cast<size_t>(i)] = a.coeff(i) - b.coeff(i);
    return out;
}

PowerSeries operator*(const PowerSeries& a, const PowerSeries& b) {
    const int n = std::min(a.truncation_order(), b.truncation_order());
    PowerSeries out(n);
    for (int i = 0; i <= n; ++i) {
        Rational acc;
        for (int t = 0; t <= i; ++t)
            acc += a.coeff(t) * b.coeff(i - t);
        out.coeffs_[static_cast<size_t>(i)] = acc;
    }
    return out;
}

PowerSeries operator/(const PowerSeries& a, const PowerSeries& b) {
    if (b.coeff(0).is_zero())
        throw PreconditionError("power series division by series with zero constant term");
    const int n = std::min(a.truncation_order(), b.truncation_order());
    PowerSeries q(n);
    for (int i = 0; i <= n; ++i) {
        Rational acc = a.coeff(i);
        for (int t = 0; t < i; ++t)
            acc -= q.coeff(t) * b.coeff(i - t);
        q.coeffs_[static_cast<size_t>(i)] = acc / b.coeff(0);
    }
    return q;
}

Rational bernoulli(int n) {
    if (n < 0)
        throw PreconditionError("bernoulli index must be non-negative");

    static std::mutex mutex;
    static std::vector<Rational> cache = {Rational(1), Rational(BigInt(-1), BigInt(2))};

    std::lock_guard<std::mutex> lock(mutex);
    while (static_cast<int>(cache.size()) <= n) {
        // sum_{k <= m} C(m+1, k) B_k = 0 solved for B_m
        const int m = static_cast<int>(cache.size());
        Rational acc;
        for (int k = 0; k < m; ++k)
            acc += Rational(binomial(m + 1, k)) * cache[static_cast<size_t>(k)];
        cache.push_back(-acc / Rational(BigInt(m + 1)));
    }
    return cache[static_cast<size_t>(n)];
}

PowerSeries characteristic_series(SeriesKind kind, int order) {
    if (order < 0)
        throw PreconditionError("negative series order");

    // Both series are quotients of expansions in z = x^2:
    //   sqrt(z)/tanh(sqrt(z))     = [sum z^n/(2n)!] / [sum z^n/(2n+1)!]
    //   (sqrt(z)/2)/sinh(sqrt(z)/2) = 1 / [sum z^n/(4^n (2n+1)!)]
    PowerSeries num(order), den(order);
    for (int n = 0; n <= order; ++n) {
        const BigInt odd_fact = factorial(2 * n + 1);
        if (kind == SeriesKind::L) {
            num.set_coeff(n, Rational(BigInt(1), factorial(2 * n)));
            den.set_coeff(n, Rational(BigInt(1), odd_fact));
        } else {
            num.set_coeff(n, Rational(n == 0 ? 1 : 0));
            den.set_coeff(n, Rational(BigInt(1), pow2(2 * n) * odd_fact));
        }
    }
    return num / den;
}

} // namespace genusforge
