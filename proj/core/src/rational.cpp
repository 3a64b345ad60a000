#include "genusforge/rational.hpp"

namespace genusforge {

namespace {

bool is_integer_literal(std::string_view s) {
    if (!s.empty() && (s.front() == '+' || s.front() == '-'))
        s.remove_prefix(1);
    if (s.empty())
        return false;
    for (char ch : s)
        if (ch < '0' || ch > '9')
            return false;
    return true;
}

} // namespace

Rational Rational::parse(std::string_view text) {
    const auto slash = text.find('/');
    std::string_view num = text.substr(0, slash);
    if (!is_integer_literal(num))
        throw ValidationError("bad rational literal \"" + std::string(text) + "\"");
    if (num.front() == '+')
        num.remove_prefix(1); // cpp_int rejects an explicit plus sign
    if (slash == std::string_view::npos)
        return Rational(BigInt(std::string(num)));
    std::string_view den = text.substr(slash + 1);
    if (!is_integer_literal(den) || den.front() == '+' || den.front() == '-')
        throw ValidationError("bad rational literal \"" + std::string(text) + "\"");
    BigInt d{std::string(den)};
    if (d == 0)
        throw ValidationError("bad rational literal \"" + std::string(text) + "\": zero denominator");
    return Rational(BigInt(std::string(num)), d);
}

std::string Rational::str() const {
    std::string out = numerator().str();
    if (!is_integer()) {
        out += '/';
        out += denominator().str();
    }
    return out;
}

BigInt factorial(int n) {
    BigInt r = 1;
    for (int i = 2; i <= n; ++i)
        r *= i;
    return r;
}

BigInt binomial(int n, int k) {
    if (k < 0 || k > n)
        return 0;
    if (k > n - k)
        k = n - k;
    BigInt r = 1;
    for (int i = 1; i <= k; ++i) {
        r *= n - k + i;
        r /= i;
    }
    return r;
}

BigInt pow2(int n) {
    return BigInt(1) << n;
}

} // namespace genusforge
