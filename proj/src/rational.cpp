#include "riskodds/rational.hpp"

#include <stdexcept>

namespace riskodds {

BigInt ipow(const BigInt& base, int exp) {
    if (exp < 0) throw std::invalid_argument("ipow: negative exponent");
    BigInt result = 1;
    BigInt b = base;
    int e = exp;
    while (e > 0) {
        if (e & 1) result *= b;
        b *= b;
        e >>= 1;
    }
    return result;
}

BigInt binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    BigInt result = 1;
    for (int i = 1; i <= k; ++i) {
        result *= n - k + i;
        result /= i;  // exact: product of i consecutive integers is divisible by i!
    }
    return result;
}

bool is_probability(const Rat& x) { return x >= 0 && x <= 1; }

std::string frac_str(const Rat& x) {
    if (denominator(x) == 1) return numerator(x).str();
    return numerator(x).str() + "/" + denominator(x).str();
}

namespace {

// cpp_int's string constructor treats a leading 0 as an octal prefix, so
// decimal strings go through here.
BigInt parse_decimal_int(std::string digits) {
    if (digits.empty()) throw std::invalid_argument("empty integer");
    bool negative = digits[0] == '-' || digits[0] == '+' ? digits[0] == '-' : false;
    if (digits[0] == '-' || digits[0] == '+') digits.erase(0, 1);
    if (digits.empty() || digits.find_first_not_of("0123456789") != std::string::npos)
        throw std::invalid_argument("bad integer: " + digits);
    size_t first = digits.find_first_not_of('0');
    if (first == std::string::npos) return 0;
    BigInt value(digits.substr(first));
    return negative ? -value : value;
}

}  // namespace

Rat parse_rational(const std::string& text) {
    if (text.empty()) throw std::invalid_argument("empty rational");
    auto slash = text.find('/');
    if (slash != std::string::npos) {
        BigInt num = parse_decimal_int(text.substr(0, slash));
        BigInt den = parse_decimal_int(text.substr(slash + 1));
        if (den == 0) throw std::invalid_argument("zero denominator: " + text);
        return Rat(num, den);
    }
    auto dot = text.find('.');
    if (dot != std::string::npos) {
        std::string digits = text.substr(0, dot) + text.substr(dot + 1);
        int places = static_cast<int>(text.size() - dot - 1);
        return Rat(parse_decimal_int(digits), ipow(10, places));
    }
    return Rat(parse_decimal_int(text));
}

}  // namespace riskodds
