#include "seedcast/rational.hpp"

#include <cctype>
#include <cstdio>
#include <cstdlib>

#include "seedcast/errors.hpp"

namespace seedcast {

namespace {

BigInt parse_digits(const std::string& s, size_t lo, size_t hi) {
    BigInt v = 0;
    for (size_t i = lo; i < hi; ++i) {
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) {
            throw BadParams("invalid number: '" + s + "'");
        }
        v = v * 10 + (s[i] - '0');
    }
    return v;
}

}  // namespace

Rational parse_rational(const std::string& text) {
    if (text.empty()) throw BadParams("empty number");

    auto slash = text.find('/');
    if (slash != std::string::npos) {
        Rational num = parse_rational(text.substr(0, slash));
        Rational den = parse_rational(text.substr(slash + 1));
        if (den == 0) throw BadParams("zero denominator: '" + text + "'");
        return num / den;
    }

    size_t pos = 0;
    bool negative = false;
    if (text[pos] == '+' || text[pos] == '-') {
        negative = text[pos] == '-';
        ++pos;
    }

    auto epos = text.find_first_of("eE", pos);
    std::string mantissa = text.substr(pos, epos == std::string::npos ? std::string::npos : epos - pos);
    long exp10 = 0;
    if (epos != std::string::npos) {
        const std::string etail = text.substr(epos + 1);
        if (etail.empty()) throw BadParams("invalid number: '" + text + "'");
        char* end = nullptr;
        exp10 = std::strtol(etail.c_str(), &end, 10);
        if (end == nullptr || *end != '\0') throw BadParams("invalid number: '" + text + "'");
    }

    auto dot = mantissa.find('.');
    std::string digits = mantissa;
    long frac_len = 0;
    if (dot != std::string::npos) {
        digits = mantissa.substr(0, dot) + mantissa.substr(dot + 1);
        frac_len = static_cast<long>(mantissa.size() - dot - 1);
    }
    if (digits.empty()) throw BadParams("invalid number: '" + text + "'");

    BigInt num = parse_digits(digits, 0, digits.size());
    if (negative) num = -num;

    long shift = exp10 - frac_len;
    Rational v(num, 1);
    if (shift > 0) {
        v *= Rational(bigint_pow(10, static_cast<unsigned>(shift)), 1);
    } else if (shift < 0) {
        v /= Rational(bigint_pow(10, static_cast<unsigned>(-shift)), 1);
    }
    return v;
}

double to_double(const Rational& v) {
    return v.convert_to<double>();
}

std::string format_rational(const Rational& v) {
    return numerator(v).str() + "/" + denominator(v).str();
}

std::string format_float(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

Rational rational_pow(const Rational& base, unsigned exp) {
    Rational acc = 1;
    Rational b = base;
    while (exp > 0) {
        if (exp & 1u) acc *= b;
        b *= b;
        exp >>= 1u;
    }
    return acc;
}

BigInt bigint_pow(const BigInt& base, unsigned exp) {
    BigInt acc = 1;
    BigInt b = base;
    while (exp > 0) {
        if (exp & 1u) acc *= b;
        b *= b;
        exp >>= 1u;
    }
    return acc;
}

}  // namespace seedcast
