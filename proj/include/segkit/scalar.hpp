#pragma once

#include <stdexcept>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace segkit {

/// Exact rational scalar. The generic parameter q is specialized to a
/// rational q0 with |q0| not in {0, 1}, which is never a root of unity.
using Scalar = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

inline Scalar q_pow(const Scalar& q0, long long e) {
    Scalar base = e >= 0 ? q0 : Scalar(1) / q0;
    long long n = e >= 0 ? e : -e;
    Scalar out(1);
    while (n > 0) {
        if (n & 1) out *= base;
        base *= base;
        n >>= 1;
    }
    return out;
}

inline bool valid_q0(const Scalar& q0) {
    return q0 != 0 && q0 != 1 && q0 != -1;
}

inline Scalar parse_rational(const std::string& text) {
    auto slash = text.find('/');
    try {
        if (slash == std::string::npos) return Scalar(BigInt(text));
        BigInt num(text.substr(0, slash));
        BigInt den(text.substr(slash + 1));
        if (den == 0) throw std::invalid_argument("zero denominator");
        return Scalar(num, den);
    } catch (const std::exception&) {
        throw std::invalid_argument("cannot parse rational '" + text + "'");
    }
}

inline std::string rational_str(const Scalar& x) {
    BigInt num = boost::multiprecision::numerator(x);
    BigInt den = boost::multiprecision::denominator(x);
    if (den == 1) return num.str();
    return num.str() + "/" + den.str();
}

} // namespace segkit
