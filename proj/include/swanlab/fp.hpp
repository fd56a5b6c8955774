#pragma once

#include "swanlab/errors.hpp"

namespace swanlab {

inline bool is_prime(int n) {
    if (n < 2) return false;
    for (int d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

// Arithmetic in F_p for small p. Elements are canonical representatives
// in [0, p).
namespace fp {

inline int reduce(long long x, int p) {
    long long r = x % p;
    return int(r < 0 ? r + p : r);
}

inline int add(int a, int b, int p) { return (a + b) % p; }
inline int sub(int a, int b, int p) { return (a - b + p) % p; }
inline int mul(int a, int b, int p) { return (a * b) % p; }
inline int neg(int a, int p) { return a == 0 ? 0 : p - a; }

inline int pow(int a, long long e, int p) {
    int r = 1 % p;
    int base = a % p;
    while (e > 0) {
        if (e & 1) r = mul(r, base, p);
        base = mul(base, base, p);
        e >>= 1;
    }
    return r;
}

inline int inv(int a, int p) {
    if (a % p == 0) throw DivisionByZero();
    return pow(a, p - 2, p);
}

}  // namespace fp
}  // namespace swanlab
