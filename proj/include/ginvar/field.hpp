#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

#include "ginvar/error.hpp"

namespace ginvar {

/// Runtime description of the coefficient field: characteristic 0 means Q,
/// a prime p means F_p.
struct FieldSpec {
    unsigned long characteristic = 0;
    bool operator==(const FieldSpec&) const = default;
};

/// Q with arbitrary-precision rationals, always in lowest terms.
struct RationalField {
    using Elem = mpq_class;

    unsigned long characteristic() const { return 0; }
    FieldSpec spec() const { return {0}; }

    Elem zero() const { return Elem(0); }
    Elem one() const { return Elem(1); }
    Elem from_int(long v) const { return Elem(v); }
    Elem add(const Elem& a, const Elem& b) const { return a + b; }
    Elem sub(const Elem& a, const Elem& b) const { return a - b; }
    Elem mul(const Elem& a, const Elem& b) const { return a * b; }
    Elem neg(const Elem& a) const { return -a; }
    Elem inv(const Elem& a) const {
        if (a == 0) throw DomainError("division by zero");
        return Elem(1) / a;
    }
    Elem div(const Elem& a, const Elem& b) const { return mul(a, inv(b)); }
    bool is_zero(const Elem& a) const { return a == 0; }
    bool is_one(const Elem& a) const { return a == 1; }
    bool eq(const Elem& a, const Elem& b) const { return a == b; }
    std::string str(const Elem& a) const { return a.get_str(); }
};

/// F_p for prime p < 2^31; elements are canonical representatives 0..p-1,
/// so products fit in 64 bits.
struct PrimeField {
    using Elem = uint64_t;

    explicit PrimeField(unsigned long p_) : p(p_) {}
    unsigned long p;

    unsigned long characteristic() const { return p; }
    FieldSpec spec() const { return {p}; }

    Elem zero() const { return 0; }
    Elem one() const { return 1 % p; }
    Elem from_int(long v) const {
        long r = v % static_cast<long>(p);
        if (r < 0) r += static_cast<long>(p);
        return static_cast<Elem>(r);
    }
    Elem add(Elem a, Elem b) const { Elem s = a + b; return s >= p ? s - p : s; }
    Elem sub(Elem a, Elem b) const { return a >= b ? a - b : a + p - b; }
    Elem mul(Elem a, Elem b) const { return (a * b) % p; }
    Elem neg(Elem a) const { return a == 0 ? 0 : p - a; }
    Elem inv(Elem a) const {
        if (a == 0) throw DomainError("division by zero");
        // extended Euclid on (a, p)
        long long t = 0, newt = 1, r = static_cast<long long>(p), newr = static_cast<long long>(a);
        while (newr != 0) {
            long long q = r / newr;
            long long tmp = t - q * newt; t = newt; newt = tmp;
            tmp = r - q * newr; r = newr; newr = tmp;
        }
        if (t < 0) t += static_cast<long long>(p);
        return static_cast<Elem>(t);
    }
    Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }
    bool is_zero(Elem a) const { return a == 0; }
    bool is_one(Elem a) const { return a == 1 % p; }
    bool eq(Elem a, Elem b) const { return a == b; }
    std::string str(Elem a) const { return std::to_string(a); }
};

inline bool is_prime(unsigned long n) {
    if (n < 2) return false;
    for (unsigned long q = 2; q * q <= n; ++q)
        if (n % q == 0) return false;
    return true;
}

} // namespace ginvar
