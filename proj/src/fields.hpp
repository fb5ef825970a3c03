#pragma once

#include <gmpxx.h>

#include <string>

#include "errors.hpp"

namespace magnikit {

enum class CoeffTag { Z, Q, Fp };

// Coefficient ring selector carried alongside results.
struct Coeff {
    CoeffTag tag = CoeffTag::Z;
    long long p = 0;  // prime, only for Fp

    static Coeff integers() { return {CoeffTag::Z, 0}; }
    static Coeff rationals() { return {CoeffTag::Q, 0}; }
    static Coeff prime_field(long long p) {
        if (p < 2) fail(Err::bad_parameter, "prime field characteristic must be >= 2");
        return {CoeffTag::Fp, p};
    }

    bool is_field() const { return tag != CoeffTag::Z; }
    std::string name() const {
        switch (tag) {
            case CoeffTag::Z: return "Z";
            case CoeffTag::Q: return "Q";
            default: return "F" + std::to_string(p);
        }
    }
    static Coeff parse(const std::string& s) {
        if (s == "Z") return integers();
        if (s == "Q") return rationals();
        if (s.size() >= 2 && (s[0] == 'F' || s[0] == 'f'))
            return prime_field(std::stoll(s.substr(1)));
        fail(Err::parse, "unknown coefficient ring: " + s);
    }
    friend bool operator==(const Coeff& a, const Coeff& b) {
        return a.tag == b.tag && a.p == b.p;
    }
};

struct RationalField {
    using Elem = mpq_class;
    Elem zero() const { return Elem(0); }
    Elem one() const { return Elem(1); }
    Elem from_int(long long x) const { return Elem(x); }
    bool is_zero(const Elem& e) const { return sgn(e) == 0; }
    Elem add(const Elem& a, const Elem& b) const { return a + b; }
    Elem sub(const Elem& a, const Elem& b) const { return a - b; }
    Elem mul(const Elem& a, const Elem& b) const { return a * b; }
    Elem div(const Elem& a, const Elem& b) const { return a / b; }
    Elem neg(const Elem& a) const { return -a; }
    std::string str(const Elem& e) const { return e.get_str(); }
};

struct PrimeField {
    long long p;
    using Elem = long long;  // normalized to 0..p-1

    explicit PrimeField(long long prime) : p(prime) {}

    Elem zero() const { return 0; }
    Elem one() const { return 1 % p; }
    Elem from_int(long long x) const {
        Elem r = x % p;
        return r < 0 ? r + p : r;
    }
    bool is_zero(const Elem& e) const { return e == 0; }
    Elem add(Elem a, Elem b) const { return (a + b) % p; }
    Elem sub(Elem a, Elem b) const { return ((a - b) % p + p) % p; }
    Elem mul(Elem a, Elem b) const { return (a * b) % p; }
    Elem neg(Elem a) const { return a == 0 ? 0 : p - a; }
    Elem inv(Elem a) const {
        // extended Euclid
        long long t = 0, nt = 1, r = p, nr = a;
        while (nr != 0) {
            long long q = r / nr;
            long long tmp = t - q * nt;
            t = nt;
            nt = tmp;
            tmp = r - q * nr;
            r = nr;
            nr = tmp;
        }
        if (r != 1) fail(Err::bad_parameter, "not invertible mod p");
        return t < 0 ? t + p : t;
    }
    Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }
    std::string str(Elem e) const { return std::to_string(e); }
};

}  // namespace magnikit
