#pragma once

#include <cstdint>
#include <string>

#include <gmpxx.h>

#include "gmepw/error.hpp"

namespace gmepw {

// The two exact scalar domains. Rationals are GMP-backed and always stored
// reduced with positive denominator (mpq_class maintains this after
// canonicalize). Prime fields carry their modulus per element so the same
// templated linear algebra runs over both domains.

using Rat = mpq_class;

inline bool is_zero(const Rat& x) { return sgn(x) == 0; }
inline bool is_one(const Rat& x) { return x == 1; }

inline std::string rat_to_string(const Rat& x) { return x.get_str(); }

inline Rat rat_from_int(long long n) { return Rat(static_cast<long>(n)); }

// Parse "num" or "num/den"; rejects garbage and zero denominators.
inline Rat rat_from_string(const std::string& s) {
    if (s.empty()) fail("schema", "empty rational literal");
    mpq_class x;
    if (x.set_str(s, 10) != 0) fail("schema", "bad rational literal: " + s);
    if (sgn(x.get_den()) == 0) fail("schema", "zero denominator: " + s);
    x.canonicalize();
    return x;
}

// Element of F_p, p an odd prime or 2, p < 2^31. A modulus of 0 marks an
// integer literal (produced by generic code writing T(0), T(1), T(-1));
// literals attach to the other operand's modulus on first contact.
class Fp {
public:
    Fp() = default;
    Fp(long long n) : v_(n) {}   // literal, not yet reduced
    Fp(long long n, uint64_t p) : p_(p) {
        require(p >= 2, "bad_prime", "modulus must be >= 2");
        long long r = n % static_cast<long long>(p);
        if (r < 0) r += static_cast<long long>(p);
        v_ = r;
    }

    uint64_t modulus() const { return p_; }
    // Canonical residue in [0,p); literals report their raw value.
    long long value() const { return v_; }

    bool attached() const { return p_ != 0; }

    Fp attach(uint64_t p) const {
        return attached() ? (require(p_ == p, "bad_prime", "modulus mismatch"), *this)
                          : Fp(v_, p);
    }

    friend Fp operator+(const Fp& a, const Fp& b) {
        uint64_t p = join(a, b);
        if (p == 0) return Fp(a.v_ + b.v_);
        Fp x = a.attach(p), y = b.attach(p);
        return from_residue((static_cast<uint64_t>(x.v_) + static_cast<uint64_t>(y.v_)) % p, p);
    }
    friend Fp operator-(const Fp& a, const Fp& b) {
        uint64_t p = join(a, b);
        if (p == 0) return Fp(a.v_ - b.v_);
        Fp x = a.attach(p), y = b.attach(p);
        return from_residue((static_cast<uint64_t>(x.v_) + p - static_cast<uint64_t>(y.v_)) % p, p);
    }
    friend Fp operator*(const Fp& a, const Fp& b) {
        uint64_t p = join(a, b);
        if (p == 0) return Fp(a.v_ * b.v_);
        Fp x = a.attach(p), y = b.attach(p);
        return from_residue((static_cast<uint64_t>(x.v_) * static_cast<uint64_t>(y.v_)) % p, p);
    }
    friend Fp operator/(const Fp& a, const Fp& b) { return a * b.inverse(); }

    Fp operator-() const {
        if (!attached()) return Fp(-v_);
        return from_residue(v_ == 0 ? 0 : p_ - static_cast<uint64_t>(v_), p_);
    }

    Fp& operator+=(const Fp& o) { return *this = *this + o; }
    Fp& operator-=(const Fp& o) { return *this = *this - o; }
    Fp& operator*=(const Fp& o) { return *this = *this * o; }
    Fp& operator/=(const Fp& o) { return *this = *this / o; }

    Fp inverse() const {
        if (!attached()) {
            // only the literal units of Z are invertible without a modulus
            require(v_ == 1 || v_ == -1, "bad_prime", "cannot invert an unattached literal");
            return *this;
        }
        require(v_ % static_cast<long long>(p_) != 0, "division_by_zero", "division by zero in F_p");
        // extended Euclid
        long long a = v_, m = static_cast<long long>(p_);
        long long x0 = 0, x1 = 1, r0 = m, r1 = a;
        while (r1 != 0) {
            long long q = r0 / r1;
            long long t = r0 - q * r1; r0 = r1; r1 = t;
            t = x0 - q * x1; x0 = x1; x1 = t;
        }
        long long inv = x0 % m;
        if (inv < 0) inv += m;
        return from_residue(static_cast<uint64_t>(inv), p_);
    }

    friend bool operator==(const Fp& a, const Fp& b) {
        uint64_t p = join(a, b);
        if (p == 0) return a.v_ == b.v_;
        return a.attach(p).v_ == b.attach(p).v_;
    }
    friend bool operator!=(const Fp& a, const Fp& b) { return !(a == b); }

private:
    static Fp from_residue(uint64_t r, uint64_t p) {
        Fp x;
        x.v_ = static_cast<long long>(r);
        x.p_ = p;
        return x;
    }
    static uint64_t join(const Fp& a, const Fp& b) {
        if (a.p_ != 0 && b.p_ != 0)
            require(a.p_ == b.p_, "bad_prime", "mixing elements of different prime fields");
        return a.p_ != 0 ? a.p_ : b.p_;
    }

    long long v_ = 0;
    uint64_t p_ = 0;
};

inline bool is_zero(const Fp& x) {
    if (!x.attached()) return x.value() == 0;
    return x.value() % static_cast<long long>(x.modulus()) == 0;
}
inline bool is_one(const Fp& x) { return x == Fp(1); }

// Entry-wise reduction Q -> F_p. Errors out when p divides a denominator.
inline Fp reduce_mod_p(const Rat& x, uint64_t p) {
    mpz_class num = x.get_num(), den = x.get_den();
    mpz_class pz(static_cast<unsigned long>(p));
    if (mpz_divisible_p(den.get_mpz_t(), pz.get_mpz_t()))
        fail("bad_prime", "denominator divisible by p=" + std::to_string(p));
    mpz_class rn = num % pz, rd = den % pz;
    long long n = rn.get_si(), d = rd.get_si();
    return Fp(n, p) / Fp(d, p);
}

inline bool is_prime_u64(uint64_t n) {
    if (n < 2) return false;
    for (uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

} // namespace gmepw
