#pragma once

#include <cstdint>
#include <string>

#include "sheafloc/errors.hpp"
#include "sheafloc/scalar.hpp"

namespace sheafloc {

/// Integers modulo a prime below 2^63. Used for fast rank computation where
/// exact rationals would be too slow; rank mod p never exceeds the rank over Q.
template <std::uint64_t P>
class Fp {
public:
    static constexpr std::uint64_t modulus = P;

    constexpr Fp() = default;
    constexpr explicit Fp(std::uint64_t v) : v_(v % P) {}

    static Fp from_int(long long x)
    {
        long long r = x % static_cast<long long>(P);
        if (r < 0) r += static_cast<long long>(P);
        return Fp(static_cast<std::uint64_t>(r));
    }

    /// Image of a rational; throws ConsistencyError if P divides the denominator.
    static Fp from_scalar(const Scalar& q)
    {
        static_assert(sizeof(unsigned long) >= 8);
        const unsigned long num = mpz_fdiv_ui(q.get_num_mpz_t(), P);
        const unsigned long den = mpz_fdiv_ui(q.get_den_mpz_t(), P);
        if (den == 0) throw ConsistencyError("prime divides a denominator");
        if (den == 1) return Fp(num);
        return Fp(num) / Fp(den);
    }

    std::uint64_t value() const { return v_; }
    bool is_zero() const { return v_ == 0; }

    friend Fp operator+(Fp a, Fp b)
    {
        std::uint64_t s = a.v_ + b.v_;
        if (s >= P) s -= P;
        return raw(s);
    }
    friend Fp operator-(Fp a, Fp b) { return raw(a.v_ >= b.v_ ? a.v_ - b.v_ : a.v_ + P - b.v_); }
    Fp operator-() const { return raw(v_ == 0 ? 0 : P - v_); }
    friend Fp operator*(Fp a, Fp b)
    {
        return raw(static_cast<std::uint64_t>(static_cast<unsigned __int128>(a.v_) * b.v_ % P));
    }
    friend Fp operator/(Fp a, Fp b) { return a * b.inverse(); }
    Fp& operator+=(Fp o) { return *this = *this + o; }
    Fp& operator-=(Fp o) { return *this = *this - o; }
    Fp& operator*=(Fp o) { return *this = *this * o; }

    Fp inverse() const
    {
        if (v_ == 0) throw ConsistencyError("inverse of zero mod p");
        Fp base = *this, out = raw(1);
        for (std::uint64_t e = P - 2; e; e >>= 1) {
            if (e & 1) out *= base;
            base *= base;
        }
        return out;
    }

    friend bool operator==(Fp a, Fp b) { return a.v_ == b.v_; }

private:
    static Fp raw(std::uint64_t v)
    {
        Fp f;
        f.v_ = v;
        return f;
    }

    std::uint64_t v_ = 0;
};

using Fp61 = Fp<2305843009213693951ULL>;       // 2^61 - 1
using Fp62 = Fp<4611686018427387847ULL>;       // 2^62 - 57

/// Uniform helpers so templated code works for Scalar and Fp alike.
template <class T>
struct FieldTraits;

template <>
struct FieldTraits<Scalar> {
    static Scalar from_scalar(const Scalar& q) { return q; }
    static bool is_zero(const Scalar& x) { return sgn(x) == 0; }
    static Scalar one() { return Scalar(1); }
};

template <std::uint64_t P>
struct FieldTraits<Fp<P>> {
    static Fp<P> from_scalar(const Scalar& q) { return Fp<P>::from_scalar(q); }
    static bool is_zero(const Fp<P>& x) { return x.is_zero(); }
    static Fp<P> one() { return Fp<P>(1); }
};

}  // namespace sheafloc
