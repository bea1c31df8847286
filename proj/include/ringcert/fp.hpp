#ifndef RINGCERT_FP_HPP
#define RINGCERT_FP_HPP

#include <cassert>
#include <ostream>

#include "ringcert/bigint.hpp"

namespace ringcert {

/// Handle to an interned prime modulus. Two handles compare equal iff they
/// refer to the same integer, so equality is a pointer comparison.
/// Primality is not checked here; it is certified elsewhere.
class Modulus {
public:
    Modulus() = default;
    static Modulus of(const BigInt& p);

    const BigInt& value() const { return *p_; }
    bool valid() const { return p_ != nullptr; }

    friend bool operator==(Modulus a, Modulus b) { return a.p_ == b.p_; }
    friend bool operator!=(Modulus a, Modulus b) { return a.p_ != b.p_; }

private:
    explicit Modulus(const BigInt* p) : p_(p) {}
    const BigInt* p_ = nullptr;
};

/// Element of the prime field Z/pZ, residue kept in [0, p).
/// Mixing elements of different moduli is a contract violation (asserted).
class Fp {
public:
    Fp() = default;
    Fp(const BigInt& value, Modulus mod) : mod_(mod), v_(mod_nonneg(value, mod.value())) {}
    Fp(long value, Modulus mod) : Fp(BigInt(value), mod) {}

    const BigInt& value() const { return v_; }
    Modulus modulus() const { return mod_; }
    bool is_zero() const { return v_ == 0; }

    Fp inverse() const;
    Fp pow(const BigInt& e) const;

    Fp& operator+=(const Fp& o)
    {
        assert(mod_ == o.mod_);
        v_ += o.v_;
        if (v_ >= mod_.value())
            v_ -= mod_.value();
        return *this;
    }
    Fp& operator-=(const Fp& o)
    {
        assert(mod_ == o.mod_);
        v_ -= o.v_;
        if (v_ < 0)
            v_ += mod_.value();
        return *this;
    }
    Fp& operator*=(const Fp& o)
    {
        assert(mod_ == o.mod_);
        v_ *= o.v_;
        mpz_mod(v_.get_mpz_t(), v_.get_mpz_t(), mod_.value().get_mpz_t());
        return *this;
    }
    Fp& operator/=(const Fp& o) { return *this *= o.inverse(); }

    friend Fp operator+(Fp a, const Fp& b) { return a += b; }
    friend Fp operator-(Fp a, const Fp& b) { return a -= b; }
    friend Fp operator*(Fp a, const Fp& b) { return a *= b; }
    friend Fp operator/(Fp a, const Fp& b) { return a /= b; }
    friend Fp operator-(const Fp& a) { return Fp(BigInt(-a.v_), a.mod_); }

    friend bool operator==(const Fp& a, const Fp& b)
    {
        assert(a.mod_ == b.mod_);
        return a.v_ == b.v_;
    }
    friend bool operator!=(const Fp& a, const Fp& b) { return !(a == b); }

    friend std::ostream& operator<<(std::ostream& os, const Fp& a) { return os << a.v_.get_str(); }

private:
    Modulus mod_;
    BigInt v_;
};

}  // namespace ringcert

#endif
