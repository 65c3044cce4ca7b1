#pragma once

/// Exact field arithmetic over the rationals (arbitrary precision, GMP-backed)
/// and prime fields F_p.  Every scalar carries its field; mixing fields throws.
/// Values are kept canonical at construction: rationals in lowest terms with a
/// positive denominator, residues in [0, p).

#include <cstdint>
#include <string>

#include <gmpxx.h>

#include "cacti/errors.hpp"

namespace cacti {

enum class FieldKind { Rational, Prime };

struct Field {
    FieldKind kind = FieldKind::Rational;
    long p = 0; // modulus, Prime only

    static Field rationals() { return Field{FieldKind::Rational, 0}; }

    static Field prime(long p) {
        if (p < 2 || p > (1L << 31)) throw UnsupportedParams("modulus out of range: " + std::to_string(p));
        for (long d = 2; d * d <= p; ++d)
            if (p % d == 0) throw UnsupportedParams("modulus is not prime: " + std::to_string(p));
        return Field{FieldKind::Prime, p};
    }

    long characteristic() const { return kind == FieldKind::Rational ? 0 : p; }

    bool operator==(const Field& o) const { return kind == o.kind && p == o.p; }
    bool operator!=(const Field& o) const { return !(*this == o); }

    std::string str() const {
        return kind == FieldKind::Rational ? std::string("QQ") : "F_" + std::to_string(p);
    }
};

class Scalar {
public:
    Scalar() : field_(Field::rationals()) {}

    static Scalar zero(const Field& f) { return Scalar(f); }

    static Scalar one(const Field& f) { return of_int(f, 1); }

    static Scalar of_int(const Field& f, long n) {
        Scalar s(f);
        if (f.kind == FieldKind::Rational) s.q_ = n;
        else s.r_ = mod(n, f.p);
        return s;
    }

    static Scalar of_mpq(const Field& f, const mpq_class& q) {
        Scalar s(f);
        if (f.kind == FieldKind::Rational) {
            s.q_ = q;
            s.q_.canonicalize();
        } else {
            mpz_class num = q.get_num() % f.p, den = q.get_den() % f.p;
            long n = mod(num.get_si(), f.p), d = mod(den.get_si(), f.p);
            if (d == 0) throw DivisionByZero("denominator vanishes mod " + std::to_string(f.p));
            s.r_ = mulmod(n, inv_mod(d, f.p), f.p);
        }
        return s;
    }

    const Field& field() const { return field_; }

    bool is_zero() const {
        return field_.kind == FieldKind::Rational ? q_ == 0 : r_ == 0;
    }

    bool operator==(const Scalar& o) const {
        if (field_ != o.field_) throw MixedFields();
        return field_.kind == FieldKind::Rational ? q_ == o.q_ : r_ == o.r_;
    }
    bool operator!=(const Scalar& o) const { return !(*this == o); }

    Scalar operator+(const Scalar& o) const {
        check(o);
        Scalar s(field_);
        if (field_.kind == FieldKind::Rational) s.q_ = q_ + o.q_;
        else s.r_ = mod(r_ + o.r_, field_.p);
        return s;
    }

    Scalar operator-(const Scalar& o) const {
        check(o);
        Scalar s(field_);
        if (field_.kind == FieldKind::Rational) s.q_ = q_ - o.q_;
        else s.r_ = mod(r_ - o.r_, field_.p);
        return s;
    }

    Scalar operator-() const {
        Scalar s(field_);
        if (field_.kind == FieldKind::Rational) s.q_ = -q_;
        else s.r_ = mod(-r_, field_.p);
        return s;
    }

    Scalar operator*(const Scalar& o) const {
        check(o);
        Scalar s(field_);
        if (field_.kind == FieldKind::Rational) s.q_ = q_ * o.q_;
        else s.r_ = mulmod(r_, o.r_, field_.p);
        return s;
    }

    Scalar operator/(const Scalar& o) const { return *this * o.inv(); }

    Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
    Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
    Scalar& operator*=(const Scalar& o) { return *this = *this * o; }

    Scalar inv() const {
        if (is_zero()) throw DivisionByZero("inverse of zero");
        Scalar s(field_);
        if (field_.kind == FieldKind::Rational) s.q_ = 1 / q_;
        else s.r_ = inv_mod(r_, field_.p);
        return s;
    }

    /// Canonical rendering: `-?digits(/digits)?`.
    std::string str() const {
        if (field_.kind == FieldKind::Rational) {
            if (q_.get_den() == 1) return q_.get_num().get_str();
            return q_.get_str();
        }
        return std::to_string(r_);
    }

    const mpq_class& rational() const { return q_; }
    long residue() const { return r_; }

private:
    explicit Scalar(const Field& f) : field_(f) {}

    void check(const Scalar& o) const {
        if (field_ != o.field_) throw MixedFields();
    }

    static long mod(long x, long p) {
        long r = x % p;
        return r < 0 ? r + p : r;
    }

    static long mulmod(long a, long b, long p) {
        return static_cast<long>((static_cast<__int128>(a) * b) % p);
    }

    static long inv_mod(long a, long p) {
        long t = 0, nt = 1, r = p, nr = mod(a, p);
        while (nr != 0) {
            long q = r / nr;
            long tmp = t - q * nt; t = nt; nt = tmp;
            tmp = r - q * nr; r = nr; nr = tmp;
        }
        if (r != 1) throw DivisionByZero("element not invertible mod " + std::to_string(p));
        return mod(t, p);
    }

    Field field_;
    mpq_class q_;
    long r_ = 0;
};

/// Parses `-?digits(/digits)?` over the given field.  Over F_p the value is
/// reduced mod p with the denominator inverted.
inline Scalar parse_scalar(const std::string& text, const Field& field) {
    if (text.empty()) throw ParseError("empty scalar");
    std::size_t i = text[0] == '-' ? 1 : 0;
    if (i == text.size()) throw ParseError("bare sign in scalar '" + text + "'");
    bool seen_slash = false;
    std::size_t slash = std::string::npos;
    for (std::size_t j = i; j < text.size(); ++j) {
        if (text[j] == '/') {
            if (seen_slash || j == i || j + 1 == text.size()) throw ParseError("bad scalar '" + text + "'");
            seen_slash = true;
            slash = j;
        } else if (!std::isdigit(static_cast<unsigned char>(text[j]))) {
            throw ParseError("bad character in scalar '" + text + "'");
        }
    }
    mpz_class num(text.substr(0, seen_slash ? slash : text.size()));
    mpz_class den = seen_slash ? mpz_class(text.substr(slash + 1)) : mpz_class(1);
    if (den == 0) throw DivisionByZero("zero denominator in scalar '" + text + "'");
    return Scalar::of_mpq(field, mpq_class(num, den));
}

} // namespace cacti
