#pragma once

// Exact field elements: arbitrary-precision rationals (characteristic 0)
// or F_p with a runtime prime modulus. Values are always canonical:
// rationals in lowest terms with positive denominator (cpp_rational keeps
// that invariant), F_p representatives in [0, p).

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <memory>
#include <stdexcept>
#include <string>

namespace binform {

using bigint = boost::multiprecision::cpp_int;
using bigrat = boost::multiprecision::cpp_rational;

struct field_mismatch : std::invalid_argument {
    field_mismatch() : std::invalid_argument("scalar fields differ (F_p vs F_q or Q)") {}
};

struct division_by_zero : std::domain_error {
    division_by_zero() : std::domain_error("exact division by zero") {}
};

inline bool is_prime(long long m) {
    if (m < 2) return false;
    for (long long d = 2; d * d <= m; ++d)
        if (m % d == 0) return false;
    return true;
}

inline void check_characteristic(long long p) {
    if (p != 0 && !is_prime(p))
        throw std::invalid_argument("characteristic must be 0 or prime");
    if (p < 0 || p > (1LL << 30))
        throw std::invalid_argument("characteristic out of range");
}

class Scalar {
public:
    Scalar() : p_(0), v_(0) {}

    static Scalar zero(long long p) { return Scalar(p, 0); }
    static Scalar one(long long p) { return Scalar(p, 1); }

    static Scalar of_int(long long p, long long v) { return Scalar(p, v); }
    static Scalar of_int(long long p, const bigint& v) {
        Scalar s(p, 0);
        if (p == 0) {
            s.q_ = std::make_shared<const bigrat>(v);
        } else {
            bigint r = v % p;
            if (r < 0) r += p;
            s.v_ = static_cast<long long>(r);
        }
        return s;
    }
    static Scalar of_rat(const bigrat& q) {
        Scalar s(0, 0);
        s.q_ = std::make_shared<const bigrat>(q);
        return s;
    }

    // "num", "-num" or "num/den"; for p > 0 the integer is reduced mod p.
    static Scalar parse(long long p, const std::string& text) {
        auto slash = text.find('/');
        if (slash == std::string::npos) {
            bigint v(text);
            return of_int(p, v);
        }
        bigint num(text.substr(0, slash)), den(text.substr(slash + 1));
        if (den == 0) throw division_by_zero();
        if (p == 0) return of_rat(bigrat(num, den));
        return of_int(p, num) / of_int(p, den);
    }

    long long characteristic() const { return p_; }
    bool is_zero() const { return p_ ? v_ == 0 : (!q_ || *q_ == 0); }
    bool is_one() const { return p_ ? v_ == 1 : (q_ && *q_ == 1); }

    const bigrat& rat() const {
        static const bigrat zero_rat(0);
        return q_ ? *q_ : zero_rat;
    }
    long long residue() const { return v_; }

    friend Scalar operator+(const Scalar& a, const Scalar& b) {
        a.match(b);
        if (a.p_) return Scalar(a.p_, (a.v_ + b.v_) % a.p_);
        return of_rat(a.rat() + b.rat());
    }
    friend Scalar operator-(const Scalar& a, const Scalar& b) {
        a.match(b);
        if (a.p_) return Scalar(a.p_, (a.v_ - b.v_ + a.p_) % a.p_);
        return of_rat(a.rat() - b.rat());
    }
    friend Scalar operator*(const Scalar& a, const Scalar& b) {
        a.match(b);
        if (a.p_) return Scalar(a.p_, (a.v_ * b.v_) % a.p_);
        return of_rat(a.rat() * b.rat());
    }
    friend Scalar operator/(const Scalar& a, const Scalar& b) { return a * b.inverse(); }
    Scalar operator-() const {
        if (p_) return Scalar(p_, (p_ - v_) % p_);
        return of_rat(-rat());
    }
    Scalar& operator+=(const Scalar& b) { return *this = *this + b; }
    Scalar& operator-=(const Scalar& b) { return *this = *this - b; }
    Scalar& operator*=(const Scalar& b) { return *this = *this * b; }

    Scalar inverse() const {
        if (is_zero()) throw division_by_zero();
        if (p_ == 0) return of_rat(1 / rat());
        // extended Euclid on the residue
        long long u = 1, w = 0, a = v_, b = p_;
        while (b != 0) {
            long long q = a / b, r = a % b;
            long long t = u - q * w;
            u = w; a = b; w = t; b = r;
        }
        return Scalar(p_, ((u % p_) + p_) % p_);
    }

    Scalar pow(unsigned long long e) const {
        Scalar r = one(p_), base = *this;
        while (e) {
            if (e & 1) r *= base;
            base *= base;
            e >>= 1;
        }
        return r;
    }

    friend bool operator==(const Scalar& a, const Scalar& b) {
        a.match(b);
        return a.p_ ? a.v_ == b.v_ : a.rat() == b.rat();
    }
    friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

    // arbitrary total order, used only for deterministic tie-breaks
    friend bool operator<(const Scalar& a, const Scalar& b) {
        a.match(b);
        return a.p_ ? a.v_ < b.v_ : a.rat() < b.rat();
    }

    std::string str() const {
        if (p_) return std::to_string(v_);
        return rat().str();
    }

private:
    Scalar(long long p, long long v) : p_(p), v_(0) {
        if (p_) {
            v_ = v % p_;
            if (v_ < 0) v_ += p_;
        } else if (v != 0) {
            q_ = std::make_shared<const bigrat>(v);
        }
    }

    void match(const Scalar& b) const {
        if (p_ != b.p_) throw field_mismatch();
    }

    long long p_;                       // 0 = rationals
    long long v_;                       // residue when p_ > 0
    std::shared_ptr<const bigrat> q_;   // value when p_ == 0 (null = 0)
};

} // namespace binform
