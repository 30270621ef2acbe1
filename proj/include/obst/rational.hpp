#pragma once

#include <gmpxx.h>

#include <compare>
#include <stdexcept>
#include <string>
#include <utility>

namespace obst {

/// Exact rational scalar. Canonical form: lowest terms, denominator > 0.
/// All arithmetic is exact; there is no rounding anywhere in the library.
class Scalar {
public:
    Scalar() : v_(0) {}
    Scalar(long n) : v_(n) {}
    Scalar(long num, long den) : v_(num, den) {
        if (den == 0) throw std::invalid_argument("Scalar: zero denominator");
        v_.canonicalize();
    }
    explicit Scalar(mpq_class v) : v_(std::move(v)) { v_.canonicalize(); }

    // Accepts "num/den" or a bare integer string.
    static Scalar parse(const std::string& s);

    // Always "num/den", e.g. "3/2", "-1/7", "0/1".
    std::string str() const {
        return v_.get_num().get_str() + "/" + v_.get_den().get_str();
    }

    int sign() const { return sgn(v_); }
    bool is_zero() const { return sgn(v_) == 0; }
    double to_double() const { return v_.get_d(); }
    const mpq_class& raw() const { return v_; }

    Scalar operator-() const { return Scalar(mpq_class(-v_)); }
    Scalar& operator+=(const Scalar& o) { v_ += o.v_; return *this; }
    Scalar& operator-=(const Scalar& o) { v_ -= o.v_; return *this; }
    Scalar& operator*=(const Scalar& o) { v_ *= o.v_; return *this; }
    Scalar& operator/=(const Scalar& o) {
        if (o.is_zero()) throw std::invalid_argument("Scalar: division by zero");
        v_ /= o.v_;
        return *this;
    }

    friend Scalar operator+(Scalar a, const Scalar& b) { a += b; return a; }
    friend Scalar operator-(Scalar a, const Scalar& b) { a -= b; return a; }
    friend Scalar operator*(Scalar a, const Scalar& b) { a *= b; return a; }
    friend Scalar operator/(Scalar a, const Scalar& b) { a /= b; return a; }

    friend bool operator==(const Scalar& a, const Scalar& b) { return cmp(a.v_, b.v_) == 0; }
    friend std::strong_ordering operator<=>(const Scalar& a, const Scalar& b) {
        int c = cmp(a.v_, b.v_);
        return c < 0 ? std::strong_ordering::less
             : c > 0 ? std::strong_ordering::greater
                     : std::strong_ordering::equal;
    }

private:
    mpq_class v_;
};

inline Scalar abs(const Scalar& a) { return a.sign() < 0 ? -a : a; }
inline const Scalar& min(const Scalar& a, const Scalar& b) { return b < a ? b : a; }
inline const Scalar& max(const Scalar& a, const Scalar& b) { return a < b ? b : a; }

}  // namespace obst
