#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <functional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>

namespace orbicat {

using Integer = mpz_class;

/// Exact rational number in lowest terms with a positive denominator.
class Rat {
public:
    Rat() = default;
    Rat(long v) : value_(v) {}
    Rat(int v) : value_(v) {}
    explicit Rat(const Integer& v) : value_(v) {}
    Rat(const Integer& num, const Integer& den);
    Rat(long num, long den) : Rat(Integer(num), Integer(den)) {}

    /// Parses `p/q` or `p` with optional sign and surrounding blanks.
    static Rat parse(std::string_view text);

    Integer numerator() const { return value_.get_num(); }
    Integer denominator() const { return value_.get_den(); }

    bool is_zero() const { return sgn(value_) == 0; }
    bool is_integer() const { return value_.get_den() == 1; }
    int sign() const { return sgn(value_); }

    /// Largest integer not exceeding the value.
    Integer floor() const;
    /// Value minus its floor, in [0, 1).
    Rat fractional_part() const;

    double to_double() const { return value_.get_d(); }
    std::string to_string() const;

    Rat operator-() const { return Rat(mpq_class(-value_)); }
    Rat& operator+=(const Rat& o) { value_ += o.value_; return *this; }
    Rat& operator-=(const Rat& o) { value_ -= o.value_; return *this; }
    Rat& operator*=(const Rat& o) { value_ *= o.value_; return *this; }
    Rat& operator/=(const Rat& o);

    friend Rat operator+(Rat a, const Rat& b) { return a += b; }
    friend Rat operator-(Rat a, const Rat& b) { return a -= b; }
    friend Rat operator*(Rat a, const Rat& b) { return a *= b; }
    friend Rat operator/(Rat a, const Rat& b) { return a /= b; }

    friend bool operator==(const Rat& a, const Rat& b) { return a.value_ == b.value_; }
    friend std::strong_ordering operator<=>(const Rat& a, const Rat& b) {
        const int c = cmp(a.value_, b.value_);
        return c < 0 ? std::strong_ordering::less
                     : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }

    friend std::ostream& operator<<(std::ostream& os, const Rat& r) { return os << r.to_string(); }

    std::size_t hash() const;

private:
    explicit Rat(mpq_class v) : value_(std::move(v)) {}
    mpq_class value_{0};
};

Integer gcd(const Integer& a, const Integer& b);
Integer lcm(const Integer& a, const Integer& b);
long lcm(long a, long b);

/// Fits `v` into a signed 64-bit value or throws std::overflow_error.
std::int64_t to_int64(const Integer& v);

} // namespace orbicat

template <>
struct std::hash<orbicat::Rat> {
    std::size_t operator()(const orbicat::Rat& r) const noexcept { return r.hash(); }
};
