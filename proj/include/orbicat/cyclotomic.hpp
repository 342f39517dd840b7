#pragma once

#include "orbicat/rational.hpp"

#include <complex>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace orbicat {

/// Euler's totient.
long totient(long n);

/// Integer coefficients of the n-th cyclotomic polynomial, lowest degree first.
/// Results are cached; the cache is shared and guarded.
const std::vector<std::int64_t>& cyclotomic_polynomial(long n);

/// Exact element of Q(zeta_n), zeta_n = exp(2 pi i / n).
///
/// Stored in the power basis 1, z, ..., z^(phi(n)-1) modulo the n-th
/// cyclotomic polynomial, so two values of the same order are equal exactly
/// when their coordinates agree. The order is whatever the value was built
/// with; arithmetic promotes to the lcm of the operand orders and never
/// shrinks it. Use minimized() for the smallest order that holds the value.
class CycNum {
public:
    CycNum() : order_(1), coeffs_{Rat(0)} {}
    CycNum(const Rat& r) : order_(1), coeffs_{r} {}
    CycNum(long v) : CycNum(Rat(v)) {}
    CycNum(int v) : CycNum(Rat(v)) {}

    /// The rational value r viewed inside Q(zeta_order).
    static CycNum rational(const Rat& r, long order);
    /// zeta_n^j for any integer j.
    static CycNum root_of_unity(long n, long j);
    /// Sum of coeff * zeta_n^k over the given terms; k may be any integer.
    static CycNum from_terms(long n, std::span<const std::pair<long, Rat>> terms);

    /// Parses `cyc(n)[k1:p1/q1, k2:p2/q2, ...]`, or a bare rational.
    static CycNum parse(std::string_view text);

    long order() const { return order_; }
    std::span<const Rat> coeffs() const { return coeffs_; }

    bool is_zero() const;
    /// True when every coordinate except the constant one vanishes.
    bool is_rational() const;
    /// Constant coordinate; equals the value when is_rational().
    const Rat& constant() const { return coeffs_.front(); }

    /// Same value in Q(zeta_target); `target` must be a multiple of order().
    CycNum promoted(long target) const;
    /// Same value at the smallest order d dividing order() with value in Q(zeta_d).
    CycNum minimized() const;

    /// Subtracts floor(constant()) so the constant coordinate lies in [0, 1).
    /// Two values differ by a rational integer iff their reductions agree.
    CycNum reduced_mod_integers() const;

    CycNum inverse() const;

    std::complex<double> to_complex() const;
    /// `p/q` for rational values, otherwise the cyc(n)[...] form over the power basis.
    std::string to_string() const;

    CycNum operator-() const;
    CycNum& operator+=(const CycNum& o);
    CycNum& operator-=(const CycNum& o);
    CycNum& operator*=(const CycNum& o);
    CycNum& operator/=(const CycNum& o);

    friend CycNum operator+(CycNum a, const CycNum& b) { return a += b; }
    friend CycNum operator-(CycNum a, const CycNum& b) { return a -= b; }
    friend CycNum operator*(CycNum a, const CycNum& b) { return a *= b; }
    friend CycNum operator/(CycNum a, const CycNum& b) { return a /= b; }

    /// Value equality; operands of different orders are compared at their lcm.
    friend bool operator==(const CycNum& a, const CycNum& b);

    /// Coordinate equality including the order.
    bool same_representation(const CycNum& o) const {
        return order_ == o.order_ && coeffs_ == o.coeffs_;
    }

    std::size_t hash() const;

private:
    CycNum(long order, std::vector<Rat> coeffs) : order_(order), coeffs_(std::move(coeffs)) {}
    /// Reduces an arbitrary-length polynomial in zeta_n into canonical coordinates.
    static CycNum reduce(long n, std::vector<Rat> poly);

    long order_;
    std::vector<Rat> coeffs_;
};

std::ostream& operator<<(std::ostream& os, const CycNum& x);

enum class CycClass { RationalInteger, Rational, Irrational };

struct Classification {
    CycClass kind;
    Rat value; // meaningful unless kind == Irrational
};

/// Membership in Z and Q after canonical reduction.
Classification classify(const CycNum& x);

inline bool is_rational_integer(const CycNum& x) {
    return classify(x).kind == CycClass::RationalInteger;
}

/// lcm of the orders of the given values (1 for an empty span).
long common_order(std::span<const CycNum> values);

} // namespace orbicat

template <>
struct std::hash<orbicat::CycNum> {
    std::size_t operator()(const orbicat::CycNum& x) const noexcept { return x.hash(); }
};
