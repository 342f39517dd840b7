#pragma once

#include "orbicat/cyclotomic.hpp"
#include "orbicat/decision.hpp"

#include <span>

namespace orbicat {

/// Positive integers (a, b) with a = 2 sum_j (1 - z^{ja}) / (1 - z^j) z^{jb} c_j.
struct PointWitness {
    long a;
    long b;
    friend bool operator==(const PointWitness&, const PointWitness&) = default;
};

/// Right-hand side for given (a, b), evaluated straight from the quotient form.
CycNum point_support_rhs(long n, std::span<const CycNum> c_row, long a, long b);

/// Decides whether some positive (a, b) satisfies the point-support equation
/// at a marked point with stabilizer order n. Total: Yes with the witness of
/// smallest a, then smallest b; otherwise No.
Decision<PointWitness> point_support_witness(long n, std::span<const CycNum> c_row);

/// True iff `w` satisfies the equation exactly.
bool replay_point_witness(long n, std::span<const CycNum> c_row, const PointWitness& w);

} // namespace orbicat
