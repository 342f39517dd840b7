#include "orbicat/point_support.hpp"

#include <optional>
#include <stdexcept>
#include <vector>

namespace orbicat {

namespace {

void check_row(long n, std::span<const CycNum> c_row) {
    if (n < 2) throw std::invalid_argument("stabilizer order must be at least 2");
    if (static_cast<long>(c_row.size()) != n - 1)
        throw std::invalid_argument("point-support row must have n - 1 entries");
}

// The quotient (1 - z^{ja}) / (1 - z^j) is the geometric sum 1 + z^j + ... + z^{j(a-1)};
// only a mod n matters since a full period of z^j sums to zero.
CycNum residue_rhs(long n, std::span<const CycNum> c_row, long a_res, long b_res) {
    CycNum sum(0);
    for (long j = 1; j < n; ++j) {
        const CycNum& c = c_row[static_cast<std::size_t>(j - 1)];
        if (c.is_zero()) continue;
        std::vector<std::pair<long, Rat>> terms;
        for (long t = 0; t < a_res; ++t) terms.emplace_back(j * t + j * b_res, Rat(1));
        if (terms.empty()) continue;
        sum += CycNum::from_terms(n, terms) * c;
    }
    return sum * CycNum(2);
}

} // namespace

CycNum point_support_rhs(long n, std::span<const CycNum> c_row, long a, long b) {
    check_row(n, c_row);
    const CycNum one(1);
    CycNum sum(0);
    for (long j = 1; j < n; ++j) {
        const CycNum quotient =
            (one - CycNum::root_of_unity(n, j * a)) / (one - CycNum::root_of_unity(n, j));
        sum += quotient * CycNum::root_of_unity(n, j * b) * c_row[static_cast<std::size_t>(j - 1)];
    }
    return sum * CycNum(2);
}

Decision<PointWitness> point_support_witness(long n, std::span<const CycNum> c_row) {
    check_row(n, c_row);
    std::optional<PointWitness> best;
    for (long a_res = 0; a_res < n; ++a_res) {
        for (long b_res = 0; b_res < n; ++b_res) {
            const auto cls = classify(residue_rhs(n, c_row, a_res, b_res));
            if (cls.kind != CycClass::RationalInteger || cls.value.sign() <= 0) continue;
            const long a = to_int64(cls.value.numerator());
            if (a % n != a_res) continue;
            const PointWitness w{a, b_res == 0 ? n : b_res};
            if (!best || w.a < best->a || (w.a == best->a && w.b < best->b)) best = w;
        }
    }
    if (best) return *best;
    return No{};
}

bool replay_point_witness(long n, std::span<const CycNum> c_row, const PointWitness& w) {
    if (w.a < 1 || w.b < 1) return false;
    return point_support_rhs(n, c_row, w.a, w.b) == CycNum(w.a);
}

} // namespace orbicat
