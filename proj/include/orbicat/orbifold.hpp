#pragma once

#include "orbicat/cyclotomic.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace orbicat {

/// Orbifold Riemann surface X/W: genus, compactness, punctures and the
/// stabilizer orders n_i of the marked points P_1..P_m.
struct OrbifoldCurve {
    int genus = 0;
    bool compact = true;
    int punctures = 0;
    std::vector<long> orders;

    std::size_t point_count() const { return orders.size(); }
    /// Throws std::invalid_argument when the invariants fail.
    void validate() const;
};

/// Entries addressed as (i, j) with 1-based point index i and 1-based slot j.
class PointTable {
public:
    PointTable() = default;
    /// Rows of the given lengths, zero-filled.
    explicit PointTable(const std::vector<long>& row_lengths);

    std::size_t points() const { return rows_.size(); }
    std::size_t slots(std::size_t i) const { return row(i).size(); }

    CycNum& operator()(std::size_t i, std::size_t j);
    const CycNum& operator()(std::size_t i, std::size_t j) const;

    const std::vector<CycNum>& row(std::size_t i) const;
    std::vector<CycNum>& row(std::size_t i);

    friend bool operator==(const PointTable&, const PointTable&) = default;

private:
    std::vector<std::vector<CycNum>> rows_;
};

/// KZ-side parameters: c_{ij} for j = 1..n_i - 1 and one eta_i per point.
struct CParams {
    PointTable c;
    std::vector<CycNum> eta;

    /// Zero parameters shaped for `curve`.
    static CParams zero(const OrbifoldCurve& curve);
    friend bool operator==(const CParams&, const CParams&) = default;
};

/// Multiplicative Hecke parameters xi_{ij} = exp(2 pi i e_{ij}) stored by
/// their exponents, j = 1..n_i. For the rank-n wreath case the transposition
/// parameter exp(tau) = exp(2 pi i t) keeps its exponent t separately.
struct ExponentSet {
    PointTable e;
    std::optional<CycNum> transposition;

    /// e_{ij} = j / n_i, the exponents at c = 0, eta = 0.
    static ExponentSet untwisted(const OrbifoldCurve& curve);
    friend bool operator==(const ExponentSet&, const ExponentSet&) = default;
};

/// Which sign eta enters the KZ exponent with: s41 subtracts it (the
/// convention of the curve-level criteria, default), s21 adds it.
enum class EtaSign { S41, S21 };

/// Raised when the exact inverse of the parameter map hits a singular system.
class SingularSystem : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

/// e_{ij} = j/n_i + t_{ij} with
/// t_{ij} = (2 sum_k c_{ik} (1 - z^{jk}) / (1 - z^{-k}) -/+ eta_i) / n_i, z = zeta_{n_i}.
ExponentSet tau_from_c_eta(const OrbifoldCurve& curve, const CParams& p, EtaSign sign = EtaSign::S41);

/// Exact inverse of tau_from_c_eta, by elimination over the cyclotomic field.
CParams c_eta_from_tau(const OrbifoldCurve& curve, const ExponentSet& e, EtaSign sign = EtaSign::S41);

/// t_{ij} = e_{ij} - j/n_i.
CycNum tau_exponent(const OrbifoldCurve& curve, const ExponentSet& e, std::size_t i, std::size_t j);

/// Exponent E_q of q = prod_{i,j} xi_{ij}^{-1/n_i}, i.e. E_q = -sum e_{ij}/n_i.
/// q is a root of unity iff E_q is rational.
CycNum q_exponent(const OrbifoldCurve& curve, const ExponentSet& e);

struct PointRelation {
    std::size_t point;                  // 1-based
    long order;                         // n_i
    std::vector<CycNum> eigen_exponents; // e_{i1}..e_{i n_i}: prod_j (T_i - exp(2 pi i e_ij)) = 0
};

/// Generators and relations of the orbifold Hecke algebra: one T_i per
/// marked point with its eigenvalue relation, A_l, B_l for l = 1..g, and one
/// unconstrained X_p per puncture; T_1...T_m X_1...X_k = prod_l [A_l, B_l].
struct PresentationData {
    std::vector<PointRelation> points;
    int genus = 0;
    int punctures = 0;

    std::vector<std::string> generators() const;
    std::string product_relation() const;
};

PresentationData hecke_presentation(const OrbifoldCurve& curve, const ExponentSet& e);

/// Throws std::invalid_argument unless the tables match the curve's shape.
void check_shape(const OrbifoldCurve& curve, const CParams& p);
void check_shape(const OrbifoldCurve& curve, const ExponentSet& e);

} // namespace orbicat
