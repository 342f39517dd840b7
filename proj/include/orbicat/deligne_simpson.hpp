#pragma once

#include "orbicat/decision.hpp"
#include "orbicat/orbifold.hpp"
#include "orbicat/star_quiver.hpp"

#include <cstdint>
#include <vector>

namespace orbicat {

/// Deligne-Simpson data: quiver from the stabilizer orders, eigenvalue
/// exponents xi_{ij} = exp(2 pi i e_{ij}), and the rank vector alpha with
/// alpha_0 = d.
struct DSInstance {
    StarQuiver quiver;
    ExponentSet e;
    RootVector alpha;

    /// alpha_0 >= 1, legs nonincreasing and nonnegative, exponent shape matches.
    void validate() const;
};

/// Parts are positive roots summing to alpha, each with integral xi-exponent.
struct DSCertificate {
    std::vector<RootVector> parts;
};

/// E(alpha) = sum_{ij} (alpha_{i,j-1} - alpha_{ij}) e_{ij}; xi^[alpha] = 1 iff E(alpha) is in Z.
CycNum xi_exponent(const StarQuiver& q, const ExponentSet& e, const RootVector& alpha);

struct StrictRootWitness {
    RootVector root;
    CycNum exponent;
};

/// Looks for a positive root with alpha_0 > 0 and integral xi-exponent.
/// Finite and affine types are decided outright, indefinite types are
/// searched up to `height_bound`. In affine type the least k delta is
/// returned when one exists; otherwise, as in the other types, the least
/// real root in (height, lex) order (written beta + k delta with k solved
/// exactly).
Decision<StrictRootWitness> strict_root_search(const StarQuiver& q, const ExponentSet& e, std::int64_t height_bound);

struct CBOptions {
    /// Largest DP box prod (alpha_v + 1) attempted before answering UnknownUpTo(cap).
    std::uint64_t box_volume_cap = 20'000'000;
};

/// Whether alpha splits into positive roots beta with xi^[beta] = 1, by DP over
/// the box [0, alpha]. Parts are chosen greedily from the largest root in
/// (height, lex) order, so a root alpha with integral exponent is returned whole.
Decision<DSCertificate> cb_solvable(const DSInstance& inst, const CBOptions& options = {});

bool replay_strict_root(const StarQuiver& q, const ExponentSet& e, const StrictRootWitness& w);
bool replay_cb(const DSInstance& inst, const DSCertificate& cert);

/// Exponent table shaped like the quiver's legs; throws on mismatch.
void check_shape(const StarQuiver& q, const ExponentSet& e);

} // namespace orbicat
