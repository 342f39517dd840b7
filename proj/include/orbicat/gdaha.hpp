#pragma once

#include "orbicat/orbifold.hpp"
#include "orbicat/star_quiver.hpp"

#include <vector>

namespace orbicat {

/// Rank-n wreath-product parameters attached to an affine star quiver.
/// mu[i-1][p-1] sits on leg vertex (i, p); mu0 on the center.
struct WreathParams {
    long rank = 1;
    Rat mu0;
    std::vector<std::vector<Rat>> mu;
    Rat nu;
    std::vector<Rat> xi; // offsets xi_1..xi_m, summing to zero
    bool spherical_asserted = false; // user input, never computed

    static WreathParams zero(const StarQuiver& q);
    void validate(const StarQuiver& q) const;
};

/// e_{ij} = gamma_{ij} = mu_{i1} + ... + mu_{i,j-1} + mu0/m + xi_i, and the
/// transposition's tau-exponent 1/2 - nu. Throws NotAffine for other quivers.
ExponentSet gdaha_tau_from_mu_nu(const StarQuiver& q, const WreathParams& w);

/// mu per vertex in quiver order.
std::vector<Rat> vertex_mu(const StarQuiver& q, const WreathParams& w);

/// Positive real roots of height <= bound with sum_v b_v mu_v in Z, in root order.
std::vector<RootVector> a_real_roots(const StarQuiver& q, const std::vector<Rat>& mu_full, std::int64_t height_bound);

} // namespace orbicat
