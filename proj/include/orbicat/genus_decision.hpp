#pragma once

#include "orbicat/decision.hpp"
#include "orbicat/orbifold.hpp"

#include <string>
#include <vector>

namespace orbicat {

/// Eigenvalue multiplicities m_{ij} (j = 1..n_i) of each T_i in dimension d.
/// Equivalent to the rank sequence alpha_{ij} = d - (m_{i1} + ... + m_{ij}).
struct MultiplicityVector {
    long d = 0;
    std::vector<std::vector<long>> m; // m[i-1][j-1]

    /// alpha_{ij}, with alpha_{i0} = d.
    long rank(std::size_t i, std::size_t j) const;
    bool consistent_with(const ExponentSet& e) const;
    /// `(2,0)` for one point, `(2,0|1,1)` for two.
    std::string to_string() const;
    friend bool operator==(const MultiplicityVector&, const MultiplicityVector&) = default;
};

/// Exponent of det(T_1)...det(T_m): sum_{ij} m_{ij} e_{ij}.
CycNum determinant_exponent(const ExponentSet& e, const MultiplicityVector& mv);

/// The determinant condition: the exponent above is a rational integer.
bool det_condition(const ExponentSet& e, const MultiplicityVector& mv);

enum class SearchRoute { Auto, Generic };

/// Searches d = 1..d_max for multiplicity vectors meeting det_condition.
/// Among all witnesses the one with the lexicographically least rank data
/// (alpha_{11}, ..., alpha_{1,n_1-1}, alpha_{21}, ...) is returned, ties going
/// to the smaller d. Never answers No: the condition ranges over every d.
/// Rational exponents run a residue DP; anything else accumulates exactly in
/// the cyclotomic field (`Generic` forces that route).
Decision<MultiplicityVector> exists_findim_genus_ge1(const ExponentSet& e, long d_max,
                                                     SearchRoute route = SearchRoute::Auto);

} // namespace orbicat
