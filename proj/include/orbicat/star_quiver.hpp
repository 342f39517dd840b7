#pragma once

#include "orbicat/linalg.hpp"
#include "orbicat/rational.hpp"

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace orbicat {

/// Integer coefficients over the vertices of a star quiver, center first.
class RootVector {
public:
    RootVector() = default;
    explicit RootVector(std::size_t vertices) : coeffs_(vertices, 0) {}
    explicit RootVector(std::vector<std::int64_t> coeffs) : coeffs_(std::move(coeffs)) {}

    std::size_t size() const { return coeffs_.size(); }
    std::int64_t& operator[](std::size_t v) { return coeffs_[v]; }
    std::int64_t operator[](std::size_t v) const { return coeffs_[v]; }
    const std::vector<std::int64_t>& coeffs() const { return coeffs_; }

    std::int64_t center() const { return coeffs_.at(0); }
    std::int64_t height() const;
    bool is_zero() const;
    /// Nonzero with every coefficient >= 0.
    bool is_positive() const;
    /// Componentwise <=.
    bool dominated_by(const RootVector& box) const;

    RootVector& operator+=(const RootVector& o);
    RootVector& operator-=(const RootVector& o);
    friend RootVector operator+(RootVector a, const RootVector& b) { return a += b; }
    friend RootVector operator-(RootVector a, const RootVector& b) { return a -= b; }
    friend RootVector operator*(std::int64_t k, RootVector a);

    friend bool operator==(const RootVector&, const RootVector&) = default;

private:
    std::vector<std::int64_t> coeffs_;
};

/// Height first, then lexicographic on the coefficient vector.
struct RootOrder {
    bool operator()(const RootVector& a, const RootVector& b) const;
};

struct RootVectorHash {
    std::size_t operator()(const RootVector& v) const noexcept;
};

/// Star-shaped graph with m legs of lengths n_i - 1 around one center vertex.
/// Vertex 0 is the center; leg vertices follow in input order, each leg
/// listed outward from the center.
class StarQuiver {
public:
    static StarQuiver build(std::vector<long> orders);

    std::size_t vertex_count() const { return neighbors_.size(); }
    std::size_t legs() const { return orders_.size(); }
    const std::vector<long>& orders() const { return orders_; }
    long leg_length(std::size_t i) const { return orders_.at(i - 1) - 1; }

    /// Index of leg vertex (i, j), 1 <= i <= m, 1 <= j <= n_i - 1.
    std::size_t vertex(std::size_t i, std::size_t j) const;
    const std::vector<std::size_t>& neighbors(std::size_t v) const { return neighbors_.at(v); }

    /// alpha_{ij} with alpha_{i0} = alpha_0 and alpha_{i,n_i} = 0.
    std::int64_t coefficient(const RootVector& alpha, std::size_t i, std::size_t j) const;

    /// Symmetric generalized Cartan matrix: 2 on the diagonal, -1 per edge.
    Matrix<Rat> cartan_matrix() const;
    /// (A alpha)_v for every vertex v.
    std::vector<std::int64_t> pairing(const RootVector& alpha) const;
    /// alpha^T A alpha / 2.
    std::int64_t tits_form(const RootVector& alpha) const;

    RootVector simple_root(std::size_t v) const;
    RootVector reflect(const RootVector& alpha, std::size_t v) const;

    /// `[a0; a11 a12 ...| a21 ...]`.
    std::string format(const RootVector& alpha) const;
    RootVector parse(std::string_view text) const;

private:
    std::vector<long> orders_;
    std::vector<std::size_t> leg_start_;
    std::vector<std::vector<std::size_t>> neighbors_;
};

enum class QuiverType { Finite, Affine, Indefinite };
std::string to_string(QuiverType t);

/// Finite when the Cartan matrix is positive definite (all leading principal
/// minors positive); affine when its kernel is one-dimensional and spanned by
/// a positive vector; indefinite otherwise.
QuiverType classify(const StarQuiver& q);

class NotAffine : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Primitive positive generator of the Cartan kernel; throws NotAffine.
RootVector delta(const StarQuiver& q);

enum class RootKind { Real, Imaginary };
std::string to_string(RootKind k);

struct Root {
    RootVector vector;
    RootKind kind;
};

/// Every positive root of height <= bound, sorted by RootOrder.
std::vector<Root> positive_roots_up_to(const StarQuiver& q, std::int64_t height_bound);
/// Every positive root beta with beta <= box componentwise, sorted by RootOrder.
std::vector<Root> positive_roots_in_box(const StarQuiver& q, const RootVector& box);
/// Complete positive root list of a finite-type quiver; throws otherwise.
std::vector<Root> finite_positive_roots(const StarQuiver& q);

enum class RootTest { Real, Imaginary, NotRoot };
/// Root membership for any integer vector, positive or negative.
RootTest is_root(const StarQuiver& q, const RootVector& alpha);

} // namespace orbicat
