#pragma once

#include "orbicat/deligne_simpson.hpp"

#include <Eigen/Dense>

#include <complex>
#include <cstdint>
#include <optional>
#include <vector>

namespace orbicat {

/// Conjugacy-class closure at one point: eigenvalues xi_1..xi_n in order with
/// multiplicities m_j; the closure allows rank prod_{k<=j} (T - xi_k) <= d - (m_1 + ... + m_j).
struct ClassSpec {
    std::vector<std::complex<double>> eigenvalues;
    std::vector<int> multiplicities;

    int rank_bound(std::size_t j) const; // j = 0..n
};

struct NumericClassSpec {
    int d = 0;
    std::vector<ClassSpec> points;

    void validate() const;
    static NumericClassSpec from_instance(const DSInstance& inst);
};

struct NumericSolution {
    std::vector<Eigen::MatrixXcd> matrices;
    double residual = 0.0; // ||T_1 ... T_m - I||_F
};

struct NumericOptions {
    double tol = 1e-9;       // product residual
    double eigen_tol = 1e-6; // eigenvalue matching and numerical rank
    int max_iter = 300;
    int restarts = 64;
    std::uint64_t seed = 0;
    double penalty = 1e-2;       // weight on sum ||g_i||_F^2, with |det g_i| held at 1
    double penalty_decay = 0.75; // per iteration; dropped once below 1e-14
};

struct NumericResult {
    std::optional<NumericSolution> solution;
    int restart = -1; // index of the restart that produced `solution`
    bool found() const { return solution.has_value(); }
};

/// Least-squares objective over T_i = g_i D_i g_i^{-1}:
/// F(g) = ||T_1 ... T_m - I||_F^2 + lambda sum_i ||g_i||_F^2.
/// Parameters are the real and imaginary parts of every g_i entry, row-major.
class ProductObjective {
public:
    ProductObjective(const NumericClassSpec& spec, double lambda);

    Eigen::Index parameter_count() const;
    void set_lambda(double lambda) { lambda_ = lambda; }

    std::vector<Eigen::MatrixXcd> conjugators(const Eigen::VectorXd& theta) const;
    std::vector<Eigen::MatrixXcd> matrices(const Eigen::VectorXd& theta) const;

    Eigen::VectorXd residuals(const Eigen::VectorXd& theta) const;
    Eigen::MatrixXd jacobian(const Eigen::VectorXd& theta) const;
    double value(const Eigen::VectorXd& theta) const;
    /// 2 J^T r, from the product-rule Jacobian.
    Eigen::VectorXd gradient(const Eigen::VectorXd& theta) const;

private:
    int d_;
    std::vector<Eigen::VectorXcd> diagonals_;
    double lambda_;
};

/// Seeded multi-restart Levenberg-Marquardt. Restarts run in order and the
/// first verified one wins. NotFound says nothing about existence.
NumericResult solve_numeric(const NumericClassSpec& spec, const NumericOptions& options = {});

/// Residual below tol, eigenvalues within eigen_tol of the prescribed
/// multiset, and every rank bound of the class closure respected.
bool verify_solution(const NumericSolution& sol, const NumericClassSpec& spec, double tol = 1e-9,
                     double eigen_tol = 1e-6);

} // namespace orbicat
