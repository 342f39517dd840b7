#include "orbicat/numeric_oracle.hpp"

#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>

namespace orbicat {

using Eigen::Index;
using Eigen::MatrixXcd;
using Eigen::MatrixXd;
using Eigen::VectorXcd;
using Eigen::VectorXd;

int ClassSpec::rank_bound(std::size_t j) const {
    int d = 0;
    for (int m : multiplicities) d += m;
    for (std::size_t k = 0; k < j; ++k) d -= multiplicities.at(k);
    return d;
}

void NumericClassSpec::validate() const {
    if (d < 1) throw std::invalid_argument("dimension must be positive");
    for (const auto& p : points) {
        if (p.eigenvalues.size() != p.multiplicities.size() || p.eigenvalues.empty())
            throw std::invalid_argument("each point needs matching eigenvalue and multiplicity lists");
        int sum = 0;
        for (int m : p.multiplicities) {
            if (m < 0) throw std::invalid_argument("multiplicities must be nonnegative");
            sum += m;
        }
        if (sum != d) throw std::invalid_argument("multiplicities at a point must sum to d");
    }
}

NumericClassSpec NumericClassSpec::from_instance(const DSInstance& inst) {
    inst.validate();
    NumericClassSpec spec;
    spec.d = static_cast<int>(inst.alpha.center());
    const auto& q = inst.quiver;
    for (std::size_t i = 1; i <= q.legs(); ++i) {
        ClassSpec cs;
        const auto n = static_cast<std::size_t>(q.orders()[i - 1]);
        for (std::size_t j = 1; j <= n; ++j) {
            const std::complex<double> ex = inst.e.e(i, j).to_complex();
            cs.eigenvalues.push_back(std::exp(std::complex<double>(0.0, 2.0 * std::numbers::pi) * ex));
            cs.multiplicities.push_back(
                static_cast<int>(q.coefficient(inst.alpha, i, j - 1) - q.coefficient(inst.alpha, i, j)));
        }
        spec.points.push_back(std::move(cs));
    }
    return spec;
}

ProductObjective::ProductObjective(const NumericClassSpec& spec, double lambda) : d_(spec.d), lambda_(lambda) {
    spec.validate();
    for (const auto& p : spec.points) {
        VectorXcd diag(d_);
        Index k = 0;
        for (std::size_t j = 0; j < p.eigenvalues.size(); ++j)
            for (int r = 0; r < p.multiplicities[j]; ++r) diag(k++) = p.eigenvalues[j];
        diagonals_.push_back(diag);
    }
}

Index ProductObjective::parameter_count() const {
    return static_cast<Index>(diagonals_.size()) * 2 * d_ * d_;
}

std::vector<MatrixXcd> ProductObjective::conjugators(const VectorXd& theta) const {
    std::vector<MatrixXcd> g;
    const Index block = 2 * d_ * d_;
    for (std::size_t i = 0; i < diagonals_.size(); ++i) {
        MatrixXcd gi(d_, d_);
        for (Index a = 0; a < d_; ++a)
            for (Index b = 0; b < d_; ++b) {
                const Index base = static_cast<Index>(i) * block + 2 * (a * d_ + b);
                gi(a, b) = {theta(base), theta(base + 1)};
            }
        g.push_back(std::move(gi));
    }
    return g;
}

std::vector<MatrixXcd> ProductObjective::matrices(const VectorXd& theta) const {
    const auto g = conjugators(theta);
    std::vector<MatrixXcd> t;
    for (std::size_t i = 0; i < g.size(); ++i) t.push_back(g[i] * diagonals_[i].asDiagonal() * g[i].inverse());
    return t;
}

VectorXd ProductObjective::residuals(const VectorXd& theta) const {
    const auto t = matrices(theta);
    MatrixXcd p = MatrixXcd::Identity(d_, d_);
    for (const auto& ti : t) p = p * ti;
    p -= MatrixXcd::Identity(d_, d_);
    const Index dd = d_ * d_;
    VectorXd r(2 * dd + parameter_count());
    for (Index a = 0; a < d_; ++a)
        for (Index b = 0; b < d_; ++b) {
            r(2 * (a * d_ + b)) = p(a, b).real();
            r(2 * (a * d_ + b) + 1) = p(a, b).imag();
        }
    r.tail(parameter_count()) = std::sqrt(lambda_) * theta;
    return r;
}

MatrixXd ProductObjective::jacobian(const VectorXd& theta) const {
    const auto g = conjugators(theta);
    const auto t = matrices(theta);
    const std::size_t m = t.size();
    const Index dd = d_ * d_;
    // prefix[i] = T_1..T_i, suffix[i] = T_{i+1}..T_m
    std::vector<MatrixXcd> prefix(m + 1, MatrixXcd::Identity(d_, d_));
    std::vector<MatrixXcd> suffix(m + 1, MatrixXcd::Identity(d_, d_));
    for (std::size_t i = 0; i < m; ++i) prefix[i + 1] = prefix[i] * t[i];
    for (std::size_t i = m; i-- > 0;) suffix[i] = t[i] * suffix[i + 1];

    MatrixXd jac = MatrixXd::Zero(2 * dd + parameter_count(), parameter_count());
    const std::complex<double> unit(0.0, 1.0);
    for (std::size_t i = 0; i < m; ++i) {
        const MatrixXcd ginv = g[i].inverse();
        for (Index a = 0; a < d_; ++a) {
            for (Index b = 0; b < d_; ++b) {
                // dg = E_ab: X = E_ab g^{-1} has row a equal to row b of g^{-1}
                MatrixXcd x = MatrixXcd::Zero(d_, d_);
                x.row(a) = ginv.row(b);
                const MatrixXcd dt = x * t[i] - t[i] * x;
                const MatrixXcd dp = prefix[i] * dt * suffix[i + 1];
                const Index col = static_cast<Index>(i) * 2 * dd + 2 * (a * d_ + b);
                for (Index r = 0; r < d_; ++r)
                    for (Index c = 0; c < d_; ++c) {
                        const std::complex<double> re_dir = dp(r, c);
                        const std::complex<double> im_dir = unit * dp(r, c); // holomorphic in g
                        jac(2 * (r * d_ + c), col) = re_dir.real();
                        jac(2 * (r * d_ + c) + 1, col) = re_dir.imag();
                        jac(2 * (r * d_ + c), col + 1) = im_dir.real();
                        jac(2 * (r * d_ + c) + 1, col + 1) = im_dir.imag();
                    }
            }
        }
    }
    jac.bottomRows(parameter_count()).diagonal().setConstant(std::sqrt(lambda_));
    return jac;
}

double ProductObjective::value(const VectorXd& theta) const { return residuals(theta).squaredNorm(); }

VectorXd ProductObjective::gradient(const VectorXd& theta) const {
    return 2.0 * jacobian(theta).transpose() * residuals(theta);
}

namespace {

double product_residual(const std::vector<MatrixXcd>& t, int d) {
    MatrixXcd p = MatrixXcd::Identity(d, d);
    for (const auto& ti : t) p = p * ti;
    return (p - MatrixXcd::Identity(d, d)).norm();
}

// Scales every g_i to |det g_i| = 1; T_i does not change.
void normalize(VectorXd& theta, int d, std::size_t points) {
    const Index block = 2 * d * d;
    for (std::size_t i = 0; i < points; ++i) {
        MatrixXcd gi(d, d);
        for (Index a = 0; a < d; ++a)
            for (Index b = 0; b < d; ++b) {
                const Index base = static_cast<Index>(i) * block + 2 * (a * d + b);
                gi(a, b) = {theta(base), theta(base + 1)};
            }
        const double det = std::abs(gi.determinant());
        if (!(det > 0.0) || !std::isfinite(det)) continue;
        theta.segment(static_cast<Index>(i) * block, block) /= std::pow(det, 1.0 / d);
    }
}

double max_condition(const std::vector<MatrixXcd>& g) {
    double worst = 1.0;
    for (const auto& gi : g) {
        Eigen::JacobiSVD<MatrixXcd> svd(gi);
        const auto& s = svd.singularValues();
        const double c = s(s.size() - 1) > 0.0 ? s(0) / s(s.size() - 1) : INFINITY;
        worst = std::max(worst, c);
    }
    return worst;
}

std::optional<NumericSolution> run_restart(const NumericClassSpec& spec, const NumericOptions& opt,
                                           std::uint64_t stream) {
    ProductObjective objective(spec, opt.penalty);
    std::mt19937_64 rng(stream);
    std::normal_distribution<double> normal(0.0, 1.0);
    VectorXd theta(objective.parameter_count());
    for (Index k = 0; k < theta.size(); ++k) theta(k) = normal(rng);
    const std::size_t points = spec.points.size();
    normalize(theta, spec.d, points);

    double lambda = opt.penalty;
    double mu = 1e-3;
    double f = objective.value(theta);
    for (int iter = 0; iter < opt.max_iter; ++iter) {
        if (product_residual(objective.matrices(theta), spec.d) < opt.tol * 1e-2) break;
        const VectorXd r = objective.residuals(theta);
        const MatrixXd j = objective.jacobian(theta);
        const MatrixXd jtj = j.transpose() * j;
        const VectorXd jtr = j.transpose() * r;
        bool accepted = false;
        for (int attempt = 0; attempt < 12 && !accepted; ++attempt) {
            MatrixXd lhs = jtj;
            lhs.diagonal().array() += mu;
            const VectorXd step = lhs.ldlt().solve(-jtr);
            VectorXd trial = theta + step;
            normalize(trial, spec.d, points);
            const double ft = objective.value(trial);
            if (std::isfinite(ft) && ft < f) {
                theta = std::move(trial);
                mu = std::max(mu / 3.0, 1e-15);
                accepted = true;
            } else {
                mu *= 4.0;
            }
        }
        lambda = lambda * opt.penalty_decay < 1e-14 ? 0.0 : lambda * opt.penalty_decay;
        objective.set_lambda(lambda);
        f = objective.value(theta);
        if (!accepted && mu > 1e12) break;
        if (max_condition(objective.conjugators(theta)) > 1e10) return std::nullopt;
    }
    NumericSolution sol{objective.matrices(theta), 0.0};
    sol.residual = product_residual(sol.matrices, spec.d);
    if (!verify_solution(sol, spec, opt.tol, opt.eigen_tol)) return std::nullopt;
    return sol;
}

} // namespace

NumericResult solve_numeric(const NumericClassSpec& spec, const NumericOptions& options) {
    spec.validate();
    if (!(options.tol > 0.0)) throw std::invalid_argument("tolerance must be positive");
    for (int r = 0; r < options.restarts; ++r) {
        const std::uint64_t stream = options.seed * 0x9E3779B97F4A7C15ULL + static_cast<std::uint64_t>(r);
        if (auto sol = run_restart(spec, options, stream)) return {std::move(sol), r};
    }
    return {};
}

bool verify_solution(const NumericSolution& sol, const NumericClassSpec& spec, double tol, double eigen_tol) {
    if (sol.matrices.size() != spec.points.size()) return false;
    for (const auto& t : sol.matrices)
        if (t.rows() != spec.d || t.cols() != spec.d || !t.allFinite()) return false;
    if (!(product_residual(sol.matrices, spec.d) < tol)) return false;

    for (std::size_t i = 0; i < spec.points.size(); ++i) {
        const MatrixXcd& t = sol.matrices[i];
        const ClassSpec& cs = spec.points[i];
        // eigenvalue multiset, greedy nearest match
        Eigen::ComplexEigenSolver<MatrixXcd> es(t, false);
        std::vector<std::complex<double>> computed(es.eigenvalues().data(), es.eigenvalues().data() + spec.d);
        std::vector<bool> used(computed.size(), false);
        for (std::size_t j = 0; j < cs.eigenvalues.size(); ++j) {
            for (int r = 0; r < cs.multiplicities[j]; ++r) {
                std::size_t best = computed.size();
                double best_dist = INFINITY;
                for (std::size_t k = 0; k < computed.size(); ++k) {
                    if (used[k]) continue;
                    const double dist = std::abs(computed[k] - cs.eigenvalues[j]);
                    if (dist < best_dist) {
                        best_dist = dist;
                        best = k;
                    }
                }
                if (best == computed.size() || best_dist > eigen_tol) return false;
                used[best] = true;
            }
        }
        // closure: rank of the partial products never exceeds the class's rank data
        const double scale = std::max(1.0, t.norm());
        MatrixXcd partial = MatrixXcd::Identity(spec.d, spec.d);
        double partial_scale = 1.0;
        for (std::size_t j = 0; j < cs.eigenvalues.size(); ++j) {
            partial = partial * (t - cs.eigenvalues[j] * MatrixXcd::Identity(spec.d, spec.d));
            partial_scale *= scale + std::abs(cs.eigenvalues[j]);
            Eigen::JacobiSVD<MatrixXcd> svd(partial);
            int numerical_rank = 0;
            for (Index k = 0; k < svd.singularValues().size(); ++k)
                if (svd.singularValues()(k) > eigen_tol * partial_scale) ++numerical_rank;
            if (numerical_rank > cs.rank_bound(j + 1)) return false;
        }
    }
    return true;
}

} // namespace orbicat
