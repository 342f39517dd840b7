#include "orbicat/gdaha.hpp"

namespace orbicat {

namespace {

void require_affine(const StarQuiver& q) {
    if (classify(q) != QuiverType::Affine) throw NotAffine("rank-n parameters need an affine quiver");
}

} // namespace

WreathParams WreathParams::zero(const StarQuiver& q) {
    WreathParams w;
    for (std::size_t i = 1; i <= q.legs(); ++i) w.mu.emplace_back(static_cast<std::size_t>(q.leg_length(i)), Rat(0));
    w.xi.assign(q.legs(), Rat(0));
    return w;
}

void WreathParams::validate(const StarQuiver& q) const {
    if (rank < 1) throw std::invalid_argument("rank must be at least 1");
    if (mu.size() != q.legs() || xi.size() != q.legs()) throw std::invalid_argument("mu/xi do not match the legs");
    for (std::size_t i = 1; i <= q.legs(); ++i)
        if (static_cast<long>(mu[i - 1].size()) != q.leg_length(i))
            throw std::invalid_argument("mu row " + std::to_string(i) + " must have n_i - 1 entries");
    Rat sum;
    for (const auto& x : xi) sum += x;
    if (!sum.is_zero()) throw std::invalid_argument("xi offsets must sum to zero");
}

ExponentSet gdaha_tau_from_mu_nu(const StarQuiver& q, const WreathParams& w) {
    require_affine(q);
    w.validate(q);
    const long m = static_cast<long>(q.legs());
    ExponentSet out{PointTable(q.orders()), CycNum(Rat(1, 2) - w.nu)};
    for (std::size_t i = 1; i <= q.legs(); ++i) {
        Rat gamma = w.mu0 / Rat(m) + w.xi[i - 1];
        for (long j = 1; j <= q.orders()[i - 1]; ++j) {
            if (j > 1) gamma += w.mu[i - 1][static_cast<std::size_t>(j - 2)];
            out.e(i, static_cast<std::size_t>(j)) = CycNum(gamma);
        }
    }
    return out;
}

std::vector<Rat> vertex_mu(const StarQuiver& q, const WreathParams& w) {
    w.validate(q);
    std::vector<Rat> out(q.vertex_count());
    out[0] = w.mu0;
    for (std::size_t i = 1; i <= q.legs(); ++i)
        for (std::size_t p = 1; p <= w.mu[i - 1].size(); ++p) out[q.vertex(i, p)] = w.mu[i - 1][p - 1];
    return out;
}

std::vector<RootVector> a_real_roots(const StarQuiver& q, const std::vector<Rat>& mu_full, std::int64_t height_bound) {
    require_affine(q);
    if (mu_full.size() != q.vertex_count()) throw std::invalid_argument("mu must give one value per vertex");
    std::vector<RootVector> out;
    for (auto& r : positive_roots_up_to(q, height_bound)) {
        if (r.kind != RootKind::Real) continue;
        Rat s;
        for (std::size_t v = 0; v < q.vertex_count(); ++v)
            if (r.vector[v] != 0) s += Rat(static_cast<long>(r.vector[v])) * mu_full[v];
        if (s.is_integer()) out.push_back(std::move(r.vector));
    }
    return out;
}

} // namespace orbicat
