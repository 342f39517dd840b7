#include "orbicat/deligne_simpson.hpp"

#include <algorithm>
#include <optional>

namespace orbicat {

void check_shape(const StarQuiver& q, const ExponentSet& e) {
    if (e.e.points() != q.legs()) throw std::invalid_argument("exponent table and quiver disagree on point count");
    for (std::size_t i = 1; i <= q.legs(); ++i)
        if (static_cast<long>(e.e.slots(i)) != q.orders()[i - 1])
            throw std::invalid_argument("exponent row " + std::to_string(i) + " must have n_i entries");
}

void DSInstance::validate() const {
    check_shape(quiver, e);
    if (alpha.size() != quiver.vertex_count()) throw std::invalid_argument("alpha does not match the quiver");
    if (alpha.center() < 1) throw std::invalid_argument("alpha_0 = d must be at least 1");
    for (std::size_t i = 1; i <= quiver.legs(); ++i) {
        for (long j = 1; j < quiver.orders()[i - 1]; ++j) {
            const auto prev = quiver.coefficient(alpha, i, static_cast<std::size_t>(j - 1));
            const auto cur = quiver.coefficient(alpha, i, static_cast<std::size_t>(j));
            if (cur < 0 || cur > prev)
                throw std::invalid_argument("alpha must be nonincreasing and nonnegative along each leg");
        }
    }
}

CycNum xi_exponent(const StarQuiver& q, const ExponentSet& e, const RootVector& alpha) {
    check_shape(q, e);
    if (alpha.size() != q.vertex_count()) throw std::invalid_argument("alpha does not match the quiver");
    CycNum sum(0);
    for (std::size_t i = 1; i <= q.legs(); ++i) {
        const auto n = static_cast<std::size_t>(q.orders()[i - 1]);
        for (std::size_t j = 1; j <= n; ++j) {
            const auto k = q.coefficient(alpha, i, j - 1) - q.coefficient(alpha, i, j);
            if (k != 0) sum += CycNum(static_cast<long>(k)) * e.e(i, j);
        }
    }
    return sum;
}

namespace {

// Smallest k >= k_min with k * step + base in Z, if any.
std::optional<std::int64_t> solve_integral_shift(const CycNum& step, const CycNum& base, std::int64_t k_min) {
    const long n = lcm(step.order(), base.order());
    const CycNum s = step.promoted(n);
    const CycNum b = base.promoted(n);
    const auto sc = s.coeffs();
    const auto bc = b.coeffs();
    if (!s.is_rational()) {
        // the irrational coordinates pin k down
        std::size_t c = 1;
        while (sc[c].is_zero()) ++c;
        const Rat k = -bc[c] / sc[c];
        if (!k.is_integer() || k < Rat(k_min)) return std::nullopt;
        const auto kk = to_int64(k.numerator());
        if (!is_rational_integer(CycNum(kk) * s + b)) return std::nullopt;
        return kk;
    }
    if (!b.is_rational()) return std::nullopt;
    // k p/q + r in Z
    const Rat& ratio = s.constant();
    const Integer p = ratio.numerator();
    const Integer qd = ratio.denominator();
    const Rat scaled = b.constant() * Rat(qd);
    if (!scaled.is_integer()) return std::nullopt;
    if (qd == 1) return k_min;
    Integer inv;
    Integer pm = p % qd;
    if (pm < 0) pm += qd;
    mpz_invert(inv.get_mpz_t(), pm.get_mpz_t(), qd.get_mpz_t());
    Integer k0 = (-scaled.numerator() * inv) % qd;
    if (k0 < 0) k0 += qd;
    std::int64_t k = to_int64(k0);
    const std::int64_t period = to_int64(qd);
    if (k < k_min) k += ((k_min - k + period - 1) / period) * period;
    return k;
}

void keep_least(std::optional<StrictRootWitness>& best, RootVector root, CycNum exponent) {
    if (!best || RootOrder{}(root, best->root)) best = StrictRootWitness{std::move(root), std::move(exponent)};
}

} // namespace

Decision<StrictRootWitness> strict_root_search(const StarQuiver& q, const ExponentSet& e, std::int64_t height_bound) {
    check_shape(q, e);
    const QuiverType type = classify(q);
    if (type == QuiverType::Affine) {
        const RootVector d = delta(q);
        const CycNum ed = xi_exponent(q, e, d);
        // the imaginary ray answers first whenever E(delta) is rational
        if (auto k = solve_integral_shift(ed, CycNum(0), 1)) return StrictRootWitness{*k * d, CycNum(*k) * ed};
        std::optional<StrictRootWitness> best;
        // every positive real root is beta + k delta with beta a positive real root below height(delta)
        for (const auto& r : positive_roots_up_to(q, d.height() - 1)) {
            if (r.kind != RootKind::Real) continue;
            const CycNum eb = xi_exponent(q, e, r.vector);
            const auto k = solve_integral_shift(ed, eb, r.vector.center() > 0 ? 0 : 1);
            if (!k) continue;
            keep_least(best, r.vector + *k * d, eb + CycNum(*k) * ed);
        }
        if (best) return *best;
        return No{};
    }
    const auto roots = type == QuiverType::Finite ? finite_positive_roots(q) : positive_roots_up_to(q, height_bound);
    for (const auto& r : roots) {
        if (r.vector.center() <= 0) continue;
        CycNum ex = xi_exponent(q, e, r.vector);
        if (is_rational_integer(ex)) return StrictRootWitness{r.vector, std::move(ex)};
    }
    if (type == QuiverType::Finite) return No{};
    return UnknownUpTo{height_bound};
}

Decision<DSCertificate> cb_solvable(const DSInstance& inst, const CBOptions& options) {
    inst.validate();
    const auto& q = inst.quiver;
    const auto& alpha = inst.alpha;
    const std::size_t nv = q.vertex_count();

    std::uint64_t volume = 1;
    std::vector<std::uint64_t> stride(nv);
    for (std::size_t v = 0; v < nv; ++v) {
        stride[v] = volume;
        volume *= static_cast<std::uint64_t>(alpha[v] + 1);
        if (volume > options.box_volume_cap) return UnknownUpTo{static_cast<long>(options.box_volume_cap)};
    }

    std::vector<RootVector> usable;
    for (auto& r : positive_roots_in_box(q, alpha))
        if (is_rational_integer(xi_exponent(q, inst.e, r.vector))) usable.push_back(std::move(r.vector));
    std::reverse(usable.begin(), usable.end()); // largest first

    std::vector<std::uint64_t> offset;
    for (const auto& b : usable) {
        std::uint64_t o = 0;
        for (std::size_t v = 0; v < nv; ++v) o += static_cast<std::uint64_t>(b[v]) * stride[v];
        offset.push_back(o);
    }

    std::vector<char> reachable(volume, 0);
    reachable[0] = 1;
    RootVector cur(nv);
    for (std::uint64_t idx = 1; idx < volume; ++idx) {
        // advance the mixed-radix counter
        for (std::size_t v = 0; v < nv; ++v) {
            if (cur[v] < alpha[v]) {
                ++cur[v];
                break;
            }
            cur[v] = 0;
        }
        for (std::size_t r = 0; r < usable.size(); ++r) {
            if (!usable[r].dominated_by(cur) || !reachable[idx - offset[r]]) continue;
            reachable[idx] = 1;
            break;
        }
    }
    std::uint64_t top = volume - 1;
    if (!reachable[top]) return No{};

    DSCertificate cert;
    RootVector rest = alpha;
    while (!rest.is_zero()) {
        for (std::size_t r = 0; r < usable.size(); ++r) {
            if (!usable[r].dominated_by(rest) || !reachable[top - offset[r]]) continue;
            cert.parts.push_back(usable[r]);
            rest -= usable[r];
            top -= offset[r];
            break;
        }
    }
    return cert;
}

bool replay_strict_root(const StarQuiver& q, const ExponentSet& e, const StrictRootWitness& w) {
    if (w.root.size() != q.vertex_count() || w.root.center() <= 0 || !w.root.is_positive()) return false;
    if (is_root(q, w.root) == RootTest::NotRoot) return false;
    const CycNum ex = xi_exponent(q, e, w.root);
    return ex == w.exponent && is_rational_integer(ex);
}

bool replay_cb(const DSInstance& inst, const DSCertificate& cert) {
    RootVector sum(inst.quiver.vertex_count());
    for (const auto& part : cert.parts) {
        if (part.size() != sum.size() || !part.is_positive()) return false;
        if (is_root(inst.quiver, part) == RootTest::NotRoot) return false;
        if (!is_rational_integer(xi_exponent(inst.quiver, inst.e, part))) return false;
        sum += part;
    }
    return !cert.parts.empty() && sum == inst.alpha;
}

} // namespace orbicat
