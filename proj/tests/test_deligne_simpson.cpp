#include "orbicat/category_o.hpp"
#include "orbicat/deligne_simpson.hpp"

#include "oracles.hpp"

#include <doctest.h>

#include <random>

using namespace orbicat;

namespace {

ExponentSet exps(const StarQuiver& q, const std::vector<std::vector<Rat>>& rows) {
    ExponentSet e{PointTable(q.orders()), std::nullopt};
    for (std::size_t i = 1; i <= rows.size(); ++i)
        for (std::size_t j = 1; j <= rows[i - 1].size(); ++j) e.e(i, j) = rows[i - 1][j - 1];
    return e;
}

ExponentSet untwisted(const StarQuiver& q) {
    return ExponentSet::untwisted(OrbifoldCurve{0, true, 0, q.orders()});
}

RootVector rv(std::vector<std::int64_t> v) { return RootVector(std::move(v)); }

} // namespace

TEST_CASE("xi exponent") {
    const auto d4 = StarQuiver::build({2, 2, 2, 2});
    const auto e = untwisted(d4);
    CHECK(xi_exponent(d4, e, RootVector(5)).is_zero());
    CHECK(xi_exponent(d4, e, delta(d4)) == CycNum(6));
    const auto e6 = StarQuiver::build({3, 3, 3});
    std::mt19937_64 rng(2);
    ExponentSet r{PointTable(e6.orders()), std::nullopt};
    for (std::size_t i = 1; i <= 3; ++i)
        for (std::size_t j = 1; j <= 3; ++j) r.e(i, j) = Rat(static_cast<long>(rng() % 11) - 5, 1 + static_cast<long>(rng() % 5));
    for (std::size_t i = 1; i <= 3; ++i)
        for (std::size_t j = 1; j <= 2; ++j)
            CHECK(xi_exponent(e6, r, e6.simple_root(e6.vertex(i, j))) == r.e(i, j + 1) - r.e(i, j));
    for (int t = 0; t < 50; ++t) {
        RootVector a(7), b(7);
        for (std::size_t v = 0; v < 7; ++v) {
            a[v] = static_cast<std::int64_t>(rng() % 9) - 4;
            b[v] = static_cast<std::int64_t>(rng() % 9) - 4;
        }
        CHECK(xi_exponent(e6, r, a + b) == xi_exponent(e6, r, a) + xi_exponent(e6, r, b));
    }
}

TEST_CASE("strict roots: D4 with tau = 0 gives delta") {
    const auto d4 = StarQuiver::build({2, 2, 2, 2});
    const auto d = strict_root_search(d4, untwisted(d4), 60);
    REQUIRE(d.is_yes());
    CHECK(d.certificate().root == delta(d4));
    CHECK(d.certificate().exponent == CycNum(6));
    CHECK(replay_strict_root(d4, untwisted(d4), d.certificate()));
}

TEST_CASE("strict roots: rational E_q on affine types gives k delta") {
    std::mt19937_64 rng(9);
    for (const auto& o : std::vector<std::vector<long>>{{2, 2, 2, 2}, {3, 3, 3}, {2, 4, 4}, {2, 3, 6}}) {
        const auto q = StarQuiver::build(o);
        const OrbifoldCurve curve{0, true, 0, o};
        for (int t = 0; t < 10; ++t) {
            ExponentSet e{PointTable(o), std::nullopt};
            for (std::size_t i = 1; i <= o.size(); ++i)
                for (std::size_t j = 1; j <= static_cast<std::size_t>(o[i - 1]); ++j)
                    e.e(i, j) = CycNum(Rat(static_cast<long>(rng() % 13) - 6, 1 + static_cast<long>(rng() % 9)));
            REQUIRE(q_exponent(curve, e).is_rational());
            const auto d = strict_root_search(q, e, 60);
            REQUIRE(d.is_yes());
            const auto& w = d.certificate();
            const auto dl = delta(q);
            const std::int64_t k = w.root.center() / dl.center();
            CHECK(w.root == k * dl);
            CHECK(k >= 1);
            // k is the least multiple that works
            for (std::int64_t kk = 1; kk < k; ++kk) CHECK_FALSE(is_rational_integer(xi_exponent(q, e, kk * dl)));
            CHECK(replay_strict_root(q, e, w));
        }
    }
}

TEST_CASE("strict roots: affine with irrational E(delta)") {
    const auto d4 = StarQuiver::build({2, 2, 2, 2});
    const CycNum z = CycNum::root_of_unity(5, 1);
    // e_11 irrational, everything else zero: only roots avoiding a jump on leg 1 work
    ExponentSet e = exps(d4, {{Rat(0), Rat(0)}, {Rat(0), Rat(0)}, {Rat(0), Rat(0)}, {Rat(0), Rat(0)}});
    e.e(1, 1) = z;
    const auto d = strict_root_search(d4, e, 60);
    REQUIRE(d.is_yes());
    CHECK(d.certificate().root == rv({1, 1, 0, 0, 0}));
    CHECK(replay_strict_root(d4, e, d.certificate()));

    // an irrational contribution on every leg jump makes every strict root fail
    ExponentSet f = exps(d4, {{Rat(0), Rat(0)}, {Rat(0), Rat(0)}, {Rat(0), Rat(0)}, {Rat(0), Rat(0)}});
    f.e(1, 1) = z;
    f.e(1, 2) = z * z;
    const auto g = strict_root_search(d4, f, 60);
    // alpha_0 (z) + alpha_11 (z^2 - z) is integral only when both coefficients vanish
    CHECK(g.is_no());
}

TEST_CASE("strict roots: brute force over a height window") {
    std::mt19937_64 rng(31);
    for (const auto& o : std::vector<std::vector<long>>{{2, 2, 2}, {2, 3, 4}, {2, 2, 2, 2}, {3, 3, 3}}) {
        const auto q = StarQuiver::build(o);
        const auto type = classify(q);
        for (int t = 0; t < 15; ++t) {
            ExponentSet e{PointTable(o), std::nullopt};
            for (std::size_t i = 1; i <= o.size(); ++i)
                for (std::size_t j = 1; j <= static_cast<std::size_t>(o[i - 1]); ++j) {
                    e.e(i, j) = CycNum(Rat(static_cast<long>(rng() % 7) - 3, 1 + static_cast<long>(rng() % 6)));
                    if (rng() % 2) e.e(i, j) += CycNum(static_cast<long>(rng() % 3) - 1) * CycNum::root_of_unity(7, 1);
                }
            const auto d = strict_root_search(q, e, 40);
            CHECK_FALSE(d.is_unknown());
            bool any = false;
            const std::int64_t window = type == QuiverType::Finite ? 100 : 40;
            for (const auto& r : positive_roots_up_to(q, window))
                if (r.vector.center() > 0 && is_rational_integer(xi_exponent(q, e, r.vector))) any = true;
            if (any) CHECK(d.is_yes());
            if (d.is_yes()) CHECK(replay_strict_root(q, e, d.certificate()));
            if (type == QuiverType::Finite) CHECK(d.is_yes() == any);
        }
    }
}

TEST_CASE("strict roots: finite with generic exponents is No") {
    const auto q = StarQuiver::build({2, 3, 4});
    ExponentSet e{PointTable(q.orders()), std::nullopt};
    long p = 101;
    for (std::size_t i = 1; i <= 3; ++i)
        for (std::size_t j = 1; j <= static_cast<std::size_t>(q.orders()[i - 1]); ++j) {
            e.e(i, j) = CycNum(Rat(1, p)) + CycNum(Rat(static_cast<long>(i * j), 1)) * CycNum::root_of_unity(5, 1);
            p += 2;
        }
    CHECK(strict_root_search(q, e, 60).is_no());
}

TEST_CASE("strict roots: indefinite answers Unknown when nothing is found") {
    const auto q = StarQuiver::build({2, 3, 7});
    ExponentSet e{PointTable(q.orders()), std::nullopt};
    for (std::size_t i = 1; i <= 3; ++i)
        for (std::size_t j = 1; j <= static_cast<std::size_t>(q.orders()[i - 1]); ++j)
            e.e(i, j) = CycNum(static_cast<long>(j * j + i)) * CycNum::root_of_unity(11, 1);
    const auto d = strict_root_search(q, e, 12);
    REQUIRE(d.is_unknown());
    CHECK(d.bound() == 12);
}

TEST_CASE("CB examples") {
    const auto d4 = StarQuiver::build({2, 2, 2, 2});
    // alpha = delta with tau = 0
    {
        DSInstance inst{d4, untwisted(d4), delta(d4)};
        const auto d = cb_solvable(inst);
        REQUIRE(d.is_yes());
        CHECK(d.certificate().parts == std::vector<RootVector>{delta(d4)});
        CHECK(replay_cb(inst, d.certificate()));
    }
    // alpha = 2 s_0 with E(s_0) = 0
    {
        const auto zero = exps(d4, {{Rat(0), Rat(0)}, {Rat(0), Rat(0)}, {Rat(0), Rat(0)}, {Rat(0), Rat(0)}});
        DSInstance inst{d4, zero, rv({2, 0, 0, 0, 0})};
        const auto d = cb_solvable(inst);
        REQUIRE(d.is_yes());
        CHECK(d.certificate().parts == std::vector<RootVector>{rv({1, 0, 0, 0, 0}), rv({1, 0, 0, 0, 0})});
    }
    // 2 beta with beta = [1;1|1|0|0] splits as beta + beta
    {
        const CycNum z = CycNum::root_of_unity(5, 1);
        ExponentSet e = exps(d4, {{Rat(0), Rat(0)}, {Rat(0), Rat(0)}, {Rat(0), Rat(0)}, {Rat(0), Rat(0)}});
        e.e(1, 1) = z;
        e.e(2, 1) = -z;
        e.e(3, 1) = z;
        e.e(4, 1) = -z;
        DSInstance inst{d4, e, rv({2, 2, 2, 0, 0})};
        const auto d = cb_solvable(inst);
        REQUIRE(d.is_yes());
        CHECK(d.certificate().parts == std::vector<RootVector>{rv({1, 1, 1, 0, 0}), rv({1, 1, 1, 0, 0})});
        CHECK(replay_cb(inst, d.certificate()));
    }
    // nothing integral at all
    {
        const CycNum z = CycNum::root_of_unity(7, 1);
        ExponentSet e = exps(d4, {{Rat(0), Rat(0)}, {Rat(0), Rat(0)}, {Rat(0), Rat(0)}, {Rat(0), Rat(0)}});
        for (std::size_t i = 1; i <= 4; ++i) {
            e.e(i, 1) = CycNum(static_cast<long>(i)) * z;
            e.e(i, 2) = CycNum(static_cast<long>(10 * i)) * z * z;
        }
        DSInstance inst{d4, e, rv({1, 1, 0, 0, 0})};
        CHECK(cb_solvable(inst).is_no());
    }
}

TEST_CASE("CB against exhaustive decomposition on random instances") {
    std::mt19937_64 rng(77);
    for (const auto& o : std::vector<std::vector<long>>{{2, 2, 2, 2}, {3, 3, 3}, {2, 3, 4}}) {
        const auto q = StarQuiver::build(o);
        const oracle::Star star(o);
        for (int t = 0; t < 20; ++t) {
            ExponentSet e{PointTable(o), std::nullopt};
            for (std::size_t i = 1; i <= o.size(); ++i)
                for (std::size_t j = 1; j <= static_cast<std::size_t>(o[i - 1]); ++j)
                    e.e(i, j) = CycNum(Rat(static_cast<long>(rng() % 4), 4));
            RootVector alpha(q.vertex_count());
            alpha[0] = 1 + static_cast<std::int64_t>(rng() % 3);
            for (std::size_t i = 1; i <= o.size(); ++i) {
                std::int64_t prev = alpha[0];
                for (std::size_t j = 1; j < static_cast<std::size_t>(o[i - 1]); ++j) {
                    prev = static_cast<std::int64_t>(rng() % (prev + 1));
                    alpha[q.vertex(i, j)] = prev;
                }
            }
            DSInstance inst{q, e, alpha};
            // oracle parts: positive vectors under alpha, q <= 1 for affine, q = 1 for finite, integral exponent
            std::vector<std::vector<std::int64_t>> parts;
            const bool affine = classify(q) == QuiverType::Affine;
            for (const auto& v : oracle::tits_box(star, alpha[0], affine ? std::set<long>{0, 1} : std::set<long>{1}))
                if (RootVector(v).dominated_by(alpha) && is_rational_integer(xi_exponent(q, e, RootVector(v))))
                    parts.push_back(v);
            oracle::Decomposer dec(parts);
            const auto got = cb_solvable(inst);
            CHECK_FALSE(got.is_unknown());
            CHECK(got.is_yes() == dec.splits(alpha.coeffs()));
            if (got.is_yes()) CHECK(replay_cb(inst, got.certificate()));
        }
    }
}

TEST_CASE("CB box cap") {
    const auto d4 = StarQuiver::build({2, 2, 2, 2});
    DSInstance inst{d4, untwisted(d4), 3 * delta(d4)};
    const auto d = cb_solvable(inst, CBOptions{100});
    REQUIRE(d.is_unknown());
    CHECK(d.bound() == 100);
}

TEST_CASE("instance validation and replay rejection") {
    const auto d4 = StarQuiver::build({2, 2, 2, 2});
    CHECK_THROWS(DSInstance{d4, untwisted(d4), rv({0, 0, 0, 0, 0})}.validate());
    CHECK_THROWS(DSInstance{d4, untwisted(d4), rv({1, 2, 0, 0, 0})}.validate());
    DSInstance inst{d4, untwisted(d4), delta(d4)};
    CHECK_FALSE(replay_cb(inst, DSCertificate{{rv({1, 1, 1, 1, 1})}}));
    CHECK_FALSE(replay_cb(inst, DSCertificate{{rv({1, 1, 0, 0, 0}), rv({1, 0, 1, 1, 1})}}));
    CHECK_FALSE(replay_strict_root(d4, untwisted(d4), StrictRootWitness{rv({0, 1, 0, 0, 0}), CycNum(0)}));
}

TEST_CASE("category O: genus >= 1 and noncompact") {
    const OrbifoldCurve torus{1, true, 0, {2}};
    CParams p = CParams::zero(torus);
    // c = 0, eta = 0 gives e = (1/2, 1)
    const auto d = category_O_nonzero(torus, p);
    REQUIRE(d.is_yes());
    CHECK(criterion(d.certificate()) == "determinant");
    CHECK(describe(d.certificate(), torus) == "det d=2 m=(2,0) E=1");
    CHECK(replay_certificate(torus, p, d.certificate()));

    p.c(1, 1) = Rat(1, 2);
    const auto ps = category_O_nonzero(torus, p);
    REQUIRE(ps.is_yes());
    CHECK(criterion(ps.certificate()) == "point-support");
    CHECK(replay_certificate(torus, p, ps.certificate()));

    const OrbifoldCurve punct{2, false, 3, {3, 5}};
    CParams q = CParams::zero(punct);
    q.c(1, 1) = CycNum::root_of_unity(7, 3);
    const auto n = decide_category_O(punct, q);
    REQUIRE(n.is_yes());
    CHECK(criterion(n.certificate()) == "noncompact");
    CHECK(replay_certificate(punct, q, n.certificate()));
}

TEST_CASE("category O: genus 0") {
    const OrbifoldCurve d4{0, true, 0, {2, 2, 2, 2}};
    CParams p = CParams::zero(d4);
    const auto d = decide_category_O(d4, p);
    REQUIRE(d.is_yes());
    CHECK(criterion(d.certificate()) == "strict-root");
    CHECK(describe(d.certificate(), d4) == "strict-root alpha=[2;1|1|1|1] E=6");
    CHECK(replay_certificate(d4, p, d.certificate()));

    p.c(1, 1) = Rat(1, 2);
    const auto ps = category_O_nonzero_genus0(d4, p);
    REQUIRE(ps.is_yes());
    CHECK(criterion(ps.certificate()) == "point-support");

    const OrbifoldCurve fin{0, true, 0, {2, 3, 4}};
    CParams g = CParams::zero(fin);
    long den = 101;
    for (std::size_t i = 1; i <= 3; ++i) {
        for (std::size_t j = 1; j < static_cast<std::size_t>(fin.orders[i - 1]); ++j) {
            g.c(i, j) = CycNum(Rat(1, den)) + CycNum::root_of_unity(5, 1);
            den += 2;
        }
        g.eta[i - 1] = CycNum(Rat(1, den));
        den += 2;
    }
    CHECK(category_O_nonzero_genus0(fin, g).is_no());
}

TEST_CASE("category O routing") {
    const OrbifoldCurve torus{1, true, 0, {2}};
    const OrbifoldCurve sphere{0, true, 0, {2, 2, 2, 2}};
    CHECK_THROWS_AS(category_O_nonzero_genus0(torus, CParams::zero(torus)), RoutingError);
    CHECK_THROWS_AS(category_O_nonzero(sphere, CParams::zero(sphere)), RoutingError);
    const OrbifoldCurve empty{0, true, 0, {}};
    CHECK_THROWS_AS(category_O_nonzero_genus0(empty, CParams::zero(empty)), RoutingError);
}
