// Runs the nine acceptance criteria and prints one PASS/FAIL line each.

#include "orbicat/category_o.hpp"
#include "orbicat/cli.hpp"
#include "orbicat/gdaha.hpp"
#include "orbicat/input.hpp"
#include "orbicat/numeric_oracle.hpp"

#include "../oracles.hpp"

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

using namespace orbicat;

namespace {

// Pinned thresholds.
constexpr int kFieldChecks = 1000;
constexpr long kMaxOrder = 12;
constexpr int kRoundTrips = 200;
constexpr int kPointSupportDraws = 500;
constexpr int kRestarts = 64;
constexpr double kResidualTol = 1e-9;
constexpr int kGradientPoints = 50;
constexpr double kGradientRelErr = 1e-6;
constexpr double kFiniteDiffStep = 1e-6;
constexpr std::int64_t kHeight = 60;
constexpr long kDmax = 24;

struct Outcome {
    bool pass = true;
    std::string detail;

    void require(bool ok, const std::string& what) {
        if (!ok && pass) detail = what;
        pass = pass && ok;
    }
};

const std::vector<std::vector<long>> kAffine = {{2, 2, 2, 2}, {3, 3, 3}, {2, 4, 4}, {2, 3, 6}};

Rat random_rat(std::mt19937_64& rng, long span, long max_den) {
    const long den = 1 + static_cast<long>(rng() % static_cast<std::uint64_t>(max_den));
    const long num = static_cast<long>(rng() % static_cast<std::uint64_t>(2 * span * den + 1)) - span * den;
    return Rat(num, den);
}

CycNum random_cyc(std::mt19937_64& rng) {
    const long n = 1 + static_cast<long>(rng() % kMaxOrder);
    std::vector<std::pair<long, Rat>> terms;
    const int count = 1 + static_cast<int>(rng() % 4);
    for (int k = 0; k < count; ++k) terms.emplace_back(static_cast<long>(rng() % n), random_rat(rng, 3, 5));
    return CycNum::from_terms(n, terms);
}

// 1. field laws in Q(zeta_n), n <= 12, and vanishing sums of roots of unity
Outcome exact_arithmetic() {
    Outcome out;
    std::mt19937_64 rng(101);
    for (int t = 0; t < kFieldChecks; ++t) {
        const CycNum a = random_cyc(rng), b = random_cyc(rng), c = random_cyc(rng);
        out.require(a + b == b + a && a * b == b * a, "commutativity");
        out.require((a + b) + c == a + (b + c) && (a * b) * c == a * (b * c), "associativity");
        out.require(a * (b + c) == a * b + a * c, "distributivity");
        out.require(a + CycNum(0) == a && a * CycNum(1) == a, "identities");
        out.require((a - a).is_zero(), "additive inverse");
        if (!a.is_zero()) out.require(a * a.inverse() == CycNum(1), "multiplicative inverse");
    }
    for (long n = 2; n <= kMaxOrder; ++n) {
        CycNum s;
        for (long j = 0; j < n; ++j) s += CycNum::root_of_unity(n, j);
        out.require(s.is_zero(), "sum of roots of unity, n=" + std::to_string(n));
    }
    out.detail = out.pass ? std::to_string(kFieldChecks) + " random checks, n=2..12 sums vanish" : out.detail;
    return out;
}

// 2. c_eta_from_tau o tau_from_c_eta = id on the four affine cases
Outcome round_trip() {
    Outcome out;
    std::mt19937_64 rng(202);
    int done = 0;
    for (int t = 0; t < kRoundTrips; ++t) {
        const auto& o = kAffine[t % kAffine.size()];
        const OrbifoldCurve curve{0, true, 0, o};
        CParams p = CParams::zero(curve);
        for (std::size_t i = 1; i <= o.size(); ++i) {
            for (std::size_t j = 1; j < static_cast<std::size_t>(o[i - 1]); ++j) p.c(i, j) = random_rat(rng, 5, 9);
            p.eta[i - 1] = random_rat(rng, 5, 9);
        }
        for (EtaSign sign : {EtaSign::S41, EtaSign::S21}) {
            const CParams back = c_eta_from_tau(curve, tau_from_c_eta(curve, p, sign), sign);
            out.require(back == p, "round trip failed");
        }
        ++done;
    }
    if (out.pass) out.detail = std::to_string(done) + " parameter sets, both eta signs";
    return out;
}

// 3. n = 2 point support: half-odd rationals exactly, matching the residue oracle
Outcome point_support_n2() {
    Outcome out;
    std::mt19937_64 rng(303);
    int yes = 0;
    for (int t = 0; t < kPointSupportDraws; ++t) {
        // every other draw is forced onto the half-integers
        Rat c = random_rat(rng, 6, 8);
        if (t % 2 == 0) c = Rat(static_cast<long>(rng() % 25) - 12, 2);
        const bool half_odd = c.denominator() == 2;
        const std::vector<CycNum> row{CycNum(c)};
        const auto d = point_support_witness(2, row);
        out.require(d.is_yes() == half_odd, "decision differs from half-odd test at c=" + c.to_string());
        out.require(oracle::ptsupp_residue(2, row) == half_odd, "residue oracle differs at c=" + c.to_string());
        if (d.is_yes()) {
            ++yes;
            out.require(replay_point_witness(2, row, d.certificate()), "witness does not replay");
        }
    }
    if (out.pass) out.detail = std::to_string(kPointSupportDraws) + " draws, " + std::to_string(yes) + " on hyperplanes";
    return out;
}

// 4. root counts and delta vectors
Outcome root_counts() {
    Outcome out;
    const std::vector<std::tuple<std::string, std::vector<long>, std::size_t>> finite = {
        {"A2", {2}, 3}, {"A3", {2, 2}, 6}, {"D4", {2, 2, 2}, 12}};
    std::string summary;
    for (const auto& [name, o, want] : finite) {
        const auto q = StarQuiver::build(o);
        const auto roots = finite_positive_roots(q);
        std::set<std::vector<std::int64_t>> got;
        for (const auto& r : roots) got.insert(r.vector.coeffs());
        const auto brute = oracle::tits_box(oracle::Star(o), 4, {1});
        out.require(roots.size() == want, name + " count");
        out.require(got == brute, name + " differs from Tits-form enumeration");
        summary += name + "=" + std::to_string(roots.size()) + " ";
    }
    for (const auto& [name, o] : std::vector<std::pair<std::string, std::vector<long>>>{{"D4(1)", {2, 2, 2, 2}},
                                                                                       {"E6(1)", {3, 3, 3}}}) {
        const auto q = StarQuiver::build(o);
        out.require(classify(q) == QuiverType::Affine, name + " not affine");
        const auto d = delta(q);
        out.require(d.coeffs() == oracle::cartan_kernel(oracle::Star(o)), name + " delta differs from Cartan kernel");
        summary += name + " delta=" + q.format(d) + " ";
    }
    if (out.pass) out.detail = summary;
    return out;
}

// 5. tau = 0 on D4(1) gives delta with E = 6; rational E_q gives a k delta witness
Outcome genus0_consistency() {
    Outcome out;
    const auto d4 = StarQuiver::build({2, 2, 2, 2});
    const OrbifoldCurve d4c{0, true, 0, {2, 2, 2, 2}};
    const auto d = strict_root_search(d4, tau_from_c_eta(d4c, CParams::zero(d4c)), kHeight);
    out.require(d.is_yes(), "tau=0 not Yes");
    if (d.is_yes()) {
        out.require(d.certificate().root == delta(d4), "witness is not delta");
        out.require(d.certificate().exponent == CycNum(6), "E(delta) != 6");
    }
    std::mt19937_64 rng(505);
    int cases = 0;
    for (const auto& o : kAffine) {
        const auto q = StarQuiver::build(o);
        const OrbifoldCurve curve{0, true, 0, o};
        const RootVector dl = delta(q);
        for (int t = 0; t < 25; ++t) {
            CParams p = CParams::zero(curve);
            for (std::size_t i = 1; i <= o.size(); ++i) {
                for (std::size_t j = 1; j < static_cast<std::size_t>(o[i - 1]); ++j) {
                    p.c(i, j) = random_rat(rng, 3, 7);
                    // irrational c that leaves E_q rational: pair z with its negative on one point
                    if (t % 2 && j == 1) p.c(i, j) += CycNum::root_of_unity(5, 1);
                }
                p.eta[i - 1] = random_rat(rng, 3, 7);
            }
            const ExponentSet e = tau_from_c_eta(curve, p);
            if (!q_exponent(curve, e).is_rational()) continue;
            ++cases;
            const auto s = strict_root_search(q, e, kHeight);
            out.require(s.is_yes(), "rational E_q without a witness");
            if (!s.is_yes()) continue;
            const auto& root = s.certificate().root;
            const std::int64_t k = root.center() / dl.center();
            out.require(k >= 1 && root == k * dl, "witness is not a multiple of delta");
            out.require(is_rational_integer(xi_exponent(q, e, root)), "k delta exponent not integral");
        }
    }
    if (out.pass) out.detail = "delta E=6; " + std::to_string(cases) + " rational-E_q cases gave k delta";
    return out;
}

// 6. CB on the D4 star, d <= 2, exponents in (1/4)Z, against exhaustive decomposition
Outcome cb_bruteforce() {
    Outcome out;
    const auto q = StarQuiver::build({2, 2, 2, 2});
    const oracle::Star star({2, 2, 2, 2});
    // E(alpha) = alpha_0 S + sum_i alpha_i1 v_i with S = sum e_i1, v_i = e_i2 - e_i1, so
    // (S, v) mod Z indexes every behaviour; each class is realized by e_11 = S, e_i1 = 0 otherwise.
    std::vector<RootVector> alphas;
    for (std::int64_t d = 1; d <= 2; ++d)
        for (int code = 0; code < 81; ++code) {
            RootVector a(5);
            a[0] = d;
            int c = code;
            bool ok = true;
            for (std::size_t v = 1; v <= 4; ++v) {
                a[v] = c % 3;
                c /= 3;
                ok = ok && a[v] <= d;
            }
            if (ok) alphas.push_back(a);
        }
    const auto candidates = oracle::tits_box(star, 2, {0, 1});
    auto oracle_exponent = [](const std::vector<std::int64_t>& b, const std::vector<Rat>& e1, const std::vector<Rat>& e2) {
        Rat s;
        for (std::size_t i = 0; i < 4; ++i) s += Rat(b[0] - b[i + 1]) * e1[i] + Rat(b[i + 1]) * e2[i];
        return s;
    };
    auto check = [&](const std::vector<Rat>& e1, const std::vector<Rat>& e2) {
        ExponentSet e{PointTable(q.orders()), std::nullopt};
        for (std::size_t i = 1; i <= 4; ++i) {
            e.e(i, 1) = e1[i - 1];
            e.e(i, 2) = e2[i - 1];
        }
        for (const auto& a : alphas) {
            std::vector<std::vector<std::int64_t>> parts;
            for (const auto& v : candidates)
                if (RootVector(v).dominated_by(a) && oracle_exponent(v, e1, e2).is_integer()) parts.push_back(v);
            oracle::Decomposer dec(parts);
            DSInstance inst{q, e, a};
            const auto got = cb_solvable(inst);
            const bool want = dec.splits(a.coeffs());
            out.require(!got.is_unknown() && got.is_yes() == want, "disagreement at alpha=" + q.format(a));
            if (got.is_yes()) out.require(replay_cb(inst, got.certificate()), "certificate does not replay");
        }
    };
    std::size_t instances = 0;
    for (int code = 0; code < 1024; ++code) {
        std::vector<Rat> e1(4, Rat(0)), e2(4, Rat(0));
        int c = code;
        e1[0] = Rat(c % 4, 4);
        c /= 4;
        for (std::size_t i = 0; i < 4; ++i) {
            e2[i] = e1[i] + Rat(c % 4, 4);
            c /= 4;
        }
        check(e1, e2);
        instances += alphas.size();
    }
    // raw tables as well, not reduced to class representatives
    std::mt19937_64 rng(606);
    for (int t = 0; t < 300; ++t) {
        std::vector<Rat> e1, e2;
        for (std::size_t i = 0; i < 4; ++i) {
            e1.push_back(Rat(static_cast<long>(rng() % 16) - 8, 4));
            e2.push_back(Rat(static_cast<long>(rng() % 16) - 8, 4));
        }
        check(e1, e2);
        instances += alphas.size();
    }
    if (out.pass) out.detail = std::to_string(instances) + " instances agree";
    return out;
}

// 7. numeric oracle on the committed corpus, and gradient checks
Outcome numeric_corpus(const std::string& data_dir) {
    Outcome out;
    std::vector<std::filesystem::path> files;
    for (const auto& entry : std::filesystem::directory_iterator(data_dir + "/numeric")) files.push_back(entry.path());
    std::sort(files.begin(), files.end());
    int solvable = 0, unsolvable = 0, found = 0, not_found = 0;
    for (const auto& path : files) {
        const ProblemFile f = load_problem(path.string());
        const DSInstance inst = ds_instance_from(f, EtaSign::S41);
        out.require(inst.alpha.center() <= 3, "corpus instance with d > 3");
        const auto truth = cb_solvable(inst);
        out.require(!truth.is_unknown(), "CB undecided on corpus");
        const NumericClassSpec spec = NumericClassSpec::from_instance(inst);
        NumericOptions opt;
        opt.tol = kResidualTol;
        opt.restarts = kRestarts;
        opt.seed = 0;
        const auto res = solve_numeric(spec, opt);
        if (truth.is_yes()) {
            ++solvable;
            if (res.found()) ++found;
            out.require(res.found(), "no solution found for " + path.filename().string());
        } else {
            ++unsolvable;
            if (!res.found()) ++not_found;
            out.require(!res.found(), "solution reported for " + path.filename().string());
        }
        if (res.found()) out.require(verify_solution(*res.solution, spec, kResidualTol), "unverified solution");
    }
    out.require(solvable == 10 && unsolvable == 10, "corpus is not 10 + 10");

    std::mt19937_64 rng(707);
    std::normal_distribution<double> g(0.0, 1.0);
    // d = 1 instances have a constant product and a zero gradient; relative error needs d >= 2
    std::vector<NumericClassSpec> gradient_specs;
    for (const auto& path : files) {
        auto spec = NumericClassSpec::from_instance(ds_instance_from(load_problem(path.string()), EtaSign::S41));
        if (spec.d >= 2) gradient_specs.push_back(std::move(spec));
    }
    out.require(!gradient_specs.empty(), "no corpus instance with d >= 2");
    double worst = 0.0;
    for (int t = 0; t < kGradientPoints && !gradient_specs.empty(); ++t) {
        const NumericClassSpec& spec = gradient_specs[t % gradient_specs.size()];
        const ProductObjective obj(spec, t % 2 ? 0.0 : 0.05);
        Eigen::VectorXd x(obj.parameter_count());
        for (Eigen::Index k = 0; k < x.size(); ++k) x[k] = g(rng);
        const Eigen::VectorXd an = obj.gradient(x);
        const Eigen::VectorXd fd =
            oracle::finite_gradient([&](const Eigen::VectorXd& y) { return obj.value(y); }, x, kFiniteDiffStep);
        const double rel = (an - fd).norm() / std::max(an.norm(), 1e-12);
        worst = std::max(worst, rel);
    }
    out.require(worst < kGradientRelErr, "gradient relative error " + std::to_string(worst));
    if (out.pass) {
        char buf[160];
        std::snprintf(buf, sizeof buf, "found %d/%d solvable, NotFound %d/%d unsolvable, worst gradient rel err %.2e", found,
                      solvable, not_found, unsolvable, worst);
        out.detail = buf;
    }
    return out;
}

// 8. Shoda route and noncompact route
Outcome shoda_routes() {
    Outcome out;
    ExponentSet e{PointTable({2}), std::nullopt};
    e.e(1, 1) = Rat(1, 2);
    e.e(1, 2) = Rat(1);
    const auto d = exists_findim_genus_ge1(e, kDmax);
    out.require(d.is_yes(), "torus not Yes");
    if (d.is_yes()) {
        out.require(d.certificate() == MultiplicityVector{2, {{2, 0}}}, "witness is " + d.certificate().to_string());
        out.require(determinant_exponent(e, d.certificate()) == CycNum(1), "determinant exponent != 1");
    }
    std::mt19937_64 rng(808);
    int punctured = 0;
    for (int t = 0; t < 100; ++t) {
        std::vector<long> orders;
        const int m = static_cast<int>(rng() % 4);
        for (int i = 0; i < m; ++i) orders.push_back(2 + static_cast<long>(rng() % 5));
        const OrbifoldCurve curve{static_cast<int>(rng() % 3), false, 1 + static_cast<int>(rng() % 3), orders};
        CParams p = CParams::zero(curve);
        for (std::size_t i = 1; i <= orders.size(); ++i) {
            for (std::size_t j = 1; j < static_cast<std::size_t>(orders[i - 1]); ++j) p.c(i, j) = random_cyc(rng);
            p.eta[i - 1] = random_cyc(rng);
        }
        const auto r = decide_category_O(curve, p);
        out.require(r.is_yes(), "punctured input not Yes");
        if (r.is_yes()) out.require(replay_certificate(curve, p, r.certificate()), "noncompact certificate fails");
        ++punctured;
    }
    if (out.pass) out.detail = "torus d=2 m=(2,0) E=1; " + std::to_string(punctured) + " punctured inputs Yes";
    return out;
}

std::string write_file(const std::string& name, const std::string& body) {
    const auto path = std::filesystem::temp_directory_path() / ("orbicat_accept_" + name);
    std::ofstream(path) << body;
    return path.string();
}

// 9. every YES replays through its criterion; reports are byte-identical across runs
Outcome replay_and_determinism(const std::string& data_dir) {
    Outcome out;
    std::mt19937_64 rng(909);
    int yes = 0, total = 0;
    for (int t = 0; t < 300; ++t) {
        std::vector<long> orders;
        const int m = 1 + static_cast<int>(rng() % 4);
        for (int i = 0; i < m; ++i) orders.push_back(2 + static_cast<long>(rng() % 3));
        const int kind = t % 3;
        const OrbifoldCurve curve{kind == 0 ? 0 : 1 + static_cast<int>(rng() % 2), kind != 2, kind == 2 ? 1 : 0, orders};
        CParams p = CParams::zero(curve);
        for (std::size_t i = 1; i <= orders.size(); ++i) {
            for (std::size_t j = 1; j < static_cast<std::size_t>(orders[i - 1]); ++j) {
                p.c(i, j) = random_rat(rng, 2, 4);
                if (rng() % 4 == 0) p.c(i, j) += CycNum::root_of_unity(3, 1);
            }
            p.eta[i - 1] = random_rat(rng, 2, 4);
        }
        const auto r = decide_category_O(curve, p, Bounds{kDmax, 20});
        ++total;
        if (!r.is_yes()) continue;
        ++yes;
        out.require(replay_certificate(curve, p, r.certificate()), "check-o certificate fails to replay");
    }
    int ds_yes = 0;
    for (const auto& entry : std::filesystem::directory_iterator(data_dir + "/numeric")) {
        const DSInstance inst = ds_instance_from(load_problem(entry.path().string()), EtaSign::S41);
        const auto r = cb_solvable(inst);
        if (!r.is_yes()) continue;
        ++ds_yes;
        out.require(replay_cb(inst, r.certificate()), "CB certificate fails to replay");
    }

    // byte-identical reports
    std::vector<std::pair<std::vector<std::string>, std::string>> jobs;
    const std::string d4 = write_file("d4.txt", "genus=0\npoints=[2,2,2,2]\n");
    const std::string torus = write_file("torus.txt", "genus=1\npoints=[2]\ne[1][1]=1/2\ne[1][2]=1\n");
    const std::string gd = write_file("gd.txt", "points=[3,3,3]\nmu0=1/2\nmu[1][1]=1/3\nnu=1/5\nxi[1]=1/2\nxi[2]=-1/2\n");
    for (const auto& cmd : std::vector<std::vector<std::string>>{{"classify"}, {"tau"}, {"point-support"}, {"check-o"}, {"roots"}}) {
        jobs.emplace_back(cmd, d4);
        jobs.emplace_back(cmd, torus);
    }
    jobs.push_back({{"gdaha", "map-params"}, gd});
    jobs.push_back({{"gdaha", "a-roots"}, gd});
    for (const auto& entry : std::filesystem::directory_iterator(data_dir + "/numeric")) {
        jobs.push_back({{"ds", "check"}, entry.path().string()});
        jobs.push_back({{"ds", "solve-numeric"}, entry.path().string()});
    }
    int identical = 0;
    for (const auto& [cmd, file] : jobs) {
        if (cmd[0] == "roots" && file == torus) continue;
        RunConfig cfg;
        cfg.command = cmd;
        cfg.input = file;
        cfg.height = 12;
        const RunOutcome a = run(cfg), b = run(cfg);
        out.require(a.status == b.status && a.report == b.report && a.error == b.error, "report differs across runs");
        if (a.report == b.report) ++identical;
        std::istringstream lines(a.report);
        for (std::string l; std::getline(lines, l);)
            if (l.rfind("replay ", 0) == 0) out.require(l == "replay yes", "CLI replay line says no");
    }
    if (out.pass)
        out.detail = std::to_string(yes) + "/" + std::to_string(total) + " check-o YES and " + std::to_string(ds_yes) +
                     " CB YES replayed; " + std::to_string(identical) + " reports identical";
    return out;
}

} // namespace

int main(int argc, char** argv) {
    const std::string data_dir = argc > 1 ? argv[1] : ORBICAT_TEST_DATA;
    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
        {"exact arithmetic laws", exact_arithmetic},
        {"parameter round trip", round_trip},
        {"point support n=2", point_support_n2},
        {"root counts and delta", root_counts},
        {"genus-0 strict roots", genus0_consistency},
        {"CB vs exhaustive decomposition", cb_bruteforce},
        {"numeric oracle corpus", [&] { return numeric_corpus(data_dir); }},
        {"Shoda and noncompact routes", shoda_routes},
        {"certificate replay and determinism", [&] { return replay_and_determinism(data_dir); }},
    };
    int failed = 0;
    for (std::size_t k = 0; k < criteria.size(); ++k) {
        const auto start = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = criteria[k].second();
        } catch (const std::exception& ex) {
            o.pass = false;
            o.detail = std::string("exception: ") + ex.what();
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        std::printf("criterion %zu: %s  %s (%s, %.1fs)\n", k + 1, o.pass ? "PASS" : "FAIL", criteria[k].first.c_str(),
                    o.detail.c_str(), secs);
        std::fflush(stdout);
        failed += o.pass ? 0 : 1;
    }
    return failed == 0 ? 0 : 1;
}
