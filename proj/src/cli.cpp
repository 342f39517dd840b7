#include "orbicat/cli.hpp"

#include "orbicat/category_o.hpp"
#include "orbicat/gdaha.hpp"
#include "orbicat/input.hpp"
#include "orbicat/numeric_oracle.hpp"

#include <CLI11.hpp>

#include <cstdio>
#include <sstream>

namespace orbicat {

namespace {

const std::vector<std::vector<std::string>> kCommands = {
    {"classify"}, {"tau"},         {"point-support"},        {"check-o"},         {"roots"},
    {"ds", "check"}, {"ds", "solve-numeric"}, {"gdaha", "map-params"}, {"gdaha", "a-roots"},
};

class Report {
public:
    explicit Report(OutputFormat f) : sep_(f == OutputFormat::Tsv ? '\t' : ' ') {}

    void row(std::initializer_list<std::string> fields) { row(std::vector<std::string>(fields)); }
    void row(const std::vector<std::string>& fields) {
        for (std::size_t k = 0; k < fields.size(); ++k) {
            if (k) os_ << sep_;
            os_ << fields[k];
        }
        os_ << '\n';
    }
    std::string str() const { return os_.str(); }

private:
    char sep_;
    std::ostringstream os_;
};

std::string num(std::size_t v) { return std::to_string(v); }

std::string real(double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12g", x == 0.0 ? 0.0 : x); // no "-0"
    return buf;
}

std::string complex_text(std::complex<double> z) {
    char buf[96];
    const double re = z.real() == 0.0 ? 0.0 : z.real();
    const double im = z.imag() == 0.0 ? 0.0 : z.imag();
    std::snprintf(buf, sizeof buf, "%.12g%+.12gi", re, im);
    return buf;
}

std::string orders_text(const std::vector<long>& orders) {
    std::string s = "(";
    for (std::size_t k = 0; k < orders.size(); ++k) s += (k ? "," : "") + std::to_string(orders[k]);
    return s + ")";
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

std::string geometry(QuiverType t) {
    switch (t) {
    case QuiverType::Finite: return "sphere";
    case QuiverType::Affine: return "plane";
    case QuiverType::Indefinite: return "hyperbolic";
    }
    return "";
}

void exponents_section(Report& r, const OrbifoldCurve& curve, const ExponentSet& e) {
    for (std::size_t i = 1; i <= curve.point_count(); ++i)
        for (std::size_t j = 1; j <= e.e.slots(i); ++j) r.row({"e", num(i), num(j), e.e(i, j).to_string()});
}

void cmd_classify(Report& r, const ProblemFile& f) {
    const OrbifoldCurve curve = curve_from(f);
    r.row({"curve", "genus=" + std::to_string(curve.genus), std::string("compact=") + (curve.compact ? "true" : "false"),
           "punctures=" + std::to_string(curve.punctures), "orders=" + orders_text(curve.orders)});
    if (curve.point_count() == 0) {
        r.row({"quiver", "none"});
        return;
    }
    const StarQuiver q = StarQuiver::build(curve.orders);
    const QuiverType t = classify(q);
    r.row({"quiver", "vertices=" + num(q.vertex_count())});
    r.row({"type", to_string(t)});
    r.row({"geometry", geometry(t)});
    if (t == QuiverType::Affine) r.row({"delta", q.format(delta(q))});
}

void cmd_tau(Report& r, const ProblemFile& f, EtaSign sign) {
    const OrbifoldCurve curve = curve_from(f);
    const CParams p = params_from(f, curve, sign);
    const ExponentSet e = exponents_from(f, curve, sign);
    r.row({"eta-sign", sign == EtaSign::S41 ? "s41" : "s21"});
    for (std::size_t i = 1; i <= curve.point_count(); ++i) {
        for (std::size_t j = 1; j < e.e.slots(i); ++j) r.row({"c", num(i), num(j), p.c(i, j).to_string()});
        r.row({"eta", num(i), p.eta[i - 1].to_string()});
    }
    exponents_section(r, curve, e);
    for (std::size_t i = 1; i <= curve.point_count(); ++i)
        for (std::size_t j = 1; j <= e.e.slots(i); ++j)
            r.row({"t", num(i), num(j), tau_exponent(curve, e, i, j).to_string()});
    const CycNum eq = q_exponent(curve, e);
    r.row({"q-exponent", eq.to_string()});
    r.row({"q-root-of-unity", yes_no(eq.is_rational())});
    const PresentationData pres = hecke_presentation(curve, e);
    std::vector<std::string> gens{"generators"};
    for (const auto& g : pres.generators()) gens.push_back(g);
    r.row(gens);
    for (const auto& rel : pres.points) {
        std::vector<std::string> row{"eigen", "T" + num(rel.point)};
        for (const auto& x : rel.eigen_exponents) row.push_back(x.to_string());
        r.row(row);
    }
    r.row({"relation", pres.product_relation()});
}

void cmd_point_support(Report& r, const ProblemFile& f, EtaSign sign) {
    const OrbifoldCurve curve = curve_from(f);
    const CParams p = params_from(f, curve, sign);
    for (std::size_t i = 1; i <= curve.point_count(); ++i) {
        const auto& row = p.c.row(i);
        const auto dec = point_support_witness(curve.orders[i - 1], row);
        if (dec.is_yes()) {
            const auto w = dec.certificate();
            r.row({"point", num(i), "YES", "a=" + std::to_string(w.a), "b=" + std::to_string(w.b),
                   "replay=" + yes_no(replay_point_witness(curve.orders[i - 1], row, w))});
        } else {
            r.row({"point", num(i), "NO"});
        }
    }
}

template <class C>
void decision_rows(Report& r, const Decision<C>& dec) {
    if (dec.is_no()) r.row({"decision", "NO"});
    else if (dec.is_unknown()) r.row({"decision", "UNKNOWN", "up-to=" + std::to_string(dec.bound())});
    else r.row({"decision", "YES"});
}

void cmd_check_o(Report& r, const ProblemFile& f, const RunConfig& cfg) {
    const OrbifoldCurve curve = curve_from(f);
    const bool genus0 = curve.compact && curve.genus == 0;
    if (genus0 && cfg.d_max_given) throw RoutingError("--dmax applies to genus >= 1 or noncompact inputs");
    if (!genus0 && cfg.height_given) throw RoutingError("--height applies to compact genus-0 inputs");
    const CParams p = params_from(f, curve, cfg.eta_sign);
    r.row({"route", !curve.compact ? "noncompact" : genus0 ? "genus-0" : "genus>=1"});
    const Bounds bounds{cfg.d_max, cfg.height};
    const auto dec = decide_category_O(curve, p, bounds, cfg.eta_sign);
    decision_rows(r, dec);
    if (dec.is_yes()) {
        const auto& cert = dec.certificate();
        r.row({"criterion", criterion(cert)});
        r.row({"certificate", describe(cert, curve)});
        r.row({"replay", yes_no(replay_certificate(curve, p, cert, cfg.eta_sign))});
    }
}

void cmd_roots(Report& r, const ProblemFile& f, const RunConfig& cfg) {
    const OrbifoldCurve curve = curve_from(f);
    if (curve.point_count() == 0) throw InputError(0, "roots needs marked points");
    const StarQuiver q = StarQuiver::build(curve.orders);
    const QuiverType t = classify(q);
    const auto roots = positive_roots_up_to(q, cfg.height);
    r.row({"type", to_string(t)});
    r.row({"height-bound", std::to_string(cfg.height)});
    r.row({"count", num(roots.size())});
    for (const auto& root : roots)
        r.row({to_string(root.kind), std::to_string(root.vector.height()), q.format(root.vector)});
}

void require_genus0(const ProblemFile& f) {
    const OrbifoldCurve curve = curve_from(f);
    if (!curve.compact || curve.genus != 0)
        throw RoutingError("Deligne-Simpson commands take compact genus-0 inputs");
}

void cmd_ds_check(Report& r, const ProblemFile& f, const RunConfig& cfg) {
    require_genus0(f);
    const DSInstance inst = ds_instance_from(f, cfg.eta_sign);
    r.row({"alpha", inst.quiver.format(inst.alpha)});
    r.row({"xi-exponent", xi_exponent(inst.quiver, inst.e, inst.alpha).to_string()});
    const auto dec = cb_solvable(inst);
    decision_rows(r, dec);
    if (dec.is_yes()) {
        std::string parts;
        for (const auto& part : dec.certificate().parts) parts += (parts.empty() ? "" : "+") + inst.quiver.format(part);
        r.row({"criterion", "CB"});
        r.row({"certificate", "cb parts=" + parts});
        r.row({"replay", yes_no(replay_cb(inst, dec.certificate()))});
    }
}

void cmd_ds_solve(Report& r, const ProblemFile& f, const RunConfig& cfg) {
    require_genus0(f);
    const DSInstance inst = ds_instance_from(f, cfg.eta_sign);
    const NumericClassSpec spec = NumericClassSpec::from_instance(inst);
    NumericOptions opt;
    opt.tol = cfg.tol;
    opt.restarts = cfg.seeds;
    opt.seed = cfg.seed;
    const NumericResult res = solve_numeric(spec, opt);
    r.row({"alpha", inst.quiver.format(inst.alpha)});
    if (!res.found()) {
        r.row({"numeric", "NOTFOUND", "restarts=" + std::to_string(cfg.seeds)});
        return;
    }
    const auto& sol = *res.solution;
    r.row({"numeric", "FOUND", "restart=" + std::to_string(res.restart), "residual=" + real(sol.residual)});
    r.row({"verified", yes_no(verify_solution(sol, spec, cfg.tol))});
    for (std::size_t i = 0; i < sol.matrices.size(); ++i) {
        r.row({"matrix", "T" + num(i + 1)});
        const auto& m = sol.matrices[i];
        for (Eigen::Index a = 0; a < m.rows(); ++a) {
            std::vector<std::string> row{"row"};
            for (Eigen::Index b = 0; b < m.cols(); ++b) row.push_back(complex_text(m(a, b)));
            r.row(row);
        }
    }
}

struct GdahaData {
    OrbifoldCurve curve;
    StarQuiver quiver;
    WreathParams w;
    ExponentSet e;
};

GdahaData gdaha_data(const ProblemFile& f) {
    const OrbifoldCurve curve = curve_from(f);
    if (curve.point_count() == 0) throw InputError(0, "gdaha needs marked points");
    StarQuiver q = StarQuiver::build(curve.orders);
    if (classify(q) != QuiverType::Affine) throw InputError(f.points ? f.points->line : 0, "gdaha needs an affine star quiver");
    WreathParams w = wreath_from(f, q);
    ExponentSet e = gdaha_tau_from_mu_nu(q, w);
    return {curve, std::move(q), std::move(w), std::move(e)};
}

void params_section(Report& r, const GdahaData& g) {
    r.row({"PARAMS"});
    r.row({"quiver", g.quiver.format(delta(g.quiver)), "delta"});
    r.row({"rank", std::to_string(g.w.rank)});
    r.row({"mu0", g.w.mu0.to_string()});
    for (std::size_t i = 0; i < g.w.mu.size(); ++i)
        for (std::size_t p = 0; p < g.w.mu[i].size(); ++p) r.row({"mu", num(i + 1), num(p + 1), g.w.mu[i][p].to_string()});
    r.row({"nu", g.w.nu.to_string()});
    for (std::size_t i = 0; i < g.w.xi.size(); ++i) r.row({"xi", num(i + 1), g.w.xi[i].to_string()});
    r.row({"spherical", g.w.spherical_asserted ? "asserted" : "not-asserted"});
}

void cmd_gdaha_map(Report& r, const ProblemFile& f) {
    const GdahaData g = gdaha_data(f);
    params_section(r, g);
    r.row({"EXPONENTS"});
    exponents_section(r, g.curve, g.e);
    r.row({"transposition", g.e.transposition ? g.e.transposition->to_string() : "none"});
    r.row({"q-exponent", q_exponent(g.curve, g.e).to_string()});
}

void cmd_gdaha_roots(Report& r, const ProblemFile& f, const RunConfig& cfg) {
    const GdahaData g = gdaha_data(f);
    params_section(r, g);
    r.row({"EXPONENTS"});
    exponents_section(r, g.curve, g.e);
    r.row({"transposition", g.e.transposition ? g.e.transposition->to_string() : "none"});
    r.row({"A-ROOTS"});
    const auto mu = vertex_mu(g.quiver, g.w);
    std::vector<std::string> mu_row{"vertex-mu"};
    for (const auto& x : mu) mu_row.push_back(x.to_string());
    r.row(mu_row);
    const auto roots = a_real_roots(g.quiver, mu, cfg.height);
    r.row({"height-bound", std::to_string(cfg.height)});
    r.row({"count", num(roots.size())});
    for (const auto& root : roots) r.row({"root", std::to_string(root.height()), g.quiver.format(root)});
    r.row({"weight-space-test", "unevaluated"});
    r.row({"decision", "UNKNOWN", "up-to=" + std::to_string(cfg.height)});
}

} // namespace

void RunConfig::validate() const {
    if (d_max <= 0) throw InputError(0, "--dmax must be positive");
    if (height <= 0) throw InputError(0, "--height must be positive");
    if (seeds <= 0) throw InputError(0, "--seeds must be positive");
    if (!(tol > 0)) throw InputError(0, "--tol must be positive");
    bool known = false;
    for (const auto& c : kCommands) known = known || c == command;
    if (!known) throw InputError(0, "unknown command");
}

RunOutcome run(const RunConfig& cfg) {
    RunOutcome out;
    Report r(cfg.format);
    try {
        cfg.validate();
        const ProblemFile f = load_problem(cfg.input);
        const auto& c = cfg.command;
        if (c[0] == "classify") cmd_classify(r, f);
        else if (c[0] == "tau") cmd_tau(r, f, cfg.eta_sign);
        else if (c[0] == "point-support") cmd_point_support(r, f, cfg.eta_sign);
        else if (c[0] == "check-o") cmd_check_o(r, f, cfg);
        else if (c[0] == "roots") cmd_roots(r, f, cfg);
        else if (c[0] == "ds" && c[1] == "check") cmd_ds_check(r, f, cfg);
        else if (c[0] == "ds") cmd_ds_solve(r, f, cfg);
        else if (c[1] == "map-params") cmd_gdaha_map(r, f);
        else cmd_gdaha_roots(r, f, cfg);
    } catch (const InputError& ex) {
        out.status = 2;
        out.error = std::string("input error: ") + ex.what();
        return out;
    } catch (const RoutingError& ex) {
        out.status = 2;
        out.error = std::string("routing error: ") + ex.what();
        return out;
    } catch (const std::invalid_argument& ex) {
        out.status = 2;
        out.error = std::string("input error: ") + ex.what();
        return out;
    }
    out.report = r.str();
    return out;
}

int cli_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"orbifold Cherednik category O and Deligne-Simpson tools"};
    app.require_subcommand(1);
    RunConfig cfg;
    std::string eta = "s41";
    std::string format = "human";

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("input", cfg.input, "problem file")->required();
        sub->add_option("--eta-sign", eta, "sign convention for eta")->check(CLI::IsMember({"s41", "s21"}));
        sub->add_option("--format", format, "report layout")->check(CLI::IsMember({"human", "tsv"}));
    };

    std::vector<CLI::Option*> dmax_opts;
    std::vector<CLI::Option*> height_opts;
    const std::vector<std::pair<const char*, const char*>> plain = {
        {"classify", "star quiver type and delta"},
        {"tau", "Hecke exponents from (c, eta) or the inverse"},
        {"point-support", "point-support hyperplanes per marked point"},
        {"check-o", "is category O nonzero"},
        {"roots", "positive roots up to --height"},
    };
    for (const auto& [name, help] : plain) {
        auto* sub = app.add_subcommand(name, help);
        add_common(sub);
        const std::string n = name;
        if (n == "check-o") dmax_opts.push_back(sub->add_option("--dmax", cfg.d_max, "largest dimension searched"));
        if (n == "check-o" || n == "roots") height_opts.push_back(sub->add_option("--height", cfg.height, "root height bound"));
    }
    auto* ds = app.add_subcommand("ds", "Deligne-Simpson instances");
    ds->require_subcommand(1);
    add_common(ds->add_subcommand("check", "decomposition into roots with trivial xi"));
    auto* ds_solve = ds->add_subcommand("solve-numeric", "numeric search for T_1 ... T_m = I");
    add_common(ds_solve);
    ds_solve->add_option("--seeds", cfg.seeds, "number of restarts");
    ds_solve->add_option("--seed", cfg.seed, "base seed");
    ds_solve->add_option("--tol", cfg.tol, "product residual tolerance");
    auto* gdaha = app.add_subcommand("gdaha", "rank-n wreath parameters");
    gdaha->require_subcommand(1);
    add_common(gdaha->add_subcommand("map-params", "exponents from (mu, nu, xi)"));
    auto* a_roots = gdaha->add_subcommand("a-roots", "real roots with integral mu pairing");
    add_common(a_roots);
    height_opts.push_back(a_roots->add_option("--height", cfg.height, "root height bound"));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& ex) {
        const int code = app.exit(ex, out, err);
        return code == 0 ? 0 : 2;
    }

    for (const auto* sub = app.get_subcommands().front(); sub;) {
        cfg.command.push_back(sub->get_name());
        const auto inner = sub->get_subcommands();
        sub = inner.empty() ? nullptr : inner.front();
    }
    for (auto* o : dmax_opts) cfg.d_max_given = cfg.d_max_given || o->count() > 0;
    for (auto* o : height_opts) cfg.height_given = cfg.height_given || o->count() > 0;
    cfg.eta_sign = eta == "s21" ? EtaSign::S21 : EtaSign::S41;
    cfg.format = format == "tsv" ? OutputFormat::Tsv : OutputFormat::Human;

    const RunOutcome res = run(cfg);
    out << res.report;
    if (!res.error.empty()) err << res.error << '\n';
    return res.status;
}

} // namespace orbicat
