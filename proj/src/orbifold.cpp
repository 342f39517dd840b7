#include "orbicat/orbifold.hpp"

#include "orbicat/linalg.hpp"

#include <sstream>

namespace orbicat {

void OrbifoldCurve::validate() const {
    if (genus < 0) throw std::invalid_argument("genus must be nonnegative");
    if (punctures < 0) throw std::invalid_argument("puncture count must be nonnegative");
    if (compact && punctures != 0) throw std::invalid_argument("a compact curve has no punctures");
    if (!compact && punctures == 0) throw std::invalid_argument("a noncompact curve needs at least one puncture");
    for (long n : orders)
        if (n < 2) throw std::invalid_argument("stabilizer orders must be at least 2");
}

PointTable::PointTable(const std::vector<long>& row_lengths) {
    rows_.reserve(row_lengths.size());
    for (long len : row_lengths) rows_.emplace_back(static_cast<std::size_t>(len), CycNum(0));
}

const std::vector<CycNum>& PointTable::row(std::size_t i) const {
    if (i < 1 || i > rows_.size()) throw std::out_of_range("point index out of range");
    return rows_[i - 1];
}

std::vector<CycNum>& PointTable::row(std::size_t i) {
    if (i < 1 || i > rows_.size()) throw std::out_of_range("point index out of range");
    return rows_[i - 1];
}

CycNum& PointTable::operator()(std::size_t i, std::size_t j) {
    auto& r = row(i);
    if (j < 1 || j > r.size()) throw std::out_of_range("slot index out of range");
    return r[j - 1];
}

const CycNum& PointTable::operator()(std::size_t i, std::size_t j) const {
    const auto& r = row(i);
    if (j < 1 || j > r.size()) throw std::out_of_range("slot index out of range");
    return r[j - 1];
}

CParams CParams::zero(const OrbifoldCurve& curve) {
    std::vector<long> lengths;
    for (long n : curve.orders) lengths.push_back(n - 1);
    return {PointTable(lengths), std::vector<CycNum>(curve.point_count(), CycNum(0))};
}

ExponentSet ExponentSet::untwisted(const OrbifoldCurve& curve) {
    ExponentSet out{PointTable(curve.orders), std::nullopt};
    for (std::size_t i = 1; i <= curve.point_count(); ++i) {
        const long n = curve.orders[i - 1];
        for (long j = 1; j <= n; ++j) out.e(i, static_cast<std::size_t>(j)) = CycNum(Rat(j, n));
    }
    return out;
}

void check_shape(const OrbifoldCurve& curve, const CParams& p) {
    if (p.c.points() != curve.point_count() || p.eta.size() != curve.point_count())
        throw std::invalid_argument("parameter table has the wrong number of points");
    for (std::size_t i = 1; i <= curve.point_count(); ++i)
        if (static_cast<long>(p.c.slots(i)) != curve.orders[i - 1] - 1)
            throw std::invalid_argument("c row " + std::to_string(i) + " must have n_i - 1 entries");
}

void check_shape(const OrbifoldCurve& curve, const ExponentSet& e) {
    if (e.e.points() != curve.point_count())
        throw std::invalid_argument("exponent table has the wrong number of points");
    for (std::size_t i = 1; i <= curve.point_count(); ++i)
        if (static_cast<long>(e.e.slots(i)) != curve.orders[i - 1])
            throw std::invalid_argument("exponent row " + std::to_string(i) + " must have n_i entries");
}

namespace {

// (1 - z^{jk}) / (1 - z^{-k}) for z = zeta_n, 1 <= k < n.
CycNum kz_weight(long n, long j, long k) {
    const CycNum one(1);
    return (one - CycNum::root_of_unity(n, j * k)) / (one - CycNum::root_of_unity(n, -k));
}

CycNum eta_coefficient(long n, EtaSign sign) {
    return CycNum(Rat(sign == EtaSign::S41 ? -1 : 1, n));
}

} // namespace

ExponentSet tau_from_c_eta(const OrbifoldCurve& curve, const CParams& p, EtaSign sign) {
    check_shape(curve, p);
    ExponentSet out{PointTable(curve.orders), std::nullopt};
    for (std::size_t i = 1; i <= curve.point_count(); ++i) {
        const long n = curve.orders[i - 1];
        for (long j = 1; j <= n; ++j) {
            CycNum sum(0);
            for (long k = 1; k < n; ++k) {
                const CycNum& c = p.c(i, static_cast<std::size_t>(k));
                if (!c.is_zero()) sum += c * kz_weight(n, j, k);
            }
            const CycNum t = sum * CycNum(Rat(2, n)) + eta_coefficient(n, sign) * p.eta[i - 1];
            out.e(i, static_cast<std::size_t>(j)) = CycNum(Rat(j, n)) + t;
        }
    }
    return out;
}

CParams c_eta_from_tau(const OrbifoldCurve& curve, const ExponentSet& e, EtaSign sign) {
    check_shape(curve, e);
    CParams out = CParams::zero(curve);
    for (std::size_t i = 1; i <= curve.point_count(); ++i) {
        const long n = curve.orders[i - 1];
        const auto size = static_cast<std::size_t>(n);
        // unknowns c_{i1}..c_{i,n-1}, eta_i; one equation per eigenvalue slot j
        Matrix<CycNum> a(size, size);
        std::vector<CycNum> rhs(size);
        for (long j = 1; j <= n; ++j) {
            const auto row = static_cast<std::size_t>(j - 1);
            for (long k = 1; k < n; ++k)
                a(row, static_cast<std::size_t>(k - 1)) = kz_weight(n, j, k) * CycNum(Rat(2, n));
            a(row, size - 1) = eta_coefficient(n, sign);
            rhs[row] = e.e(i, static_cast<std::size_t>(j)) - CycNum(Rat(j, n));
        }
        if (rank(a) != size)
            throw SingularSystem("parameter map is singular at point " + std::to_string(i));
        auto x = solve(a, rhs);
        if (!x) throw SingularSystem("parameter map is inconsistent at point " + std::to_string(i));
        for (long k = 1; k < n; ++k) out.c(i, static_cast<std::size_t>(k)) = (*x)[static_cast<std::size_t>(k - 1)];
        out.eta[i - 1] = (*x)[size - 1];
    }
    return out;
}

CycNum tau_exponent(const OrbifoldCurve& curve, const ExponentSet& e, std::size_t i, std::size_t j) {
    return e.e(i, j) - CycNum(Rat(static_cast<long>(j), curve.orders.at(i - 1)));
}

CycNum q_exponent(const OrbifoldCurve& curve, const ExponentSet& e) {
    check_shape(curve, e);
    if (curve.point_count() == 0) throw std::invalid_argument("q is defined only with marked points");
    CycNum sum(0);
    for (std::size_t i = 1; i <= curve.point_count(); ++i) {
        const long n = curve.orders[i - 1];
        for (const auto& x : e.e.row(i)) sum += x * CycNum(Rat(1, n));
    }
    return -sum;
}

PresentationData hecke_presentation(const OrbifoldCurve& curve, const ExponentSet& e) {
    curve.validate();
    check_shape(curve, e);
    PresentationData out;
    out.genus = curve.genus;
    out.punctures = curve.punctures;
    for (std::size_t i = 1; i <= curve.point_count(); ++i)
        out.points.push_back({i, curve.orders[i - 1], e.e.row(i)});
    return out;
}

std::vector<std::string> PresentationData::generators() const {
    std::vector<std::string> g;
    for (const auto& p : points) g.push_back("T" + std::to_string(p.point));
    for (int l = 1; l <= genus; ++l) {
        g.push_back("A" + std::to_string(l));
        g.push_back("B" + std::to_string(l));
    }
    for (int p = 1; p <= punctures; ++p) g.push_back("X" + std::to_string(p));
    return g;
}

std::string PresentationData::product_relation() const {
    std::ostringstream os;
    bool any = false;
    for (const auto& p : points) {
        os << (any ? " " : "") << 'T' << p.point;
        any = true;
    }
    for (int p = 1; p <= punctures; ++p) {
        os << (any ? " " : "") << 'X' << p;
        any = true;
    }
    if (!any) os << '1';
    os << " = ";
    if (genus == 0) os << '1';
    for (int l = 1; l <= genus; ++l)
        os << (l > 1 ? " " : "") << 'A' << l << " B" << l << " A" << l << "^-1 B" << l << "^-1";
    return os.str();
}

} // namespace orbicat
