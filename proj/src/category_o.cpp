#include "orbicat/category_o.hpp"

#include <sstream>

namespace orbicat {

namespace {

std::optional<PointSupportCertificate> first_point_support(const OrbifoldCurve& curve, const CParams& p) {
    for (std::size_t i = 1; i <= curve.point_count(); ++i) {
        auto d = point_support_witness(curve.orders[i - 1], p.c.row(i));
        if (d.is_yes()) return PointSupportCertificate{i, d.certificate()};
    }
    return std::nullopt;
}

} // namespace

Decision<OCertificate> category_O_nonzero(const OrbifoldCurve& curve, const CParams& p, const Bounds& bounds,
                                          EtaSign sign) {
    curve.validate();
    check_shape(curve, p);
    if (!curve.compact) return OCertificate{NoncompactCertificate{curve.punctures}};
    if (curve.genus < 1) throw RoutingError("compact genus-0 curves go through the Deligne-Simpson route");
    if (auto ps = first_point_support(curve, p)) return OCertificate{*ps};
    const ExponentSet e = tau_from_c_eta(curve, p, sign);
    auto det = exists_findim_genus_ge1(e, bounds.d_max);
    if (det.is_yes()) {
        const auto& mv = det.certificate();
        return OCertificate{DeterminantCertificate{mv, determinant_exponent(e, mv)}};
    }
    return UnknownUpTo{det.bound()};
}

Decision<OCertificate> category_O_nonzero_genus0(const OrbifoldCurve& curve, const CParams& p, const Bounds& bounds,
                                                 EtaSign sign) {
    curve.validate();
    check_shape(curve, p);
    if (!curve.compact || curve.genus != 0)
        throw RoutingError("the genus-0 criterion needs a compact curve of genus 0");
    if (curve.point_count() == 0) throw RoutingError("the genus-0 criterion needs at least one marked point");
    if (auto ps = first_point_support(curve, p)) return OCertificate{*ps};
    const StarQuiver q = StarQuiver::build(curve.orders);
    auto strict = strict_root_search(q, tau_from_c_eta(curve, p, sign), bounds.height);
    if (strict.is_yes()) return OCertificate{StrictRootCertificate{strict.certificate()}};
    if (strict.is_no()) return No{};
    return UnknownUpTo{strict.bound()};
}

Decision<OCertificate> decide_category_O(const OrbifoldCurve& curve, const CParams& p, const Bounds& bounds,
                                         EtaSign sign) {
    if (curve.compact && curve.genus == 0) return category_O_nonzero_genus0(curve, p, bounds, sign);
    return category_O_nonzero(curve, p, bounds, sign);
}

std::string criterion(const OCertificate& cert) {
    struct Visitor {
        std::string operator()(const PointSupportCertificate&) const { return "point-support"; }
        std::string operator()(const DeterminantCertificate&) const { return "determinant"; }
        std::string operator()(const NoncompactCertificate&) const { return "noncompact"; }
        std::string operator()(const StrictRootCertificate&) const { return "strict-root"; }
    };
    return std::visit(Visitor{}, cert);
}

std::string describe(const OCertificate& cert, const OrbifoldCurve& curve) {
    std::ostringstream os;
    if (const auto* ps = std::get_if<PointSupportCertificate>(&cert)) {
        os << "point-support i=" << ps->point << " a=" << ps->witness.a << " b=" << ps->witness.b;
    } else if (const auto* det = std::get_if<DeterminantCertificate>(&cert)) {
        os << "det d=" << det->multiplicities.d << " m=" << det->multiplicities.to_string() << " E=" << det->exponent;
    } else if (const auto* nc = std::get_if<NoncompactCertificate>(&cert)) {
        os << "noncompact punctures=" << nc->punctures << " A=B=I X_p absorbs T_1...T_m";
    } else {
        const auto& sr = std::get<StrictRootCertificate>(cert);
        const StarQuiver q = StarQuiver::build(curve.orders);
        os << "strict-root alpha=" << q.format(sr.witness.root) << " E=" << sr.witness.exponent;
    }
    return os.str();
}

bool replay_certificate(const OrbifoldCurve& curve, const CParams& p, const OCertificate& cert, EtaSign sign) {
    if (const auto* ps = std::get_if<PointSupportCertificate>(&cert)) {
        if (ps->point < 1 || ps->point > curve.point_count()) return false;
        return replay_point_witness(curve.orders[ps->point - 1], p.c.row(ps->point), ps->witness);
    }
    if (const auto* nc = std::get_if<NoncompactCertificate>(&cert))
        return !curve.compact && curve.punctures >= 1 && nc->punctures == curve.punctures;
    const ExponentSet e = tau_from_c_eta(curve, p, sign);
    if (const auto* det = std::get_if<DeterminantCertificate>(&cert)) {
        if (!curve.compact || curve.genus < 1 || !det->multiplicities.consistent_with(e)) return false;
        return det_condition(e, det->multiplicities) && determinant_exponent(e, det->multiplicities) == det->exponent;
    }
    const auto& sr = std::get<StrictRootCertificate>(cert);
    if (!curve.compact || curve.genus != 0) return false;
    return replay_strict_root(StarQuiver::build(curve.orders), e, sr.witness);
}

} // namespace orbicat
