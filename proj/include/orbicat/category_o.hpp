#pragma once

#include "orbicat/decision.hpp"
#include "orbicat/deligne_simpson.hpp"
#include "orbicat/genus_decision.hpp"
#include "orbicat/orbifold.hpp"
#include "orbicat/point_support.hpp"

#include <string>
#include <variant>

namespace orbicat {

struct PointSupportCertificate {
    std::size_t point; // 1-based
    PointWitness witness;
};

struct DeterminantCertificate {
    MultiplicityVector multiplicities;
    CycNum exponent;
};

/// T_i anything satisfying their eigenvalue relations, A_l = B_l = I, and
/// the puncture loops absorbing the product.
struct NoncompactCertificate {
    int punctures;
};

struct StrictRootCertificate {
    StrictRootWitness witness;
};

using OCertificate =
    std::variant<PointSupportCertificate, DeterminantCertificate, NoncompactCertificate, StrictRootCertificate>;

struct Bounds {
    long d_max = 24;
    std::int64_t height = 60;
};

class RoutingError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Compact curves of genus >= 1 and all noncompact curves.
Decision<OCertificate> category_O_nonzero(const OrbifoldCurve& curve, const CParams& p, const Bounds& bounds = {},
                                          EtaSign sign = EtaSign::S41);

/// Compact genus-0 curves with at least one marked point.
Decision<OCertificate> category_O_nonzero_genus0(const OrbifoldCurve& curve, const CParams& p,
                                                 const Bounds& bounds = {}, EtaSign sign = EtaSign::S41);

/// Dispatches on genus and compactness.
Decision<OCertificate> decide_category_O(const OrbifoldCurve& curve, const CParams& p, const Bounds& bounds = {},
                                         EtaSign sign = EtaSign::S41);

/// point-support | determinant | noncompact | strict-root
std::string criterion(const OCertificate& cert);

/// One-line replayable form, e.g. `det d=2 m=(2,0) E=1`.
std::string describe(const OCertificate& cert, const OrbifoldCurve& curve);

/// Re-checks the certificate with the criterion it cites.
bool replay_certificate(const OrbifoldCurve& curve, const CParams& p, const OCertificate& cert,
                        EtaSign sign = EtaSign::S41);

} // namespace orbicat
