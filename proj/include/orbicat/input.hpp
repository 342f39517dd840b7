#pragma once

#include "orbicat/deligne_simpson.hpp"
#include "orbicat/gdaha.hpp"
#include "orbicat/orbifold.hpp"

#include <istream>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace orbicat {

/// Malformed or inconsistent input; `line` is 0 when no single line is at fault.
class InputError : public std::runtime_error {
public:
    InputError(int line, const std::string& what);
    int line() const { return line_; }

private:
    int line_;
};

template <class T>
struct Entry {
    T value;
    int line;
};

using Index2 = std::pair<std::size_t, std::size_t>;

/// One `key=value` file shared by every command. Blank lines and `#`
/// comments are ignored; unknown or repeated keys are rejected.
///
///   genus= compact= punctures= points=[n1,n2,...]
///   c[i][j]= eta[i]= e[i][j]=          (cyclotomic literals)
///   d= alpha=[a0; a11 ...| a21 ...]
///   rank= mu0= mu[i][p]= nu= xi[i]= spherical=
struct ProblemFile {
    std::optional<Entry<int>> genus;
    std::optional<Entry<bool>> compact;
    std::optional<Entry<int>> punctures;
    std::optional<Entry<std::vector<long>>> points;
    std::map<Index2, Entry<CycNum>> c;
    std::map<std::size_t, Entry<CycNum>> eta;
    std::map<Index2, Entry<CycNum>> e;
    std::optional<Entry<long>> d;
    std::optional<Entry<std::string>> alpha;
    std::optional<Entry<long>> rank;
    std::optional<Entry<Rat>> mu0;
    std::map<Index2, Entry<Rat>> mu;
    std::optional<Entry<Rat>> nu;
    std::map<std::size_t, Entry<Rat>> xi;
    std::optional<Entry<bool>> spherical;
};

ProblemFile parse_problem(std::istream& in);
ProblemFile load_problem(const std::string& path);

OrbifoldCurve curve_from(const ProblemFile& f);
/// c/eta as written (missing entries are zero), or recovered from e[i][j].
CParams params_from(const ProblemFile& f, const OrbifoldCurve& curve, EtaSign sign);
/// e[i][j] as written (all entries required), or mapped from c/eta.
ExponentSet exponents_from(const ProblemFile& f, const OrbifoldCurve& curve, EtaSign sign);
DSInstance ds_instance_from(const ProblemFile& f, EtaSign sign);
WreathParams wreath_from(const ProblemFile& f, const StarQuiver& q);

} // namespace orbicat
