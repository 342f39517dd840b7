#include "orbicat/input.hpp"

#include <cctype>
#include <fstream>
#include <regex>
#include <sstream>

namespace orbicat {

InputError::InputError(int line, const std::string& what)
    : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + what : what), line_(line) {}

namespace {

std::string strip(const std::string& s) {
    std::size_t a = 0;
    std::size_t b = s.size();
    while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
    while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
    return s.substr(a, b - a);
}

long parse_int(const std::string& v, int line) {
    Rat r;
    try {
        r = Rat::parse(v);
    } catch (const std::exception& ex) {
        throw InputError(line, ex.what());
    }
    if (!r.is_integer()) throw InputError(line, "expected an integer, got '" + v + "'");
    return to_int64(r.numerator());
}

bool parse_bool(const std::string& v, int line) {
    if (v == "true" || v == "yes" || v == "1") return true;
    if (v == "false" || v == "no" || v == "0") return false;
    throw InputError(line, "expected true or false, got '" + v + "'");
}

std::vector<long> parse_list(const std::string& v, int line) {
    if (v.size() < 2 || v.front() != '[' || v.back() != ']') throw InputError(line, "expected [n1,n2,...]");
    std::vector<long> out;
    std::string body = strip(v.substr(1, v.size() - 2));
    if (body.empty()) return out;
    std::stringstream ss(body);
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(parse_int(strip(item), line));
    return out;
}

template <class T>
void set_once(std::optional<Entry<T>>& slot, T value, int line, const std::string& key) {
    if (slot) throw InputError(line, "duplicate key '" + key + "' (first on line " + std::to_string(slot->line) + ")");
    slot = Entry<T>{std::move(value), line};
}

template <class K, class T>
void insert_once(std::map<K, Entry<T>>& table, K key, T value, int line, const std::string& name) {
    auto [it, fresh] = table.emplace(key, Entry<T>{std::move(value), line});
    if (!fresh) throw InputError(line, "duplicate key '" + name + "' (first on line " + std::to_string(it->second.line) + ")");
}

template <class F>
auto guarded(int line, F&& f) {
    try {
        return f();
    } catch (const InputError&) {
        throw;
    } catch (const std::exception& ex) {
        throw InputError(line, ex.what());
    }
}

int line_of(const ProblemFile& f) { return f.points ? f.points->line : 0; }

} // namespace

ProblemFile parse_problem(std::istream& in) {
    static const std::regex indexed2(R"(^(c|e|mu)\[(\d+)\]\[(\d+)\]$)");
    static const std::regex indexed1(R"(^(eta|xi)\[(\d+)\]$)");
    ProblemFile f;
    std::string raw;
    int line = 0;
    while (std::getline(in, raw)) {
        ++line;
        if (const auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
        const std::string text = strip(raw);
        if (text.empty()) continue;
        const auto eq = text.find('=');
        if (eq == std::string::npos) throw InputError(line, "expected key=value");
        const std::string key = strip(text.substr(0, eq));
        const std::string value = strip(text.substr(eq + 1));
        if (value.empty()) throw InputError(line, "empty value for '" + key + "'");
        std::smatch match;
        if (key == "genus") {
            set_once(f.genus, static_cast<int>(parse_int(value, line)), line, key);
        } else if (key == "compact") {
            set_once(f.compact, parse_bool(value, line), line, key);
        } else if (key == "punctures") {
            set_once(f.punctures, static_cast<int>(parse_int(value, line)), line, key);
        } else if (key == "points") {
            set_once(f.points, parse_list(value, line), line, key);
        } else if (key == "d") {
            set_once(f.d, parse_int(value, line), line, key);
        } else if (key == "alpha") {
            set_once(f.alpha, value, line, key);
        } else if (key == "rank") {
            set_once(f.rank, parse_int(value, line), line, key);
        } else if (key == "mu0") {
            set_once(f.mu0, guarded(line, [&] { return Rat::parse(value); }), line, key);
        } else if (key == "nu") {
            set_once(f.nu, guarded(line, [&] { return Rat::parse(value); }), line, key);
        } else if (key == "spherical") {
            set_once(f.spherical, parse_bool(value, line), line, key);
        } else if (std::regex_match(key, match, indexed2)) {
            const Index2 idx{std::stoul(match[2]), std::stoul(match[3])};
            if (match[1] == "mu")
                insert_once(f.mu, idx, guarded(line, [&] { return Rat::parse(value); }), line, key);
            else
                insert_once(match[1] == "c" ? f.c : f.e, idx, guarded(line, [&] { return CycNum::parse(value); }),
                            line, key);
        } else if (std::regex_match(key, match, indexed1)) {
            const std::size_t idx = std::stoul(match[2]);
            if (match[1] == "eta")
                insert_once(f.eta, idx, guarded(line, [&] { return CycNum::parse(value); }), line, key);
            else
                insert_once(f.xi, idx, guarded(line, [&] { return Rat::parse(value); }), line, key);
        } else {
            throw InputError(line, "unknown key '" + key + "'");
        }
    }
    return f;
}

ProblemFile load_problem(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError(0, "cannot open '" + path + "'");
    return parse_problem(in);
}

OrbifoldCurve curve_from(const ProblemFile& f) {
    if (!f.points) throw InputError(0, "missing key 'points'");
    OrbifoldCurve curve;
    curve.genus = f.genus ? f.genus->value : 0;
    curve.compact = f.compact ? f.compact->value : true;
    curve.punctures = f.punctures ? f.punctures->value : 0;
    curve.orders = f.points->value;
    try {
        curve.validate();
    } catch (const std::invalid_argument& ex) {
        throw InputError(line_of(f), ex.what());
    }
    return curve;
}

namespace {

template <class T>
void check_range(const std::map<Index2, Entry<T>>& table, const std::vector<long>& lengths, const std::string& name) {
    for (const auto& [idx, entry] : table) {
        const auto [i, j] = idx;
        if (i < 1 || i > lengths.size())
            throw InputError(entry.line, name + " point index " + std::to_string(i) + " out of range");
        if (j < 1 || static_cast<long>(j) > lengths[i - 1])
            throw InputError(entry.line, name + " slot " + std::to_string(j) + " out of range 1.." +
                                             std::to_string(lengths[i - 1]));
    }
}

template <class T>
void check_range(const std::map<std::size_t, Entry<T>>& table, std::size_t points, const std::string& name) {
    for (const auto& [i, entry] : table)
        if (i < 1 || i > points)
            throw InputError(entry.line, name + " point index " + std::to_string(i) + " out of range");
}

std::vector<long> minus_one(const std::vector<long>& v) {
    std::vector<long> out;
    for (long n : v) out.push_back(n - 1);
    return out;
}

} // namespace

CParams params_from(const ProblemFile& f, const OrbifoldCurve& curve, EtaSign sign) {
    if (!f.e.empty()) {
        if (!f.c.empty() || !f.eta.empty())
            throw InputError(f.e.begin()->second.line, "give either c/eta or e, not both");
        return c_eta_from_tau(curve, exponents_from(f, curve, sign), sign);
    }
    check_range(f.c, minus_one(curve.orders), "c");
    check_range(f.eta, curve.point_count(), "eta");
    CParams p = CParams::zero(curve);
    for (const auto& [idx, entry] : f.c) p.c(idx.first, idx.second) = entry.value;
    for (const auto& [i, entry] : f.eta) p.eta[i - 1] = entry.value;
    return p;
}

ExponentSet exponents_from(const ProblemFile& f, const OrbifoldCurve& curve, EtaSign sign) {
    if (f.e.empty()) return tau_from_c_eta(curve, params_from(f, curve, sign), sign);
    if (!f.c.empty() || !f.eta.empty()) throw InputError(f.e.begin()->second.line, "give either c/eta or e, not both");
    check_range(f.e, curve.orders, "e");
    ExponentSet out{PointTable(curve.orders), std::nullopt};
    for (std::size_t i = 1; i <= curve.point_count(); ++i)
        for (std::size_t j = 1; j <= static_cast<std::size_t>(curve.orders[i - 1]); ++j) {
            auto it = f.e.find({i, j});
            if (it == f.e.end())
                throw InputError(0, "missing e[" + std::to_string(i) + "][" + std::to_string(j) + "]");
            out.e(i, j) = it->second.value;
        }
    return out;
}

DSInstance ds_instance_from(const ProblemFile& f, EtaSign sign) {
    const OrbifoldCurve curve = curve_from(f);
    if (curve.point_count() == 0) throw InputError(line_of(f), "a Deligne-Simpson instance needs marked points");
    StarQuiver q = StarQuiver::build(curve.orders);
    ExponentSet e = exponents_from(f, curve, sign);
    if (!f.alpha) throw InputError(0, "missing key 'alpha'");
    RootVector alpha = guarded(f.alpha->line, [&] { return q.parse(f.alpha->value); });
    if (f.d && f.d->value != alpha.center())
        throw InputError(f.d->line, "d must equal the center coefficient of alpha");
    DSInstance inst{std::move(q), std::move(e), std::move(alpha)};
    guarded(f.alpha->line, [&] {
        inst.validate();
        return 0;
    });
    return inst;
}

WreathParams wreath_from(const ProblemFile& f, const StarQuiver& q) {
    WreathParams w = WreathParams::zero(q);
    std::vector<long> lengths;
    for (std::size_t i = 1; i <= q.legs(); ++i) lengths.push_back(q.leg_length(i));
    check_range(f.mu, lengths, "mu");
    check_range(f.xi, q.legs(), "xi");
    if (f.rank) w.rank = f.rank->value;
    if (f.mu0) w.mu0 = f.mu0->value;
    if (f.nu) w.nu = f.nu->value;
    if (f.spherical) w.spherical_asserted = f.spherical->value;
    for (const auto& [idx, entry] : f.mu) w.mu[idx.first - 1][idx.second - 1] = entry.value;
    for (const auto& [i, entry] : f.xi) w.xi[i - 1] = entry.value;
    try {
        w.validate(q);
    } catch (const std::invalid_argument& ex) {
        throw InputError(0, ex.what());
    }
    return w;
}

} // namespace orbicat
