#include "orbicat/star_quiver.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <limits>
#include <numeric>
#include <sstream>
#include <unordered_set>

namespace orbicat {

std::int64_t RootVector::height() const { return std::accumulate(coeffs_.begin(), coeffs_.end(), std::int64_t{0}); }

bool RootVector::is_zero() const {
    return std::all_of(coeffs_.begin(), coeffs_.end(), [](auto c) { return c == 0; });
}

bool RootVector::is_positive() const {
    return !is_zero() && std::all_of(coeffs_.begin(), coeffs_.end(), [](auto c) { return c >= 0; });
}

bool RootVector::dominated_by(const RootVector& box) const {
    if (box.size() != size()) throw std::invalid_argument("root vectors of different sizes");
    for (std::size_t v = 0; v < size(); ++v)
        if (coeffs_[v] > box.coeffs_[v]) return false;
    return true;
}

RootVector& RootVector::operator+=(const RootVector& o) {
    if (o.size() != size()) throw std::invalid_argument("root vectors of different sizes");
    for (std::size_t v = 0; v < size(); ++v) coeffs_[v] += o.coeffs_[v];
    return *this;
}

RootVector& RootVector::operator-=(const RootVector& o) {
    if (o.size() != size()) throw std::invalid_argument("root vectors of different sizes");
    for (std::size_t v = 0; v < size(); ++v) coeffs_[v] -= o.coeffs_[v];
    return *this;
}

RootVector operator*(std::int64_t k, RootVector a) {
    for (auto& c : a.coeffs_) c *= k;
    return a;
}

bool RootOrder::operator()(const RootVector& a, const RootVector& b) const {
    const auto ha = a.height();
    const auto hb = b.height();
    if (ha != hb) return ha < hb;
    return a.coeffs() < b.coeffs();
}

std::size_t RootVectorHash::operator()(const RootVector& v) const noexcept {
    std::size_t h = v.size();
    for (auto c : v.coeffs()) h = h * 1000003u ^ std::hash<std::int64_t>{}(c);
    return h;
}

StarQuiver StarQuiver::build(std::vector<long> orders) {
    if (orders.empty()) throw std::invalid_argument("a star quiver needs at least one leg");
    for (long n : orders)
        if (n < 2) throw std::invalid_argument("stabilizer orders must be at least 2");
    StarQuiver q;
    q.orders_ = std::move(orders);
    std::size_t total = 1;
    for (long n : q.orders_) total += static_cast<std::size_t>(n - 1);
    q.neighbors_.assign(total, {});
    std::size_t next = 1;
    for (long n : q.orders_) {
        q.leg_start_.push_back(next);
        std::size_t prev = 0;
        for (long j = 1; j < n; ++j) {
            q.neighbors_[prev].push_back(next);
            q.neighbors_[next].push_back(prev);
            prev = next++;
        }
    }
    return q;
}

std::size_t StarQuiver::vertex(std::size_t i, std::size_t j) const {
    if (i < 1 || i > legs()) throw std::out_of_range("leg index out of range");
    if (j < 1 || static_cast<long>(j) > leg_length(i)) throw std::out_of_range("leg position out of range");
    return leg_start_[i - 1] + j - 1;
}

std::int64_t StarQuiver::coefficient(const RootVector& alpha, std::size_t i, std::size_t j) const {
    if (j == 0) return alpha.center();
    if (static_cast<long>(j) == orders_.at(i - 1)) return 0;
    return alpha[vertex(i, j)];
}

Matrix<Rat> StarQuiver::cartan_matrix() const {
    Matrix<Rat> a(vertex_count(), vertex_count());
    for (std::size_t v = 0; v < vertex_count(); ++v) {
        a(v, v) = Rat(2);
        for (auto u : neighbors_[v]) a(v, u) = Rat(-1);
    }
    return a;
}

std::vector<std::int64_t> StarQuiver::pairing(const RootVector& alpha) const {
    if (alpha.size() != vertex_count()) throw std::invalid_argument("root vector does not match quiver");
    std::vector<std::int64_t> out(vertex_count());
    for (std::size_t v = 0; v < vertex_count(); ++v) {
        std::int64_t s = 2 * alpha[v];
        for (auto u : neighbors_[v]) s -= alpha[u];
        out[v] = s;
    }
    return out;
}

std::int64_t StarQuiver::tits_form(const RootVector& alpha) const {
    const auto p = pairing(alpha);
    std::int64_t s = 0;
    for (std::size_t v = 0; v < vertex_count(); ++v) s += alpha[v] * p[v];
    return s / 2;
}

RootVector StarQuiver::simple_root(std::size_t v) const {
    RootVector r(vertex_count());
    r[v] = 1;
    return r;
}

RootVector StarQuiver::reflect(const RootVector& alpha, std::size_t v) const {
    std::int64_t s = 2 * alpha[v];
    for (auto u : neighbors_[v]) s -= alpha[u];
    RootVector out = alpha;
    out[v] -= s;
    return out;
}

std::string StarQuiver::format(const RootVector& alpha) const {
    if (alpha.size() != vertex_count()) throw std::invalid_argument("root vector does not match quiver");
    std::ostringstream os;
    os << '[' << alpha.center() << ';';
    for (std::size_t i = 1; i <= legs(); ++i) {
        if (i > 1) os << '|';
        for (long j = 1; j <= leg_length(i); ++j) os << (j > 1 ? " " : "") << alpha[vertex(i, static_cast<std::size_t>(j))];
    }
    os << ']';
    return os.str();
}

RootVector StarQuiver::parse(std::string_view text) const {
    const auto fail = [&](const std::string& why) {
        throw std::invalid_argument("bad root vector '" + std::string(text) + "': " + why);
    };
    std::string s;
    for (char ch : text) s.push_back(ch == ',' ? ' ' : ch);
    const auto lb = s.find('[');
    const auto rb = s.rfind(']');
    if (lb == std::string::npos || rb == std::string::npos || rb < lb) fail("expected [...]");
    for (std::size_t k = 0; k < s.size(); ++k)
        if ((k < lb || k > rb) && !std::isspace(static_cast<unsigned char>(s[k]))) fail("text outside brackets");
    const std::string body = s.substr(lb + 1, rb - lb - 1);
    const auto semi = body.find(';');
    if (semi == std::string::npos) fail("missing ';' after the center coefficient");

    const auto read_ints = [&](const std::string& part) {
        std::istringstream is(part);
        std::vector<std::int64_t> vals;
        std::string tok;
        while (is >> tok) {
            std::size_t used = 0;
            long long v = 0;
            try {
                v = std::stoll(tok, &used);
            } catch (const std::exception&) {
                fail("not an integer: '" + tok + "'");
            }
            if (used != tok.size()) fail("not an integer: '" + tok + "'");
            vals.push_back(v);
        }
        return vals;
    };

    RootVector out(vertex_count());
    const auto center = read_ints(body.substr(0, semi));
    if (center.size() != 1) fail("exactly one center coefficient expected");
    out[0] = center[0];
    std::vector<std::string> legs_text;
    std::string rest = body.substr(semi + 1);
    std::size_t start = 0;
    while (true) {
        const auto bar = rest.find('|', start);
        legs_text.push_back(rest.substr(start, bar == std::string::npos ? std::string::npos : bar - start));
        if (bar == std::string::npos) break;
        start = bar + 1;
    }
    if (legs_text.size() != legs()) fail("expected " + std::to_string(legs()) + " legs");
    for (std::size_t i = 1; i <= legs(); ++i) {
        const auto vals = read_ints(legs_text[i - 1]);
        if (static_cast<long>(vals.size()) != leg_length(i))
            fail("leg " + std::to_string(i) + " needs " + std::to_string(leg_length(i)) + " entries");
        for (std::size_t j = 1; j <= vals.size(); ++j) out[vertex(i, j)] = vals[j - 1];
    }
    return out;
}

std::string to_string(QuiverType t) {
    switch (t) {
    case QuiverType::Finite: return "finite";
    case QuiverType::Affine: return "affine";
    case QuiverType::Indefinite: return "indefinite";
    }
    return "?";
}

std::string to_string(RootKind k) { return k == RootKind::Real ? "real" : "imaginary"; }

namespace {

// Primitive integer vector on the ray of a rational kernel vector, first nonzero entry positive.
RootVector primitive(const std::vector<Rat>& v) {
    Integer den = 1;
    for (const auto& x : v) den = lcm(den, x.denominator());
    std::vector<Integer> ints;
    Integer g = 0;
    for (const auto& x : v) {
        ints.push_back(x.numerator() * (den / x.denominator()));
        g = gcd(g, ints.back());
    }
    RootVector out(v.size());
    for (std::size_t k = 0; k < v.size(); ++k) out[k] = to_int64(ints[k] / g);
    return out;
}

std::optional<RootVector> positive_kernel_generator(const StarQuiver& q) {
    const auto kernel = kernel_basis(q.cartan_matrix());
    if (kernel.size() != 1) return std::nullopt;
    RootVector v = primitive(kernel[0]);
    if (v[0] < 0) v = std::int64_t{-1} * v;
    for (std::size_t k = 0; k < v.size(); ++k)
        if (v[k] <= 0) return std::nullopt;
    return v;
}

// Enumerates the fundamental set: alpha > 0 with (A alpha)_v <= 0 everywhere.
// Along a leg this forces a convex sequence falling from alpha_0 to 0, so the
// center is positive, the support connected and every leg entry <= alpha_0.
template <class Allow>
void fundamental_set(const StarQuiver& q, std::int64_t max_center, std::int64_t max_height, const Allow& allow,
                     std::vector<RootVector>& out) {
    const std::size_t m = q.legs();
    for (std::int64_t c = 1; c <= max_center; ++c) {
        // candidate fillings per leg: (entries, first entry, sum)
        struct Leg {
            std::vector<std::int64_t> entries;
            std::int64_t first;
            std::int64_t sum;
        };
        std::vector<std::vector<Leg>> per_leg(m);
        for (std::size_t i = 1; i <= m; ++i) {
            const auto len = static_cast<std::size_t>(q.leg_length(i));
            std::vector<std::int64_t> seq(len + 2, 0);
            seq[0] = c;
            std::function<void(std::size_t, std::int64_t)> extend = [&](std::size_t j, std::int64_t sum) {
                if (j == len + 1) {
                    // last leg vertex also sees the virtual zero beyond the end
                    if (2 * seq[len] > seq[len - 1]) return;
                    per_leg[i - 1].push_back({std::vector<std::int64_t>(seq.begin() + 1, seq.begin() + 1 + static_cast<std::ptrdiff_t>(len)), seq[1], sum});
                    return;
                }
                const std::int64_t hi = j == 1 ? c : seq[j - 1];
                const std::int64_t lo = j == 1 ? 0 : std::max<std::int64_t>(0, 2 * seq[j - 1] - seq[j - 2]);
                for (std::int64_t a = lo; a <= hi; ++a) {
                    if (c + sum + a > max_height) break;
                    seq[j] = a;
                    extend(j + 1, sum + a);
                }
            };
            extend(1, 0);
        }
        RootVector cur(q.vertex_count());
        cur[0] = c;
        std::function<void(std::size_t, std::int64_t, std::int64_t)> combine = [&](std::size_t i, std::int64_t height,
                                                                                   std::int64_t firsts) {
            if (i > m) {
                if (2 * c <= firsts && allow(cur)) out.push_back(cur);
                return;
            }
            for (const auto& leg : per_leg[i - 1]) {
                if (height + leg.sum > max_height) continue;
                for (std::size_t j = 1; j <= leg.entries.size(); ++j) cur[q.vertex(i, j)] = leg.entries[j - 1];
                combine(i + 1, height + leg.sum, firsts + leg.first);
            }
        };
        combine(1, c, 0);
    }
}

// Upward closure under simple reflections. Every positive root descends to a
// simple root or a fundamental-set element through roots of smaller height,
// each coordinate only decreasing, so any region that is closed downward is
// covered by growing seeds inside the region.
template <class Allow>
std::vector<Root> close_upward(const StarQuiver& q, std::vector<Root> seeds, const Allow& allow) {
    std::unordered_set<RootVector, RootVectorHash> seen;
    std::vector<Root> found;
    std::vector<Root> stack;
    for (auto& s : seeds)
        if (allow(s.vector) && seen.insert(s.vector).second) stack.push_back(s);
    while (!stack.empty()) {
        Root r = std::move(stack.back());
        stack.pop_back();
        const auto p = q.pairing(r.vector);
        for (std::size_t v = 0; v < q.vertex_count(); ++v) {
            if (p[v] >= 0) continue;
            RootVector next = r.vector;
            next[v] -= p[v];
            if (!allow(next) || !seen.insert(next).second) continue;
            stack.push_back({std::move(next), r.kind});
        }
        found.push_back(std::move(r));
    }
    std::sort(found.begin(), found.end(), [](const Root& a, const Root& b) { return RootOrder{}(a.vector, b.vector); });
    return found;
}

std::vector<Root> simple_seeds(const StarQuiver& q) {
    std::vector<Root> seeds;
    for (std::size_t v = 0; v < q.vertex_count(); ++v) seeds.push_back({q.simple_root(v), RootKind::Real});
    return seeds;
}

} // namespace

QuiverType classify(const StarQuiver& q) {
    const auto minors = leading_principal_minors(q.cartan_matrix());
    if (std::all_of(minors.begin(), minors.end(), [](const Rat& x) { return x.sign() > 0; })) return QuiverType::Finite;
    if (positive_kernel_generator(q)) return QuiverType::Affine;
    return QuiverType::Indefinite;
}

RootVector delta(const StarQuiver& q) {
    auto v = positive_kernel_generator(q);
    if (!v || classify(q) != QuiverType::Affine) throw NotAffine("delta is defined only for affine quivers");
    return *v;
}

std::vector<Root> positive_roots_up_to(const StarQuiver& q, std::int64_t height_bound) {
    if (height_bound < 1) throw std::invalid_argument("height bound must be positive");
    const auto allow = [&](const RootVector& v) { return v.height() <= height_bound; };
    auto seeds = simple_seeds(q);
    if (classify(q) != QuiverType::Finite) {
        std::vector<RootVector> fundamental;
        fundamental_set(q, height_bound, height_bound, allow, fundamental);
        for (auto& f : fundamental) seeds.push_back({std::move(f), RootKind::Imaginary});
    }
    return close_upward(q, std::move(seeds), allow);
}

std::vector<Root> positive_roots_in_box(const StarQuiver& q, const RootVector& box) {
    if (box.size() != q.vertex_count()) throw std::invalid_argument("box does not match quiver");
    const auto allow = [&](const RootVector& v) { return v.dominated_by(box); };
    auto seeds = simple_seeds(q);
    if (box.center() >= 1 && classify(q) != QuiverType::Finite) {
        std::vector<RootVector> fundamental;
        fundamental_set(q, box.center(), box.height(), allow, fundamental);
        for (auto& f : fundamental) seeds.push_back({std::move(f), RootKind::Imaginary});
    }
    return close_upward(q, std::move(seeds), allow);
}

std::vector<Root> finite_positive_roots(const StarQuiver& q) {
    if (classify(q) != QuiverType::Finite) throw std::invalid_argument("root system is infinite");
    return close_upward(q, simple_seeds(q), [](const RootVector&) { return true; });
}

RootTest is_root(const StarQuiver& q, const RootVector& alpha) {
    if (alpha.size() != q.vertex_count()) throw std::invalid_argument("root vector does not match quiver");
    if (alpha.is_zero()) return RootTest::NotRoot;
    RootVector cur = alpha;
    if (!cur.is_positive()) {
        cur = std::int64_t{-1} * cur;
        if (!cur.is_positive()) return RootTest::NotRoot;
    }
    while (true) {
        if (cur.height() == 1) return RootTest::Real;
        const auto p = q.pairing(cur);
        const auto v = static_cast<std::size_t>(std::find_if(p.begin(), p.end(), [](auto x) { return x > 0; }) - p.begin());
        if (v == p.size()) {
            // fundamental chamber: a root iff the support is connected
            std::vector<bool> in(q.vertex_count());
            std::size_t support = 0;
            for (std::size_t u = 0; u < q.vertex_count(); ++u)
                if ((in[u] = cur[u] != 0)) ++support;
            std::size_t start = 0;
            while (!in[start]) ++start;
            std::vector<bool> reached(q.vertex_count(), false);
            std::vector<std::size_t> todo{start};
            reached[start] = true;
            std::size_t count = 0;
            while (!todo.empty()) {
                const auto u = todo.back();
                todo.pop_back();
                ++count;
                for (auto w : q.neighbors(u))
                    if (in[w] && !reached[w]) {
                        reached[w] = true;
                        todo.push_back(w);
                    }
            }
            return count == support ? RootTest::Imaginary : RootTest::NotRoot;
        }
        cur[v] -= p[v];
        if (cur[v] < 0) return RootTest::NotRoot;
    }
}

} // namespace orbicat
