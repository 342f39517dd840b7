#include "orbicat/cyclotomic.hpp"

#include "orbicat/linalg.hpp"

#include <cctype>
#include <cmath>
#include <map>
#include <mutex>
#include <numbers>
#include <numeric>
#include <sstream>

namespace orbicat {

namespace {

using Poly = std::vector<Rat>; // lowest degree first

void trim(Poly& p) {
    while (p.size() > 1 && p.back().is_zero()) p.pop_back();
}

bool is_zero_poly(const Poly& p) {
    for (const auto& c : p)
        if (!c.is_zero()) return false;
    return true;
}

Poly poly_from_int(const std::vector<std::int64_t>& p) {
    Poly out;
    out.reserve(p.size());
    for (auto c : p) out.emplace_back(static_cast<long>(c));
    return out;
}

// Quotient and remainder of a by b (b nonzero).
std::pair<Poly, Poly> divmod(Poly a, Poly b) {
    trim(a);
    trim(b);
    if (a.size() < b.size()) return {Poly{Rat(0)}, a};
    Poly q(a.size() - b.size() + 1, Rat(0));
    const Rat lead = b.back();
    for (std::size_t k = a.size(); k-- >= b.size();) {
        if (a[k].is_zero()) continue;
        const Rat f = a[k] / lead;
        const std::size_t shift = k - (b.size() - 1);
        q[shift] = f;
        for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] -= f * b[i];
    }
    a.resize(b.size() - 1 == 0 ? 1 : b.size() - 1);
    trim(a);
    trim(q);
    return {q, a};
}

Poly poly_mul(const Poly& a, const Poly& b) {
    Poly out(a.size() + b.size() - 1, Rat(0));
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i].is_zero()) continue;
        for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
    }
    return out;
}

Poly poly_sub(Poly a, const Poly& b) {
    if (a.size() < b.size()) a.resize(b.size(), Rat(0));
    for (std::size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
    trim(a);
    return a;
}

std::string_view strip(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

long parse_long(std::string_view s, std::string_view whole) {
    const Rat r = Rat::parse(s);
    if (!r.is_integer()) throw std::invalid_argument("expected an integer in '" + std::string(whole) + "'");
    return to_int64(r.numerator());
}

} // namespace

long totient(long n) {
    if (n < 1) throw std::invalid_argument("totient of a non-positive integer");
    long result = n;
    long m = n;
    for (long p = 2; p * p <= m; ++p) {
        if (m % p != 0) continue;
        while (m % p == 0) m /= p;
        result -= result / p;
    }
    if (m > 1) result -= result / m;
    return result;
}

const std::vector<std::int64_t>& cyclotomic_polynomial(long n) {
    if (n < 1) throw std::invalid_argument("cyclotomic polynomial of non-positive order");
    static std::mutex mutex;
    static std::map<long, std::vector<std::int64_t>> cache;
    {
        std::lock_guard lock(mutex);
        if (auto it = cache.find(n); it != cache.end()) return it->second;
    }
    // x^n - 1 divided by every Phi_d with d | n, d < n.
    std::vector<std::int64_t> p(static_cast<std::size_t>(n) + 1, 0);
    p[0] = -1;
    p[static_cast<std::size_t>(n)] = 1;
    for (long d = 1; d < n; ++d) {
        if (n % d != 0) continue;
        const auto& phi = cyclotomic_polynomial(d);
        // exact division by a monic polynomial
        std::vector<std::int64_t> q(p.size() - phi.size() + 1, 0);
        for (std::size_t k = p.size(); k-- >= phi.size();) {
            const std::int64_t f = p[k];
            if (f == 0) continue;
            const std::size_t shift = k - (phi.size() - 1);
            q[shift] = f;
            for (std::size_t i = 0; i < phi.size(); ++i) p[shift + i] -= f * phi[i];
        }
        p = std::move(q);
    }
    std::lock_guard lock(mutex);
    return cache.emplace(n, std::move(p)).first->second;
}

CycNum CycNum::reduce(long n, std::vector<Rat> poly) {
    // fold exponents modulo n, then divide by Phi_n
    if (static_cast<long>(poly.size()) > n) {
        for (std::size_t k = static_cast<std::size_t>(n); k < poly.size(); ++k)
            poly[k % static_cast<std::size_t>(n)] += poly[k];
        poly.resize(static_cast<std::size_t>(n));
    }
    const auto& phi = cyclotomic_polynomial(n);
    const std::size_t deg = phi.size() - 1;
    for (std::size_t k = poly.size(); k-- > deg;) {
        if (poly[k].is_zero()) continue;
        const Rat f = poly[k];
        const std::size_t shift = k - deg;
        for (std::size_t i = 0; i <= deg; ++i)
            if (phi[i] != 0) poly[shift + i] -= f * Rat(static_cast<long>(phi[i]));
    }
    poly.resize(deg, Rat(0));
    return CycNum(n, std::move(poly));
}

CycNum CycNum::rational(const Rat& r, long order) {
    if (order < 1) throw std::invalid_argument("cyclotomic order must be positive");
    std::vector<Rat> c(static_cast<std::size_t>(totient(order)), Rat(0));
    c[0] = r;
    return CycNum(order, std::move(c));
}

CycNum CycNum::root_of_unity(long n, long j) {
    if (n < 1) throw std::invalid_argument("root of unity of non-positive order");
    long k = j % n;
    if (k < 0) k += n;
    std::vector<Rat> poly(static_cast<std::size_t>(k) + 1, Rat(0));
    poly[static_cast<std::size_t>(k)] = Rat(1);
    return reduce(n, std::move(poly));
}

CycNum CycNum::from_terms(long n, std::span<const std::pair<long, Rat>> terms) {
    if (n < 1) throw std::invalid_argument("cyclotomic order must be positive");
    std::vector<Rat> poly(static_cast<std::size_t>(n), Rat(0));
    for (const auto& [k, coeff] : terms) {
        long e = k % n;
        if (e < 0) e += n;
        poly[static_cast<std::size_t>(e)] += coeff;
    }
    return reduce(n, std::move(poly));
}

CycNum CycNum::parse(std::string_view text) {
    const std::string_view s = strip(text);
    if (s.rfind("cyc", 0) != 0) return CycNum(Rat::parse(s));
    const auto open = s.find('(');
    const auto close = s.find(')');
    const auto lb = s.find('[');
    const auto rb = s.rfind(']');
    if (open == std::string_view::npos || close == std::string_view::npos || lb == std::string_view::npos ||
        rb == std::string_view::npos || !(open < close && close < lb && lb < rb) ||
        !strip(s.substr(3, open - 3)).empty() || !strip(s.substr(close + 1, lb - close - 1)).empty() ||
        rb + 1 != s.size())
        throw std::invalid_argument("malformed cyclotomic literal '" + std::string(text) + "'");
    const long n = parse_long(s.substr(open + 1, close - open - 1), text);
    if (n < 1) throw std::invalid_argument("cyclotomic order must be positive in '" + std::string(text) + "'");
    std::vector<std::pair<long, Rat>> terms;
    std::string_view body = strip(s.substr(lb + 1, rb - lb - 1));
    while (!body.empty()) {
        const auto comma = body.find(',');
        const std::string_view term = strip(body.substr(0, comma));
        const auto colon = term.find(':');
        if (colon == std::string_view::npos)
            throw std::invalid_argument("cyclotomic term without ':' in '" + std::string(text) + "'");
        terms.emplace_back(parse_long(term.substr(0, colon), text), Rat::parse(term.substr(colon + 1)));
        if (comma == std::string_view::npos) break;
        body = strip(body.substr(comma + 1));
        if (body.empty()) throw std::invalid_argument("trailing ',' in '" + std::string(text) + "'");
    }
    return from_terms(n, terms);
}

bool CycNum::is_zero() const {
    for (const auto& c : coeffs_)
        if (!c.is_zero()) return false;
    return true;
}

bool CycNum::is_rational() const {
    for (std::size_t k = 1; k < coeffs_.size(); ++k)
        if (!coeffs_[k].is_zero()) return false;
    return true;
}

CycNum CycNum::promoted(long target) const {
    if (target < 1 || target % order_ != 0)
        throw std::invalid_argument("promotion target must be a multiple of the order");
    if (target == order_) return *this;
    const std::size_t step = static_cast<std::size_t>(target / order_);
    std::vector<Rat> poly(static_cast<std::size_t>(target), Rat(0));
    for (std::size_t k = 0; k < coeffs_.size(); ++k) poly[k * step] = coeffs_[k];
    return reduce(target, std::move(poly));
}

CycNum CycNum::minimized() const {
    if (is_rational()) return rational(constant(), 1);
    for (long d = 2; d < order_; ++d) {
        if (order_ % d != 0) continue;
        const std::size_t dim = static_cast<std::size_t>(totient(d));
        Matrix<Rat> basis(coeffs_.size(), dim);
        for (std::size_t k = 0; k < dim; ++k) {
            const auto col = root_of_unity(d, static_cast<long>(k)).promoted(order_);
            for (std::size_t r = 0; r < coeffs_.size(); ++r) basis(r, k) = col.coeffs_[r];
        }
        if (auto x = solve(basis, coeffs_)) return CycNum(d, std::move(*x));
    }
    return *this;
}

CycNum CycNum::reduced_mod_integers() const {
    CycNum out = *this;
    out.coeffs_[0] = coeffs_[0].fractional_part();
    return out;
}

CycNum CycNum::inverse() const {
    if (is_zero()) throw std::domain_error("division by zero in Q(zeta)");
    // extended Euclid: track s with s * value == r (mod Phi_n)
    Poly r0 = poly_from_int(cyclotomic_polynomial(order_));
    Poly r1(coeffs_.begin(), coeffs_.end());
    trim(r1);
    Poly s0{Rat(0)};
    Poly s1{Rat(1)};
    while (!(r1.size() == 1)) {
        auto [q, r] = divmod(r0, r1);
        Poly s = poly_sub(s0, poly_mul(q, s1));
        r0 = std::move(r1);
        r1 = std::move(r);
        s0 = std::move(s1);
        s1 = std::move(s);
        if (is_zero_poly(r1)) throw std::logic_error("cyclotomic polynomial is not irreducible");
    }
    const Rat c = r1[0];
    for (auto& x : s1) x /= c;
    return reduce(order_, std::move(s1));
}

std::complex<double> CycNum::to_complex() const {
    std::complex<double> z(0.0, 0.0);
    for (std::size_t k = 0; k < coeffs_.size(); ++k) {
        if (coeffs_[k].is_zero()) continue;
        const double angle = 2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(order_);
        z += coeffs_[k].to_double() * std::polar(1.0, angle);
    }
    return z;
}

std::string CycNum::to_string() const {
    if (is_rational()) return constant().to_string();
    std::ostringstream os;
    os << "cyc(" << order_ << ")[";
    bool first = true;
    for (std::size_t k = 0; k < coeffs_.size(); ++k) {
        if (coeffs_[k].is_zero()) continue;
        if (!first) os << ", ";
        os << k << ':' << coeffs_[k];
        first = false;
    }
    os << ']';
    return os.str();
}

CycNum CycNum::operator-() const {
    CycNum out = *this;
    for (auto& c : out.coeffs_) c = -c;
    return out;
}

CycNum& CycNum::operator+=(const CycNum& o) {
    const long n = lcm(order_, o.order_);
    if (n != order_) *this = promoted(n);
    const CycNum rhs = o.order_ == n ? o : o.promoted(n);
    for (std::size_t k = 0; k < coeffs_.size(); ++k) coeffs_[k] += rhs.coeffs_[k];
    return *this;
}

CycNum& CycNum::operator-=(const CycNum& o) { return *this += -o; }

CycNum& CycNum::operator*=(const CycNum& o) {
    const long n = lcm(order_, o.order_);
    const CycNum a = order_ == n ? *this : promoted(n);
    const CycNum b = o.order_ == n ? o : o.promoted(n);
    *this = reduce(n, poly_mul(a.coeffs_, b.coeffs_));
    return *this;
}

CycNum& CycNum::operator/=(const CycNum& o) {
    const long n = lcm(order_, o.order_);
    const CycNum b = o.order_ == n ? o : o.promoted(n);
    return *this *= b.inverse();
}

bool operator==(const CycNum& a, const CycNum& b) {
    if (a.order_ == b.order_) return a.coeffs_ == b.coeffs_;
    const long n = lcm(a.order_, b.order_);
    return a.promoted(n).coeffs_ == b.promoted(n).coeffs_;
}

std::size_t CycNum::hash() const {
    // hash the conductor form so that == implies equal hashes
    const CycNum m = minimized();
    std::size_t h = std::hash<long>{}(m.order_);
    for (const auto& c : m.coeffs_) h = h * 31 + c.hash();
    return h;
}

std::ostream& operator<<(std::ostream& os, const CycNum& x) { return os << x.to_string(); }

Classification classify(const CycNum& x) {
    if (!x.is_rational()) return {CycClass::Irrational, Rat(0)};
    const Rat& v = x.constant();
    return {v.is_integer() ? CycClass::RationalInteger : CycClass::Rational, v};
}

long common_order(std::span<const CycNum> values) {
    long n = 1;
    for (const auto& v : values) n = lcm(n, v.order());
    return n;
}

} // namespace orbicat
