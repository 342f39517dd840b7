#include "orbicat/rational.hpp"

#include <cctype>
#include <numeric>

namespace orbicat {

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

Integer parse_integer(std::string_view s, std::string_view whole) {
    s = trim(s);
    std::size_t start = 0;
    if (!s.empty() && (s[0] == '+' || s[0] == '-')) start = 1;
    if (start == s.size())
        throw std::invalid_argument("malformed rational '" + std::string(whole) + "'");
    for (std::size_t i = start; i < s.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(s[i])))
            throw std::invalid_argument("malformed rational '" + std::string(whole) + "'");
    std::string digits(s[0] == '+' ? s.substr(1) : s);
    return Integer(digits, 10);
}

} // namespace

Rat::Rat(const Integer& num, const Integer& den) {
    if (den == 0) throw std::domain_error("rational with zero denominator");
    value_ = mpq_class(num, den);
    value_.canonicalize();
}

Rat Rat::parse(std::string_view text) {
    const std::string_view s = trim(text);
    const auto slash = s.find('/');
    if (slash == std::string_view::npos) return Rat(parse_integer(s, text));
    const Integer num = parse_integer(s.substr(0, slash), text);
    const Integer den = parse_integer(s.substr(slash + 1), text);
    if (den == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
    return Rat(num, den);
}

Rat& Rat::operator/=(const Rat& o) {
    if (o.is_zero()) throw std::domain_error("rational division by zero");
    value_ /= o.value_;
    return *this;
}

Integer Rat::floor() const {
    Integer q;
    mpz_fdiv_q(q.get_mpz_t(), value_.get_num_mpz_t(), value_.get_den_mpz_t());
    return q;
}

Rat Rat::fractional_part() const { return *this - Rat(floor()); }

std::string Rat::to_string() const {
    if (is_integer()) return value_.get_num().get_str();
    return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

std::size_t Rat::hash() const {
    const std::size_t h1 = mpz_get_ui(value_.get_num_mpz_t()) ^ (sign() < 0 ? 0x9e3779b97f4a7c15ULL : 0);
    const std::size_t h2 = mpz_get_ui(value_.get_den_mpz_t());
    return h1 * 1000003u ^ h2;
}

Integer gcd(const Integer& a, const Integer& b) {
    Integer g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return g;
}

Integer lcm(const Integer& a, const Integer& b) {
    Integer l;
    mpz_lcm(l.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return l;
}

long lcm(long a, long b) { return std::lcm(a, b); }

std::int64_t to_int64(const Integer& v) {
    if (!mpz_fits_slong_p(v.get_mpz_t())) throw std::overflow_error("integer exceeds 64 bits");
    return mpz_get_si(v.get_mpz_t());
}

} // namespace orbicat
