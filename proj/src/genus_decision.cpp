#include "orbicat/genus_decision.hpp"

#include <algorithm>
#include <functional>
#include <optional>
#include <sstream>
#include <unordered_set>

namespace orbicat {

long MultiplicityVector::rank(std::size_t i, std::size_t j) const {
    const auto& row = m.at(i - 1);
    long r = d;
    for (std::size_t k = 0; k < j; ++k) r -= row.at(k);
    return r;
}

bool MultiplicityVector::consistent_with(const ExponentSet& e) const {
    if (d < 1 || m.size() != e.e.points()) return false;
    for (std::size_t i = 1; i <= m.size(); ++i) {
        const auto& row = m[i - 1];
        if (row.size() != e.e.slots(i)) return false;
        long sum = 0;
        for (long x : row) {
            if (x < 0) return false;
            sum += x;
        }
        if (sum != d) return false;
    }
    return true;
}

std::string MultiplicityVector::to_string() const {
    std::ostringstream os;
    os << '(';
    for (std::size_t i = 0; i < m.size(); ++i) {
        if (i) os << '|';
        for (std::size_t j = 0; j < m[i].size(); ++j) os << (j ? "," : "") << m[i][j];
    }
    os << ')';
    return os.str();
}

CycNum determinant_exponent(const ExponentSet& e, const MultiplicityVector& mv) {
    if (!mv.consistent_with(e)) throw std::invalid_argument("multiplicity vector does not match the exponent table");
    CycNum sum(0);
    for (std::size_t i = 1; i <= mv.m.size(); ++i)
        for (std::size_t j = 1; j <= mv.m[i - 1].size(); ++j)
            if (const long k = mv.m[i - 1][j - 1]; k != 0) sum += CycNum(k) * e.e(i, j);
    return sum;
}

bool det_condition(const ExponentSet& e, const MultiplicityVector& mv) {
    return is_rational_integer(determinant_exponent(e, mv));
}

namespace {

// Exponents modulo Z as integer residues mod L (all exponents rational).
struct ResidueKeys {
    using Key = long;
    struct Hash {
        std::size_t operator()(long k) const noexcept { return std::hash<long>{}(k); }
    };
    long modulus;
    std::vector<std::vector<long>> value; // value[i][j]

    explicit ResidueKeys(const ExponentSet& e) {
        Integer l = 1;
        for (std::size_t i = 1; i <= e.e.points(); ++i)
            for (const auto& x : e.e.row(i)) l = lcm(l, x.constant().denominator());
        modulus = to_int64(l);
        for (std::size_t i = 1; i <= e.e.points(); ++i) {
            value.emplace_back();
            for (const auto& x : e.e.row(i)) {
                const Rat scaled = x.constant().fractional_part() * Rat(l);
                value.back().push_back(to_int64(scaled.numerator()));
            }
        }
    }
    Key zero() const { return 0; }
    Key add(Key a, Key b) const { return (a + b) % modulus; }
    Key negate(Key a) const { return (modulus - a) % modulus; }
    Key point_sum(std::size_t i, const std::vector<long>& m) const {
        long s = 0;
        for (std::size_t j = 0; j < m.size(); ++j) s = (s + (m[j] % modulus) * value[i][j]) % modulus;
        return s;
    }
};

// Exact exponents at one common order N, every coordinate scaled by the lcm L
// of their denominators: integer vectors whose constant entry is kept mod L.
// The value is in Z iff the vector is zero.
struct LatticeKeys {
    using Key = std::vector<std::int64_t>;
    struct Hash {
        std::size_t operator()(const Key& k) const noexcept {
            std::size_t h = 0;
            for (auto x : k) h = h * 1000003u ^ std::hash<std::int64_t>{}(x);
            return h;
        }
    };
    std::int64_t modulus = 1;
    std::size_t dim = 1;
    std::vector<std::vector<Key>> value;

    // Throws std::overflow_error when sums over d_max terms could leave 62 bits.
    LatticeKeys(const ExponentSet& e, long d_max) {
        long order = 1;
        for (std::size_t i = 1; i <= e.e.points(); ++i) order = lcm(order, common_order(e.e.row(i)));
        Integer l = 1;
        std::vector<std::vector<CycNum>> lifted;
        for (std::size_t i = 1; i <= e.e.points(); ++i) {
            lifted.emplace_back();
            for (const auto& x : e.e.row(i)) {
                lifted.back().push_back(x.promoted(order).reduced_mod_integers());
                for (const auto& c : lifted.back().back().coeffs()) l = lcm(l, c.denominator());
            }
        }
        modulus = to_int64(l);
        dim = static_cast<std::size_t>(totient(order));
        Integer bound = 0;
        for (auto& row : lifted) {
            value.emplace_back();
            for (auto& x : row) {
                Key k;
                for (const auto& c : x.coeffs()) {
                    const Integer scaled = (c * Rat(l)).numerator();
                    bound += abs(scaled);
                    k.push_back(to_int64(scaled));
                }
                value.back().push_back(std::move(k));
            }
        }
        if (bound * d_max + l >= (Integer(1) << 62)) throw std::overflow_error("lattice keys overflow");
    }
    Key zero() const { return Key(dim, 0); }
    Key add(const Key& a, const Key& b) const {
        Key s(dim);
        for (std::size_t c = 0; c < dim; ++c) s[c] = a[c] + b[c];
        s[0] %= modulus;
        return s;
    }
    Key negate(const Key& a) const {
        Key s(dim);
        for (std::size_t c = 0; c < dim; ++c) s[c] = -a[c];
        s[0] = ((s[0] % modulus) + modulus) % modulus;
        return s;
    }
    Key point_sum(std::size_t i, const std::vector<long>& m) const {
        Key s = zero();
        for (std::size_t j = 0; j < m.size(); ++j)
            for (std::size_t c = 0; c < dim; ++c) s[c] += m[j] * value[i][j][c];
        s[0] = ((s[0] % modulus) + modulus) % modulus;
        return s;
    }
};

// Fallback for coefficients too large for LatticeKeys.
struct CyclotomicKeys {
    using Key = CycNum;
    // keys share one order, so coordinates suffice
    struct Hash {
        std::size_t operator()(const CycNum& x) const noexcept {
            std::size_t h = 0;
            for (const auto& c : x.coeffs()) h = h * 31 + c.hash();
            return h;
        }
    };
    long order;
    std::vector<std::vector<CycNum>> value;

    explicit CyclotomicKeys(const ExponentSet& e) {
        order = 1;
        for (std::size_t i = 1; i <= e.e.points(); ++i) order = lcm(order, common_order(e.e.row(i)));
        for (std::size_t i = 1; i <= e.e.points(); ++i) {
            value.emplace_back();
            for (const auto& x : e.e.row(i)) value.back().push_back(x.promoted(order).reduced_mod_integers());
        }
    }
    Key zero() const { return CycNum::rational(Rat(0), order); }
    Key add(const Key& a, const Key& b) const { return (a + b).reduced_mod_integers(); }
    Key negate(const Key& a) const { return (-a).reduced_mod_integers(); }
    Key point_sum(std::size_t i, const std::vector<long>& m) const {
        Key s = zero();
        for (std::size_t j = 0; j < m.size(); ++j)
            if (m[j] != 0) s += CycNum(m[j]) * value[i][j];
        return s.reduced_mod_integers();
    }
};

// Compositions of d into `parts` nonnegative parts, lexicographically greatest first.
std::vector<std::vector<long>> compositions(long d, std::size_t parts) {
    std::vector<std::vector<long>> out;
    std::vector<long> cur(parts, 0);
    std::function<void(std::size_t, long)> rec = [&](std::size_t k, long left) {
        if (k + 1 == parts) {
            cur[k] = left;
            out.push_back(cur);
            return;
        }
        for (long x = left; x >= 0; --x) {
            cur[k] = x;
            rec(k + 1, left - x);
        }
    };
    rec(0, d);
    return out;
}

std::vector<long> rank_data(const MultiplicityVector& mv) {
    std::vector<long> out;
    for (const auto& row : mv.m) {
        long r = mv.d;
        for (std::size_t j = 0; j + 1 < row.size(); ++j) out.push_back(r -= row[j]);
    }
    return out;
}

constexpr std::size_t kStateCap = 500'000;
constexpr std::size_t kPairCap = 2'000'000;

struct BudgetExceeded {};

// Lexicographically least rank data at fixed d, or nullopt.
template <class Keys>
std::optional<MultiplicityVector> least_at_dimension(const Keys& keys, const ExponentSet& e, long d) {
    using Key = typename Keys::Key;
    using Set = std::unordered_set<Key, typename Keys::Hash>;
    const std::size_t m = e.e.points();
    std::vector<std::vector<std::pair<std::vector<long>, Key>>> options(m);
    std::vector<Set> distinct(m);
    for (std::size_t i = 0; i < m; ++i) {
        for (auto& comp : compositions(d, e.e.slots(i + 1))) {
            Key k = keys.point_sum(i, comp);
            distinct[i].insert(k);
            options[i].emplace_back(std::move(comp), std::move(k));
        }
    }
    // reachable[k]: sums over points k..m-1
    std::vector<Set> reachable(m + 1);
    reachable[m].insert(keys.zero());
    for (std::size_t k = m; k-- > 0;) {
        if (distinct[k].size() * reachable[k + 1].size() > kPairCap) throw BudgetExceeded{};
        for (const auto& a : distinct[k])
            for (const auto& b : reachable[k + 1]) reachable[k].insert(keys.add(a, b));
        if (reachable[k].size() > kStateCap) throw BudgetExceeded{};
    }
    if (!reachable[0].count(keys.zero())) return std::nullopt;
    MultiplicityVector mv{d, {}};
    Key prefix = keys.zero();
    for (std::size_t k = 0; k < m; ++k) {
        for (const auto& [comp, key] : options[k]) {
            const Key next = keys.add(prefix, key);
            if (!reachable[k + 1].count(keys.negate(next))) continue;
            mv.m.push_back(comp);
            prefix = next;
            break;
        }
    }
    return mv;
}

template <class Keys>
Decision<MultiplicityVector> search(const Keys& keys, const ExponentSet& e, long d_max) {
    std::optional<MultiplicityVector> best;
    std::vector<long> best_rank;
    for (long d = 1; d <= d_max; ++d) {
        std::optional<MultiplicityVector> found;
        try {
            found = least_at_dimension(keys, e, d);
        } catch (const BudgetExceeded&) {
            // FIXME: witnesses past this d are not examined, so a returned witness
            // is valid but possibly not the least one.
            if (best) return *best;
            return UnknownUpTo{d - 1};
        }
        if (!found) continue;
        auto r = rank_data(*found);
        if (!best || r < best_rank) {
            best = std::move(found);
            best_rank = std::move(r);
        }
        // all-zero rank data cannot be beaten
        if (std::all_of(best_rank.begin(), best_rank.end(), [](long x) { return x == 0; })) break;
    }
    if (best) return *best;
    return UnknownUpTo{d_max};
}

} // namespace

Decision<MultiplicityVector> exists_findim_genus_ge1(const ExponentSet& e, long d_max, SearchRoute route) {
    if (d_max < 1) throw std::invalid_argument("d_max must be positive");
    bool rational = route == SearchRoute::Auto;
    for (std::size_t i = 1; rational && i <= e.e.points(); ++i)
        for (const auto& x : e.e.row(i)) rational = rational && x.is_rational();
    if (rational) {
        std::optional<ResidueKeys> keys;
        try {
            keys.emplace(e);
        } catch (const std::overflow_error&) {
        }
        // residue products must stay inside 64 bits
        if (keys && keys->modulus <= (1L << 31)) return search(*keys, e, d_max);
    }
    try {
        return search(LatticeKeys(e, d_max), e, d_max);
    } catch (const std::overflow_error&) {
        return search(CyclotomicKeys(e), e, d_max);
    }
}

} // namespace orbicat
