/**
 * Buchberger's algorithm over a prime field in degrevlex (a > b > c > d),
 * and a generic-initial-ideal oracle built on it: apply a random invertible
 * change of coordinates, compute the reduced Groebner basis, take leading
 * terms.
 */
#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "tetra/error.hpp"
#include "tetra/gin.hpp"
#include "tetra/monomial.hpp"

namespace tetra {

inline constexpr std::uint32_t kDefaultPrime = 32003;
inline constexpr std::uint32_t kSecondPrime = 65521;

/// Arithmetic in Z/p for an odd prime p < 2^31.
class PrimeField {
public:
    explicit PrimeField(std::uint32_t p = kDefaultPrime) : p_(p) {
        if (p < 3 || p % 2 == 0) throw Error(ErrorKind::InvalidArgument, "modulus must be an odd prime");
        for (std::uint32_t d = 3; static_cast<std::uint64_t>(d) * d <= p; d += 2)
            if (p % d == 0) throw Error(ErrorKind::InvalidArgument, std::to_string(p) + " is not prime");
    }

    std::uint32_t prime() const { return p_; }
    std::uint32_t reduce(long long v) const {
        long long r = v % static_cast<long long>(p_);
        return static_cast<std::uint32_t>(r < 0 ? r + p_ : r);
    }
    std::uint32_t add(std::uint32_t x, std::uint32_t y) const { return static_cast<std::uint32_t>((std::uint64_t{x} + y) % p_); }
    std::uint32_t sub(std::uint32_t x, std::uint32_t y) const { return static_cast<std::uint32_t>((std::uint64_t{x} + p_ - y) % p_); }
    std::uint32_t mul(std::uint32_t x, std::uint32_t y) const { return static_cast<std::uint32_t>(std::uint64_t{x} * y % p_); }
    std::uint32_t neg(std::uint32_t x) const { return x == 0 ? 0 : p_ - x; }
    std::uint32_t pow(std::uint32_t x, std::uint64_t e) const {
        std::uint64_t r = 1, b = x;
        for (; e; e >>= 1, b = b * b % p_)
            if (e & 1) r = r * b % p_;
        return static_cast<std::uint32_t>(r);
    }
    std::uint32_t inv(std::uint32_t x) const {
        if (x == 0) throw Error(ErrorKind::InvalidArgument, "inverse of zero");
        return pow(x, p_ - 2);
    }

    bool operator==(const PrimeField&) const = default;

private:
    std::uint32_t p_;
};

struct Term {
    Monomial m;
    std::uint32_t c;
    bool operator==(const Term&) const = default;
};

/// Polynomial in k[a,b,c,d], terms sorted degrevlex-descending, no zero
/// coefficients.
class Polynomial4 {
public:
    explicit Polynomial4(PrimeField f = PrimeField()) : field_(f) {}
    Polynomial4(PrimeField f, std::vector<Term> terms) : field_(f), terms_(std::move(terms)) { normalize(); }

    static Polynomial4 monomial(PrimeField f, const Monomial& m, std::uint32_t c = 1) {
        return Polynomial4(f, {Term{m, c}});
    }

    const PrimeField& field() const { return field_; }
    const std::vector<Term>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    const Monomial& leading_monomial() const { return terms_.front().m; }
    std::uint32_t leading_coefficient() const { return terms_.front().c; }

    Polynomial4 operator+(const Polynomial4& o) const { return combine(o, 1, Monomial::one()); }
    Polynomial4 operator-(const Polynomial4& o) const { return combine(o, field_.neg(1), Monomial::one()); }

    Polynomial4 operator*(const Polynomial4& o) const {
        std::vector<Term> t;
        t.reserve(terms_.size() * o.terms_.size());
        for (const auto& x : terms_)
            for (const auto& y : o.terms_) t.push_back({x.m * y.m, field_.mul(x.c, y.c)});
        return Polynomial4(field_, std::move(t));
    }

    Polynomial4 scaled(std::uint32_t c, const Monomial& m) const {
        std::vector<Term> t;
        if (c == 0) return Polynomial4(field_);
        t.reserve(terms_.size());
        for (const auto& x : terms_) t.push_back({x.m * m, field_.mul(x.c, c)});
        return Polynomial4(field_, std::move(t), sorted_tag{});
    }

    Polynomial4 monic() const {
        if (is_zero()) return *this;
        return scaled(field_.inv(leading_coefficient()), Monomial::one());
    }

    /// this + c * m * o, merging sorted term lists.
    Polynomial4 combine(const Polynomial4& o, std::uint32_t c, const Monomial& m) const {
        std::vector<Term> out;
        out.reserve(terms_.size() + o.terms_.size());
        std::size_t i = 0, j = 0;
        while (i < terms_.size() || j < o.terms_.size()) {
            if (j == o.terms_.size()) {
                out.push_back(terms_[i++]);
                continue;
            }
            const Term y{o.terms_[j].m * m, field_.mul(o.terms_[j].c, c)};
            if (i == terms_.size() || degrevlex_greater(y.m, terms_[i].m)) {
                if (y.c) out.push_back(y);
                ++j;
            } else if (degrevlex_greater(terms_[i].m, y.m)) {
                out.push_back(terms_[i++]);
            } else {
                const std::uint32_t s = field_.add(terms_[i].c, y.c);
                if (s) out.push_back({terms_[i].m, s});
                ++i;
                ++j;
            }
        }
        return Polynomial4(field_, std::move(out), sorted_tag{});
    }

    bool operator==(const Polynomial4& o) const { return field_ == o.field_ && terms_ == o.terms_; }

private:
    struct sorted_tag {};
    Polynomial4(PrimeField f, std::vector<Term> terms, sorted_tag) : field_(f), terms_(std::move(terms)) {}

    void normalize() {
        for (auto& t : terms_) t.c %= field_.prime();
        std::sort(terms_.begin(), terms_.end(), [](const Term& x, const Term& y) { return degrevlex_greater(x.m, y.m); });
        std::vector<Term> out;
        for (const auto& t : terms_) {
            if (!out.empty() && out.back().m == t.m)
                out.back().c = field_.add(out.back().c, t.c);
            else
                out.push_back(t);
        }
        std::erase_if(out, [](const Term& t) { return t.c == 0; });
        terms_ = std::move(out);
    }

    PrimeField field_;
    std::vector<Term> terms_;
};

inline std::string to_string(const Polynomial4& f) {
    if (f.is_zero()) return "0";
    std::string s;
    for (const auto& t : f.terms()) {
        if (!s.empty()) s += " + ";
        const bool unit = t.m.degree() == 0;
        if (t.c != 1 || unit) s += std::to_string(t.c);
        if (!unit) s += (t.c != 1 ? "*" : "") + to_string(t.m);
    }
    return s;
}

inline std::ostream& operator<<(std::ostream& os, const Polynomial4& f) { return os << to_string(f); }

using Matrix4 = std::array<std::array<std::uint32_t, 4>, 4>;

inline std::uint32_t determinant(const PrimeField& F, Matrix4 m) {
    std::uint32_t det = 1;
    for (std::size_t c = 0; c < 4; ++c) {
        std::size_t piv = c;
        while (piv < 4 && m[piv][c] == 0) ++piv;
        if (piv == 4) return 0;
        if (piv != c) {
            std::swap(m[piv], m[c]);
            det = F.neg(det);
        }
        det = F.mul(det, m[c][c]);
        const std::uint32_t inv = F.inv(m[c][c]);
        for (std::size_t r = c + 1; r < 4; ++r) {
            const std::uint32_t f = F.mul(m[r][c], inv);
            for (std::size_t k = c; k < 4; ++k) m[r][k] = F.sub(m[r][k], F.mul(f, m[c][k]));
        }
    }
    return det;
}

/// Random invertible matrix mod p from a seed (resampled until invertible).
inline Matrix4 random_invertible_matrix(const PrimeField& F, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::uint32_t> dist(0, F.prime() - 1);
    while (true) {
        Matrix4 m{};
        for (auto& row : m)
            for (auto& v : row) v = dist(rng);
        if (determinant(F, m) != 0) return m;
    }
}

/// Substitutes x_i -> sum_j M[i][j] x_j into every generator.
inline std::vector<Polynomial4> change_coordinates(const MonomialIdeal& I, const PrimeField& F, const Matrix4& M) {
    std::array<Polynomial4, 4> images{Polynomial4(F), Polynomial4(F), Polynomial4(F), Polynomial4(F)};
    for (std::size_t i = 0; i < 4; ++i) {
        std::vector<Term> t;
        for (std::size_t j = 0; j < 4; ++j) t.push_back({Monomial::var(static_cast<int>(j)), M[i][j]});
        images[i] = Polynomial4(F, std::move(t));
    }
    std::vector<Polynomial4> out;
    for (const auto& g : I.generators()) {
        Polynomial4 p = Polynomial4::monomial(F, Monomial::one());
        for (std::size_t i = 0; i < 4; ++i)
            for (int e = 0; e < g.exp[i]; ++e) p = p * images[i];
        out.push_back(std::move(p));
    }
    return out;
}

inline std::vector<Polynomial4> generic_change(const MonomialIdeal& I, std::uint64_t seed,
                                               std::uint32_t prime = kDefaultPrime) {
    const PrimeField F(prime);
    return change_coordinates(I, F, random_invertible_matrix(F, seed));
}

namespace detail {

/// Full normal form of f modulo the basis.
inline Polynomial4 normal_form(Polynomial4 f, const std::vector<Polynomial4>& basis) {
    const PrimeField& F = f.field();
    std::vector<Term> remainder;
    while (!f.is_zero()) {
        const Term lt = f.terms().front();
        const Polynomial4* red = nullptr;
        for (const auto& g : basis)
            if (g.leading_monomial().divides(lt.m)) {
                red = &g;
                break;
            }
        if (red) {
            // basis elements are monic
            f = f.combine(*red, F.neg(lt.c), lt.m / red->leading_monomial());
        } else {
            remainder.push_back(lt);
            f = f.combine(Polynomial4::monomial(F, lt.m), F.neg(lt.c), Monomial::one());
        }
    }
    return Polynomial4(F, std::move(remainder));
}

} // namespace detail

/// Reduced Groebner basis in degrevlex, sorted by leading monomial
/// (degrevlex-descending).
inline std::vector<Polynomial4> groebner_basis(const std::vector<Polynomial4>& gens) {
    std::vector<Polynomial4> G;
    for (const auto& g : gens)
        if (!g.is_zero()) G.push_back(g.monic());
    if (G.empty()) throw Error(ErrorKind::InvalidArgument, "groebner_basis needs a non-zero generator");

    struct Pair {
        std::size_t i, j;
        Monomial lcm;
    };
    std::vector<Pair> pairs;
    std::vector<std::vector<bool>> done; // treated or discarded pairs
    auto mark = [&](std::size_t i, std::size_t j) { done[std::max(i, j)][std::min(i, j)] = true; };
    auto treated = [&](std::size_t i, std::size_t j) { return done[std::max(i, j)][std::min(i, j)]; };
    auto add_element = [&](Polynomial4 p) {
        const std::size_t k = G.size();
        G.push_back(std::move(p));
        done.emplace_back(k + 1, false);
        for (std::size_t i = 0; i < k; ++i) pairs.push_back({i, k, lcm(G[i].leading_monomial(), G[k].leading_monomial())});
    };
    {
        auto start = std::move(G);
        G.clear();
        for (auto& p : start) add_element(std::move(p));
    }

    while (!pairs.empty()) {
        // normal strategy: smallest lcm first
        auto it = std::min_element(pairs.begin(), pairs.end(), [](const Pair& x, const Pair& y) {
            return degrevlex_greater(y.lcm, x.lcm);
        });
        const Pair pr = *it;
        pairs.erase(it);
        mark(pr.i, pr.j);
        const Monomial& li = G[pr.i].leading_monomial();
        const Monomial& lj = G[pr.j].leading_monomial();
        if (coprime(li, lj)) continue; // first criterion
        bool chain = false;               // second criterion
        for (std::size_t k = 0; k < G.size() && !chain; ++k) {
            if (k == pr.i || k == pr.j) continue;
            if (G[k].leading_monomial().divides(pr.lcm) && treated(pr.i, k) && treated(pr.j, k)) chain = true;
        }
        if (chain) continue;
        const PrimeField& F = G[pr.i].field();
        const Polynomial4 s = G[pr.i].scaled(1, pr.lcm / li).combine(G[pr.j], F.neg(1), pr.lcm / lj);
        Polynomial4 r = detail::normal_form(s, G);
        if (!r.is_zero()) add_element(r.monic());
    }

    // minimal basis, then inter-reduce
    std::vector<Polynomial4> minimal;
    for (std::size_t i = 0; i < G.size(); ++i) {
        bool redundant = false;
        for (std::size_t j = 0; j < G.size() && !redundant; ++j) {
            if (i == j) continue;
            const auto& li = G[i].leading_monomial();
            const auto& lj = G[j].leading_monomial();
            if (lj.divides(li) && (lj != li || j < i)) redundant = true;
        }
        if (!redundant) minimal.push_back(G[i]);
    }
    std::vector<Polynomial4> reduced;
    for (std::size_t i = 0; i < minimal.size(); ++i) {
        std::vector<Polynomial4> others;
        for (std::size_t j = 0; j < minimal.size(); ++j)
            if (j != i) others.push_back(minimal[j]);
        const Polynomial4& g = minimal[i];
        const Polynomial4 tail = g.combine(Polynomial4::monomial(g.field(), g.leading_monomial()), g.field().neg(1),
                                           Monomial::one());
        reduced.push_back(Polynomial4::monomial(g.field(), g.leading_monomial()) + detail::normal_form(tail, others));
    }
    std::sort(reduced.begin(), reduced.end(), [](const Polynomial4& x, const Polynomial4& y) {
        return degrevlex_greater(x.leading_monomial(), y.leading_monomial());
    });
    return reduced;
}

inline MonomialIdeal initial_ideal(const std::vector<Polynomial4>& basis) {
    std::vector<Monomial> lead;
    for (const auto& g : basis) lead.push_back(g.leading_monomial());
    return MonomialIdeal(std::move(lead));
}

struct GinRun {
    std::uint64_t seed;
    std::uint32_t prime;
    MonomialIdeal initial;
};

/// The generic initial ideal estimated over every (seed, prime) combination.
/// All runs must agree and the result must be strongly stable.
inline StableIdeal gin_oracle(const MonomialIdeal& I, std::array<std::uint64_t, 2> seeds = {1, 2},
                              std::array<std::uint32_t, 2> primes = {kDefaultPrime, kSecondPrime}) {
    if (I.is_zero() || I.is_unit()) throw Error(ErrorKind::InvalidArgument, "gin_oracle needs a proper non-zero ideal");
    std::vector<GinRun> runs;
    for (auto s : seeds)
        for (auto p : primes) runs.push_back({s, p, initial_ideal(groebner_basis(generic_change(I, s, p)))});
    for (const auto& r : runs) {
        if (r.initial == runs.front().initial) continue;
        std::string msg = "generic initial ideals differ:";
        for (const auto& x : runs)
            msg += " [seed " + std::to_string(x.seed) + ", p " + std::to_string(x.prime) + "] " + to_string(x.initial);
        throw Error(ErrorKind::Disagreement, msg);
    }
    if (!is_strongly_stable(runs.front().initial))
        throw Error(ErrorKind::NotBorelFixed, to_string(runs.front().initial) + " is not Borel-fixed; resample");
    return StableIdeal(runs.front().initial);
}

} // namespace tetra
