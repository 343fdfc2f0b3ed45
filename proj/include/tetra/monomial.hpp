/**
 * Monomials and monomial ideals in k[a,b,c,d].
 *
 * Ideals are always stored by their minimal generating set, sorted in the
 * display order used throughout the library: increasing degree, and within
 * one degree decreasing in degrevlex (a > b > c > d).
 */
#pragma once

#include <algorithm>
#include <array>
#include <compare>
#include <cstdint>
#include <ostream>
#include <span>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "tetra/error.hpp"

namespace tetra {

inline constexpr int kNumVars = 4;
inline constexpr std::array<char, kNumVars> kVarNames = {'a', 'b', 'c', 'd'};

struct Monomial {
    std::array<int, kNumVars> exp{};

    static Monomial one() { return {}; }
    static Monomial var(int i, int power = 1) {
        Monomial m;
        m.exp[static_cast<std::size_t>(i)] = power;
        return m;
    }

    int degree() const { return exp[0] + exp[1] + exp[2] + exp[3]; }
    int operator[](int i) const { return exp[static_cast<std::size_t>(i)]; }

    bool divides(const Monomial& other) const {
        for (int i = 0; i < kNumVars; ++i)
            if ((*this)[i] > other[i]) return false;
        return true;
    }

    /// Index (0-based) of the last variable with a positive exponent, -1 for 1.
    int max_var() const {
        for (int i = kNumVars - 1; i >= 0; --i)
            if ((*this)[i] > 0) return i;
        return -1;
    }

    Monomial operator*(const Monomial& o) const {
        Monomial r;
        for (std::size_t i = 0; i < kNumVars; ++i) r.exp[i] = exp[i] + o.exp[i];
        return r;
    }

    /// Quotient; caller guarantees o divides *this.
    Monomial operator/(const Monomial& o) const {
        Monomial r;
        for (std::size_t i = 0; i < kNumVars; ++i) r.exp[i] = exp[i] - o.exp[i];
        return r;
    }

    // Plain lexicographic comparison on the exponent vector; this is the lex
    // order with a > b > c > d.
    auto operator<=>(const Monomial&) const = default;
    bool operator==(const Monomial&) const = default;
};

inline Monomial lcm(const Monomial& u, const Monomial& v) {
    Monomial r;
    for (std::size_t i = 0; i < kNumVars; ++i) r.exp[i] = std::max(u.exp[i], v.exp[i]);
    return r;
}

inline Monomial gcd(const Monomial& u, const Monomial& v) {
    Monomial r;
    for (std::size_t i = 0; i < kNumVars; ++i) r.exp[i] = std::min(u.exp[i], v.exp[i]);
    return r;
}

inline bool coprime(const Monomial& u, const Monomial& v) {
    for (int i = 0; i < kNumVars; ++i)
        if (u[i] > 0 && v[i] > 0) return false;
    return true;
}

/// Degree reverse lexicographic comparison: true iff u > v.
inline bool degrevlex_greater(const Monomial& u, const Monomial& v) {
    const int du = u.degree(), dv = v.degree();
    if (du != dv) return du > dv;
    for (int i = kNumVars - 1; i >= 0; --i)
        if (u[i] != v[i]) return u[i] < v[i];
    return false;
}

inline bool lex_greater(const Monomial& u, const Monomial& v) { return u > v; }

/// Display order for generator lists: by degree, then degrevlex-descending.
inline bool display_less(const Monomial& u, const Monomial& v) {
    const int du = u.degree(), dv = v.degree();
    if (du != dv) return du < dv;
    return degrevlex_greater(u, v);
}

inline std::string to_string(const Monomial& m) {
    std::string out;
    for (int i = 0; i < kNumVars; ++i) {
        if (m[i] == 0) continue;
        if (!out.empty()) out += '*';
        out += kVarNames[static_cast<std::size_t>(i)];
        if (m[i] > 1) out += '^' + std::to_string(m[i]);
    }
    return out.empty() ? "1" : out;
}

inline std::ostream& operator<<(std::ostream& os, const Monomial& m) { return os << to_string(m); }

/// Parses "a^2*b*d^3" (zero exponents omitted, "1" for the unit monomial).
inline Monomial parse_monomial(std::string_view text) {
    Monomial m;
    auto fail = [&] { throw Error(ErrorKind::Parse, "bad monomial '" + std::string(text) + "'"); };
    if (text == "1") return m;
    if (text.empty()) fail();
    std::size_t pos = 0;
    while (pos < text.size()) {
        const char v = text[pos];
        if (v < 'a' || v > 'd') fail();
        ++pos;
        int e = 1;
        if (pos < text.size() && text[pos] == '^') {
            ++pos;
            const std::size_t start = pos;
            e = 0;
            while (pos < text.size() && text[pos] >= '0' && text[pos] <= '9') e = e * 10 + (text[pos++] - '0');
            if (pos == start) fail();
        }
        m.exp[static_cast<std::size_t>(v - 'a')] += e;
        if (pos < text.size()) {
            if (text[pos] != '*') fail();
            ++pos;
            if (pos == text.size()) fail();
        }
    }
    return m;
}

/// All monomials of degree d, in degrevlex-descending order.
inline std::vector<Monomial> monomials_of_degree(int d) {
    std::vector<Monomial> out;
    if (d < 0) return out;
    for (int a = d; a >= 0; --a)
        for (int b = d - a; b >= 0; --b)
            for (int c = d - a - b; c >= 0; --c) out.push_back(Monomial{{a, b, c, d - a - b - c}});
    std::sort(out.begin(), out.end(), degrevlex_greater);
    return out;
}

class MonomialIdeal {
public:
    /// The zero ideal.
    MonomialIdeal() = default;

    explicit MonomialIdeal(std::vector<Monomial> gens) : gens_(minimalize(std::move(gens))) {}

    static MonomialIdeal unit() { return MonomialIdeal({Monomial::one()}); }

    /// (x_i, x_j)^n as the ideal of all x_i^k x_j^(n-k).
    static MonomialIdeal power_of_pair(int i, int j, int n) {
        std::vector<Monomial> g;
        for (int k = 0; k <= n; ++k) {
            Monomial m;
            m.exp[static_cast<std::size_t>(i)] = k;
            m.exp[static_cast<std::size_t>(j)] = n - k;
            g.push_back(m);
        }
        return MonomialIdeal(std::move(g));
    }

    std::span<const Monomial> generators() const { return gens_; }
    std::size_t size() const { return gens_.size(); }
    bool is_zero() const { return gens_.empty(); }
    bool is_unit() const { return gens_.size() == 1 && gens_.front().degree() == 0; }

    bool contains(const Monomial& m) const {
        return std::any_of(gens_.begin(), gens_.end(), [&](const Monomial& g) { return g.divides(m); });
    }

    bool contains(const MonomialIdeal& other) const {
        return std::all_of(other.gens_.begin(), other.gens_.end(), [&](const Monomial& g) { return contains(g); });
    }

    int min_degree() const {
        int d = -1;
        for (const auto& g : gens_) d = d < 0 ? g.degree() : std::min(d, g.degree());
        return d;
    }

    int max_degree() const {
        int d = -1;
        for (const auto& g : gens_) d = std::max(d, g.degree());
        return d;
    }

    /// Exponent-wise maximum of the generators (the lcm of all of them).
    Monomial lcm_all() const {
        Monomial m;
        for (const auto& g : gens_) m = lcm(m, g);
        return m;
    }

    MonomialIdeal operator+(const MonomialIdeal& o) const {
        std::vector<Monomial> g(gens_);
        g.insert(g.end(), o.gens_.begin(), o.gens_.end());
        return MonomialIdeal(std::move(g));
    }

    MonomialIdeal operator*(const MonomialIdeal& o) const {
        std::vector<Monomial> g;
        g.reserve(gens_.size() * o.gens_.size());
        for (const auto& u : gens_)
            for (const auto& v : o.gens_) g.push_back(u * v);
        return MonomialIdeal(std::move(g));
    }

    MonomialIdeal operator*(const Monomial& m) const {
        std::vector<Monomial> g;
        g.reserve(gens_.size());
        for (const auto& u : gens_) g.push_back(u * m);
        return MonomialIdeal(std::move(g));
    }

    /// Intersection via pairwise lcms.
    MonomialIdeal intersect(const MonomialIdeal& o) const {
        std::vector<Monomial> g;
        g.reserve(gens_.size() * o.gens_.size());
        for (const auto& u : gens_)
            for (const auto& v : o.gens_) g.push_back(lcm(u, v));
        return MonomialIdeal(std::move(g));
    }

    /// All monomials of degree d in the ideal (a k-basis of I_d).
    std::vector<Monomial> basis_in_degree(int d) const {
        std::vector<Monomial> out;
        for (const auto& m : monomials_of_degree(d))
            if (contains(m)) out.push_back(m);
        return out;
    }

    /// The ideal (I_d) generated by the degree-d part.
    MonomialIdeal component(int d) const { return MonomialIdeal(basis_in_degree(d)); }

    /// I_{>=d}: generated by all elements of degree at least d.
    MonomialIdeal truncate(int d) const {
        std::vector<Monomial> g;
        for (const auto& u : gens_) {
            if (u.degree() >= d) {
                g.push_back(u);
                continue;
            }
            // every degree-d multiple of u
            for (const auto& m : monomials_of_degree(d - u.degree())) g.push_back(u * m);
        }
        return MonomialIdeal(std::move(g));
    }

    /// Number of degree-d monomials outside the ideal, i.e. dim_k (R/I)_d.
    long long standard_count(int d) const {
        long long n = 0;
        for (const auto& m : monomials_of_degree(d))
            if (!contains(m)) ++n;
        return n;
    }

    bool operator==(const MonomialIdeal&) const = default;

private:
    static std::vector<Monomial> minimalize(std::vector<Monomial> g) {
        std::sort(g.begin(), g.end(), display_less);
        g.erase(std::unique(g.begin(), g.end()), g.end());
        std::vector<Monomial> out;
        out.reserve(g.size());
        // Sorted by degree, so a divisor always precedes its multiples.
        for (const auto& m : g) {
            const bool redundant =
                std::any_of(out.begin(), out.end(), [&](const Monomial& k) { return k.divides(m); });
            if (!redundant) out.push_back(m);
        }
        return out;
    }

    std::vector<Monomial> gens_;
};

inline std::string to_string(const MonomialIdeal& I) {
    if (I.is_zero()) return "(0)";
    std::string s = "(";
    bool first = true;
    for (const auto& g : I.generators()) {
        if (!first) s += ", ";
        s += to_string(g);
        first = false;
    }
    return s + ")";
}

inline std::ostream& operator<<(std::ostream& os, const MonomialIdeal& I) { return os << to_string(I); }

/// Parses "(a^2, a*b, b^2)" or "a^2,a*b,b^2"; whitespace is ignored.
inline MonomialIdeal parse_ideal(std::string_view text) {
    std::string s;
    for (char ch : text)
        if (ch != ' ' && ch != '(' && ch != ')') s += ch;
    std::vector<Monomial> g;
    if (s.empty() || s == "0") return MonomialIdeal();
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) g.push_back(parse_monomial(item));
    return MonomialIdeal(std::move(g));
}

/// g*I + (F): the basic double link of I by the variable g and form F.
inline MonomialIdeal basic_double_link(const MonomialIdeal& I, int g, const Monomial& F) {
    if (!I.contains(F)) throw Error(ErrorKind::FNotInIdeal, to_string(F) + " is not in " + to_string(I));
    if (F[g] > 0)
        throw Error(ErrorKind::GDividesF,
                    std::string(1, kVarNames[static_cast<std::size_t>(g)]) + " divides " + to_string(F));
    return I * Monomial::var(g) + MonomialIdeal({F});
}

} // namespace tetra
