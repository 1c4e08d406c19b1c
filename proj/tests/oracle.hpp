#pragma once

// Reference implementations used only by the tests. Nothing here calls the
// engine's arithmetic: products go one generator at a time through
//   y x^a = (-1)^a x^a y + [a odd] x^(a-1) z,
// ranks use plain Gaussian elimination over mpq_class, and series are
// expanded by truncated multiplication.

#include <gmpxx.h>

#include <map>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "hh/complex.hpp"

namespace oracle {

using Mono = std::tuple<unsigned, unsigned, unsigned>;  // x^a y^b z^c
using Poly = std::map<Mono, mpq_class>;

inline void add(Poly& p, const Mono& m, const mpq_class& c) {
    if (c == 0) return;
    auto& slot = p[m];
    slot += c;
    if (slot == 0) p.erase(m);
}

inline Poly add(Poly a, const Poly& b, const mpq_class& s = 1) {
    for (const auto& [m, c] : b) add(a, m, s * c);
    return a;
}

inline Poly scale(const Poly& a, const mpq_class& s) {
    Poly out;
    for (const auto& [m, c] : a) add(out, m, s * c);
    return out;
}

inline Poly left_x(const Poly& p) {
    Poly out;
    for (const auto& [m, c] : p) add(out, {std::get<0>(m) + 1, std::get<1>(m), std::get<2>(m)}, c);
    return out;
}

inline Poly left_y(const Poly& p) {
    Poly out;
    for (const auto& [m, c] : p) {
        const auto [a, b, z] = m;
        add(out, {a, b + 1, z}, a % 2 ? mpq_class(-c) : c);
        if (a % 2) add(out, {a - 1, b, z + 1}, c);
    }
    return out;
}

inline Poly left_z(const Poly& p) {
    Poly out;
    for (const auto& [m, c] : p) add(out, {std::get<0>(m), std::get<1>(m), std::get<2>(m) + 1}, c);
    return out;
}

inline Poly mul(const Poly& l, const Poly& r) {
    Poly out;
    for (const auto& [m, c] : l) {
        Poly t = scale(r, c);
        for (unsigned k = 0; k < std::get<2>(m); ++k) t = left_z(t);
        for (unsigned k = 0; k < std::get<1>(m); ++k) t = left_y(t);
        for (unsigned k = 0; k < std::get<0>(m); ++k) t = left_x(t);
        out = add(out, t);
    }
    return out;
}

inline Poly gen(char g) {
    Poly p;
    add(p, g == 'x' ? Mono{1, 0, 0} : g == 'y' ? Mono{0, 1, 0} : Mono{0, 0, 1}, 1);
    return p;
}

inline Poly one() { return {{Mono{0, 0, 0}, 1}}; }

inline Poly from(const hh::AlgebraElement<hh::Rational>& a) {
    Poly p;
    for (const auto& [m, c] : a.terms()) add(p, {m.n1, m.n2, m.n3}, c);
    return p;
}

// Cochains keyed by sorted letter strings: "", "t", "u", "v", "tu", "tv", "uv", "tuv".
using Cochain = std::map<std::string, Poly>;

inline void add(Cochain& c, const std::string& lam, const Poly& p, const mpq_class& s = 1) {
    auto& slot = c[lam];
    slot = add(slot, p, s);
    if (slot.empty()) c.erase(lam);
}

inline Cochain from(const hh::Cochain<hh::Rational>& c) {
    Cochain out;
    for (const auto& [lam, a] : c.components()) {
        std::string s;
        for (char ch : std::string(hh::label(lam)))
            if (ch != '^' && ch != '1') s += ch;
        add(out, s, from(a));
    }
    return out;
}

/// Sorts a word in t, u, v: t and u commute, v anticommutes with both, every
/// letter squares to zero. Returns {0, ""} for zero.
inline std::pair<int, std::string> sort_letters(std::string w) {
    int sign = 1;
    for (std::size_t i = 0; i < w.size(); ++i)
        for (std::size_t j = 0; j + 1 < w.size() - i; ++j)
            if (w[j] > w[j + 1]) {
                if (w[j] == 'v' || w[j + 1] == 'v') sign = -sign;
                std::swap(w[j], w[j + 1]);
            }
    for (std::size_t i = 0; i + 1 < w.size(); ++i)
        if (w[i] == w[i + 1]) return {0, ""};
    return {sign, w};
}

inline Poly commutator(char g, const Poly& a) { return add(mul(gen(g), a), mul(a, gen(g)), -1); }
inline Poly anticommutator(char g, const Poly& a) { return add(mul(gen(g), a), mul(a, gen(g))); }

/// The differential written out case by case from its defining table.
inline Cochain d(const Cochain& c) {
    Cochain out;
    for (const auto& [lam, a] : c) {
        if (lam.empty()) {
            add(out, "t", commutator('x', a));
            add(out, "u", commutator('y', a));
        } else if (lam == "t") {
            add(out, "tu", anticommutator('y', a));
        } else if (lam == "u") {
            add(out, "tu", anticommutator('x', a));
        } else if (lam == "v") {
            add(out, "tv", commutator('x', a));
            add(out, "uv", commutator('y', a));
            add(out, "tu", a);
        } else if (lam == "tv") {
            add(out, "tuv", anticommutator('y', a));
        } else if (lam == "uv") {
            add(out, "tuv", anticommutator('x', a));
        }
    }
    return out;
}

inline std::size_t rank(std::vector<std::vector<mpq_class>> m) {
    std::size_t r = 0;
    const std::size_t cols = m.empty() ? 0 : m[0].size();
    for (std::size_t c = 0; c < cols && r < m.size(); ++c) {
        std::size_t p = r;
        while (p < m.size() && m[p][c] == 0) ++p;
        if (p == m.size()) continue;
        std::swap(m[p], m[r]);
        for (std::size_t i = r + 1; i < m.size(); ++i) {
            if (m[i][c] == 0) continue;
            const mpq_class f = m[i][c] / m[r][c];
            for (std::size_t j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
        }
        ++r;
    }
    return r;
}

/// Coefficients of s^shift / ((1 - s)^a (1 - s^2)^b) for exponents 0..n.
inline std::vector<long> series(int shift, int a, int b, int n) {
    std::vector<long> f(static_cast<std::size_t>(n + 1), 0);
    if (shift >= 0 && shift <= n) f[static_cast<std::size_t>(shift)] = 1;
    auto divide = [&](int step) {  // multiply by 1/(1 - s^step)
        for (int k = step; k <= n; ++k) f[static_cast<std::size_t>(k)] += f[static_cast<std::size_t>(k - step)];
    };
    for (int k = 0; k < a; ++k) divide(1);
    for (int k = 0; k < b; ++k) divide(2);
    return f;
}

}  // namespace oracle
