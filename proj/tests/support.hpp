#pragma once

#include <random>

#include "hh/complex.hpp"

namespace testing {

using hh::Rational;
using Elem = hh::AlgebraElement<Rational>;
using Co = hh::Cochain<Rational>;

inline long pick(std::mt19937_64& rng, long lo, long hi) {
    return lo + static_cast<long>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
}

inline Rational small_scalar(std::mt19937_64& rng) {
    long v = pick(rng, -5, 4);
    if (v >= 0) ++v;
    Rational r(v, pick(rng, 0, 3) == 0 ? pick(rng, 1, 4) : 1);
    r.canonicalize();  // the two-argument constructor does not
    return r;
}

/// Up to `terms` random PBW monomials of weight <= wmax, random coefficients.
/// Never zero.
inline Elem random_element(std::mt19937_64& rng, int wmax, int terms = 4) {
    Elem a;
    while (a.is_zero()) {
        const long n = pick(rng, 1, terms);
        for (long k = 0; k < n; ++k) {
            const auto ms = hh::monomials_of_weight(static_cast<int>(pick(rng, 0, wmax)));
            a.add_term(ms[static_cast<std::size_t>(pick(rng, 0, static_cast<long>(ms.size()) - 1))], small_scalar(rng));
        }
    }
    return a;
}

inline Elem random_homogeneous(std::mt19937_64& rng, int w, int terms = 4) {
    Elem a;
    const auto ms = hh::monomials_of_weight(w);
    const long n = pick(rng, 1, terms);
    for (long k = 0; k < n; ++k)
        a.add_term(ms[static_cast<std::size_t>(pick(rng, 0, static_cast<long>(ms.size()) - 1))], small_scalar(rng));
    return a;
}

/// Random homogeneous cochain of degree i and weight w (possibly zero).
inline Co random_cochain(std::mt19937_64& rng, int i, int w, int terms = 4) {
    const auto b = hh::weight_basis(i, w);
    Co c(i);
    if (b.empty()) return c;
    const long n = pick(rng, 1, terms);
    for (long k = 0; k < n; ++k)
        c += Co::basis(b[static_cast<std::size_t>(pick(rng, 0, static_cast<long>(b.size()) - 1))]) * small_scalar(rng);
    return c;
}

}  // namespace testing
