#pragma once

// Arithmetic in the Down-Up algebra A = k<x,y,z>/([x,z],[y,z],xy+yx-z) on its
// PBW basis x^n1 y^n2 z^n3, and in the skew exterior algebra on t,u,v
// (t,u commute; v anticommutes with both; all squares vanish).

#include <array>
#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <string_view>
#include <vector>

#include "hh/field.hpp"

namespace hh {

enum class Gen : std::uint8_t { X, Y, Z };

/// x^n1 y^n2 z^n3. Weight uses |x| = |y| = 1, |z| = 2.
struct PbwMonomial {
    std::uint32_t n1 = 0, n2 = 0, n3 = 0;

    constexpr int weight() const noexcept { return static_cast<int>(n1 + n2 + 2 * n3); }

    /// Graded by weight, then lexicographic on (n1, n2, n3).
    friend constexpr std::strong_ordering operator<=>(const PbwMonomial& a, const PbwMonomial& b) noexcept {
        if (auto c = a.weight() <=> b.weight(); c != 0) return c;
        if (auto c = a.n1 <=> b.n1; c != 0) return c;
        if (auto c = a.n2 <=> b.n2; c != 0) return c;
        return a.n3 <=> b.n3;
    }
    friend constexpr bool operator==(const PbwMonomial&, const PbwMonomial&) noexcept = default;
};

/// (x^2)^e1 (y^2)^e2 z^e3, a monomial of the centre S = k[x^2, y^2, z].
struct CenterMonomial {
    std::uint32_t e1 = 0, e2 = 0, e3 = 0;

    constexpr PbwMonomial to_pbw() const noexcept { return {2 * e1, 2 * e2, e3}; }
    constexpr int weight() const noexcept { return static_cast<int>(2 * (e1 + e2 + e3)); }
    friend constexpr bool operator==(const CenterMonomial&, const CenterMonomial&) noexcept = default;
};

/// All PBW monomials of weight w in canonical order (empty for w < 0).
std::vector<PbwMonomial> monomials_of_weight(int w);

/// Central monomials of weight w; with include_z = false only k[x^2, y^2].
std::vector<CenterMonomial> center_monomials_of_weight(int w, bool include_z = true);

/// Product of two PBW monomials, at most two terms: y^b x^d reorders to
/// x^(d-1) y^(b-1) z - x^d y^b when b and d are both odd, and commutes otherwise.
struct MonomialProduct {
    int size = 0;
    std::array<std::pair<PbwMonomial, int>, 2> terms{};
};
MonomialProduct multiply(const PbwMonomial& a, const PbwMonomial& b) noexcept;

template <class K>
class AlgebraElement;

template <class K>
AlgebraElement<K> multiply(const AlgebraElement<K>& a, const AlgebraElement<K>& b);

template <class K>
class AlgebraElement {
public:
    using Terms = std::map<PbwMonomial, K>;

    AlgebraElement() = default;
    static AlgebraElement monomial(const PbwMonomial& m, const K& c = FieldTraits<K>::from_int(1));
    static AlgebraElement scalar(const K& c) { return monomial(PbwMonomial{}, c); }
    static AlgebraElement one() { return scalar(FieldTraits<K>::from_int(1)); }
    static AlgebraElement generator(Gen g);

    const Terms& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    std::size_t size() const noexcept { return terms_.size(); }
    K coefficient(const PbwMonomial& m) const;
    /// Common weight of all terms, or nullopt when zero or inhomogeneous.
    std::optional<int> weight() const;

    /// Adds c * m in place, dropping the entry if it cancels.
    void add_term(const PbwMonomial& m, const K& c);

    AlgebraElement& operator+=(const AlgebraElement& o);
    AlgebraElement& operator-=(const AlgebraElement& o);
    AlgebraElement& operator*=(const K& c);

    friend AlgebraElement operator+(AlgebraElement a, const AlgebraElement& b) { return a += b; }
    friend AlgebraElement operator-(AlgebraElement a, const AlgebraElement& b) { return a -= b; }
    friend AlgebraElement operator-(AlgebraElement a) { return a *= FieldTraits<K>::from_int(-1); }
    friend AlgebraElement operator*(AlgebraElement a, const K& c) { return a *= c; }
    friend AlgebraElement operator*(const K& c, AlgebraElement a) { return a *= c; }
    friend AlgebraElement operator*(const AlgebraElement& a, const AlgebraElement& b) { return multiply(a, b); }

    friend bool operator==(const AlgebraElement&, const AlgebraElement&) = default;

private:
    Terms terms_;
};

/// [g, a] = g a - a g
template <class K>
AlgebraElement<K> commutator(Gen g, const AlgebraElement<K>& a);

/// x a + a x
template <class K>
AlgebraElement<K> xi_x(const AlgebraElement<K>& a);

/// y a + a y
template <class K>
AlgebraElement<K> xi_y(const AlgebraElement<K>& a);

using Word = std::vector<Gen>;

enum class RewriteStrategy { Leftmost, Rightmost };

/// Normal form of coeff * word by rewriting y x -> z - x y, z x -> x z,
/// z y -> y z until no rule applies. Independent of multiply().
template <class K>
AlgebraElement<K> normal_form(const Word& word, const K& coeff = FieldTraits<K>::from_int(1),
                              RewriteStrategy strategy = RewriteStrategy::Leftmost);

// ---------------------------------------------------------------------------
// Skew exterior algebra

/// Basis of the exterior side in canonical order t < u < v.
enum class Wedge : std::uint8_t { One, T, U, V, TU, TV, UV, TUV };

inline constexpr std::array<Wedge, 8> kAllWedges{Wedge::One, Wedge::T,  Wedge::U,  Wedge::V,
                                                 Wedge::TU,  Wedge::TV, Wedge::UV, Wedge::TUV};

int degree(Wedge w) noexcept;
/// |t| = |u| = 1, |v| = 2.
int lambda_weight(Wedge w) noexcept;
/// "1", "t", "u", "v", "t^u", "t^v", "u^v", "t^u^v"
std::string_view label(Wedge w) noexcept;
std::optional<Wedge> wedge_from_letters(unsigned mask) noexcept;
unsigned letters(Wedge w) noexcept;
std::vector<Wedge> wedges_of_degree(int i);

/// sign == 0 encodes the zero product.
struct SignedWedge {
    int sign = 0;
    Wedge label = Wedge::One;
};

SignedWedge wedge(Wedge a, Wedge b) noexcept;

/// A basis cochain lambda (x) m. Its weight is |m| - |lambda|, which every
/// component of the differential preserves.
struct BasisElement {
    Wedge label = Wedge::One;
    PbwMonomial mono{};

    int weight() const noexcept { return mono.weight() - lambda_weight(label); }
    friend bool operator==(const BasisElement&, const BasisElement&) = default;
};

/// Basis of the degree-i, weight-w part of Lambda (x) A: labels in canonical
/// order, monomials in canonical order within each label.
std::vector<BasisElement> weight_basis(int i, int w);

/// Lowest weight occurring in degree i (0, -2, -3, -4).
int min_weight(int i) noexcept;

extern template class AlgebraElement<Rational>;
extern template class AlgebraElement<Fp>;

}  // namespace hh
