#pragma once

// The four-term dg complex Lambda (x) A computing HH^*(A):
//
//   a      -> t(x)[x,a] + u(x)[y,a]
//   t(x)a  -> t^u(x)(ya + ay)
//   u(x)a  -> t^u(x)(xa + ax)
//   v(x)a  -> t^v(x)[x,a] + u^v(x)[y,a] + t^u(x)a
//   t^u(x)a -> 0
//   t^v(x)a -> t^u^v(x)(ya + ay)
//   u^v(x)a -> t^u^v(x)(xa + ax)

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "hh/linalg.hpp"
#include "hh/ncpoly.hpp"

namespace hh {

template <class K>
class Cochain {
public:
    using Components = std::map<Wedge, AlgebraElement<K>>;

    Cochain() = default;
    explicit Cochain(int degree) : degree_(degree) {}
    static Cochain single(Wedge lam, AlgebraElement<K> a);
    static Cochain basis(const BasisElement& e);

    int degree() const noexcept { return degree_; }
    const Components& components() const noexcept { return components_; }
    AlgebraElement<K> component(Wedge lam) const;
    bool is_zero() const noexcept { return components_.empty(); }
    /// Common weight |a| - |lambda| of all terms; nullopt when zero or inhomogeneous.
    std::optional<int> weight() const;

    /// Adds lam (x) a. Throws std::invalid_argument on a degree mismatch.
    void add(Wedge lam, const AlgebraElement<K>& a);

    Cochain& operator+=(const Cochain& o);
    Cochain& operator-=(const Cochain& o);
    Cochain& operator*=(const K& c);

    friend Cochain operator+(Cochain a, const Cochain& b) { return a += b; }
    friend Cochain operator-(Cochain a, const Cochain& b) { return a -= b; }
    friend Cochain operator*(Cochain a, const K& c) { return a *= c; }
    friend Cochain operator*(const K& c, Cochain a) { return a *= c; }
    friend bool operator==(const Cochain&, const Cochain&) = default;

    /// Module action of an element of A on the tensor factor: lambda (x) a s.
    Cochain right_multiplied(const AlgebraElement<K>& s) const;
    /// lambda (x) s a
    Cochain left_multiplied(const AlgebraElement<K>& s) const;

private:
    int degree_ = 0;
    Components components_;
};

template <class K>
Cochain<K> differential(const Cochain<K>& c);

/// Matrix of d : C^i_w -> C^{i+1}_w in the canonical bases.
template <class K>
struct WeightSlice {
    int degree = 0;
    int weight = 0;
    std::vector<BasisElement> domain;    // weight_basis(degree, weight)
    std::vector<BasisElement> codomain;  // weight_basis(degree + 1, weight)
    Matrix<K> d;                         // codomain.size() x domain.size()
};

/// Coordinates of a cochain in a basis; throws if a term lies outside it.
template <class K>
std::vector<K> coordinates(const Cochain<K>& c, std::span<const BasisElement> basis);

template <class K>
Cochain<K> from_coordinates(int degree, std::span<const BasisElement> basis, std::span<const K> v);

template <class K>
WeightSlice<K> build_slice(int i, int w);

struct ComplexViolation {
    int degree = 0;
    int weight = 0;
    BasisElement witness;  // basis cochain with d(d(witness)) != 0
};

struct ComplexReport {
    int w_max = 0;
    std::size_t slices_checked = 0;
    std::vector<ComplexViolation> violations;
    bool pass() const noexcept { return violations.empty(); }
};

/// Slices built on demand and kept for the lifetime of the object. Concurrent
/// callers may build the same slice twice; the first installed copy wins.
template <class K>
class DgComplex {
public:
    const WeightSlice<K>& slice(int i, int w) const;

    /// d_{i+1} d_i = 0 on every weight slice with min_weight <= w <= w_max.
    ComplexReport check(int w_max) const;

private:
    mutable std::mutex mutex_;
    mutable std::map<std::pair<int, int>, std::shared_ptr<const WeightSlice<K>>> cache_;
};

extern template class Cochain<Rational>;
extern template class Cochain<Fp>;
extern template class DgComplex<Rational>;
extern template class DgComplex<Fp>;

}  // namespace hh
