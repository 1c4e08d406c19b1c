#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "hh/complex.hpp"

namespace hh {

/// Z^i_w, B^i_w and a chosen complement representing HH^i(A)_w, all as
/// coordinate vectors in weight_basis(i, w).
template <class K>
struct SliceHomology {
    int degree = 0;
    int weight = 0;
    std::vector<BasisElement> basis;
    std::vector<std::vector<K>> cocycles;
    /// boundaries[k] = d(boundary_preimages[k]); the preimages are basis
    /// cochains of degree i-1.
    std::vector<std::vector<K>> boundaries;
    std::vector<BasisElement> boundary_preimages;
    /// Greedy choice: the first cocycle basis vectors independent of B.
    std::vector<std::vector<K>> complement;

    std::size_t dim_cochains() const noexcept { return basis.size(); }
    std::size_t dim_z() const noexcept { return cocycles.size(); }
    std::size_t dim_b() const noexcept { return boundaries.size(); }
    std::size_t dim_h() const noexcept { return complement.size(); }
};

template <class K>
struct CohomologyClass {
    int degree = 0;
    int weight = 0;
    Cochain<K> representative;
    /// Coordinates in SliceHomology::complement.
    std::vector<K> coords;
    /// d(boundary_witness) = representative - sum coords[k] * complement[k].
    Cochain<K> boundary_witness;

    bool is_zero() const { return is_zero_vector<K>(coords); }
};

template <class K>
struct BoundaryTest {
    bool is_boundary = false;
    Cochain<K> witness;        // d(witness) = tested cochain, when is_boundary
    std::vector<K> residual;   // class coordinates, when not
};

/// Thrown when a class is requested for a cochain with d(c) != 0.
template <class K>
class NotACocycle : public std::invalid_argument {
public:
    explicit NotACocycle(Cochain<K> image)
        : std::invalid_argument("cochain is not a cocycle"), image_(std::move(image)) {}
    const Cochain<K>& image() const noexcept { return image_; }

private:
    Cochain<K> image_;
};

template <class K>
class Cohomology {
public:
    const DgComplex<K>& complex() const noexcept { return complex_; }

    const SliceHomology<K>& slice(int i, int w) const;

    /// c must be homogeneous; the zero cochain needs an explicit weight.
    CohomologyClass<K> reduce_to_class(const Cochain<K>& c, std::optional<int> weight = std::nullopt) const;

    BoundaryTest<K> is_boundary(const Cochain<K>& c, std::optional<int> weight = std::nullopt) const;

    /// Cochain for class coordinates at (i, w).
    Cochain<K> representative(int i, int w, const std::vector<K>& coords) const;

private:
    struct Entry {
        SliceHomology<K> homology;
        LeftInverse<K> solver;  // of the matrix [boundaries | complement]
    };
    const Entry& entry(int i, int w) const;

    DgComplex<K> complex_;
    mutable std::mutex mutex_;
    mutable std::map<std::pair<int, int>, std::shared_ptr<const Entry>> cache_;
};

template <class K>
SliceHomology<K> compute_homology(const DgComplex<K>& complex, int i, int w);

// ---------------------------------------------------------------------------
// Named generators of HH^*(A) as an S-module, S = Z(A) = k[x^2, y^2, z].

template <class K>
struct NamedGenerator {
    std::string name;        // "m_0", "tau_y", ...
    std::string definition;  // cochain text the representative was parsed from
    /// m_0 and nu_0 generate free k[x^2, y^2]-modules; z maps them into the others.
    bool polynomial_in_x2y2_only = false;
    CohomologyClass<K> cls;

    const Cochain<K>& representative() const noexcept { return cls.representative; }
    int degree() const noexcept { return cls.degree; }
    int weight() const noexcept { return cls.weight; }
};

template <class K>
class GeneratorRegistry {
public:
    /// Builds the ten representatives and certifies each is a cocycle and not
    /// a boundary; throws std::logic_error otherwise.
    explicit GeneratorRegistry(const Cohomology<K>& hh);

    const std::vector<NamedGenerator<K>>& all() const noexcept { return generators_; }
    const NamedGenerator<K>& at(const std::string& name) const;
    bool contains(const std::string& name) const;

private:
    std::vector<NamedGenerator<K>> generators_;
};

struct GeneratorDefinition {
    const char* name;
    const char* cochain;
    bool polynomial_in_x2y2_only;
};

/// m_0, m_1, tau_y, mu_x, nu_0..nu_3, q_1, q_xy in that order.
const std::vector<GeneratorDefinition>& generator_definitions();

// ---------------------------------------------------------------------------
// Hilbert series

/// Coefficient of s^w in s^shift / (1 - s^2)^power.
long series_coefficient(int w, int shift, int power);

/// dim Z(A)_w: coefficient of s^w in 1/(1-s^2)^3.
long center_dimension(int w);

/// Predicted dim HH^i(A)_w from the S-module decomposition:
///   H_0 = D^3,  H_1 = D^2 + 3 D^3,  H_2 = D^2 + s^-2 D^3 + 2 D^3,
///   H_3 = s^-4 + s^-2 D^3,  with D = 1/(1 - s^2).
long predicted_hh_dimension(int i, int w);

extern template class Cohomology<Rational>;
extern template class Cohomology<Fp>;
extern template class GeneratorRegistry<Rational>;
extern template class GeneratorRegistry<Fp>;

}  // namespace hh
