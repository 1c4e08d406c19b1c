#include "hh/homology.hpp"

#include <algorithm>

#include "hh/parse.hpp"

namespace hh {

template <class K>
SliceHomology<K> compute_homology(const DgComplex<K>& complex, int i, int w) {
    SliceHomology<K> h;
    h.degree = i;
    h.weight = w;
    const auto& out = complex.slice(i, w);
    h.basis = out.domain;
    const std::size_t n = h.basis.size();
    if (n == 0) return h;

    h.cocycles = kernel_basis(out.d);

    if (i > 0) {
        const auto& in = complex.slice(i - 1, w);
        if (!in.domain.empty()) {
            const auto ech = row_reduce(in.d);
            for (std::size_t col : ech.pivots) {
                h.boundaries.push_back(in.d.column(col));
                h.boundary_preimages.push_back(in.domain[col]);
            }
        }
    }

    // Columns [B | Z]; pivot columns inside the Z block pick the complement.
    std::vector<std::vector<K>> columns = h.boundaries;
    columns.insert(columns.end(), h.cocycles.begin(), h.cocycles.end());
    const auto ech = row_reduce(Matrix<K>::from_columns(n, columns));
    for (std::size_t col : ech.pivots)
        if (col >= h.boundaries.size()) h.complement.push_back(columns[col]);
    return h;
}

template <class K>
auto Cohomology<K>::entry(int i, int w) const -> const Entry& {
    const auto key = std::pair{i, w};
    {
        std::lock_guard lock(mutex_);
        if (auto it = cache_.find(key); it != cache_.end()) return *it->second;
    }
    auto e = std::make_shared<Entry>();
    e->homology = compute_homology(complex_, i, w);
    std::vector<std::vector<K>> columns = e->homology.boundaries;
    columns.insert(columns.end(), e->homology.complement.begin(), e->homology.complement.end());
    e->solver = left_inverse(Matrix<K>::from_columns(e->homology.dim_cochains(), columns));
    std::lock_guard lock(mutex_);
    auto [it, inserted] = cache_.try_emplace(key, std::move(e));
    return *it->second;
}

template <class K>
const SliceHomology<K>& Cohomology<K>::slice(int i, int w) const {
    return entry(i, w).homology;
}

template <class K>
CohomologyClass<K> Cohomology<K>::reduce_to_class(const Cochain<K>& c, std::optional<int> weight) const {
    const auto cw = c.weight();
    if (!c.is_zero() && !cw) throw std::invalid_argument("cochain is not weight-homogeneous");
    if (!c.is_zero() && weight && *weight != *cw) throw std::invalid_argument("cochain weight mismatch");
    const int w = c.is_zero() ? weight.value_or(0) : *cw;
    const int i = c.degree();

    auto image = differential(c);
    if (!image.is_zero()) throw NotACocycle<K>(std::move(image));

    const auto& e = entry(i, w);
    const auto& h = e.homology;
    CohomologyClass<K> cls;
    cls.degree = i;
    cls.weight = w;
    cls.representative = c;
    cls.boundary_witness = Cochain<K>(i - 1 < 0 ? 0 : i - 1);
    cls.coords.assign(h.dim_h(), FieldTraits<K>::from_int(0));
    if (h.dim_cochains() == 0 || c.is_zero()) return cls;

    const auto v = coordinates(c, std::span<const BasisElement>(h.basis));
    if (!is_zero_vector<K>(apply(e.solver.annihilator, std::span<const K>(v))))
        throw std::logic_error("cocycle outside Z^i_w; slice bases are inconsistent");
    const auto x = apply(e.solver.inverse, std::span<const K>(v));
    for (std::size_t k = 0; k < h.dim_b(); ++k)
        if (!FieldTraits<K>::is_zero(x[k]))
            cls.boundary_witness += Cochain<K>::basis(h.boundary_preimages[k]) * x[k];
    for (std::size_t k = 0; k < h.dim_h(); ++k) cls.coords[k] = x[h.dim_b() + k];
    return cls;
}

template <class K>
BoundaryTest<K> Cohomology<K>::is_boundary(const Cochain<K>& c, std::optional<int> weight) const {
    auto cls = reduce_to_class(c, weight);
    BoundaryTest<K> t;
    t.is_boundary = cls.is_zero();
    if (t.is_boundary) t.witness = std::move(cls.boundary_witness);
    else t.residual = std::move(cls.coords);
    return t;
}

template <class K>
Cochain<K> Cohomology<K>::representative(int i, int w, const std::vector<K>& coords) const {
    const auto& h = slice(i, w);
    std::vector<K> v(h.dim_cochains(), FieldTraits<K>::from_int(0));
    for (std::size_t k = 0; k < coords.size(); ++k)
        for (std::size_t r = 0; r < v.size(); ++r) v[r] += coords[k] * h.complement[k][r];
    return from_coordinates<K>(i, std::span<const BasisElement>(h.basis), std::span<const K>(v));
}

const std::vector<GeneratorDefinition>& generator_definitions() {
    static const std::vector<GeneratorDefinition> defs{
        {"m_0", "t # (x) - u # (y)", true},
        {"m_1", "t # (x) + u # (y) - v # (2*z)", false},
        {"tau_y", "t # (y) - v # (2*y^2)", false},
        {"mu_x", "u # (x) - v # (2*x^2)", false},
        {"nu_0", "t^v # (y*x^2) - u^v # (x*y^2)", true},
        {"nu_1", "t^v # (x) - u^v # (y)", false},
        {"nu_2", "t^v # (2*x*y^2) - t^v # (y*z)", false},
        {"nu_3", "u^v # (2*y*x^2) - u^v # (x*z)", false},
        {"q_1", "t^u^v # (1)", false},
        {"q_xy", "t^u^v # (x*y)", false},
    };
    return defs;
}

template <class K>
GeneratorRegistry<K>::GeneratorRegistry(const Cohomology<K>& hh) {
    for (const auto& def : generator_definitions()) {
        const auto rep = parse_cochain<K>(def.cochain);
        if (!rep.weight()) throw std::logic_error(std::string(def.name) + " is not homogeneous");
        if (!differential(rep).is_zero()) throw std::logic_error(std::string(def.name) + " is not a cocycle");
        auto cls = hh.reduce_to_class(rep);
        if (cls.is_zero()) throw std::logic_error(std::string(def.name) + " is a boundary");
        generators_.push_back({def.name, def.cochain, def.polynomial_in_x2y2_only, std::move(cls)});
    }
}

template <class K>
const NamedGenerator<K>& GeneratorRegistry<K>::at(const std::string& name) const {
    auto it = std::find_if(generators_.begin(), generators_.end(), [&](const auto& g) { return g.name == name; });
    if (it == generators_.end()) throw std::out_of_range("unknown generator " + name);
    return *it;
}

template <class K>
bool GeneratorRegistry<K>::contains(const std::string& name) const {
    return std::any_of(generators_.begin(), generators_.end(), [&](const auto& g) { return g.name == name; });
}

long series_coefficient(int w, int shift, int power) {
    const int e = w - shift;
    if (e < 0 || e % 2 != 0) return 0;
    // number of monomials of degree e/2 in `power` variables
    const long k = e / 2;
    long num = 1, den = 1;
    for (long j = 1; j < power; ++j) {
        num *= k + j;
        den *= j;
    }
    return num / den;
}

long center_dimension(int w) { return series_coefficient(w, 0, 3); }

long predicted_hh_dimension(int i, int w) {
    switch (i) {
        case 0: return series_coefficient(w, 0, 3);
        case 1: return series_coefficient(w, 0, 2) + 3 * series_coefficient(w, 0, 3);
        case 2:
            return series_coefficient(w, 0, 2) + series_coefficient(w, -2, 3) + 2 * series_coefficient(w, 0, 3);
        case 3: return (w == -4 ? 1 : 0) + series_coefficient(w, -2, 3);
        default: return 0;
    }
}

template class Cohomology<Rational>;
template class Cohomology<Fp>;
template class GeneratorRegistry<Rational>;
template class GeneratorRegistry<Fp>;
template SliceHomology<Rational> compute_homology(const DgComplex<Rational>&, int, int);
template SliceHomology<Fp> compute_homology(const DgComplex<Fp>&, int, int);

}  // namespace hh
