#include "hh/complex.hpp"

#include <algorithm>
#include <stdexcept>

namespace hh {

template <class K>
Cochain<K> Cochain<K>::single(Wedge lam, AlgebraElement<K> a) {
    Cochain c(hh::degree(lam));
    c.add(lam, a);
    return c;
}

template <class K>
Cochain<K> Cochain<K>::basis(const BasisElement& e) {
    return single(e.label, AlgebraElement<K>::monomial(e.mono));
}

template <class K>
AlgebraElement<K> Cochain<K>::component(Wedge lam) const {
    auto it = components_.find(lam);
    return it == components_.end() ? AlgebraElement<K>{} : it->second;
}

template <class K>
std::optional<int> Cochain<K>::weight() const {
    std::optional<int> w;
    for (const auto& [lam, a] : components_) {
        const auto aw = a.weight();
        if (!aw) return std::nullopt;
        const int cw = *aw - lambda_weight(lam);
        if (w && *w != cw) return std::nullopt;
        w = cw;
    }
    return w;
}

template <class K>
void Cochain<K>::add(Wedge lam, const AlgebraElement<K>& a) {
    if (hh::degree(lam) != degree_)
        throw std::invalid_argument("cochain of degree " + std::to_string(degree_) +
                                    " cannot take a component on " + std::string(hh::label(lam)));
    if (a.is_zero()) return;
    auto& slot = components_[lam];
    slot += a;
    if (slot.is_zero()) components_.erase(lam);
}

template <class K>
Cochain<K>& Cochain<K>::operator+=(const Cochain& o) {
    if (o.is_zero()) return *this;
    if (is_zero()) degree_ = o.degree_;
    for (const auto& [lam, a] : o.components_) add(lam, a);
    return *this;
}

template <class K>
Cochain<K>& Cochain<K>::operator-=(const Cochain& o) {
    if (o.is_zero()) return *this;
    if (is_zero()) degree_ = o.degree_;
    for (const auto& [lam, a] : o.components_) add(lam, -a);
    return *this;
}

template <class K>
Cochain<K>& Cochain<K>::operator*=(const K& c) {
    if (FieldTraits<K>::is_zero(c)) {
        components_.clear();
        return *this;
    }
    for (auto& [lam, a] : components_) a *= c;
    return *this;
}

template <class K>
Cochain<K> Cochain<K>::right_multiplied(const AlgebraElement<K>& s) const {
    Cochain out(degree_);
    for (const auto& [lam, a] : components_) out.add(lam, multiply(a, s));
    return out;
}

template <class K>
Cochain<K> Cochain<K>::left_multiplied(const AlgebraElement<K>& s) const {
    Cochain out(degree_);
    for (const auto& [lam, a] : components_) out.add(lam, multiply(s, a));
    return out;
}

template <class K>
Cochain<K> differential(const Cochain<K>& c) {
    Cochain<K> out(c.degree() + 1);
    for (const auto& [lam, a] : c.components()) {
        switch (lam) {
            case Wedge::One:
                out.add(Wedge::T, commutator(Gen::X, a));
                out.add(Wedge::U, commutator(Gen::Y, a));
                break;
            case Wedge::T: out.add(Wedge::TU, xi_y(a)); break;
            case Wedge::U: out.add(Wedge::TU, xi_x(a)); break;
            case Wedge::V:
                out.add(Wedge::TV, commutator(Gen::X, a));
                out.add(Wedge::UV, commutator(Gen::Y, a));
                out.add(Wedge::TU, a);
                break;
            case Wedge::TU: break;
            case Wedge::TV: out.add(Wedge::TUV, xi_y(a)); break;
            case Wedge::UV: out.add(Wedge::TUV, xi_x(a)); break;
            case Wedge::TUV: break;
        }
    }
    return out;
}

template <class K>
std::vector<K> coordinates(const Cochain<K>& c, std::span<const BasisElement> basis) {
    std::vector<K> v(basis.size(), FieldTraits<K>::from_int(0));
    for (const auto& [lam, a] : c.components())
        for (const auto& [m, coef] : a.terms()) {
            const BasisElement key{lam, m};
            auto it = std::find(basis.begin(), basis.end(), key);
            if (it == basis.end())
                throw std::invalid_argument("cochain term outside the requested weight slice");
            v[static_cast<std::size_t>(it - basis.begin())] = coef;
        }
    return v;
}

template <class K>
Cochain<K> from_coordinates(int degree, std::span<const BasisElement> basis, std::span<const K> v) {
    Cochain<K> c(degree);
    for (std::size_t k = 0; k < basis.size(); ++k)
        if (!FieldTraits<K>::is_zero(v[k])) c.add(basis[k].label, AlgebraElement<K>::monomial(basis[k].mono, v[k]));
    return c;
}

template <class K>
WeightSlice<K> build_slice(int i, int w) {
    WeightSlice<K> s;
    s.degree = i;
    s.weight = w;
    s.domain = weight_basis(i, w);
    s.codomain = weight_basis(i + 1, w);
    s.d = Matrix<K>(s.codomain.size(), s.domain.size());
    for (std::size_t col = 0; col < s.domain.size(); ++col) {
        const auto image = differential(Cochain<K>::basis(s.domain[col]));
        const auto v = coordinates(image, std::span<const BasisElement>(s.codomain));
        for (std::size_t row = 0; row < v.size(); ++row) s.d(row, col) = v[row];
    }
    return s;
}

template <class K>
const WeightSlice<K>& DgComplex<K>::slice(int i, int w) const {
    const auto key = std::pair{i, w};
    {
        std::lock_guard lock(mutex_);
        if (auto it = cache_.find(key); it != cache_.end()) return *it->second;
    }
    auto built = std::make_shared<const WeightSlice<K>>(build_slice<K>(i, w));
    std::lock_guard lock(mutex_);
    auto [it, inserted] = cache_.try_emplace(key, std::move(built));
    return *it->second;
}

template <class K>
ComplexReport DgComplex<K>::check(int w_max) const {
    ComplexReport report;
    report.w_max = w_max;
    for (int i = 0; i <= 2; ++i)
        for (int w = min_weight(i); w <= w_max; ++w) {
            const auto& first = slice(i, w);
            const auto& second = slice(i + 1, w);
            ++report.slices_checked;
            if (first.domain.empty() || second.codomain.empty()) continue;
            const auto composite = second.d * first.d;
            for (std::size_t col = 0; col < composite.cols(); ++col) {
                bool zero = true;
                for (std::size_t row = 0; row < composite.rows() && zero; ++row)
                    zero = FieldTraits<K>::is_zero(composite(row, col));
                if (!zero) report.violations.push_back({i, w, first.domain[col]});
            }
        }
    return report;
}

template class Cochain<Rational>;
template class Cochain<Fp>;
template class DgComplex<Rational>;
template class DgComplex<Fp>;

#define HH_INSTANTIATE(K)                                                                              \
    template Cochain<K> differential(const Cochain<K>&);                                              \
    template std::vector<K> coordinates(const Cochain<K>&, std::span<const BasisElement>);           \
    template Cochain<K> from_coordinates(int, std::span<const BasisElement>, std::span<const K>);     \
    template WeightSlice<K> build_slice(int, int);
HH_INSTANTIATE(Rational)
HH_INSTANTIATE(Fp)
#undef HH_INSTANTIATE

}  // namespace hh
