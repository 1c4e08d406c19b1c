#include "hh/ncpoly.hpp"

#include <algorithm>
#include <bit>
#include <utility>

namespace hh {

std::vector<PbwMonomial> monomials_of_weight(int w) {
    std::vector<PbwMonomial> out;
    if (w < 0) return out;
    for (int n3 = 0; 2 * n3 <= w; ++n3)
        for (int n2 = 0; n2 + 2 * n3 <= w; ++n2) {
            const int n1 = w - 2 * n3 - n2;
            out.push_back({static_cast<std::uint32_t>(n1), static_cast<std::uint32_t>(n2),
                           static_cast<std::uint32_t>(n3)});
        }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<CenterMonomial> center_monomials_of_weight(int w, bool include_z) {
    std::vector<CenterMonomial> out;
    if (w < 0 || w % 2 != 0) return out;
    for (const auto& m : monomials_of_weight(w)) {
        if (m.n1 % 2 != 0 || m.n2 % 2 != 0) continue;
        if (!include_z && m.n3 != 0) continue;
        out.push_back({m.n1 / 2, m.n2 / 2, m.n3});
    }
    return out;
}

MonomialProduct multiply(const PbwMonomial& a, const PbwMonomial& b) noexcept {
    MonomialProduct p;
    const PbwMonomial straight{a.n1 + b.n1, a.n2 + b.n2, a.n3 + b.n3};
    if (a.n2 % 2 == 1 && b.n1 % 2 == 1) {
        // x^2, y^2, z are central, so only one y x swap remains
        p.size = 2;
        p.terms[0] = {PbwMonomial{straight.n1 - 1, straight.n2 - 1, straight.n3 + 1}, 1};
        p.terms[1] = {straight, -1};
    } else {
        p.size = 1;
        p.terms[0] = {straight, 1};
    }
    return p;
}

template <class K>
AlgebraElement<K> AlgebraElement<K>::monomial(const PbwMonomial& m, const K& c) {
    AlgebraElement e;
    e.add_term(m, c);
    return e;
}

template <class K>
AlgebraElement<K> AlgebraElement<K>::generator(Gen g) {
    switch (g) {
        case Gen::X: return monomial({1, 0, 0});
        case Gen::Y: return monomial({0, 1, 0});
        case Gen::Z: return monomial({0, 0, 1});
    }
    return {};
}

template <class K>
K AlgebraElement<K>::coefficient(const PbwMonomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? FieldTraits<K>::from_int(0) : it->second;
}

template <class K>
std::optional<int> AlgebraElement<K>::weight() const {
    if (terms_.empty()) return std::nullopt;
    const int w = terms_.begin()->first.weight();
    if (terms_.rbegin()->first.weight() != w) return std::nullopt;
    return w;
}

template <class K>
void AlgebraElement<K>::add_term(const PbwMonomial& m, const K& c) {
    if (FieldTraits<K>::is_zero(c)) return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (inserted) return;
    it->second += c;
    if (FieldTraits<K>::is_zero(it->second)) terms_.erase(it);
}

template <class K>
AlgebraElement<K>& AlgebraElement<K>::operator+=(const AlgebraElement& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

template <class K>
AlgebraElement<K>& AlgebraElement<K>::operator-=(const AlgebraElement& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
}

template <class K>
AlgebraElement<K>& AlgebraElement<K>::operator*=(const K& c) {
    if (FieldTraits<K>::is_zero(c)) {
        terms_.clear();
        return *this;
    }
    for (auto& [m, a] : terms_) a *= c;
    return *this;
}

template <class K>
AlgebraElement<K> multiply(const AlgebraElement<K>& a, const AlgebraElement<K>& b) {
    AlgebraElement<K> out;
    for (const auto& [ma, ca] : a.terms())
        for (const auto& [mb, cb] : b.terms()) {
            const K c = ca * cb;
            const auto p = multiply(ma, mb);
            for (int k = 0; k < p.size; ++k) {
                const auto& [m, s] = p.terms[static_cast<std::size_t>(k)];
                out.add_term(m, s == 1 ? c : K(-c));
            }
        }
    return out;
}

template <class K>
AlgebraElement<K> commutator(Gen g, const AlgebraElement<K>& a) {
    const auto gen = AlgebraElement<K>::generator(g);
    return multiply(gen, a) - multiply(a, gen);
}

template <class K>
AlgebraElement<K> xi_x(const AlgebraElement<K>& a) {
    const auto x = AlgebraElement<K>::generator(Gen::X);
    return multiply(x, a) + multiply(a, x);
}

template <class K>
AlgebraElement<K> xi_y(const AlgebraElement<K>& a) {
    const auto y = AlgebraElement<K>::generator(Gen::Y);
    return multiply(y, a) + multiply(a, y);
}

namespace {

// Position of a redex (y x, z x or z y) in w, or -1.
int find_redex(const Word& w, RewriteStrategy strategy) {
    const int n = static_cast<int>(w.size());
    auto is_redex = [&](int i) { return w[i] > w[i + 1]; };
    if (strategy == RewriteStrategy::Leftmost) {
        for (int i = 0; i + 1 < n; ++i)
            if (is_redex(i)) return i;
    } else {
        for (int i = n - 2; i >= 0; --i)
            if (is_redex(i)) return i;
    }
    return -1;
}

}  // namespace

template <class K>
AlgebraElement<K> normal_form(const Word& word, const K& coeff, RewriteStrategy strategy) {
    // Words ordered so that std::map iteration is deterministic.
    std::map<Word, K> pending;
    pending.emplace(word, coeff);
    AlgebraElement<K> out;
    auto accumulate = [](std::map<Word, K>& into, Word w, const K& c) {
        auto [it, inserted] = into.try_emplace(std::move(w), c);
        if (!inserted) {
            it->second += c;
            if (FieldTraits<K>::is_zero(it->second)) into.erase(it);
        }
    };
    while (!pending.empty()) {
        auto node = pending.extract(pending.begin());
        Word w = std::move(node.key());
        const K c = node.mapped();
        if (FieldTraits<K>::is_zero(c)) continue;
        const int i = find_redex(w, strategy);
        if (i < 0) {
            PbwMonomial m;
            for (Gen g : w) {
                if (g == Gen::X) ++m.n1;
                else if (g == Gen::Y) ++m.n2;
                else ++m.n3;
            }
            out.add_term(m, c);
            continue;
        }
        const auto idx = static_cast<std::size_t>(i);
        if (w[idx] == Gen::Y && w[idx + 1] == Gen::X) {
            // y x -> z - x y
            Word with_z = w;
            with_z[idx] = Gen::Z;
            with_z.erase(with_z.begin() + i + 1);
            accumulate(pending, std::move(with_z), c);
            std::swap(w[idx], w[idx + 1]);
            accumulate(pending, std::move(w), -c);
        } else {
            // z commutes past x and y
            std::swap(w[idx], w[idx + 1]);
            accumulate(pending, std::move(w), c);
        }
    }
    return out;
}

// ---------------------------------------------------------------------------

namespace {
constexpr unsigned kT = 1, kU = 2, kV = 4;

constexpr unsigned letter_mask(Wedge w) noexcept {
    switch (w) {
        case Wedge::One: return 0;
        case Wedge::T: return kT;
        case Wedge::U: return kU;
        case Wedge::V: return kV;
        case Wedge::TU: return kT | kU;
        case Wedge::TV: return kT | kV;
        case Wedge::UV: return kU | kV;
        case Wedge::TUV: return kT | kU | kV;
    }
    return 0;
}
}  // namespace

unsigned letters(Wedge w) noexcept { return letter_mask(w); }

std::optional<Wedge> wedge_from_letters(unsigned mask) noexcept {
    for (Wedge w : kAllWedges)
        if (letter_mask(w) == mask) return w;
    return std::nullopt;
}

int degree(Wedge w) noexcept { return std::popcount(letter_mask(w)); }

int lambda_weight(Wedge w) noexcept {
    const unsigned m = letter_mask(w);
    return ((m & kT) ? 1 : 0) + ((m & kU) ? 1 : 0) + ((m & kV) ? 2 : 0);
}

std::string_view label(Wedge w) noexcept {
    switch (w) {
        case Wedge::One: return "1";
        case Wedge::T: return "t";
        case Wedge::U: return "u";
        case Wedge::V: return "v";
        case Wedge::TU: return "t^u";
        case Wedge::TV: return "t^v";
        case Wedge::UV: return "u^v";
        case Wedge::TUV: return "t^u^v";
    }
    return "?";
}

std::vector<Wedge> wedges_of_degree(int i) {
    std::vector<Wedge> out;
    for (Wedge w : kAllWedges)
        if (degree(w) == i) out.push_back(w);
    return out;
}

SignedWedge wedge(Wedge a, Wedge b) noexcept {
    const unsigned ma = letter_mask(a), mb = letter_mask(b);
    if (ma & mb) return {};
    // Sorting the concatenation only moves letters of b left past letters of
    // a; t and u commute, every transposition with v costs a sign.
    int sign = 1;
    if ((ma & kV) && (std::popcount(mb & (kT | kU)) % 2 == 1)) sign = -sign;
    return {sign, *wedge_from_letters(ma | mb)};
}

std::vector<BasisElement> weight_basis(int i, int w) {
    std::vector<BasisElement> out;
    for (Wedge lam : wedges_of_degree(i))
        for (const auto& m : monomials_of_weight(w + lambda_weight(lam))) out.push_back({lam, m});
    return out;
}

int min_weight(int i) noexcept {
    int lo = 0;
    bool any = false;
    for (Wedge lam : wedges_of_degree(i)) {
        lo = any ? std::min(lo, -lambda_weight(lam)) : -lambda_weight(lam);
        any = true;
    }
    return lo;
}

template class AlgebraElement<Rational>;
template class AlgebraElement<Fp>;

#define HH_INSTANTIATE(K)                                                                     \
    template AlgebraElement<K> multiply(const AlgebraElement<K>&, const AlgebraElement<K>&); \
    template AlgebraElement<K> commutator(Gen, const AlgebraElement<K>&);                    \
    template AlgebraElement<K> xi_x(const AlgebraElement<K>&);                               \
    template AlgebraElement<K> xi_y(const AlgebraElement<K>&);                               \
    template AlgebraElement<K> normal_form(const Word&, const K&, RewriteStrategy);
HH_INSTANTIATE(Rational)
HH_INSTANTIATE(Fp)
#undef HH_INSTANTIATE

}  // namespace hh
