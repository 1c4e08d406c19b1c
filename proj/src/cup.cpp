#include "hh/cup.hpp"

#include <random>

#include "hh/parse.hpp"

namespace hh {

std::string_view rule_name(ProductRule r) noexcept {
    switch (r) {
        case ProductRule::PlainWedge: return "plain-wedge";
        case ProductRule::WeightKoszul: return "weight-koszul";
    }
    return "?";
}

std::optional<ProductRule> rule_from_name(std::string_view name) noexcept {
    if (name == "plain-wedge") return ProductRule::PlainWedge;
    if (name == "weight-koszul") return ProductRule::WeightKoszul;
    return std::nullopt;
}

template <class K>
Cochain<K> cup(const Cochain<K>& f, const Cochain<K>& g, ProductRule rule) {
    const int deg = f.degree() + g.degree();
    Cochain<K> out(deg);
    if (deg > 3) return out;
    for (const auto& [lam, a] : f.components()) {
        for (const auto& [mu, b] : g.components()) {
            const auto w = wedge(lam, mu);
            if (w.sign == 0) continue;
            AlgebraElement<K> a_signed = a;
            if (rule == ProductRule::WeightKoszul && degree(mu) % 2 == 1) {
                a_signed = AlgebraElement<K>{};
                for (const auto& [m, c] : a.terms())
                    a_signed.add_term(m, m.weight() % 2 == 1 ? K(-c) : c);
            }
            out.add(w.label, multiply(a_signed, b) * FieldTraits<K>::from_int(w.sign));
        }
    }
    return out;
}

namespace {

template <class K>
Cochain<K> leibniz_rhs(const Cochain<K>& f, const Cochain<K>& g, ProductRule rule) {
    auto rhs = cup(differential(f), g, rule);
    const auto second = cup(f, differential(g), rule);
    if (f.degree() % 2 == 0) rhs += second;
    else rhs -= second;
    return rhs;
}

// Zero cochains compare equal whatever degree they were built with.
template <class K>
bool same(const Cochain<K>& a, const Cochain<K>& b) {
    return a.components() == b.components();
}

template <class K>
void record(LeibnizReport& rep, const Cochain<K>& f, const Cochain<K>& g, const Cochain<K>& lhs,
            const Cochain<K>& rhs) {
    for (const auto& v : rep.violations)
        if (v.degree_f == f.degree() && v.degree_g == g.degree()) return;
    rep.violations.push_back({f.degree(), g.degree(), to_text(f), to_text(g), to_text(lhs), to_text(rhs)});
}

}  // namespace

template <class K>
LeibnizReport check_leibniz(ProductRule rule, const LeibnizOptions& opt) {
    LeibnizReport rep;
    rep.rule = rule;
    rep.exhaustive_wmax = opt.exhaustive_wmax;
    rep.random_wmax = opt.random_wmax;

    auto test = [&](const Cochain<K>& f, const Cochain<K>& g) {
        const auto lhs = differential(cup(f, g, rule));
        const auto rhs = leibniz_rhs(f, g, rule);
        if (!same(lhs, rhs)) record(rep, f, g, lhs, rhs);
    };

    for (int i = 0; i <= 3; ++i)
        for (int j = 0; i + j <= 3; ++j)
            for (int wf = min_weight(i); wf + min_weight(j) <= opt.exhaustive_wmax; ++wf) {
                const auto bf = weight_basis(i, wf);
                if (bf.empty()) continue;
                for (int wg = min_weight(j); wf + wg <= opt.exhaustive_wmax; ++wg) {
                    const auto bg = weight_basis(j, wg);
                    for (const auto& ef : bf) {
                        const auto f = Cochain<K>::basis(ef);
                        for (const auto& eg : bg) {
                            test(f, Cochain<K>::basis(eg));
                            ++rep.exhaustive_pairs;
                        }
                    }
                }
            }

    // Modulo reduction rather than std::uniform_int_distribution keeps the
    // sample sequence identical across standard libraries.
    std::mt19937_64 rng(opt.seed);
    auto pick = [&](long lo, long hi) { return lo + static_cast<long>(rng() % static_cast<std::uint64_t>(hi - lo + 1)); };
    auto random_cochain = [&](int i, int w) {
        const auto b = weight_basis(i, w);
        Cochain<K> c(i);
        const long terms = pick(1, 3);
        for (long t = 0; t < terms; ++t) {
            long coeff = pick(-3, 2);
            if (coeff >= 0) ++coeff;
            c += Cochain<K>::basis(b[static_cast<std::size_t>(pick(0, static_cast<long>(b.size()) - 1))]) *
                 FieldTraits<K>::from_int(coeff);
        }
        return c;
    };
    while (rep.random_pairs < opt.samples) {
        const int i = static_cast<int>(pick(0, 3));
        const int j = static_cast<int>(pick(0, 3 - i));
        const int wf = static_cast<int>(pick(min_weight(i), opt.random_wmax - min_weight(j)));
        const int wg = static_cast<int>(pick(min_weight(j), opt.random_wmax - wf));
        if (weight_basis(i, wf).empty() || weight_basis(j, wg).empty()) continue;
        test(random_cochain(i, wf), random_cochain(j, wg));
        ++rep.random_pairs;
    }
    return rep;
}

template <class K>
std::optional<ProductRule> select_product_rule(const LeibnizOptions& opt, std::vector<LeibnizReport>* tried) {
    for (auto rule : {ProductRule::PlainWedge, ProductRule::WeightKoszul}) {
        auto rep = check_leibniz<K>(rule, opt);
        const bool ok = rep.pass();
        if (tried) tried->push_back(std::move(rep));
        if (ok) return rule;
    }
    return std::nullopt;
}

#define HH_INSTANTIATE(K)                                                                     \
    template Cochain<K> cup(const Cochain<K>&, const Cochain<K>&, ProductRule);               \
    template LeibnizReport check_leibniz<K>(ProductRule, const LeibnizOptions&);              \
    template std::optional<ProductRule> select_product_rule<K>(const LeibnizOptions&,         \
                                                               std::vector<LeibnizReport>*);
HH_INSTANTIATE(Rational)
HH_INSTANTIATE(Fp)
#undef HH_INSTANTIATE

}  // namespace hh
