#include "hh/verify.hpp"

#include <algorithm>
#include <set>

#include "hh/parse.hpp"

namespace hh {

namespace {

CheckResult make(std::string id, std::string location, bool pass, Json detail) {
    return {std::move(id), std::move(location), pass, {}, std::move(detail)};
}

template <class K>
Json coords_json(const std::vector<K>& v) {
    Json out = Json::array();
    for (const auto& a : v) out.push_back(FieldTraits<K>::to_string(a));
    return out;
}

template <class K>
AlgebraElement<K> central(const std::string& text) {
    auto s = parse_algebra<K>(text);
    if (!commutator(Gen::X, s).is_zero() || !commutator(Gen::Y, s).is_zero())
        throw std::logic_error("coefficient " + text + " is not central");
    return s;
}

template <class K>
Json decomposition_json(const std::optional<std::map<std::string, AlgebraElement<K>>>& d) {
    if (!d) return "outside the span of the named generators";
    Json out = Json::object();
    for (const auto& [name, s] : *d) out[name] = to_text(s);
    return out;
}

std::string terms_text(const std::vector<ExpectedTerm>& terms) {
    if (terms.empty()) return "0";
    std::string out;
    for (const auto& t : terms) {
        if (!out.empty()) out += " + ";
        out += t.generator + "*(" + t.coefficient + ")";
    }
    return out;
}

template <class K>
Json matrix_json(const Matrix<K>& m) {
    Json rows = Json::array();
    for (std::size_t r = 0; r < m.rows(); ++r) {
        Json row = Json::array();
        for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(FieldTraits<K>::to_string(m(r, c)));
        rows.push_back(std::move(row));
    }
    return rows;
}

}  // namespace

std::size_t VerificationReport::failed() const noexcept {
    return static_cast<std::size_t>(std::count_if(checks.begin(), checks.end(), [](const auto& c) { return !c.pass; }));
}

Json VerificationReport::to_json() const {
    Json j;
    j["version"] = version;
    j["field"] = field;
    j["wmax"] = wmax;
    j["seed"] = seed;
    j["active_product_rule"] = rule;
    j["product_rule_certified"] = rule_certified;
    j["notes"] = notes;
    Json cs = Json::array();
    for (const auto& c : checks) {
        Json e;
        e["check_id"] = c.check_id;
        e["location"] = c.location;
        e["status"] = c.pass ? "pass" : "fail";
        e["active_product_rule"] = c.rule;
        e["witness_or_residual"] = c.detail;
        cs.push_back(std::move(e));
    }
    j["checks"] = std::move(cs);
    j["aggregate"] = {{"status", pass() ? "pass" : "fail"}, {"passed", checks.size() - failed()}, {"failed", failed()}};
    return j;
}

template <class K>
Verifier<K>::Verifier(VerifyOptions opt) : opt_(opt) {
    opt_.leibniz.seed = opt_.seed;
    try {
        registry_.emplace(hh_);
    } catch (const std::exception& e) {
        registry_error_ = e.what();
    }
}

template <class K>
const GeneratorRegistry<K>& Verifier<K>::generators() const {
    if (!registry_) throw std::logic_error("generator certification failed: " + registry_error_);
    return *registry_;
}

template <class K>
ProductRule Verifier<K>::rule() {
    if (!rule_) {
        leibniz_.clear();
        const auto r = select_product_rule<K>(opt_.leibniz, &leibniz_);
        rule_certified_ = r.has_value();
        rule_ = r.value_or(ProductRule::PlainWedge);
    }
    return *rule_;
}

template <class K>
bool Verifier<K>::rule_certified() {
    rule();
    return rule_certified_;
}

template <class K>
std::vector<DimensionRow> Verifier<K>::dimension_rows() const {
    std::vector<DimensionRow> rows;
    for (int i = 0; i <= 3; ++i)
        for (int w = min_weight(i); w <= opt_.wmax; ++w) {
            const auto& h = hh_.slice(i, w);
            rows.push_back({i, w, h.dim_cochains(), h.dim_z(), h.dim_b(), h.dim_h(), predicted_hh_dimension(i, w)});
        }
    return rows;
}

template <class K>
std::vector<CheckResult> Verifier<K>::check_complex() const {
    const auto rep = hh_.complex().check(opt_.wmax);
    Json d{{"w_max", rep.w_max}, {"slices_checked", rep.slices_checked}};
    Json v = Json::array();
    for (const auto& x : rep.violations)
        v.push_back({{"degree", x.degree}, {"weight", x.weight}, {"witness", to_text(x.witness)}});
    d["violations"] = std::move(v);
    return {make("complex.d_squared", "the complex Lambda (x) A, d o d = 0", rep.pass(), std::move(d))};
}

template <class K>
std::vector<CheckResult> Verifier<K>::check_center() const {
    bool ok = true;
    Json rows = Json::array();
    std::size_t central_checked = 0;
    for (int w = 0; w <= opt_.wmax; ++w) {
        const long dim = static_cast<long>(hh_.slice(0, w).dim_h());
        const long expected = center_dimension(w);
        ok = ok && dim == expected;
        for (const auto& s : center_monomials_of_weight(w)) {
            const auto a = AlgebraElement<K>::monomial(s.to_pbw());
            ok = ok && commutator(Gen::X, a).is_zero() && commutator(Gen::Y, a).is_zero();
            ++central_checked;
        }
        rows.push_back({{"w", w}, {"dim", dim}, {"expected", expected}});
    }
    return {make("center.dims", "HH^0 = Z(A) = k[x^2, y^2, z]", ok,
                 {{"rows", std::move(rows)}, {"central_monomials_checked", central_checked}})};
}

template <class K>
std::vector<CheckResult> Verifier<K>::check_dimensions() const {
    std::vector<CheckResult> out;
    const auto rows = dimension_rows();
    for (int i = 0; i <= 3; ++i) {
        bool ok = true;
        Json js = Json::array();
        Json mats = Json::array();
        for (const auto& r : rows) {
            if (r.degree != i) continue;
            ok = ok && r.match();
            js.push_back({{"w", r.weight},
                          {"dim_cochains", r.dim_cochains},
                          {"dim_Z", r.dim_z},
                          {"dim_B", r.dim_b},
                          {"dim_H", r.dim_h},
                          {"expected_H", r.expected}});
            if (opt_.verbose)
                mats.push_back({{"w", r.weight}, {"d", matrix_json(hh_.complex().slice(i, r.weight).d)}});
        }
        Json d{{"rows", std::move(js)}};
        if (opt_.verbose) d["matrices"] = std::move(mats);
        out.push_back(make("homology.dims.hh" + std::to_string(i), "Hilbert series of HH^" + std::to_string(i), ok,
                           std::move(d)));
    }
    struct Spot {
        int degree, shifted, value;
    };
    for (const Spot s : {Spot{1, 2, 4}, Spot{1, 4, 11}, Spot{3, 4, 1}, Spot{3, 6, 1}}) {
        const int w = s.shifted - kShiftedGradingOffset[s.degree];
        const auto dim = hh_.slice(s.degree, w).dim_h();
        out.push_back(make("homology.spot.hh" + std::to_string(s.degree) + ".w" + std::to_string(s.shifted),
                           "spot value of dim HH^" + std::to_string(s.degree), static_cast<int>(dim) == s.value,
                           {{"shifted_weight", s.shifted}, {"weight", w}, {"dim_H", dim}, {"expected", s.value}}));
    }
    return out;
}

template <class K>
std::vector<CheckResult> Verifier<K>::check_generators() const {
    std::vector<CheckResult> out;
    for (const auto& def : generator_definitions()) {
        Json d{{"definition", def.cochain}};
        bool ok = false;
        try {
            const auto rep = parse_cochain<K>(def.cochain);
            d["normal_form"] = to_text(rep);
            d["degree"] = rep.degree();
            d["weight"] = rep.weight() ? Json(*rep.weight()) : Json(nullptr);
            const auto cls = hh_.reduce_to_class(rep);
            d["class"] = coords_json(cls.coords);
            ok = !cls.is_zero();
            if (!ok) d["boundary_witness"] = to_text(cls.boundary_witness);
        } catch (const NotACocycle<K>& e) {
            d["differential"] = to_text(e.image());
        } catch (const std::exception& e) {
            d["error"] = e.what();
        }
        out.push_back(make(std::string("generators.") + def.name, "named generators of HH^*", ok, std::move(d)));
    }
    return out;
}

template <class K>
std::vector<CheckResult> Verifier<K>::check_leibniz() {
    rule();
    Json tried = Json::array();
    for (const auto& r : leibniz_) {
        Json v = Json::array();
        for (const auto& x : r.violations)
            v.push_back({{"degrees", {x.degree_f, x.degree_g}}, {"f", x.f}, {"g", x.g}, {"lhs", x.lhs}, {"rhs", x.rhs}});
        tried.push_back({{"rule", rule_name(r.rule)},
                         {"exhaustive_wmax", r.exhaustive_wmax},
                         {"exhaustive_pairs", r.exhaustive_pairs},
                         {"random_wmax", r.random_wmax},
                         {"random_pairs", r.random_pairs},
                         {"seed", opt_.leibniz.seed},
                         {"violations", std::move(v)}});
    }
    return {make("leibniz", "product rule on Lambda (x) A", rule_certified_,
                 {{"active", rule_certified_ ? Json(rule_name(*rule_)) : Json(nullptr)}, {"tried", std::move(tried)}})};
}

template <class K>
Cochain<K> Verifier<K>::combination(const std::vector<ExpectedTerm>& terms) const {
    Cochain<K> out;
    for (const auto& t : terms)
        out += generators().at(t.generator).representative().right_multiplied(central<K>(t.coefficient));
    return out;
}

template <class K>
CheckResult Verifier<K>::verify_table(const TableEntry& e) {
    const std::string id = "table." + e.id;
    Json d{{"left", e.left}, {"right", e.right}, {"expected", terms_text(e.expected)}};
    if (!e.note.empty()) d["note"] = e.note;
    try {
        const auto& l = generators().at(e.left);
        const auto& r = generators().at(e.right);
        const int w = l.weight() + r.weight();
        const auto product = cup(l.representative(), r.representative(), rule());
        auto diff = product;
        diff -= combination(e.expected);
        d["product"] = to_text(product);
        const auto bt = hh_.is_boundary(diff, w);
        if (bt.is_boundary) {
            d["witness"] = to_text(bt.witness);
            return make(id, e.location, true, std::move(d));
        }
        d["residual"] = coords_json(bt.residual);
        d["observed"] = decomposition_json(decompose(product, w));
        return make(id, e.location, false, std::move(d));
    } catch (const std::exception& ex) {
        d["error"] = ex.what();
        return make(id, e.location, false, std::move(d));
    }
}

template <class K>
std::vector<CheckResult> Verifier<K>::verify_all_tables() {
    std::vector<CheckResult> out;
    for (const auto& e : hh1_hh1_table()) out.push_back(verify_table(e));
    for (const auto& e : hh1_hh2_table()) out.push_back(verify_table(e));
    if (!registry_) {
        out.push_back(make("commutativity", "graded commutativity", false, {{"error", registry_error_}}));
        return out;
    }
    const auto& gens = generators().all();
    for (std::size_t a = 0; a < gens.size(); ++a)
        for (std::size_t b = a; b < gens.size(); ++b) {
            const auto& f = gens[a];
            const auto& g = gens[b];
            const int i = f.degree(), j = g.degree();
            const std::string pair = f.name + "." + g.name;
            if (i + j <= 3) {
                auto diff = cup(f.representative(), g.representative(), rule());
                const auto swapped = cup(g.representative(), f.representative(), rule());
                if ((i * j) % 2 == 0) diff -= swapped;
                else diff += swapped;
                const auto bt = hh_.is_boundary(diff, f.weight() + g.weight());
                Json d{{"sign", (i * j) % 2 == 0 ? 1 : -1}};
                if (bt.is_boundary) d["witness"] = to_text(bt.witness);
                else d["residual"] = coords_json(bt.residual);
                out.push_back(make("commutativity." + pair, "graded commutativity, fg = (-1)^(ij) gf",
                                   bt.is_boundary, std::move(d)));
            } else if (i >= 2 && j >= 2) {
                const auto p = cup(f.representative(), g.representative(), rule());
                out.push_back(make("vanishing." + pair, "products HH^i HH^j with i + j > 3", p.is_zero(),
                                   {{"degree", i + j}, {"product", to_text(p)}}));
            }
        }
    return out;
}

template <class K>
auto Verifier<K>::named_spanners(int degree) const -> std::vector<Spanner> {
    std::vector<Spanner> out;
    for (const auto& g : generators().all())
        if (g.degree() == degree)
            out.push_back({g.name, g.representative(), g.weight(), g.polynomial_in_x2y2_only, g.name == "q_1"});
    return out;
}

template <class K>
auto Verifier<K>::multiples(const std::vector<Spanner>& gens, int w) const -> std::vector<Multiple> {
    std::vector<Multiple> out;
    for (const auto& g : gens) {
        const int ws = w - g.weight;
        if (ws < 0 || (g.unit_only && ws != 0)) continue;
        for (const auto& s : center_monomials_of_weight(ws, !g.x2y2_only))
            out.push_back({g.name, s, g.cochain.right_multiplied(AlgebraElement<K>::monomial(s.to_pbw()))});
    }
    return out;
}

template <class K>
std::size_t Verifier<K>::class_rank(const std::vector<Cochain<K>>& cs, int i, int w) const {
    const auto& h = hh_.slice(i, w);
    if (h.dim_h() == 0 || cs.empty()) return 0;
    std::vector<std::vector<K>> cols;
    cols.reserve(cs.size());
    for (const auto& c : cs) {
        if (c.degree() != i && !c.is_zero()) throw std::logic_error("degree mismatch in span");
        auto cls = c.is_zero() ? CohomologyClass<K>{} : hh_.reduce_to_class(c, w);
        if (c.is_zero()) cls.coords.assign(h.dim_h(), FieldTraits<K>::from_int(0));
        cols.push_back(std::move(cls.coords));
    }
    return rank(Matrix<K>::from_columns(h.dim_h(), cols));
}

template <class K>
std::optional<std::map<std::string, AlgebraElement<K>>> Verifier<K>::decompose(const Cochain<K>& cocycle,
                                                                                 int weight) const {
    const int i = cocycle.degree();
    const auto& h = hh_.slice(i, weight);
    std::map<std::string, AlgebraElement<K>> out;
    if (h.dim_h() == 0) return out;
    const auto target = hh_.reduce_to_class(cocycle, weight).coords;
    const auto ms = multiples(named_spanners(i), weight);
    std::vector<std::vector<K>> cols;
    for (const auto& m : ms) cols.push_back(hh_.reduce_to_class(m.cochain, weight).coords);
    const auto x = solve(Matrix<K>::from_columns(h.dim_h(), cols), std::span<const K>(target));
    if (!x) return std::nullopt;
    for (std::size_t k = 0; k < ms.size(); ++k)
        if (!FieldTraits<K>::is_zero((*x)[k])) out[ms[k].name] += AlgebraElement<K>::monomial(ms[k].s.to_pbw(), (*x)[k]);
    for (auto it = out.begin(); it != out.end();) it = it->second.is_zero() ? out.erase(it) : std::next(it);
    return out;
}

template <class K>
std::vector<CheckResult> Verifier<K>::verify_module_structure() {
    std::vector<CheckResult> out;
    for (const auto& rel : module_relations()) {
        const std::string id = "module." + rel.id;
        Json d{{"generator", rel.generator}, {"multiplier", rel.multiplier}, {"expected", terms_text(rel.expected)}};
        try {
            const auto& g = generators().at(rel.generator);
            const auto s = central<K>(rel.multiplier);
            const int w = g.weight() + *s.weight();
            const auto lhs = g.representative().right_multiplied(s);
            auto diff = lhs;
            diff -= combination(rel.expected);
            const auto bt = hh_.is_boundary(diff, w);
            if (bt.is_boundary) {
                d["witness"] = to_text(bt.witness);
            } else {
                d["residual"] = coords_json(bt.residual);
                d["observed"] = decomposition_json(decompose(lhs, w));
            }
            out.push_back(make(id, rel.location, bt.is_boundary, std::move(d)));
        } catch (const std::exception& ex) {
            d["error"] = ex.what();
            out.push_back(make(id, rel.location, false, std::move(d)));
        }
    }
    if (!registry_) return out;
    for (int i = 1; i <= 3; ++i) {
        bool ok = true;
        Json rows = Json::array();
        const auto gens = named_spanners(i);
        for (int w = min_weight(i); w <= opt_.wmax; ++w) {
            const auto ms = multiples(gens, w);
            std::vector<Cochain<K>> cs;
            for (const auto& m : ms) cs.push_back(m.cochain);
            const auto r = class_rank(cs, i, w);
            const auto dim = hh_.slice(i, w).dim_h();
            ok = ok && ms.size() == r && r == dim;
            rows.push_back({{"w", w}, {"multiples", ms.size()}, {"rank", r}, {"dim_H", dim}});
        }
        out.push_back(make("module.span.hh" + std::to_string(i),
                           "HH^" + std::to_string(i) + " as a direct sum of cyclic S-modules", ok,
                           {{"rows", std::move(rows)}}));
    }
    return out;
}

template <class K>
std::vector<CheckResult> Verifier<K>::verify_relations() {
    std::vector<CheckResult> out;
    for (const auto& rel : cochain_relations()) {
        Json d{{"relation", terms_text(rel.terms) + " = 0"}, {"note", rel.note}};
        bool ok = false;
        try {
            const auto sum = combination(rel.terms);
            ok = sum.is_zero();
            d["residual"] = to_text(sum);
        } catch (const std::exception& ex) {
            d["error"] = ex.what();
        }
        out.push_back(make("relation." + rel.id, rel.location, ok, std::move(d)));
    }
    return out;
}

template <class K>
std::vector<CheckResult> Verifier<K>::verify_redundant_cycles() {
    std::vector<CheckResult> out;
    for (const auto& rc : redundant_cycles()) {
        Json d{{"cochain", rc.cochain}};
        bool ok = false;
        try {
            const auto c = parse_cochain<K>(rc.cochain);
            const int w = c.weight().value();
            d["weight"] = w;
            const auto dec = decompose(c, w);
            ok = dec.has_value();
            d["decomposition"] = decomposition_json(dec);
        } catch (const NotACocycle<K>& e) {
            d["differential"] = to_text(e.image());
        } catch (const std::exception& ex) {
            d["error"] = ex.what();
        }
        out.push_back(make("remark.redundant." + rc.id, "HH^2, redundant extra generators", ok, std::move(d)));
    }
    return out;
}

template <class K>
std::vector<CheckResult> Verifier<K>::verify_generation() {
    std::vector<CheckResult> out;
    if (!registry_) {
        out.push_back(make("generation", "generation over S", false, {{"error", registry_error_}}));
        return out;
    }
    const auto& reg = generators();
    const std::vector<std::string> deg1{"m_0", "m_1", "tau_y", "mu_x"};
    auto rep = [&](const std::string& n) { return reg.at(n).representative(); };
    auto spanner = [](std::string name, Cochain<K> c, int w) { return Spanner{std::move(name), std::move(c), w}; };

    std::vector<Spanner> s1, s2, s3, hh1hh1, hh1hh2;
    for (const auto& a : deg1) s1.push_back(spanner(a, rep(a), 0));
    for (std::size_t a = 0; a < deg1.size(); ++a)
        for (std::size_t b = a; b < deg1.size(); ++b) {
            const auto ab = cup(rep(deg1[a]), rep(deg1[b]), rule());
            hh1hh1.push_back(spanner(deg1[a] + "*" + deg1[b], ab, 0));
            for (std::size_t c = b; c < deg1.size(); ++c)
                s3.push_back(spanner(deg1[a] + "*" + deg1[b] + "*" + deg1[c], cup(ab, rep(deg1[c]), rule()), 0));
        }
    s2 = hh1hh1;
    s2.push_back(spanner("nu_1", rep("nu_1"), reg.at("nu_1").weight()));
    for (const auto& a : deg1) {
        s3.push_back(spanner(a + "*nu_1", cup(rep(a), rep("nu_1"), rule()), reg.at("nu_1").weight()));
        for (const auto& g : reg.all())
            if (g.degree() == 2)
                hh1hh2.push_back(spanner(a + "*" + g.name, cup(rep(a), g.representative(), rule()), g.weight()));
    }
    s3.push_back(spanner("q_1", rep("q_1"), reg.at("q_1").weight()));

    const std::vector<Spanner>* sets[] = {nullptr, &s1, &s2, &s3};
    for (int i = 1; i <= 3; ++i) {
        bool ok = true;
        Json rows = Json::array();
        for (int w = min_weight(i); w <= opt_.wmax; ++w) {
            std::vector<Cochain<K>> cs;
            for (const auto& m : multiples(*sets[i], w)) cs.push_back(m.cochain);
            const auto r = class_rank(cs, i, w);
            const auto dim = hh_.slice(i, w).dim_h();
            ok = ok && r == dim;
            rows.push_back({{"w", w}, {"rank", r}, {"dim_H", dim}});
        }
        out.push_back(make("generation.hh" + std::to_string(i),
                           "HH^" + std::to_string(i) + " generated over S by m_0, m_1, tau_y, mu_x, nu_1, q_1", ok,
                           {{"rows", std::move(rows)}}));
    }

    struct Membership {
        std::string generator;
        const std::vector<Spanner>* span;
        std::string span_name;
        bool expect_member;
    };
    const Membership ms[] = {
        {"nu_0", &hh1hh1, "HH^1 HH^1", true},  {"nu_2", &hh1hh1, "HH^1 HH^1", true},
        {"nu_3", &hh1hh1, "HH^1 HH^1", true},  {"nu_1", &hh1hh1, "HH^1 HH^1", false},
        {"q_xy", &hh1hh2, "HH^1 HH^2", true},  {"q_1", &hh1hh2, "HH^1 HH^2", false},
    };
    for (const auto& m : ms) {
        const auto& g = reg.at(m.generator);
        std::vector<Cochain<K>> cs;
        for (const auto& x : multiples(*m.span, g.weight())) cs.push_back(x.cochain);
        const auto base = class_rank(cs, g.degree(), g.weight());
        cs.push_back(g.representative());
        const auto with = class_rank(cs, g.degree(), g.weight());
        const bool member = with == base;
        const std::string id = "generation." + m.generator + (m.expect_member ? "_in_" : "_not_in_") +
                               (m.span == &hh1hh1 ? "hh1hh1" : "hh1hh2");
        out.push_back(make(id, "generation over S, membership in " + m.span_name, member == m.expect_member,
                           {{"weight", g.weight()},
                            {"span_rank", base},
                            {"rank_with_generator", with},
                            {"member", member}}));
    }
    return out;
}

template <class K>
std::vector<CheckResult> Verifier<K>::verify_b1_summand() {
    Json d{{"cochain", kB1Summand}};
    bool ok = false;
    try {
        const auto c = parse_cochain<K>(kB1Summand);
        const auto bt = hh_.is_boundary(c);
        ok = bt.is_boundary;
        if (ok) d["witness"] = to_text(bt.witness);
        else d["residual"] = coords_json(bt.residual);
    } catch (const NotACocycle<K>& e) {
        d["differential"] = to_text(e.image());
    } catch (const std::exception& ex) {
        d["error"] = ex.what();
    }
    return {make("b1.summand", "B^1, third summand", ok, std::move(d))};
}

template <class K>
VerificationReport Verifier<K>::make_report(std::vector<CheckResult> checks) {
    VerificationReport rep;
    rep.field = FieldTraits<K>::name();
    rep.wmax = opt_.wmax;
    rep.seed = opt_.seed;
    rep.rule = std::string(rule_name(rule()));
    rep.rule_certified = rule_certified_;
    rep.notes.push_back("weight of lambda (x) a is |a| - |lambda| with |x| = |y| = |t| = |u| = 1 and |z| = |v| = 2");
    rep.notes.push_back("shifted weights in spot checks add 0, 2, 6, 8 in degrees 0..3");
    std::set<std::string> seen;
    for (const auto* table : {&hh1_hh1_table(), &hh1_hh2_table()})
        for (const auto& e : *table)
            if (!e.note.empty() && seen.insert(e.note).second) rep.notes.push_back(e.id + ": " + e.note);
    if (!rule_certified_) rep.notes.push_back("no candidate product passed the Leibniz check; product results are unsound");
    if (!registry_) rep.notes.push_back("generator certification failed: " + registry_error_);
    for (auto& c : checks) c.rule = rep.rule;
    rep.checks = std::move(checks);
    return rep;
}

template <class K>
VerificationReport Verifier<K>::tables_report() {
    auto checks = check_leibniz();
    for (auto& c : verify_all_tables()) checks.push_back(std::move(c));
    return make_report(std::move(checks));
}

template <class K>
VerificationReport Verifier<K>::modules_report() {
    std::vector<CheckResult> checks;
    for (auto group : {&Verifier::check_generators})
        for (auto& c : (this->*group)()) checks.push_back(std::move(c));
    for (auto group : {&Verifier::verify_module_structure, &Verifier::verify_relations,
                       &Verifier::verify_redundant_cycles, &Verifier::verify_generation, &Verifier::verify_b1_summand})
        for (auto& c : (this->*group)()) checks.push_back(std::move(c));
    return make_report(std::move(checks));
}

template <class K>
VerificationReport Verifier<K>::full_report() {
    std::vector<CheckResult> checks;
    for (auto group : {&Verifier::check_complex, &Verifier::check_center, &Verifier::check_dimensions,
                       &Verifier::check_generators})
        for (auto& c : (this->*group)()) checks.push_back(std::move(c));
    for (auto group : {&Verifier::check_leibniz, &Verifier::verify_all_tables, &Verifier::verify_module_structure,
                       &Verifier::verify_relations, &Verifier::verify_redundant_cycles, &Verifier::verify_generation,
                       &Verifier::verify_b1_summand})
        for (auto& c : (this->*group)()) checks.push_back(std::move(c));
    return make_report(std::move(checks));
}

template class Verifier<Rational>;
template class Verifier<Fp>;

}  // namespace hh
