#pragma once

// Products on Lambda (x) A and the Leibniz gate they must pass before any
// multiplication table is read off them.

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "hh/complex.hpp"

namespace hh {

enum class ProductRule {
    /// (l (x) a)(m (x) b) = (l ^ m) (x) ab, wedge signs only.
    PlainWedge,
    /// As PlainWedge with an extra (-1)^(deg m * |a|).
    WeightKoszul,
};

std::string_view rule_name(ProductRule r) noexcept;
std::optional<ProductRule> rule_from_name(std::string_view name) noexcept;

/// Bilinear; degree and weight add. Products of total degree > 3 are the zero
/// cochain of that degree.
template <class K>
Cochain<K> cup(const Cochain<K>& f, const Cochain<K>& g, ProductRule rule = ProductRule::PlainWedge);

struct LeibnizViolation {
    int degree_f = 0, degree_g = 0;
    std::string f, g;      // cochain text
    std::string lhs, rhs;  // d(fg) and d(f)g + (-1)^deg f f d(g)
};

struct LeibnizReport {
    ProductRule rule = ProductRule::PlainWedge;
    int exhaustive_wmax = 0;
    int random_wmax = 0;
    std::size_t exhaustive_pairs = 0;
    std::size_t random_pairs = 0;
    /// First violation per (deg f, deg g), in that order.
    std::vector<LeibnizViolation> violations;
    bool pass() const noexcept { return violations.empty(); }
};

struct LeibnizOptions {
    /// Every basis pair with w(f) + w(g) <= exhaustive_wmax.
    int exhaustive_wmax = 8;
    /// Random combinations of up to three basis cochains with w(f) + w(g) <= random_wmax.
    int random_wmax = 10;
    std::size_t samples = 1000;
    std::uint64_t seed = 0;
};

template <class K>
LeibnizReport check_leibniz(ProductRule rule, const LeibnizOptions& opt);

/// PlainWedge if it passes, else WeightKoszul if that does; nullopt if neither.
template <class K>
std::optional<ProductRule> select_product_rule(const LeibnizOptions& opt, std::vector<LeibnizReport>* tried = nullptr);

}  // namespace hh
