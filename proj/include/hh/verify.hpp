#pragma once

// Batch verification: every check yields a CheckResult; nothing aborts the
// run, failures carry residuals, and the report is a pure function of
// (field, wmax, seed).

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "hh/cup.hpp"
#include "hh/homology.hpp"
#include "hh/tables.hpp"
#include "json.hpp"

namespace hh {

using Json = nlohmann::ordered_json;

inline constexpr const char* kEngineVersion = "0.1.0";

struct CheckResult {
    std::string check_id;
    std::string location;
    bool pass = false;
    std::string rule;  // filled in when the report is assembled
    Json detail;  // witness on success, residual on failure
};

struct VerifyOptions {
    int wmax = 12;
    std::uint64_t seed = 0;
    bool verbose = false;  // attach differential matrices to the dimension checks
    LeibnizOptions leibniz{};
};

struct VerificationReport {
    std::string version = kEngineVersion;
    std::string field;
    int wmax = 0;
    std::uint64_t seed = 0;
    std::string rule;
    bool rule_certified = false;
    std::vector<std::string> notes;
    std::vector<CheckResult> checks;

    std::size_t failed() const noexcept;
    bool pass() const noexcept { return failed() == 0; }
    Json to_json() const;
};

struct DimensionRow {
    int degree = 0, weight = 0;
    std::size_t dim_cochains = 0, dim_z = 0, dim_b = 0, dim_h = 0;
    long expected = 0;
    bool match() const noexcept { return static_cast<long>(dim_h) == expected; }
};

/// Per-degree offset between the weight used here and the grading in which
/// the generators of HH^1, HH^2, HH^3 sit in weights 2, 4 or 6, and 4 or 6.
inline constexpr int kShiftedGradingOffset[4] = {0, 2, 6, 8};

template <class K>
class Verifier {
public:
    explicit Verifier(VerifyOptions opt = {});

    const VerifyOptions& options() const noexcept { return opt_; }
    const Cohomology<K>& cohomology() const noexcept { return hh_; }
    /// Throws std::logic_error with the certification failure if there is one.
    const GeneratorRegistry<K>& generators() const;

    /// Runs the Leibniz gate on first use.
    ProductRule rule();
    bool rule_certified();

    std::vector<DimensionRow> dimension_rows() const;

    std::vector<CheckResult> check_complex() const;
    std::vector<CheckResult> check_center() const;
    std::vector<CheckResult> check_dimensions() const;
    std::vector<CheckResult> check_generators() const;
    std::vector<CheckResult> check_leibniz();
    CheckResult verify_table(const TableEntry& e);
    std::vector<CheckResult> verify_all_tables();
    std::vector<CheckResult> verify_module_structure();
    std::vector<CheckResult> verify_relations();
    std::vector<CheckResult> verify_redundant_cycles();
    std::vector<CheckResult> verify_generation();
    std::vector<CheckResult> verify_b1_summand();

    VerificationReport tables_report();
    VerificationReport modules_report();
    VerificationReport full_report();

    /// A cocycle's class as S-multiples of the named generators (m_0, nu_0
    /// over k[x^2, y^2] only, q_1 alone); nullopt outside their span.
    std::optional<std::map<std::string, AlgebraElement<K>>> decompose(const Cochain<K>& cocycle, int weight) const;

    Cochain<K> combination(const std::vector<ExpectedTerm>& terms) const;

private:
    struct Spanner {
        std::string name;
        Cochain<K> cochain;
        int weight = 0;
        bool x2y2_only = false;
        bool unit_only = false;
    };
    struct Multiple {
        std::string name;
        CenterMonomial s;
        Cochain<K> cochain;
    };
    std::vector<Multiple> multiples(const std::vector<Spanner>& gens, int w) const;
    std::vector<Spanner> named_spanners(int degree) const;
    std::size_t class_rank(const std::vector<Cochain<K>>& cs, int i, int w) const;
    VerificationReport make_report(std::vector<CheckResult> checks);

    VerifyOptions opt_;
    Cohomology<K> hh_;
    std::optional<GeneratorRegistry<K>> registry_;
    std::string registry_error_;
    std::optional<ProductRule> rule_;
    bool rule_certified_ = false;
    std::vector<LeibnizReport> leibniz_;
};

extern template class Verifier<Rational>;
extern template class Verifier<Fp>;

}  // namespace hh
