#pragma once

// Grid runner: evaluates each family instance exhaustively, compares with the
// predicted verdict, and reports records in sorted parameter order.

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "ffperm/field.hpp"
#include "ffperm/maps.hpp"

namespace ffperm {

struct VerificationRecord {
    FamilyId family = FamilyId::F1;
    unsigned p = 0;
    unsigned k = 0;
    std::optional<unsigned> l, m, n;
    std::optional<Index> c_index;
    bool empirical = false;
    bool predicted = false;
    std::optional<double> elapsed_ms;  // only when timing is requested

    bool match() const { return empirical == predicted; }
};

/// Exhaustive verdict for the family's defining property (see Domain).
bool empirical_verdict(const Field& f3, const FamilySpec& spec);

/// Evaluates one instance; timing adds elapsed_ms.
VerificationRecord check_instance(const Field& f3, const FamilySpec& spec, bool timing = false);

enum class CoefPolicy {
    Default,       // F_q^* for Main1/F6, all of GF(q^3) for Main3/MainDeg3
    AllField,
    SubfieldStar,
    Fixed,         // GridConfig::c_index
    One,
};

std::optional<CoefPolicy> parse_coef_policy(const std::string& name);

struct GridConfig {
    FamilyId family = FamilyId::F1;
    std::vector<unsigned> primes{2};
    unsigned k_min = 1;
    unsigned k_max = 1;
    /// Exponent range [exp_min, exp_max) for l, m, n; exp_max defaults to 3k.
    unsigned exp_min = 0;
    std::optional<unsigned> exp_max;
    CoefPolicy c_policy = CoefPolicy::Default;
    std::optional<Index> c_index;
    /// AllField draws a seeded sample of this many elements when |GF(q^3)| is larger.
    std::uint64_t c_sample_cap = 512;
    std::uint64_t c_seed = 0x5eedULL;
    /// (p, k) with p^{3k} above this are skipped.
    std::uint64_t field_cap = std::uint64_t{1} << 18;
    /// Seconds; 0 disables the budget.
    double time_budget_s = 0;
    unsigned jobs = 1;
    bool timing = false;
    FieldLimits limits;
};

struct SuiteSummary {
    std::size_t points = 0;
    std::size_t matches = 0;
    std::size_t mismatches = 0;
    bool complete = true;
    std::vector<std::pair<unsigned, unsigned>> skipped;  // (p, k) above field_cap
    double elapsed_s = 0;

    bool ok() const { return complete && mismatches == 0; }
};

struct SuiteResult {
    std::vector<VerificationRecord> records;
    SuiteSummary summary;
};

/// Throws SpecError for an empty or inconsistent grid.
SuiteResult run_suite(const GridConfig& cfg);

/// Coefficients chosen by the policy, sorted by index.
std::vector<Elem> coefficient_choices(const Field& f3, unsigned k, FamilyId family, const GridConfig& cfg);

nlohmann::ordered_json to_json(const VerificationRecord& r);
nlohmann::ordered_json to_json(const SuiteSummary& s);
std::string csv_header();
std::string to_csv(const VerificationRecord& r);

void write_jsonl(std::ostream& out, const std::vector<VerificationRecord>& records);
void write_csv(std::ostream& out, const std::vector<VerificationRecord>& records);

}  // namespace ffperm
