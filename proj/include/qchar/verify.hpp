#pragma once

// Verification harness: property sweeps over Cartan types, fundamental
// q-characters and Weyl group elements. THEOREM-class checks must pass;
// CONJECTURE-class checks record evidence.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "qchar/braid.hpp"
#include "qchar/fm.hpp"
#include "qchar/io.hpp"
#include "qchar/lweight.hpp"
#include "qchar/xseries.hpp"

namespace qchar {

enum class CheckClass { theorem, conjecture };
enum class CheckStatus { pass, fail, evidence_pass };

const char* to_string(CheckClass c);
const char* to_string(CheckStatus s);

struct CheckResult {
    std::string check_id;
    CheckClass klass = CheckClass::theorem;
    std::string type;  // "B2"; empty for suite-level results
    int rank = 0;
    int node = 0;      // 0 when not node-specific
    std::optional<std::vector<int>> w;
    CheckStatus status = CheckStatus::pass;
    std::string witness;
    double elapsed_ms = 0;

    bool failed() const { return status == CheckStatus::fail; }
};

json to_json(const CheckResult& r);

/// Per-type state shared by all checks on that type.
struct TypeContext {
    CartanPtr cd;
    BraidAction braid;
    ExtendedBraid ext;
    bool full_weyl = false;
    std::vector<WeylElement> sweep;  // all of W, or the sample
    std::vector<QCharacter> fundamentals;  // index node - 1

    TypeContext(CartanPtr cd, bool full_weyl, std::vector<WeylElement> sweep,
                std::vector<QCharacter> fundamentals);
};

/// Identity, simple reflections, w0, then `extra` distinct random elements
/// drawn from a generator seeded with `seed`.
std::vector<WeylElement> sample_weyl(const CartanData& cd, int extra, std::uint64_t seed);

/// e, simple reflections and w0: the cases where the extremal property is proved.
bool extremal_property_proved(const CartanData& cd, const WeylElement& w);

CheckResult check_extremal_property(const BraidAction& braid, const QCharacter& qc,
                                    const WeylElement& w);
CheckResult check_weak_property(const BraidAction& braid, const QCharacter& qc,
                                const std::vector<WeylElement>& ws);
CheckResult check_extremal_multiplicity(const BraidAction& braid, const QCharacter& qc,
                                        const std::vector<WeylElement>& ws);
CheckResult check_polynomiality(const BraidAction& braid, const QCharacter& qc,
                                const WeylElement& w);

struct SuiteConfig {
    std::vector<std::string> types;          // labels such as "A2"
    std::vector<std::string> full_weyl_types;
    int sample_extra = 50;
    std::uint64_t seed = 20240607;
    int order = 12;
    Rational q = 2;
    int oracle_pairs = 200;
    int jobs = 1;
    QCharacterCache* cache = nullptr;  // null: private in-memory cache

    static SuiteConfig defaults();
};

/// Throws std::invalid_argument for an unknown type label.
std::vector<CheckResult> run_suite(const SuiteConfig& config);

struct SuiteSummary {
    int theorem_failures = 0;
    int conjecture_failures = 0;
    int total = 0;
};

SuiteSummary summarize(const std::vector<CheckResult>& results);
/// Per-check counts as an aligned text table.
std::string summary_table(const std::vector<CheckResult>& results);

/// The identifiers run_suite emits, in emission order.
std::vector<std::string> suite_check_ids();

} // namespace qchar
