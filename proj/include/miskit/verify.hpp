#pragma once

#include "miskit/io.hpp"

#include <optional>

namespace miskit {

/// One verified property. Status is `skipped` when the property does not
/// apply to the instance (e.g. no perfect orthogonal pairing exists); a skip
/// is not a failure.
struct CheckResult {
    enum class Status { pass, fail, skipped };

    std::string id;   // stable identifier, e.g. "2.1" or "gap"
    std::string name; // what the property asserts
    Status status = Status::pass;
    std::string detail; // counterexample or skip reason
};

struct VerificationReport {
    std::vector<CheckResult> checks;

    int passed() const;
    int failed() const;
    int skipped() const;
    bool ok() const { return failed() == 0; }
};

/// Ids accepted by verify(), in report order.
const std::vector<std::string>& known_check_ids();

/// Runs the selected structural checks against one instance. An empty scope
/// selects everything. Enumeration-backed checks obey the solver capacity
/// guard; oversized instances are refused with capacity_error.
VerificationReport verify(const GraphDocument& doc, const std::vector<std::string>& scope = {},
                          bool override_guard = false);

std::string format_set(const VertexSet& s);

/// Check primitives shared with the test suites. Each returns a
/// counterexample description, or nullopt when the property holds. The pair
/// lists are parameters so corrupted inputs can be exercised directly.
namespace checks {

/// Every MIS hits each listed pair in exactly one endpoint.
std::optional<std::string> pairs_hit_exactly_once(const std::vector<std::pair<int, int>>& pairs,
                                                  const std::vector<VertexSet>& all_mis);

/// Every listed set is a union of the partition's classes.
std::optional<std::string> sets_are_class_unions(const std::vector<VertexSet>& classes,
                                                 const std::vector<VertexSet>& sets);

/// All listed sets have the stated cardinality.
std::optional<std::string> sets_have_cardinality(int cardinality,
                                                 const std::vector<VertexSet>& sets);

} // namespace checks

} // namespace miskit
