#pragma once

#include "autbound/bounds/partition.hpp"
#include "autbound/groups/matrix.hpp"
#include "autbound/poly/homog_poly.hpp"

#include <optional>
#include <string>
#include <vector>

namespace autbound {

struct ExpectedOrders {
    Integer linf_order;
    Integer scalar_order;
    Integer linx_order;
};

struct ExampleRecord {
    std::string id;
    int n = 0;
    int d = 0;
    std::vector<CycloMatrix> generators;
    std::optional<HomogPoly> polynomial;
    ExpectedOrders expected;
    /// Consecutive block sizes of the primitive decomposition.
    std::vector<int> block_sizes;
    /// False when the printed polynomial and generators use different
    /// coordinates (ex-1-6); invariance is then expected to fail.
    bool printed_invariance = true;
    /// The order check needs Schreier-Sims at a scale beyond the default budget.
    bool needs_tier3 = false;
    std::string notes;

    [[nodiscard]] Partition partition() const;
};

/// The eight exceptional examples, ordered by id.
const std::vector<ExampleRecord>& exceptional_examples();

/// Fermat hypersurface of dimension n and degree d: diagonal d-th roots of
/// unity and all permutations.
ExampleRecord fermat_example(int n, int d);

/// Looks up an exceptional id or "fermat-N-D". Throws UnknownId.
ExampleRecord find_example(const std::string& id);

struct GroupRecord {
    std::string id;
    std::vector<CycloMatrix> generators;
    std::string notes;
};

/// Small linear groups used by the invariant-degree checks: "2.A5", "2.S4",
/// "2.A4", "Q8", "minus-identity", "klein", "valentiner", "A5-3dim".
const std::vector<GroupRecord>& named_groups();

/// Throws UnknownId.
const GroupRecord& find_group(const std::string& id);

/// The printed (non-unitary) fourth generator of ex-1-6, kept for tests.
CycloMatrix wiman_printed_m4();

/// The printed fifth generator of ex-2-4. It does not fix the quartic; the
/// catalog uses diag(1, 1, i, i) times it.
CycloMatrix quartic_printed_m5();

}  // namespace autbound
