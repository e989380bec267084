#pragma once

#include "autbound/bounds/partition.hpp"
#include "autbound/exact/rational.hpp"

#include <string>
#include <vector>

namespace autbound {

/// Upper bound on [G:Z(G)] over primitive subgroups G of GL_N(C).
Integer xi(int n);

/// B(pi,d) = mu_1! ... mu_N! * prod Xi(block) * d^r. Throws
/// PreconditionViolation for d < 3.
Integer bound_B(const Partition& pi, int d);

/// B(pi,3) / B((1^N),3).
Rational fermat_ratio(const Partition& pi);

/// Largest d >= 3 with B(pi,d) >= B((1^N),d), from d^(N-r) <= B(pi,1)/N!.
/// Throws InvalidInput for (1^N) and NotExceptional when pi fails at d = 3.
int max_exceptional_degree(const Partition& pi);

/// Same value by a linear scan over d; used to cross-check the closed form.
int max_exceptional_degree_scan(const Partition& pi);

struct ExceptionalRow {
    int index = 0;
    int n = 0;
    Partition partition;
    int max_d = 0;
    Rational ratio;
    std::string ratio_text;
};

/// Every pi != (1^N) with B(pi,3) >= B((1^N),3) for N in [n_min, n_max],
/// ordered by N then descending lexicographic partition, numbered from 1.
std::vector<ExceptionalRow> enumerate_exceptional(int n_min, int n_max);

struct HighdimReport {
    int n = 0;
    bool holds = false;
    /// The non-Fermat partition maximizing B(pi,3) and its ratio to Fermat.
    Partition best;
    Rational best_ratio;
};

/// Checks B(pi,3) < B((1^N),3) for every pi != (1^N). Requires N >= 27;
/// throws PreconditionViolation below that.
HighdimReport verify_no_exceptional(int n);

/// Three significant figures, round half up: 10.0, 6.67, 106, 0.0123.
std::string render_sig3(const Rational& value);

/// True when two decimal renderings differ by at most one unit in the last
/// displayed digit of `reference`.
bool within_one_unit(const std::string& reference, const std::string& rendered);

}  // namespace autbound
