#pragma once

#include "autbound/catalog/registry.hpp"
#include "autbound/groups/generated_group.hpp"

#include <filesystem>
#include <string>
#include <vector>

namespace autbound {

enum class CheckStatus { pass, fail, skipped };

std::string to_string(CheckStatus s);

struct Check {
    std::string name;
    std::string expected;
    std::string computed;
    CheckStatus status = CheckStatus::skipped;
    std::string note;
};

enum class Outcome { pass, conditional_pass, fail };

std::string to_string(Outcome o);

struct VerificationReport {
    std::string id;
    std::vector<Check> checks;
    std::string tier;
    double seconds = 0;

    /// fail if any check failed, conditional_pass if any was skipped.
    [[nodiscard]] Outcome outcome() const;
};

struct VerifyOptions {
    GroupCaps caps;
    /// Run order checks that are marked as needing Schreier-Sims at scale.
    bool tier3 = false;
};

VerificationReport verify_example(const ExampleRecord& r, const VerifyOptions& options = {});
/// Throws UnknownId.
VerificationReport verify_example(const std::string& id, const VerifyOptions& options = {});

struct FermatGrid {
    int n_max = 2;
    int d_min = 3;
    int d_max = 5;
};

/// Reports for `registry` (in id order) followed by the Fermat grid n in
/// [1, n_max], d in [d_min, d_max].
std::vector<VerificationReport> verify_all(const std::vector<ExampleRecord>& registry, const VerifyOptions& options = {},
                                           const FermatGrid& grid = {});

/// Compares expected orders with the bound calculus: the published
/// six-case bounds, the Fermat comparison, B(pi, d) and the scalar subgroup.
VerificationReport bound_consistency(const ExampleRecord& r);

/// Externally sourced groups (data/external/*.json) with their claimed
/// smallest semi-invariant degree. A missing file yields a skipped check.
struct ExternalSpec {
    std::string id;
    std::string file;
    int expected_degree = 0;
};

const std::vector<ExternalSpec>& external_specs();

std::vector<VerificationReport> verify_external(const std::filesystem::path& dir, const VerifyOptions& options = {});

/// 0 when every report passes, 1 on any failure, 3 when something was
/// skipped and nothing failed.
int exit_code(const std::vector<VerificationReport>& reports);

}  // namespace autbound
