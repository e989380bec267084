#pragma once

#include "autbound/exact/reduction.hpp"
#include "autbound/groups/matrix.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace autbound {

/// A finite matrix group given by generators, all stored at one conductor.
class GeneratedGroup {
public:
    /// Throws InvalidInput on an empty or singular generator list and
    /// DimensionMismatch when sizes differ.
    explicit GeneratedGroup(std::vector<CycloMatrix> generators);

    [[nodiscard]] int dimension() const { return dimension_; }
    [[nodiscard]] int conductor() const { return conductor_; }
    /// lcm(2, conductor): every root of unity in the coefficient field has
    /// order dividing this.
    [[nodiscard]] int root_order() const;
    [[nodiscard]] const std::vector<CycloMatrix>& generators() const { return generators_; }

    /// First prime >= lower_bound, = 1 mod root_order(), at which every
    /// generator entry reduces.
    [[nodiscard]] ReductionMap reduction_map(std::uint64_t lower_bound = 3) const;

private:
    std::vector<CycloMatrix> generators_;
    int dimension_ = 0;
    int conductor_ = 1;
};

enum class Tier { closure = 1, compact = 2, bsgs = 3 };

std::string to_string(Tier tier);

struct GroupCaps {
    std::uint64_t max_elements = 2'000'000;
    std::uint64_t compact_max_elements = 50'000'000;
    std::uint64_t memory_budget_mb = 3072;
    double time_budget_seconds = 900;
    /// Opt-in fingerprint closure (tier 2).
    bool allow_compact = false;
    std::uint64_t seed = 1;
};

struct GroupSummary {
    Integer order;
    Integer scalar_order;
    Integer pgl_order;
    std::optional<Integer> center_order;
    Tier tier = Tier::closure;
    /// Primes used; two entries when the two-prime protocol ran.
    std::vector<std::uint32_t> primes;
};

enum class Strategy { automatic, closure, bsgs };

/// Checks that each generator has finite order: its order k modulo p is
/// computed and g^k = I verified exactly. Throws NonFiniteOrder.
void check_generator_orders(const GeneratedGroup& g, const ReductionMap& map);

/// Tier 1: full closure of the image modulo map.prime. Counts scalars and
/// the elements commuting with every generator. Throws CapExceeded.
GroupSummary closure_order(const GeneratedGroup& g, const ReductionMap& map, const GroupCaps& caps = {});

/// Tier 2: closure keeping only 128-bit fingerprints of visited elements.
GroupSummary compact_closure_order(const GeneratedGroup& g, const ReductionMap& map, const GroupCaps& caps = {});

/// Tier 3: Schreier-Sims modulo map.prime. Throws BudgetExceeded.
GroupSummary schreier_sims_order(const GeneratedGroup& g, const ReductionMap& map, const GroupCaps& caps = {});

/// Order with the two-prime faithfulness protocol: the first prime runs the
/// chosen strategy, the next prime runs Schreier-Sims, and the orders must
/// agree (FaithfulnessSuspect otherwise). `first_prime` of 0 picks the
/// smallest valid prime.
GroupSummary group_order(const GeneratedGroup& g, const GroupCaps& caps = {}, Strategy strategy = Strategy::automatic,
                         std::uint32_t first_prime = 0);

Integer pgl_image_order(const GroupSummary& summary);

/// Every element, exactly, in breadth-first order from the identity.
std::vector<CycloMatrix> exact_elements(const GeneratedGroup& g, const GroupCaps& caps = {});

/// Closure using exact matrices as hash keys; independent of reduction.
std::vector<CycloMatrix> exact_hash_closure(const GeneratedGroup& g, std::uint64_t cap = 200'000);

/// Normal closure of the generator commutators. Throws CapExceeded.
GeneratedGroup derived_subgroup(const GeneratedGroup& g, const GroupCaps& caps = {});

/// True when the generated algebra is all of M_N, i.e. the representation
/// is (absolutely) irreducible.
bool is_irreducible(const GeneratedGroup& g);

/// For a decomposition into consecutive blocks of the given sizes, the
/// permutation of blocks induced by each generator. Throws InvalidInput when
/// a generator is not block-monomial for that decomposition.
std::vector<std::vector<int>> block_permutation_images(const GeneratedGroup& g, const std::vector<int>& block_sizes);

/// Order of the permutation group generated by `perms` on {0..r-1}.
Integer permutation_group_order(const std::vector<std::vector<int>>& perms, int r);

}  // namespace autbound
