#pragma once

#include "autbound/groups/generated_group.hpp"
#include "autbound/poly/homog_poly.hpp"

#include <vector>

namespace autbound {

struct MolienPrefix {
    Integer group_order;
    /// coefficients[k] = dimension of the degree-k invariants.
    std::vector<Integer> coefficients;
};

/// (1/|G|) sum_g 1/det(I - t g) up to t^max_degree, each term expanded by
/// the recurrence from the characteristic polynomial. Throws CapExceeded
/// beyond caps.max_elements, and InvalidInput if an averaged coefficient is
/// not a non-negative integer.
MolienPrefix molien_series(const GeneratedGroup& g, int max_degree = 24, const GroupCaps& caps = {});

Integer invariant_dimension(const GeneratedGroup& g, int k, const GroupCaps& caps = {});

/// Ranks of the Reynolds operators on forms of degree 0..max_degree,
/// computed over F_p for a prime p not dividing |G|. Throws CapExceeded when
/// the summed operator matrices would exceed `workspace_cap` entries.
std::vector<int> reynolds_ranks(const GeneratedGroup& g, int max_degree, const GroupCaps& caps = {},
                                std::uint64_t workspace_cap = 4'000'000);

/// Basis of the degree-k invariants: exact Reynolds images of the monomials
/// whose images are independent modulo p. Throws CapExceeded when
/// |G| * (number of monomials) exceeds `workspace_cap`.
std::vector<HomogPoly> reynolds_basis(const GeneratedGroup& g, int k, const GroupCaps& caps = {},
                                      std::uint64_t workspace_cap = 20'000'000);

/// Smallest k in [1, cap] with a nonzero degree-k invariant. Throws NoneFound.
int smallest_invariant_degree(const GeneratedGroup& g, int cap = 24, const GroupCaps& caps = {});

/// Smallest invariant degree of the derived subgroup. Throws NoneFound.
int smallest_semiinvariant_degree(const GeneratedGroup& g, int cap = 24, const GroupCaps& caps = {});

}  // namespace autbound
