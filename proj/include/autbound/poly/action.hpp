#pragma once

#include "autbound/linalg/dense.hpp"
#include "autbound/poly/homog_poly.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace autbound {

/// f(A x): each x_i replaced by sum_j A(i,j) x_j. Throws DimensionMismatch.
HomogPoly substitute(const CycloMatrix& a, const HomogPoly& f);

/// (g.f)(x) = f(g^{-1} x). A left action.
HomogPoly act(const CycloMatrix& g, const HomogPoly& f);

bool is_invariant(const std::vector<CycloMatrix>& gens, const HomogPoly& f);

/// chi(g) with g.f = chi(g) f for each generator, or nullopt when some image
/// is not proportional to f.
std::optional<std::vector<Cyclotomic>> semi_invariant_character(const std::vector<CycloMatrix>& gens,
                                                                const HomogPoly& f);

struct VariableWitness {
    int variable = 0;
    /// x_j^d if present, else x_j^(d-1) x_k with the smallest k.
    std::optional<Monomial> witness;
};

struct SmoothnessReport {
    std::vector<VariableWitness> variables;
    bool pass = false;
};

SmoothnessReport smoothness_necessary(const HomogPoly& f);

/// True when for every k-subset S of the variables some monomial of f
/// involves none of S. Requires 1 <= k < nvars (PreconditionViolation).
bool avoids_variables(const HomogPoly& f, int k);

struct DiagonalStabilizer {
    Integer order;
    std::vector<Integer> elementary_divisors;
};

/// Torsion of Z^N modulo the row lattice of `rows`. Throws RankDeficient
/// when the lattice has rank < N.
DiagonalStabilizer lattice_torsion(const IntMatrix& rows);

/// Exponent matrix, one row per term.
IntMatrix exponent_matrix(const HomogPoly& f);

/// Diagonal matrices fixing f, as the torsion of its exponent lattice.
DiagonalStabilizer diagonal_stabilizer(const HomogPoly& f);

struct MinorReport {
    IntMatrix minor;
    Integer determinant;
    Integer bound;  // d^N
    bool ok = false;
};

/// Square minor of smoothness witnesses. Throws PreconditionViolation when a
/// variable has no witness.
MinorReport exponent_minor_bound(const HomogPoly& f);

/// Substitutes x_j = c_j y_b for j in block b (consecutive blocks).
HomogPoly collapse_blocks(const HomogPoly& f, const std::vector<int>& block_sizes,
                          const std::vector<Cyclotomic>& constants);

struct BlockCollapseReport {
    int draws = 0;
    /// Index of the first draw whose collapse keeps a witness per block.
    std::optional<int> good_draw;
    std::optional<HomogPoly> collapsed;
    std::optional<DiagonalStabilizer> stabilizer;
};

/// Block-scalar stabilizer via random collapse: up to `draws` sets of
/// constants from a seeded generator, nonzero integers in [-50, 50].
BlockCollapseReport block_scalar_stabilizer(const HomogPoly& f, const std::vector<int>& block_sizes,
                                            std::uint64_t seed, int draws = 8);

}  // namespace autbound
