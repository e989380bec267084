#pragma once

#include "autbound/linalg/dense.hpp"

#include <vector>

namespace autbound {

/// lcm of the entry conductors.
int matrix_conductor(const CycloMatrix& m);

/// Every entry stored at conductor m (a multiple of matrix_conductor).
CycloMatrix lift_matrix(const CycloMatrix& m, int conductor);

/// Matrix sending e_j to e_perm[j].
CycloMatrix permutation_matrix(const std::vector<int>& perm);

CycloMatrix diagonal_matrix(const std::vector<Cyclotomic>& diag);

CycloMatrix scalar_matrix(int n, const Cyclotomic& c);

CycloMatrix block_diagonal(const std::vector<CycloMatrix>& blocks);

/// Block permutation matrix with square identity blocks of size `block`,
/// sending block j to block perm[j].
CycloMatrix block_permutation_matrix(const std::vector<int>& perm, int block);

CycloMatrix scale(const CycloMatrix& m, const Cyclotomic& c);

bool is_scalar(const CycloMatrix& m);

CycloMatrix matrix_power(const CycloMatrix& m, long e);

}  // namespace autbound
