#pragma once

#include <array>

#include "ybq/types.hpp"

namespace ybq {

// Single-qutrit labels m in {1, 0, -1} map to row indices {0, 1, 2}.
// Two-qutrit product states |m n> are stored in lexicographic (kron) order:
//   lex(m, n) = 3*index(m) + index(n).
// The display ordering used for printed 9x9 matrices is
//   {|11>,|10>,|01>,|1-1>,|00>,|-11>,|0-1>,|-10>,|-1-1>},
// which differs from lex order by the transpositions (2,3) and (5,6).

inline constexpr std::array<int, 3> kLabels = {1, 0, -1};

/// Label -> index. Throws BadLabel for anything outside {1, 0, -1}.
int label_index(int m);

/// Lexicographic index of the product state |m n|.
int lex_index(int m, int n);

/// Permutation matrix P with (paper coords) = P * (lex coords).
/// Orthogonal: P P^T = I exactly.
ComplexMatrix paper_permutation();

/// Re-express a lex-ordered matrix in display order: P A P^T.
ComplexMatrix to_paper_order(const ComplexMatrix& a);

/// Lex indices of the k-th invariant 3-dim subspace, ordered as the
/// eigenstate displays list them:
///   k=1: {|10>,|01>,|-1-1>}   k=2: {|11>,|0-1>,|-10>}   k=3: {|00>,|1-1>,|-11>}
std::array<int, 3> subsystem_basis(int k);

}  // namespace ybq
