#pragma once

#include "wallach/decomp.hpp"

namespace wallach {

/// Desk-scale default: largest defining-representation matrix size accepted by
/// the flag-family constructors.
inline constexpr int kDefaultMatrixCap = 12;

/// so/su/sp(k+l+m) over the block subalgebra h (so(k)+so(l)+so(m),
/// s(u(k)+u(l)+u(m)), sp(k)+sp(l)+sp(m)); p1, p2, p3 are the off-diagonal
/// block pairs (k,l), (k,m), (l,m). Dimensions are kl, km, lm scaled by
/// 1, 2, 4 for SO, SU, SP.
GradedDecomposition make_flag_family(Family family, int k, int l, int m,
                                     int max_matrix_size = kDefaultMatrixCap);

/// su(2l) with h = u(l), via the commuting pair (symplectic twist, entrywise
/// conjugation). Module dims (l(l-1), l(l+1), l^2-1). Requires l >= 2.
GradedDecomposition make_su_u(int l, int max_matrix_size = kDefaultMatrixCap);

/// so(2l) with h = u(1)+u(l-1). Module dims (2(l-1), 2(l-1), (l-1)(l-2)).
/// Requires l >= 4.
GradedDecomposition make_so_u(int l, int max_matrix_size = kDefaultMatrixCap);

/// f+f+f+f with h = diag(f) and p_i the three sign-pattern modules, each of
/// dimension dim f. f must be a simple classical algebra.
GradedDecomposition make_ledger_obata(Family f_family, int f_param,
                                      int max_f_matrix_size = 8);

}  // namespace wallach
