#pragma once

#include <cstdint>

#include "qmatroid/budget.hpp"
#include "qmatroid/field.hpp"
#include "qmatroid/fq_matrix.hpp"
#include "qmatroid/matroid.hpp"
#include "qmatroid/numeric.hpp"

namespace qmatroid {

/// |{alpha in (F_q^*)^E : M alpha = 0}| by exhaustive enumeration; the
/// critical-theorem count, equal to the dual characteristic polynomial at q.
Int nowhere_zero_kernel_count(const RepMatroid& m,
                              std::uint64_t budget = kDefaultEnumerationBudget);

/// Number of pairs (x in F_q^V, alpha in (F_q^*)^E) with
/// sum_e alpha_e (xM)_e^j = b. Independent of j >= 1, equal for every b != 0,
/// and (N_0 - N_1) / q^|V| recovers the dual characteristic polynomial at q.
Int quadratic_form_count(const RepMatroid& m, int j, const FieldElement& b,
                         std::uint64_t budget = kDefaultEnumerationBudget);

/// Closed-form number of x in F_q^n with x B x^T = 0 for symmetric B,
/// branching on rank parity and the quadratic character of the discriminant.
/// Rank 0 counts every vector.
Int chevalley_zero_count(const FqMatrix& b);

/// Number of x in F_q^V whose image y = xM vanishes exactly on a; equals the
/// characteristic polynomial of the contraction by a, evaluated at q.
Int contraction_pattern_count(const RepMatroid& m, Mask a,
                              std::uint64_t budget = kDefaultEnumerationBudget);

}  // namespace qmatroid
