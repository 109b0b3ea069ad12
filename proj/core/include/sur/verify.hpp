#pragma once

#include "sur/types.hpp"

namespace sur {

// <X_A, Y_B> = |A ∩ B(+1)| - |A ∩ B(-1)|. Throws kDimensionMismatch.
long long inner_product(const IndexSet& a, const Bicoloring& b);

// True iff A is non-empty and <X_A, Y_B> = 0.
bool is_unbiased_rep(const IndexSet& a, const Bicoloring& b);

// For every bicoloring, records the first set in family order with
// |<X_A, Y_B>| <= delta. Uncovered bicolorings are data, not errors.
Certificate verify_sur(const SurFamily& family, const BicoloringFamily& bicolorings,
                       long long delta = 0);

}  // namespace sur
