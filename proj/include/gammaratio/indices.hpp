#pragma once

#include "gammaratio/sample.hpp"

namespace gammaratio {

/// G_n = sum_{i<j} |Y_i - Y_j| / ((n - 1) sum_i Y_i), by direct O(n^2)
/// enumeration. Kept as the reference for gini_sorted. Needs n >= 2.
double gini_pairwise(const Sample& s);

/// Same quantity in O(n log n) from the order statistics:
///   sum_{i<j} |Y_i - Y_j| = sum_i (2i - n - 1) Y_(i),  i = 1..n ascending.
double gini_sorted(const Sample& s);

/// Public Gini entry point; dispatches to gini_sorted.
inline double gini(const Sample& s) { return gini_sorted(s); }

/// T_n = sum_i Y_i log(Y_i / mu_n) / sum_i Y_i. T_1 = 0 exactly.
double theil_t(const Sample& s);

/// A_n = 1 - GM / AM with the geometric mean taken in log space. A_1 = 0.
double atkinson(const Sample& s);

/// VMR_n = s_n^2 / mu_n with the unbiased (n - 1) variance. Needs n >= 2.
double vmr(const Sample& s);

/// Dispatch by kind. Throws SizeError when s is shorter than
/// min_sample_size(kind).
double compute_index(IndexKind kind, const Sample& s);

}  // namespace gammaratio
