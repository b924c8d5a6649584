#pragma once

#include <vector>

#include "swa/graph.hpp"

namespace swa::ops {

/// y = x W + b. x: [n,in], W: [in,out], b: [out].
NodeId linear(Graph& g, NodeId x, NodeId W, NodeId b);

/// y = a b. a: [n,k], b: [k,m].
NodeId matmul(Graph& g, NodeId a, NodeId b);

/// Elementwise sum of two same-shape tensors.
NodeId add(Graph& g, NodeId a, NodeId b);

/// Row-wise layer normalization with biased variance.
/// x: [n,d], gain: [d], bias: [d].
NodeId layer_norm(Graph& g, NodeId x, NodeId gain, NodeId bias, double eps = 1e-5);

/// Per-row segmented layer norm: each of `segments` contiguous spans of width
/// d/segments is normalized independently. gain/bias have the span width and
/// are shared across segments.
NodeId seg_layer_norm(Graph& g, NodeId x, NodeId gain, NodeId bias, std::size_t segments,
                      double eps = 1e-5);

/// Numerically stable softmax over a length-L vector (L >= 1).
NodeId softmax(Graph& g, NodeId e);

NodeId gelu(Graph& g, NodeId x);
NodeId tanh_act(Graph& g, NodeId x);
NodeId relu(Graph& g, NodeId x);

/// y[i] = x[rows[i]]; duplicate rows allowed (gradients accumulate).
NodeId gather_rows(Graph& g, NodeId x, std::vector<std::size_t> rows);

/// Interleaves the rows of a and b into an [n_total, d] tensor:
/// y[idx_a[i]] = a[i], y[idx_b[j]] = b[j]. Index sets must partition [0,n_total).
/// Either input may be absent (pass static_cast<NodeId>(-1)) when its index
/// list is empty.
NodeId merge_rows(Graph& g, NodeId a, std::vector<std::size_t> idx_a, NodeId b,
                  std::vector<std::size_t> idx_b, std::size_t n_total);

/// Repeats a length-d vector into n rows.
NodeId broadcast_row(Graph& g, NodeId v, std::size_t n);

/// Concatenates two [n,da] and [n,db] tensors along columns.
NodeId concat_cols(Graph& g, NodeId a, NodeId b);

/// Scalar sum of c[i] * x[i] with constant coefficients (test losses).
NodeId weighted_sum(Graph& g, NodeId x, std::vector<double> coeffs);

/// Scalar sum of squares of all entries.
NodeId sum_squares(Graph& g, NodeId x);

/// Mean negative log-softmax-probability of target classes.
/// logits: [n,K]; row_target[i] in [0,K) selects the class for row i, or -1 to
/// exclude the row. Each counted row contributes with weight 1/denom;
/// `extra` is a parameter-independent additive constant.
NodeId masked_cross_entropy(Graph& g, NodeId logits, std::vector<int> row_target,
                            std::size_t denom, double extra);

// Plain (non-graph) kernels shared by the op implementations.
namespace detail {
void linear_rows(const double* x, const double* W, const double* b, double* y, std::size_t n,
                 std::size_t in, std::size_t out);
void layer_norm_row(const double* x, const double* gain, const double* bias, double eps,
                    std::size_t d, double* y, double* inv_std_out, double* mean_out);
void softmax_vec(const double* e, std::size_t n, double* y);
} // namespace detail

} // namespace swa::ops
