#pragma once

namespace langnet::core {

/// C (+)= op(A) * op(B) on dense row-major buffers.
/// A is m x k after optional transpose, B is k x n, C is m x n.
/// Single-threaded and deterministic for fixed inputs.
void gemm(bool trans_a, bool trans_b, int m, int n, int k, const double* a,
          const double* b, double* c, bool accumulate);

}  // namespace langnet::core
