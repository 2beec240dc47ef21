#pragma once

// Dense matrix kernels. Each optimized kernel has a plain serial reference
// kept for testing and benchmarking. Optimized kernels split work by output
// row only, so every output element sees the same sequence of floating-point
// operations for any thread count.

#include <cstddef>

namespace ocrlm::kernels {

/// C[m x n] (+)= A[m x k] * B[k x n]
void matmul(const double* a, const double* b, double* c, std::size_t m, std::size_t k,
            std::size_t n, bool accumulate);
void matmul_reference(const double* a, const double* b, double* c, std::size_t m,
                      std::size_t k, std::size_t n, bool accumulate);

/// C[k x n] (+)= A[m x k]^T * B[m x n]   (weight gradients)
void matmul_tn(const double* a, const double* b, double* c, std::size_t m, std::size_t k,
               std::size_t n, bool accumulate);
void matmul_tn_reference(const double* a, const double* b, double* c, std::size_t m,
                         std::size_t k, std::size_t n, bool accumulate);

/// C[m x k] (+)= A[m x n] * B[k x n]^T   (input gradients)
void matmul_nt(const double* a, const double* b, double* c, std::size_t m, std::size_t k,
               std::size_t n, bool accumulate);
void matmul_nt_reference(const double* a, const double* b, double* c, std::size_t m,
                         std::size_t k, std::size_t n, bool accumulate);

/// B[n x m] = A[m x n]^T
void transpose(const double* a, double* b, std::size_t m, std::size_t n);

/// y[n] += x[k] * W[k x n]
void vecmat_acc(const double* x, const double* w, double* y, std::size_t k, std::size_t n);

/// Threads used by the parallel kernels and batch loops (0 = OpenMP default).
void set_num_threads(int n);
int num_threads();

}  // namespace ocrlm::kernels
