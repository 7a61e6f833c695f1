#pragma once

#include <cstdint>

namespace melpress::kernels {

// Dense matmul kernels. Every kernel has an OpenMP row-parallel variant and a
// serial reference; both accumulate each output element in the same index
// order, so results are bit-identical regardless of thread count. The
// parallel variants fall back to the serial loop when parallelism is
// disabled or OpenMP is unavailable.

// c[m x n] = a[m x k] * b[k x n]
void matmul(const double* a, const double* b, double* c, int64_t m, int64_t k, int64_t n);
void matmul_serial(const double* a, const double* b, double* c, int64_t m, int64_t k, int64_t n);

// c[m x n] = a[m x k] * b[n x k]^T
void matmul_nt(const double* a, const double* b, double* c, int64_t m, int64_t k, int64_t n);
void matmul_nt_serial(const double* a, const double* b, double* c, int64_t m, int64_t k, int64_t n);

// c[m x n] = a[p x m]^T * b[p x n]
void matmul_tn(const double* a, const double* b, double* c, int64_t p, int64_t m, int64_t n);
void matmul_tn_serial(const double* a, const double* b, double* c, int64_t p, int64_t m, int64_t n);

// Global toggle consulted by the parallel entry points. measure_rtf and the
// determinism tests pin this off.
bool parallel_enabled();
void set_parallel(bool on);

struct SerialGuard {
  SerialGuard() : prev_(parallel_enabled()) { set_parallel(false); }
  ~SerialGuard() { set_parallel(prev_); }
  SerialGuard(const SerialGuard&) = delete;
  SerialGuard& operator=(const SerialGuard&) = delete;

 private:
  bool prev_;
};

// Multiply-accumulate counter. Each matmul call adds m*k*n (one fused
// multiply+add per inner step). Bias adds, norms, softmax, and activations
// are not counted, matching the reporting convention in profile.
uint64_t mac_count();
void reset_mac_count();

}  // namespace melpress::kernels
