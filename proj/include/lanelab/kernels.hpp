// kernels.hpp -- reduction kernels for the quadrature inner loops.
//
// Scalar reference implementations plus AVX2 (x86-64) and NEON (aarch64)
// variants selected at runtime.  The scalar versions are the semantic
// reference; the SIMD paths must agree with them up to summation-order
// roundoff, which the test suite checks.

#pragma once

#include <cstddef>
#include <string>

namespace lanelab::kern {

enum class Backend { Scalar, Avx2, Neon };

// Backend chosen at startup (env LANELAB_SIMD=scalar|avx2|neon overrides).
Backend active_backend();
// Returns false and leaves the backend unchanged if unsupported on this CPU.
bool set_backend(Backend b);
std::string backend_name(Backend b);

// sum_i a[i]*b[i]
double dot(const double* a, const double* b, std::size_t n);
// sum_i a[i]*b[i]*c[i]
double dot3(const double* a, const double* b, const double* c, std::size_t n);
// out[i] += s*a[i]
void axpy(double s, const double* a, double* out, std::size_t n);

// Scalar reference paths, always available regardless of the active backend.
double dot_scalar(const double* a, const double* b, std::size_t n);
double dot3_scalar(const double* a, const double* b, const double* c, std::size_t n);
void axpy_scalar(double s, const double* a, double* out, std::size_t n);

}  // namespace lanelab::kern
