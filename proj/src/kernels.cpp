// kernels.cpp -- scalar reference kernels and SIMD variants.

#include "lanelab/kernels.hpp"

#include <cstdlib>
#include <cstring>

// the AVX2 variants use the GCC/Clang per-function target attribute
#if (defined(__x86_64__) || defined(_M_X64)) && (defined(__GNUC__) || defined(__clang__))
#define LANELAB_X86 1
#include <immintrin.h>
#else
#define LANELAB_X86 0
#endif

#if defined(__aarch64__) || defined(_M_ARM64)
#define LANELAB_ARM64 1
#include <arm_neon.h>
#else
#define LANELAB_ARM64 0
#endif

namespace lanelab::kern {

// ---------------------------------------------------------------- scalar

double dot_scalar(const double* a, const double* b, std::size_t n) {
    double s = 0.0;
    for (std::size_t i = 0; i < n; ++i) s += a[i] * b[i];
    return s;
}

double dot3_scalar(const double* a, const double* b, const double* c, std::size_t n) {
    double s = 0.0;
    for (std::size_t i = 0; i < n; ++i) s += a[i] * b[i] * c[i];
    return s;
}

void axpy_scalar(double s, const double* a, double* out, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) out[i] += s * a[i];
}

// ---------------------------------------------------------------- AVX2

#if LANELAB_X86

__attribute__((target("avx2,fma"))) static double hsum(__m256d v) {
    __m128d lo = _mm256_castpd256_pd128(v);
    __m128d hi = _mm256_extractf128_pd(v, 1);
    lo = _mm_add_pd(lo, hi);
    return _mm_cvtsd_f64(_mm_add_sd(lo, _mm_unpackhi_pd(lo, lo)));
}

__attribute__((target("avx2,fma"))) static double dot_avx2(const double* a, const double* b,
                                                           std::size_t n) {
    __m256d acc0 = _mm256_setzero_pd();
    __m256d acc1 = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 8 <= n; i += 8) {
        acc0 = _mm256_fmadd_pd(_mm256_loadu_pd(a + i), _mm256_loadu_pd(b + i), acc0);
        acc1 = _mm256_fmadd_pd(_mm256_loadu_pd(a + i + 4), _mm256_loadu_pd(b + i + 4), acc1);
    }
    for (; i + 4 <= n; i += 4)
        acc0 = _mm256_fmadd_pd(_mm256_loadu_pd(a + i), _mm256_loadu_pd(b + i), acc0);
    double s = hsum(_mm256_add_pd(acc0, acc1));
    for (; i < n; ++i) s += a[i] * b[i];
    return s;
}

__attribute__((target("avx2,fma"))) static double dot3_avx2(const double* a, const double* b,
                                                            const double* c, std::size_t n) {
    __m256d acc = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        __m256d ab = _mm256_mul_pd(_mm256_loadu_pd(a + i), _mm256_loadu_pd(b + i));
        acc = _mm256_fmadd_pd(ab, _mm256_loadu_pd(c + i), acc);
    }
    double s = hsum(acc);
    for (; i < n; ++i) s += a[i] * b[i] * c[i];
    return s;
}

__attribute__((target("avx2,fma"))) static void axpy_avx2(double s, const double* a, double* out,
                                                          std::size_t n) {
    __m256d vs = _mm256_set1_pd(s);
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        __m256d v = _mm256_fmadd_pd(vs, _mm256_loadu_pd(a + i), _mm256_loadu_pd(out + i));
        _mm256_storeu_pd(out + i, v);
    }
    for (; i < n; ++i) out[i] += s * a[i];
}

#endif  // LANELAB_X86

// ---------------------------------------------------------------- NEON

#if LANELAB_ARM64

static double dot_neon(const double* a, const double* b, std::size_t n) {
    float64x2_t acc = vdupq_n_f64(0.0);
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) acc = vfmaq_f64(acc, vld1q_f64(a + i), vld1q_f64(b + i));
    double s = vaddvq_f64(acc);
    for (; i < n; ++i) s += a[i] * b[i];
    return s;
}

static double dot3_neon(const double* a, const double* b, const double* c, std::size_t n) {
    float64x2_t acc = vdupq_n_f64(0.0);
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        float64x2_t ab = vmulq_f64(vld1q_f64(a + i), vld1q_f64(b + i));
        acc = vfmaq_f64(acc, ab, vld1q_f64(c + i));
    }
    double s = vaddvq_f64(acc);
    for (; i < n; ++i) s += a[i] * b[i] * c[i];
    return s;
}

static void axpy_neon(double s, const double* a, double* out, std::size_t n) {
    float64x2_t vs = vdupq_n_f64(s);
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2)
        vst1q_f64(out + i, vfmaq_f64(vld1q_f64(out + i), vs, vld1q_f64(a + i)));
    for (; i < n; ++i) out[i] += s * a[i];
}

#endif  // LANELAB_ARM64

// ---------------------------------------------------------------- dispatch

namespace {

bool backend_supported(Backend b) {
    switch (b) {
        case Backend::Scalar:
            return true;
        case Backend::Avx2:
#if LANELAB_X86
            return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
            return false;
#endif
        case Backend::Neon:
            return LANELAB_ARM64 != 0;
    }
    return false;
}

Backend pick_default() {
    if (const char* env = std::getenv("LANELAB_SIMD")) {
        if (std::strcmp(env, "scalar") == 0) return Backend::Scalar;
        if (std::strcmp(env, "avx2") == 0 && backend_supported(Backend::Avx2)) return Backend::Avx2;
        if (std::strcmp(env, "neon") == 0 && backend_supported(Backend::Neon)) return Backend::Neon;
    }
    if (backend_supported(Backend::Avx2)) return Backend::Avx2;
    if (backend_supported(Backend::Neon)) return Backend::Neon;
    return Backend::Scalar;
}

Backend g_backend = pick_default();

}  // namespace

Backend active_backend() { return g_backend; }

bool set_backend(Backend b) {
    if (!backend_supported(b)) return false;
    g_backend = b;
    return true;
}

std::string backend_name(Backend b) {
    switch (b) {
        case Backend::Scalar: return "scalar";
        case Backend::Avx2: return "avx2";
        case Backend::Neon: return "neon";
    }
    return "?";
}

double dot(const double* a, const double* b, std::size_t n) {
#if LANELAB_X86
    if (g_backend == Backend::Avx2) return dot_avx2(a, b, n);
#endif
#if LANELAB_ARM64
    if (g_backend == Backend::Neon) return dot_neon(a, b, n);
#endif
    return dot_scalar(a, b, n);
}

double dot3(const double* a, const double* b, const double* c, std::size_t n) {
#if LANELAB_X86
    if (g_backend == Backend::Avx2) return dot3_avx2(a, b, c, n);
#endif
#if LANELAB_ARM64
    if (g_backend == Backend::Neon) return dot3_neon(a, b, c, n);
#endif
    return dot3_scalar(a, b, c, n);
}

void axpy(double s, const double* a, double* out, std::size_t n) {
#if LANELAB_X86
    if (g_backend == Backend::Avx2) return axpy_avx2(s, a, out, n);
#endif
#if LANELAB_ARM64
    if (g_backend == Backend::Neon) return axpy_neon(s, a, out, n);
#endif
    return axpy_scalar(s, a, out, n);
}

}  // namespace lanelab::kern
