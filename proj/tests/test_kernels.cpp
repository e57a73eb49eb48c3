#include <doctest.h>

#include <random>
#include <vector>

#include "lanelab/kernels.hpp"

using namespace lanelab;

namespace {

std::vector<double> random_vec(std::size_t n, std::mt19937_64& rng) {
    std::uniform_real_distribution<double> u(0.0, 1.0);
    std::vector<double> v(n);
    for (double& x : v) x = u(rng);
    return v;
}

}  // namespace

TEST_CASE("simd kernels match the scalar reference") {
    const kern::Backend initial = kern::active_backend();
    std::mt19937_64 rng(42);
    for (std::size_t n : {std::size_t(0), std::size_t(1), std::size_t(3), std::size_t(4),
                          std::size_t(7), std::size_t(8), std::size_t(31), std::size_t(256),
                          std::size_t(1000)}) {
        const std::vector<double> a = random_vec(n, rng);
        const std::vector<double> b = random_vec(n, rng);
        const std::vector<double> c = random_vec(n, rng);
        const double d_ref = kern::dot_scalar(a.data(), b.data(), n);
        const double d3_ref = kern::dot3_scalar(a.data(), b.data(), c.data(), n);
        std::vector<double> acc_ref = c;
        kern::axpy_scalar(0.7, a.data(), acc_ref.data(), n);

        for (kern::Backend backend :
             {kern::Backend::Scalar, kern::Backend::Avx2, kern::Backend::Neon}) {
            if (!kern::set_backend(backend)) continue;
            CAPTURE(kern::backend_name(backend));
            CAPTURE(n);
            CHECK(kern::dot(a.data(), b.data(), n) ==
                  doctest::Approx(d_ref).epsilon(1e-12));
            CHECK(kern::dot3(a.data(), b.data(), c.data(), n) ==
                  doctest::Approx(d3_ref).epsilon(1e-12));
            std::vector<double> acc = c;
            kern::axpy(0.7, a.data(), acc.data(), n);
            for (std::size_t i = 0; i < n; ++i)
                CHECK(acc[i] == doctest::Approx(acc_ref[i]).epsilon(1e-13));
        }
    }
    kern::set_backend(initial);
}

TEST_CASE("empty input sums to zero") {
    CHECK(kern::dot(nullptr, nullptr, 0) == 0.0);
    CHECK(kern::dot3(nullptr, nullptr, nullptr, 0) == 0.0);
}
