#include "coorbital/kernel_simd.hpp"

#include <cmath>
#include <stdexcept>

#include "coorbital/kernel.hpp"

namespace coorbital::simd {

// AVX2 backend entry points, present only in x86-64 builds (kernel_simd_avx2.cpp).
#ifdef COORBITAL_WITH_AVX2
namespace avx2 {
void eval_f_batch(const double* x, double* out, std::size_t n);
void eval_g_batch(double a2, double a3, const double* x, double* out, std::size_t n);
} // namespace avx2
#endif

namespace scalar {

// Reference loops: literally the kernel.hpp formulas, f composed per element.
void eval_f_batch(const double* x, double* out, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) {
        const double s = std::fabs(std::sin(0.5 * x[i]));
        out[i] = std::sin(x[i]) * (1.0 - 1.0 / (8.0 * s * s * s));
    }
}

void eval_g_batch(double a2, double a3, const double* x, double* out,
                  std::size_t n) {
    const double pi = std::numbers::pi;
    for (std::size_t i = 0; i < n; ++i) {
        auto f = [](double t) {
            const double s = std::fabs(std::sin(0.5 * t));
            return std::sin(t) * (1.0 - 1.0 / (8.0 * s * s * s));
        };
        out[i] = f(x[i]) + a2 * f(2.0 * x[i]) + a3 * f(pi + x[i]);
    }
}

} // namespace scalar

namespace {

bool cpu_has_avx2() {
#ifdef COORBITAL_WITH_AVX2
    return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
    return false;
#endif
}

Backend detect() { return cpu_has_avx2() ? Backend::avx2 : Backend::scalar; }

Backend& backend_state() {
    static Backend b = detect();
    return b;
}

} // namespace

bool avx2_available() { return cpu_has_avx2(); }

Backend active_backend() { return backend_state(); }

void force_backend(Backend b) {
    if (b == Backend::avx2 && !cpu_has_avx2())
        throw std::invalid_argument("force_backend: avx2 not available");
    backend_state() = b;
}

void eval_f_batch(std::span<const double> x, std::span<double> out) {
    if (x.size() != out.size())
        throw std::invalid_argument("eval_f_batch: size mismatch");
    std::size_t head = 0;
#ifdef COORBITAL_WITH_AVX2
    if (backend_state() == Backend::avx2) {
        head = x.size() & ~std::size_t{3}; // remainder below 4 goes scalar
        avx2::eval_f_batch(x.data(), out.data(), head);
    }
#endif
    scalar::eval_f_batch(x.data() + head, out.data() + head, x.size() - head);
}

void eval_g_batch(double a2, double a3, std::span<const double> x,
                  std::span<double> out) {
    if (x.size() != out.size())
        throw std::invalid_argument("eval_g_batch: size mismatch");
    std::size_t head = 0;
#ifdef COORBITAL_WITH_AVX2
    if (backend_state() == Backend::avx2) {
        head = x.size() & ~std::size_t{3};
        avx2::eval_g_batch(a2, a3, x.data(), out.data(), head);
    }
#endif
    scalar::eval_g_batch(a2, a3, x.data() + head, out.data() + head,
                         x.size() - head);
}

} // namespace coorbital::simd
