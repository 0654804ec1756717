#pragma once
#include <cstddef>
#include <span>

/// Batched kernel evaluation for grid scans (root-count oracles, audits,
/// sweeps). A scalar reference backend (std::sin / std::cos, bit-identical
/// to the formulas in kernel.hpp) always exists; on x86-64 an AVX2+FMA
/// backend with a vectorized Cody-Waite sincos is selected at runtime when
/// the CPU supports it. The two backends agree to ~1e-14 relative on every
/// term; tests pin the equivalence.
///
/// Batch entry points do not re-validate the domain per element (they sit
/// in hot loops); callers must guarantee x in [kDomainGuard, 2*pi - kDomainGuard]
/// for eval_f_batch and x in [kDomainGuard, pi - kDomainGuard] for eval_g_batch.
namespace coorbital::simd {

enum class Backend { scalar, avx2 };

/// Backend used by subsequent batch calls. Detected once at startup.
Backend active_backend();

/// Override the backend (tests use this to compare paths). Throws
/// std::invalid_argument when asking for an instruction set the CPU or the
/// build does not support.
void force_backend(Backend b);

/// True when the AVX2 backend is compiled in and the CPU supports it.
bool avx2_available();

/// out[i] = f(x[i]). Spans must have equal length.
void eval_f_batch(std::span<const double> x, std::span<double> out);

/// out[i] = g(x[i]) = f(x) + a2*f(2x) + a3*f(pi+x) for x in (0, pi),
/// evaluated from a single half-angle sincos via exact trig identities.
void eval_g_batch(double a2, double a3, std::span<const double> x,
                  std::span<double> out);

} // namespace coorbital::simd
