#pragma once

// Data-parallel inner loops of the Monte Carlo harness.
//
// Every ISA variant performs the same IEEE operations in the same order as the
// scalar reference (no FMA contraction, fixed 4-lane reduction order), so all
// variants produce bit-identical results. Axis batches are structure-of-arrays.

#include <cstddef>
#include <cstdint>
#include <string_view>
#include <vector>

namespace eprsim::simd {

enum class Isa { scalar, avx2, neon };

struct KernelTable {
    Isa isa;
    const char* name;

    /// out[i] = dir . P_i
    void (*project)(const double* px, const double* py, const double* pz, const double* dir, double* out,
                    std::size_t n);

    /// out[i] = clamp((a . P_i)(b . P_i), -1, 1)
    void (*pair_products)(const double* px, const double* py, const double* pz, const double* a, const double* b,
                          double* out, std::size_t n);

    /// out[i] = E for joint probabilities ((1-c)/4, (1+c)/4, (1+c)/4, (1-c)/4), c = c_in[i]
    void (*correlation_from_products)(const double* c, double* out, std::size_t n);

    /// Sum and sum of squares accumulated in 4 interleaved lanes: lane j takes
    /// v[i] with i % 4 == j; the result is (l0 + l1) + (l2 + l3).
    void (*moments)(const double* v, std::size_t n, double* sum, double* sum_sq);

    /// Samples one joint outcome per pair from the product-correlation c[i]
    /// (clamped to [-1, 1]) and the uniform u[i] in [0, 1): cumulative
    /// thresholds (1-c)/4, +(1+c)/4, +(1+c)/4 split [0, 1) into ++, +-, -+, --.
    /// Adds the outcome counts to counts[0..3].
    void (*tally)(const double* c, const double* u, std::size_t n, std::uint64_t* counts);
};

const KernelTable& scalar_kernels();
/// nullptr unless compiled in and supported by the running CPU.
const KernelTable* avx2_kernels();
const KernelTable* neon_kernels();

/// Every variant usable on this machine, scalar first.
std::vector<const KernelTable*> available_kernels();

/// Best available variant, unless EPRSIM_SIMD names one (scalar | avx2 | neon).
const KernelTable& active_kernels();

/// Lookup by name among available variants; nullptr if unknown or unsupported.
const KernelTable* kernels_by_name(std::string_view name);

}  // namespace eprsim::simd
