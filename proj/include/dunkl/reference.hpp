#pragma once

// Single-threaded reference versions of the OpenMP kernels. Tests require the
// parallel kernels to reproduce these results exactly (bit-for-bit for the
// floating Monte-Carlo estimate), and the benchmark compares their timings.

#include "dunkl/oracle.hpp"
#include "dunkl/poly.hpp"
#include "dunkl/reflection.hpp"

#include <cstdint>
#include <span>

namespace dunkl::reference {

Poly dunkl_apply_serial(const DunklContext& ctx, std::span<const Rational> xi, const Poly& p);

/// sum_j D_j(D_j p), each D_j evaluated independently by dunkl_apply_serial.
Poly laplacian_serial(const DunklContext& ctx, const Poly& p);

McEstimate mc_sphere_integral_serial(const DunklContext& ctx, const Poly& p, std::uint64_t seed,
                                     std::uint64_t samples);

}  // namespace dunkl::reference
