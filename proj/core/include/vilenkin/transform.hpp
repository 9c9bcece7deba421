#pragma once

#include <complex>
#include <span>

#include "vilenkin/group.hpp"

namespace vilenkin {

/// psi_n(x) = prod_k exp(2*pi*i * n_k * x_k / m_k). Requires order(n) < L.
std::complex<double> character(const GroupStructure& gs, const MixedRadixIndex& n,
                               const GroupElement& x);
std::complex<double> character(const GroupStructure& gs, std::uint64_t n,
                               std::uint64_t x);

/// Fills out (length M_L) with psi_n at every point, in point order.
void character_column(const GroupStructure& gs, std::uint64_t n,
                      std::span<std::complex<double>> out);
/// Walsh fast path: w_n as +-1 doubles. Requires a dyadic group.
void character_column_real(const GroupStructure& gs, std::uint64_t n,
                           std::span<double> out);

/// Analysis: coeffs[k] = (1/M_L) sum_x f(x) * conj(psi_k(x)), computed by a
/// per-digit butterfly in O(M_L * sum m_k) operations. Deterministic.
Spectrum forward_transform(const GroupStructure& gs, const DiscreteFunction& f);
/// Synthesis: f(x) = sum_k coeffs[k] * psi_k(x); exact inverse of the
/// forward transform up to rounding.
DiscreteFunction inverse_transform(const GroupStructure& gs, const Spectrum& s);

/// In-place workhorses over raw sample/coefficient buffers.
void forward_inplace(const GroupStructure& gs, std::span<std::complex<double>> data);
void inverse_inplace(const GroupStructure& gs, std::span<std::complex<double>> data);

/// Real-valued Walsh-Hadamard paths (dyadic groups only). These perform the
/// same +- butterflies as the complex path and agree with it bit for bit on
/// real inputs.
void forward_inplace_real(const GroupStructure& gs, std::span<double> data);
void inverse_inplace_real(const GroupStructure& gs, std::span<double> data);

}  // namespace vilenkin
