#pragma once

#include <complex>
#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "vilenkin/group.hpp"

namespace vilenkin {

/// Partial sums of the harmonic series: l_0 = 0, l_n = sum_{k=1..n} 1/k.
class HarmonicWeights {
 public:
  explicit HarmonicWeights(std::uint64_t n_max);

  double operator[](std::uint64_t n) const { return sums_[n]; }
  std::uint64_t max_index() const { return sums_.size() - 1; }

 private:
  std::vector<double> sums_;
};

enum class KernelKind { dirichlet, fejer, riesz };

/// Sampled summability kernel: D_n, K_n or L_n at every point.
/// Conventions: D_0 = 0 (so S_0 f = 0 and K_1 = 0) and
/// L_n = (1/l_n) sum_{k=1..n} D_k / k.
struct KernelFunction {
  KernelKind kind = KernelKind::dirichlet;
  std::uint64_t n = 0;
  DiscreteFunction samples;
};

/// D_n = sum_{k<n} psi_k, for 1 <= n <= M_L.
KernelFunction dirichlet_kernel(const GroupStructure& gs, std::uint64_t n);
/// K_n = (1/n) sum_{k<n} D_k.
KernelFunction fejer_kernel(const GroupStructure& gs, std::uint64_t n);
/// Riesz logarithmic kernel via its definition; for n <= 512 the result is
/// cross-checked against the Abel-transformed form (sup-norm 1e-10) before
/// being returned.
KernelFunction riesz_kernel(const GroupStructure& gs, std::uint64_t n);

inline constexpr std::uint64_t kRieszAbelCheckLimit = 512;
inline constexpr double kRieszAbelTolerance = 1e-10;

/// The Abel-transformed route to L_n, exposed for cross-checking.
DiscreteFunction riesz_kernel_abel_form(const GroupStructure& gs, std::uint64_t n);

/// Walsh closed form: D_{2^t} = 2^t on I_t and the digit expansion
/// D_n = w_n sum_k n_k (D_{2^{k+1}} - D_{2^k}). Dyadic groups only.
DiscreteFunction walsh_dirichlet_closed_form(const GroupStructure& gs, std::uint64_t n);

/// S_n f (S_0 f = 0), sigma_n f and R_n f for 1 <= n <= M_L.
DiscreteFunction partial_sum(const GroupStructure& gs, const Spectrum& s, std::uint64_t n);
DiscreteFunction fejer_mean(const GroupStructure& gs, const Spectrum& s, std::uint64_t n);
DiscreteFunction riesz_mean(const GroupStructure& gs, const Spectrum& s, std::uint64_t n);

enum class MeanFamily { fejer, riesz };

/// One member per printed normalization of the maximal operators.
/// - none:            sup |mean_n|
/// - log_denom:       sup |mean_n| / log(n+1)
/// - tilde_p:         sup |mean_n| / (n+1)^{1/p-2}, with an extra log(n+1)
///                    numerator for the Riesz family
/// - tilde_p_intro:   as tilde_p but with denominator
///                    (n+1)^{1/p-2} log^{2[1/2+p]}(n+1)
enum class MaximalWeight { none, log_denom, tilde_p, tilde_p_intro };

/// Pointwise sup over 1 <= n <= n_max of the selected weighted means.
/// p is only consulted by the tilde weights and must lie in (0, 1/2].
DiscreteFunction maximal_operator(const GroupStructure& gs, const Spectrum& s,
                                  MeanFamily family, MaximalWeight weight,
                                  double p, std::uint64_t n_max);

/// Streaming view of the running mean accumulators at step n:
///   partial   = S_n f
///   fejer_sum = sum_{k<n} S_k f          (sigma_n = fejer_sum / n)
///   riesz_sum = sum_{k<=n} S_k f / k     (R_n = riesz_sum / l_n)
/// Disabled accumulators are empty spans.
struct SweepView {
  std::uint64_t n = 0;
  std::span<const std::complex<double>> partial;
  std::span<const std::complex<double>> fejer_sum;
  std::span<const std::complex<double>> riesz_sum;
  double harmonic = 0.0;  // l_n
};

struct RealSweepView {
  std::uint64_t n = 0;
  std::span<const double> partial;
  std::span<const double> fejer_sum;
  std::span<const double> riesz_sum;
  double harmonic = 0.0;
};

/// Incrementally visits n = 1..n_max; each step costs O(M_L).
void sweep_means(const GroupStructure& gs, const Spectrum& s, std::uint64_t n_max,
                 bool with_fejer, bool with_riesz,
                 const std::function<void(const SweepView&)>& visit);

/// Same sweep over real coefficients on a dyadic group.
void sweep_means_real(const GroupStructure& gs, std::span<const double> coeffs,
                      std::uint64_t n_max, bool with_fejer, bool with_riesz,
                      const std::function<void(const RealSweepView&)>& visit);

}  // namespace vilenkin
