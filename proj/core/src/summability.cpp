#include "vilenkin/summability.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <memory>

#include "vilenkin/detail/kernel_cache.hpp"
#include "vilenkin/transform.hpp"

namespace vilenkin {

namespace {

using cplx = std::complex<double>;

void require_kernel_index(const GroupStructure& gs, std::uint64_t n) {
  if (n < 1 || n > gs.point_count())
    throw ResolutionError("kernel index " + std::to_string(n) +
                          " outside [1, M_L]");
}

DiscreteFunction synthesize(const GroupStructure& gs, std::vector<cplx> coeffs) {
  DiscreteFunction f;
  f.depth = gs.depth();
  f.values = std::move(coeffs);
  f.values.resize(gs.point_count(), cplx{0.0, 0.0});
  inverse_inplace(gs, f.values);
  return f;
}

KernelFunction cached_kernel(const GroupStructure& gs, KernelKind kind,
                             std::uint64_t n,
                             const std::function<DiscreteFunction()>& make) {
  auto& cache = gs.kernel_cache();
  const int key = static_cast<int>(kind);
  if (auto hit = cache.find(key, n))
    return KernelFunction{kind, n, *hit};
  auto samples = std::make_shared<const DiscreteFunction>(make());
  cache.store(key, n, samples);
  return KernelFunction{kind, n, *samples};
}

}  // namespace

HarmonicWeights::HarmonicWeights(std::uint64_t n_max) {
  sums_.resize(n_max + 1);
  sums_[0] = 0.0;
  for (std::uint64_t n = 1; n <= n_max; ++n)
    sums_[n] = sums_[n - 1] + 1.0 / static_cast<double>(n);
}

KernelFunction dirichlet_kernel(const GroupStructure& gs, std::uint64_t n) {
  require_kernel_index(gs, n);
  return cached_kernel(gs, KernelKind::dirichlet, n, [&] {
    std::vector<cplx> coeffs(n, cplx{1.0, 0.0});
    return synthesize(gs, std::move(coeffs));
  });
}

KernelFunction fejer_kernel(const GroupStructure& gs, std::uint64_t n) {
  require_kernel_index(gs, n);
  return cached_kernel(gs, KernelKind::fejer, n, [&] {
    // sum_{k<n} D_k carries psi_v with multiplicity n-1-v.
    std::vector<cplx> coeffs(n >= 2 ? n - 1 : 0);
    for (std::uint64_t v = 0; v + 1 < n; ++v)
      coeffs[v] = static_cast<double>(n - 1 - v) / static_cast<double>(n);
    return synthesize(gs, std::move(coeffs));
  });
}

DiscreteFunction riesz_kernel_abel_form(const GroupStructure& gs, std::uint64_t n) {
  require_kernel_index(gs, n);
  // L_n = (1/l_n) [ sum_{j<n} A_j/(j+1) + A_n ] with A_j = (1/j) sum_{k<=j} D_k,
  // the Abel transform of the definition. A_j carries psi_v with weight
  // (j-v)/j for v < j.
  HarmonicWeights l(n);
  std::vector<cplx> coeffs(n, cplx{0.0, 0.0});
  for (std::uint64_t v = 0; v < n; ++v) {
    double acc = 0.0;
    for (std::uint64_t j = v + 1; j < n; ++j)
      acc += static_cast<double>(j - v) /
             (static_cast<double>(j) * static_cast<double>(j + 1));
    acc += static_cast<double>(n - v) / static_cast<double>(n);
    coeffs[v] = acc / l[n];
  }
  return synthesize(gs, std::move(coeffs));
}

KernelFunction riesz_kernel(const GroupStructure& gs, std::uint64_t n) {
  require_kernel_index(gs, n);
  return cached_kernel(gs, KernelKind::riesz, n, [&] {
    HarmonicWeights l(n);
    std::vector<cplx> coeffs(n);
    for (std::uint64_t v = 0; v < n; ++v) coeffs[v] = 1.0 - l[v] / l[n];
    DiscreteFunction definition = synthesize(gs, std::move(coeffs));
    if (n <= kRieszAbelCheckLimit) {
      const DiscreteFunction abel = riesz_kernel_abel_form(gs, n);
      double sup = 0.0;
      for (std::size_t i = 0; i < definition.values.size(); ++i)
        sup = std::max(sup, std::abs(definition.values[i] - abel.values[i]));
      if (sup > kRieszAbelTolerance)
        throw Error("Riesz kernel dual-path disagreement of " +
                    std::to_string(sup) + " at n = " + std::to_string(n));
    }
    return definition;
  });
}

DiscreteFunction walsh_dirichlet_closed_form(const GroupStructure& gs,
                                             std::uint64_t n) {
  if (!gs.dyadic())
    throw UnsupportedGroupError("Dirichlet closed form is a Walsh identity");
  require_kernel_index(gs, n);
  const std::size_t L = gs.depth();
  const std::uint64_t total = gs.point_count();
  DiscreteFunction f;
  f.depth = L;
  f.values.resize(total);
  if (n == total) {
    // D_{M_L} = M_L on I_L (the zero point of the model).
    std::fill(f.values.begin(), f.values.end(), cplx{0.0, 0.0});
    f.values[0] = static_cast<double>(total);
    return f;
  }
  for (std::uint64_t x = 0; x < total; ++x) {
    // d = first nonzero coordinate of x; x lies in I_d \ I_{d+1}.
    std::size_t d = L;
    for (std::size_t k = 0; k < L; ++k)
      if ((x >> k) & 1u) {
        d = k;
        break;
      }
    double sum;
    if (d == L) {
      sum = static_cast<double>(n);  // all blocks contribute 2^k below depth L
    } else {
      const std::uint64_t low_mask = (std::uint64_t{1} << d) - 1;
      sum = static_cast<double>(n & low_mask);
      if ((n >> d) & 1u) sum -= static_cast<double>(std::uint64_t{1} << d);
    }
    // w_n(x) = (-1)^{sum n_k x_k}.
    const double sign = (std::popcount(n & x) & 1u) ? -1.0 : 1.0;
    f.values[x] = sign * sum;
  }
  return f;
}

namespace {

std::vector<cplx> truncated_weighted(const Spectrum& s, std::uint64_t n,
                                     const std::function<double(std::uint64_t)>& w) {
  std::vector<cplx> coeffs(n);
  for (std::uint64_t v = 0; v < n; ++v) coeffs[v] = s.coeffs[v] * w(v);
  return coeffs;
}

void require_mean_index(const GroupStructure& gs, const Spectrum& s,
                        std::uint64_t n) {
  if (s.depth != gs.depth() || s.coeffs.size() != gs.point_count())
    throw ResolutionError("spectrum depth does not match the group");
  if (n < 1 || n > gs.point_count())
    throw ResolutionError("mean index " + std::to_string(n) + " outside [1, M_L]");
}

}  // namespace

DiscreteFunction partial_sum(const GroupStructure& gs, const Spectrum& s,
                             std::uint64_t n) {
  require_mean_index(gs, s, n);
  return synthesize(gs, truncated_weighted(s, n, [](std::uint64_t) { return 1.0; }));
}

DiscreteFunction fejer_mean(const GroupStructure& gs, const Spectrum& s,
                            std::uint64_t n) {
  require_mean_index(gs, s, n);
  if (n == 1) return synthesize(gs, {});  // sigma_1 = S_0 = 0
  return synthesize(gs, truncated_weighted(s, n - 1, [n](std::uint64_t v) {
                      return static_cast<double>(n - 1 - v) / static_cast<double>(n);
                    }));
}

DiscreteFunction riesz_mean(const GroupStructure& gs, const Spectrum& s,
                            std::uint64_t n) {
  require_mean_index(gs, s, n);
  HarmonicWeights l(n);
  return synthesize(gs, truncated_weighted(s, n, [&l, n](std::uint64_t v) {
                      return 1.0 - l[v] / l[n];
                    }));
}

namespace {

template <typename Scalar, typename View, typename Column>
void sweep_impl(const GroupStructure& gs, std::span<const Scalar> coeffs,
                std::uint64_t n_max, bool with_fejer, bool with_riesz,
                const std::function<void(const View&)>& visit, Column&& column) {
  const std::size_t total = gs.point_count();
  std::vector<Scalar> col(total);
  std::vector<Scalar> partial(total, Scalar{});
  std::vector<Scalar> fejer(with_fejer ? total : 0, Scalar{});
  std::vector<Scalar> riesz(with_riesz ? total : 0, Scalar{});
  double harmonic = 0.0;
  for (std::uint64_t n = 1; n <= n_max; ++n) {
    const Scalar c = coeffs[n - 1];
    if (c != Scalar{}) {
      column(n - 1, std::span<Scalar>(col));
      for (std::size_t i = 0; i < total; ++i) partial[i] += c * col[i];
    }
    harmonic += 1.0 / static_cast<double>(n);
    if (with_riesz) {
      const double inv = 1.0 / static_cast<double>(n);
      for (std::size_t i = 0; i < total; ++i) riesz[i] += partial[i] * inv;
    }
    View view;
    view.n = n;
    view.partial = partial;
    view.fejer_sum = fejer;
    view.riesz_sum = riesz;
    view.harmonic = harmonic;
    visit(view);
    if (with_fejer)
      for (std::size_t i = 0; i < total; ++i) fejer[i] += partial[i];
  }
}

}  // namespace

void sweep_means(const GroupStructure& gs, const Spectrum& s, std::uint64_t n_max,
                 bool with_fejer, bool with_riesz,
                 const std::function<void(const SweepView&)>& visit) {
  require_mean_index(gs, s, n_max);
  sweep_impl<cplx, SweepView>(
      gs, std::span<const cplx>(s.coeffs), n_max, with_fejer, with_riesz, visit,
      [&gs](std::uint64_t n, std::span<cplx> out) { character_column(gs, n, out); });
}

void sweep_means_real(const GroupStructure& gs, std::span<const double> coeffs,
                      std::uint64_t n_max, bool with_fejer, bool with_riesz,
                      const std::function<void(const RealSweepView&)>& visit) {
  if (!gs.dyadic())
    throw UnsupportedGroupError("real sweep requires a dyadic group");
  if (coeffs.size() != gs.point_count() || n_max < 1 || n_max > gs.point_count())
    throw ResolutionError("real sweep range does not match the group");
  sweep_impl<double, RealSweepView>(
      gs, coeffs, n_max, with_fejer, with_riesz, visit,
      [&gs](std::uint64_t n, std::span<double> out) {
        character_column_real(gs, n, out);
      });
}

DiscreteFunction maximal_operator(const GroupStructure& gs, const Spectrum& s,
                                  MeanFamily family, MaximalWeight weight,
                                  double p, std::uint64_t n_max) {
  require_mean_index(gs, s, n_max);
  const bool needs_p =
      weight == MaximalWeight::tilde_p || weight == MaximalWeight::tilde_p_intro;
  if (needs_p && !(p > 0.0 && p <= 0.5))
    throw ParameterError("tilde weights require 0 < p <= 1/2");
  const int log_power = needs_p ? 2 * static_cast<int>(std::floor(0.5 + p)) : 0;

  const std::size_t total = gs.point_count();
  std::vector<double> sup(total, 0.0);
  sweep_means(gs, s, n_max, family == MeanFamily::fejer,
              family == MeanFamily::riesz, [&](const SweepView& view) {
                const double n1 = static_cast<double>(view.n + 1);
                double numerator = 1.0;
                double denominator = 1.0;
                switch (weight) {
                  case MaximalWeight::none:
                    break;
                  case MaximalWeight::log_denom:
                    denominator = std::log(n1);
                    break;
                  case MaximalWeight::tilde_p:
                    denominator = std::pow(n1, 1.0 / p - 2.0);
                    if (family == MeanFamily::riesz) numerator = std::log(n1);
                    break;
                  case MaximalWeight::tilde_p_intro:
                    denominator = std::pow(n1, 1.0 / p - 2.0) *
                                  std::pow(std::log(n1), log_power);
                    if (family == MeanFamily::riesz) numerator = std::log(n1);
                    break;
                }
                const auto mean = family == MeanFamily::fejer ? view.fejer_sum
                                                              : view.riesz_sum;
                const double mean_scale =
                    family == MeanFamily::fejer
                        ? 1.0 / static_cast<double>(view.n)
                        : 1.0 / view.harmonic;
                const double factor = mean_scale * numerator / denominator;
                for (std::size_t i = 0; i < total; ++i)
                  sup[i] = std::max(sup[i], std::abs(mean[i]) * factor);
              });
  DiscreteFunction out;
  out.depth = gs.depth();
  out.values.assign(sup.begin(), sup.end());
  return out;
}

}  // namespace vilenkin
