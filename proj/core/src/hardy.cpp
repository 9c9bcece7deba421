#include "vilenkin/hardy.hpp"

#include <algorithm>
#include <cmath>
#include <random>

namespace vilenkin {

namespace {

using cplx = std::complex<double>;

void require_probability_exponent(double p) {
  if (!(p > 0.0) || !std::isfinite(p))
    throw ParameterError("exponent p must be positive and finite");
}

double abs_value(double v) { return std::abs(v); }
double abs_value(const cplx& v) { return std::abs(v); }

// Builds the per-level coset averages bottom-up; level n has M_n entries
// indexed by the coset anchor index (the point index modulo M_n pattern).
template <typename Scalar>
std::vector<std::vector<Scalar>> build_levels(const GroupStructure& gs,
                                              std::span<const Scalar> values) {
  const std::size_t L = gs.depth();
  std::vector<std::vector<Scalar>> levels(L + 1);
  levels[L].assign(values.begin(), values.end());
  for (std::size_t n = L; n-- > 0;) {
    const std::uint32_t radix = gs.modulus(n);
    const std::uint64_t count = gs.scale(n);
    const auto& child = levels[n + 1];
    auto& cur = levels[n];
    cur.resize(count);
    const double inv = 1.0 / static_cast<double>(radix);
    for (std::uint64_t c = 0; c < count; ++c) {
      // Children of I_n(anchor) differ in digit n: child anchors are
      // anchor + d * M_n.
      Scalar acc{};
      for (std::uint32_t d = 0; d < radix; ++d) acc += child[c + d * count];
      cur[c] = acc * inv;
    }
  }
  return levels;
}

// Pointwise max over the level chain: expand from depth 0 downwards,
// carrying the running max of |averages| along each coset chain.
template <typename Scalar>
std::vector<double> chain_max(const GroupStructure& gs,
                              const std::vector<std::vector<Scalar>>& levels) {
  const std::size_t L = gs.depth();
  std::vector<double> cur(1, abs_value(levels[0][0]));
  std::vector<double> next;
  for (std::size_t n = 0; n < L; ++n) {
    const std::uint64_t count = gs.scale(n);
    const std::uint32_t radix = gs.modulus(n);
    next.resize(count * radix);
    for (std::uint64_t c = 0; c < count; ++c)
      for (std::uint32_t d = 0; d < radix; ++d) {
        const std::uint64_t idx = c + d * count;
        next[idx] = std::max(cur[c], abs_value(levels[n + 1][idx]));
      }
    cur.swap(next);
  }
  return cur;
}

template <typename Scalar>
double hardy_ppower_impl(const GroupStructure& gs, std::span<const Scalar> values,
                         double p, MaximalScratch& scratch) {
  require_probability_exponent(p);
  // Flat layout: one running buffer per level pass, reusing scratch.
  const std::size_t L = gs.depth();
  auto& tree = [&]() -> std::vector<Scalar>& {
    if constexpr (std::is_same_v<Scalar, double>)
      return scratch.tree_real;
    else
      return scratch.tree;
  }();
  tree.assign(values.begin(), values.end());
  auto& chain = scratch.chain;
  chain.resize(values.size());
  for (std::size_t i = 0; i < values.size(); ++i)
    chain[i] = abs_value(values[i]);
  // Collapse level by level; after processing depth n the prefix of `tree`
  // holds the depth-n averages and `chain` the running max expanded to the
  // original resolution via strided access.
  std::uint64_t count = gs.point_count();
  for (std::size_t n = L; n-- > 0;) {
    const std::uint32_t radix = gs.modulus(n);
    count /= radix;
    const double inv = 1.0 / static_cast<double>(radix);
    for (std::uint64_t c = 0; c < count; ++c) {
      Scalar acc{};
      for (std::uint32_t d = 0; d < radix; ++d) acc += tree[c + d * count];
      tree[c] = acc * inv;
    }
    // The depth-n average at anchor c covers every point c + r * M_n.
    const std::uint64_t stride = count;
    const std::uint64_t reach = values.size();
    for (std::uint64_t c = 0; c < count; ++c) {
      const double a = abs_value(tree[c]);
      for (std::uint64_t i = c; i < reach; i += stride)
        chain[i] = std::max(chain[i], a);
    }
  }
  double acc = 0.0;
  for (double v : chain) acc += std::pow(v, p);
  return acc / static_cast<double>(values.size());
}

}  // namespace

Martingale::Martingale(const GroupStructure& gs, const DiscreteFunction& f) {
  if (f.depth != gs.depth() || f.values.size() != gs.point_count())
    throw ResolutionError("function depth does not match the group");
  levels_ = build_levels<cplx>(gs, f.values);
  star_ = chain_max(gs, levels_);
}

DiscreteFunction Martingale::level_function(const GroupStructure& gs,
                                            std::size_t n) const {
  const auto& lvl = levels_[n];
  DiscreteFunction f;
  f.depth = gs.depth();
  f.values.resize(gs.point_count());
  const std::uint64_t count = lvl.size();
  for (std::uint64_t i = 0; i < f.values.size(); ++i)
    f.values[i] = lvl[i % count];
  return f;
}

Martingale martingale_from_function(const GroupStructure& gs,
                                    const DiscreteFunction& f) {
  return Martingale(gs, f);
}

double lp_quasinorm(const DiscreteFunction& f, double p) {
  require_probability_exponent(p);
  double acc = 0.0;
  for (const auto& v : f.values) acc += std::pow(std::abs(v), p);
  return std::pow(acc / static_cast<double>(f.values.size()), 1.0 / p);
}

double weak_lp_ppower(const DiscreteFunction& f, double p) {
  require_probability_exponent(p);
  std::vector<double> mags(f.values.size());
  for (std::size_t i = 0; i < mags.size(); ++i) mags[i] = std::abs(f.values[i]);
  std::sort(mags.begin(), mags.end(), std::greater<>());
  // mu(|f| > lambda) is a step function; the sup is attained approaching a
  // distinct value v from below, where it equals v^p * mu(|f| >= v).
  const double inv_total = 1.0 / static_cast<double>(mags.size());
  double best = 0.0;
  for (std::size_t r = 0; r < mags.size(); ++r) {
    if (mags[r] == 0.0) break;
    if (r + 1 < mags.size() && mags[r + 1] == mags[r]) continue;
    best = std::max(best, std::pow(mags[r], p) * static_cast<double>(r + 1) * inv_total);
  }
  return best;
}

double weak_lp_quasinorm(const DiscreteFunction& f, double p) {
  return std::pow(weak_lp_ppower(f, p), 1.0 / p);
}

double hardy_quasinorm(const GroupStructure& gs, const Martingale& m, double p) {
  require_probability_exponent(p);
  double acc = 0.0;
  for (double v : m.star()) acc += std::pow(v, p);
  return std::pow(acc / static_cast<double>(m.star().size()), 1.0 / p);
}

double hardy_ppower_from_values(const GroupStructure& gs,
                                std::span<const cplx> values, double p,
                                MaximalScratch& scratch) {
  return hardy_ppower_impl<cplx>(gs, values, p, scratch);
}

double hardy_ppower_from_values(const GroupStructure& gs,
                                std::span<const double> values, double p,
                                MaximalScratch& scratch) {
  return hardy_ppower_impl<double>(gs, values, p, scratch);
}

AtomValidation validate_atom(const GroupStructure& gs, const DiscreteFunction& a,
                             double p, const Coset& support) {
  require_probability_exponent(p);
  if (a.depth != gs.depth() || a.values.size() != gs.point_count())
    throw ResolutionError("atom depth does not match the group");
  if (support.depth > gs.depth())
    throw ResolutionError("support coset deeper than the model");
  AtomValidation out;
  const double bound =
      std::pow(static_cast<double>(gs.scale(support.depth)), 1.0 / p);
  out.sup_bound = bound;

  const std::uint64_t base = anchor_index(gs, support);
  const std::uint64_t stride = gs.scale(support.depth);
  const std::uint64_t total = gs.point_count();

  cplx mean{0.0, 0.0};
  double sup = 0.0;
  for (std::uint64_t i = base; i < total; i += stride) {
    mean += a.values[i];
    sup = std::max(sup, std::abs(a.values[i]));
  }
  mean /= static_cast<double>(total);
  out.mean_abs = std::abs(mean);
  out.sup_norm = sup;

  // Membership in I_depth(anchor) is a residue condition on the low digits.
  double off_support = 0.0;
  for (std::uint64_t i = 0; i < total; ++i) {
    if (i % stride == base) continue;
    off_support = std::max(off_support, std::abs(a.values[i]));
  }

  if (out.mean_abs > 1e-12) {
    out.defect = AtomDefect::mean_nonzero;
  } else if (sup > bound * (1.0 + 1e-12)) {
    out.defect = AtomDefect::sup_bound_exceeded;
  } else if (off_support > 1e-12 * std::max(1.0, bound)) {
    out.defect = AtomDefect::support_violation;
  } else {
    out.valid = true;
  }
  return out;
}

Atom random_atom(const GroupStructure& gs, double p, std::size_t support_depth,
                 std::uint64_t seed) {
  require_probability_exponent(p);
  if (support_depth > gs.depth())
    throw ResolutionError("support depth exceeds the model depth");
  const std::uint64_t stride = gs.scale(support_depth);
  const std::uint64_t total = gs.point_count();
  const std::uint64_t span = total / stride;  // support points

  // Prefer an exactly representable power-of-two bound so every butterfly
  // cancellation in the transform is exact.
  double bound = std::pow(static_cast<double>(stride), 1.0 / p);
  const double e = std::log2(static_cast<double>(stride)) / p;
  if (std::abs(e - std::round(e)) < 1e-9) bound = std::exp2(std::round(e));

  Atom atom;
  atom.p = p;
  atom.support.depth = support_depth;
  atom.support.anchor.coords.assign(gs.depth(), 0);
  atom.samples.depth = gs.depth();
  atom.samples.values.assign(total, cplx{0.0, 0.0});
  if (span < 2) return atom;  // a single-point support forces the zero atom

  std::vector<int> signs(span);
  std::mt19937_64 rng(seed);
  std::size_t start = 0;
  if (span % 2 != 0) signs[start++] = 0;
  long long excess = 0;
  for (std::size_t q = start; q < span; ++q) {
    signs[q] = (rng() & 1u) ? 1 : -1;
    excess += signs[q];
  }
  // Flip majority entries until the signs balance exactly.
  for (std::size_t q = start; q < span && excess != 0; ++q) {
    if (excess > 0 && signs[q] == 1) {
      signs[q] = -1;
      excess -= 2;
    } else if (excess < 0 && signs[q] == -1) {
      signs[q] = 1;
      excess += 2;
    }
  }
  for (std::size_t q = 0; q < span; ++q)
    atom.samples.values[q * stride] = static_cast<double>(signs[q]) * bound;
  return atom;
}

}  // namespace vilenkin
