#pragma once

#include <complex>
#include <cstdint>
#include <span>
#include <vector>

#include "vilenkin/group.hpp"

namespace vilenkin {

/// The coset-averaging martingale of a sampled function: level n holds the
/// averages of f over depth-n cosets (one value per coset, M_n of them),
/// which equals S_{M_n} f. The maximal function f* = max_n |level_n| is
/// stored at full resolution.
class Martingale {
 public:
  Martingale(const GroupStructure& gs, const DiscreteFunction& f);

  std::size_t level_count() const { return levels_.size(); }  // L + 1
  /// Averages over depth-n cosets, indexed by the coset's anchor index.
  std::span<const std::complex<double>> level(std::size_t n) const {
    return levels_[n];
  }
  /// Level n expanded back to one value per point.
  DiscreteFunction level_function(const GroupStructure& gs, std::size_t n) const;
  std::span<const double> star() const { return star_; }

 private:
  std::vector<std::vector<std::complex<double>>> levels_;
  std::vector<double> star_;
};

Martingale martingale_from_function(const GroupStructure& gs, const DiscreteFunction& f);

/// ||f||_p = (integral |f|^p)^{1/p}, 0 < p < infinity.
double lp_quasinorm(const DiscreteFunction& f, double p);
/// The weak quantity sup_lambda lambda^p mu(|f| > lambda), computed exactly
/// from the sorted sample values.
double weak_lp_ppower(const DiscreteFunction& f, double p);
/// weak_lp_ppower raised to 1/p.
double weak_lp_quasinorm(const DiscreteFunction& f, double p);
/// ||f||_{H_p} = ||f*||_p.
double hardy_quasinorm(const GroupStructure& gs, const Martingale& m, double p);

/// Mean of (g*)^p where g* is the maximal function of the values' coset-
/// averaging martingale; scratch buffers are reused across calls.
struct MaximalScratch {
  std::vector<std::complex<double>> tree;
  std::vector<double> tree_real;
  std::vector<double> chain;
};
double hardy_ppower_from_values(const GroupStructure& gs,
                                std::span<const std::complex<double>> values,
                                double p, MaximalScratch& scratch);
double hardy_ppower_from_values(const GroupStructure& gs,
                                std::span<const double> values, double p,
                                MaximalScratch& scratch);

/// A p-atom: mean zero on its support coset I, bounded by mu(I)^{-1/p},
/// vanishing off I.
struct Atom {
  DiscreteFunction samples;
  double p = 1.0;
  Coset support;
};

enum class AtomDefect { none, mean_nonzero, sup_bound_exceeded, support_violation };

struct AtomValidation {
  bool valid = false;
  AtomDefect defect = AtomDefect::none;
  double mean_abs = 0.0;
  double sup_norm = 0.0;
  double sup_bound = 0.0;

  explicit operator bool() const { return valid; }
};

/// Checks the three atom conditions; mean-zero within 1e-12 absolute, the
/// sup bound with 1 + 1e-12 relative slack.
AtomValidation validate_atom(const GroupStructure& gs, const DiscreteFunction& a,
                             double p, const Coset& support);

/// Deterministic mean-zero +-bound noise on I_N, saturating the sup bound.
/// When the bound is a power of two (Walsh with integral N/p) the transform
/// of the atom has exactly zero coefficients below M_N.
Atom random_atom(const GroupStructure& gs, double p, std::size_t support_depth,
                 std::uint64_t seed);

}  // namespace vilenkin
