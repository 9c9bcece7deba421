#pragma once

#include <complex>
#include <cstdint>
#include <memory>
#include <span>
#include <vector>

#include "vilenkin/errors.hpp"

namespace vilenkin {

struct GroupElement;
struct MixedRadixIndex;
struct Coset;
namespace detail {
class KernelCache;
}

/// Finite model of a bounded Vilenkin group: a generating sequence
/// m_0..m_{L-1} (each >= 2), truncated at depth L, together with the
/// generalized numbers M_0 = 1, M_{k+1} = m_k * M_k.
///
/// Points are addressed by their mixed-radix index i = sum x_j * M_j,
/// so digit 0 is the fastest-varying coordinate. The model carries M_L
/// points, one per depth-L coset, and Haar measure is the uniform
/// probability measure on them.
///
/// Immutable after construction and safe to share across threads.
class GroupStructure {
 public:
  static constexpr std::uint64_t kDefaultCapacity = std::uint64_t{1} << 22;

  GroupStructure(const std::vector<std::uint32_t>& pattern, std::size_t depth,
                 std::uint64_t capacity = kDefaultCapacity);

  std::size_t depth() const { return m_.size(); }
  const std::vector<std::uint32_t>& moduli() const { return m_; }
  std::uint32_t modulus(std::size_t k) const { return m_[k]; }
  /// M_k for k in [0, depth()].
  std::uint64_t scale(std::size_t k) const { return scales_[k]; }
  std::uint64_t point_count() const { return scales_.back(); }
  std::uint32_t max_modulus() const { return max_modulus_; }
  /// True when every modulus equals 2 (Walsh case).
  bool dyadic() const { return max_modulus_ == 2; }

  /// Writes the mixed-radix digits of value (must be < M_L) into out,
  /// one digit per coordinate.
  void digits_of(std::uint64_t value, std::span<std::uint32_t> out) const;
  std::uint64_t value_of(std::span<const std::uint32_t> digits) const;

  MixedRadixIndex index(std::uint64_t value) const;
  GroupElement element(std::uint64_t point) const;
  std::uint64_t point(const GroupElement& x) const;

  /// Coordinate-wise modular group operations on point indices.
  std::uint64_t add(std::uint64_t a, std::uint64_t b) const;
  std::uint64_t subtract(std::uint64_t a, std::uint64_t b) const;

  detail::KernelCache& kernel_cache() const { return *kernel_cache_; }

 private:
  std::vector<std::uint32_t> m_;
  std::vector<std::uint64_t> scales_;  // M_0..M_L
  std::uint32_t max_modulus_ = 2;
  std::shared_ptr<detail::KernelCache> kernel_cache_;
};

/// Builds the depth-L model from a modulus pattern. A pattern shorter than
/// L is extended cyclically, so build_group({2, 3}, 4) models m = (2,3,2,3).
GroupStructure build_group(const std::vector<std::uint32_t>& pattern,
                           std::size_t depth,
                           std::uint64_t capacity = GroupStructure::kDefaultCapacity);

/// An element of the group: one digit per coordinate, coords[k] < m_k.
struct GroupElement {
  std::vector<std::uint32_t> coords;

  bool operator==(const GroupElement&) const = default;
};

GroupElement add(const GroupStructure& gs, const GroupElement& a, const GroupElement& b);
GroupElement subtract(const GroupStructure& gs, const GroupElement& a, const GroupElement& b);
/// The basis element e_n, optionally scaled: value * e_n.
GroupElement basis_element(const GroupStructure& gs, std::size_t n, std::uint32_t value = 1);

/// A nonnegative integer together with its digits in the generalized
/// number system; order() is the position of the highest nonzero digit.
struct MixedRadixIndex {
  std::uint64_t value = 0;
  std::vector<std::uint32_t> digits;

  std::size_t order() const;
};

/// The coset I_depth(anchor): all points whose first `depth` coordinates
/// agree with the anchor. Two cosets of equal depth are equal or disjoint.
struct Coset {
  std::size_t depth = 0;
  GroupElement anchor;
};

double measure(const GroupStructure& gs, const Coset& c);
bool contains(const GroupStructure& gs, const Coset& c, std::uint64_t point);
/// Index of the anchor with coordinates >= depth zeroed; the coset's points
/// are anchor_index + r * M_depth for r in [0, M_L / M_depth).
std::uint64_t anchor_index(const GroupStructure& gs, const Coset& c);

/// A function constant on depth-L cosets, sampled once per coset in
/// mixed-radix point order. Integrals are arithmetic means (mu(G_m) = 1).
struct DiscreteFunction {
  std::size_t depth = 0;
  std::vector<std::complex<double>> values;
};

/// A Vilenkin-Fourier coefficient vector; coeffs[k] pairs with psi_k.
struct Spectrum {
  std::size_t depth = 0;
  std::vector<std::complex<double>> coeffs;
};

std::complex<double> integral(const DiscreteFunction& f);

/// The cosets of eq.-(3) type tiling the complement of I_N: the two-
/// coordinate cosets I_{l+1}(x_k e_k + x_l e_l) for k < l < N and the
/// depth-N cosets I_N(x_k e_k). Pairwise disjoint, union = G_m \ I_N.
std::vector<Coset> enumerate_complement_partition(const GroupStructure& gs, std::size_t N);

}  // namespace vilenkin
