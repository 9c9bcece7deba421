#include "vilenkin/group.hpp"

#include "vilenkin/detail/kernel_cache.hpp"

namespace vilenkin {

GroupStructure::GroupStructure(const std::vector<std::uint32_t>& pattern,
                               std::size_t depth, std::uint64_t capacity) {
  if (depth < 1) throw InvalidGeneratingSequence("depth must be at least 1");
  if (pattern.empty()) throw InvalidGeneratingSequence("empty generating sequence");
  m_.reserve(depth);
  for (std::size_t k = 0; k < depth; ++k) {
    const std::uint32_t mk = pattern[k % pattern.size()];
    if (mk < 2)
      throw InvalidGeneratingSequence("generating sequence entry " +
                                      std::to_string(mk) + " is below 2");
    m_.push_back(mk);
    if (mk > max_modulus_) max_modulus_ = mk;
  }
  scales_.resize(depth + 1);
  scales_[0] = 1;
  for (std::size_t k = 0; k < depth; ++k) {
    if (scales_[k] > capacity / m_[k])
      throw CapacityError("M_L exceeds the point budget of " +
                          std::to_string(capacity));
    scales_[k + 1] = scales_[k] * m_[k];
  }
  kernel_cache_ = std::make_shared<detail::KernelCache>();
}

GroupStructure build_group(const std::vector<std::uint32_t>& pattern,
                           std::size_t depth, std::uint64_t capacity) {
  return GroupStructure(pattern, depth, capacity);
}

void GroupStructure::digits_of(std::uint64_t value,
                               std::span<std::uint32_t> out) const {
  for (std::size_t k = 0; k < m_.size(); ++k) {
    out[k] = static_cast<std::uint32_t>(value % m_[k]);
    value /= m_[k];
  }
}

std::uint64_t GroupStructure::value_of(std::span<const std::uint32_t> digits) const {
  std::uint64_t v = 0;
  for (std::size_t k = digits.size(); k-- > 0;) v = v * m_[k] + digits[k];
  return v;
}

MixedRadixIndex GroupStructure::index(std::uint64_t value) const {
  if (value >= point_count())
    throw ResolutionError("index " + std::to_string(value) +
                          " does not fit depth " + std::to_string(depth()));
  MixedRadixIndex n;
  n.value = value;
  n.digits.resize(depth());
  digits_of(value, n.digits);
  return n;
}

GroupElement GroupStructure::element(std::uint64_t point) const {
  GroupElement x;
  x.coords.resize(depth());
  digits_of(point, x.coords);
  return x;
}

std::uint64_t GroupStructure::point(const GroupElement& x) const {
  return value_of(x.coords);
}

std::uint64_t GroupStructure::add(std::uint64_t a, std::uint64_t b) const {
  std::uint64_t out = 0;
  std::uint64_t place = 1;
  for (std::size_t k = 0; k < m_.size(); ++k) {
    const std::uint64_t da = a % m_[k], db = b % m_[k];
    out += ((da + db) % m_[k]) * place;
    a /= m_[k];
    b /= m_[k];
    place *= m_[k];
  }
  return out;
}

std::uint64_t GroupStructure::subtract(std::uint64_t a, std::uint64_t b) const {
  std::uint64_t out = 0;
  std::uint64_t place = 1;
  for (std::size_t k = 0; k < m_.size(); ++k) {
    const std::uint64_t da = a % m_[k], db = b % m_[k];
    out += ((da + m_[k] - db) % m_[k]) * place;
    a /= m_[k];
    b /= m_[k];
    place *= m_[k];
  }
  return out;
}

std::size_t MixedRadixIndex::order() const {
  for (std::size_t j = digits.size(); j-- > 0;)
    if (digits[j] != 0) return j;
  return 0;
}

GroupElement add(const GroupStructure& gs, const GroupElement& a,
                 const GroupElement& b) {
  GroupElement out;
  out.coords.resize(gs.depth());
  for (std::size_t k = 0; k < gs.depth(); ++k)
    out.coords[k] = (a.coords[k] + b.coords[k]) % gs.modulus(k);
  return out;
}

GroupElement subtract(const GroupStructure& gs, const GroupElement& a,
                      const GroupElement& b) {
  GroupElement out;
  out.coords.resize(gs.depth());
  for (std::size_t k = 0; k < gs.depth(); ++k)
    out.coords[k] = (a.coords[k] + gs.modulus(k) - b.coords[k]) % gs.modulus(k);
  return out;
}

GroupElement basis_element(const GroupStructure& gs, std::size_t n,
                           std::uint32_t value) {
  GroupElement e;
  e.coords.assign(gs.depth(), 0);
  e.coords.at(n) = value % gs.modulus(n);
  return e;
}

double measure(const GroupStructure& gs, const Coset& c) {
  return 1.0 / static_cast<double>(gs.scale(c.depth));
}

bool contains(const GroupStructure& gs, const Coset& c, std::uint64_t point) {
  for (std::size_t k = 0; k < c.depth; ++k) {
    if (point % gs.modulus(k) != c.anchor.coords[k]) return false;
    point /= gs.modulus(k);
  }
  return true;
}

std::uint64_t anchor_index(const GroupStructure& gs, const Coset& c) {
  std::uint64_t v = 0;
  for (std::size_t k = c.depth; k-- > 0;) v = v * gs.modulus(k) + c.anchor.coords[k];
  return v;
}

std::complex<double> integral(const DiscreteFunction& f) {
  std::complex<double> acc{0.0, 0.0};
  for (const auto& v : f.values) acc += v;
  return acc / static_cast<double>(f.values.size());
}

std::vector<Coset> enumerate_complement_partition(const GroupStructure& gs,
                                                  std::size_t N) {
  if (N < 1 || N > gs.depth())
    throw ResolutionError("complement partition depth " + std::to_string(N) +
                          " outside [1, " + std::to_string(gs.depth()) + "]");
  std::vector<Coset> out;
  // First nonzero coordinate k, second nonzero coordinate l < N: the point
  // lies in I_{l+1}(x_k e_k + x_l e_l).
  for (std::size_t k = 0; k + 1 < N; ++k)
    for (std::uint32_t xk = 1; xk < gs.modulus(k); ++xk)
      for (std::size_t l = k + 1; l < N; ++l)
        for (std::uint32_t xl = 1; xl < gs.modulus(l); ++xl) {
          Coset c;
          c.depth = l + 1;
          c.anchor = add(gs, basis_element(gs, k, xk), basis_element(gs, l, xl));
          out.push_back(std::move(c));
        }
  // Exactly one nonzero coordinate below N: I_N(x_k e_k).
  for (std::size_t k = 0; k < N; ++k)
    for (std::uint32_t xk = 1; xk < gs.modulus(k); ++xk) {
      Coset c;
      c.depth = N;
      c.anchor = basis_element(gs, k, xk);
      out.push_back(std::move(c));
    }
  return out;
}

}  // namespace vilenkin
