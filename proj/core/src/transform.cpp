#include "vilenkin/transform.hpp"

#include <cmath>
#include <numbers>
#include <vector>

namespace vilenkin {

namespace {

using cplx = std::complex<double>;

// Roots of unity exp(sign * 2*pi*i * r / radix) with exact values at the
// quarter points, so dyadic stages reduce to exact +- arithmetic.
std::vector<cplx> unit_roots(std::uint32_t radix, int sign) {
  std::vector<cplx> roots(radix);
  for (std::uint32_t r = 0; r < radix; ++r) {
    if (r == 0) {
      roots[r] = {1.0, 0.0};
    } else if (2 * r == radix) {
      roots[r] = {-1.0, 0.0};
    } else if (4 * r == radix) {
      roots[r] = {0.0, sign > 0 ? 1.0 : -1.0};
    } else if (4 * r == 3 * radix) {
      roots[r] = {0.0, sign > 0 ? -1.0 : 1.0};
    } else {
      const double angle = sign * 2.0 * std::numbers::pi * r / radix;
      roots[r] = {std::cos(angle), std::sin(angle)};
    }
  }
  return roots;
}

// One DFT pass along digit k for every coset line; no twiddles appear
// because the characters factor coordinate-wise.
void radix_stage(std::span<cplx> data, std::uint64_t stride, std::uint32_t radix,
                 const std::vector<cplx>& roots, std::span<cplx> scratch) {
  const std::uint64_t block = stride * radix;
  const std::uint64_t total = data.size();
  if (radix == 2) {
    for (std::uint64_t base = 0; base < total; base += block)
      for (std::uint64_t off = base; off < base + stride; ++off) {
        const cplx a = data[off];
        const cplx b = data[off + stride];
        data[off] = a + b;
        data[off + stride] = a - b;
      }
    return;
  }
  for (std::uint64_t base = 0; base < total; base += block)
    for (std::uint64_t off = base; off < base + stride; ++off) {
      for (std::uint32_t d = 0; d < radix; ++d) scratch[d] = data[off + d * stride];
      for (std::uint32_t t = 0; t < radix; ++t) {
        cplx acc = scratch[0];
        std::uint64_t idx = 0;
        for (std::uint32_t d = 1; d < radix; ++d) {
          idx += t;
          if (idx >= radix) idx -= radix;
          acc += scratch[d] * roots[idx];
        }
        data[off + t * stride] = acc;
      }
    }
}

void transform_inplace(const GroupStructure& gs, std::span<cplx> data, int sign) {
  if (data.size() != gs.point_count())
    throw ResolutionError("buffer size does not match the point count");
  std::vector<cplx> scratch(gs.max_modulus());
  std::uint32_t prev_radix = 0;
  std::vector<cplx> roots;
  for (std::size_t k = 0; k < gs.depth(); ++k) {
    const std::uint32_t radix = gs.modulus(k);
    if (radix != prev_radix && radix != 2) {
      roots = unit_roots(radix, sign);
      prev_radix = radix;
    }
    radix_stage(data, gs.scale(k), radix, roots, scratch);
  }
}

void require_dyadic(const GroupStructure& gs) {
  if (!gs.dyadic())
    throw UnsupportedGroupError("real Walsh path requires all moduli equal 2");
}

}  // namespace

std::complex<double> character(const GroupStructure& gs, const MixedRadixIndex& n,
                               const GroupElement& x) {
  if (n.digits.empty() || n.digits.size() != gs.depth())
    throw ResolutionError("index digits do not match the group depth");
  if (n.value != 0 && n.order() >= gs.depth())
    throw ResolutionError("character order exceeds the truncation depth");
  cplx out{1.0, 0.0};
  for (std::size_t k = 0; k < gs.depth(); ++k) {
    const std::uint32_t nk = n.digits[k];
    if (nk == 0) continue;
    const std::uint32_t mk = gs.modulus(k);
    const std::uint64_t r = (static_cast<std::uint64_t>(nk) * x.coords[k]) % mk;
    if (mk == 2) {
      if (r == 1) out = -out;
    } else {
      const double angle = 2.0 * std::numbers::pi * static_cast<double>(r) / mk;
      out *= cplx{std::cos(angle), std::sin(angle)};
    }
  }
  return out;
}

std::complex<double> character(const GroupStructure& gs, std::uint64_t n,
                               std::uint64_t x) {
  return character(gs, gs.index(n), gs.element(x));
}

void character_column(const GroupStructure& gs, std::uint64_t n,
                      std::span<std::complex<double>> out) {
  if (n >= gs.point_count())
    throw ResolutionError("character index exceeds the model resolution");
  out[0] = {1.0, 0.0};
  std::uint64_t len = 1;
  std::uint64_t rest = n;
  for (std::size_t k = 0; k < gs.depth(); ++k) {
    const std::uint32_t mk = gs.modulus(k);
    const std::uint32_t nk = static_cast<std::uint32_t>(rest % mk);
    rest /= mk;
    const auto roots = unit_roots(mk, +1);
    for (std::uint32_t d = 1; d < mk; ++d) {
      const cplx w = roots[(static_cast<std::uint64_t>(nk) * d) % mk];
      for (std::uint64_t j = 0; j < len; ++j) out[d * len + j] = out[j] * w;
    }
    len *= mk;
  }
}

void character_column_real(const GroupStructure& gs, std::uint64_t n,
                           std::span<double> out) {
  require_dyadic(gs);
  if (n >= gs.point_count())
    throw ResolutionError("character index exceeds the model resolution");
  out[0] = 1.0;
  std::uint64_t len = 1;
  for (std::size_t k = 0; k < gs.depth(); ++k) {
    const bool flip = (n >> k) & 1u;
    for (std::uint64_t j = 0; j < len; ++j)
      out[len + j] = flip ? -out[j] : out[j];
    len *= 2;
  }
}

void forward_inplace(const GroupStructure& gs, std::span<cplx> data) {
  transform_inplace(gs, data, -1);
  const double scale = 1.0 / static_cast<double>(gs.point_count());
  for (auto& v : data) v *= scale;
}

void inverse_inplace(const GroupStructure& gs, std::span<cplx> data) {
  transform_inplace(gs, data, +1);
}

void forward_inplace_real(const GroupStructure& gs, std::span<double> data) {
  require_dyadic(gs);
  const std::uint64_t total = data.size();
  for (std::uint64_t stride = 1; stride < total; stride *= 2)
    for (std::uint64_t base = 0; base < total; base += 2 * stride)
      for (std::uint64_t off = base; off < base + stride; ++off) {
        const double a = data[off];
        const double b = data[off + stride];
        data[off] = a + b;
        data[off + stride] = a - b;
      }
  const double scale = 1.0 / static_cast<double>(total);
  for (auto& v : data) v *= scale;
}

void inverse_inplace_real(const GroupStructure& gs, std::span<double> data) {
  require_dyadic(gs);
  const std::uint64_t total = data.size();
  for (std::uint64_t stride = 1; stride < total; stride *= 2)
    for (std::uint64_t base = 0; base < total; base += 2 * stride)
      for (std::uint64_t off = base; off < base + stride; ++off) {
        const double a = data[off];
        const double b = data[off + stride];
        data[off] = a + b;
        data[off + stride] = a - b;
      }
}

Spectrum forward_transform(const GroupStructure& gs, const DiscreteFunction& f) {
  if (f.depth != gs.depth() || f.values.size() != gs.point_count())
    throw ResolutionError("function depth does not match the group");
  Spectrum s;
  s.depth = gs.depth();
  s.coeffs = f.values;
  forward_inplace(gs, s.coeffs);
  return s;
}

DiscreteFunction inverse_transform(const GroupStructure& gs, const Spectrum& s) {
  if (s.depth != gs.depth() || s.coeffs.size() != gs.point_count())
    throw ResolutionError("spectrum depth does not match the group");
  DiscreteFunction f;
  f.depth = gs.depth();
  f.values = s.coeffs;
  inverse_inplace(gs, f.values);
  return f;
}

}  // namespace vilenkin
