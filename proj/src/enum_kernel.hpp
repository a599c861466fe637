#pragma once

// Bitsliced codeword arithmetic for the Gray-order scan.
//
// A length-N vector over GF(p^E) is stored as bit planes over 64-bit words.
// p = 2: one plane per coordinate component, addition is XOR.
// p = 3: two planes per component (is-one, is-two), addition by the one-hot
// ternary rule below. Bits past N are kept zero in every plane.

#include <array>
#include <bit>
#include <cstdint>
#include <vector>

namespace qcx::detail {

template <unsigned P, unsigned E, unsigned W>
struct Sliced {
  static constexpr unsigned kPlanesPerComp = P == 2 ? 1 : 2;
  static constexpr unsigned kPlanes = kPlanesPerComp * E;
  std::array<std::uint64_t, kPlanes * W> w{};

  std::uint64_t& at(unsigned plane, unsigned word) { return w[plane * W + word]; }
  std::uint64_t at(unsigned plane, unsigned word) const { return w[plane * W + word]; }

  void add(const Sliced& y) {
    if constexpr (P == 2) {
      for (unsigned i = 0; i < kPlanes * W; ++i) w[i] ^= y.w[i];
    } else {
      for (unsigned e = 0; e < E; ++e)
        for (unsigned j = 0; j < W; ++j) {
          const std::uint64_t x1 = at(2 * e, j), x2 = at(2 * e + 1, j);
          const std::uint64_t y1 = y.at(2 * e, j), y2 = y.at(2 * e + 1, j);
          const std::uint64_t x0 = ~(x1 | x2), y0 = ~(y1 | y2);
          at(2 * e, j) = (x0 & y1) | (x1 & y0) | (x2 & y2);
          at(2 * e + 1, j) = (x0 & y2) | (x2 & y0) | (x1 & y1);
        }
    }
  }

  unsigned weight() const {
    unsigned total = 0;
    for (unsigned j = 0; j < W; ++j) {
      std::uint64_t any = 0;
      for (unsigned pl = 0; pl < kPlanes; ++pl) any |= at(pl, j);
      total += static_cast<unsigned>(std::popcount(any));
    }
    return total;
  }

  /// comps[i * E + e] is component e (in 0..P-1) of coordinate i.
  static Sliced encode(const std::vector<std::uint8_t>& comps, std::size_t length) {
    Sliced s;
    for (std::size_t i = 0; i < length; ++i)
      for (unsigned e = 0; e < E; ++e) {
        const unsigned c = comps[i * E + e];
        if (c == 0) continue;
        const unsigned plane = P == 2 ? e : 2 * e + (c - 1);
        s.at(plane, static_cast<unsigned>(i / 64)) |= std::uint64_t{1} << (i % 64);
      }
    return s;
  }
};

/// Gray scan over `free` coordinates with Q symbols each, starting from
/// `start`. deltas[j * Q + d] is the change to the codeword when digit j
/// steps from d to d+1 (mod Q). Adds 1 to hist[weight] per visited codeword.
template <unsigned P, unsigned E, unsigned W>
void gray_scan(const std::vector<Sliced<P, E, W>>& deltas, unsigned Q, std::size_t free,
               Sliced<P, E, W> cw, std::uint64_t* hist) {
  ++hist[cw.weight()];
  if (free == 0) return;
  std::vector<std::uint32_t> counter(free + 1, 0), gray(free, 0);
  const std::uint32_t top = Q - 1;
  for (;;) {
    std::size_t j = 0;
    while (counter[j] == top) counter[j++] = 0;
    if (j == free) break;
    ++counter[j];
    const std::uint32_t d = gray[j];
    gray[j] = d == top ? 0 : d + 1;
    cw.add(deltas[j * Q + d]);
    ++hist[cw.weight()];
  }
}

}  // namespace qcx::detail
