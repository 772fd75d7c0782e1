#include "point_counts.hpp"

#include <array>
#include <vector>

namespace spherex::testing {

std::uint64_t count_sl2(int p) {
  std::uint64_t n = 0;
  for (int a = 0; a < p; ++a)
    for (int b = 0; b < p; ++b)
      for (int c = 0; c < p; ++c)
        for (int d = 0; d < p; ++d)
          if (((a * d - b * c) % p + p) % p == 1) ++n;
  return n;
}

std::uint64_t count_pgl2(int p) {
  std::uint64_t n = 0;
  for (int a = 0; a < p; ++a)
    for (int b = 0; b < p; ++b)
      for (int c = 0; c < p; ++c)
        for (int d = 0; d < p; ++d)
          if ((a * d - b * c) % p != 0) ++n;
  return n / static_cast<std::uint64_t>(p - 1);
}

namespace {

using Vec4 = std::array<int, 4>;

// Standard form: <x, y> = x0 y2 + x1 y3 - x2 y0 - x3 y1.
int pair(const Vec4& x, const Vec4& y, int p) {
  int v = x[0] * y[2] + x[1] * y[3] - x[2] * y[0] - x[3] * y[1];
  return ((v % p) + p) % p;
}

}  // namespace

std::uint64_t count_sp4(int p) {
  std::vector<Vec4> all;
  for (int a = 0; a < p; ++a)
    for (int b = 0; b < p; ++b)
      for (int c = 0; c < p; ++c)
        for (int d = 0; d < p; ++d) all.push_back({a, b, c, d});

  std::uint64_t n = 0;
  std::vector<Vec4> perp;
  for (const auto& e1 : all) {
    if (e1 == Vec4{0, 0, 0, 0}) continue;
    for (const auto& f1 : all) {
      if (pair(e1, f1, p) != 1) continue;
      perp.clear();
      for (const auto& v : all)
        if (pair(e1, v, p) == 0 && pair(f1, v, p) == 0) perp.push_back(v);
      for (const auto& e2 : perp)
        for (const auto& f2 : perp)
          if (pair(e2, f2, p) == 1) ++n;
    }
  }
  return n;
}

}  // namespace spherex::testing
