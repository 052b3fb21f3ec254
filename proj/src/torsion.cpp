#include "qtorsion/torsion.hpp"

#include <algorithm>

namespace qtorsion {

namespace {

int sign_of(long exponent) { return exponent % 2 == 0 ? 1 : -1; }

long degree_count(std::initializer_list<const DimensionProfile*> ps) {
  std::size_t n = 0;
  for (const auto* p : ps) n = std::max({n, p->x.size(), p->y.size()});
  return static_cast<long>(n);
}

}  // namespace

int predict_sum_sign(const DimensionProfile& c, const DimensionProfile& c1, const DimensionProfile& c2,
                     const DimensionProfile& c3) {
  long e = 0;
  const long n = degree_count({&c, &c1, &c2, &c3});
  for (long i = 0; i < n; ++i) {
    e += c2.x_at(i) * c.y_at(i) + c.x_at(i - 1) * (c2.x_at(i) + c2.y_at(i));
    e -= c3.x_at(i) * c.y_at(i) + c1.x_at(i - 1) * (c3.x_at(i) + c2.y_at(i));
  }
  return sign_of(e);
}

int predict_dual_sign(const DimensionProfile& c, const DimensionProfile& c1, std::size_t m) {
  long e = 0;
  for (long i = 0; i <= static_cast<long>(m); ++i) {
    e += c1.x_at(i) * (c1.x_at(i - 1) + c.y_at(i)) + c1.x_at(i - 1) * c.y_at(i);
    e -= c.x_at(i) * (c.x_at(i - 1) + c.y_at(i)) + c.x_at(i - 1) * c.y_at(i);
  }
  return sign_of(e);
}

}  // namespace qtorsion
