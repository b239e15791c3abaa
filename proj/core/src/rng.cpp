#include "cpnsurf/rng.hpp"

#include <cmath>

namespace cpn {

namespace {
uint64_t fnv1a(std::string_view s) {
  uint64_t h = 1469598103934665603ull;
  for (char c : s) {
    h ^= static_cast<unsigned char>(c);
    h *= 1099511628211ull;
  }
  return h;
}

uint64_t splitmix(uint64_t z) {
  z += 0x9e3779b97f4a7c15ull;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}
}  // namespace

Rng::Rng(uint64_t seed, std::string_view stream, uint64_t index) {
  state_ = splitmix(splitmix(seed ^ fnv1a(stream)) + index * 0x9e3779b97f4a7c15ull);
}

uint64_t Rng::next_u64() { return splitmix(state_ + (++counter_)); }

double Rng::uniform() {
  return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

double Rng::uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

double Rng::gaussian() {
  const double u1 = std::max(uniform(), 1e-300);
  const double u2 = uniform();
  return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * M_PI * u2);
}

cplx Rng::gaussian_cplx() {
  const double u1 = std::max(uniform(), 1e-300);
  const double u2 = uniform();
  const double r = std::sqrt(-2.0 * std::log(u1));
  return {r * std::cos(2.0 * M_PI * u2), r * std::sin(2.0 * M_PI * u2)};
}

cplx Rng::disk(double radius) {
  const double r = radius * std::sqrt(uniform());
  const double a = 2.0 * M_PI * uniform();
  return {r * std::cos(a), r * std::sin(a)};
}

CMatrix Rng::gaussian_matrix(int n) {
  CMatrix m(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m(i, j) = gaussian_cplx();
  return m;
}

CMatrix Rng::su_element(int n) {
  const CMatrix g = gaussian_matrix(n);
  CMatrix a = 0.5 * (g - g.dagger());
  const cplx shift = a.trace() / static_cast<double>(n);
  for (int i = 0; i < n; ++i) a(i, i) -= shift;
  return a;
}

std::vector<cplx> fixed_probe_points() {
  return {cplx{0.0, 0.0}, cplx{1.0, 0.0}, cplx{0.0, 1.0}, cplx{1.0, 1.0}};
}

}  // namespace cpn
