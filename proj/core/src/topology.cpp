#include "cgauge/topology.hpp"

#include <stdexcept>

namespace cgauge {

PoincarePolynomial::PoincarePolynomial(std::vector<int> betti) : betti_(std::move(betti)) {
  for (int b : betti_) {
    if (b < 0) throw std::invalid_argument("Betti numbers must be nonnegative");
  }
}

PoincarePolynomial PoincarePolynomial::sphere(int m) {
  if (m < 1) throw std::invalid_argument("sphere dimension must be positive");
  std::vector<int> b(static_cast<std::size_t>(m + 1), 0);
  b.front() = 1;
  b.back() = 1;
  return PoincarePolynomial(std::move(b));
}

int PoincarePolynomial::betti(int i) const {
  if (i < 0 || i > top_degree()) return 0;
  return betti_[static_cast<std::size_t>(i)];
}

int PoincarePolynomial::total() const {
  int s = 0;
  for (int b : betti_) s += b;
  return s;
}

int PoincarePolynomial::euler_characteristic() const {
  int s = 0;
  for (std::size_t i = 0; i < betti_.size(); ++i) s += (i % 2 == 0 ? 1 : -1) * betti_[i];
  return s;
}

bool PoincarePolynomial::satisfies_duality() const {
  const int n = top_degree();
  for (int i = 0; i <= n; ++i) {
    if (betti(i) != betti(n - i)) return false;
  }
  return true;
}

PoincarePolynomial PoincarePolynomial::operator*(const PoincarePolynomial& other) const {
  if (betti_.empty() || other.betti_.empty()) return {};
  std::vector<int> out(betti_.size() + other.betti_.size() - 1, 0);
  for (std::size_t i = 0; i < betti_.size(); ++i) {
    for (std::size_t j = 0; j < other.betti_.size(); ++j) out[i + j] += betti_[i] * other.betti_[j];
  }
  return PoincarePolynomial(std::move(out));
}

PoincarePolynomial poincare(const std::vector<int>& sphere_dims) {
  PoincarePolynomial result({1});
  for (int m : sphere_dims) result = result * PoincarePolynomial::sphere(m);
  return result;
}

int betti_window_sum(const PoincarePolynomial& poly, int p, int n) {
  if (p < 0 || 2 * p > n) throw std::invalid_argument("betti_window_sum: need 0 <= p <= n/2");
  int s = 0;
  for (int i = p; i <= n - p; ++i) s += poly.betti(i);
  return s;
}

}  // namespace cgauge
