#include "poly.hpp"

#include <utility>

namespace cdiff::detail {

namespace {

std::uint32_t invModP(std::uint32_t a, std::uint32_t p) {
  std::uint64_t result = 1;
  std::uint64_t base = a % p;
  std::uint32_t e = p - 2;
  while (e != 0) {
    if (e & 1u) result = result * base % p;
    base = base * base % p;
    e >>= 1;
  }
  return static_cast<std::uint32_t>(result);
}

}  // namespace

void trim(Poly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

Poly polyMod(Poly a, const Poly& m, std::uint32_t p) {
  trim(a);
  const std::size_t dm = m.size() - 1;
  const std::uint64_t leadInv = invModP(m.back(), p);
  while (a.size() >= m.size()) {
    const std::uint64_t k = a.back() * leadInv % p;
    const std::size_t shift = a.size() - 1 - dm;
    for (std::size_t i = 0; i <= dm; ++i) {
      const std::uint64_t t = k * m[i] % p;
      a[shift + i] = static_cast<std::uint32_t>((a[shift + i] + p - t) % p);
    }
    trim(a);
  }
  return a;
}

Poly polyMulMod(const Poly& a, const Poly& b, const Poly& m, std::uint32_t p) {
  if (a.empty() || b.empty()) return {};
  Poly prod(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) {
      prod[i + j] = static_cast<std::uint32_t>(
          (prod[i + j] + static_cast<std::uint64_t>(a[i]) * b[j]) % p);
    }
  }
  return polyMod(std::move(prod), m, p);
}

Poly polyGcd(Poly a, Poly b, std::uint32_t p) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    Poly r = polyMod(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.empty()) {
    const std::uint64_t leadInv = invModP(a.back(), p);
    for (auto& c : a) c = static_cast<std::uint32_t>(c * leadInv % p);
  }
  return a;
}

bool isIrreducible(const Poly& f, std::uint32_t p) {
  const std::size_t n = f.size() - 1;
  if (n == 1) return true;
  if (f[0] == 0) return false;

  // h = x^(p^i) mod f, raised to the p-th power each round.
  Poly h = polyMod(Poly{0, 1}, f, p);
  for (std::size_t i = 1; i <= n / 2; ++i) {
    Poly base = h;
    Poly acc{1};
    std::uint32_t e = p;
    while (e != 0) {
      if (e & 1u) acc = polyMulMod(acc, base, f, p);
      base = polyMulMod(base, base, f, p);
      e >>= 1;
    }
    h = acc;

    Poly diff = h;
    if (diff.size() < 2) diff.resize(2, 0);
    diff[1] = (diff[1] + p - 1) % p;
    trim(diff);
    if (diff.empty()) return false;  // f divides x^(p^i) - x
    const Poly g = polyGcd(diff, f, p);
    if (g.size() != 1) return false;
  }
  return true;
}

}  // namespace cdiff::detail
