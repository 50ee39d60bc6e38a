#pragma once

// Dense polynomials over F_p, coefficients constant term first. Only what
// modulus selection needs.

#include <cstdint>
#include <vector>

namespace cdiff::detail {

using Poly = std::vector<std::uint32_t>;

void trim(Poly& f);
Poly polyMod(Poly a, const Poly& m, std::uint32_t p);
Poly polyMulMod(const Poly& a, const Poly& b, const Poly& m, std::uint32_t p);
Poly polyGcd(Poly a, Poly b, std::uint32_t p);

/// Ben-Or test: a monic f of degree n is irreducible iff
/// gcd(x^(p^i) - x, f) = 1 for every 1 <= i <= n/2.
bool isIrreducible(const Poly& f, std::uint32_t p);

}  // namespace cdiff::detail
