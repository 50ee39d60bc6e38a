#include "cdiff/theory.hpp"

#include <algorithm>
#include <sstream>

namespace cdiff {

namespace {

bool isPlusMinusOne(std::uint32_t r, std::uint32_t m) { return r == 1 || r == m - 1; }

// Collects the roots of x^2 = v (both signs), empty for a nonsquare.
std::vector<Elem> bothRoots(const Field& k, Elem v) {
  const auto r = k.sqrt(v);
  if (!r) return {};
  if (r->isZero()) return {*r};
  return {*r, k.neg(*r)};
}

}  // namespace

Prediction Prediction::exact(std::uint32_t v, std::vector<std::string> clauses) {
  Prediction out;
  out.kind = Kind::Exact;
  out.value = v;
  out.lo = v;
  out.hi = v;
  out.clauses = std::move(clauses);
  return out;
}

Prediction Prediction::bounded(std::uint32_t lo, std::uint32_t hi) {
  Prediction out;
  out.kind = Kind::Bounded;
  out.lo = lo;
  out.hi = hi;
  return out;
}

Prediction Prediction::exactOrBounded(std::uint32_t v, std::uint32_t lo, std::uint32_t hi) {
  Prediction out;
  out.kind = Kind::ExactOrBounded;
  out.value = v;
  out.lo = lo;
  out.hi = hi;
  return out;
}

std::uint32_t Prediction::rangeLo() const { return kind == Kind::ExactOrBounded ? std::min(value, lo) : lo; }
std::uint32_t Prediction::rangeHi() const { return kind == Kind::ExactOrBounded ? std::max(value, hi) : hi; }

bool Prediction::contains(std::uint32_t observed) const {
  switch (kind) {
    case Kind::Exact:
      return observed == value;
    case Kind::Bounded:
      return lo <= observed && observed <= hi;
    case Kind::ExactOrBounded:
      return observed == value || (lo <= observed && observed <= hi);
  }
  return false;
}

std::string Prediction::describe() const {
  std::ostringstream out;
  switch (kind) {
    case Kind::Exact:
      out << "=" << value;
      break;
    case Kind::Bounded:
      out << "[" << lo << "," << hi << "]";
      break;
    case Kind::ExactOrBounded:
      out << "=" << value << " or [" << lo << "," << hi << "]";
      break;
  }
  for (std::size_t i = 0; i < clauses.size(); ++i) out << (i ? ";" : " ") << clauses[i];
  return out.str();
}

std::uint32_t powMod(std::uint32_t p, std::uint32_t n, std::uint32_t m) {
  std::uint64_t r = 1 % m;
  for (std::uint32_t i = 0; i < n; ++i) r = r * p % m;
  return static_cast<std::uint32_t>(r);
}

int chiCongruenceTable(int v, std::uint32_t p, std::uint32_t n) {
  switch (v) {
    case -1:
      return powMod(p, n, 4) == 1 ? 1 : -1;
    case 5:
      if (p == 5) throw std::invalid_argument("chi(5) has no congruence rule in characteristic 5");
      return isPlusMinusOne(powMod(p, n, 5), 5) ? 1 : -1;
    case -3:
      if (p == 3) throw std::invalid_argument("chi(-3) has no congruence rule in characteristic 3");
      return powMod(p, n, 3) == 1 ? 1 : -1;
    case 2:
      return isPlusMinusOne(powMod(p, n, 8), 8) ? 1 : -1;
    default:
      throw std::invalid_argument("no congruence rule for chi(" + std::to_string(v) + ")");
  }
}

Prediction predictDuInv(std::uint32_t p, std::uint32_t n) {
  if (p == 3) return Prediction::exact(3, {"inv.c1.p3"});
  return powMod(p, n, 3) == 2 ? Prediction::exact(2, {"inv.c1.q2mod3"}) : Prediction::exact(4, {"inv.c1.q1mod3"});
}

Prediction predictCduInv(const Field& k, Elem c) {
  if (c.isZero() || c == k.one()) throw std::invalid_argument("c must lie outside {0, 1}");
  // Over F_3, Inv is the identity map and every c-derivative with c != 1 is a
  // bijection.
  if (k.q() == 3) return Prediction::exact(1, {"inv.q3_identity"});
  // APcN iff neither c^2 - 4c nor 1 - 4c is a nonzero square. At c = 4 or
  // 1/4 one of them vanishes and the other equals -15 up to a square factor,
  // so those two values are APcN exactly when -15 is a nonsquare.
  const Elem four = k.fromInt(4);
  const Elem d1 = k.sub(k.mul(c, c), k.mul(four, c));
  const Elem d2 = k.sub(k.one(), k.mul(four, c));
  if (k.chi(d1) != 1 && k.chi(d2) != 1) {
    const bool atFour = d1.isZero() || d2.isZero();
    return Prediction::exact(2, {atFour ? "inv.c_is_4" : "inv.both_nonsquare"});
  }
  return Prediction::exact(3, {"inv.otherwise"});
}

Prediction predictCduSwap01(const Field& k, Elem c) {
  if (k.q() <= 5) throw std::invalid_argument("Inv o (0,1) classification needs q > 5");
  if (c.isZero()) throw std::invalid_argument("c must be nonzero");
  const std::uint32_t p = k.p();
  const std::uint32_t n = k.n();
  const Elem two = k.fromInt(2);
  std::vector<std::string> fired;

  if (c == k.one()) {
    if (p == 3 && n % 2 == 0) return Prediction::exact(5, {"swap01.c1.p3_even"});
    if (p == 5 && n % 4 == 0) fired.emplace_back("swap01.c1.p5_n0mod4");
    if (p != 3 && isPlusMinusOne(powMod(p, n, 5), 5)) {
      // (-5 +- sqrt5)/2 is nonzero here, so "square" and "nonzero square" agree.
      for (const Elem s : bothRoots(k, k.fromInt(5))) {
        if (k.chi(k.div(k.add(k.fromInt(-5), s), two)) == 1) {
          fired.emplace_back("swap01.c1.sqrt5");
          break;
        }
      }
    }
    if (p != 5 && powMod(p, n, 3) == 1) {
      for (const Elem s : bothRoots(k, k.fromInt(-3))) {
        if (k.chi(k.div(k.add(k.fromInt(-5), k.mul(k.fromInt(3), s)), two)) == 1) {
          fired.emplace_back("swap01.c1.sqrt_minus3");
          break;
        }
      }
    }
    if (!fired.empty()) return Prediction::exact(4, std::move(fired));
    return Prediction::exact(3, {"swap01.c1.otherwise"});
  }

  if (isPlusMinusOne(powMod(p, n, 8), 8)) {
    const Elem m2 = k.fromInt(-2);
    if (c == m2 || c == k.inv0(m2)) fired.emplace_back("swap01.minus2");
  }
  if (powMod(p, n, 3) == 1) {
    // One bullet per root s of -3: c in {s, 1/s}, s != 5, (-3+5s)/6 a nonzero
    // square. The second bullet is the first with -s in place of s.
    const Elem six = k.fromInt(6);
    for (const Elem s : bothRoots(k, k.fromInt(-3))) {
      if ((c == s || c == k.inv0(s)) && s != k.fromInt(5) &&
          k.chi(k.div(k.add(k.fromInt(-3), k.mul(k.fromInt(5), s)), six)) == 1) {
        fired.emplace_back("swap01.sqrt_minus3");
        break;
      }
    }
  }
  if (isPlusMinusOne(powMod(p, n, 5), 5)) {
    const Elem c2 = k.mul(c, c);
    const Elem fourC = k.mul(k.fromInt(4), c);
    const Elem seven = k.fromInt(7);
    const Elem thirty = k.fromInt(30);
    if (k.sub(k.add(c2, fourC), k.one()).isZero() && k.chi(k.sub(seven, k.mul(thirty, c))) == 1) {
      fired.emplace_back("swap01.c2_plus_4c_minus_1");
    }
    if (k.sub(k.sub(c2, fourC), k.one()).isZero() && k.chi(k.sub(seven, k.mul(thirty, k.inv0(c)))) == 1) {
      fired.emplace_back("swap01.c2_minus_4c_minus_1");
    }
  }
  if (!fired.empty()) return Prediction::exact(5, std::move(fired));
  return Prediction::bounded(3, 4);
}

std::uint32_t predictLemmaA1(const Field& k) {
  if (k.q() <= 5) throw std::invalid_argument("needs q > 5");
  return isPlusMinusOne(powMod(k.p(), k.n(), 8), 8) ? 5 : 3;
}

Prediction predictDuSwap1g(const Field& k, Elem gamma) {
  if (gamma.isZero() || gamma == k.one()) throw std::invalid_argument("gamma must lie outside {0, 1}");
  if (gamma == k.fromInt(-1)) {
    if (k.p() == 5 && k.n() % 2 == 0) return Prediction::exact(7, {"swap1g.c1.p5_even"});
    std::vector<std::string> fired;
    if (k.q() % 8 == 1) fired.emplace_back("swap1g.c1.q1mod8");
    if (k.q() % 15 == 1 || k.q() % 15 == 4) fired.emplace_back("swap1g.c1.q1or4mod15");
    if (!fired.empty()) return Prediction::exact(6, std::move(fired));
  }
  return Prediction::bounded(1, 5);
}

Prediction predictCduSwap1g(const Field& k, Elem gamma, Elem c) {
  if (gamma.isZero() || gamma == k.one()) throw std::invalid_argument("gamma must lie outside {0, 1}");
  if (c.isZero() || c == k.one()) throw std::invalid_argument("c must lie outside {0, 1}");
  // gamma c^2 + 2 (gamma^2 + gamma + 1) c + gamma
  const Elem g2 = k.mul(gamma, gamma);
  const Elem middle = k.mul(k.fromInt(2), k.add(k.add(g2, gamma), k.one()));
  const Elem quad = k.add(k.add(k.mul(gamma, k.mul(c, c)), k.mul(middle, c)), gamma);
  if (quad.isZero() && c != k.fromInt(-1) && k.chi(k.neg(c)) == 1) {
    return Prediction::exact(6, {"swap1g.quad_and_minus_c_square"});
  }
  return Prediction::bounded(1, 5);
}

bool outsidePaPredicate(const Field& k, const Family& family, Elem c, Elem a, Elem b) {
  if (a.isZero()) throw std::invalid_argument("outside-P_a predicate needs a != 0");
  const Elem one = k.one();
  const Elem ab = k.mul(a, b);
  const Elem lin = k.sub(k.add(ab, c), one);  // ab + c - 1
  const Elem disc = k.sub(k.mul(lin, lin), k.mul(k.fromInt(4), k.mul(ab, c)));
  if (k.chi(disc) != 1 || b.isZero()) return false;
  const Elem bc1 = k.sub(k.add(b, c), one);  // b + c - 1
  if (k.add(k.mul(k.add(b, c), a), bc1).isZero()) return false;
  if (k.add(k.mul(k.sub(one, b), a), bc1).isZero()) return false;
  if (family.kind == Family::Kind::Swap1g) {
    if (!family.gamma) throw std::invalid_argument("swap1g family needs gamma");
    const Elem g = *family.gamma;
    const Elem bg = k.mul(b, g);
    const Elem tail = k.mul(g, k.sub(k.add(bg, c), one));  // gamma (b gamma + c - 1)
    if (k.add(k.mul(k.add(bg, c), a), tail).isZero()) return false;
    if (k.add(k.mul(k.sub(one, bg), a), tail).isZero()) return false;
  }
  return true;
}

std::optional<std::pair<Elem, Elem>> paFourcaseSwap1g(const Field& k, Elem gamma, Elem c) {
  if (gamma.isZero() || gamma == k.one()) throw std::invalid_argument("gamma must lie outside {0, 1}");
  if (c.isZero() || c == k.one()) throw std::invalid_argument("c must lie outside {0, 1}");
  const Elem g2 = k.mul(gamma, gamma);
  const Elem middle = k.mul(k.fromInt(2), k.add(k.add(g2, gamma), k.one()));
  const Elem quad = k.add(k.add(k.mul(gamma, k.mul(c, c)), k.mul(middle, c)), gamma);
  if (!quad.isZero() || c == k.fromInt(-1)) return std::nullopt;

  const Elem gc = k.add(gamma, c);
  const Elem g1 = k.add(gamma, k.one());
  if (gc.isZero() || g1.isZero()) {
    throw LemmaInconsistency("four-point configuration hit gamma + c = 0 or gamma = -1");
  }
  const Elem a = k.div(k.sub(g2, c), gc);
  const Elem b = k.div(k.sub(k.one(), c), g1);
  return std::make_pair(a, b);
}

std::vector<std::pair<Elem, Elem>> duFourcaseSwap1g(const Field& k, Elem gamma) {
  if (gamma.isZero() || gamma == k.one()) throw std::invalid_argument("gamma must lie outside {0, 1}");
  std::vector<std::pair<Elem, Elem>> out;
  const Elem minusOne = k.fromInt(-1);
  if (gamma != minusOne) return out;

  const Elem gm1 = k.sub(gamma, k.one());
  const std::vector<Elem> excluded{k.zero(), k.one(), minusOne, gamma, k.neg(gamma), gm1, k.neg(gm1)};
  auto admissible = [&](Elem a) { return std::find(excluded.begin(), excluded.end(), a) == excluded.end(); };

  const std::uint32_t q = k.q();
  if (q % 5 == 1 || q % 5 == 4) {
    // a^4 - 3a^2 + 1 = 0  <=>  a^2 = (3 +- sqrt5)/2; b = 1/a.
    const Elem half = k.inv0(k.fromInt(2));
    for (const Elem s : bothRoots(k, k.fromInt(5))) {
      const Elem a2 = k.mul(k.add(k.fromInt(3), s), half);
      for (const Elem a : bothRoots(k, a2)) {
        if (admissible(a)) out.emplace_back(a, k.inv0(a));
      }
    }
  }
  if (q % 8 == 1 || q % 8 == 7) {
    for (const Elem a : bothRoots(k, k.fromInt(2))) {
      if (admissible(a)) out.emplace_back(a, a);
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace cdiff
