#pragma once

// Closed-form predictions of (c-)differential uniformities of the inverse
// function and the swapped inverse families Inv o (0,1) and Inv o (1,gamma),
// evaluated with exact field arithmetic.
//
// Every exact prediction carries the labels of the classification clauses
// that produced it, so a disagreement with brute force names the clause.

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "cdiff/engine.hpp"
#include "cdiff/field.hpp"

namespace cdiff {

struct Prediction {
  enum class Kind { Exact, Bounded, ExactOrBounded };

  Kind kind = Kind::Bounded;
  std::uint32_t value = 0;
  std::uint32_t lo = 0;
  std::uint32_t hi = 0;
  std::vector<std::string> clauses;

  static Prediction exact(std::uint32_t v, std::vector<std::string> clauses);
  static Prediction bounded(std::uint32_t lo, std::uint32_t hi);
  static Prediction exactOrBounded(std::uint32_t v, std::uint32_t lo, std::uint32_t hi);

  std::uint32_t rangeLo() const;
  std::uint32_t rangeHi() const;
  bool contains(std::uint32_t observed) const;
  std::string describe() const;

  friend bool operator==(const Prediction&, const Prediction&) = default;
};

/// Raised when a lemma's closed form hits a division its proof rules out.
class LemmaInconsistency : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// p^n mod m without overflow.
std::uint32_t powMod(std::uint32_t p, std::uint32_t n, std::uint32_t m);

/// chi(v) for v in {-1, 5, -3, 2} from the residue of p^n modulo 4, 5, 3
/// or 8. Throws for other v, and for v = 5 with p = 5 or v = -3 with p = 3.
int chiCongruenceTable(int v, std::uint32_t p, std::uint32_t n);

/// Differential uniformity of Inv (c = 1).
Prediction predictDuInv(std::uint32_t p, std::uint32_t n);

/// c-differential uniformity of Inv for c outside {0, 1}: 2 or 3.
Prediction predictCduInv(const Field& field, Elem c);

/// c-differential uniformity of Inv o (0,1), q > 5, c != 0.
Prediction predictCduSwap01(const Field& field, Elem c);

/// Value of cDelta(1, 1/2) for Inv o (0,1) at c = -1/2, q > 5.
std::uint32_t predictLemmaA1(const Field& field);

/// Differential uniformity of Inv o (1,gamma).
Prediction predictDuSwap1g(const Field& field, Elem gamma);

/// c-differential uniformity of Inv o (1,gamma) for c outside {0, 1}.
Prediction predictCduSwap1g(const Field& field, Elem gamma, Elem c);

/// True iff cD_aF(x) = b has exactly two solutions outside P_a, decided by
/// the discriminant and the non-vanishing conditions. Requires a != 0.
bool outsidePaPredicate(const Field& field, const Family& family, Elem c, Elem a, Elem b);

/// For Inv o (1,gamma), c outside {0, 1}: the unique (a, b) with four
/// solutions inside a six-point P_a, when it exists.
std::optional<std::pair<Elem, Elem>> paFourcaseSwap1g(const Field& field, Elem gamma, Elem c);

/// For Inv o (1,gamma) at c = 1: every (a, b) with a six-point P_a and four
/// solutions inside it. Nonempty only for gamma = -1. Sorted by (a, b).
std::vector<std::pair<Elem, Elem>> duFourcaseSwap1g(const Field& field, Elem gamma);

}  // namespace cdiff
