#pragma once

// Arithmetic in F_{p^n} for odd primes p.
//
// Elements are addressed by an integer index in [0, q). The base-p digits of
// the index are the coefficients of the polynomial representative, digit i
// being the coefficient of x^i, reduced modulo a fixed monic irreducible
// polynomial. Index 0 is zero and index 1 is one.

#include <compare>
#include <cstdint>
#include <memory>
#include <optional>
#include <ranges>
#include <span>
#include <stdexcept>
#include <vector>

namespace cdiff {

class Elem {
 public:
  constexpr Elem() = default;
  constexpr explicit Elem(std::uint32_t index) : index_(index) {}

  constexpr std::uint32_t index() const { return index_; }
  constexpr bool isZero() const { return index_ == 0; }

  constexpr auto operator<=>(const Elem&) const = default;

 private:
  std::uint32_t index_ = 0;
};

struct FieldOptions {
  // Largest admissible field order.
  std::uint64_t orderCap = 1u << 16;
  // Addition, multiplication and character tables are materialized when
  // q <= tableThreshold. Values above 65536 are clamped.
  std::uint32_t tableThreshold = 4096;
};

class Field;
using FieldPtr = std::shared_ptr<const Field>;

bool isPrime(std::uint64_t v);

/// Builds F_{p^n} with the lexicographically smallest monic irreducible
/// modulus of degree n (lower coefficients read as a base-p integer,
/// constant term least significant). For n = 1 the modulus is x.
///
/// Throws std::invalid_argument for a non-prime or even p, n < 1, or an
/// order above the cap.
FieldPtr makeField(std::uint32_t p, std::uint32_t n, const FieldOptions& options = {});

class Field {
 public:
  std::uint32_t p() const { return p_; }
  std::uint32_t n() const { return n_; }
  std::uint32_t q() const { return q_; }
  /// Coefficients of the modulus, constant term first, length n + 1.
  const std::vector<std::uint32_t>& modulus() const { return modulus_; }
  std::uint32_t chiExp() const { return (q_ - 1) / 2; }
  bool hasTables() const { return !addTable_.empty(); }

  Elem zero() const { return Elem{0}; }
  Elem one() const { return Elem{1}; }

  bool contains(Elem x) const { return x.index() < q_; }
  /// The prime-subfield image of an integer.
  Elem fromInt(std::int64_t v) const;
  std::vector<std::uint32_t> digits(Elem x) const;
  Elem fromDigits(std::span<const std::uint32_t> digits) const;

  Elem add(Elem x, Elem y) const {
    if (!addTable_.empty()) return Elem{addTable_[x.index() * q_ + y.index()]};
    return addSlow(x, y);
  }
  Elem neg(Elem x) const {
    if (!negTable_.empty()) return Elem{negTable_[x.index()]};
    return negSlow(x);
  }
  Elem sub(Elem x, Elem y) const { return add(x, neg(y)); }
  Elem mul(Elem x, Elem y) const {
    if (!mulTable_.empty()) return Elem{mulTable_[x.index() * q_ + y.index()]};
    return mulSlow(x, y);
  }
  Elem pow(Elem x, std::uint64_t e) const;

  /// x^(q-2): the inverse for x != 0 and 0 for x = 0.
  Elem inv0(Elem x) const;
  /// x * y^-1; throws std::domain_error when y = 0.
  Elem div(Elem x, Elem y) const;

  /// Quadratic character: 0 for zero, +1 for nonzero squares, -1 otherwise.
  int chi(Elem x) const;
  /// The root with the smaller index, or nullopt for a nonsquare.
  std::optional<Elem> sqrt(Elem x) const;
  /// Number of roots of a2*x^2 + a1*x + a0; throws when a2 = 0.
  int quadRootCount(Elem a2, Elem a1, Elem a0) const;

  auto elements() const {
    return std::views::iota(std::uint32_t{0}, q_) |
           std::views::transform([](std::uint32_t i) { return Elem{i}; });
  }

  /// Row x of the addition table (x + y at position y); empty without tables.
  std::span<const std::uint16_t> addRow(Elem x) const {
    if (addTable_.empty()) return {};
    return {addTable_.data() + static_cast<std::size_t>(x.index()) * q_, q_};
  }

 private:
  Field() = default;
  friend FieldPtr makeField(std::uint32_t, std::uint32_t, const FieldOptions&);

  Elem addSlow(Elem x, Elem y) const;
  Elem negSlow(Elem x) const;
  Elem mulSlow(Elem x, Elem y) const;
  Elem powSlow(Elem x, std::uint64_t e) const;
  int chiByPow(Elem x) const;
  void buildTables();

  std::uint32_t p_ = 0;
  std::uint32_t n_ = 0;
  std::uint32_t q_ = 0;
  std::vector<std::uint32_t> modulus_;
  std::vector<std::uint32_t> placeValue_;  // p^i

  std::vector<std::uint16_t> addTable_;
  std::vector<std::uint16_t> mulTable_;
  std::vector<std::uint16_t> negTable_;
  std::vector<std::int8_t> chiTable_;
  std::uint32_t nonresidue_ = 0;  // smallest index with chi = -1
};

}  // namespace cdiff
