#pragma once

// Materialized functions F_q -> F_q.

#include <iosfwd>
#include <string>
#include <vector>

#include "cdiff/field.hpp"

namespace cdiff {

class FuncTable {
 public:
  /// Throws std::invalid_argument unless images has exactly q valid entries.
  FuncTable(FieldPtr field, std::vector<Elem> images);

  const Field& field() const { return *field_; }
  const FieldPtr& fieldPtr() const { return field_; }
  const std::vector<Elem>& images() const { return images_; }
  Elem operator()(Elem x) const { return images_[x.index()]; }
  bool isPermutation() const { return isPerm_; }

  friend bool operator==(const FuncTable& a, const FuncTable& b) {
    return a.field_->p() == b.field_->p() && a.field_->n() == b.field_->n() && a.images_ == b.images_;
  }

 private:
  FieldPtr field_;
  std::vector<Elem> images_;
  bool isPerm_ = false;
};

enum class Side { Pre, Post };

FuncTable inverseTable(const FieldPtr& field);

/// Inv composed with the transposition (alpha beta). Throws when alpha = beta.
FuncTable swappedInverse(const FieldPtr& field, Elem alpha, Elem beta);
/// Inv o (0,1).
FuncTable swap01(const FieldPtr& field);
/// Inv o (1,gamma); throws for gamma in {0, 1}.
FuncTable swap1g(const FieldPtr& field, Elem gamma);

/// Post: x -> a1*F(x) + a0. Pre: x -> F(a1*x + a0). Throws when a1 = 0.
FuncTable affineCompose(const FuncTable& f, Elem a1, Elem a0, Side side);

// Text format:
//   line 1: "p n"
//   line 2: modulus coefficients, constant term first
//   line 3: the q image indices
void writeTable(std::ostream& out, const FuncTable& f);
/// Throws std::runtime_error on malformed input or a modulus that differs
/// from the one makeField selects.
FuncTable readTable(std::istream& in, const FieldOptions& options = {});
void saveTable(const std::string& path, const FuncTable& f);
FuncTable loadTable(const std::string& path, const FieldOptions& options = {});

}  // namespace cdiff
