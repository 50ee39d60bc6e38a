#include "cdiff/func_table.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <utility>

namespace cdiff {

FuncTable::FuncTable(FieldPtr field, std::vector<Elem> images)
    : field_(std::move(field)), images_(std::move(images)) {
  if (!field_) throw std::invalid_argument("function table needs a field");
  if (images_.size() != field_->q()) {
    throw std::invalid_argument("function table has " + std::to_string(images_.size()) + " entries, expected " +
                                std::to_string(field_->q()));
  }
  std::vector<bool> seen(field_->q(), false);
  isPerm_ = true;
  for (const Elem y : images_) {
    if (!field_->contains(y)) throw std::invalid_argument("function image out of range");
    if (seen[y.index()]) isPerm_ = false;
    seen[y.index()] = true;
  }
}

FuncTable inverseTable(const FieldPtr& field) {
  std::vector<Elem> images;
  images.reserve(field->q());
  for (const Elem x : field->elements()) images.push_back(field->inv0(x));
  return FuncTable(field, std::move(images));
}

FuncTable swappedInverse(const FieldPtr& field, Elem alpha, Elem beta) {
  if (alpha == beta) throw std::invalid_argument("swapped inverse needs two distinct points");
  if (!field->contains(alpha) || !field->contains(beta)) throw std::invalid_argument("swap point out of range");
  std::vector<Elem> images;
  images.reserve(field->q());
  for (const Elem x : field->elements()) {
    Elem arg = x;
    if (x == alpha) {
      arg = beta;
    } else if (x == beta) {
      arg = alpha;
    }
    images.push_back(field->inv0(arg));
  }
  return FuncTable(field, std::move(images));
}

FuncTable swap01(const FieldPtr& field) { return swappedInverse(field, field->zero(), field->one()); }

FuncTable swap1g(const FieldPtr& field, Elem gamma) {
  if (gamma == field->zero() || gamma == field->one()) {
    throw std::invalid_argument("gamma must lie outside {0, 1}");
  }
  return swappedInverse(field, field->one(), gamma);
}

FuncTable affineCompose(const FuncTable& f, Elem a1, Elem a0, Side side) {
  const Field& k = f.field();
  if (a1.isZero()) throw std::invalid_argument("affine map of degree one needs a nonzero slope");
  std::vector<Elem> images;
  images.reserve(k.q());
  for (const Elem x : k.elements()) {
    if (side == Side::Post) {
      images.push_back(k.add(k.mul(a1, f(x)), a0));
    } else {
      images.push_back(f(k.add(k.mul(a1, x), a0)));
    }
  }
  return FuncTable(f.fieldPtr(), std::move(images));
}

void writeTable(std::ostream& out, const FuncTable& f) {
  const Field& k = f.field();
  out << k.p() << ' ' << k.n() << '\n';
  const auto& m = k.modulus();
  for (std::size_t i = 0; i < m.size(); ++i) out << (i ? " " : "") << m[i];
  out << '\n';
  const auto& img = f.images();
  for (std::size_t i = 0; i < img.size(); ++i) out << (i ? " " : "") << img[i].index();
  out << '\n';
}

FuncTable readTable(std::istream& in, const FieldOptions& options) {
  std::string line;
  auto nextLine = [&](const char* what) {
    if (!std::getline(in, line)) throw std::runtime_error(std::string("table file: missing ") + what + " line");
    return std::istringstream(line);
  };

  auto header = nextLine("header");
  std::uint32_t p = 0;
  std::uint32_t n = 0;
  if (!(header >> p >> n)) throw std::runtime_error("table file: header must be \"p n\"");
  FieldPtr field;
  try {
    field = makeField(p, n, options);
  } catch (const std::invalid_argument& e) {
    throw std::runtime_error(std::string("table file: ") + e.what());
  }

  auto modLine = nextLine("modulus");
  std::vector<std::uint32_t> modulus;
  for (std::uint32_t c; modLine >> c;) modulus.push_back(c);
  if (modulus != field->modulus()) throw std::runtime_error("table file: modulus differs from the canonical one");

  auto imgLine = nextLine("image");
  std::vector<Elem> images;
  images.reserve(field->q());
  for (long long v; imgLine >> v;) {
    if (v < 0 || v >= static_cast<long long>(field->q())) throw std::runtime_error("table file: image out of range");
    images.emplace_back(static_cast<std::uint32_t>(v));
  }
  if (!imgLine.eof()) throw std::runtime_error("table file: non-numeric image entry");
  if (images.size() != field->q()) throw std::runtime_error("table file: wrong number of images");
  return FuncTable(field, std::move(images));
}

void saveTable(const std::string& path, const FuncTable& f) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open " + path + " for writing");
  writeTable(out, f);
  if (!out) throw std::runtime_error("write to " + path + " failed");
}

FuncTable loadTable(const std::string& path, const FieldOptions& options) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  return readTable(in, options);
}

}  // namespace cdiff
