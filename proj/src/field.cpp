#include "cdiff/field.hpp"

#include <algorithm>
#include <string>

#include "poly.hpp"

namespace cdiff {

namespace {

std::vector<std::uint64_t> primeFactors(std::uint64_t v) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d * d <= v; ++d) {
    if (v % d == 0) {
      out.push_back(d);
      while (v % d == 0) v /= d;
    }
  }
  if (v > 1) out.push_back(v);
  return out;
}

}  // namespace

bool isPrime(std::uint64_t v) {
  if (v < 2) return false;
  for (std::uint64_t d = 2; d * d <= v; ++d) {
    if (v % d == 0) return false;
  }
  return true;
}

FieldPtr makeField(std::uint32_t p, std::uint32_t n, const FieldOptions& options) {
  if (p % 2 == 0) throw std::invalid_argument("characteristic must be odd, got " + std::to_string(p));
  if (!isPrime(p)) throw std::invalid_argument(std::to_string(p) + " is not prime");
  if (n < 1) throw std::invalid_argument("extension degree must be at least 1");

  std::uint64_t q = 1;
  for (std::uint32_t i = 0; i < n; ++i) {
    q *= p;
    if (q > options.orderCap) {
      throw std::invalid_argument("field order " + std::to_string(p) + "^" + std::to_string(n) +
                                  " exceeds the order cap " + std::to_string(options.orderCap));
    }
  }

  std::shared_ptr<Field> f(new Field());
  f->p_ = p;
  f->n_ = n;
  f->q_ = static_cast<std::uint32_t>(q);
  f->placeValue_.resize(n);
  std::uint32_t pv = 1;
  for (std::uint32_t i = 0; i < n; ++i) {
    f->placeValue_[i] = pv;
    pv *= p;
  }

  if (n == 1) {
    f->modulus_ = {0, 1};
  } else {
    // Lower coefficients enumerated as a base-p counter, constant term least
    // significant.
    detail::Poly candidate(n + 1, 0);
    candidate[n] = 1;
    for (std::uint64_t m = 0; m < q; ++m) {
      std::uint64_t rest = m;
      for (std::uint32_t i = 0; i < n; ++i) {
        candidate[i] = static_cast<std::uint32_t>(rest % p);
        rest /= p;
      }
      if (detail::isIrreducible(candidate, p)) {
        f->modulus_ = candidate;
        break;
      }
    }
  }

  if (f->q_ <= std::min<std::uint32_t>(options.tableThreshold, 65536)) f->buildTables();

  for (std::uint32_t i = 1; i < f->q_; ++i) {
    if (f->chi(Elem{i}) == -1) {
      f->nonresidue_ = i;
      break;
    }
  }
  return f;
}

Elem Field::fromInt(std::int64_t v) const {
  const std::int64_t r = ((v % static_cast<std::int64_t>(p_)) + p_) % p_;
  return Elem{static_cast<std::uint32_t>(r)};
}

std::vector<std::uint32_t> Field::digits(Elem x) const {
  std::vector<std::uint32_t> d(n_);
  std::uint32_t rest = x.index();
  for (std::uint32_t i = 0; i < n_; ++i) {
    d[i] = rest % p_;
    rest /= p_;
  }
  return d;
}

Elem Field::fromDigits(std::span<const std::uint32_t> digits) const {
  std::uint32_t idx = 0;
  for (std::size_t i = 0; i < digits.size() && i < n_; ++i) idx += (digits[i] % p_) * placeValue_[i];
  return Elem{idx};
}

Elem Field::addSlow(Elem x, Elem y) const {
  std::uint32_t a = x.index();
  std::uint32_t b = y.index();
  std::uint32_t out = 0;
  for (std::uint32_t i = 0; i < n_; ++i) {
    std::uint32_t d = a % p_ + b % p_;
    if (d >= p_) d -= p_;
    out += d * placeValue_[i];
    a /= p_;
    b /= p_;
  }
  return Elem{out};
}

Elem Field::negSlow(Elem x) const {
  std::uint32_t a = x.index();
  std::uint32_t out = 0;
  for (std::uint32_t i = 0; i < n_; ++i) {
    const std::uint32_t d = a % p_;
    out += (d == 0 ? 0 : p_ - d) * placeValue_[i];
    a /= p_;
  }
  return Elem{out};
}

Elem Field::mulSlow(Elem x, Elem y) const {
  if (n_ == 1) {
    return Elem{static_cast<std::uint32_t>(static_cast<std::uint64_t>(x.index()) * y.index() % p_)};
  }
  const auto a = digits(x);
  const auto b = digits(y);
  std::vector<std::uint64_t> prod(2 * n_ - 1, 0);
  for (std::uint32_t i = 0; i < n_; ++i) {
    if (a[i] == 0) continue;
    for (std::uint32_t j = 0; j < n_; ++j) prod[i + j] = (prod[i + j] + std::uint64_t{a[i]} * b[j]) % p_;
  }
  for (std::uint32_t deg = 2 * n_ - 2; deg >= n_; --deg) {
    const std::uint64_t k = prod[deg];
    if (k != 0) {
      const std::uint32_t shift = deg - n_;
      for (std::uint32_t i = 0; i < n_; ++i) {
        prod[shift + i] = (prod[shift + i] + (p_ - k) * modulus_[i]) % p_;
      }
      prod[deg] = 0;
    }
  }
  std::uint32_t out = 0;
  for (std::uint32_t i = 0; i < n_; ++i) out += static_cast<std::uint32_t>(prod[i]) * placeValue_[i];
  return Elem{out};
}

Elem Field::powSlow(Elem x, std::uint64_t e) const {
  Elem result = one();
  Elem base = x;
  while (e != 0) {
    if (e & 1u) result = mulSlow(result, base);
    base = mulSlow(base, base);
    e >>= 1;
  }
  return result;
}

Elem Field::pow(Elem x, std::uint64_t e) const {
  Elem result = one();
  Elem base = x;
  while (e != 0) {
    if (e & 1u) result = mul(result, base);
    base = mul(base, base);
    e >>= 1;
  }
  return result;
}

Elem Field::inv0(Elem x) const { return pow(x, q_ - 2); }

Elem Field::div(Elem x, Elem y) const {
  if (y.isZero()) throw std::domain_error("division by zero in F_q");
  return mul(x, inv0(y));
}

int Field::chiByPow(Elem x) const {
  const Elem r = pow(x, chiExp());
  if (r.isZero()) return 0;
  return r == one() ? 1 : -1;
}

int Field::chi(Elem x) const {
  if (!chiTable_.empty()) return chiTable_[x.index()];
  return chiByPow(x);
}

std::optional<Elem> Field::sqrt(Elem x) const {
  if (x.isZero()) return zero();
  if (chi(x) != 1) return std::nullopt;

  Elem r;
  if (q_ % 4 == 3) {
    r = pow(x, (std::uint64_t{q_} + 1) / 4);
  } else {
    // Tonelli-Shanks with q - 1 = 2^s * t.
    std::uint64_t t = q_ - 1;
    std::uint32_t s = 0;
    while (t % 2 == 0) {
      t /= 2;
      ++s;
    }
    Elem c = pow(Elem{nonresidue_}, t);
    Elem u = pow(x, t);
    r = pow(x, (t + 1) / 2);
    std::uint32_t m = s;
    while (u != one()) {
      std::uint32_t i = 0;
      Elem probe = u;
      while (probe != one()) {
        probe = mul(probe, probe);
        ++i;
      }
      Elem b = c;
      for (std::uint32_t k = 0; k + i + 1 < m; ++k) b = mul(b, b);
      m = i;
      c = mul(b, b);
      u = mul(u, c);
      r = mul(r, b);
    }
  }
  const Elem other = neg(r);
  return std::min(r, other);
}

int Field::quadRootCount(Elem a2, Elem a1, Elem a0) const {
  if (a2.isZero()) throw std::invalid_argument("leading coefficient of a quadratic must be nonzero");
  const Elem disc = sub(mul(a1, a1), mul(fromInt(4), mul(a0, a2)));
  return chi(disc) + 1;
}

void Field::buildTables() {
  const std::size_t q = q_;
  addTable_.resize(q * q);
  negTable_.resize(q);
  for (std::uint32_t x = 0; x < q_; ++x) {
    negTable_[x] = static_cast<std::uint16_t>(negSlow(Elem{x}).index());
    for (std::uint32_t y = 0; y < q_; ++y) {
      addTable_[x * q + y] = static_cast<std::uint16_t>(addSlow(Elem{x}, Elem{y}).index());
    }
  }

  // Multiplication through discrete logarithms to a primitive element.
  const auto factors = primeFactors(q_ - 1);
  std::uint32_t generator = 0;
  for (std::uint32_t g = 1; g < q_ && generator == 0; ++g) {
    bool primitive = true;
    for (const auto r : factors) {
      if (powSlow(Elem{g}, (q_ - 1) / r) == one()) {
        primitive = false;
        break;
      }
    }
    if (primitive) generator = g;
  }
  std::vector<std::uint32_t> expTable(q_ - 1);
  std::vector<std::uint32_t> logTable(q_, 0);
  Elem acc = one();
  for (std::uint32_t k = 0; k + 1 < q_; ++k) {
    expTable[k] = acc.index();
    logTable[acc.index()] = k;
    acc = mulSlow(acc, Elem{generator});
  }

  mulTable_.assign(q * q, 0);
  chiTable_.assign(q, 0);
  for (std::uint32_t x = 1; x < q_; ++x) {
    chiTable_[x] = (logTable[x] % 2 == 0) ? 1 : -1;
    for (std::uint32_t y = 1; y < q_; ++y) {
      mulTable_[x * q + y] = static_cast<std::uint16_t>(expTable[(logTable[x] + logTable[y]) % (q_ - 1)]);
    }
  }
}

}  // namespace cdiff
