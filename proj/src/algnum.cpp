#include "coxgrowth/algnum.hpp"

#include <bit>
#include <cmath>
#include <sstream>

#include "coxgrowth/errors.hpp"

namespace coxgrowth {

namespace {

constexpr std::array<int, 3> kPrimes{2, 3, 5};
constexpr std::array<int, AlgNum::kDim> kRadicand{1, 2, 3, 6, 5, 10, 15, 30};
// Slot of each basis element in the public order {1, r2, r3, r5, r6, r10, r15, r30}.
constexpr std::array<int, AlgNum::kDim> kPublicToSlot{0, 1, 2, 4, 3, 5, 6, 7};

int prime_product(int mask) {
  int p = 1;
  for (int b = 0; b < 3; ++b)
    if (mask & (1 << b)) p *= kPrimes[b];
  return p;
}

}  // namespace

int AlgNum::radicand(int slot) { return kRadicand.at(slot); }

AlgNum AlgNum::sqrt(int d) {
  for (int k = 0; k < kDim; ++k)
    if (kRadicand[k] == d) {
      AlgNum r;
      r.c_[k] = 1;
      return r;
    }
  throw InvalidArgument("sqrt(" + std::to_string(d) + ") is not a basis element");
}

const mpq_class& AlgNum::coordinate(int basis_index) const { return c_.at(kPublicToSlot.at(basis_index)); }

bool AlgNum::is_zero() const {
  for (const auto& x : c_)
    if (sgn(x) != 0) return false;
  return true;
}

bool AlgNum::is_rational() const {
  for (int k = 1; k < kDim; ++k)
    if (sgn(c_[k]) != 0) return false;
  return true;
}

AlgNum& AlgNum::operator+=(const AlgNum& o) {
  for (int k = 0; k < kDim; ++k)
    if (sgn(o.c_[k]) != 0) c_[k] += o.c_[k];
  return *this;
}

AlgNum& AlgNum::operator-=(const AlgNum& o) {
  for (int k = 0; k < kDim; ++k)
    if (sgn(o.c_[k]) != 0) c_[k] -= o.c_[k];
  return *this;
}

AlgNum AlgNum::operator-() const {
  AlgNum r = *this;
  for (auto& x : r.c_) x = -x;
  return r;
}

AlgNum operator*(const AlgNum& a, const AlgNum& b) {
  AlgNum r;
  mpq_class t;
  for (int i = 0; i < AlgNum::kDim; ++i) {
    if (sgn(a.c_[i]) == 0) continue;
    for (int j = 0; j < AlgNum::kDim; ++j) {
      if (sgn(b.c_[j]) == 0) continue;
      // sqrt(d_i) sqrt(d_j) = p * sqrt(d_{i xor j}) with p the shared primes.
      t = a.c_[i] * b.c_[j];
      if (int shared = i & j; shared != 0) t *= prime_product(shared);
      r.c_[i ^ j] += t;
    }
  }
  return r;
}

AlgNum AlgNum::conjugate(int prime_bit) const {
  AlgNum r = *this;
  for (int k = 0; k < kDim; ++k)
    if (k & (1 << prime_bit)) r.c_[k] = -r.c_[k];
  return r;
}

AlgNum AlgNum::inverse() const {
  if (is_zero()) throw DomainError("inverse of zero in Q(sqrt2,sqrt3,sqrt5)");
  // Multiply by conjugates until the product is rational.
  AlgNum x = *this;
  AlgNum acc(1);
  for (int b = 2; b >= 0; --b) {
    AlgNum c = x.conjugate(b);
    x = x * c;
    acc = acc * c;
  }
  mpq_class inv = 1 / x.c_[0];
  for (auto& v : acc.c_) v *= inv;
  return acc;
}

int AlgNum::sign() const {
  if (is_zero()) return 0;
  if (is_rational()) return sgn(c_[0]);
  // Scale to integer coordinates a_k, then bracket sum a_k sqrt(d_k) using
  // floor(sqrt(d 4^bits)) / 2^bits <= sqrt(d) < (floor + 1) / 2^bits.
  mpz_class den = 1;
  for (const auto& x : c_) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), x.get_den().get_mpz_t());
  std::array<mpz_class, kDim> a;
  for (int k = 0; k < kDim; ++k) a[k] = c_[k].get_num() * (den / c_[k].get_den());
  for (unsigned long bits = 64;; bits *= 2) {
    mpz_class lo = 0, hi = 0, s;
    const mpz_class one_scaled = mpz_class(1) << bits;
    for (int k = 0; k < kDim; ++k) {
      if (sgn(a[k]) == 0) continue;
      if (k == 0) {
        lo += a[k] * one_scaled;
        hi += a[k] * one_scaled;
        continue;
      }
      mpz_class radicand_scaled = mpz_class(kRadicand[k]) << (2 * bits);
      mpz_sqrt(s.get_mpz_t(), radicand_scaled.get_mpz_t());
      if (sgn(a[k]) > 0) {
        lo += a[k] * s;
        hi += a[k] * (s + 1);
      } else {
        lo += a[k] * (s + 1);
        hi += a[k] * s;
      }
    }
    if (sgn(lo) > 0) return 1;
    if (sgn(hi) < 0) return -1;
  }
}

double AlgNum::approx() const {
  double v = 0;
  for (int k = 0; k < kDim; ++k) v += c_[k].get_d() * std::sqrt(static_cast<double>(kRadicand[k]));
  return v;
}

void AlgNum::append_key(std::string& out) const {
  for (int k = 0; k < kDim; ++k) {
    if (sgn(c_[k]) == 0) continue;
    out.push_back(static_cast<char>('a' + k));
    out += c_[k].get_str(62);
  }
  out.push_back(';');
}

std::string AlgNum::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int p = 0; p < kDim; ++p) {
    const int k = kPublicToSlot[p];
    if (sgn(c_[k]) == 0) continue;
    if (!first) os << " + ";
    first = false;
    os << c_[k].get_str();
    if (k != 0) os << "*sqrt" << kRadicand[k];
  }
  return os.str();
}

AlgNum minus_cos_pi_over(Weight m) {
  if (m.is_infinite()) return AlgNum(-1);
  switch (m.value()) {
    case 2: return AlgNum(0);
    case 3: return AlgNum(mpq_class(-1, 2));
    case 4: return AlgNum(mpq_class(-1, 2)) * AlgNum::sqrt(2);
    case 5: return AlgNum(mpq_class(-1, 4)) + AlgNum(mpq_class(-1, 4)) * AlgNum::sqrt(5);
    case 6: return AlgNum(mpq_class(-1, 2)) * AlgNum::sqrt(3);
    default: break;
  }
  throw UnsupportedWeight("weight " + m.to_string() + " has no representation in Q(sqrt2,sqrt3,sqrt5)");
}

}  // namespace coxgrowth
