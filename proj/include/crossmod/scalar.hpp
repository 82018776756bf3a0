#pragma once
// Exact field elements: arbitrary-precision rationals or residues modulo a prime.

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace crossmod {

/// Base class for all library errors; the CLI maps these to exit code 2.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DimensionError : public Error {
 public:
  using Error::Error;
};

class PreconditionError : public Error {
 public:
  using Error::Error;
};

class GuardError : public Error {
 public:
  using Error::Error;
};

/// Field tag: modulus 0 is the rationals, otherwise a prime.
struct Field {
  std::uint32_t modulus = 0;

  static Field rationals() { return {}; }
  static Field prime(std::uint32_t p);

  bool is_prime() const { return modulus != 0; }
  std::string name() const;
  static Field parse(std::string_view tag);

  friend bool operator==(Field, Field) = default;
};

/// An exact scalar. Integers and rationals created without a modulus are
/// field-agnostic: combining them with a residue maps them into F_p.
class Scalar {
 public:
  Scalar() = default;
  Scalar(int v) : q_(v) {}
  Scalar(long v) : q_(v) {}
  explicit Scalar(mpq_class q);
  Scalar(long num, long den);

  static Scalar residue(long v, std::uint32_t p);
  static Scalar in(Field f, long v);
  /// Accepts "p/q", "k", or "k mod p".
  static Scalar parse(std::string_view text);
  static Scalar parse(std::string_view text, Field f);

  std::uint32_t modulus() const { return p_; }
  Field field() const { return Field{p_}; }
  bool is_zero() const { return sgn(q_) == 0; }
  bool is_one() const { return q_ == 1; }
  const mpq_class& rational() const { return q_; }
  /// Residue in [0, p) for prime-field scalars.
  unsigned long residue_value() const;

  Scalar operator-() const;
  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o);
  Scalar inverse() const;

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }

  friend bool operator==(const Scalar& a, const Scalar& b);
  /// Total order used for canonical output: rationals by value, residues by representative.
  friend std::strong_ordering operator<=>(const Scalar& a, const Scalar& b);

  /// "p/q", "k", or "k mod p".
  std::string str() const;

 private:
  static std::uint32_t common_modulus(std::uint32_t a, std::uint32_t b);
  void reduce_to(std::uint32_t p);

  mpq_class q_{0};
  std::uint32_t p_ = 0;
};

std::ostream& operator<<(std::ostream& os, const Scalar& s);

using Vec = std::vector<Scalar>;

Vec zero_vec(std::size_t n);
Vec unit_vec(std::size_t n, std::size_t i);
Vec operator+(const Vec& a, const Vec& b);
Vec operator-(const Vec& a, const Vec& b);
Vec operator-(const Vec& a);
Vec operator*(const Scalar& s, const Vec& v);
Scalar dot(const Vec& a, const Vec& b);
bool is_zero(const Vec& v);
std::string to_string(const Vec& v);

/// All vectors of F_p^n in lexicographic order of residues.
std::vector<Vec> all_vectors(Field f, std::size_t n);

}  // namespace crossmod
