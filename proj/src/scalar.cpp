#include "crossmod/scalar.hpp"

#include <ostream>
#include <sstream>

namespace crossmod {

namespace {

bool is_prime_number(std::uint32_t p) {
  if (p < 2) return false;
  for (std::uint32_t d = 2; static_cast<std::uint64_t>(d) * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

mpq_class parse_rational(std::string_view text) {
  std::string t(trim(text));
  if (t.empty()) throw Error("empty scalar literal");
  if (t.front() == '+') t.erase(0, 1);
  auto valid = [](const std::string& part) {
    if (part.empty()) return false;
    std::size_t i = part[0] == '-' ? 1 : 0;
    if (i == part.size()) return false;
    for (; i < part.size(); ++i)
      if (part[i] < '0' || part[i] > '9') return false;
    return true;
  };
  auto slash = t.find('/');
  std::string num = t.substr(0, slash);
  std::string den = slash == std::string::npos ? "1" : t.substr(slash + 1);
  if (!valid(num) || !valid(den) || den[0] == '-')
    throw Error("malformed scalar literal '" + t + "'");
  mpz_class n(num, 10), d(den, 10);
  if (d == 0) throw Error("zero denominator in '" + t + "'");
  mpq_class q(n, d);
  q.canonicalize();
  return q;
}

}  // namespace

Field Field::prime(std::uint32_t p) {
  if (!is_prime_number(p)) throw Error("field modulus " + std::to_string(p) + " is not prime");
  return Field{p};
}

std::string Field::name() const { return modulus == 0 ? "Q" : "F" + std::to_string(modulus); }

Field Field::parse(std::string_view tag) {
  tag = trim(tag);
  if (tag == "Q" || tag.empty()) return rationals();
  if (tag.size() > 1 && tag[0] == 'F') {
    std::string digits(tag.substr(1));
    for (char c : digits)
      if (c < '0' || c > '9') throw Error("bad field tag '" + std::string(tag) + "'");
    return prime(static_cast<std::uint32_t>(std::stoul(digits)));
  }
  throw Error("bad field tag '" + std::string(tag) + "'");
}

Scalar::Scalar(mpq_class q) : q_(std::move(q)) { q_.canonicalize(); }

Scalar::Scalar(long num, long den) {
  if (den == 0) throw Error("zero denominator");
  q_ = mpq_class(num, den);
  q_.canonicalize();
}

Scalar Scalar::residue(long v, std::uint32_t p) {
  Scalar s(v);
  s.reduce_to(Field::prime(p).modulus);
  return s;
}

Scalar Scalar::in(Field f, long v) {
  Scalar s(v);
  if (f.is_prime()) s.reduce_to(f.modulus);
  return s;
}

Scalar Scalar::parse(std::string_view text) {
  text = trim(text);
  auto pos = text.find(" mod ");
  if (pos == std::string_view::npos) return Scalar(parse_rational(text));
  Field f = Field::parse("F" + std::string(trim(text.substr(pos + 5))));
  Scalar s(parse_rational(text.substr(0, pos)));
  s.reduce_to(f.modulus);
  return s;
}

Scalar Scalar::parse(std::string_view text, Field f) {
  Scalar s = parse(text);
  if (f.is_prime()) s.reduce_to(f.modulus);
  else if (s.p_ != 0) throw Error("residue literal in a rational context");
  return s;
}

unsigned long Scalar::residue_value() const {
  if (p_ == 0) throw Error("residue_value on a rational scalar");
  return q_.get_num().get_ui();
}

std::uint32_t Scalar::common_modulus(std::uint32_t a, std::uint32_t b) {
  if (a == b || b == 0) return a;
  if (a == 0) return b;
  throw Error("mixing scalars from F" + std::to_string(a) + " and F" + std::to_string(b));
}

void Scalar::reduce_to(std::uint32_t p) {
  if (p == p_) return;
  if (p_ != 0) throw Error("cannot move a residue between prime fields");
  mpz_class m(p);
  mpz_class num = q_.get_num() % m;
  if (num < 0) num += m;
  mpz_class den = q_.get_den() % m;
  if (den == 0) throw Error("denominator vanishes in F" + std::to_string(p));
  mpz_class inv;
  mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), m.get_mpz_t());
  q_ = mpq_class(mpz_class((num * inv) % m));
  p_ = p;
}

Scalar Scalar::operator-() const {
  Scalar r = *this;
  if (p_ == 0) {
    r.q_ = -q_;
  } else if (!is_zero()) {
    r.q_ = mpq_class(mpz_class(p_) - q_.get_num());
  }
  return r;
}

Scalar& Scalar::operator+=(const Scalar& o) {
  std::uint32_t p = common_modulus(p_, o.p_);
  if (p == 0) {
    q_ += o.q_;
    return *this;
  }
  reduce_to(p);
  Scalar b = o;
  b.reduce_to(p);
  mpz_class s = q_.get_num() + b.q_.get_num();
  if (s >= p) s -= p;
  q_ = mpq_class(s);
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) { return *this += -o; }

Scalar& Scalar::operator*=(const Scalar& o) {
  std::uint32_t p = common_modulus(p_, o.p_);
  if (p == 0) {
    q_ *= o.q_;
    return *this;
  }
  reduce_to(p);
  Scalar b = o;
  b.reduce_to(p);
  q_ = mpq_class(mpz_class((q_.get_num() * b.q_.get_num()) % p));
  return *this;
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw Error("division by zero");
  Scalar r = *this;
  if (p_ == 0) {
    r.q_ = 1 / q_;
    r.q_.canonicalize();
  } else {
    mpz_class inv, m(p_);
    mpz_invert(inv.get_mpz_t(), q_.get_num_mpz_t(), m.get_mpz_t());
    r.q_ = mpq_class(inv);
  }
  return r;
}

Scalar& Scalar::operator/=(const Scalar& o) {
  std::uint32_t p = common_modulus(p_, o.p_);
  Scalar b = o;
  if (p != 0) b.reduce_to(p);
  return *this *= b.inverse();
}

bool operator==(const Scalar& a, const Scalar& b) {
  std::uint32_t p = Scalar::common_modulus(a.p_, b.p_);
  if (p == 0) return a.q_ == b.q_;
  Scalar x = a, y = b;
  x.reduce_to(p);
  y.reduce_to(p);
  return x.q_ == y.q_;
}

std::strong_ordering operator<=>(const Scalar& a, const Scalar& b) {
  std::uint32_t p = Scalar::common_modulus(a.p_, b.p_);
  Scalar x = a, y = b;
  if (p != 0) {
    x.reduce_to(p);
    y.reduce_to(p);
  }
  int c = cmp(x.q_, y.q_);
  return c < 0 ? std::strong_ordering::less
               : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
}

std::string Scalar::str() const {
  std::string s = q_.get_str();
  if (p_ != 0) s += " mod " + std::to_string(p_);
  return s;
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.str(); }

Vec zero_vec(std::size_t n) { return Vec(n); }

Vec unit_vec(std::size_t n, std::size_t i) {
  Vec v(n);
  v.at(i) = 1;
  return v;
}

Vec operator+(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) throw DimensionError("vector sizes differ");
  Vec r(a);
  for (std::size_t i = 0; i < r.size(); ++i) r[i] += b[i];
  return r;
}

Vec operator-(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) throw DimensionError("vector sizes differ");
  Vec r(a);
  for (std::size_t i = 0; i < r.size(); ++i) r[i] -= b[i];
  return r;
}

Vec operator-(const Vec& a) {
  Vec r(a);
  for (auto& x : r) x = -x;
  return r;
}

Vec operator*(const Scalar& s, const Vec& v) {
  Vec r(v);
  for (auto& x : r) x *= s;
  return r;
}

Scalar dot(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) throw DimensionError("vector sizes differ");
  Scalar s;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (!a[i].is_zero() && !b[i].is_zero()) s += a[i] * b[i];
  return s;
}

bool is_zero(const Vec& v) {
  for (const auto& x : v)
    if (!x.is_zero()) return false;
  return true;
}

std::string to_string(const Vec& v) {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? ", " : "") << v[i].rational().get_str();
  os << ']';
  return os.str();
}

std::vector<Vec> all_vectors(Field f, std::size_t n) {
  if (!f.is_prime()) throw Error("vector enumeration requires a prime field");
  std::vector<Vec> out;
  std::vector<long> digits(n, 0);
  while (true) {
    Vec v(n);
    for (std::size_t i = 0; i < n; ++i) v[i] = Scalar::in(f, digits[i]);
    out.push_back(std::move(v));
    std::size_t k = n;
    while (k > 0) {
      --k;
      if (++digits[k] < static_cast<long>(f.modulus)) break;
      digits[k] = 0;
      if (k == 0) return out;
    }
    if (n == 0) return out;
  }
}

}  // namespace crossmod
