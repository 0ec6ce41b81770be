#include "mrpath/exactalg.hpp"

#include <charconv>
#include <sstream>

namespace mrp {

FieldTag FieldTag::prime_field(std::uint32_t p) {
  if (!is_prime(p)) throw ArithmeticError("modulus " + std::to_string(p) + " is not prime");
  return {Kind::prime, p};
}

FieldTag FieldTag::poly_ring(std::uint32_t p) {
  if (!is_prime(p)) throw ArithmeticError("modulus " + std::to_string(p) + " is not prime");
  return {Kind::poly, p};
}

std::string FieldTag::str() const {
  switch (kind) {
    case Kind::prime: return "gfp " + std::to_string(p);
    case Kind::rational: return "rational";
    case Kind::poly: return "gfp " + std::to_string(p) + "[x]";
  }
  return "?";
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::uint32_t next_prime_above(std::uint64_t n) {
  std::uint64_t c = n + 1;
  while (!is_prime(c)) ++c;
  return static_cast<std::uint32_t>(c);
}

std::uint64_t inv_mod(std::uint64_t a, std::uint64_t p) {
  if (a % p == 0) throw ArithmeticError("division by zero");
  std::int64_t t = 0, nt = 1;
  std::int64_t r = static_cast<std::int64_t>(p), nr = static_cast<std::int64_t>(a % p);
  while (nr != 0) {
    std::int64_t q = r / nr;
    std::int64_t tmp = t - q * nt;
    t = nt;
    nt = tmp;
    tmp = r - q * nr;
    r = nr;
    nr = tmp;
  }
  if (t < 0) t += static_cast<std::int64_t>(p);
  return static_cast<std::uint64_t>(t);
}

namespace poly {

namespace {
void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}
}  // namespace

Poly add(const Poly& a, const Poly& b, std::uint32_t p) {
  Poly r(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < r.size(); ++i) {
    std::uint64_t s = (i < a.size() ? a[i] : 0u) + static_cast<std::uint64_t>(i < b.size() ? b[i] : 0u);
    r[i] = static_cast<std::uint32_t>(s % p);
  }
  trim(r);
  return r;
}

Poly sub(const Poly& a, const Poly& b, std::uint32_t p) {
  Poly r(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < r.size(); ++i) {
    std::uint64_t x = i < a.size() ? a[i] : 0u;
    std::uint64_t y = i < b.size() ? b[i] : 0u;
    r[i] = static_cast<std::uint32_t>((x + p - y) % p);
  }
  trim(r);
  return r;
}

Poly mul(const Poly& a, const Poly& b, std::uint32_t p) {
  if (a.empty() || b.empty()) return {};
  std::vector<std::uint64_t> acc(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j)
      acc[i + j] = (acc[i + j] + static_cast<std::uint64_t>(a[i]) * b[j]) % p;
  }
  Poly r(acc.size());
  for (std::size_t i = 0; i < acc.size(); ++i) r[i] = static_cast<std::uint32_t>(acc[i]);
  trim(r);
  return r;
}

Poly exact_div(const Poly& a, const Poly& b, std::uint32_t p) {
  if (b.empty()) throw ArithmeticError("division by zero polynomial");
  if (a.empty()) return {};
  if (a.size() < b.size()) throw ArithmeticError("inexact polynomial division");
  Poly rem = a;
  Poly q(a.size() - b.size() + 1, 0);
  std::uint64_t lead_inv = inv_mod(b.back(), p);
  for (std::size_t d = q.size(); d-- > 0;) {
    std::uint64_t c = rem[d + b.size() - 1] * lead_inv % p;
    q[d] = static_cast<std::uint32_t>(c);
    if (c == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) {
      std::uint64_t sub = c * b[j] % p;
      rem[d + j] = static_cast<std::uint32_t>((rem[d + j] + p - sub) % p);
    }
  }
  trim(rem);
  if (!rem.empty()) throw ArithmeticError("inexact polynomial division");
  trim(q);
  return q;
}

Poly monomial(std::uint64_t degree) {
  Poly r(degree + 1, 0);
  r[degree] = 1;
  return r;
}

std::string str(const Poly& a) {
  if (a.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = a.size(); i-- > 0;) {
    if (a[i] == 0) continue;
    if (!first) os << '+';
    first = false;
    if (i == 0 || a[i] != 1) os << a[i];
    if (i > 0) os << "x";
    if (i > 1) os << '^' << i;
  }
  return os.str();
}

}  // namespace poly

Scalar Scalar::zero(FieldTag f) { return from_int(f, 0); }

Scalar Scalar::from_int(FieldTag f, long long n) {
  Scalar s;
  s.f_ = f;
  switch (f.kind) {
    case FieldTag::Kind::prime: {
      long long m = n % static_cast<long long>(f.p);
      if (m < 0) m += f.p;
      s.v_ = static_cast<std::uint64_t>(m);
      break;
    }
    case FieldTag::Kind::rational:
      s.v_ = mpq_class(static_cast<long>(n));
      break;
    case FieldTag::Kind::poly: {
      long long m = n % static_cast<long long>(f.p);
      if (m < 0) m += f.p;
      Poly c;
      if (m != 0) c.push_back(static_cast<std::uint32_t>(m));
      s.v_ = std::move(c);
      break;
    }
  }
  return s;
}

Scalar Scalar::from_rational(const mpq_class& q) {
  Scalar s;
  mpq_class c = q;
  c.canonicalize();
  s.v_ = std::move(c);
  return s;
}

Scalar Scalar::from_poly(FieldTag f, Poly coeffs) {
  Scalar s;
  s.f_ = f;
  for (auto& c : coeffs) c %= f.p;
  while (!coeffs.empty() && coeffs.back() == 0) coeffs.pop_back();
  s.v_ = std::move(coeffs);
  return s;
}

namespace {

bool parse_integer(std::string_view t, mpz_class& out) {
  if (t.empty()) return false;
  std::size_t i = (t[0] == '-' || t[0] == '+') ? 1 : 0;
  if (i == t.size()) return false;
  for (std::size_t j = i; j < t.size(); ++j)
    if (t[j] < '0' || t[j] > '9') return false;
  std::string s(t[0] == '+' ? t.substr(1) : t);
  return out.set_str(s, 10) == 0;
}

}  // namespace

Scalar Scalar::parse(FieldTag f, std::string_view text) {
  switch (f.kind) {
    case FieldTag::Kind::prime: {
      mpz_class z;
      if (!parse_integer(text, z)) throw ArithmeticError("bad scalar '" + std::string(text) + "'");
      mpz_class m = z % f.p;
      if (m < 0) m += f.p;
      Scalar s;
      s.f_ = f;
      s.v_ = static_cast<std::uint64_t>(m.get_ui());
      return s;
    }
    case FieldTag::Kind::rational: {
      auto slash = text.find('/');
      mpz_class num, den = 1;
      if (!parse_integer(text.substr(0, slash), num))
        throw ArithmeticError("bad scalar '" + std::string(text) + "'");
      if (slash != std::string_view::npos) {
        if (!parse_integer(text.substr(slash + 1), den) || den == 0)
          throw ArithmeticError("bad scalar '" + std::string(text) + "'");
      }
      return from_rational(mpq_class(num, den));
    }
    case FieldTag::Kind::poly:
      break;
  }
  throw ArithmeticError("polynomial scalars have no text form");
}

bool Scalar::is_zero() const {
  switch (f_.kind) {
    case FieldTag::Kind::prime: return residue() == 0;
    case FieldTag::Kind::rational: return sgn(rational()) == 0;
    case FieldTag::Kind::poly: return poly().empty();
  }
  return false;
}

std::string Scalar::str() const {
  switch (f_.kind) {
    case FieldTag::Kind::prime: return std::to_string(residue());
    case FieldTag::Kind::rational: return rational().get_str();
    case FieldTag::Kind::poly: return poly::str(poly());
  }
  return "?";
}

namespace {
void same_field(const FieldTag& a, const FieldTag& b) {
  if (!(a == b)) throw ArithmeticError("field mismatch: " + a.str() + " vs " + b.str());
}
}  // namespace

Scalar Scalar::operator+(const Scalar& o) const {
  same_field(f_, o.f_);
  Scalar r;
  r.f_ = f_;
  switch (f_.kind) {
    case FieldTag::Kind::prime: r.v_ = (residue() + o.residue()) % f_.p; break;
    case FieldTag::Kind::rational: r.v_ = mpq_class(rational() + o.rational()); break;
    case FieldTag::Kind::poly: r.v_ = poly::add(poly(), o.poly(), f_.p); break;
  }
  return r;
}

Scalar Scalar::operator-(const Scalar& o) const {
  same_field(f_, o.f_);
  Scalar r;
  r.f_ = f_;
  switch (f_.kind) {
    case FieldTag::Kind::prime: r.v_ = (residue() + f_.p - o.residue()) % f_.p; break;
    case FieldTag::Kind::rational: r.v_ = mpq_class(rational() - o.rational()); break;
    case FieldTag::Kind::poly: r.v_ = poly::sub(poly(), o.poly(), f_.p); break;
  }
  return r;
}

Scalar Scalar::operator*(const Scalar& o) const {
  same_field(f_, o.f_);
  Scalar r;
  r.f_ = f_;
  switch (f_.kind) {
    case FieldTag::Kind::prime: r.v_ = residue() * o.residue() % f_.p; break;
    case FieldTag::Kind::rational: r.v_ = mpq_class(rational() * o.rational()); break;
    case FieldTag::Kind::poly: r.v_ = poly::mul(poly(), o.poly(), f_.p); break;
  }
  return r;
}

Scalar Scalar::operator/(const Scalar& o) const {
  same_field(f_, o.f_);
  if (o.is_zero()) throw ArithmeticError("division by zero");
  Scalar r;
  r.f_ = f_;
  switch (f_.kind) {
    case FieldTag::Kind::prime: r.v_ = residue() * inv_mod(o.residue(), f_.p) % f_.p; break;
    case FieldTag::Kind::rational: r.v_ = mpq_class(rational() / o.rational()); break;
    case FieldTag::Kind::poly: r.v_ = poly::exact_div(poly(), o.poly(), f_.p); break;
  }
  return r;
}

Scalar Scalar::operator-() const { return zero(f_) - *this; }

}  // namespace mrp
