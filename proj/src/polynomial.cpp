#include "zeta/polynomial.hpp"

#include <sstream>

namespace zeta {

namespace {

Poly primitive_part(const Poly& f) {
  if (f.is_zero()) return f;
  Poly g = divide_exact(f, content(f));
  return g.leading() < 0 ? -g : g;
}

// lc(b)^(deg a - deg b + 1) * a mod b
Poly pseudo_remainder(Poly a, const Poly& b) {
  const long db = b.degree();
  const BigInt lb = b.leading();
  while (!a.is_zero() && a.degree() >= db) {
    Poly shifted = Poly::monomial(a.leading(), static_cast<std::size_t>(a.degree() - db)) * b;
    a = lb * a - shifted;
  }
  return a;
}

}  // namespace

BigInt content(const Poly& f) {
  BigInt g = 0;
  for (const auto& c : f.coefficients()) g = boost::multiprecision::gcd(g, c);
  return boost::multiprecision::abs(g);
}

Poly divide_exact(const Poly& f, const BigInt& d) {
  if (d == 0) throw InvariantError("divide_exact: division by zero");
  std::vector<BigInt> v = f.coefficients();
  for (auto& c : v) {
    if (c % d != 0) throw InvariantError("divide_exact: scalar does not divide polynomial");
    c /= d;
  }
  return Poly(std::move(v));
}

Poly divide_exact(const Poly& f, const Poly& g) {
  if (g.is_zero()) throw InvariantError("divide_exact: division by zero polynomial");
  if (f.is_zero()) return f;
  if (f.degree() < g.degree()) throw InvariantError("divide_exact: polynomial does not divide");
  Poly rem = f;
  const auto dg = static_cast<std::size_t>(g.degree());
  std::vector<BigInt> q(static_cast<std::size_t>(f.degree() - g.degree()) + 1, BigInt(0));
  while (!rem.is_zero() && rem.degree() >= g.degree()) {
    if (rem.leading() % g.leading() != 0) throw InvariantError("divide_exact: polynomial does not divide");
    const BigInt c = rem.leading() / g.leading();
    const auto shift = static_cast<std::size_t>(rem.degree()) - dg;
    q[shift] = c;
    rem = rem - Poly::monomial(c, shift) * g;
  }
  if (!rem.is_zero()) throw InvariantError("divide_exact: polynomial does not divide");
  return Poly(std::move(q));
}

Poly gcd(const Poly& a, const Poly& b) {
  Poly x = primitive_part(a);
  Poly y = primitive_part(b);
  if (x.degree() < y.degree()) std::swap(x, y);
  while (!y.is_zero()) {
    Poly r = primitive_part(pseudo_remainder(x, y));
    x = std::move(y);
    y = std::move(r);
  }
  return x;
}

std::string to_string(const Poly& f, const std::string& var) {
  if (f.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < f.size(); ++i) {
    BigInt c = f[i];
    if (c == 0) continue;
    const bool negative = c < 0;
    if (negative) c = -c;
    if (first) {
      if (negative) os << '-';
    } else {
      os << (negative ? " - " : " + ");
    }
    first = false;
    if (i == 0 || c != 1) os << c;
    if (i >= 1) os << var;
    if (i >= 2) os << '^' << i;
  }
  return os.str();
}

}  // namespace zeta
