#include "qorbit/polynomial.hpp"

namespace qorbit {

std::pair<Polynomial<Rational>, Polynomial<Rational>> divmod(const Polynomial<Rational>& a,
                                                             const Polynomial<Rational>& b) {
  if (b.is_zero()) throw ContractError("polynomial division by zero");
  std::vector<Rational> rem = a.coefficients();
  const int db = b.degree();
  if (a.degree() < db) return {Polynomial<Rational>(), a};
  std::vector<Rational> quot(static_cast<std::size_t>(a.degree() - db + 1), Rational(0));
  for (int i = a.degree(); i >= db; --i) {
    const Rational factor = rem[static_cast<std::size_t>(i)] / b.leading();
    quot[static_cast<std::size_t>(i - db)] = factor;
    if (factor == 0) continue;
    for (int j = 0; j <= db; ++j) rem[static_cast<std::size_t>(i - db + j)] -= factor * b[static_cast<std::size_t>(j)];
  }
  rem.resize(static_cast<std::size_t>(db));
  return {Polynomial<Rational>(std::move(quot)), Polynomial<Rational>(std::move(rem))};
}

Polynomial<Rational> gcd(Polynomial<Rational> a, Polynomial<Rational> b) {
  while (!b.is_zero()) {
    Polynomial<Rational> r = divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

}  // namespace qorbit
