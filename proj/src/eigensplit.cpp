#include "spinstat/eigensplit.hpp"

#include "spinstat/linalg.hpp"

#include <algorithm>
#include <cmath>

namespace spinstat {

std::string to_string(PairForm f) { return f == PairForm::Imaginary ? "imaginary" : "real"; }

namespace {

// Rational r with r*r <= t, close to sqrt(t).
Rational sqrt_below(const Rational& t) {
  if (t <= 0) return 0;
  Rational r(std::sqrt(t.convert_to<double>()));
  const Rational shrink = 1 - Rational(Integer(1), Integer(1) << 40);
  while (r * r > t) r *= shrink;
  return r;
}

Rational sqrt_above(const Rational& t) {
  if (t <= 0) return 0;
  Rational r(std::sqrt(t.convert_to<double>()));
  const Rational grow = 1 + Rational(Integer(1), Integer(1) << 40);
  while (r * r < t) r *= grow;
  return r;
}

}  // namespace

EigenSplit antisym_eigensplit(const ExactMatrix& m) {
  if (!m.is_square()) throw DimensionError("eigensplit needs a square matrix");
  if (!(m.transpose() == -m)) throw PreconditionError("matrix is not antisymmetric");
  EigenSplit out;
  ExactMatrix a = m;
  if (m.is_real()) {
    out.form = PairForm::Imaginary;
  } else if (m.is_imaginary()) {
    out.form = PairForm::Real;
    a = m * Scalar(Rational(0), Rational(-1));
  } else {
    throw PreconditionError("antisymmetric matrix must be real or purely imaginary");
  }
  const std::size_t n = a.rows();
  out.characteristic = Polynomial::from_scalars(characteristic_polynomial(a));

  // det(xI - A) = x^(n mod 2) P(x^2); roots t = mu^2 of Q(t) = P(-t).
  std::vector<Rational> q;
  for (std::size_t k = n % 2; k <= n; k += 2) {
    const std::size_t power = k / 2;
    Rational c = out.characteristic.coeff(k);
    if (power % 2 == 1) c = -c;
    q.push_back(c);
  }
  std::size_t zero_t = 0;
  while (zero_t < q.size() && q[zero_t] == 0) ++zero_t;
  q.erase(q.begin(), q.begin() + static_cast<std::ptrdiff_t>(zero_t));
  const Polynomial qt(std::move(q));

  std::size_t pair_count = 0;
  for (const auto& [factor, mult] : square_free_factors(qt)) {
    for (const RealRoot& root : real_roots(factor)) {
      EigenMagnitude e;
      e.multiplicity = mult;
      e.minimal = factor;
      if (root.exact) {
        e.mu_sq = root.value;
        Rational s;
        if (rational_sqrt(root.value, s)) {
          e.exact = true;
          e.mu = s;
          e.lo = s;
          e.hi = s;
        }
      }
      if (!e.exact) {
        const Rational tlo = root.exact ? root.value : std::max(root.lo, Rational(0));
        const Rational thi = root.exact ? root.value : root.hi;
        e.lo = sqrt_below(tlo);
        e.hi = sqrt_above(thi);
        e.mu = (e.lo + e.hi) / 2;
      }
      e.approx = e.exact ? e.mu.convert_to<double>() : std::sqrt(root.approx);
      pair_count += mult;
      out.pairs.push_back(std::move(e));
    }
  }
  std::sort(out.pairs.begin(), out.pairs.end(),
            [](const EigenMagnitude& x, const EigenMagnitude& y) { return x.mu < y.mu; });
  out.zero_multiplicity = n - 2 * pair_count;
  return out;
}

}  // namespace spinstat
