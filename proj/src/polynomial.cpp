#include "spinstat/polynomial.hpp"

#include "spinstat/matrix.hpp"

#include <boost/multiprecision/integer.hpp>

#include <algorithm>
#include <cmath>
#include <sstream>

namespace spinstat {

namespace mp = boost::multiprecision;

Polynomial::Polynomial(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

Polynomial Polynomial::from_scalars(const std::vector<Scalar>& coeffs) {
  std::vector<Rational> re;
  re.reserve(coeffs.size());
  for (const auto& s : coeffs) {
    if (!s.is_real()) throw PreconditionError("polynomial coefficient is not real");
    re.push_back(s.re());
  }
  return Polynomial(std::move(re));
}

Polynomial Polynomial::monomial(std::size_t degree, Rational c) {
  std::vector<Rational> v(degree + 1);
  v[degree] = std::move(c);
  return Polynomial(std::move(v));
}

void Polynomial::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Rational Polynomial::operator()(const Rational& x) const {
  Rational acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

double Polynomial::evaluate(double x) const {
  double acc = 0.0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + it->convert_to<double>();
  return acc;
}

Polynomial Polynomial::derivative() const {
  if (c_.size() <= 1) return {};
  std::vector<Rational> d(c_.size() - 1);
  for (std::size_t k = 1; k < c_.size(); ++k) d[k - 1] = c_[k] * static_cast<long long>(k);
  return Polynomial(std::move(d));
}

Polynomial Polynomial::monic() const {
  if (is_zero()) return {};
  Polynomial m = *this;
  const Rational lead = leading();
  for (auto& x : m.c_) x /= lead;
  return m;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] += o.c_[k];
  trim();
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] -= o.c_[k];
  trim();
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> p(a.c_.size() + b.c_.size() - 1);
  for (std::size_t i = 0; i < a.c_.size(); ++i)
    for (std::size_t j = 0; j < b.c_.size(); ++j) p[i + j] += a.c_[i] * b.c_[j];
  return Polynomial(std::move(p));
}

Polynomial operator*(Polynomial a, const Rational& s) {
  for (auto& x : a.c_) x *= s;
  a.trim();
  return a;
}

std::pair<Polynomial, Polynomial> Polynomial::divmod(const Polynomial& d) const {
  if (d.is_zero()) throw std::domain_error("polynomial division by zero");
  std::vector<Rational> rem = c_;
  if (degree() < d.degree()) return {Polynomial{}, *this};
  std::vector<Rational> quo(c_.size() - d.c_.size() + 1);
  for (std::size_t k = quo.size(); k-- > 0;) {
    const Rational f = rem[k + d.c_.size() - 1] / d.leading();
    quo[k] = f;
    if (f == 0) continue;
    for (std::size_t j = 0; j < d.c_.size(); ++j) rem[k + j] -= f * d.c_[j];
  }
  return {Polynomial(std::move(quo)), Polynomial(std::move(rem))};
}

Polynomial Polynomial::integer_normalized() const {
  Integer l = 1;
  for (const auto& x : c_) l = mp::lcm(l, mp::denominator(x));
  Polynomial p = *this * Rational(l);
  Integer g = 0;
  for (const auto& x : p.c_) g = mp::gcd(g, mp::numerator(x));
  if (g > 1) p = p * Rational(Integer(1), g);
  return p;
}

std::string Polynomial::str(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t k = c_.size(); k-- > 0;) {
    const Rational& a = c_[k];
    if (a == 0) continue;
    const Rational mag = a < 0 ? Rational(-a) : a;
    if (first) {
      if (a < 0) os << "-";
    } else {
      os << (a < 0 ? " - " : " + ");
    }
    first = false;
    if (mag != 1 || k == 0) os << to_string(mag);
    if (k >= 1) os << var;
    if (k >= 2) os << "^" << k;
  }
  return os.str();
}

Polynomial gcd(Polynomial a, Polynomial b) {
  while (!b.is_zero()) {
    Polynomial r = a.divmod(b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

std::vector<std::pair<Polynomial, std::size_t>> square_free_factors(const Polynomial& p) {
  std::vector<std::pair<Polynomial, std::size_t>> out;
  if (p.degree() < 1) return out;
  const Polynomial f = p.monic();
  const Polynomial df = f.derivative();
  Polynomial a = gcd(f, df);
  Polynomial b = f.divmod(a).first;
  Polynomial c = df.divmod(a).first;
  Polynomial d = c - b.derivative();
  std::size_t mult = 1;
  while (b.degree() >= 1) {
    Polynomial g = gcd(b, d);
    if (g.degree() >= 1) out.emplace_back(g, mult);
    b = b.divmod(g).first;
    c = d.divmod(g).first;
    d = c - b.derivative();
    ++mult;
  }
  return out;
}

namespace {

std::vector<Polynomial> sturm_chain(const Polynomial& p) {
  std::vector<Polynomial> chain{p, p.derivative()};
  while (!chain.back().is_zero()) {
    Polynomial r = chain[chain.size() - 2].divmod(chain.back()).second;
    if (r.is_zero()) break;
    chain.push_back(r * Rational(-1));
  }
  return chain;
}

int sign_variations(const std::vector<Polynomial>& chain, const Rational& x) {
  int changes = 0;
  int last = 0;
  for (const auto& q : chain) {
    const int s = sign(q(x));
    if (s == 0) continue;
    if (last != 0 && s != last) ++changes;
    last = s;
  }
  return changes;
}

Rational cauchy_bound(const Polynomial& p) {
  Rational m = 0;
  for (int k = 0; k < p.degree(); ++k) {
    Rational r = p.coeff(static_cast<std::size_t>(k)) / p.leading();
    if (r < 0) r = -r;
    m = std::max(m, r);
  }
  return m + 1;
}

}  // namespace

std::vector<RealRoot> real_roots(const Polynomial& square_free, double tolerance) {
  std::vector<RealRoot> roots;
  if (square_free.degree() < 1) return roots;
  const Polynomial p = square_free.integer_normalized();
  const auto chain = sturm_chain(p);
  const Rational bound = cauchy_bound(p);
  const Integer lead = mp::abs(mp::numerator(p.leading()));

  // Isolate: intervals (lo, hi] each holding exactly one root.
  std::vector<std::pair<Rational, Rational>> work{{-bound, bound}};
  std::vector<std::pair<Rational, Rational>> isolated;
  while (!work.empty()) {
    auto [lo, hi] = work.back();
    work.pop_back();
    const int count = sign_variations(chain, lo) - sign_variations(chain, hi);
    if (count == 0) continue;
    if (count == 1) {
      isolated.emplace_back(lo, hi);
      continue;
    }
    const Rational mid = (lo + hi) / 2;
    work.emplace_back(lo, mid);
    work.emplace_back(mid, hi);
  }
  std::sort(isolated.begin(), isolated.end());

  for (auto [lo, hi] : isolated) {
    RealRoot root;
    const int sign_lo = sign(p(lo));
    auto bisect = [&] {
      const Rational mid = (lo + hi) / 2;
      const int sm = sign(p(mid));
      if (sm == 0) {
        root.exact = true;
        root.value = mid;
        return;
      }
      if (sm != sign_lo) hi = mid; else lo = mid;
    };
    if (sign(p(hi)) == 0) {
      root.exact = true;
      root.value = hi;
    }
    // A rational root has the form k/lead; shrink below 1/lead and test.
    const Rational exact_width(Integer(1), lead);
    while (!root.exact && hi - lo >= exact_width) bisect();
    if (!root.exact) {
      const Integer k0 = mp::numerator(lo * Rational(lead));
      const Integer d0 = mp::denominator(lo * Rational(lead));
      Integer k = k0 / d0;  // truncation; scan a small window
      for (Integer cand = k - 1; cand <= k + 2 && !root.exact; ++cand) {
        const Rational x(cand, lead);
        if (x > lo && x <= hi && p(x) == 0) {
          root.exact = true;
          root.value = x;
        }
      }
    }
    if (!root.exact) {
      for (;;) {
        const Rational mid = (lo + hi) / 2;
        const double scale = std::max(1.0, std::fabs(mid.convert_to<double>()));
        if ((hi - lo).convert_to<double>() < tolerance * scale) break;
        bisect();
        if (root.exact) break;
      }
    }
    if (root.exact) {
      root.lo = root.value;
      root.hi = root.value;
    } else {
      root.value = (lo + hi) / 2;
      root.lo = lo;
      root.hi = hi;
    }
    root.approx = root.value.convert_to<double>();
    roots.push_back(std::move(root));
  }
  return roots;
}

bool rational_sqrt(const Rational& q, Rational& out) {
  if (q < 0) return false;
  const Integer n = mp::numerator(q);
  const Integer d = mp::denominator(q);
  const Integer sn = mp::sqrt(n);
  const Integer sd = mp::sqrt(d);
  if (sn * sn != n || sd * sd != d) return false;
  out = Rational(sn, sd);
  return true;
}

}  // namespace spinstat
