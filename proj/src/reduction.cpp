#include "spinstat/reduction.hpp"

#include "spinstat/linalg.hpp"

#include <sstream>

namespace spinstat {

std::size_t DerivativePolynomial::degree() const {
  for (std::size_t k = coefficients.size(); k-- > 0;)
    if (!coefficients[k].is_zero()) return k;
  return 0;
}

namespace {

std::string coef_text(const Scalar& c) { return c.is_real() ? to_string(c.re()) : c.str(); }

}  // namespace

std::string DerivativePolynomial::str() const {
  std::ostringstream os;
  bool first = true;
  for (std::size_t k = coefficients.size(); k-- > 0;) {
    if (coefficients[k].is_zero()) continue;
    if (!first) os << " + ";
    first = false;
    os << coef_text(coefficients[k]);
    if (k > 0) os << " dt^" << k;
  }
  return first ? "0" : os.str();
}

ReductionResult ostrogradsky_reduce(const DerivativePolynomial& f) {
  const std::size_t n = f.degree();
  if (n < 2) throw PreconditionError("F must have degree at least 2");
  if (n % 2 != 0) throw PreconditionError("F has odd degree " + std::to_string(n) + "; reversible motion needs an even F");
  for (std::size_t k = 1; k < f.coefficients.size(); k += 2)
    if (!f.coefficients[k].is_zero()) {
      throw PreconditionError("F has a nonzero coefficient of dt^" + std::to_string(k) + "; F must be even");
    }
  const std::size_t m = n / 2;
  // L = (1/2) sum_k c_k (phi^(k))^2 has Euler-Lagrange operator
  // sum_k (-1)^k c_k dt^(2k), so c_k = (-1)^k f_2k.
  std::vector<Scalar> c(m + 1);
  for (std::size_t k = 0; k <= m; ++k) c[k] = k % 2 == 0 ? f.coefficients[2 * k] : -f.coefficients[2 * k];

  ReductionResult out;
  out.order = n;
  for (std::size_t r = 0; r < n; ++r) {
    out.auxiliary_fields.push_back(r == 0 ? "phi" : "d" + std::to_string(r) + " phi");
    out.first_order_K0.index_map.push_back({0, 1, 1, r + 1});
  }
  // p_i = sum_{k=i..m} (-1)^(k-i) c_k phi^(2k-i), i = 1..m; xi_r = phi^(r).
  out.momenta.assign(m, Vector(n));
  for (std::size_t i = 1; i <= m; ++i)
    for (std::size_t k = i; k <= m; ++k) out.momenta[i - 1][2 * k - i] += (k - i) % 2 == 0 ? c[k] : -c[k];

  // sum_i p_i qdot_i with q_i = xi_(i-1): coefficient of xi_r xidot_(i-1).
  ExactMatrix kin(n, n);
  ExactMatrix bil(n, n);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t r = 0; r < n; ++r) {
      const Scalar& a = out.momenta[i][r];
      if (a.is_zero()) continue;
      kin(r, i) += a;
      bil(r, i + 1) += a;
    }
  out.first_order_K0.matrix = (kin - kin.transpose()) * Scalar(Rational(1, 2));
  out.hamiltonian = bil + bil.transpose();
  for (std::size_t k = 0; k <= m; ++k) out.hamiltonian(k, k) -= c[k];

  for (std::size_t i = 0; i < m; ++i) {
    std::ostringstream os;
    os << "p" << i + 1 << " =";
    bool first = true;
    for (std::size_t r = 0; r < n; ++r) {
      if (out.momenta[i][r].is_zero()) continue;
      os << (first ? " " : " + ") << coef_text(out.momenta[i][r]) << " " << out.auxiliary_fields[r];
      first = false;
    }
    out.momentum_combinations.push_back(os.str());
  }
  return out;
}

std::vector<Scalar> eliminate_auxiliaries(const ReductionResult& r) {
  const ExactMatrix a = r.first_order_K0.matrix * Scalar(2);
  const Scalar det = determinant(a);
  if (det.is_zero()) throw PreconditionError("reduced kinematic matrix is singular");
  std::vector<Scalar> p = characteristic_polynomial(inverse(a) * r.hamiltonian);
  for (auto& x : p) x *= det;
  return p;
}

bool proportional(std::span<const Scalar> a, std::span<const Scalar> b) {
  auto top = [](std::span<const Scalar> v) {
    std::size_t n = v.size();
    while (n > 0 && v[n - 1].is_zero()) --n;
    return n;
  };
  const std::size_t na = top(a);
  const std::size_t nb = top(b);
  if (na == 0 || na != nb) return false;
  const Scalar& la = a[na - 1];
  const Scalar& lb = b[nb - 1];
  for (std::size_t k = 0; k < na; ++k)
    if (!(a[k] * lb == b[k] * la)) return false;
  return true;
}

BetaSet duffin_kemmer_construct(const Rational& m) {
  if (m <= 0) throw PreconditionError("mass must be positive");
  BetaSet out;
  out.mass = m;
  const Scalar i = Scalar::i();
  for (auto& b : out.beta) b = ExactMatrix(5, 5);
  out.beta[0](0, 1) = i;
  out.beta[0](1, 0) = -i;
  for (std::size_t k = 1; k <= 3; ++k) {
    out.beta[k](0, k + 1) = -i;
    out.beta[k](k + 1, 0) = -i;
  }
  return out;
}

std::array<int, 4> parse_metric(std::string_view signature) {
  if (signature.size() != 4) throw FormatError("metric signature must have four characters, e.g. +---");
  std::array<int, 4> g{};
  for (std::size_t k = 0; k < 4; ++k) {
    if (signature[k] == '+') {
      g[k] = 1;
    } else if (signature[k] == '-') {
      g[k] = -1;
    } else {
      throw FormatError("metric signature may only contain '+' and '-'");
    }
  }
  return g;
}

DkpReport verify_dkp_algebra(const BetaSet& betas, std::string_view metric) {
  const auto g = parse_metric(metric);
  const auto& b = betas.beta;
  DkpReport rep;
  rep.metric = std::string(metric);
  std::array<std::array<ExactMatrix, 4>, 4> two;
  for (std::size_t p = 0; p < 4; ++p)
    for (std::size_t q = 0; q < 4; ++q) two[p][q] = b[p] * b[q];

  for (std::size_t mu = 0; mu < 4; ++mu)
    for (std::size_t nu = 0; nu < 4; ++nu)
      for (std::size_t la = 0; la < 4; ++la) {
        ++rep.standard_total;
        const ExactMatrix lhs = two[mu][nu] * b[la] + two[la][nu] * b[mu];
        ExactMatrix rhs(5, 5);
        if (mu == nu) rhs += b[la] * Scalar(g[mu]);
        if (la == nu) rhs += b[mu] * Scalar(g[la]);
        if (lhs == rhs) {
          ++rep.standard_passed;
        } else {
          rep.standard_failures.push_back({"b_m b_n b_l + b_l b_n b_m = g_mn b_l + g_ln b_m", {mu, nu, la}, false});
        }
      }

  for (std::size_t mu = 0; mu < 4; ++mu)
    rep.printed.push_back({"b_m^3 = b_m", {mu}, two[mu][mu] * b[mu] == b[mu]});
  for (std::size_t mu = 0; mu < 4; ++mu)
    for (std::size_t nu = 0; nu < 4; ++nu) {
      if (mu == nu) continue;
      rep.printed.push_back({"b_m b_n b_m = b_m", {mu, nu}, two[mu][nu] * b[mu] == b[mu]});
    }
  for (std::size_t mu = 0; mu < 4; ++mu)
    for (std::size_t nu = 0; nu < 4; ++nu) {
      if (mu == nu) continue;
      rep.printed.push_back({"b_m b_n^2 + b_n^2 b_m = b_m", {mu, nu},
                             b[mu] * two[nu][nu] + two[nu][nu] * b[mu] == b[mu]});
    }
  for (std::size_t mu = 0; mu < 4; ++mu)
    for (std::size_t nu = 0; nu < 4; ++nu)
      for (std::size_t la = 0; la < 4; ++la) {
        if (mu == nu || nu == la || mu == la) continue;
        rep.printed.push_back({"b_m b_n b_l + b_l b_n b_m = 0", {mu, nu, la},
                               (two[mu][nu] * b[la] + two[la][nu] * b[mu]).is_zero()});
      }
  return rep;
}

bool dkp_minimal_polynomial_check(const BetaSet& betas, const std::array<Rational, 4>& k,
                                  std::string_view metric) {
  const auto g = parse_metric(metric);
  ExactMatrix bk(5, 5);
  Rational kk = 0;
  for (std::size_t mu = 0; mu < 4; ++mu) {
    bk += betas.beta[mu] * Scalar(Rational(g[mu] * k[mu]));
    kk += g[mu] * k[mu] * k[mu];
  }
  return bk * bk * bk == bk * Scalar(kk);
}

}  // namespace spinstat
