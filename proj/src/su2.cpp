#include "spinstat/su2.hpp"

#include <charconv>

namespace spinstat {

std::string SpinLabel::str() const {
  if (is_integer()) return std::to_string(two_j / 2);
  return std::to_string(two_j) + "/2";
}

SpinLabel SpinLabel::parse(std::string_view text) {
  auto read = [&](std::string_view part) {
    unsigned v = 0;
    const auto [ptr, ec] = std::from_chars(part.data(), part.data() + part.size(), v);
    if (part.empty() || ec != std::errc() || ptr != part.data() + part.size()) {
      throw FormatError("bad spin value: " + std::string(text));
    }
    return v;
  };
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return SpinLabel{2 * read(text)};
  if (text.substr(slash + 1) != "2") throw FormatError("spin must be n or n/2: " + std::string(text));
  return SpinLabel{read(text.substr(0, slash))};
}

namespace {

// 2m for basis index a.
long long two_m(SpinLabel j, std::size_t a) {
  return static_cast<long long>(j.two_j) - 2 * static_cast<long long>(a);
}

// c_m^2 = (j - m)(j + m + 1) with m from its doubled value.
Rational ladder_sq(SpinLabel j, long long tm) {
  const long long tj = j.two_j;
  return Rational((tj - tm) * (tj + tm + 2), 4);
}

// R(X) = [[Re X, -Im X], [Im X, Re X]]
ExactMatrix realify(const ExactMatrix& x) {
  const std::size_t n = x.rows();
  ExactMatrix r(2 * n, 2 * n);
  for (std::size_t p = 0; p < n; ++p)
    for (std::size_t q = 0; q < n; ++q) {
      const Scalar re(x(p, q).re());
      const Scalar im(x(p, q).im());
      r(p, q) = re;
      r(p, n + q) = -im;
      r(n + p, q) = im;
      r(n + p, n + q) = re;
    }
  return r;
}

}  // namespace

RepGenerators spin_generators(SpinLabel j) {
  const std::size_t n = j.dim();
  ExactMatrix jp(n, n);
  ExactMatrix jm(n, n);
  ExactMatrix jz(n, n);
  for (std::size_t a = 0; a < n; ++a) {
    jz(a, a) = Scalar(Rational(two_m(j, a), 2));
    if (a > 0) jp(a - 1, a) = Scalar(ladder_sq(j, two_m(j, a)));
    if (a + 1 < n) jm(a + 1, a) = 1;
  }
  const Scalar half(Rational(1, 2));
  const Scalar half_over_i(Rational(0), Rational(-1, 2));
  return {n, (jp + jm) * half, (jp - jm) * half_over_i, jz};
}

std::vector<Rational> rationalizing_scale_sq(SpinLabel j) {
  const std::size_t n = j.dim();
  std::vector<Rational> d(n);
  d[n - 1] = 1;
  // index a - 1 holds m + 1
  for (std::size_t a = n - 1; a > 0; --a) d[a - 1] = d[a] / ladder_sq(j, two_m(j, a));
  return d;
}

InvariantForm invariant_bilinear(SpinLabel j) {
  const std::size_t n = j.dim();
  ExactMatrix c(n, n);
  for (std::size_t a = 0; a < n; ++a) c(a, n - 1 - a) = a % 2 == 0 ? 1 : -1;
  return {c, j.is_integer() ? SymmetryClass::Symmetric : SymmetryClass::Antisymmetric,
          BasisTag::Spherical};
}

HermitianBasis hermitian_basis(SpinLabel j) {
  const RepGenerators g = spin_generators(j);
  const ExactMatrix c = invariant_bilinear(j).matrix;
  const std::size_t n = j.dim();
  const auto dsq = rationalizing_scale_sq(j);
  HermitianBasis out;

  if (j.is_integer()) {
    const long long jj = j.two_j / 2;
    Integer k = 1;
    for (unsigned f = 2; f <= j.two_j; ++f) k *= f;
    ExactMatrix t(n, n);
    std::size_t col = 0;
    for (long long m = jj; m >= 1; --m) {
      const std::size_t a = static_cast<std::size_t>(jj - m);
      const std::size_t b = static_cast<std::size_t>(jj + m);
      Rational q = Rational(k) * dsq[a];
      if (m % 2 == 1) q = -q;
      t(a, col) = -1;
      t(b, col) = Scalar(-q);
      t(a, col + 1) = Scalar::i();
      t(b, col + 1) = Scalar(Rational(0), -q);
      col += 2;
    }
    t(static_cast<std::size_t>(jj), col) = 1;
    const ExactMatrix tinv = inverse(t);
    out.change_of_basis = t;
    out.generators = {n, tinv * g.jx * t, tinv * g.jy * t, tinv * g.jz * t};
    ExactMatrix f = t.transpose() * c * t;
    if (jj % 2 == 1) f = -f;
    out.form = {f, SymmetryClass::Symmetric, BasisTag::Hermitian};
    out.metric = f;
    return out;
  }

  const Scalar i = Scalar::i();
  const Scalar minus_i(Rational(0), Rational(-1));
  ExactMatrix m(2 * n, 2 * n);
  for (std::size_t a = 0; a < n; ++a) {
    m(a, a) = 1;
    m(a, n + a) = i;
    m(n + a, a) = 1;
    m(n + a, n + a) = minus_i;
  }
  out.change_of_basis = m;
  out.generators = {2 * n, realify(g.jx * minus_i) * i, realify(g.jy * minus_i) * i,
                    realify(g.jz * minus_i) * i};
  ExactMatrix omega(2 * n, 2 * n);
  omega.set_block(0, n, c);
  omega.set_block(n, 0, c);
  out.form = {omega, SymmetryClass::Antisymmetric, BasisTag::Hermitian};
  std::vector<Scalar> h;
  for (int rep = 0; rep < 2; ++rep)
    for (const auto& d : dsq) h.emplace_back(d);
  out.metric = ExactMatrix::diagonal(h);
  return out;
}

std::vector<ExactMatrix> invariance_defects(const RepGenerators& gens, const ExactMatrix& m) {
  if (m.rows() != gens.dim || m.cols() != gens.dim) {
    throw DimensionError("form dimension " + std::to_string(m.rows()) +
                         " does not match generator dimension " + std::to_string(gens.dim));
  }
  std::vector<ExactMatrix> out;
  for (std::size_t a = 0; a < 3; ++a) out.push_back(gens[a].transpose() * m + m * gens[a]);
  return out;
}

FormSpace invariant_form_space(const RepGenerators& gens) {
  const std::size_t d = gens.dim;
  // Unknown M(p, q) sits at column p * d + q. Equation (r, s) of generator J:
  //   sum_p J(p, r) M(p, s) + sum_q M(r, q) J(q, s) = 0.
  std::vector<SparseRow> rows;
  rows.reserve(3 * d * d);
  for (std::size_t a = 0; a < 3; ++a) {
    const ExactMatrix& jm = gens[a];
    std::vector<std::vector<std::pair<std::size_t, Scalar>>> nz_col(d);
    for (std::size_t p = 0; p < d; ++p)
      for (std::size_t q = 0; q < d; ++q)
        if (!jm(p, q).is_zero()) nz_col[q].emplace_back(p, jm(p, q));
    for (std::size_t r = 0; r < d; ++r)
      for (std::size_t s = 0; s < d; ++s) {
        SparseRow row;
        for (const auto& [p, v] : nz_col[r]) row[p * d + s] += v;
        for (const auto& [q, v] : nz_col[s]) row[r * d + q] += v;
        if (!row.empty()) rows.push_back(std::move(row));
      }
  }
  const auto kern = sparse_kernel(std::move(rows), d * d);
  std::vector<Vector> sym_vecs, anti_vecs;
  for (const auto& v : kern) {
    Vector s(d * d), t(d * d);
    const Scalar half(Rational(1, 2));
    for (std::size_t p = 0; p < d; ++p)
      for (std::size_t q = 0; q < d; ++q) {
        s[p * d + q] = (v[p * d + q] + v[q * d + p]) * half;
        t[p * d + q] = (v[p * d + q] - v[q * d + p]) * half;
      }
    if (!is_zero_vector(s)) sym_vecs.push_back(std::move(s));
    if (!is_zero_vector(t)) anti_vecs.push_back(std::move(t));
  }
  auto to_matrices = [d](const std::vector<Vector>& basis) {
    std::vector<ExactMatrix> out;
    for (const auto& v : basis) {
      ExactMatrix m(d, d);
      for (std::size_t p = 0; p < d; ++p)
        for (std::size_t q = 0; q < d; ++q) m(p, q) = v[p * d + q];
      out.push_back(std::move(m));
    }
    return out;
  };
  FormSpace fs;
  fs.sym_basis = to_matrices(span_basis(sym_vecs));
  fs.antisym_basis = to_matrices(span_basis(anti_vecs));
  fs.sym_dim = fs.sym_basis.size();
  fs.antisym_dim = fs.antisym_basis.size();
  return fs;
}

bool satisfies_commutation(const RepGenerators& g) {
  const Scalar i = Scalar::i();
  return commutator(g.jx, g.jy) == g.jz * i && commutator(g.jy, g.jz) == g.jx * i &&
         commutator(g.jz, g.jx) == g.jy * i;
}

RepGenerators replicate(const RepGenerators& g, std::size_t copies) {
  const ExactMatrix id = ExactMatrix::identity(copies);
  return {g.dim * copies, kron(id, g.jx), kron(id, g.jy), kron(id, g.jz)};
}

RepGenerators trivial_generators(std::size_t n) {
  return {n, ExactMatrix(n, n), ExactMatrix(n, n), ExactMatrix(n, n)};
}

RepGenerators direct_sum(std::span<const RepGenerators> parts) {
  std::vector<ExactMatrix> x, y, z;
  std::size_t dim = 0;
  for (const auto& p : parts) {
    x.push_back(p.jx);
    y.push_back(p.jy);
    z.push_back(p.jz);
    dim += p.dim;
  }
  return {dim, spinstat::direct_sum(x), spinstat::direct_sum(y), spinstat::direct_sum(z)};
}

}  // namespace spinstat
