#include "spinstat/linalg.hpp"

#include <algorithm>

namespace spinstat {

std::string_view to_string(SymmetryClass c) {
  switch (c) {
    case SymmetryClass::Symmetric: return "Symmetric";
    case SymmetryClass::Antisymmetric: return "Antisymmetric";
    case SymmetryClass::Mixed: return "Mixed";
    case SymmetryClass::Zero: return "Zero";
  }
  return "?";
}

SymmetryParts symmetry_decompose(const ExactMatrix& m) {
  if (!m.is_square()) throw DimensionError("symmetry_decompose needs a square matrix");
  const ExactMatrix t = m.transpose();
  const Scalar half(Rational(1, 2));
  SymmetryParts parts{(m + t) * half, (m - t) * half, SymmetryClass::Zero};
  const bool sym_zero = parts.sym.is_zero();
  const bool anti_zero = parts.antisym.is_zero();
  if (sym_zero && anti_zero) {
    parts.cls = SymmetryClass::Zero;
  } else if (anti_zero) {
    parts.cls = SymmetryClass::Symmetric;
  } else if (sym_zero) {
    parts.cls = SymmetryClass::Antisymmetric;
  } else {
    parts.cls = SymmetryClass::Mixed;
  }
  return parts;
}

SymmetryClass classify_symmetry(const ExactMatrix& m) { return symmetry_decompose(m).cls; }

RowEchelon rref(ExactMatrix m) {
  RowEchelon out;
  std::size_t lead_row = 0;
  for (std::size_t c = 0; c < m.cols() && lead_row < m.rows(); ++c) {
    std::size_t pivot = lead_row;
    while (pivot < m.rows() && m(pivot, c).is_zero()) ++pivot;
    if (pivot == m.rows()) continue;
    if (pivot != lead_row) {
      for (std::size_t k = 0; k < m.cols(); ++k) std::swap(m(pivot, k), m(lead_row, k));
    }
    const Scalar inv = Scalar(1) / m(lead_row, c);
    for (std::size_t k = c; k < m.cols(); ++k) m(lead_row, k) *= inv;
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == lead_row || m(r, c).is_zero()) continue;
      const Scalar f = m(r, c);
      for (std::size_t k = c; k < m.cols(); ++k) {
        if (!m(lead_row, k).is_zero()) m(r, k) -= f * m(lead_row, k);
      }
    }
    out.pivots.push_back(c);
    ++lead_row;
  }
  out.reduced = std::move(m);
  return out;
}

std::size_t rank(const ExactMatrix& m) { return rref(m).pivots.size(); }

std::vector<Vector> kernel(const ExactMatrix& m) {
  const RowEchelon e = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : e.pivots) is_pivot[p] = true;
  std::vector<Vector> basis;
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    Vector v(m.cols());
    v[f] = 1;
    for (std::size_t r = 0; r < e.pivots.size(); ++r) v[e.pivots[r]] = -e.reduced(r, f);
    basis.push_back(std::move(v));
  }
  return basis;
}

std::vector<Vector> sparse_kernel(std::vector<SparseRow> rows, std::size_t cols) {
  // Echelon rows keyed by pivot column; each stored row has its pivot as its
  // smallest column and a unit pivot coefficient.
  std::map<std::size_t, SparseRow> echelon;
  for (auto& row : rows) {
    for (auto it = row.begin(); it != row.end();) {
      if (it->second.is_zero()) it = row.erase(it); else ++it;
    }
    // Pivot rows only touch columns >= their pivot, so a left-to-right sweep
    // clears every existing pivot column from the new row.
    std::size_t from = 0;
    for (;;) {
      auto it = row.lower_bound(from);
      while (it != row.end() && echelon.count(it->first) == 0) ++it;
      if (it == row.end()) break;
      const std::size_t col = it->first;
      const Scalar f = it->second;
      for (const auto& [k, v] : echelon.at(col)) {
        Scalar& target = row[k];
        target -= f * v;
        if (target.is_zero()) row.erase(k);
      }
      from = col + 1;
    }
    if (row.empty()) continue;
    const std::size_t lead = row.begin()->first;
    const Scalar inv = Scalar(1) / row.begin()->second;
    for (auto& [k, v] : row) v *= inv;
    echelon.emplace(lead, std::move(row));
  }
  // Back substitution to reduced form, highest pivot first.
  for (auto hi = echelon.rbegin(); hi != echelon.rend(); ++hi) {
    const std::size_t pc = hi->first;
    for (auto& [lc, lrow] : echelon) {
      if (lc >= pc) break;
      auto hit = lrow.find(pc);
      if (hit == lrow.end()) continue;
      const Scalar f = hit->second;
      for (const auto& [k, v] : hi->second) {
        Scalar& target = lrow[k];
        target -= f * v;
        if (target.is_zero()) lrow.erase(k);
      }
    }
  }
  std::vector<Vector> basis;
  for (std::size_t f = 0; f < cols; ++f) {
    if (echelon.count(f) != 0) continue;
    Vector v(cols);
    v[f] = 1;
    for (const auto& [pc, prow] : echelon) {
      auto hit = prow.find(f);
      if (hit != prow.end()) v[pc] = -hit->second;
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

ExactMatrix inverse(const ExactMatrix& m) {
  if (!m.is_square()) throw DimensionError("inverse of non-square matrix");
  const std::size_t n = m.rows();
  ExactMatrix aug(n, 2 * n);
  aug.set_block(0, 0, m);
  aug.set_block(0, n, ExactMatrix::identity(n));
  const RowEchelon e = rref(std::move(aug));
  if (e.pivots.size() < n || e.pivots[n - 1] != n - 1) {
    throw PreconditionError("matrix is singular");
  }
  return e.reduced.block(0, n, n, n);
}

Scalar determinant(const ExactMatrix& m) {
  if (!m.is_square()) throw DimensionError("determinant of non-square matrix");
  ExactMatrix a = m;
  const std::size_t n = a.rows();
  Scalar det(1);
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && a(p, c).is_zero()) ++p;
    if (p == n) return Scalar(0);
    if (p != c) {
      for (std::size_t k = 0; k < n; ++k) std::swap(a(p, k), a(c, k));
      det = -det;
    }
    det *= a(c, c);
    const Scalar inv = Scalar(1) / a(c, c);
    for (std::size_t r = c + 1; r < n; ++r) {
      if (a(r, c).is_zero()) continue;
      const Scalar f = a(r, c) * inv;
      for (std::size_t k = c; k < n; ++k) a(r, k) -= f * a(c, k);
    }
  }
  return det;
}

std::vector<Scalar> characteristic_polynomial(const ExactMatrix& m) {
  // Faddeev-LeVerrier recursion; exact over the rationals.
  if (!m.is_square()) throw DimensionError("characteristic polynomial of non-square matrix");
  const std::size_t n = m.rows();
  std::vector<Scalar> c(n + 1);
  c[n] = 1;
  ExactMatrix mk(n, n);
  for (std::size_t k = 1; k <= n; ++k) {
    ExactMatrix next = m * mk;
    for (std::size_t d = 0; d < n; ++d) next(d, d) += c[n - k + 1];
    mk = std::move(next);
    c[n - k] = -(m * mk).trace() / Scalar(static_cast<long long>(k));
  }
  return c;
}

std::vector<Vector> span_basis(std::span<const Vector> vectors) {
  if (vectors.empty()) return {};
  const std::size_t len = vectors.front().size();
  ExactMatrix m(vectors.size(), len);
  for (std::size_t r = 0; r < vectors.size(); ++r) {
    if (vectors[r].size() != len) throw DimensionError("span_basis length mismatch");
    for (std::size_t c = 0; c < len; ++c) m(r, c) = vectors[r][c];
  }
  const RowEchelon e = rref(std::move(m));
  std::vector<Vector> basis;
  for (std::size_t r = 0; r < e.pivots.size(); ++r) basis.push_back(e.reduced.row(r));
  return basis;
}

}  // namespace spinstat
