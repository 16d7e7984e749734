#include "spinstat/flavor.hpp"

#include "spinstat/linalg.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace spinstat {

FlavorDetection detect_flavor_antisymmetry(const ExactMatrix& k, std::size_t flavors) {
  FlavorDetection out;
  if (flavors != 2) {
    out.supported = false;
    out.note = "flavor antisymmetry analysis needs exactly 2 flavors, got " + std::to_string(flavors);
    return out;
  }
  if (!k.is_square() || k.rows() % 2 != 0) throw DimensionError("flavor block has odd dimension");
  const std::size_t h = k.rows() / 2;
  const ExactMatrix k11 = k.block(0, 0, h, h);
  const ExactMatrix k22 = k.block(h, h, h, h);
  const ExactMatrix k12 = k.block(0, h, h, h);
  const ExactMatrix k21 = k.block(h, 0, h, h);
  out.block = k12;
  out.antisymmetric = k11.is_zero() && k22.is_zero() && k21 == -k12 && !k12.is_zero();
  if (!out.antisymmetric) out.note = "kinematic matrix is not antisymmetric in the flavor index";
  return out;
}

namespace {

Scalar inner(const Vector& u, const Vector& v) {
  Scalar acc;
  for (std::size_t k = 0; k < u.size(); ++k)
    if (!u[k].is_zero() && !v[k].is_zero()) acc += u[k].conj() * v[k];
  return acc;
}

std::string numeric_eigenvalue(double mu, int sign, PairForm form) {
  std::ostringstream os;
  os.precision(12);
  os << (sign < 0 ? "-" : "") << mu << (form == PairForm::Imaginary ? "i" : "");
  return os.str();
}

}  // namespace

FlavorDiagonalization diagonalize_flavor(const ExactMatrix& lambda) {
  FlavorDiagonalization out;
  out.spectrum = antisym_eigensplit(lambda);
  const std::size_t n = lambda.rows();
  const PairForm form = out.spectrum.form;
  const bool all_exact = std::all_of(out.spectrum.pairs.begin(), out.spectrum.pairs.end(),
                                     [](const EigenMagnitude& e) { return e.exact; });

  // Eigenvalues ascending: -mu (largest first), zeros, +mu (smallest first).
  struct Entry {
    int sign;
    const EigenMagnitude* mag;
  };
  std::vector<Entry> order;
  for (auto it = out.spectrum.pairs.rbegin(); it != out.spectrum.pairs.rend(); ++it)
    order.push_back({-1, &*it});
  if (out.spectrum.zero_multiplicity > 0) order.push_back({0, nullptr});
  for (const auto& p : out.spectrum.pairs) order.push_back({+1, &p});

  if (!all_exact) {
    for (const auto& e : order) {
      const std::size_t mult = e.mag ? e.mag->multiplicity : out.spectrum.zero_multiplicity;
      for (std::size_t r = 0; r < mult; ++r) {
        out.column_signs.push_back(e.sign);
        out.eigenvalues.push_back(e.mag ? numeric_eigenvalue(e.mag->approx, e.sign, form) : "0");
      }
    }
    return out;
  }

  out.exact = true;
  std::vector<Vector> columns;
  std::vector<Scalar> values;
  for (const auto& e : order) {
    Scalar lam;
    if (e.mag) {
      const Scalar mu(e.mag->mu * e.sign);
      lam = form == PairForm::Imaginary ? mu * Scalar::i() : mu;
    }
    const ExactMatrix shifted = lambda - ExactMatrix::identity(n) * lam;
    std::vector<Vector> space = kernel(shifted);
    for (auto& v : space) {
      const auto first = std::find_if(v.begin(), v.end(), [](const Scalar& s) { return !s.is_zero(); });
      const Scalar inv = Scalar(1) / *first;
      for (auto& x : v) x *= inv;
    }
    std::vector<Vector> ortho;
    for (auto v : space) {
      for (const auto& u : ortho) {
        const Scalar f = inner(u, v) / inner(u, u);
        for (std::size_t k = 0; k < n; ++k) v[k] -= f * u[k];
      }
      ortho.push_back(std::move(v));
    }
    for (auto& v : ortho) {
      columns.push_back(std::move(v));
      values.push_back(lam);
      out.column_signs.push_back(e.sign);
      out.eigenvalues.push_back(lam.str());
    }
  }
  out.numerators = ExactMatrix::from_columns(columns, n);
  for (const auto& c : columns) out.norms.push_back(inner(c, c).re());
  out.d = ExactMatrix::diagonal(values);
  return out;
}

FlavorDiagonalization diagonalize_flavor_blocks(const ExactMatrix& b) {
  if (!b.is_square()) throw DimensionError("flavor block must be square");
  const FlavorDiagonalization two = diagonalize_flavor(ExactMatrix{{0, 1}, {-1, 0}});
  const std::size_t h = b.rows();
  FlavorDiagonalization out;
  out.exact = true;
  out.spectrum = two.spectrum;
  out.numerators = kron(two.numerators, ExactMatrix::identity(h));
  for (const auto& nrm : two.norms)
    for (std::size_t k = 0; k < h; ++k) out.norms.push_back(nrm);
  out.d = ExactMatrix(2 * h, 2 * h);
  out.d.set_block(0, 0, b * Scalar(Rational(0), Rational(-1)));
  out.d.set_block(h, h, b * Scalar::i());
  for (std::size_t k = 0; k < h; ++k) {
    out.column_signs.push_back(-1);
    out.eigenvalues.push_back("-i*B");
  }
  for (std::size_t k = 0; k < h; ++k) {
    out.column_signs.push_back(+1);
    out.eigenvalues.push_back("+i*B");
  }
  return out;
}

std::vector<int> sector_signs(const ExactMatrix& d, const std::vector<std::size_t>& sizes) {
  std::vector<ExactMatrix> blocks;
  std::size_t at = 0;
  for (auto s : sizes) {
    blocks.push_back(d.block(at, at, s, s));
    at += s;
  }
  if (at != d.rows()) throw DimensionError("sector sizes do not partition the matrix");
  const auto ref = std::find_if(blocks.begin(), blocks.end(), [](const ExactMatrix& m) { return !m.is_zero(); });
  std::vector<int> out;
  if (ref == blocks.end()) return std::vector<int>(blocks.size(), 0);
  std::size_t pr = 0, pc = 0;
  for (std::size_t k = 0; k < ref->data().size(); ++k)
    if (!ref->data()[k].is_zero()) {
      pr = k / ref->cols();
      pc = k % ref->cols();
      break;
    }
  for (const auto& blk : blocks) {
    if (blk.is_zero()) {
      out.push_back(0);
      continue;
    }
    if (blk.rows() != ref->rows()) throw PreconditionError("sectors differ in size");
    const Scalar ratio = blk(pr, pc) / (*ref)(pr, pc);
    if (!ratio.is_real() || !(blk == *ref * ratio)) {
      throw PreconditionError("sector is not a real multiple of the reference sector");
    }
    out.push_back(sign(ratio.re()));
  }
  return out;
}

FlavorDiagnosis sector_sign_analysis(const FlavorDiagonalization& diag,
                                     const std::vector<std::size_t>& sector_sizes,
                                     Statistics statistics) {
  FlavorDiagnosis out;
  out.diagonalization = diag;
  if (diag.exact) {
    out.sector_signs = sector_signs(diag.d, sector_sizes);
    out.transformed_fields_hermitian = diag.numerators.is_real();
  } else {
    // Numeric path: the sign of each half is exact even when mu is not.
    std::size_t at = 0;
    int ref = 0;
    for (auto s : sector_sizes) {
      const int sg = s > 0 ? diag.column_signs[at] : 0;
      if (ref == 0) ref = sg;
      out.sector_signs.push_back(ref == 0 ? 0 : sg * ref);
      at += s;
    }
    out.transformed_fields_hermitian = false;
  }
  out.negative_norm = std::find(out.sector_signs.begin(), out.sector_signs.end(), -1) != out.sector_signs.end();
  if (out.negative_norm) {
    FockWitness w;
    w.table = RelationTable(statistics == Statistics::Fermi ? Bracket::Anticommutator : Bracket::Commutator);
    w.table.add_pair("a", "bdag", Scalar(1));
    w.table.add_pair("c", "ddag", Scalar(-1));
    w.state = "ddag";
    w.gram = gram_matrix({OperatorWord::parse(w.state)}, w.table);
    out.witness = std::move(w);
  }
  return out;
}

KirchoffResult kirchoff_check(const ModeExpansion& expansion) {
  struct Parts {
    std::vector<Rational> annihilation;
    std::vector<Rational> creation;
  };
  std::map<std::string, Parts> modes;
  auto violation = [&](const std::string& msg) {
    return KirchoffResult{false, "field '" + expansion.field + "': " + msg};
  };
  for (const auto& t : expansion.terms) {
    if (t.omega <= 0) return violation("mode " + t.mode + " has a non-positive frequency");
    if ((t.kind == OpKind::Annihilator) != (t.phase == Phase::Negative)) {
      return violation("operator " + t.symbol + " carries the wrong phase for its kind");
    }
    auto& p = modes[t.mode];
    (t.kind == OpKind::Annihilator ? p.annihilation : p.creation).push_back(t.omega);
  }
  if (modes.empty()) return violation("empty mode expansion");
  for (const auto& [mode, p] : modes) {
    if (p.annihilation.empty()) return violation("mode " + mode + " has a creation part only");
    if (p.creation.empty()) return violation("mode " + mode + " has an annihilation part only");
    for (const auto& w : p.annihilation)
      if (std::find(p.creation.begin(), p.creation.end(), w) == p.creation.end()) {
        return violation("mode " + mode + " has unmatched frequencies");
      }
    for (const auto& w : p.creation)
      if (std::find(p.annihilation.begin(), p.annihilation.end(), w) == p.annihilation.end()) {
        return violation("mode " + mode + " has unmatched frequencies");
      }
  }
  return {true, "field '" + expansion.field + "': creation and annihilation parts appear together"};
}

}  // namespace spinstat
