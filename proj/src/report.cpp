#include "spinstat/report.hpp"

#include "spinstat/linalg.hpp"

#include <json.hpp>

#include <random>
#include <sstream>

namespace spinstat {

using Json = nlohmann::ordered_json;

std::string to_string(OverallStatus s) {
  switch (s) {
    case OverallStatus::Consistent: return "CONSISTENT";
    case OverallStatus::Contradiction: return "CONTRADICTION";
    case OverallStatus::RejectedNegativeNorm: return "REJECTED_NEGATIVE_NORM";
    case OverallStatus::NoKinematicTerm: return "NO_KINEMATIC_TERM";
    case OverallStatus::Unsupported: return "UNSUPPORTED";
  }
  return "?";
}

int exit_code(OverallStatus s) {
  switch (s) {
    case OverallStatus::Consistent: return 0;
    case OverallStatus::Contradiction: return 2;
    case OverallStatus::RejectedNegativeNorm: return 3;
    case OverallStatus::NoKinematicTerm: return 4;
    case OverallStatus::Unsupported: return 5;
  }
  return 1;
}

VerdictReport analyze(const TheorySpec& spec) {
  VerdictReport r;
  r.spec = spec;
  r.verdict = spin_statistics_verdict(spec);
  for (const auto& f : spec.fields) {
    const std::string ann = "a_" + f.name;
    r.kirchoff.push_back({f.name, kirchoff_check(standard_expansion(f.name, ann, ann + "dag"))});
  }
  bool negative = false, contradiction = false, unsupported = false, missing = false;
  for (const auto& v : r.verdict.fields) {
    negative = negative || (v.flavor && v.flavor->negative_norm);
    contradiction = contradiction || v.contradiction;
    unsupported = unsupported || v.unsupported;
    missing = missing || !v.kinematic_available;
  }
  for (const auto& k : r.kirchoff) contradiction = contradiction || !k.result.compliant;
  if (negative) r.status = OverallStatus::RejectedNegativeNorm;
  else if (contradiction) r.status = OverallStatus::Contradiction;
  else if (unsupported) r.status = OverallStatus::Unsupported;
  else if (missing) r.status = OverallStatus::NoKinematicTerm;
  else r.status = OverallStatus::Consistent;
  return r;
}

namespace {

Json matrix_json(const ExactMatrix& m) {
  Json rows = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(m(r, c).str());
    rows.push_back(std::move(row));
  }
  return rows;
}

Json index_json(std::span<const std::size_t> v) {
  Json a = Json::array();
  for (auto x : v) a.push_back(x);
  return a;
}

Json signature_json(const Signature& s) {
  return Json{{"positive", s.positive}, {"negative", s.negative}, {"zero", s.zero}};
}

Json consistency_json(const ConsistencyResult& c) {
  Json j{{"status", to_string(c.status)}};
  j["reason"] = c.reason.empty() ? Json(nullptr) : Json(c.reason);
  return j;
}

Json field_json(const FieldSpec& f, const StatisticsVerdict& v) {
  Json j;
  j["name"] = f.name;
  j["spin"] = f.spin.str();
  j["flavors"] = f.flavors;
  j["copies"] = f.copies;
  j["component_dim"] = f.component_dim();
  j["pinned_statistics"] = to_string(v.pinned);
  j["kinematic_available"] = v.kinematic_available;
  j["analyzed_block"] = v.analyzed_flavor_block ? "flavor" : "field";
  j["required_symmetry"] = std::string(to_string(v.required_symmetry));
  j["observed_symmetry"] = std::string(to_string(v.observed_symmetry));
  j["invariant"] = v.invariant;
  if (v.kinematic_available) {
    j["bose"] = consistency_json(v.bose);
    j["fermi"] = consistency_json(v.fermi);
  } else {
    j["bose"] = nullptr;
    j["fermi"] = nullptr;
  }
  j["consistent_statistics"] = v.consistent_statistics ? Json(to_string(*v.consistent_statistics)) : Json(nullptr);
  j["michel_parity"] = v.michel_parity;
  j["contradiction"] = v.contradiction;
  j["unsupported"] = v.unsupported;
  j["explanation"] = v.explanation;
  if (v.canonical) {
    const auto& c = *v.canonical;
    j["canonical"] = Json{{"bracket", to_string(c.bracket)},
                          {"canonical_indices", index_json(c.canonical)},
                          {"constraint_indices", index_json(c.constraints)},
                          {"momentum_map", matrix_json(c.momentum_map)},
                          {"field_brackets", matrix_json(c.field_brackets)}};
  } else {
    j["canonical"] = nullptr;
  }
  return j;
}

Json diagnosis_json(const std::string& field, const FlavorDiagnosis& d) {
  Json j;
  j["field"] = field;
  j["is_flavor_antisymmetric"] = d.is_flavor_antisymmetric;
  const auto& dg = d.diagonalization;
  if (d.is_flavor_antisymmetric) {
    j["exact"] = dg.exact;
    j["eigenvalues"] = dg.eigenvalues;
    j["s_numerators"] = matrix_json(dg.numerators);
    Json norms = Json::array();
    for (const auto& q : dg.norms) norms.push_back(to_string(q));
    j["s_norms"] = norms;
    j["d"] = matrix_json(dg.d);
  }
  j["sector_signs"] = d.sector_signs;
  j["negative_norm"] = d.negative_norm;
  j["inverted_connection_attempt"] = d.inverted_connection_attempt;
  j["transformed_fields_hermitian"] = d.transformed_fields_hermitian;
  if (d.witness) {
    j["witness"] = Json{{"table", d.witness->table.text()},
                        {"state", d.witness->state},
                        {"gram", matrix_json(d.witness->gram.matrix)},
                        {"signature", signature_json(d.witness->gram.signature)}};
  } else {
    j["witness"] = nullptr;
  }
  j["note"] = d.note;
  return j;
}

}  // namespace

std::string to_json(const VerdictReport& r) {
  const auto& spec = r.spec;
  const auto& v = r.verdict;
  Json j;
  j["theory"] = spec.name;
  j["index_dimension"] = spec.dim();
  Json fields = Json::array();
  for (std::size_t k = 0; k < spec.fields.size(); ++k) fields.push_back(field_json(spec.fields[k], v.fields[k]));
  j["fields"] = fields;

  Json kin;
  kin["mode"] = spec.kinematic == KinematicMode::Auto ? "auto" : "explicit";
  kin["matrix"] = matrix_json(v.build.kinematic.matrix);
  kin["symmetry"] = std::string(to_string(v.symmetry));
  kin["invariant"] = v.invariance.invariant;
  kin["violation_count"] = v.invariance.violation_count;
  Json viol = Json::array();
  for (const auto& x : v.invariance.violations)
    viol.push_back(Json{{"generator", std::string(1, x.generator)}, {"row", x.row}, {"col", x.col}, {"value", x.value.str()}});
  kin["violations"] = viol;
  Json constraints = Json::array();
  const auto offsets = spec.offsets();
  const auto& imap = v.build.kinematic.index_map;
  for (std::size_t k = 0; k < spec.fields.size(); ++k) {
    const auto& fv = v.fields[k];
    if (!fv.canonical) continue;
    const std::size_t h = fv.analyzed.rows();
    for (auto c : fv.canonical->constraints) {
      const std::size_t reps = fv.analyzed_flavor_block ? 2 : 1;
      for (std::size_t rep = 0; rep < reps; ++rep) {
        const std::size_t idx = offsets[k] + rep * h + c;
        const IndexLabel& l = imap[idx];
        constraints.push_back(Json{{"index", idx},
                                   {"field", spec.fields[l.field].name},
                                   {"flavor", l.flavor},
                                   {"copy", l.copy},
                                   {"component", l.component}});
      }
    }
  }
  kin["constraints"] = constraints;
  j["kinematic"] = kin;

  Json flavor;
  flavor["coupling"] = to_string(spec.flavor);
  Json diags = Json::array();
  for (std::size_t k = 0; k < spec.fields.size(); ++k)
    if (v.fields[k].flavor) diags.push_back(diagnosis_json(spec.fields[k].name, *v.fields[k].flavor));
  flavor["diagnoses"] = diags;
  j["flavor"] = flavor;

  Json kir = Json::array();
  for (const auto& e : r.kirchoff)
    kir.push_back(Json{{"field", e.field}, {"compliant", e.result.compliant}, {"detail", e.result.detail}});
  j["kirchoff"] = kir;
  j["status"] = to_string(r.status);
  return j.dump(2) + "\n";
}

std::string to_text(const VerdictReport& r) {
  std::ostringstream os;
  const auto& v = r.verdict;
  os << "theory: " << r.spec.name << "\n";
  os << "index space: " << r.spec.dim() << "\n";
  for (std::size_t k = 0; k < r.spec.fields.size(); ++k) {
    const auto& f = r.spec.fields[k];
    const auto& fv = v.fields[k];
    os << "field " << f.name << ": spin " << f.spin.str() << ", " << f.flavors << " flavor(s), " << f.copies
       << " copy(ies)\n";
    if (!fv.kinematic_available) {
      os << "  no kinematic term: " << fv.explanation << "\n";
      continue;
    }
    os << "  " << (fv.analyzed_flavor_block ? "flavor block" : "kinematic block") << ": "
       << to_string(fv.observed_symmetry) << " (rotations require " << to_string(fv.required_symmetry) << "), "
       << (fv.invariant ? "invariant" : "NOT invariant") << "\n";
    os << "  bose " << to_string(fv.bose.status) << ", fermi " << to_string(fv.fermi.status) << "\n";
    os << "  statistics: " << (fv.consistent_statistics ? to_string(*fv.consistent_statistics) : "none")
       << ", michel parity " << (fv.michel_parity > 0 ? "+1" : "-1") << "\n";
    if (fv.canonical) {
      os << "  canonical " << fv.canonical->canonical.size() << ", constraints " << fv.canonical->constraints.size()
         << ", " << to_string(fv.canonical->bracket) << "\n";
    }
    if (fv.unsupported) os << "  UNSUPPORTED: " << fv.explanation << "\n";
    else if (fv.contradiction) os << "  CONTRADICTION: " << fv.explanation << "\n";
    else if (!fv.explanation.empty()) os << "  note: " << fv.explanation << "\n";
    if (fv.flavor) {
      const auto& d = *fv.flavor;
      os << "  flavor: sector signs (";
      for (std::size_t s = 0; s < d.sector_signs.size(); ++s) os << (s ? ", " : "") << d.sector_signs[s];
      os << ")" << (d.negative_norm ? ", NEGATIVE NORM" : "") << (d.inverted_connection_attempt ? ", inverted" : "")
         << "\n";
      if (d.witness) {
        os << "  witness: <0| adjoint(" << d.witness->state << ") " << d.witness->state
           << " |0> = " << d.witness->gram.matrix(0, 0).str() << "\n";
      }
      if (!d.note.empty()) os << "  " << d.note << "\n";
    }
  }
  os << "kinematic matrix: " << to_string(v.symmetry) << ", "
     << (v.invariance.invariant ? "invariant" : "not invariant (" + std::to_string(v.invariance.violation_count) + " violations)")
     << "\n";
  for (const auto& e : r.kirchoff)
    os << "kirchoff " << e.field << ": " << (e.result.compliant ? "compliant" : "VIOLATION: " + e.result.detail) << "\n";
  os << "status: " << to_string(r.status) << "\n";
  return os.str();
}

DkpCheck run_dkp_check(std::string_view metric, bool include_printed) {
  DkpCheck d;
  d.betas = duffin_kemmer_construct();
  d.algebra = verify_dkp_algebra(d.betas, metric);
  d.include_printed = include_printed;
  const auto g = parse_metric(metric);
  std::vector<std::array<Rational, 4>> ks{{2, 1, 1, 1}};
  std::mt19937 rng(20240611u);
  for (int n = 0; n < 5; ++n) {
    std::array<Rational, 4> k;
    for (auto& x : k) {
      const long num = static_cast<long>(rng() % 11) - 5;
      const long den = static_cast<long>(rng() % 4) + 1;
      x = Rational(num, den);
    }
    ks.push_back(k);
  }
  for (const auto& k : ks) {
    Rational kk = 0;
    for (std::size_t m = 0; m < 4; ++m) kk += g[m] * k[m] * k[m];
    d.minimal.push_back({k, kk, dkp_minimal_polynomial_check(d.betas, k, metric)});
  }
  return d;
}

std::string to_json(const DkpCheck& d) {
  Json j;
  j["metric"] = d.algebra.metric;
  j["psi"] = d.betas.psi_layout;
  j["psibar"] = d.betas.psibar_layout;
  Json betas = Json::array();
  for (const auto& b : d.betas.beta) betas.push_back(matrix_json(b));
  j["beta"] = betas;
  Json failures = Json::array();
  for (const auto& f : d.algebra.standard_failures) failures.push_back(f.indices);
  j["standard"] = Json{{"relation", "b_m b_n b_l + b_l b_n b_m = g_mn b_l + g_ln b_m"},
                       {"total", d.algebra.standard_total},
                       {"passed", d.algebra.standard_passed},
                       {"failures", failures}};
  if (d.include_printed) {
    Json printed = Json::array();
    for (const auto& p : d.algebra.printed)
      printed.push_back(Json{{"relation", p.relation}, {"indices", p.indices}, {"holds", p.holds}});
    j["printed_relations"] = printed;
  }
  Json minimal = Json::array();
  for (const auto& m : d.minimal) {
    Json k = Json::array();
    for (const auto& x : m.k) k.push_back(to_string(x));
    minimal.push_back(Json{{"k", k}, {"k_dot_k", to_string(m.k_dot_k)}, {"holds", m.holds}});
  }
  j["minimal_polynomial"] = minimal;
  j["status"] = d.algebra.standard_ok() ? "PASS" : "FAIL";
  return j.dump(2) + "\n";
}

std::string to_text(const DkpCheck& d) {
  std::ostringstream os;
  os << "metric " << d.algebra.metric << "\n";
  os << "standard relation: " << d.algebra.standard_passed << "/" << d.algebra.standard_total << " triples pass\n";
  for (const auto& f : d.algebra.standard_failures) {
    os << "  fails at (" << f.indices[0] << "," << f.indices[1] << "," << f.indices[2] << ")\n";
  }
  if (d.include_printed) {
    std::string current;
    for (const auto& p : d.algebra.printed) {
      if (p.relation != current) {
        current = p.relation;
        os << current << ":\n";
      }
      os << "  (";
      for (std::size_t k = 0; k < p.indices.size(); ++k) os << (k ? "," : "") << p.indices[k];
      os << ") " << (p.holds ? "holds" : "fails") << "\n";
    }
  }
  for (const auto& m : d.minimal) {
    os << "(b.k)^3 = (k.k)(b.k) for k = (";
    for (std::size_t k = 0; k < 4; ++k) os << (k ? ", " : "") << to_string(m.k[k]);
    os << "), k.k = " << to_string(m.k_dot_k) << ": " << (m.holds ? "holds" : "fails") << "\n";
  }
  os << "status: " << (d.algebra.standard_ok() ? "PASS" : "FAIL") << "\n";
  return os.str();
}

std::vector<OperatorWord> parse_state_list(std::string_view text) {
  std::vector<OperatorWord> out;
  std::istringstream in{std::string(text)};
  std::string line;
  while (std::getline(in, line)) {
    if (const auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
    OperatorWord w = OperatorWord::parse(line);
    if (!w.symbols.empty()) out.push_back(std::move(w));
  }
  return out;
}

FockQuery run_fock(const RelationTable& table, const OperatorWord& word, const std::vector<OperatorWord>& gram_states) {
  FockQuery q{table, word, normal_order(word, table), {}, gram_states, std::nullopt};
  if (auto it = q.normal_ordered.find({}); it != q.normal_ordered.end()) q.vacuum_expectation = it->second;
  if (!gram_states.empty()) q.gram = gram_matrix(gram_states, table);
  return q;
}

std::string to_json(const FockQuery& q) {
  Json j;
  j["bracket"] = to_string(q.table.bracket());
  j["word"] = q.word.str();
  Json terms = Json::array();
  for (const auto& [w, c] : q.normal_ordered) {
    Json syms = Json::array();
    for (auto id : w) syms.push_back(q.table.symbol(id));
    terms.push_back(Json{{"coefficient", c.str()}, {"word", syms}});
  }
  j["normal_ordered"] = terms;
  j["vacuum_expectation"] = q.vacuum_expectation.str();
  if (q.gram) {
    Json states = Json::array();
    for (const auto& s : q.gram_states) states.push_back(s.str());
    j["gram"] = Json{{"states", states},
                     {"matrix", matrix_json(q.gram->matrix)},
                     {"signature", signature_json(q.gram->signature)}};
  } else {
    j["gram"] = nullptr;
  }
  return j.dump(2) + "\n";
}

std::string to_text(const FockQuery& q) {
  std::ostringstream os;
  os << "word: " << q.word.str() << "\n";
  os << "normal ordered: " << format_sum(q.normal_ordered, q.table) << "\n";
  os << "vacuum expectation: " << q.vacuum_expectation.str() << "\n";
  if (q.gram) {
    os << "gram matrix:\n";
    for (std::size_t r = 0; r < q.gram->matrix.rows(); ++r) {
      os << " ";
      for (std::size_t c = 0; c < q.gram->matrix.cols(); ++c) os << " " << q.gram->matrix(r, c).str();
      os << "\n";
    }
    const auto& s = q.gram->signature;
    os << "signature: (" << s.positive << ", " << s.negative << ", " << s.zero << ")\n";
  }
  return os.str();
}

}  // namespace spinstat
