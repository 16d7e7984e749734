#include "spinstat/theory.hpp"

#include "spinstat/matrix_io.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>

namespace spinstat {

std::string to_string(Statistics s) {
  switch (s) {
    case Statistics::Auto: return "auto";
    case Statistics::Bose: return "bose";
    case Statistics::Fermi: return "fermi";
  }
  return "?";
}

std::string to_string(FlavorCoupling f) {
  return f == FlavorCoupling::Diagonal ? "diagonal" : "antisymmetric-pair";
}

std::string to_string(Variation v) {
  return v == Variation::Standard ? "standard" : "linear-combination";
}

ParseError::ParseError(std::size_t line, std::size_t column, const std::string& msg)
    : std::runtime_error("line " + std::to_string(line) + ", column " + std::to_string(column) +
                         ": " + msg),
      line_(line),
      column_(column),
      detail_(msg) {}

std::size_t TheorySpec::dim() const {
  std::size_t d = 0;
  for (const auto& f : fields) d += f.dim();
  return d;
}

std::vector<std::size_t> TheorySpec::offsets() const {
  std::vector<std::size_t> out;
  std::size_t d = 0;
  for (const auto& f : fields) {
    out.push_back(d);
    d += f.dim();
  }
  return out;
}

namespace {

struct Token {
  std::string_view text;
  std::size_t column;  // 1-based
};

std::vector<Token> tokenize(std::string_view line) {
  std::vector<Token> out;
  std::size_t k = 0;
  while (k < line.size()) {
    while (k < line.size() && std::isspace(static_cast<unsigned char>(line[k]))) ++k;
    if (k >= line.size()) break;
    const std::size_t start = k;
    while (k < line.size() && !std::isspace(static_cast<unsigned char>(line[k]))) ++k;
    out.push_back({line.substr(start, k - start), start + 1});
  }
  return out;
}

bool is_identifier(std::string_view s) {
  if (s.empty() || !(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_')) return false;
  return std::all_of(s.begin(), s.end(), [](char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '-';
  });
}

std::size_t parse_count(std::string_view v, std::size_t line, std::size_t col,
                        std::string_view key) {
  std::size_t n = 0;
  const auto [ptr, ec] = std::from_chars(v.data(), v.data() + v.size(), n);
  if (v.empty() || ec != std::errc() || ptr != v.data() + v.size() || n == 0) {
    throw ParseError(line, col, std::string(key) + " must be a positive integer, got '" +
                                    std::string(v) + "'");
  }
  return n;
}

FieldSpec parse_field(const std::vector<Token>& toks, std::size_t line) {
  if (toks.size() < 2) throw ParseError(line, toks[0].column, "field needs a name");
  FieldSpec f;
  if (!is_identifier(toks[1].text)) {
    throw ParseError(line, toks[1].column, "invalid field name '" + std::string(toks[1].text) + "'");
  }
  f.name = toks[1].text;
  std::set<std::string_view> seen;
  bool have_spin = false;
  for (std::size_t k = 2; k < toks.size(); ++k) {
    const auto& t = toks[k];
    const auto eq = t.text.find('=');
    if (eq == std::string_view::npos || eq == 0) {
      throw ParseError(line, t.column, "expected key=value, got '" + std::string(t.text) + "'");
    }
    const std::string_view key = t.text.substr(0, eq);
    const std::string_view val = t.text.substr(eq + 1);
    const std::size_t vcol = t.column + eq + 1;
    if (!seen.insert(key).second) {
      throw ParseError(line, t.column, "duplicate key '" + std::string(key) + "'");
    }
    if (key == "spin") {
      try {
        f.spin = SpinLabel::parse(val);
      } catch (const FormatError&) {
        throw ParseError(line, vcol, "spin must be an integer or n/2, got '" + std::string(val) + "'");
      }
      if (f.spin.two_j > kMaxTwoJ) {
        throw ParseError(line, vcol, "unsupported spin " + f.spin.str() + " (2j must be at most " +
                                         std::to_string(kMaxTwoJ) + ")");
      }
      have_spin = true;
    } else if (key == "flavors") {
      f.flavors = parse_count(val, line, vcol, key);
    } else if (key == "copies") {
      f.copies = parse_count(val, line, vcol, key);
    } else if (key == "hermitian") {
      if (val == "true") {
        f.hermitian = true;
      } else if (val == "false") {
        throw ParseError(line, vcol,
                         "field '" + f.name +
                             "' is not hermitian; the analysis needs hermitian components "
                             "(a field built from creation or annihilation parts alone fails "
                             "the Kirchoff check)");
      } else {
        throw ParseError(line, vcol, "hermitian must be true or false");
      }
    } else if (key == "statistics") {
      if (val == "auto") f.statistics = Statistics::Auto;
      else if (val == "bose") f.statistics = Statistics::Bose;
      else if (val == "fermi") f.statistics = Statistics::Fermi;
      else throw ParseError(line, vcol, "statistics must be auto, bose or fermi");
    } else if (key == "variation") {
      if (val == "standard") f.variation = Variation::Standard;
      else if (val == "linear-combination") f.variation = Variation::LinearCombination;
      else throw ParseError(line, vcol, "variation must be standard or linear-combination");
    } else {
      throw ParseError(line, t.column, "unknown key '" + std::string(key) + "'");
    }
  }
  if (!have_spin) throw ParseError(line, toks[0].column, "field '" + f.name + "' needs spin=");
  return f;
}

}  // namespace

TheorySpec parse_theory(std::string_view text, const std::string& base_dir) {
  TheorySpec spec;
  bool have_theory = false;
  bool have_kinematic = false;
  bool have_flavor = false;
  std::size_t kin_line = 0, kin_col = 0, flavor_line = 0, flavor_col = 0;
  std::set<std::string> names;

  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t nl = text.find('\n', pos);
    std::string_view line = text.substr(pos, nl == std::string_view::npos ? text.size() - pos : nl - pos);
    pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    const auto toks = tokenize(line);
    if (toks.empty()) continue;
    const std::string_view head = toks[0].text;

    if (head == "theory") {
      if (have_theory) throw ParseError(line_no, toks[0].column, "duplicate theory line");
      if (toks.size() < 2) throw ParseError(line_no, toks[0].column, "theory needs a name");
      const std::size_t start = toks[1].column - 1;
      std::string_view name = line.substr(start);
      while (!name.empty() && std::isspace(static_cast<unsigned char>(name.back()))) name.remove_suffix(1);
      spec.name = name;
      have_theory = true;
    } else if (head == "field") {
      FieldSpec f = parse_field(toks, line_no);
      if (!names.insert(f.name).second) {
        throw ParseError(line_no, toks[1].column, "duplicate field name '" + f.name + "'");
      }
      spec.fields.push_back(std::move(f));
    } else if (head == "kinematic") {
      if (have_kinematic) throw ParseError(line_no, toks[0].column, "duplicate kinematic line");
      have_kinematic = true;
      kin_line = line_no;
      if (toks.size() == 2 && toks[1].text == "auto") {
        spec.kinematic = KinematicMode::Auto;
      } else if (toks.size() == 3 && toks[1].text == "explicit") {
        spec.kinematic = KinematicMode::Explicit;
        spec.explicit_path = toks[2].text;
        kin_col = toks[2].column;
      } else {
        throw ParseError(line_no, toks.size() > 1 ? toks[1].column : toks[0].column,
                         "expected 'kinematic auto' or 'kinematic explicit <path>'");
      }
    } else if (head == "flavor") {
      if (have_flavor) throw ParseError(line_no, toks[0].column, "duplicate flavor line");
      have_flavor = true;
      flavor_line = line_no;
      flavor_col = toks[0].column;
      if (toks.size() == 2 && toks[1].text == "diagonal") {
        spec.flavor = FlavorCoupling::Diagonal;
      } else if (toks.size() == 2 && toks[1].text == "antisymmetric-pair") {
        spec.flavor = FlavorCoupling::AntisymmetricPair;
      } else {
        throw ParseError(line_no, toks.size() > 1 ? toks[1].column : toks[0].column,
                         "expected 'flavor diagonal' or 'flavor antisymmetric-pair'");
      }
    } else {
      throw ParseError(line_no, toks[0].column, "unknown directive '" + std::string(head) + "'");
    }
  }

  if (!have_theory) throw ParseError(1, 1, "missing 'theory <name>' line");
  if (spec.fields.empty()) throw ParseError(line_no, 1, "theory declares no fields");
  if (spec.flavor == FlavorCoupling::AntisymmetricPair) {
    for (const auto& f : spec.fields) {
      if (f.flavors != 2) {
        throw ParseError(flavor_line, flavor_col,
                         "flavor antisymmetric-pair needs flavors=2 on every field; '" + f.name +
                             "' has " + std::to_string(f.flavors));
      }
    }
  }
  if (spec.dim() > kMaxIndexSpace) {
    throw ParseError(line_no, 1, "index space of dimension " + std::to_string(spec.dim()) +
                                     " exceeds the limit of " + std::to_string(kMaxIndexSpace));
  }
  if (spec.kinematic == KinematicMode::Explicit) {
    std::filesystem::path p(spec.explicit_path);
    if (p.is_relative() && !base_dir.empty()) p = std::filesystem::path(base_dir) / p;
    ExactMatrix m;
    try {
      m = read_matrix_file(p.string());
    } catch (const FormatError& e) {
      throw ParseError(kin_line, kin_col, e.what());
    } catch (const std::runtime_error& e) {
      throw ParseError(kin_line, kin_col, e.what());
    }
    if (m.rows() != spec.dim() || m.cols() != spec.dim()) {
      throw ParseError(kin_line, kin_col,
                       "explicit kinematic matrix is " + std::to_string(m.rows()) + "x" +
                           std::to_string(m.cols()) + " but the index space has dimension " +
                           std::to_string(spec.dim()));
    }
    spec.explicit_matrix = std::move(m);
  }
  return spec;
}

TheorySpec parse_theory_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open spec file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_theory(buf.str(), std::filesystem::path(path).parent_path().string());
}

std::string serialize(const TheorySpec& spec) {
  std::ostringstream os;
  os << "theory " << spec.name << "\n";
  for (const auto& f : spec.fields) {
    os << "field " << f.name << " spin=" << f.spin.str() << " flavors=" << f.flavors
       << " copies=" << f.copies << " hermitian=" << (f.hermitian ? "true" : "false")
       << " statistics=" << to_string(f.statistics);
    if (f.variation != Variation::Standard) os << " variation=" << to_string(f.variation);
    os << "\n";
  }
  if (spec.kinematic == KinematicMode::Auto) {
    os << "kinematic auto\n";
  } else {
    os << "kinematic explicit " << spec.explicit_path << "\n";
  }
  os << "flavor " << to_string(spec.flavor) << "\n";
  return os.str();
}

std::vector<IndexLabel> index_map(const TheorySpec& spec) {
  std::vector<IndexLabel> out;
  for (std::size_t fi = 0; fi < spec.fields.size(); ++fi) {
    const auto& f = spec.fields[fi];
    for (std::size_t a = 1; a <= f.flavors; ++a)
      for (std::size_t c = 1; c <= f.copies; ++c)
        for (std::size_t r = 1; r <= f.component_dim(); ++r) out.push_back({fi, a, c, r});
  }
  return out;
}

RepGenerators field_generators(const FieldSpec& field) {
  return replicate(hermitian_basis(field.spin).generators, field.flavors * field.copies);
}

RepGenerators theory_generators(const TheorySpec& spec) {
  std::vector<RepGenerators> parts;
  for (const auto& f : spec.fields) parts.push_back(field_generators(f));
  return direct_sum(parts);
}

bool KinematicBuild::all_available() const {
  return std::all_of(fields.begin(), fields.end(), [](const FieldKinematic& f) { return f.available; });
}

KinematicBuild build_kinematic(const TheorySpec& spec) {
  KinematicBuild out;
  out.kinematic.index_map = index_map(spec);
  const std::size_t n = spec.dim();
  out.kinematic.matrix = ExactMatrix(n, n);
  const auto offsets = spec.offsets();

  for (std::size_t fi = 0; fi < spec.fields.size(); ++fi) {
    const FieldSpec& f = spec.fields[fi];
    const HermitianBasis hb = hermitian_basis(f.spin);
    FieldKinematic fk;
    // Invariant forms on c copies are M (x) B for any c x c matrix M and any
    // invariant B of one copy, so the dimensions follow from one copy.
    const FormSpace one = invariant_form_space(hb.generators);
    const std::size_t c = f.copies;
    const std::size_t csym = c * (c + 1) / 2;
    const std::size_t canti = c * (c - 1) / 2;
    fk.sym_dim = csym * one.sym_dim + canti * one.antisym_dim;
    fk.antisym_dim = csym * one.antisym_dim + canti * one.sym_dim;

    if (spec.kinematic == KinematicMode::Explicit) {
      if (spec.flavor == FlavorCoupling::AntisymmetricPair) {
        const std::size_t half = f.dim() / 2;
        fk.flavor_block = spec.explicit_matrix->block(offsets[fi], offsets[fi] + half, half, half);
      }
      out.fields.push_back(std::move(fk));
      continue;
    }

    ExactMatrix block;
    if (spec.flavor == FlavorCoupling::AntisymmetricPair) {
      const ExactMatrix& single = f.spin.is_integer() ? hb.metric : hb.form.matrix;
      const ExactMatrix kb = kron(ExactMatrix::identity(c), single);
      const std::size_t h = kb.rows();
      block = ExactMatrix(2 * h, 2 * h);
      block.set_block(0, h, kb);
      block.set_block(h, 0, -kb);
      fk.flavor_block = kb;
    } else {
      ExactMatrix copy_block;
      if (!f.spin.is_integer()) {
        copy_block = kron(ExactMatrix::identity(c), hb.metric);
      } else if (c >= 2) {
        ExactMatrix w(c, c);
        for (std::size_t p = 0; p + 1 < c; p += 2) {
          w(p, p + 1) = 1;
          w(p + 1, p) = -1;
        }
        copy_block = kron(w, hb.metric) * Scalar::i();
      } else {
        fk.available = false;
        fk.note = "no valid kinematic form; field doubling required (a single hermitian spin-" +
                  f.spin.str() + " multiplet has no antisymmetric invariant form)";
        copy_block = ExactMatrix(f.component_dim(), f.component_dim());
      }
      block = kron(ExactMatrix::identity(f.flavors), copy_block);
    }
    out.kinematic.matrix.set_block(offsets[fi], offsets[fi], block);
    out.fields.push_back(std::move(fk));
  }
  if (spec.kinematic == KinematicMode::Explicit) out.kinematic.matrix = *spec.explicit_matrix;
  return out;
}

}  // namespace spinstat
