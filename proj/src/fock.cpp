#include "spinstat/fock.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>

namespace spinstat {

std::string to_string(Bracket b) { return b == Bracket::Commutator ? "commutator" : "anticommutator"; }

bool is_creator_symbol(std::string_view s) { return s.size() > 3 && s.substr(s.size() - 3) == "dag"; }

namespace {

std::vector<std::string> split_words(std::string_view text) {
  std::vector<std::string> out;
  std::istringstream in{std::string(text)};
  std::string w;
  while (in >> w) out.push_back(w);
  return out;
}

bool valid_symbol(std::string_view s) {
  if (s.empty() || !std::isalpha(static_cast<unsigned char>(s[0]))) return false;
  return std::all_of(s.begin(), s.end(), [](char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
  });
}

}  // namespace

std::size_t RelationTable::declare(std::string_view symbol) {
  if (auto it = index_.find(symbol); it != index_.end()) return it->second;
  if (!valid_symbol(symbol)) throw FormatError("invalid operator symbol '" + std::string(symbol) + "'");
  const std::size_t id = gens_.size();
  gens_.push_back({std::string(symbol), is_creator_symbol(symbol) ? OpKind::Creator : OpKind::Annihilator});
  index_.emplace(std::string(symbol), id);
  return id;
}

void RelationTable::add_pair(std::string_view annihilator, std::string_view creator,
                             const Scalar& value) {
  if (is_creator_symbol(annihilator) || !is_creator_symbol(creator)) {
    throw FormatError("pair needs an annihilator then a creator, got '" + std::string(annihilator) +
                      "' and '" + std::string(creator) + "'");
  }
  const std::size_t a = declare(annihilator);
  const std::size_t c = declare(creator);
  const auto [it, inserted] = values_.emplace(std::make_pair(a, c), value);
  if (!inserted && !(it->second == value)) {
    throw FormatError("conflicting values for pair " + std::string(annihilator) + " " +
                      std::string(creator));
  }
}

RelationTable RelationTable::parse(std::string_view text) {
  RelationTable table;
  bool have_bracket = false;
  std::istringstream in{std::string(text)};
  std::string raw;
  std::size_t line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    if (const auto hash = raw.find('#'); hash != std::string::npos) raw.resize(hash);
    std::string spaced;
    for (char ch : raw) {
      if (ch == '=') spaced += " = ";
      else spaced += ch;
    }
    const auto toks = split_words(spaced);
    if (toks.empty()) continue;
    auto fail = [&](const std::string& msg) {
      throw FormatError("relation table line " + std::to_string(line_no) + ": " + msg);
    };
    try {
      if (toks[0] == "bracket") {
        if (toks.size() != 3 || toks[1] != "=") fail("expected 'bracket = commutator|anticommutator'");
        if (have_bracket) fail("duplicate bracket line");
        if (toks[2] == "commutator") table.bracket_ = Bracket::Commutator;
        else if (toks[2] == "anticommutator") table.bracket_ = Bracket::Anticommutator;
        else fail("unknown bracket '" + toks[2] + "'");
        have_bracket = true;
      } else if (toks[0] == "pair") {
        if (toks.size() != 5 || toks[3] != "=") fail("expected 'pair <A> <Bdag> = <scalar>'");
        table.add_pair(toks[1], toks[2], Scalar::parse(toks[4]));
      } else if (toks[0] == "generator") {
        if (toks.size() != 2) fail("expected 'generator <symbol>'");
        table.declare(toks[1]);
      } else {
        fail("unknown directive '" + toks[0] + "'");
      }
    } catch (const FormatError& e) {
      const std::string what = e.what();
      if (what.rfind("relation table line", 0) == 0) throw;
      fail(what);
    }
  }
  if (!have_bracket) throw FormatError("relation table has no 'bracket = ...' line");
  return table;
}

RelationTable RelationTable::from_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open relation table: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse(buf.str());
}

std::optional<std::size_t> RelationTable::find(std::string_view symbol) const {
  if (auto it = index_.find(symbol); it != index_.end()) return it->second;
  return std::nullopt;
}

std::size_t RelationTable::id(std::string_view symbol) const {
  if (auto f = find(symbol)) return *f;
  throw std::invalid_argument("unknown operator symbol '" + std::string(symbol) + "'");
}

Scalar RelationTable::value(std::size_t annihilator, std::size_t creator) const {
  if (auto it = values_.find({annihilator, creator}); it != values_.end()) return it->second;
  return {};
}

std::size_t RelationTable::adjoint(std::size_t id) const {
  const std::string& s = gens_[id].symbol;
  const bool creator = gens_[id].kind == OpKind::Creator;
  const std::string direct = creator ? s.substr(0, s.size() - 3) : s + "dag";
  if (auto d = find(direct)) return *d;
  std::optional<std::size_t> partner;
  std::size_t count = 0;
  for (const auto& [key, v] : values_) {
    const std::size_t mine = creator ? key.second : key.first;
    if (mine != id) continue;
    partner = creator ? key.first : key.second;
    ++count;
  }
  if (count != 1) {
    throw PreconditionError("no adjoint can be determined for '" + s + "'");
  }
  return *partner;
}

std::string RelationTable::text() const {
  std::ostringstream os;
  os << "bracket = " << to_string(bracket_) << "\n";
  std::vector<bool> paired(gens_.size(), false);
  for (const auto& [key, v] : values_) paired[key.first] = paired[key.second] = true;
  for (std::size_t k = 0; k < gens_.size(); ++k)
    if (!paired[k]) os << "generator " << gens_[k].symbol << "\n";
  for (const auto& [key, v] : values_)
    os << "pair " << gens_[key.first].symbol << " " << gens_[key.second].symbol << " = " << v.str()
       << "\n";
  return os.str();
}

OperatorWord OperatorWord::parse(std::string_view text) { return {split_words(text), Scalar(1)}; }

std::string OperatorWord::str() const {
  std::string out;
  for (const auto& s : symbols) {
    if (!out.empty()) out += ' ';
    out += s;
  }
  return out;
}

OperatorSum normal_order(const std::vector<std::size_t>& word, const Scalar& coef,
                         const RelationTable& table, std::mt19937* rng) {
  const bool fermi = table.bracket() == Bracket::Anticommutator;
  const Scalar eps = fermi ? Scalar(-1) : Scalar(1);
  auto out_of_order = [&](std::size_t x, std::size_t y) {
    const OpKind kx = table.kind(x);
    const OpKind ky = table.kind(y);
    if (kx != ky) return kx == OpKind::Annihilator;
    return x > y || (fermi && x == y);
  };
  auto accumulate = [](OperatorSum& sum, const std::vector<std::size_t>& w, const Scalar& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = sum.emplace(w, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) sum.erase(it);
    }
  };

  OperatorSum done;
  OperatorSum pending;
  accumulate(pending, word, coef);
  std::vector<std::size_t> candidates;
  while (!pending.empty()) {
    auto node = pending.extract(pending.begin());
    const std::vector<std::size_t>& w = node.key();
    const Scalar c = node.mapped();
    candidates.clear();
    for (std::size_t i = 0; i + 1 < w.size(); ++i)
      if (out_of_order(w[i], w[i + 1])) {
        candidates.push_back(i);
        if (rng == nullptr) break;
      }
    if (candidates.empty()) {
      accumulate(done, w, c);
      continue;
    }
    std::size_t i = candidates.front();
    if (rng != nullptr) {
      std::uniform_int_distribution<std::size_t> pick(0, candidates.size() - 1);
      i = candidates[pick(*rng)];
    }
    const std::size_t x = w[i];
    const std::size_t y = w[i + 1];
    if (x == y) continue;  // squared fermionic operator
    std::vector<std::size_t> swapped = w;
    std::swap(swapped[i], swapped[i + 1]);
    accumulate(pending, swapped, eps * c);
    if (table.kind(x) == OpKind::Annihilator && table.kind(y) == OpKind::Creator) {
      const Scalar v = table.value(x, y);
      if (!v.is_zero()) {
        std::vector<std::size_t> reduced;
        reduced.reserve(w.size() - 2);
        reduced.insert(reduced.end(), w.begin(), w.begin() + static_cast<std::ptrdiff_t>(i));
        reduced.insert(reduced.end(), w.begin() + static_cast<std::ptrdiff_t>(i) + 2, w.end());
        accumulate(pending, reduced, c * v);
      }
    }
  }
  return done;
}

OperatorSum normal_order(const OperatorWord& word, const RelationTable& table, std::mt19937* rng) {
  std::vector<std::size_t> ids;
  ids.reserve(word.symbols.size());
  for (const auto& s : word.symbols) ids.push_back(table.id(s));
  return normal_order(ids, word.coefficient, table, rng);
}

Scalar vacuum_expectation(const OperatorWord& word, const RelationTable& table) {
  const OperatorSum sum = normal_order(word, table);
  if (auto it = sum.find({}); it != sum.end()) return it->second;
  return {};
}

OperatorWord adjoint(const OperatorWord& word, const RelationTable& table) {
  OperatorWord out;
  out.coefficient = word.coefficient.conj();
  for (auto it = word.symbols.rbegin(); it != word.symbols.rend(); ++it)
    out.symbols.push_back(table.symbol(table.adjoint(table.id(*it))));
  return out;
}

std::string format_sum(const OperatorSum& sum, const RelationTable& table) {
  if (sum.empty()) return "0";
  std::string out;
  for (const auto& [w, c] : sum) {
    if (!out.empty()) out += " + ";
    out += "(" + c.str() + ")";
    for (auto id : w) out += " " + table.symbol(id);
  }
  return out;
}

Signature hermitian_signature(const ExactMatrix& m) {
  if (!m.is_square() || !(m == m.adjoint())) throw PreconditionError("matrix is not Hermitian");
  ExactMatrix g = m;
  Signature sig;
  std::vector<std::size_t> alive(g.rows());
  for (std::size_t k = 0; k < alive.size(); ++k) alive[k] = k;
  while (!alive.empty()) {
    std::optional<std::size_t> pivot;
    for (std::size_t p : alive)
      if (!g(p, p).is_zero()) {
        pivot = p;
        break;
      }
    if (!pivot) {
      // All diagonals vanish; make one nonzero with a congruence
      // column_k += t column_j, row_k += conj(t) row_j, t = conj(G_kj).
      std::optional<std::pair<std::size_t, std::size_t>> kj;
      for (std::size_t k : alive) {
        for (std::size_t j : alive)
          if (j != k && !g(k, j).is_zero()) {
            kj = {k, j};
            break;
          }
        if (kj) break;
      }
      if (!kj) {
        sig.zero += alive.size();
        break;
      }
      const auto [k, j] = *kj;
      const Scalar t = g(k, j).conj();
      for (std::size_t r : alive) g(r, k) += t * g(r, j);
      for (std::size_t c : alive) g(k, c) += t.conj() * g(j, c);
      pivot = k;
    }
    const std::size_t p = *pivot;
    const Scalar d = g(p, p);
    if (d.re() > 0) ++sig.positive;
    else ++sig.negative;
    alive.erase(std::find(alive.begin(), alive.end(), p));
    for (std::size_t r : alive) {
      if (g(r, p).is_zero()) continue;
      const Scalar f = g(r, p) / d;
      for (std::size_t c : alive) g(r, c) -= f * g(p, c);
    }
    for (std::size_t r : alive) g(r, p) = 0;
    for (std::size_t c : alive) g(p, c) = 0;
  }
  return sig;
}

GramResult gram_matrix(const std::vector<OperatorWord>& states, const RelationTable& table) {
  for (const auto& s : states)
    for (const auto& sym : s.symbols)
      if (table.kind(table.id(sym)) != OpKind::Creator) {
        throw PreconditionError("state '" + s.str() + "' contains the non-creator '" + sym + "'");
      }
  const std::size_t n = states.size();
  GramResult out{ExactMatrix(n, n), {}};
  for (std::size_t m = 0; m < n; ++m) {
    const OperatorWord bra = adjoint(states[m], table);
    for (std::size_t k = 0; k < n; ++k) {
      OperatorWord w = bra;
      w.symbols.insert(w.symbols.end(), states[k].symbols.begin(), states[k].symbols.end());
      w.coefficient = bra.coefficient * states[k].coefficient;
      out.matrix(m, k) = vacuum_expectation(w, table);
    }
  }
  out.signature = hermitian_signature(out.matrix);
  return out;
}

ModeExpansion standard_expansion(const std::string& field, const std::string& annihilator,
                                 const std::string& creator, const std::string& mode,
                                 const Rational& omega) {
  return {field,
          {{annihilator, OpKind::Annihilator, mode, omega, Phase::Negative},
           {creator, OpKind::Creator, mode, omega, Phase::Positive}}};
}

}  // namespace spinstat
