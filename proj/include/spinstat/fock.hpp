#pragma once

// Symbolic creation/annihilation operator algebra over a declared table of
// elementary (anti)commutators. Symbols ending in "dag" are creators.

#include "spinstat/matrix.hpp"

#include <map>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <vector>

namespace spinstat {

enum class Bracket { Commutator, Anticommutator };
enum class OpKind { Annihilator, Creator };

std::string to_string(Bracket b);

/// True for names like "adag", "bdag" (ends in "dag", longer than "dag").
bool is_creator_symbol(std::string_view s);

struct OpGenerator {
  std::string symbol;
  OpKind kind = OpKind::Annihilator;
};

/// Elementary brackets between annihilators and creators. Brackets among
/// two annihilators or two creators are zero, as are unlisted pairs.
///
/// Text format, one directive per line, `#` starts a comment:
///   bracket = commutator | anticommutator
///   pair <annihilator> <creator> = <scalar>
///   generator <symbol>          (declares a symbol without a pair)
class RelationTable {
 public:
  explicit RelationTable(Bracket b = Bracket::Commutator) : bracket_(b) {}

  /// Throws FormatError naming the line.
  static RelationTable parse(std::string_view text);
  static RelationTable from_file(const std::string& path);

  /// Declares the symbol when new and returns its id.
  std::size_t declare(std::string_view symbol);
  /// Throws FormatError on kinds that are not (annihilator, creator) or on a
  /// conflicting repeated pair.
  void add_pair(std::string_view annihilator, std::string_view creator, const Scalar& value);

  Bracket bracket() const { return bracket_; }
  const std::vector<OpGenerator>& generators() const { return gens_; }
  std::optional<std::size_t> find(std::string_view symbol) const;
  /// Throws std::invalid_argument for an unknown symbol.
  std::size_t id(std::string_view symbol) const;
  OpKind kind(std::size_t id) const { return gens_[id].kind; }
  const std::string& symbol(std::size_t id) const { return gens_[id].symbol; }

  /// Value of [x, y] or {x, y} for an annihilator x and a creator y.
  Scalar value(std::size_t annihilator, std::size_t creator) const;

  /// Xdag <-> X when both are declared; otherwise the unique pairing
  /// partner (hermitian identification of a, bdag style presentations).
  /// Throws PreconditionError when no adjoint can be determined.
  std::size_t adjoint(std::size_t id) const;

  /// Canonical text of the table.
  std::string text() const;

 private:
  Bracket bracket_;
  std::vector<OpGenerator> gens_;
  std::map<std::string, std::size_t, std::less<>> index_;
  std::map<std::pair<std::size_t, std::size_t>, Scalar> values_;
};

struct OperatorWord {
  std::vector<std::string> symbols;
  Scalar coefficient{1};

  /// Whitespace-separated symbols.
  static OperatorWord parse(std::string_view text);
  std::string str() const;
};

/// Sum of words keyed by symbol ids; zero coefficients are dropped.
using OperatorSum = std::map<std::vector<std::size_t>, Scalar>;

/// Rewrites until every word has creators left of annihilators, each group
/// ordered by declaration. `rng` selects a random out-of-order adjacent pair
/// at each step; without it the leftmost pair is rewritten.
OperatorSum normal_order(const std::vector<std::size_t>& word, const Scalar& coef,
                         const RelationTable& table, std::mt19937* rng = nullptr);
OperatorSum normal_order(const OperatorWord& word, const RelationTable& table,
                         std::mt19937* rng = nullptr);

/// Coefficient of the empty word after normal ordering.
Scalar vacuum_expectation(const OperatorWord& word, const RelationTable& table);

/// Reversed word, each symbol replaced by its adjoint, coefficient conjugated.
OperatorWord adjoint(const OperatorWord& word, const RelationTable& table);

std::string format_sum(const OperatorSum& sum, const RelationTable& table);

struct Signature {
  std::size_t positive = 0;
  std::size_t negative = 0;
  std::size_t zero = 0;
  friend bool operator==(const Signature&, const Signature&) = default;
};

/// Inertia of a Hermitian matrix by exact congruence diagonalization.
/// Throws PreconditionError when the matrix is not Hermitian.
Signature hermitian_signature(const ExactMatrix& m);

struct GramResult {
  ExactMatrix matrix;
  Signature signature;
};

/// G_mn = <0| adjoint(w_m) w_n |0>. Every state must be a creator word.
GramResult gram_matrix(const std::vector<OperatorWord>& states, const RelationTable& table);

/// e^{-i(kx - wt)} carries annihilators, e^{+i(kx - wt)} creators.
enum class Phase { Negative, Positive };

struct ModeTerm {
  std::string symbol;
  OpKind kind = OpKind::Annihilator;
  std::string mode;  ///< discrete mode label
  Rational omega;    ///< positive; the 1/sqrt(2 omega) factor stays symbolic
  Phase phase = Phase::Negative;
};

struct ModeExpansion {
  std::string field;
  std::vector<ModeTerm> terms;
};

/// xi = a e^{-i..} + creator e^{+i..} on one mode; `creator` may equal
/// adjoint(a) (hermitian) or be a separate symbol (bdag).
ModeExpansion standard_expansion(const std::string& field, const std::string& annihilator,
                                 const std::string& creator, const std::string& mode = "k",
                                 const Rational& omega = 1);

}  // namespace spinstat
