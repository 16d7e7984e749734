#pragma once

#include "spinstat/su2.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace spinstat {

enum class Statistics { Auto, Bose, Fermi };
enum class KinematicMode { Auto, Explicit };
enum class FlavorCoupling { Diagonal, AntisymmetricPair };
/// Standard: independent variations of each component. LinearCombination:
/// delta xi_r = sum_s eps_rs xi_s, which leads to para-statistics and is
/// recognized but not analyzed.
enum class Variation { Standard, LinearCombination };

std::string to_string(Statistics s);
std::string to_string(FlavorCoupling f);
std::string to_string(Variation v);

/// Spec-file error with a 1-based position.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, std::size_t column, const std::string& msg);
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }
  const std::string& detail() const { return detail_; }

 private:
  std::size_t line_;
  std::size_t column_;
  std::string detail_;
};

inline constexpr unsigned kMaxTwoJ = 8;
inline constexpr std::size_t kMaxIndexSpace = 128;

struct FieldSpec {
  std::string name;
  SpinLabel spin;
  std::size_t flavors = 1;
  std::size_t copies = 1;
  bool hermitian = true;
  Statistics statistics = Statistics::Auto;
  Variation variation = Variation::Standard;

  /// Components of one hermitian multiplet.
  std::size_t component_dim() const { return spin.hermitian_dim(); }
  std::size_t dim() const { return flavors * copies * component_dim(); }

  friend bool operator==(const FieldSpec&, const FieldSpec&) = default;
};

struct TheorySpec {
  std::string name;
  std::vector<FieldSpec> fields;
  KinematicMode kinematic = KinematicMode::Auto;
  std::string explicit_path;                   ///< as written in the spec
  std::optional<ExactMatrix> explicit_matrix;  ///< loaded when Explicit
  FlavorCoupling flavor = FlavorCoupling::Diagonal;

  std::size_t dim() const;
  /// First index of each field in the full index space.
  std::vector<std::size_t> offsets() const;

  friend bool operator==(const TheorySpec&, const TheorySpec&) = default;
};

/// Parses the line-oriented spec format. Relative explicit-matrix paths are
/// resolved against `base_dir` (the current directory when empty).
TheorySpec parse_theory(std::string_view text, const std::string& base_dir = "");
/// Reads and parses a file; throws std::runtime_error when unreadable.
TheorySpec parse_theory_file(const std::string& path);

/// Canonical text: one directive per line, every field key written out.
std::string serialize(const TheorySpec& spec);

/// One entry of the index map; flavor, copy and component are 1-based.
struct IndexLabel {
  std::size_t field = 0;
  std::size_t flavor = 1;
  std::size_t copy = 1;
  std::size_t component = 1;

  friend bool operator==(const IndexLabel&, const IndexLabel&) = default;
};

struct KinematicMatrix {
  ExactMatrix matrix;
  std::vector<IndexLabel> index_map;
};

/// Order: field, then flavor, then copy, then component.
std::vector<IndexLabel> index_map(const TheorySpec& spec);

/// Rotation generators on the full index space: each field carries its
/// hermitian-basis generators on every (flavor, copy) block.
RepGenerators theory_generators(const TheorySpec& spec);
/// Generators for one field's own index block.
RepGenerators field_generators(const FieldSpec& field);

struct FieldKinematic {
  bool available = true;
  std::string note;  ///< why no kinematic form exists, when !available
  /// Invariant-form space of one flavor's copy space.
  std::size_t sym_dim = 0;
  std::size_t antisym_dim = 0;
  /// Off-diagonal flavor block K_{1r,2s} for antisymmetric-pair coupling.
  std::optional<ExactMatrix> flavor_block;
};

struct KinematicBuild {
  KinematicMatrix kinematic;
  std::vector<FieldKinematic> fields;
  bool all_available() const;
};

/// Explicit mode wraps the given matrix. Auto mode builds, per field:
///   half-integer spin: kron(I_copies, metric), the symmetric invariant;
///   integer spin: i kron(W, metric) with W block-diagonal [[0,1],[-1,0]]
///     over copy pairs (a trailing odd copy gets zeros); one copy has no
///     antisymmetric invariant and is reported unavailable;
///   diagonal flavors: kron(I_flavors, copy block);
///   antisymmetric pair: [[0, B], [-B, 0]] with B the invariant of the
///     scalar product's own symmetry (metric or antisymmetric form).
KinematicBuild build_kinematic(const TheorySpec& spec);

}  // namespace spinstat
