#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>

namespace ordalg {

enum class BaseKind { N0, Z, Rc, Ro, NBar0 };

/// Algebraic capabilities derived bottom-up when a descriptor is built.
struct Capabilities {
  bool is_group = false;      // ordered abelian group (only Z)
  bool is_semigroup = false;  // ordered abelian semigroup: 0 least, a + b >= b
  bool is_semiring = false;
  bool is_semifield = false;
  bool has_top = false;       // adjoined top element (bar structures)
  bool has_greatest = false;  // some greatest element exists (top, inf, ...)
  bool has_lub = false;       // every set bounded above has a least upper bound
  bool is_summable = false;   // every countable sum of positives evaluates
  bool bounded_sets_have_max = false;
  bool nonempty_sets_have_min = false;
  bool has_least_positive = false;
};

class StructDesc;

enum class DescKind { Base, SIns, Ins, Mixed, Double };

/// Immutable ordered-structure descriptor: a base, a (bar) s-insertion or
/// insertion of two descriptors, a mixed insertion over an integer level
/// range, or the signed double of a structure. Cheap to copy.
class StructDesc {
 public:
  struct Node;

  static StructDesc base(BaseKind kind);
  static StructDesc s_insert(const StructDesc& a, const StructDesc& b, bool bar = false);
  static StructDesc insert(const StructDesc& a, const StructDesc& b, bool bar = false);
  /// Mixed insertion over levels lo..hi of A; unlisted levels use `fallback`.
  static StructDesc mixed(BaseKind a, std::optional<long long> lo, std::optional<long long> hi,
                          std::map<long long, StructDesc> levels,
                          std::optional<StructDesc> fallback);
  static StructDesc double_of(const StructDesc& l);

  // Named structures.
  static StructDesc S();
  static StructDesc O();
  static StructDesc P();
  static StructDesc Obar();
  static StructDesc Sbar();
  static StructDesc Sn(int n);  ///< N0 b/\ (N0 b/\ ... Rc), n insertions
  static StructDesc On(int n);  ///< Z b/\ (Z b/\ ... Rc)
  static StructDesc Pn(int n);  ///< Z /\ (Z /\ ... Ro)

  DescKind kind() const;
  BaseKind base_kind() const;  ///< Base only; for Mixed, the level base
  bool bar() const;
  const StructDesc& first() const;   ///< A of an insertion, L of a double
  const StructDesc& second() const;  ///< B of an insertion

  // Mixed insertion accessors.
  std::optional<long long> mixed_lo() const;
  std::optional<long long> mixed_hi() const;
  /// Residue structure at `level`; nullopt when outside the range or unmapped.
  std::optional<StructDesc> mixed_at(long long level) const;

  const Capabilities& caps() const;
  bool is_insertion() const { return kind() == DescKind::SIns || kind() == DescKind::Ins; }
  /// Insertion whose level structure is the integers or N0.
  bool has_integer_levels() const;
  /// Right-nested Ins(Z|N0, Ins(Z|N0, ... base)) depth; 0 for a base.
  int nesting_depth() const;

  std::string str() const;
  friend bool operator==(const StructDesc& a, const StructDesc& b);

 private:
  explicit StructDesc(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

const char* base_name(BaseKind kind);

/// Parse the ASCII structure grammar, e.g. "Z /\ Rc", "(N0 \/ N0) /\ Rc",
/// "Pn(2)", "double(S)", "mixed(N0; 0..2; 0:Rc, 1:Rc, 2:Nbar0)".
StructDesc parse_struct(std::string_view text);

}  // namespace ordalg
