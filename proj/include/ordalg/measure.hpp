#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include <boost/dynamic_bitset.hpp>

#include "ordalg/structure.hpp"
#include "ordalg/value.hpp"

namespace ordalg {

using Event = boost::dynamic_bitset<>;

/// Finite atom set with the full powerset as sigma-algebra, plus named events.
class AtomSpace {
 public:
  AtomSpace() = default;
  explicit AtomSpace(std::vector<std::string> atoms);

  std::size_t size() const { return atoms_.size(); }
  const std::vector<std::string>& atoms() const { return atoms_; }
  std::size_t index_of(const std::string& atom) const;  ///< Validation error if unknown

  Event none() const { return Event(atoms_.size()); }
  Event all() const { return ~none(); }
  Event from_atoms(const std::vector<std::string>& ids) const;

  void define_event(const std::string& name, const Event& e);
  const std::map<std::string, Event>& events() const { return events_; }
  /// A named event or a single atom id.
  Event event(const std::string& name) const;
  /// Event expression over names: `&` intersection, `|` union, `!` complement,
  /// parentheses; `X` is the whole space and `{}` the empty event.
  Event parse_event(const std::string& expr) const;

  std::vector<std::string> members(const Event& e) const;

 private:
  std::vector<std::string> atoms_;
  std::map<std::string, std::size_t> index_;
  std::map<std::string, Event> events_;
};

struct LMeasure {
  StructDesc desc;
  AtomSpace space;
  std::vector<Value> values;  ///< one per atom

  /// Checks shapes and sizes; throws Shape/Validation.
  LMeasure(StructDesc d, AtomSpace s, std::vector<Value> v);
};

Value measure_of(const LMeasure& m, const Event& e);

/// Integer level of a nonzero, non-top element of a structure with integer levels.
long long int_level(const Value& x);

/// nu_k(E): the residue at level k, inf above it, 0 below it. Requires an
/// insertion of N0/Z with residues in Rc or Ro.
XReal slice(const LMeasure& m, long long k, const Event& e);

/// Atomwise slices over the level window lo..hi.
struct SliceTable {
  long long lo = 0;
  long long hi = -1;
  std::map<long long, std::vector<XReal>> rows;
};

/// The window min..max+1 of the attained atom levels: one level above the top
/// so that an (i, inf) atom is distinguishable from a higher one.
SliceTable slice_table(const LMeasure& m);

/// Inverse of slice_table: each atom gets (j, nu_j) for the largest j with
/// nu_j > 0. Throws Validation when a level below j is not inf or when the top
/// row of the window carries inf (the atom's level is then undetermined).
LMeasure recover_from_slices(const StructDesc& d, const AtomSpace& space, const SliceTable& t);

/// Attained levels of the nonzero, non-top atoms, ascending.
std::vector<long long> attained_levels(const LMeasure& m);

struct Height {
  bool infinite = false;
  long long value = 0;
};
/// max - min + 1 over attained levels; infinite when some atom is top. Domain
/// error for the zero measure.
Height total_height(const LMeasure& m);

/// Closes interior gaps between attained levels by moving every level above a
/// gap down; the lowest attained level stays put.
LMeasure align_levels(const LMeasure& m);
bool is_proximal(const LMeasure& m);

/// Multiply every atom by (k, 1), i.e. add k to every level.
LMeasure shift_levels(const LMeasure& m, long long k);

// --- the open-graded example on [0, inf] ---------------------------------------

/// Interval of (0, inf] at one level. lo == hi with both ends closed is a point.
struct GradedPiece {
  long long level = 0;
  XReal lo, hi;
  bool lo_closed = false;
  bool hi_closed = false;
};

/// A Borel set of the picture {0} u (Z x (0,inf]) u {top}: finitely many
/// interval pieces, optionally every level <= head_below and every level
/// >= tail_from in full, plus the two end points.
struct GradedIntervalSet {
  std::vector<GradedPiece> pieces;
  std::optional<long long> head_below;
  std::optional<long long> tail_from;
  bool has_zero = false;
  bool has_top = false;
};

/// (j, length of the level-j part) for the largest j of positive length; 0
/// when every level has length 0; top when lengths are positive on unboundedly
/// many levels. Value of Obar.
Value open_graded_measure(const GradedIntervalSet& e);

/// Order-topology openness of a set in the picture of Obar.
bool is_open(const GradedIntervalSet& e);

/// Union of the members of `family` with measure < (k, inf) or 0.
GradedIntervalSet sublevel_union(const std::vector<GradedIntervalSet>& family, long long k);

/// The open-graded property at level k for the canonical measure: the union of
/// all Borel sets below (k, inf) or of measure 0 is open. Every singleton is
/// measured (it is 0), so the union is computed over the level window
/// k-2..k+2 and the check reports its openness.
bool verify_open_graded(long long k);

}  // namespace ordalg
