#pragma once

#include <map>
#include <string>
#include <vector>

#include "ordalg/prob.hpp"
#include "ordalg/structure.hpp"
#include "ordalg/value.hpp"

namespace ordalg {

/// One end of a sector: `end` is "start" or "end".
struct SectorEnd {
  std::string sector;
  std::string end;
  friend auto operator<=>(const SectorEnd&, const SectorEnd&) = default;
};

struct Switch {
  std::vector<SectorEnd> side1, side2;
};

struct BranchedGraph {
  std::vector<std::string> sectors;
  std::vector<Switch> switches;

  /// Unknown sectors or end tags, empty sides, or a sector-end used twice.
  void validate() const;
};

struct WeightSystem {
  StructDesc desc = StructDesc::P();  ///< a semiring
  std::map<std::string, Value> weight;
};

struct Crossing {
  SectorEnd at;
  Value multiplier;
};

/// Multipliers attached to sector-ends; ends without a crossing carry one(desc).
struct Cocycle {
  std::vector<Crossing> crossings;

  Value multiplier(const StructDesc& d, const SectorEnd& at) const;
};

struct SwitchReport {
  Value side1, side2;
  bool balanced = false;
};

struct BranchReport {
  std::vector<SwitchReport> switches;
  bool ok = false;
};

/// At every switch compares sum(multiplier * weight) over the two sides.
BranchReport check_branch_equations(const BranchedGraph& g, const WeightSystem& w, const Cocycle& c);

/// Every weight times lambda; lambda must be a unit of w.desc.
WeightSystem apply_deck(const WeightSystem& w, const Value& lambda);

struct CocyclePart {
  SectorEnd at;
  LevelTuple level_shift;  ///< phi_1 (n components for Pn)
  XReal stretch;           ///< phi_2
};

/// Splits each multiplier of P or Pn into its level shift and stretch.
std::vector<CocyclePart> cocycle_split(const StructDesc& d, const Cocycle& c);
/// (level_shift, stretch) back into an element of d.
Value cocycle_join(const StructDesc& d, const CocyclePart& part);

/// Divides the weight of `sector` by the unit u and multiplies the multiplier
/// of each of its ends by u; the switch sums stay the same.
void gauge_move(const BranchedGraph& g, WeightSystem& w, Cocycle& c, const std::string& sector, const Value& u);

}  // namespace ordalg
