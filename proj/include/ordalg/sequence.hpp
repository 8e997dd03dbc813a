#pragma once

#include <span>
#include <variant>
#include <vector>

#include "ordalg/structure.hpp"
#include "ordalg/value.hpp"

namespace ordalg {

/// Every later term equals `value`.
struct ConstantRepeat {
  Value value;
};

/// Terms (start + n*step, residue) for n = 0, 1, 2, ...; levels unbounded above.
struct LevelRamp {
  BigInt start;
  BigInt step;  ///< positive
  Value residue;
};

/// Terms (level, start + n*step) for n = 0, 1, 2, ...; residues unbounded in a
/// numeric residue structure while the level stays fixed.
struct ResidueRamp {
  Value level;
  XReal start;
  XReal step;  ///< positive and finite
};

/// A finitely described countable family: a finite head followed by an
/// optional infinite tail.
struct SeqGen {
  std::vector<Value> head;
  std::variant<std::monostate, ConstantRepeat, LevelRamp, ResidueRamp> tail;
};

/// Countable sum: the terms of maximal level M summed in the residue
/// structure. Unbounded levels give top in a bar structure and NotSummable
/// otherwise.
Value sum_sequence(const StructDesc& d, const SeqGen& s);

/// Finite sum (fold of add); 0 for an empty list.
Value sum_finite(const StructDesc& d, std::span<const Value> xs);

/// Least upper bound of a finite set: its maximum (0 for the empty set).
Value sup(const StructDesc& d, std::span<const Value> xs);

/// Least upper bound of a described countable set, following the case
/// analysis for lubs in an insertion: greatest level M, then the lub of the residues
/// at M. A residue ramp resolves to (M, greatest of B) when B has a greatest
/// element, to (M+1, least positive of B) when B has a least positive element,
/// and is NotRepresentable otherwise.
Value sup(const StructDesc& d, const SeqGen& s);

}  // namespace ordalg
