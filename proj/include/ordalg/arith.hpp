#pragma once

#include <compare>
#include <vector>

#include "ordalg/structure.hpp"
#include "ordalg/value.hpp"

namespace ordalg {

/// Total order of d. Zero is least (except in Z, where it is the integer 0),
/// top is greatest, pairs compare lexicographically with the level first.
std::strong_ordering cmp(const StructDesc& d, const Value& x, const Value& y);

inline bool less(const StructDesc& d, const Value& x, const Value& y) { return cmp(d, x, y) < 0; }
inline bool less_equal(const StructDesc& d, const Value& x, const Value& y) { return cmp(d, x, y) <= 0; }
const Value& max_of(const StructDesc& d, const Value& x, const Value& y);

/// Level-dominant addition: the higher level wins, equal levels add residues.
Value add(const StructDesc& d, const Value& x, const Value& y);

/// Requires d.caps().is_semiring. Levels add in A, residues multiply in B.
Value mul(const StructDesc& d, const Value& x, const Value& y);

/// Multiplicative identity: 1 in a base, (0, one(B)) in an insertion.
Value one(const StructDesc& d);

/// Multiplicative inverse in a semifield (P, Pn, Ro).
Value inv(const StructDesc& d, const Value& x);
/// x * inv(y).
Value divide(const StructDesc& d, const Value& x, const Value& y);

/// True when x has a multiplicative inverse in the semiring d, e.g. (k,r)
/// with finite r > 0 in O.
bool is_unit(const StructDesc& d, const Value& x);
/// Inverse of a unit in any semiring; throws Domain for non-units.
Value unit_inverse(const StructDesc& d, const Value& x);

/// Level of a nonzero, non-top element (first component).
const Value& level(const Value& x);
/// Residue (second component); residue(0) = 0.
Value residue(const Value& x);

/// Build the element (g, s) of an insertion, applying the zero conventions:
/// (0,0) collapses to 0 under s-insertion; s = 0 is rejected under insertion.
Value make_element(const StructDesc& d, Value level, Value residue);

// --- doubles ---------------------------------------------------------------

/// Signed sum in double(L), L an insertion of N0 or Z with residues in Rc/Ro.
/// Mixed signs: the higher level wins; equal levels subtract residues; equal
/// magnitudes cancel to 0.
Value double_add(const StructDesc& d, const Value& x, const Value& y);
Value negate(const StructDesc& d, const Value& x);
/// +m as an element of double(L); 0 stays 0.
Value positive(const Value& magnitude);

// --- s-insertion reassociation ----------------------------------------------

/// For d = A \/ (B \/ C), the descriptor (A \/ B) \/ C.
StructDesc siv_assoc_target(const StructDesc& d);
/// psi((a,(b,c))) = ((a,b),c).
Value siv_assoc_iso(const StructDesc& d, const Value& x);
/// Inverse of psi, from (A \/ B) \/ C back to A \/ (B \/ C).
Value siv_assoc_iso_inverse(const StructDesc& target, const Value& x);

// --- vectors ----------------------------------------------------------------

struct OVector {
  StructDesc desc;
  std::vector<Value> entries;
};

/// lambda * w entrywise; (r,1) * w shifts every level by r.
OVector scalar_mul_vec(const Value& lambda, const OVector& w);
/// [(i1,inf), ..., (in,inf)].
bool is_lattice_point(const OVector& w);

}  // namespace ordalg
