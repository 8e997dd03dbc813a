#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "ordalg/structure.hpp"
#include "ordalg/value.hpp"

namespace ordalg {

/// The structure operations the algebraic law suite exercises. Swapping one
/// for a broken variant must make a named law fail.
struct Ops {
  std::function<Value(const StructDesc&, const Value&, const Value&)> add;
  std::function<Value(const StructDesc&, const Value&, const Value&)> mul;
  std::function<std::strong_ordering(const StructDesc&, const Value&, const Value&)> cmp;
};

Ops default_ops();

struct LawResult {
  std::string suite;
  std::string law;
  std::uint64_t cases = 0;
  std::uint64_t failures = 0;
  std::string witness;  ///< first counterexample
};

struct SelfcheckReport {
  std::uint64_t seed = 0;
  std::uint64_t cases = 0;
  std::vector<LawResult> laws;
  bool ok() const;
};

/// The structures covered by the algebraic law suite.
std::vector<std::pair<std::string, StructDesc>> law_structures();

/// Algebraic laws for one semiring structure over `cases` seeded random triples.
std::vector<LawResult> structure_laws(const std::string& name, const StructDesc& d, std::uint64_t seed,
                                      std::uint64_t cases, const Ops& ops);

/// Every property suite: scalar laws, the structure laws, reassociation,
/// literal roundtrip, measures, integrals, probability, trees and weights.
/// Deterministic in (seed, cases); `cases` scales every suite (minimum 1).
SelfcheckReport run_selfcheck(std::uint64_t seed, std::uint64_t cases, const Ops& ops = default_ops());

}  // namespace ordalg
