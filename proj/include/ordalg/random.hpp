#pragma once

#include <random>

#include "ordalg/measure.hpp"
#include "ordalg/structure.hpp"
#include "ordalg/tree.hpp"
#include "ordalg/value.hpp"

namespace ordalg {

using Rng = std::mt19937_64;

/// Small ranges so that equal levels and equal residues occur often.
struct RandomSpec {
  int level_span = 2;   ///< Z levels in -span..span, N0 levels in 0..span
  int int_max = 4;      ///< N0 / Z base values
  int percent_zero = 8;
  int percent_inf = 8;  ///< inf residues where the structure has them
  int percent_top = 4;  ///< top where the structure has it
};

XReal random_xreal(Rng& rng, bool allow_inf, bool allow_zero, const RandomSpec& spec = {});
Value random_value(const StructDesc& d, Rng& rng, const RandomSpec& spec = {});
Value random_nonzero(const StructDesc& d, Rng& rng, const RandomSpec& spec = {});
/// A nonzero non-top element with finite residues all the way down.
Value random_finite(const StructDesc& d, Rng& rng, const RandomSpec& spec = {});
/// An invertible element of a semiring insertion (levels 0 when they are N0).
Value random_unit(const StructDesc& d, Rng& rng, const RandomSpec& spec = {});

/// One of the ordered semigroups N0, Rc, Ro, Nbar0.
StructDesc random_semigroup_base(Rng& rng);

LMeasure random_measure(const StructDesc& d, std::size_t atoms, Rng& rng, const RandomSpec& spec = {});
/// Random probability P-measure: atoms at random levels, each level's
/// residues normalised to 1.
LMeasure random_probability(std::size_t atoms, Rng& rng);
/// Uniformly random labelled tree (random attachment) with nonzero edges.
LTree random_tree(const StructDesc& d, std::size_t nodes, Rng& rng, const RandomSpec& spec = {});

}  // namespace ordalg
