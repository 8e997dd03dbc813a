#pragma once

#include <map>
#include <string>
#include <vector>

#include "ordalg/integrate.hpp"
#include "ordalg/measure.hpp"

namespace ordalg {

using LevelTuple = std::vector<long long>;

/// (i1, ..., in) of a nonzero element of P or Pn.
LevelTuple level_tuple(const Value& x);

struct ProbabilityReport {
  int n = 1;  ///< P = Pn(1)
  /// Residue mass of X_j, the union of atoms whose value has level j.
  std::map<LevelTuple, XReal> level_mass;
  bool empty_is_zero = false;  ///< (i) nu(empty) = 0
  bool unit_masses = false;    ///< (ii) for P: R(nu(X_j)) = 1; for Pn: levels <= 0 and masses <= 1
  bool additive = false;       ///< (iii) finite additivity over atoms
  bool finite_depth = false;   ///< (iv) for P: finitely many levels; for Pn: no gaps
  bool standard = false;       ///< levels fill -d..0 without gaps (P only)
  std::vector<std::string> problems;

  bool ok() const { return empty_is_zero && unit_masses && additive && finite_depth; }
};

/// Checks the probability conditions for a measure in P or Pn (n <= 3).
ProbabilityReport validate_probability(const LMeasure& m);

struct StandardForm {
  LMeasure measure;
  long long depth = 0;  ///< total depth d: levels run over -d..0
};

/// Align interior gaps, then shift the top level to 0. P only; the measure
/// must satisfy the probability conditions.
StandardForm standardize(const LMeasure& m);

/// -L(nu(E)) on a standard P-measure.
long long depth(const LMeasure& m, const Event& e);

/// nu(A & B) / nu(B).
Value cond_prob(const LMeasure& m, const Event& a, const Event& b);

/// nu(A) / nu(X).
Value prob(const LMeasure& m, const Event& a);

struct BayesRow {
  std::string name;
  Value prior;       ///< P(A_j)
  Value likelihood;  ///< P(B | A_j)
  Value joint;       ///< P(B | A_j) P(A_j)
  Value posterior;   ///< joint / P(B)
  Value direct;      ///< P(A_j | B) computed directly
};

struct BayesTable {
  std::vector<BayesRow> rows;
  Value total;           ///< sum of the joints
  Value direct_total;    ///< P(B) computed directly
  bool consistent = false;  ///< posteriors and total agree with the direct values
};

/// Bayes' formula over a partition of the atom space. Validation error if the
/// cells overlap or miss atoms; Domain error on a cell or B of measure 0.
BayesTable bayes(const LMeasure& m, const std::vector<std::pair<std::string, Event>>& partition, const Event& b);

/// nu(a) = f(a) mu(a), renormalised so every level has residue mass 1, then
/// standardised. f lives in mu's structure; a product with an inf residue or top
/// is NotRepresentable since it is not an element of P.
StandardForm normalize_from_density(const LMeasure& mu, const LFunction& f);

}  // namespace ordalg
