#pragma once

#include <string>
#include <vector>

#include "ordalg/measure.hpp"

namespace ordalg {

/// Atomwise-constant function with values in a described structure.
struct LFunction {
  StructDesc desc = StructDesc::base(BaseKind::Rc);
  std::vector<Value> values;  ///< one per atom of the measure's space
};

/// sum_k (k, integral of f against nu_k) over A. On finite atom spaces the sum
/// is its top nonzero summand. Result in m.desc.
Value integrate_real(const LMeasure& m, const std::vector<XReal>& f, const Event& a);

/// sum_k (k,1) * integral over B_k of R(g), where B_k holds the atoms of B whose
/// g-value has level k. g must take values in m.desc (an insertion of N0/Z
/// over Rc or Ro); top values of g on atoms of positive measure give top.
Value integrate_lvalued(const LMeasure& m, const LFunction& g, const Event& b);

struct SignedIntegral {
  Value value;     ///< element of double(L)
  Value positive;  ///< P, the integral of f+
  Value negative;  ///< N, the integral of f-
  std::string rule;  ///< which case of the signed sum produced `value`
};

/// f takes values in double(L) with L = m.desc. Returns P + (-N) by the
/// mixed-sign rule.
SignedIntegral integrate_signed(const LMeasure& m, const LFunction& f, const Event& a);

}  // namespace ordalg
