#pragma once

#include <memory>
#include <string>
#include <string_view>
#include <variant>

#include "ordalg/structure.hpp"
#include "ordalg/xreal.hpp"

namespace ordalg {

/// An element of some described structure. Values carry no descriptor; every
/// operation takes the descriptor alongside. The additive identity of every
/// structure (0 in a base, (0,0) in an s-insertion, the adjoined 0 of an
/// insertion) is represented by the single `Zero` alternative.
class Value {
 public:
  enum class Kind { Zero, Top, Int, Real, Pair, Signed };

  Value() = default;

  static Value zero() { return Value(); }
  static Value top();
  static Value integer(const BigInt& n);  ///< 0 becomes Zero
  static Value integer(long long n) { return integer(BigInt(n)); }
  static Value real(const XReal& x);      ///< 0 becomes Zero
  static Value pair(Value level, Value residue);
  static Value signed_value(bool negative, Value magnitude);

  Kind kind() const;
  bool is_zero() const { return kind() == Kind::Zero; }
  bool is_top() const { return kind() == Kind::Top; }

  const BigInt& as_int() const;
  const XReal& as_real() const;
  const Value& first() const;
  const Value& second() const;
  bool negative() const;
  const Value& magnitude() const;

  /// Canonical literal; parse_value(d, v.str()) == v for well-shaped v.
  std::string str() const;

  friend bool operator==(const Value& a, const Value& b);

 private:
  struct TopTag {
    bool operator==(const TopTag&) const = default;
  };
  struct ZeroTag {
    bool operator==(const ZeroTag&) const = default;
  };
  struct PairData;
  struct SignedData;

  using Storage = std::variant<ZeroTag, TopTag, BigInt, XReal, std::shared_ptr<const PairData>,
                               std::shared_ptr<const SignedData>>;
  Storage data_;
};

struct Value::PairData {
  Value level, residue;
};
struct Value::SignedData {
  bool negative;
  Value magnitude;
};

/// Throws ErrorKind::Shape unless v is a well-formed element of d.
void check_shape(const StructDesc& d, const Value& v);
bool is_well_shaped(const StructDesc& d, const Value& v);

/// Parse an element literal against a descriptor. Accepts `0`, `top`, `inf`,
/// integers, `p/q`, nested tuples `(a,b)`, and `+x`/`-x` under double(L).
/// A tuple with more than two entries is read right-nested: (a,b,c) = (a,(b,c)).
Value parse_value(const StructDesc& d, std::string_view text);

}  // namespace ordalg
