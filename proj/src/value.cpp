#include "ordalg/value.hpp"

#include <cctype>
#include <limits>
#include <vector>

#include "ordalg/error.hpp"

namespace ordalg {

Value Value::top() {
  Value v;
  v.data_ = TopTag{};
  return v;
}

Value Value::integer(const BigInt& n) {
  Value v;
  if (n != 0) v.data_ = n;
  return v;
}

Value Value::real(const XReal& x) {
  Value v;
  if (!x.is_zero()) v.data_ = x;
  return v;
}

Value Value::pair(Value level, Value residue) {
  Value v;
  v.data_ = std::make_shared<const PairData>(PairData{std::move(level), std::move(residue)});
  return v;
}

Value Value::signed_value(bool negative, Value magnitude) {
  Value v;
  v.data_ = std::make_shared<const SignedData>(SignedData{negative, std::move(magnitude)});
  return v;
}

Value::Kind Value::kind() const { return static_cast<Kind>(data_.index()); }

const BigInt& Value::as_int() const {
  if (kind() != Kind::Int) fail(ErrorKind::Shape, "expected an integer, got " + str());
  return std::get<BigInt>(data_);
}

const XReal& Value::as_real() const {
  if (kind() != Kind::Real) fail(ErrorKind::Shape, "expected a real, got " + str());
  return std::get<XReal>(data_);
}

const Value& Value::first() const {
  if (kind() != Kind::Pair) fail(ErrorKind::Shape, "expected a pair, got " + str());
  return std::get<std::shared_ptr<const PairData>>(data_)->level;
}

const Value& Value::second() const {
  if (kind() != Kind::Pair) fail(ErrorKind::Shape, "expected a pair, got " + str());
  return std::get<std::shared_ptr<const PairData>>(data_)->residue;
}

bool Value::negative() const {
  if (kind() != Kind::Signed) fail(ErrorKind::Shape, "expected a signed value, got " + str());
  return std::get<std::shared_ptr<const SignedData>>(data_)->negative;
}

const Value& Value::magnitude() const {
  if (kind() != Kind::Signed) fail(ErrorKind::Shape, "expected a signed value, got " + str());
  return std::get<std::shared_ptr<const SignedData>>(data_)->magnitude;
}

std::string Value::str() const {
  switch (kind()) {
    case Kind::Zero: return "0";
    case Kind::Top: return "top";
    case Kind::Int: return std::get<BigInt>(data_).str();
    case Kind::Real: return std::get<XReal>(data_).str();
    case Kind::Pair: return "(" + first().str() + "," + second().str() + ")";
    case Kind::Signed: return (negative() ? "-" : "") + magnitude().str();
  }
  return "?";
}

bool operator==(const Value& a, const Value& b) {
  if (a.kind() != b.kind()) return false;
  switch (a.kind()) {
    case Value::Kind::Zero:
    case Value::Kind::Top: return true;
    case Value::Kind::Int: return a.as_int() == b.as_int();
    case Value::Kind::Real: return a.as_real() == b.as_real();
    case Value::Kind::Pair: return a.first() == b.first() && a.second() == b.second();
    case Value::Kind::Signed: return a.negative() == b.negative() && a.magnitude() == b.magnitude();
  }
  return false;
}

namespace {

std::string shape_msg(const StructDesc& d, const Value& v, const std::string& why) {
  return "value " + v.str() + " is not an element of " + d.str() + ": " + why;
}

// Returns an empty string when well-shaped, else the reason.
std::string shape_problem(const StructDesc& d, const Value& v) {
  using K = Value::Kind;
  if (v.is_zero()) return {};
  if (v.is_top()) return d.caps().has_top ? std::string{} : "top only exists in bar structures";
  switch (d.kind()) {
    case DescKind::Base:
      switch (d.base_kind()) {
        case BaseKind::N0:
          if (v.kind() != K::Int) return "expected a natural number";
          return v.as_int() > 0 ? std::string{} : "negative value in N0";
        case BaseKind::Z: return v.kind() == K::Int ? std::string{} : "expected an integer";
        case BaseKind::Rc: return v.kind() == K::Real ? std::string{} : "expected a value in [0,inf]";
        case BaseKind::Ro:
          if (v.kind() != K::Real) return "expected a value in [0,inf)";
          return v.as_real().is_inf() ? "inf is not in [0,inf)" : std::string{};
        case BaseKind::NBar0:
          if (v.kind() != K::Real) return "expected a value in N0 u {inf}";
          return (v.as_real().is_inf() || v.as_real().is_integer()) ? std::string{} : "non-integer value";
      }
      return "unknown base";
    case DescKind::SIns:
    case DescKind::Ins: {
      if (v.kind() != K::Pair) return "expected a pair";
      if (auto p = shape_problem(d.first(), v.first()); !p.empty()) return "level part: " + p;
      if (auto p = shape_problem(d.second(), v.second()); !p.empty()) return "residue part: " + p;
      if (d.kind() == DescKind::Ins && v.second().is_zero()) return "insertion removes the zero of the residue structure";
      if (d.kind() == DescKind::SIns && v.first().is_zero() && v.second().is_zero()) return "(0,0) must be written 0";
      return {};
    }
    case DescKind::Mixed: {
      if (v.kind() != K::Pair) return "expected a pair";
      if (v.first().kind() != K::Int && !v.first().is_zero()) return "expected an integer level";
      BigInt level = v.first().is_zero() ? BigInt(0) : v.first().as_int();
      if (level > BigInt(std::numeric_limits<long long>::max()) || level < BigInt(std::numeric_limits<long long>::min())) return "level out of range";
      auto b = d.mixed_at(level.convert_to<long long>());
      if (!b) return "level outside the mixed range";
      if (v.second().is_zero()) return "insertion removes the zero of the residue structure";
      if (auto p = shape_problem(*b, v.second()); !p.empty()) return "residue part: " + p;
      return {};
    }
    case DescKind::Double: {
      if (v.kind() != K::Signed) return "expected a signed value";
      if (v.magnitude().is_zero()) return "signed zero must be written 0";
      if (auto p = shape_problem(d.first(), v.magnitude()); !p.empty()) return p;
      return {};
    }
  }
  return "unknown descriptor";
}

// Untyped literal tree, shaped against a descriptor afterwards.
struct Lit {
  enum class Kind { Atom, Tuple, Sign } kind = Kind::Atom;
  std::string text;
  bool negative = false;
  std::vector<Lit> items;
  std::size_t pos = 0;
};

class LitParser {
 public:
  explicit LitParser(std::string_view text) : text_(text) {}

  Lit parse() {
    Lit l = parse_lit();
    skip_ws();
    if (pos_ != text_.size()) throw ParseError("unexpected trailing input in literal", pos_);
    return l;
  }

 private:
  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  Lit parse_lit() {
    skip_ws();
    Lit l;
    l.pos = pos_;
    if (pos_ >= text_.size()) throw ParseError("unexpected end of literal", pos_);
    char c = text_[pos_];
    if (c == '+' || c == '-') {
      ++pos_;
      l.kind = Lit::Kind::Sign;
      l.negative = c == '-';
      l.items.push_back(parse_lit());
      return l;
    }
    if (c == '(') {
      ++pos_;
      l.kind = Lit::Kind::Tuple;
      l.items.push_back(parse_lit());
      skip_ws();
      while (pos_ < text_.size() && text_[pos_] == ',') {
        ++pos_;
        l.items.push_back(parse_lit());
        skip_ws();
      }
      if (pos_ >= text_.size() || text_[pos_] != ')') throw ParseError("expected ')' in literal", pos_);
      ++pos_;
      if (l.items.size() < 2) throw ParseError("a tuple needs at least two entries", l.pos);
      return l;
    }
    std::size_t start = pos_;
    while (pos_ < text_.size() &&
           (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '/')) {
      ++pos_;
    }
    if (start == pos_) throw ParseError("unexpected character '" + std::string(1, c) + "' in literal", pos_);
    l.text = std::string(text_.substr(start, pos_ - start));
    return l;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

// (a,b,c,...) is read as (a,(b,c,...)).
Lit right_nest(const Lit& tuple, std::size_t from) {
  if (tuple.items.size() - from == 1) return tuple.items[from];
  Lit inner;
  inner.kind = Lit::Kind::Tuple;
  inner.pos = tuple.items[from].pos;
  inner.items.push_back(tuple.items[from]);
  inner.items.push_back(right_nest(tuple, from + 1));
  return inner;
}

// A well-formed literal that is not an element of the descriptor.
[[noreturn]] void shape_error(const std::string& what, std::size_t pos) {
  fail(ErrorKind::Shape, what + " at position " + std::to_string(pos));
}

Value shape(const StructDesc& d, const Lit& l);

Value shape_int(const Lit& l, bool allow_negative) {
  bool negative = false;
  const Lit* atom = &l;
  if (l.kind == Lit::Kind::Sign) {
    negative = l.negative;
    atom = &l.items.front();
    if (negative && !allow_negative) shape_error("negative value not allowed here", l.pos);
  }
  if (atom->kind != Lit::Kind::Atom) shape_error("expected an integer", atom->pos);
  for (char c : atom->text) {
    if (!std::isdigit(static_cast<unsigned char>(c))) shape_error("expected an integer", atom->pos);
  }
  BigInt n(atom->text);
  return Value::integer(negative ? BigInt(-n) : n);
}

Value shape_real(const Lit& l) {
  const Lit* atom = &l;
  if (l.kind == Lit::Kind::Sign) {
    if (l.negative) shape_error("negative value not allowed here", l.pos);
    atom = &l.items.front();
  }
  if (atom->kind != Lit::Kind::Atom) shape_error("expected a number", atom->pos);
  try {
    return Value::real(XReal::parse(atom->text));
  } catch (const ParseError& e) {
    throw ParseError("malformed number '" + atom->text + "'", atom->pos + e.position());
  }
}

Value shape(const StructDesc& d, const Lit& l) {
  if (l.kind == Lit::Kind::Atom) {
    if (l.text == "0") return Value::zero();
    if (l.text == "top") {
      if (!d.caps().has_top) shape_error("'top' only exists in bar structures, not " + d.str(), l.pos);
      return Value::top();
    }
  }
  Value v;
  switch (d.kind()) {
    case DescKind::Base:
      switch (d.base_kind()) {
        case BaseKind::N0: v = shape_int(l, false); break;
        case BaseKind::Z: v = shape_int(l, true); break;
        default: v = shape_real(l); break;
      }
      break;
    case DescKind::SIns:
    case DescKind::Ins:
    case DescKind::Mixed: {
      if (l.kind != Lit::Kind::Tuple) shape_error("expected a tuple for " + d.str(), l.pos);
      Value level = shape(d.kind() == DescKind::Mixed ? StructDesc::base(d.base_kind()) : d.first(), l.items[0]);
      Lit rest = right_nest(l, 1);
      StructDesc rd = d.kind() == DescKind::Mixed ? StructDesc::base(BaseKind::Rc) : d.second();
      if (d.kind() == DescKind::Mixed) {
        BigInt lv = level.is_zero() ? BigInt(0) : level.as_int();
        auto b = d.mixed_at(lv.convert_to<long long>());
        if (!b) shape_error("level " + lv.str() + " outside the mixed range", l.items[0].pos);
        rd = *b;
      }
      Value residue = shape(rd, rest);
      if (d.kind() == DescKind::SIns && level.is_zero() && residue.is_zero()) return Value::zero();
      v = Value::pair(std::move(level), std::move(residue));
      break;
    }
    case DescKind::Double: {
      if (l.kind == Lit::Kind::Sign) {
        Value m = shape(d.first(), l.items.front());
        if (m.is_zero()) return Value::zero();
        v = Value::signed_value(l.negative, std::move(m));
      } else {
        Value m = shape(d.first(), l);
        if (m.is_zero()) return Value::zero();
        v = Value::signed_value(false, std::move(m));
      }
      break;
    }
  }
  if (auto p = shape_problem(d, v); !p.empty()) shape_error(shape_msg(d, v, p), l.pos);
  return v;
}

}  // namespace

void check_shape(const StructDesc& d, const Value& v) {
  if (auto p = shape_problem(d, v); !p.empty()) fail(ErrorKind::Shape, shape_msg(d, v, p));
}

bool is_well_shaped(const StructDesc& d, const Value& v) { return shape_problem(d, v).empty(); }

Value parse_value(const StructDesc& d, std::string_view text) { return shape(d, LitParser(text).parse()); }

}  // namespace ordalg
