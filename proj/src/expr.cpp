#include "ordalg/expr.hpp"

#include <cctype>
#include <vector>

#include "ordalg/arith.hpp"
#include "ordalg/error.hpp"
#include "ordalg/sequence.hpp"

namespace ordalg {

std::string EvalResult::str() const {
  if (value) return value->str();
  if (*order < 0) return "LT";
  if (*order > 0) return "GT";
  return "EQ";
}

namespace {

StructDesc component(const StructDesc& d, const Value& x, bool level_part) {
  switch (d.kind()) {
    case DescKind::SIns:
    case DescKind::Ins:
      return level_part ? d.first() : d.second();
    case DescKind::Mixed: {
      if (level_part) return StructDesc::base(d.base_kind());
      const Value& l = level(x);
      auto b = d.mixed_at(l.is_zero() ? 0 : l.as_int().convert_to<long long>());
      if (!b) fail(ErrorKind::Shape, "no residue structure at level " + l.str());
      return *b;
    }
    default:
      fail(ErrorKind::Capability, std::string(level_part ? "level" : "residue") + " needs an insertion, got " + d.str());
  }
}

using Tail = std::variant<std::monostate, ConstantRepeat, LevelRamp, ResidueRamp>;

class ExprParser {
 public:
  ExprParser(const StructDesc& d, std::string_view t) : d_(d), t_(t) {}

  EvalResult run() {
    EvalResult r = expr();
    skip();
    if (p_ != t_.size()) throw ParseError("unexpected input in expression", p_);
    return r;
  }

 private:
  void skip() {
    while (p_ < t_.size() && std::isspace(static_cast<unsigned char>(t_[p_]))) ++p_;
  }
  bool peek(char c) {
    skip();
    return p_ < t_.size() && t_[p_] == c;
  }
  bool eat(char c) {
    if (!peek(c)) return false;
    ++p_;
    return true;
  }
  void expect(char c) {
    if (!eat(c)) throw ParseError(std::string("expected '") + c + "'", p_);
  }

  static const Value& element(const EvalResult& r, std::size_t pos) {
    if (!r.value) throw ParseError("an ordering is not an element", pos);
    return *r.value;
  }
  static void same(const EvalResult& a, const EvalResult& b, std::size_t pos) {
    if (!(a.desc == b.desc)) {
      fail(ErrorKind::Shape, "operands live in " + a.desc.str() + " and " + b.desc.str() + " at position " + std::to_string(pos));
    }
  }

  EvalResult expr() {
    EvalResult acc = term();
    for (;;) {
      std::size_t at = (skip(), p_);
      if (!eat('+')) return acc;
      EvalResult rhs = term();
      same(acc, rhs, at);
      acc.value = add(acc.desc, element(acc, at), element(rhs, at));
    }
  }

  EvalResult term() {
    EvalResult acc = primary();
    for (;;) {
      std::size_t at = (skip(), p_);
      if (!eat('*')) return acc;
      EvalResult rhs = primary();
      same(acc, rhs, at);
      acc.value = mul(acc.desc, element(acc, at), element(rhs, at));
    }
  }

  // Extent of a literal starting at p_, or 0 when the text there is not one.
  std::size_t literal_extent() const {
    std::size_t q = p_;
    if (q < t_.size() && (t_[q] == '-' || t_[q] == '+')) ++q;
    if (q < t_.size() && t_[q] == '(') {
      // A tuple: balanced parentheses with a comma at depth 1.
      int depth = 0;
      bool comma = false;
      for (std::size_t i = q; i < t_.size(); ++i) {
        if (t_[i] == '(') ++depth;
        if (t_[i] == ')' && --depth == 0) return comma ? i + 1 - p_ : 0;
        if (t_[i] == ',' && depth == 1) comma = true;
      }
      return 0;
    }
    std::size_t e = q;
    while (e < t_.size() && (std::isalnum(static_cast<unsigned char>(t_[e])) || t_[e] == '/')) ++e;
    if (e == q) return 0;
    std::size_t f = e;
    while (f < t_.size() && std::isspace(static_cast<unsigned char>(t_[f]))) ++f;
    if (f < t_.size() && t_[f] == '(') return 0;  // a function call
    return e - p_;
  }

  Value literal_here() {
    skip();
    std::size_t n = literal_extent();
    if (n == 0) throw ParseError("expected an element literal", p_);
    std::size_t at = p_;
    p_ += n;
    try {
      return parse_value(d_, t_.substr(at, n));
    } catch (const ParseError& e) {
      throw ParseError("bad literal", at + e.position());
    }
  }

  EvalResult primary() {
    skip();
    if (literal_extent() > 0) return {d_, literal_here(), std::nullopt};
    if (eat('(')) {
      EvalResult r = expr();
      expect(')');
      return r;
    }
    std::size_t at = p_;
    while (p_ < t_.size() && std::isalpha(static_cast<unsigned char>(t_[p_]))) ++p_;
    std::string name(t_.substr(at, p_ - at));
    if (name.empty()) throw ParseError("expected an expression", at);
    expect('(');
    if (name == "inv") {
      EvalResult x = expr();
      expect(')');
      x.value = inv(x.desc, element(x, at));
      return x;
    }
    if (name == "cmp") {
      EvalResult x = expr();
      expect(',');
      EvalResult y = expr();
      expect(')');
      same(x, y, at);
      return {x.desc, std::nullopt, cmp(x.desc, element(x, at), element(y, at))};
    }
    if (name == "level" || name == "residue") {
      EvalResult x = expr();
      expect(')');
      const Value& v = element(x, at);
      StructDesc c = component(x.desc, v, name == "level");
      return {c, name == "level" ? level(v) : residue(v), std::nullopt};
    }
    if (name == "sum" || name == "sup") return aggregate(name == "sum", at);
    throw ParseError("unknown function '" + name + "'", at);
  }

  BigInt integer_arg() {
    Value v = literal_in(StructDesc::base(BaseKind::Z));
    return v.is_zero() ? BigInt(0) : v.as_int();
  }
  XReal real_arg() {
    Value v = literal_in(StructDesc::base(BaseKind::Rc));
    return v.is_zero() ? XReal() : v.as_real();
  }
  Value literal_in(const StructDesc& d) {
    skip();
    std::size_t n = literal_extent();
    if (n == 0) throw ParseError("expected a literal", p_);
    std::size_t at = p_;
    p_ += n;
    try {
      return parse_value(d, t_.substr(at, n));
    } catch (const ParseError& e) {
      throw ParseError("bad literal", at + e.position());
    }
  }

  // Parses a tail constructor if one starts here.
  bool tail(Tail& out) {
    skip();
    std::size_t at = p_;
    std::size_t e = p_;
    while (e < t_.size() && std::isalpha(static_cast<unsigned char>(t_[e]))) ++e;
    std::string name(t_.substr(at, e - at));
    if (name != "repeat" && name != "levelramp" && name != "residueramp") return false;
    p_ = e;
    expect('(');
    if (name == "repeat") {
      EvalResult x = expr();
      same({d_, {}, {}}, x, at);
      out = ConstantRepeat{element(x, at)};
    } else if (name == "levelramp") {
      if (!d_.is_insertion() && d_.kind() != DescKind::Mixed) fail(ErrorKind::Capability, "levelramp needs a level structure");
      BigInt start = integer_arg();
      expect(',');
      BigInt step = integer_arg();
      expect(',');
      Value res = literal_in(d_.kind() == DescKind::Mixed ? *d_.mixed_at(start.convert_to<long long>()) : d_.second());
      out = LevelRamp{start, step, res};
    } else {
      if (!d_.is_insertion() && d_.kind() != DescKind::Mixed) fail(ErrorKind::Capability, "residueramp needs a level structure");
      Value lvl = literal_in(d_.kind() == DescKind::Mixed ? StructDesc::base(d_.base_kind()) : d_.first());
      expect(',');
      XReal start = real_arg();
      expect(',');
      XReal step = real_arg();
      out = ResidueRamp{lvl, start, step};
    }
    expect(')');
    return true;
  }

  EvalResult aggregate(bool is_sum, std::size_t at) {
    SeqGen s;
    if (!peek(')')) {
      for (;;) {
        if (!std::holds_alternative<std::monostate>(s.tail)) throw ParseError("the infinite tail must come last", p_);
        if (!tail(s.tail)) {
          EvalResult x = expr();
          same({d_, {}, {}}, x, at);
          s.head.push_back(element(x, at));
        }
        if (!eat(',')) break;
      }
    }
    expect(')');
    Value v = is_sum ? sum_sequence(d_, s) : sup(d_, s);
    return {d_, v, std::nullopt};
  }

  const StructDesc& d_;
  std::string_view t_;
  std::size_t p_ = 0;
};

}  // namespace

EvalResult evaluate(const StructDesc& d, std::string_view text) { return ExprParser(d, text).run(); }

}  // namespace ordalg
