#include "ordalg/structure.hpp"

#include <cctype>
#include <sstream>
#include <vector>

#include "ordalg/error.hpp"

namespace ordalg {

struct StructDesc::Node {
  DescKind kind = DescKind::Base;
  BaseKind base = BaseKind::N0;
  bool bar = false;
  std::optional<StructDesc> a, b;
  std::optional<long long> lo, hi;
  std::map<long long, StructDesc> levels;
  std::optional<StructDesc> fallback;
  Capabilities caps;
};

const char* base_name(BaseKind kind) {
  switch (kind) {
    case BaseKind::N0: return "N0";
    case BaseKind::Z: return "Z";
    case BaseKind::Rc: return "Rc";
    case BaseKind::Ro: return "Ro";
    case BaseKind::NBar0: return "Nbar0";
  }
  return "?";
}

namespace {

Capabilities base_caps(BaseKind kind) {
  Capabilities c;
  switch (kind) {
    case BaseKind::N0:
      c.is_semigroup = c.is_semiring = true;
      c.has_lub = c.bounded_sets_have_max = c.nonempty_sets_have_min = true;
      c.has_least_positive = true;
      break;
    case BaseKind::Z:
      c.is_group = true;
      c.has_lub = c.bounded_sets_have_max = true;
      break;
    case BaseKind::Rc:
      c.is_semigroup = c.is_semiring = true;
      c.has_greatest = c.has_lub = c.is_summable = true;
      break;
    case BaseKind::Ro:
      c.is_semigroup = c.is_semiring = c.is_semifield = true;
      c.has_lub = true;
      break;
    case BaseKind::NBar0:
      c.is_semigroup = c.is_semiring = true;
      c.has_greatest = c.has_lub = c.is_summable = true;
      c.nonempty_sets_have_min = c.has_least_positive = true;
      break;
  }
  return c;
}

// Least upper bounds exist when A has maxima of bounded sets, B has lub, and either
// B has a greatest element or (B has a least positive element and A has minima).
bool lub_rule_applies(const Capabilities& a, const Capabilities& b) {
  if (!a.bounded_sets_have_max || !b.has_lub) return false;
  return b.has_greatest || (b.has_least_positive && a.nonempty_sets_have_min);
}

std::string operand_str(const StructDesc& d) {
  if (d.is_insertion()) return "(" + d.str() + ")";
  return d.str();
}

}  // namespace

StructDesc StructDesc::base(BaseKind kind) {
  auto n = std::make_shared<Node>();
  n->kind = DescKind::Base;
  n->base = kind;
  n->caps = base_caps(kind);
  return StructDesc(n);
}

StructDesc StructDesc::s_insert(const StructDesc& a, const StructDesc& b, bool bar) {
  if (!a.caps().is_semigroup) {
    fail(ErrorKind::Capability, "s-insertion needs an ordered abelian semigroup on the left, got " + a.str());
  }
  if (!b.caps().is_semigroup) {
    fail(ErrorKind::Capability, "s-insertion needs an ordered abelian semigroup on the right, got " + b.str());
  }
  auto n = std::make_shared<Node>();
  n->kind = DescKind::SIns;
  n->bar = bar;
  n->a = a;
  n->b = b;
  Capabilities& c = n->caps;
  c.is_semigroup = true;
  c.has_top = bar;
  c.has_greatest = bar || (a.caps().has_greatest && b.caps().has_greatest);
  c.has_lub = lub_rule_applies(a.caps(), b.caps());
  c.is_summable = bar && c.has_lub;
  c.has_least_positive = b.caps().has_least_positive;
  c.nonempty_sets_have_min = a.caps().nonempty_sets_have_min && b.caps().nonempty_sets_have_min;
  return StructDesc(n);
}

StructDesc StructDesc::insert(const StructDesc& a, const StructDesc& b, bool bar) {
  if (!a.caps().is_semigroup && !a.caps().is_group) {
    fail(ErrorKind::Capability, "insertion needs an ordered abelian group or semigroup on the left, got " + a.str());
  }
  if (!b.caps().is_semigroup) {
    fail(ErrorKind::Capability, "insertion needs an ordered abelian semigroup on the right, got " + b.str());
  }
  auto n = std::make_shared<Node>();
  n->kind = DescKind::Ins;
  n->bar = bar;
  n->a = a;
  n->b = b;
  Capabilities& c = n->caps;
  c.is_semigroup = true;
  c.is_semiring = b.caps().is_semiring;
  c.is_semifield = !bar && a.caps().is_group && b.caps().is_semifield;
  c.has_least_positive = a.caps().nonempty_sets_have_min && b.caps().has_least_positive;
  c.nonempty_sets_have_min = a.caps().nonempty_sets_have_min && b.caps().nonempty_sets_have_min;
  c.has_top = bar;
  c.has_greatest = bar || (a.caps().has_greatest && b.caps().has_greatest);
  c.has_lub = lub_rule_applies(a.caps(), b.caps());
  c.is_summable = bar && c.has_lub;
  return StructDesc(n);
}

StructDesc StructDesc::mixed(BaseKind a, std::optional<long long> lo, std::optional<long long> hi,
                             std::map<long long, StructDesc> levels,
                             std::optional<StructDesc> fallback) {
  if (a != BaseKind::N0 && a != BaseKind::Z) {
    fail(ErrorKind::Capability, "mixed insertion levels must be N0 or Z");
  }
  if (a == BaseKind::N0) {
    if (!lo) lo = 0;
    if (*lo < 0) fail(ErrorKind::Capability, "mixed insertion over N0 cannot start below 0");
  }
  if (!lo && !hi) fail(ErrorKind::Capability, "mixed insertion needs a bounded or half-bounded level range");
  if (lo && hi && *lo > *hi) fail(ErrorKind::Capability, "empty mixed level range");
  for (const auto& [level, desc] : levels) {
    if ((lo && level < *lo) || (hi && level > *hi)) {
      fail(ErrorKind::Capability, "mixed level " + std::to_string(level) + " outside the range");
    }
    if (!desc.caps().is_semigroup) {
      fail(ErrorKind::Capability, "mixed level structure must be a semigroup, got " + desc.str());
    }
  }
  if (fallback && !fallback->caps().is_semigroup) {
    fail(ErrorKind::Capability, "mixed default structure must be a semigroup");
  }
  if (!fallback && (!lo || !hi)) fail(ErrorKind::Capability, "half-bounded mixed insertion needs a default");
  if (!fallback) {
    for (long long l = *lo; l <= *hi; ++l) {
      if (!levels.count(l)) fail(ErrorKind::Capability, "mixed level " + std::to_string(l) + " has no structure");
    }
  }
  auto n = std::make_shared<Node>();
  n->kind = DescKind::Mixed;
  n->base = a;
  n->lo = lo;
  n->hi = hi;
  n->levels = std::move(levels);
  n->fallback = std::move(fallback);
  n->caps.is_semigroup = true;
  return StructDesc(n);
}

StructDesc StructDesc::double_of(const StructDesc& l) {
  if (!l.caps().is_semigroup) fail(ErrorKind::Capability, "double needs an ordered semigroup, got " + l.str());
  auto n = std::make_shared<Node>();
  n->kind = DescKind::Double;
  n->a = l;
  return StructDesc(n);
}

StructDesc StructDesc::S() { return insert(base(BaseKind::N0), base(BaseKind::Rc)); }
StructDesc StructDesc::O() { return insert(base(BaseKind::Z), base(BaseKind::Rc)); }
StructDesc StructDesc::P() { return insert(base(BaseKind::Z), base(BaseKind::Ro)); }
StructDesc StructDesc::Obar() { return insert(base(BaseKind::Z), base(BaseKind::Rc), true); }
StructDesc StructDesc::Sbar() { return insert(base(BaseKind::N0), base(BaseKind::Rc), true); }

namespace {

StructDesc nested(BaseKind level, BaseKind inner, int n, bool bar) {
  if (n < 1) fail(ErrorKind::Capability, "nesting count must be at least 1");
  StructDesc d = StructDesc::base(inner);
  for (int i = 0; i < n; ++i) d = StructDesc::insert(StructDesc::base(level), d, bar);
  return d;
}

}  // namespace

StructDesc StructDesc::Sn(int n) { return nested(BaseKind::N0, BaseKind::Rc, n, true); }
StructDesc StructDesc::On(int n) { return nested(BaseKind::Z, BaseKind::Rc, n, true); }
StructDesc StructDesc::Pn(int n) { return nested(BaseKind::Z, BaseKind::Ro, n, false); }

DescKind StructDesc::kind() const { return node_->kind; }
BaseKind StructDesc::base_kind() const { return node_->base; }
bool StructDesc::bar() const { return node_->bar; }

const StructDesc& StructDesc::first() const {
  if (!node_->a) fail(ErrorKind::Shape, "descriptor " + str() + " has no first operand");
  return *node_->a;
}

const StructDesc& StructDesc::second() const {
  if (!node_->b) fail(ErrorKind::Shape, "descriptor " + str() + " has no second operand");
  return *node_->b;
}

std::optional<long long> StructDesc::mixed_lo() const { return node_->lo; }
std::optional<long long> StructDesc::mixed_hi() const { return node_->hi; }

std::optional<StructDesc> StructDesc::mixed_at(long long level) const {
  if ((node_->lo && level < *node_->lo) || (node_->hi && level > *node_->hi)) return std::nullopt;
  auto it = node_->levels.find(level);
  if (it != node_->levels.end()) return it->second;
  return node_->fallback;
}

const Capabilities& StructDesc::caps() const { return node_->caps; }

bool StructDesc::has_integer_levels() const {
  if (kind() == DescKind::Mixed) return true;
  if (!is_insertion()) return false;
  const auto& a = first();
  return a.kind() == DescKind::Base && (a.base_kind() == BaseKind::N0 || a.base_kind() == BaseKind::Z);
}

int StructDesc::nesting_depth() const {
  if (kind() == DescKind::Base) return 0;
  if (kind() != DescKind::Ins || !has_integer_levels()) return -1;
  int inner = second().nesting_depth();
  return inner < 0 ? -1 : inner + 1;
}

std::string StructDesc::str() const {
  const Node& n = *node_;
  switch (n.kind) {
    case DescKind::Base: return base_name(n.base);
    case DescKind::SIns: return operand_str(*n.a) + (n.bar ? " b\\/ " : " \\/ ") + operand_str(*n.b);
    case DescKind::Ins: return operand_str(*n.a) + (n.bar ? " b/\\ " : " /\\ ") + operand_str(*n.b);
    case DescKind::Double: return "double(" + n.a->str() + ")";
    case DescKind::Mixed: {
      std::ostringstream os;
      os << "mixed(" << base_name(n.base) << "; ";
      if (n.lo) os << *n.lo;
      os << "..";
      if (n.hi) os << *n.hi;
      if (!n.levels.empty()) {
        os << ";";
        bool first = true;
        for (const auto& [level, desc] : n.levels) {
          os << (first ? " " : ", ") << level << ":" << desc.str();
          first = false;
        }
      }
      if (n.fallback) os << "; default:" << n.fallback->str();
      os << ")";
      return os.str();
    }
  }
  return "?";
}

bool operator==(const StructDesc& x, const StructDesc& y) {
  if (x.node_ == y.node_) return true;
  const auto& a = *x.node_;
  const auto& b = *y.node_;
  if (a.kind != b.kind) return false;
  switch (a.kind) {
    case DescKind::Base: return a.base == b.base;
    case DescKind::SIns:
    case DescKind::Ins: return a.bar == b.bar && *a.a == *b.a && *a.b == *b.b;
    case DescKind::Double: return *a.a == *b.a;
    case DescKind::Mixed:
      return a.base == b.base && a.lo == b.lo && a.hi == b.hi && a.levels == b.levels &&
             a.fallback == b.fallback;
  }
  return false;
}

// ---------------------------------------------------------------------------
// Grammar
//
//   desc     := operand [ binop operand ]
//   operand  := '(' desc ')' | BASE | ALIAS | ALIASN '(' INT ')'
//             | 'double' '(' desc ')' | 'mixed' '(' mixedargs ')'
//   binop    := '\/' | '/\' | 'b\/' | 'b/\'
//
// Chains such as "N0 /\ N0 /\ N0" are rejected: insertion is not associative.

namespace {

class StructParser {
 public:
  explicit StructParser(std::string_view text) : text_(text) {}

  StructDesc parse() {
    StructDesc d = parse_desc();
    skip_ws();
    if (pos_ != text_.size()) throw ParseError("unexpected trailing input", pos_);
    return d;
  }

 private:
  enum class Op { None, SIns, Ins, BarSIns, BarIns };

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool peek(std::string_view tok) {
    skip_ws();
    return text_.substr(pos_, tok.size()) == tok;
  }

  void expect(std::string_view tok) {
    if (!peek(tok)) throw ParseError("expected '" + std::string(tok) + "'", pos_);
    pos_ += tok.size();
  }

  Op peek_op() {
    skip_ws();
    if (peek("b\\/")) return Op::BarSIns;
    if (peek("b/\\")) return Op::BarIns;
    if (peek("\\/")) return Op::SIns;
    if (peek("/\\")) return Op::Ins;
    return Op::None;
  }

  static std::size_t op_len(Op op) { return (op == Op::BarSIns || op == Op::BarIns) ? 3 : 2; }

  StructDesc parse_desc() {
    StructDesc left = parse_operand();
    Op op = peek_op();
    if (op == Op::None) return left;
    std::size_t op_pos = pos_;
    pos_ += op_len(op);
    StructDesc right = parse_operand();
    if (peek_op() != Op::None) {
      throw ParseError("parentheses required: insertion chains are not associative", pos_);
    }
    try {
      switch (op) {
        case Op::SIns: return StructDesc::s_insert(left, right, false);
        case Op::BarSIns: return StructDesc::s_insert(left, right, true);
        case Op::Ins: return StructDesc::insert(left, right, false);
        case Op::BarIns: return StructDesc::insert(left, right, true);
        case Op::None: break;
      }
    } catch (const Error& e) {
      throw Error(e.kind(), std::string(e.what()) + " (operator at position " + std::to_string(op_pos) + ")");
    }
    return left;
  }

  std::string parse_ident() {
    skip_ws();
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isalnum(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) throw ParseError("expected a structure name", pos_);
    return std::string(text_.substr(start, pos_ - start));
  }

  long long parse_int() {
    skip_ws();
    std::size_t start = pos_;
    if (pos_ < text_.size() && (text_[pos_] == '-' || text_[pos_] == '+')) ++pos_;
    std::size_t digits = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (digits == pos_) throw ParseError("expected an integer", start);
    try {
      return std::stoll(std::string(text_.substr(start, pos_ - start)));
    } catch (const std::out_of_range&) {
      throw ParseError("integer out of range", start);
    }
  }

  int parse_count() {
    expect("(");
    std::size_t at = pos_;
    long long n = parse_int();
    expect(")");
    if (n < 1 || n > 64) throw ParseError("nesting count must be in 1..64", at);
    return static_cast<int>(n);
  }

  StructDesc parse_operand() {
    skip_ws();
    if (peek("(")) {
      ++pos_;
      StructDesc d = parse_desc();
      expect(")");
      return d;
    }
    std::size_t at = pos_;
    std::string id = parse_ident();
    if (id == "N0") return StructDesc::base(BaseKind::N0);
    if (id == "Z") return StructDesc::base(BaseKind::Z);
    if (id == "Rc") return StructDesc::base(BaseKind::Rc);
    if (id == "Ro") return StructDesc::base(BaseKind::Ro);
    if (id == "Nbar0" || id == "NBar0") return StructDesc::base(BaseKind::NBar0);
    if (id == "S") return StructDesc::S();
    if (id == "O") return StructDesc::O();
    if (id == "P") return StructDesc::P();
    if (id == "Obar") return StructDesc::Obar();
    if (id == "Sbar") return StructDesc::Sbar();
    if (id == "Sn") return StructDesc::Sn(parse_count());
    if (id == "On") return StructDesc::On(parse_count());
    if (id == "Pn") return StructDesc::Pn(parse_count());
    if (id == "double") {
      expect("(");
      StructDesc l = parse_desc();
      expect(")");
      return StructDesc::double_of(l);
    }
    if (id == "mixed") return parse_mixed();
    throw ParseError("unknown structure '" + id + "'", at);
  }

  // mixed(Base; lo..hi; k:desc, k:desc; default:desc)
  StructDesc parse_mixed() {
    expect("(");
    std::size_t at = pos_;
    std::string base = parse_ident();
    BaseKind a;
    if (base == "N0") {
      a = BaseKind::N0;
    } else if (base == "Z") {
      a = BaseKind::Z;
    } else {
      throw ParseError("mixed insertion levels must be N0 or Z", at);
    }
    expect(";");
    std::optional<long long> lo, hi;
    skip_ws();
    if (!peek("..")) lo = parse_int();
    expect("..");
    skip_ws();
    if (!peek(";") && !peek(")")) hi = parse_int();
    std::map<long long, StructDesc> levels;
    std::optional<StructDesc> fallback;
    while (peek(";")) {
      ++pos_;
      skip_ws();
      if (peek("default")) {
        pos_ += 7;
        expect(":");
        fallback = parse_desc();
        continue;
      }
      do {
        std::size_t lvl_at = pos_;
        long long level = parse_int();
        expect(":");
        if (levels.count(level)) throw ParseError("duplicate mixed level", lvl_at);
        levels.emplace(level, parse_desc());
      } while (peek(",") && (++pos_, true));
    }
    expect(")");
    return StructDesc::mixed(a, lo, hi, std::move(levels), std::move(fallback));
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

StructDesc parse_struct(std::string_view text) { return StructParser(text).parse(); }

}  // namespace ordalg
