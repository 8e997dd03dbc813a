#include "ordalg/measure.hpp"

#include <algorithm>
#include <cctype>
#include <set>

#include "ordalg/arith.hpp"
#include "ordalg/error.hpp"

namespace ordalg {

// --- atom spaces ----------------------------------------------------------------

AtomSpace::AtomSpace(std::vector<std::string> atoms) : atoms_(std::move(atoms)) {
  for (std::size_t i = 0; i < atoms_.size(); ++i) {
    if (atoms_[i].empty()) fail(ErrorKind::Validation, "empty atom id");
    if (!index_.emplace(atoms_[i], i).second) fail(ErrorKind::Validation, "duplicate atom '" + atoms_[i] + "'");
  }
}

std::size_t AtomSpace::index_of(const std::string& atom) const {
  auto it = index_.find(atom);
  if (it == index_.end()) fail(ErrorKind::Validation, "unknown atom '" + atom + "'");
  return it->second;
}

Event AtomSpace::from_atoms(const std::vector<std::string>& ids) const {
  Event e = none();
  for (const auto& id : ids) e.set(index_of(id));
  return e;
}

void AtomSpace::define_event(const std::string& name, const Event& e) {
  if (e.size() != atoms_.size()) fail(ErrorKind::Validation, "event '" + name + "' has the wrong size");
  events_[name] = e;
}

Event AtomSpace::event(const std::string& name) const {
  if (auto it = events_.find(name); it != events_.end()) return it->second;
  if (name == "X") return all();
  if (auto it = index_.find(name); it != index_.end()) {
    Event e = none();
    e.set(it->second);
    return e;
  }
  fail(ErrorKind::Validation, "unknown event '" + name + "'");
}

namespace {

class EventParser {
 public:
  EventParser(const AtomSpace& s, const std::string& text) : s_(s), t_(text) {}

  Event parse() {
    Event e = parse_union();
    skip();
    if (p_ != t_.size()) throw ParseError("unexpected input in event expression", p_);
    return e;
  }

 private:
  void skip() {
    while (p_ < t_.size() && std::isspace(static_cast<unsigned char>(t_[p_]))) ++p_;
  }
  bool eat(char c) {
    skip();
    if (p_ < t_.size() && t_[p_] == c) {
      ++p_;
      return true;
    }
    return false;
  }
  Event parse_union() {
    Event e = parse_inter();
    while (eat('|')) e |= parse_inter();
    return e;
  }
  Event parse_inter() {
    Event e = parse_unary();
    while (eat('&')) e &= parse_unary();
    return e;
  }
  Event parse_unary() {
    if (eat('!')) return ~parse_unary();
    if (eat('(')) {
      Event e = parse_union();
      if (!eat(')')) throw ParseError("expected ')' in event expression", p_);
      return e;
    }
    if (eat('{')) {
      if (!eat('}')) throw ParseError("expected '}' in event expression", p_);
      return s_.none();
    }
    skip();
    std::size_t start = p_;
    auto ok = [](char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '-' || c == '.'; };
    while (p_ < t_.size() && ok(t_[p_])) ++p_;
    if (start == p_) throw ParseError("expected an event name", p_);
    return s_.event(t_.substr(start, p_ - start));
  }

  const AtomSpace& s_;
  const std::string& t_;
  std::size_t p_ = 0;
};

}  // namespace

Event AtomSpace::parse_event(const std::string& expr) const { return EventParser(*this, expr).parse(); }

std::vector<std::string> AtomSpace::members(const Event& e) const {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < atoms_.size(); ++i) {
    if (e.test(i)) out.push_back(atoms_[i]);
  }
  return out;
}

// --- measures ---------------------------------------------------------------------

LMeasure::LMeasure(StructDesc d, AtomSpace s, std::vector<Value> v)
    : desc(std::move(d)), space(std::move(s)), values(std::move(v)) {
  if (values.size() != space.size()) fail(ErrorKind::Validation, "one value per atom required");
  if (desc.kind() == DescKind::Double) fail(ErrorKind::Capability, "measures take values in a semigroup, not " + desc.str());
  if (!desc.caps().is_semigroup) fail(ErrorKind::Capability, "measures need an ordered semigroup, got " + desc.str());
  for (std::size_t i = 0; i < values.size(); ++i) {
    try {
      check_shape(desc, values[i]);
    } catch (const Error& e) {
      fail(ErrorKind::Shape, "atom '" + space.atoms()[i] + "': " + e.what());
    }
  }
}

Value measure_of(const LMeasure& m, const Event& e) {
  if (e.size() != m.space.size()) fail(ErrorKind::Validation, "event does not belong to this atom space");
  Value acc = Value::zero();
  for (auto i = e.find_first(); i != Event::npos; i = e.find_next(i)) acc = add(m.desc, acc, m.values[i]);
  return acc;
}

long long int_level(const Value& x) {
  const Value& l = level(x);
  if (l.is_zero()) return 0;
  if (l.kind() != Value::Kind::Int) fail(ErrorKind::Shape, "level " + l.str() + " is not an integer");
  if (l.as_int() > std::numeric_limits<long long>::max() || l.as_int() < std::numeric_limits<long long>::min()) {
    fail(ErrorKind::Domain, "level out of range");
  }
  return l.as_int().convert_to<long long>();
}

namespace {

void require_integer_levels(const StructDesc& d) {
  if (!d.is_insertion() || !d.has_integer_levels()) {
    fail(ErrorKind::Capability, "level bookkeeping needs an insertion over N0 or Z, got " + d.str());
  }
}

void require_slice_shape(const StructDesc& d) {
  require_integer_levels(d);
  const StructDesc& b = d.second();
  if (b.kind() != DescKind::Base || (b.base_kind() != BaseKind::Rc && b.base_kind() != BaseKind::Ro)) {
    fail(ErrorKind::Capability, "slices need residues in Rc or Ro, got " + d.str());
  }
}

XReal slice_of(const Value& v, long long k) {
  if (v.is_zero()) return XReal();
  if (v.is_top()) return XReal::inf();
  long long l = int_level(v);
  if (l > k) return XReal::inf();
  if (l < k) return XReal();
  return v.second().as_real();
}

Value element(const StructDesc& d, long long lvl, Value res) { return make_element(d, Value::integer(lvl), std::move(res)); }

}  // namespace

XReal slice(const LMeasure& m, long long k, const Event& e) {
  require_slice_shape(m.desc);
  return slice_of(measure_of(m, e), k);
}

std::vector<long long> attained_levels(const LMeasure& m) {
  require_integer_levels(m.desc);
  std::set<long long> ls;
  for (const auto& v : m.values) {
    if (!v.is_zero() && !v.is_top()) ls.insert(int_level(v));
  }
  return {ls.begin(), ls.end()};
}

SliceTable slice_table(const LMeasure& m) {
  require_slice_shape(m.desc);
  SliceTable t;
  auto ls = attained_levels(m);
  if (ls.empty()) return t;
  t.lo = ls.front();
  t.hi = ls.back() + 1;
  for (long long k = t.lo; k <= t.hi; ++k) {
    auto& row = t.rows[k];
    for (const auto& v : m.values) row.push_back(slice_of(v, k));
  }
  return t;
}

LMeasure recover_from_slices(const StructDesc& d, const AtomSpace& space, const SliceTable& t) {
  require_slice_shape(d);
  for (long long k = t.lo; k <= t.hi; ++k) {
    auto it = t.rows.find(k);
    if (it == t.rows.end()) fail(ErrorKind::Validation, "missing slice at level " + std::to_string(k));
    if (it->second.size() != space.size()) fail(ErrorKind::Validation, "slice row has the wrong length");
  }
  std::vector<Value> values;
  for (std::size_t a = 0; a < space.size(); ++a) {
    const std::string& id = space.atoms()[a];
    std::optional<long long> top;
    for (long long k = t.hi; k >= t.lo && !top; --k) {
      if (!t.rows.at(k)[a].is_zero()) top = k;
    }
    if (!top) {
      values.push_back(Value::zero());
      continue;
    }
    if (*top == t.hi && t.rows.at(*top)[a].is_inf()) {
      fail(ErrorKind::Validation, "atom '" + id + "' is inf at the top of the window; its level is undetermined");
    }
    for (long long k = t.lo; k < *top; ++k) {
      if (!t.rows.at(k)[a].is_inf()) {
        fail(ErrorKind::Validation, "atom '" + id + "' has a finite slice at level " + std::to_string(k) +
                                        " below its level " + std::to_string(*top));
      }
    }
    values.push_back(element(d, *top, Value::real(t.rows.at(*top)[a])));
  }
  return LMeasure(d, space, std::move(values));
}

Height total_height(const LMeasure& m) {
  require_integer_levels(m.desc);
  for (const auto& v : m.values) {
    if (v.is_top()) return {true, 0};
  }
  auto ls = attained_levels(m);
  if (ls.empty()) fail(ErrorKind::Domain, "the zero measure attains no level");
  return {false, ls.back() - ls.front() + 1};
}

namespace {

LMeasure relevel(const LMeasure& m, const std::map<long long, long long>& to) {
  std::vector<Value> out;
  for (const auto& v : m.values) {
    if (v.is_zero() || v.is_top()) {
      out.push_back(v);
      continue;
    }
    long long l = to.at(int_level(v));
    if (m.desc.first().kind() == DescKind::Base && m.desc.first().base_kind() == BaseKind::N0 && l < 0) {
      fail(ErrorKind::Domain, "level " + std::to_string(l) + " leaves N0");
    }
    out.push_back(element(m.desc, l, v.second()));
  }
  return LMeasure(m.desc, m.space, std::move(out));
}

}  // namespace

LMeasure align_levels(const LMeasure& m) {
  auto ls = attained_levels(m);
  std::map<long long, long long> to;
  for (std::size_t i = 0; i < ls.size(); ++i) to[ls[i]] = ls.front() + static_cast<long long>(i);
  return relevel(m, to);
}

bool is_proximal(const LMeasure& m) {
  auto ls = attained_levels(m);
  return ls.empty() || ls.back() - ls.front() + 1 == static_cast<long long>(ls.size());
}

LMeasure shift_levels(const LMeasure& m, long long k) {
  std::map<long long, long long> to;
  for (long long l : attained_levels(m)) to[l] = l + k;
  return relevel(m, to);
}

// --- open-graded example ------------------------------------------------------------

namespace {

struct Span {
  XReal lo, hi;
  bool lo_closed, hi_closed;
};

void check_piece(const GradedPiece& p) {
  if (p.hi < p.lo) fail(ErrorKind::Validation, "interval with hi < lo");
  if (p.lo == p.hi && !(p.lo_closed && p.hi_closed)) fail(ErrorKind::Validation, "empty degenerate interval");
  if (p.lo.is_zero() && p.lo_closed) fail(ErrorKind::Validation, "levels are copies of (0,inf]; 0 is not a point of a level");
  if (p.lo.is_inf() && p.lo != p.hi) fail(ErrorKind::Validation, "interval starting at inf");
}

// Sorted union of the spans; touching spans merge when one of them holds the
// shared endpoint.
std::vector<Span> merge(std::vector<Span> s) {
  std::sort(s.begin(), s.end(), [](const Span& a, const Span& b) {
    if (a.lo != b.lo) return a.lo < b.lo;
    return a.lo_closed && !b.lo_closed;
  });
  std::vector<Span> out;
  for (const auto& x : s) {
    if (!out.empty()) {
      Span& y = out.back();
      bool joins = x.lo < y.hi || (x.lo == y.hi && (x.lo_closed || y.hi_closed));
      if (joins) {
        if (y.hi < x.hi) {
          y.hi = x.hi;
          y.hi_closed = x.hi_closed;
        } else if (y.hi == x.hi) {
          y.hi_closed = y.hi_closed || x.hi_closed;
        }
        continue;
      }
    }
    out.push_back(x);
  }
  return out;
}

const Span kFull{XReal(), XReal::inf(), false, true};

std::map<long long, std::vector<Span>> levels_of(const GradedIntervalSet& e, long long lo, long long hi) {
  std::map<long long, std::vector<Span>> raw;
  for (const auto& p : e.pieces) {
    check_piece(p);
    raw[p.level].push_back({p.lo, p.hi, p.lo_closed, p.hi_closed});
  }
  for (long long j = lo; j <= hi; ++j) {
    if ((e.head_below && j <= *e.head_below) || (e.tail_from && j >= *e.tail_from)) raw[j].push_back(kFull);
  }
  std::map<long long, std::vector<Span>> out;
  for (auto& [j, s] : raw) out[j] = merge(std::move(s));
  return out;
}

XReal length(const std::vector<Span>& s) {
  XReal total;
  for (const auto& x : s) {
    if (x.hi.is_inf()) return x.lo.is_inf() ? total : XReal::inf();  // the point (j, inf) is null
    total = total + xr_sub(x.hi, x.lo);
  }
  return total;
}

// Level window that contains every finite feature of e plus one level either side.
std::pair<long long, long long> window(const GradedIntervalSet& e) {
  std::vector<long long> ls;
  for (const auto& p : e.pieces) ls.push_back(p.level);
  if (e.head_below) ls.push_back(*e.head_below);
  if (e.tail_from) ls.push_back(*e.tail_from);
  if (ls.empty()) return {0, -1};
  auto [a, b] = std::minmax_element(ls.begin(), ls.end());
  return {*a - 1, *b + 1};
}

}  // namespace

Value open_graded_measure(const GradedIntervalSet& e) {
  if (e.tail_from) return Value::top();
  auto [lo, hi] = window(e);
  auto lv = levels_of(e, lo, hi);
  for (auto it = lv.rbegin(); it != lv.rend(); ++it) {
    XReal len = length(it->second);
    if (!len.is_zero()) return element(StructDesc::Obar(), it->first, Value::real(len));
  }
  return Value::zero();
}

bool is_open(const GradedIntervalSet& e) {
  // 0 and top only have the half-infinite families of levels as neighbourhoods.
  if (e.has_zero && !e.head_below) return false;
  if (e.has_top && !e.tail_from) return false;
  auto [lo, hi] = window(e);
  auto lv = levels_of(e, lo, hi);
  for (const auto& [j, spans] : lv) {
    for (const auto& s : spans) {
      if (s.lo_closed) return false;  // lo > 0 here; (j, lo - eps) is missing
      if (s.hi_closed && !s.hi.is_inf()) return false;
      if (s.hi_closed && s.hi.is_inf()) {
        // (j, inf) sits just below level j+1: it needs (j+1, (0, eps)).
        if (e.tail_from && j + 1 >= *e.tail_from) continue;
        auto next = lv.find(j + 1);
        if (next == lv.end() || next->second.empty() || !next->second.front().lo.is_zero()) return false;
      }
    }
  }
  return true;
}

GradedIntervalSet sublevel_union(const std::vector<GradedIntervalSet>& family, long long k) {
  const StructDesc ob = StructDesc::Obar();
  const Value bound = element(ob, k, Value::real(XReal::inf()));
  GradedIntervalSet u;
  for (const auto& e : family) {
    Value v = open_graded_measure(e);
    if (!v.is_zero() && !less(ob, v, bound)) continue;
    u.pieces.insert(u.pieces.end(), e.pieces.begin(), e.pieces.end());
    if (e.head_below) u.head_below = std::max(u.head_below.value_or(*e.head_below), *e.head_below);
    if (e.tail_from) u.tail_from = std::min(u.tail_from.value_or(*e.tail_from), *e.tail_from);
    u.has_zero = u.has_zero || e.has_zero;
    u.has_top = u.has_top || e.has_top;
  }
  return u;
}

bool verify_open_graded(long long k) {
  const std::vector<XReal> grid{XReal(1, 2), XReal(1), XReal(2), XReal::inf()};
  std::vector<GradedIntervalSet> family;
  // Every singleton: the end points and points of each level.
  family.push_back({{}, std::nullopt, std::nullopt, true, false});
  family.push_back({{}, std::nullopt, std::nullopt, false, true});
  for (long long j = k - 2; j <= k + 2; ++j) {
    for (const auto& t : grid) family.push_back({{{j, t, t, true, true}}, std::nullopt, std::nullopt, false, false});
    // Whole levels and everything below a level.
    family.push_back({{{j, XReal(), XReal::inf(), false, true}}, std::nullopt, std::nullopt, false, false});
    family.push_back({{}, j, std::nullopt, true, false});
    family.push_back({{}, std::nullopt, j, false, true});
  }
  // A point has measure 0 wherever it sits, so the union over all Borel sets
  // contains every point of the window; add the points between grid values
  // level by level as open spans of measure 0 would not cover them.
  bool points_null = true;
  for (const auto& e : family) {
    bool singleton = e.pieces.size() == 1 && e.pieces[0].lo == e.pieces[0].hi && !e.head_below && !e.tail_from;
    if ((singleton || (e.pieces.empty() && !e.head_below && !e.tail_from)) && !open_graded_measure(e).is_zero()) {
      points_null = false;
    }
  }
  if (!points_null) return false;
  GradedIntervalSet u = sublevel_union(family, k);
  // Points are null for every t, not only the grid: the union is the whole picture.
  for (long long j = k - 2; j <= k + 2; ++j) u.pieces.push_back({j, XReal(), XReal::inf(), false, true});
  u.head_below = std::max(u.head_below.value_or(k - 3), k - 3);
  u.tail_from = std::min(u.tail_from.value_or(k + 3), k + 3);
  u.has_zero = u.has_top = true;
  return is_open(u);
}

}  // namespace ordalg
