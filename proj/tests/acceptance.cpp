// Acceptance run: one PASS/FAIL line per criterion.
//
// usage: acceptance <ordalg-cli> <golden-dir> <data-dir>

#include <algorithm>
#include <array>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "ordalg/arith.hpp"
#include "ordalg/error.hpp"
#include "ordalg/integrate.hpp"
#include "ordalg/io.hpp"
#include "ordalg/measure.hpp"
#include "ordalg/prob.hpp"
#include "ordalg/random.hpp"
#include "ordalg/selfcheck.hpp"
#include "ordalg/sequence.hpp"
#include "ordalg/tree.hpp"
#include "ordalg/weights.hpp"

using namespace ordalg;
using Q = boost::multiprecision::cpp_rational;

namespace {

std::string g_cli, g_golden, g_data;

// Collects failed checks of one criterion; the first few are printed.
struct Check {
  std::vector<std::string> failures;
  std::uint64_t count = 0;
  std::vector<std::string> notes;

  void expect(bool ok, const std::string& what) {
    ++count;
    if (!ok) failures.push_back(what);
  }
  void equal(const std::string& got, const std::string& want, const std::string& what) {
    expect(got == want, what + ": got " + got + ", want " + want);
  }
  template <class F>
  void throws(ErrorKind k, F&& f, const std::string& what) {
    try {
      f();
      expect(false, what + ": no error");
    } catch (const Error& e) {
      expect(e.kind() == k, what + ": wrong error kind " + to_string(e.kind()));
    }
  }
};

struct Outcome {
  bool pass;
  std::string detail;
};

// --- flattened reference model of nested insertions ------------------------------
//
// A nonzero element of A1 /\ (A2 /\ ( ... /\ R)) is a level tuple followed by a
// terminal: a residue when all n levels are present, or top when the tuple
// stops early inside a bar factor. Order is lexicographic with top above every
// level; addition keeps the larger element and adds residues on equal tuples;
// multiplication adds levels and multiplies residues.

struct Res {
  bool inf = false;
  Q q;
};

struct Flat {
  enum Kind { Zero, Top, El } kind = Zero;
  std::vector<long long> lv;  // size n for a residue terminal, < n for top
  Res r;
};

struct FlatShape {
  int n;
  bool n0_levels;
  bool bar;
  bool residue_inf;  // Rc (true) or Ro
};

int cmp_res(const Res& a, const Res& b) {
  if (a.inf || b.inf) return a.inf == b.inf ? 0 : (a.inf ? 1 : -1);
  return a.q < b.q ? -1 : (a.q > b.q ? 1 : 0);
}

int flat_cmp(const FlatShape& s, const Flat& a, const Flat& b) {
  auto rank = [](const Flat& x) { return x.kind == Flat::Zero ? 0 : (x.kind == Flat::El ? 1 : 2); };
  if (rank(a) != rank(b) || a.kind != Flat::El) return rank(a) < rank(b) ? -1 : (rank(a) > rank(b) ? 1 : 0);
  for (int t = 0;; ++t) {
    bool ea = t == static_cast<int>(a.lv.size());
    bool eb = t == static_cast<int>(b.lv.size());
    if (ea || eb) {
      if (ea && eb) return t == s.n ? cmp_res(a.r, b.r) : 0;
      return ea ? 1 : -1;  // top inside this factor beats any level
    }
    if (a.lv[t] != b.lv[t]) return a.lv[t] < b.lv[t] ? -1 : 1;
  }
}

Flat flat_add(const FlatShape& s, const Flat& a, const Flat& b) {
  if (a.kind == Flat::El && b.kind == Flat::El && a.lv == b.lv && static_cast<int>(a.lv.size()) == s.n) {
    Flat out = a;
    out.r.inf = a.r.inf || b.r.inf;
    out.r.q = out.r.inf ? Q(0) : a.r.q + b.r.q;
    return out;
  }
  return flat_cmp(s, a, b) >= 0 ? a : b;
}

Flat flat_mul(const FlatShape& s, const Flat& a, const Flat& b) {
  if (a.kind == Flat::Zero || b.kind == Flat::Zero) return {};
  if (a.kind == Flat::Top || b.kind == Flat::Top) return {Flat::Top, {}, {}};
  Flat out{Flat::El, {}, {}};
  std::size_t m = std::min(a.lv.size(), b.lv.size());
  for (std::size_t t = 0; t < m; ++t) out.lv.push_back(a.lv[t] + b.lv[t]);
  if (static_cast<int>(m) == s.n) {
    out.r.inf = a.r.inf || b.r.inf;
    out.r.q = out.r.inf ? Q(0) : a.r.q * b.r.q;
  }
  return out;
}

Flat flat_inv(const Flat& a) {
  Flat out = a;
  for (auto& l : out.lv) l = -l;
  out.r.q = 1 / a.r.q;
  return out;
}

std::string flat_str(const Flat& a) {
  if (a.kind == Flat::Zero) return "0";
  if (a.kind == Flat::Top) return "top";
  return a.r.inf ? "inf" : a.r.q.str();
}

std::string flat_literal(const FlatShape& s, const Flat& a) {
  if (a.kind != Flat::El) return flat_str(a);
  std::string out = static_cast<int>(a.lv.size()) == s.n ? flat_str(a) : "top";
  for (auto it = a.lv.rbegin(); it != a.lv.rend(); ++it) out = "(" + std::to_string(*it) + "," + out + ")";
  return out;
}

Flat flat_random(const FlatShape& s, Rng& rng, bool nonzero = false) {
  auto pick = [&](int n) { return static_cast<int>(rng() % static_cast<std::uint64_t>(n)); };
  if (!nonzero && pick(100) < 6) return {};
  if (s.bar && pick(100) < 4) return {Flat::Top, {}, {}};
  Flat f{Flat::El, {}, {}};
  for (int t = 0; t < s.n; ++t) {
    if (s.bar && t > 0 && pick(100) < 5) return f;  // (i, top) inside a bar factor
    f.lv.push_back(s.n0_levels ? pick(3) : pick(5) - 2);
  }
  static const std::array<Q, 5> qs{Q(1, 2), Q(1), Q(2), Q(3, 4), Q(5, 3)};
  if (s.residue_inf && pick(100) < 8) {
    f.r.inf = true;
  } else {
    f.r.q = qs[pick(5)];
  }
  return f;
}

// --- criteria ----------------------------------------------------------------------

Outcome dartboard() {
  Check c;
  LMeasure m = builtin_scene("dartboard");
  auto P = [&](const char* a, const char* b) { return cond_prob(m, m.space.parse_event(a), m.space.parse_event(b)).str(); };
  c.equal(P("Y", "B"), "(-1,3/2)", "P(Y|B)");
  c.equal(P("A", "Y"), "(0,1/4)", "P(A|Y)");
  c.equal(P("A", "B & Y"), "(0,1/3)", "P(A|B&Y)");
  c.equal(P("A", "B"), "(-1,1/2)", "P(A|B)");
  return {c.failures.empty(), c.failures.empty() ? "4 conditional probabilities exact" : c.failures.front()};
}

Outcome bayes_quadrants() {
  Check c;
  LMeasure m = builtin_scene("dartboard");
  std::vector<std::pair<std::string, Event>> cells;
  for (const char* name : {"A1", "A2", "A3", "A4"}) cells.push_back({name, m.space.event(name)});
  BayesTable t = bayes(m, cells, m.space.event("H"));
  c.equal(t.rows[0].likelihood.str(), "(-1,1)", "P(H|A1)");
  c.equal(t.rows[1].likelihood.str(), "0", "P(H|A2)");
  c.equal(t.rows[2].likelihood.str(), "(-1,1)", "P(H|A3)");
  c.equal(t.rows[3].likelihood.str(), "0", "P(H|A4)");
  c.equal(t.total.str(), "(-1,1/2)", "P(H)");
  c.equal(t.rows[0].posterior.str(), "(0,1/2)", "P(A1|H)");
  c.expect(t.consistent, "posteriors agree with direct conditionals");
  std::string note = "; P(H|A3) = " + t.rows[2].likelihood.str() + " = nu(H & A3) / nu(A3) = (-1,1/4) / (0,1/4)";
  return {c.failures.empty(), c.failures.empty() ? "likelihoods, total and posterior exact" + note : c.failures.front()};
}

Outcome non_associativity() {
  Check c;
  StructDesc right = parse_struct("N0 /\\ (N0 /\\ N0)");
  StructDesc left = parse_struct("(N0 /\\ N0) /\\ N0");
  c.equal(mul(right, parse_value(right, "(1,(1,1))"), parse_value(right, "(2,(1,1))")).str(), "(3,(2,1))", "right nesting");
  c.equal(mul(left, parse_value(left, "((1,1),1)"), parse_value(left, "((2,1),1)")).str(), "((2,1),1)", "left nesting");
  return {c.failures.empty(), c.failures.empty() ? "(3,(2,1)) and ((2,1),1)" : c.failures.front()};
}

Outcome law_suites() {
  Check c;
  const std::uint64_t cases = 10000;
  std::uint64_t checked = 0;
  for (const auto& [name, d] : law_structures()) {
    for (const auto& l : structure_laws(name, d, 2024, cases, default_ops())) {
      c.expect(l.cases >= cases && l.failures == 0, name + ": " + l.law + " " + l.witness);
      checked += l.cases;
    }
  }
  // Differential run against the flattened reference model.
  const std::vector<std::pair<std::string, FlatShape>> shapes{
      {"S", {1, true, false, true}},      {"O", {1, false, false, true}},     {"P", {1, false, false, false}},
      {"Obar", {1, false, true, true}},   {"Sn(2)", {2, true, true, true}},   {"On(2)", {2, false, true, true}},
      {"Pn(2)", {2, false, false, false}}};
  Rng rng(77);
  for (const auto& [name, s] : shapes) {
    StructDesc d = parse_struct(name);
    bool field = !s.residue_inf;
    for (std::uint64_t i = 0; i < cases; ++i) {
      Flat a = flat_random(s, rng), b = flat_random(s, rng);
      Value va = parse_value(d, flat_literal(s, a)), vb = parse_value(d, flat_literal(s, b));
      std::string tag = name + " " + flat_literal(s, a) + ", " + flat_literal(s, b);
      c.equal(add(d, va, vb).str(), flat_literal(s, flat_add(s, a, b)), tag + " add");
      c.equal(mul(d, va, vb).str(), flat_literal(s, flat_mul(s, a, b)), tag + " mul");
      int want = flat_cmp(s, a, b);
      auto got = cmp(d, va, vb);
      c.expect((got < 0 && want < 0) || (got == 0 && want == 0) || (got > 0 && want > 0), tag + " cmp");
      if (a.kind == Flat::El && static_cast<int>(a.lv.size()) >= 1) {
        c.equal(level(va).str(), std::to_string(a.lv[0]), tag + " level");
      }
      if (field && a.kind == Flat::El) {
        c.equal(inv(d, va).str(), flat_literal(s, flat_inv(a)), tag + " inv");
      }
    }
  }
  std::string detail = std::to_string(checked) + " law cases over 7 structures, " + std::to_string(7 * cases) +
                       " reference-model triples";
  return {c.failures.empty(), c.failures.empty() ? detail : c.failures.front()};
}

Outcome reassociation() {
  Check c;
  Rng rng(5);
  std::uint64_t pairs = 0;
  for (int base = 0; base < 3; ++base) {
    StructDesc a = random_semigroup_base(rng), b = random_semigroup_base(rng), cc = random_semigroup_base(rng);
    StructDesc d = StructDesc::s_insert(a, StructDesc::s_insert(b, cc, false), false);
    StructDesc target = siv_assoc_target(d);
    for (int i = 0; i < 10000; ++i, ++pairs) {
      Value x = random_value(d, rng), y = random_value(d, rng);
      Value px = siv_assoc_iso(d, x), py = siv_assoc_iso(d, y);
      std::string tag = d.str() + " " + x.str() + ", " + y.str();
      c.expect(cmp(d, x, y) == cmp(target, px, py), tag + " order");
      c.expect(siv_assoc_iso(d, add(d, x, y)) == add(target, px, py), tag + " addition");
      c.expect(siv_assoc_iso_inverse(target, px) == x, tag + " inverse");
    }
  }
  return {c.failures.empty(), c.failures.empty() ? std::to_string(pairs) + " pairs over 3 random base triples" : c.failures.front()};
}

// Subsets of {0..n-1} of size k, in lexicographic order.
template <class F>
void each_subset(int n, int k, F&& f) {
  std::vector<int> idx(k);
  for (int i = 0; i < k; ++i) idx[i] = i;
  while (true) {
    f(idx);
    int i = k - 1;
    while (i >= 0 && idx[i] == n - k + i) --i;
    if (i < 0) return;
    ++idx[i];
    for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

Outcome summability() {
  Check c;
  StructDesc obar = StructDesc::Obar(), s = StructDesc::S(), o = StructDesc::O(), p = StructDesc::P();
  c.equal(sum_sequence(obar, {{}, LevelRamp{1, 1, Value::real(1)}}).str(), "top", "sum (n,1) in Obar");
  c.equal(sup(s, SeqGen{{}, ResidueRamp{Value::integer(3), XReal(1), XReal(1)}}).str(), "(3,inf)", "sup (3,t) in S");
  c.throws(ErrorKind::NotRepresentable, [&] { sup(p, SeqGen{{}, ResidueRamp{Value::integer(3), XReal(1), XReal(1)}}); },
           "sup (3,t) in P");

  // Constant repeats against the closed form: the greatest level M wins; a
  // repeat at M sums to (M, inf), otherwise the head residues at M add up.
  Rng rng(9);
  for (int i = 0; i < 1000; ++i) {
    std::vector<Value> head;
    std::size_t len = rng() % 4;
    long long m = std::numeric_limits<long long>::min();
    for (std::size_t k = 0; k < len; ++k) {
      head.push_back(random_finite(o, rng));
      m = std::max(m, int_level(head.back()));
    }
    Value rep = random_finite(o, rng);
    long long rl = int_level(rep);
    std::string want;
    if (rl >= m) {
      want = "(" + std::to_string(rl) + ",inf)";
    } else {
      Q total = 0;
      for (const auto& h : head) {
        if (int_level(h) == m) total += residue(h).as_real().rational();
      }
      want = "(" + std::to_string(m) + "," + total.str() + ")";
    }
    SeqGen g{head, ConstantRepeat{rep}};
    c.equal(sum_sequence(o, g).str(), want, "repeat sum in O");
    if (rl >= m) {
      c.throws(ErrorKind::NotSummable, [&] { sum_sequence(p, g); }, "repeat at the top level in P");
    }
  }

  // Finite suprema in iterated s-insertions of N0 against the lexicographic max.
  std::uint64_t exhaustive = 0, sampled = 0;
  std::vector<std::string> gaps;
  for (int n = 1; n <= 4; ++n) {
    StructDesc d = StructDesc::base(BaseKind::N0);
    for (int i = 1; i < n; ++i) d = StructDesc::s_insert(StructDesc::base(BaseKind::N0), d, false);
    int points = 1;
    for (int i = 0; i < n; ++i) points *= 5;
    // Grid point g has digits g_1..g_n base 5, which is also its lexicographic rank.
    std::vector<Value> grid;
    for (int g = 0; g < points; ++g) {
      std::vector<int> digits(n);
      for (int i = n - 1, r = g; i >= 0; --i, r /= 5) digits[i] = r % 5;
      std::string lit = std::to_string(digits[n - 1]);
      for (int i = n - 2; i >= 0; --i) lit = "(" + std::to_string(digits[i]) + "," + lit + ")";
      grid.push_back(parse_value(d, lit));
    }
    auto run = [&](const std::vector<int>& idx) {
      std::vector<Value> xs;
      for (int i : idx) xs.push_back(grid[i]);
      int best = *std::max_element(idx.begin(), idx.end());
      if (!(sup(d, std::span<const Value>(xs)) == grid[best])) c.expect(false, d.str() + " finite sup");
    };
    // Exhaustive as far as the subset count stays below about 2.5e5 per size.
    int full_size = 0;
    for (int k = 1; k <= 6 && k <= points; ++k) {
      double count = 1;
      for (int i = 0; i < k; ++i) count = count * (points - i) / (i + 1);
      if (count > 4e5) break;
      each_subset(points, k, [&](const std::vector<int>& idx) {
        run(idx);
        ++exhaustive;
      });
      full_size = k;
    }
    if (full_size < std::min(6, points)) {
      for (int i = 0; i < 100000; ++i) {
        int k = full_size + 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(6 - full_size));
        std::set<int> pick;
        while (static_cast<int>(pick.size()) < k) pick.insert(static_cast<int>(rng() % points));
        run(std::vector<int>(pick.begin(), pick.end()));
        ++sampled;
      }
      gaps.push_back("n=" + std::to_string(n) + " exhaustive only to size " + std::to_string(full_size));
    }
  }
  c.count += exhaustive + sampled;
  if (!c.failures.empty()) return {false, c.failures.front()};
  std::string detail = "closed forms hold; finite sup: " + std::to_string(exhaustive) + " exhaustive sets, " +
                       std::to_string(sampled) + " sampled";
  if (gaps.empty()) return {true, detail};
  // Sets of size <= 6 number about 4.8e9 for n=3 and 8.3e13 for n=4.
  std::string g;
  for (const auto& x : gaps) g += (g.empty() ? "" : ", ") + x;
  return {false, detail + "; exhaustive enumeration infeasible (" + g + ")"};
}

Value oracle_sum(const StructDesc& d, const std::vector<Value>& vals, const Event& e) {
  // Per-level rational residue sums; the greatest level with positive mass wins.
  std::map<long long, Res> by_level;
  for (std::size_t i = 0; i < vals.size(); ++i) {
    if (!e[i] || vals[i].is_zero()) continue;
    Res& r = by_level[int_level(vals[i])];
    XReal x = residue(vals[i]).as_real();
    if (x.is_inf()) r.inf = true; else r.q += x.rational();
  }
  if (by_level.empty()) return Value::zero();
  auto& [lvl, r] = *by_level.rbegin();
  return make_element(d, Value::integer(lvl), Value::real(r.inf ? XReal::inf() : XReal(r.q)));
}

Outcome measure_roundtrips() {
  Check c;
  Rng rng(13);
  const std::vector<StructDesc> descs{StructDesc::O(), StructDesc::P(), StructDesc::S()};
  for (int i = 0; i < 1000; ++i) {
    const StructDesc& d = descs[i % 3];
    LMeasure m = random_measure(d, 1 + rng() % 8, rng);
    if (attained_levels(m).empty()) continue;
    c.expect(recover_from_slices(d, m.space, slice_table(m)).values == m.values, "slice/recover " + scene_to_json(m).dump());
    LMeasure a = align_levels(m);
    c.expect(is_proximal(a), "aligned measure is proximal");
    c.expect(align_levels(a).values == a.values, "align idempotent");
    if (d == StructDesc::S()) continue;
    long long k = static_cast<long long>(rng() % 7) - 3;
    c.expect(shift_levels(shift_levels(m, k), -k).values == m.values, "shift then unshift");
  }
  std::uint64_t pairs = 0;
  for (std::size_t atoms = 1; atoms <= 10; ++atoms) {
    LMeasure m = random_measure(StructDesc::O(), atoms, rng);
    std::uint64_t codes = 1;
    for (std::size_t i = 0; i < atoms; ++i) codes *= 3;
    // Each atom goes to A, to B or to neither: every disjoint pair exactly once.
    for (std::uint64_t code = 0; code < codes; ++code) {
      Event a = m.space.none(), b = m.space.none();
      for (std::size_t i = 0, r = code; i < atoms; ++i, r /= 3) {
        if (r % 3 == 1) a.set(i);
        if (r % 3 == 2) b.set(i);
      }
      Value lhs = measure_of(m, a | b);
      c.expect(lhs == add(m.desc, measure_of(m, a), measure_of(m, b)), "finite additivity");
      c.expect(lhs == oracle_sum(m.desc, m.values, a | b), "measure against per-level sums");
      ++pairs;
    }
  }
  std::string detail = "1000 random measures; " + std::to_string(pairs) + " disjoint event pairs on 1..10 atoms";
  return {c.failures.empty(), c.failures.empty() ? detail : c.failures.front()};
}

Outcome integration() {
  Check c;
  LMeasure dirac(StructDesc::P(), AtomSpace({"p", "q"}), {parse_value(StructDesc::P(), "(0,1)"), Value::zero()});
  c.equal(integrate_real(dirac, {XReal(1), XReal(5)}, dirac.space.all()).str(), "(0,1)", "Dirac integral");

  Rng rng(21);
  const StructDesc p = StructDesc::P();
  const StructDesc dp = StructDesc::double_of(p);
  for (int i = 0; i < 1000; ++i) {
    std::size_t atoms = 1 + rng() % 7;
    LMeasure m = random_measure(p, atoms, rng);
    std::vector<XReal> f;
    for (std::size_t k = 0; k < atoms; ++k) f.push_back(random_xreal(rng, false, true));
    Event a = m.space.none(), b = m.space.none();
    for (std::size_t k = 0; k < atoms; ++k) {
      int r = static_cast<int>(rng() % 3);
      if (r == 1) a.set(k);
      if (r == 2) b.set(k);
    }
    Value whole = integrate_real(m, f, a | b);
    c.expect(whole == add(p, integrate_real(m, f, a), integrate_real(m, f, b)), "additivity over disjoint events");
    // Brute force: weight every atom value by f and take per-level sums.
    std::vector<Value> weighted;
    for (std::size_t k = 0; k < atoms; ++k) {
      weighted.push_back(f[k].is_zero() || m.values[k].is_zero()
                             ? Value::zero()
                             : make_element(p, level(m.values[k]), Value::real(f[k] * residue(m.values[k]).as_real())));
    }
    c.expect(whole == oracle_sum(p, weighted, a | b), "weighted-sum oracle");

    // Single-level measures: the integral is (k, sum f * residue).
    LMeasure flat = m;
    long long lvl = static_cast<long long>(rng() % 5) - 2;
    Q total = 0;
    for (std::size_t k = 0; k < atoms; ++k) {
      if (flat.values[k].is_zero()) continue;
      flat.values[k] = make_element(p, Value::integer(lvl), residue(flat.values[k]));
      total += f[k].rational() * residue(flat.values[k]).as_real().rational();
    }
    std::string want = total == 0 ? "0" : "(" + std::to_string(lvl) + "," + total.str() + ")";
    c.equal(integrate_real(flat, f, flat.space.all()).str(), want, "single-level oracle");

    LFunction g;
    g.desc = dp;
    for (std::size_t k = 0; k < atoms; ++k) {
      Value v = random_value(p, rng);
      g.values.push_back(v.is_zero() ? v : Value::signed_value(rng() % 2 == 0, v));
    }
    LFunction neg = g;
    for (auto& v : neg.values) v = negate(dp, v);
    try {
      SignedIntegral s = integrate_signed(m, g, m.space.all());
      SignedIntegral t = integrate_signed(m, neg, m.space.all());
      c.expect(t.value == negate(dp, s.value) && t.positive == s.negative && t.negative == s.positive,
               "signed negation symmetry");
    } catch (const Error& e) {
      c.expect(e.kind() == ErrorKind::NotRepresentable, std::string("signed integral: ") + e.what());
    }
  }
  return {c.failures.empty(), c.failures.empty() ? "Dirac (0,1); 1000 random cases" : c.failures.front()};
}

// Path by breadth-first search from x, independent of the tree's own routines.
std::vector<std::string> bfs_path(const LTree& t, const std::string& x, const std::string& y) {
  std::map<std::string, std::vector<std::string>> adj;
  for (const auto& e : t.edges()) {
    adj[e.a].push_back(e.b);
    adj[e.b].push_back(e.a);
  }
  std::map<std::string, std::string> parent{{x, x}};
  std::vector<std::string> queue{x};
  for (std::size_t i = 0; i < queue.size(); ++i) {
    for (const auto& n : adj[queue[i]]) {
      if (parent.emplace(n, queue[i]).second) queue.push_back(n);
    }
  }
  std::vector<std::string> path{y};
  while (path.back() != x) path.push_back(parent.at(path.back()));
  std::reverse(path.begin(), path.end());
  return path;
}

Outcome tree_metric() {
  Check c;
  Rng rng(31);
  std::uint64_t triples = 0;
  const int trees = 240;
  for (int i = 0; i < trees; ++i) {
    std::size_t n = 1 + static_cast<std::size_t>(i % 12);
    LTree t = random_tree(i % 2 ? StructDesc::O() : StructDesc::S(), n, rng);
    MetricReport r = verify_metric(t);
    c.expect(r.ok(), "tree " + std::to_string(i) + (r.problems.empty() ? "" : ": " + r.problems.front()));
    triples += r.triples;
    for (const auto& x : t.nodes()) {
      for (const auto& y : t.nodes()) {
        std::vector<std::string> pxy = bfs_path(t, x, y);
        c.expect(t.segment(x, y) == pxy, "segment");
        for (const auto& z : t.nodes()) {
          std::vector<std::string> pxz = bfs_path(t, x, z);
          std::size_t k = 0;
          while (k + 1 < pxy.size() && k + 1 < pxz.size() && pxy[k + 1] == pxz[k + 1]) ++k;
          c.expect(t.meet(x, y, z) == pxy[k], "meet against path intersection");
        }
      }
    }
  }
  std::string detail = std::to_string(trees) + " trees of 1..12 nodes, " + std::to_string(triples) + " triples";
  return {c.failures.empty(), c.failures.empty() ? detail : c.failures.front()};
}

std::vector<Value> switch_sums(const Track& t, const WeightSystem& w, const Cocycle& k) {
  std::vector<Value> out;
  for (const auto& s : check_branch_equations(t.graph, w, k).switches) {
    out.push_back(s.side1);
    out.push_back(s.side2);
  }
  return out;
}

Outcome weights() {
  Check c;
  Rng rng(41);
  for (const char* file : {"track1.json", "track2.json", "track3.json"}) {
    std::string path = g_data + "/" + file;
    Track t = track_from_json(parse_json(read_file(path), path));
    c.expect(check_branch_equations(t.graph, t.weights, t.cocycle).ok, std::string(file) + " balanced");
    for (int i = 0; i < 100; ++i) {
      Value u = random_unit(t.weights.desc, rng);
      c.expect(check_branch_equations(t.graph, apply_deck(t.weights, u), t.cocycle).ok,
               std::string(file) + " deck by " + u.str());
    }
    // Random systems on the same graph: weights and multipliers arbitrary units.
    for (int i = 0; i < 100; ++i) {
      WeightSystem w = t.weights;
      for (auto& [sec, v] : w.weight) v = random_unit(w.desc, rng);
      Cocycle k;
      for (const auto& sec : t.graph.sectors) {
        for (const char* end : {"start", "end"}) {
          if (rng() % 2) k.crossings.push_back({{sec, end}, random_unit(w.desc, rng)});
        }
      }
      std::vector<Value> before = switch_sums(t, w, k);
      bool balanced = check_branch_equations(t.graph, w, k).ok;
      for (int move = 0; move < 3; ++move) {
        const std::string& sec = t.graph.sectors[rng() % t.graph.sectors.size()];
        gauge_move(t.graph, w, k, sec, random_unit(w.desc, rng));
      }
      c.expect(switch_sums(t, w, k) == before, std::string(file) + " gauge move keeps switch sums");
      c.expect(check_branch_equations(t.graph, w, k).ok == balanced, std::string(file) + " gauge move keeps balance");
    }
  }
  return {c.failures.empty(), c.failures.empty() ? "3 example tracks balanced; 300 deck and 300 gauge trials" : c.failures.front()};
}

std::string run_cli(const std::string& args, int* status) {
  std::string cmd = g_cli + " " + args + " 2>&1";
  std::string out;
  FILE* p = popen(cmd.c_str(), "r");
  if (!p) return out;
  std::array<char, 4096> buf{};
  std::size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), p)) > 0) out.append(buf.data(), n);
  int rc = pclose(p);
  if (status) *status = WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
  return out;
}

Outcome cli() {
  Check c;
  // Golden files: "name<TAB>exit<TAB>arguments" per line of cases.tsv.
  std::ifstream cases(g_golden + "/cases.tsv");
  std::string line;
  int goldens = 0;
  while (std::getline(cases, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::istringstream ls(line);
    std::string name, code, args;
    std::getline(ls, name, '\t');
    std::getline(ls, code, '\t');
    std::getline(ls, args);
    std::ifstream f(g_golden + "/" + name + ".out", std::ios::binary);
    std::string want((std::istreambuf_iterator<char>(f)), std::istreambuf_iterator<char>());
    int status = -1;
    std::string got = run_cli(args, &status);
    c.expect(f.good() || !want.empty(), name + ": golden file missing");
    c.expect(got == want, name + ": output differs from golden file");
    c.expect(status == std::stoi(code), name + ": exit " + std::to_string(status) + ", want " + code);
    ++goldens;
  }
  c.expect(goldens > 0, "no golden cases found");

  // Literal roundtrip over randomly generated values.
  Rng rng(51);
  std::vector<StructDesc> descs;
  for (const auto& [name, d] : law_structures()) descs.push_back(d);
  for (const char* s : {"Sbar", "double(P)", "N0 \\/ (Rc \\/ Nbar0)", "(N0 /\\ N0) /\\ N0", "Nbar0", "Z b/\\ Ro", "Rc b\\/ N0"}) {
    descs.push_back(parse_struct(s));
  }
  for (int i = 0; i < 10000; ++i) {
    const StructDesc& d = descs[i % descs.size()];
    Value v = random_value(d, rng);
    std::string text = v.str();
    Value back = parse_value(d, text);
    c.expect(back == v && back.str() == text, d.str() + " roundtrip " + text);
  }

  SelfcheckReport a = run_selfcheck(42, 200), b = run_selfcheck(42, 200);
  bool same = a.laws.size() == b.laws.size();
  for (std::size_t i = 0; same && i < a.laws.size(); ++i) {
    same = a.laws[i].law == b.laws[i].law && a.laws[i].cases == b.laws[i].cases &&
           a.laws[i].failures == b.laws[i].failures && a.laws[i].witness == b.laws[i].witness;
  }
  c.expect(same && a.ok(), "selfcheck deterministic and passing");
  int s1 = -1, s2 = -1;
  std::string o1 = run_cli("selfcheck --seed 9 --cases 100", &s1), o2 = run_cli("selfcheck --seed 9 --cases 100", &s2);
  c.expect(o1 == o2 && s1 == 0 && s2 == 0, "CLI selfcheck output identical across runs");

  std::string detail = std::to_string(goldens) + " golden outputs bit-exact; 10000 literal roundtrips; selfcheck deterministic";
  return {c.failures.empty(), c.failures.empty() ? detail : c.failures.front()};
}

}  // namespace

int main(int argc, char** argv) {
  if (argc != 4) {
    std::cerr << "usage: acceptance <ordalg-cli> <golden-dir> <data-dir>\n";
    return 2;
  }
  g_cli = argv[1];
  g_golden = argv[2];
  g_data = argv[3];

  struct Criterion {
    int id;
    const char* name;
    Outcome (*run)();
    double limit_ms;  // 0: no time bound
  };
  const std::vector<Criterion> all{
      {1, "dartboard exactness", dartboard, 1000},
      {2, "bayes exactness", bayes_quadrants, 0},
      {3, "non-associativity witness", non_associativity, 0},
      {4, "algebraic law suites", law_suites, 30000},
      {5, "s-insertion reassociation", reassociation, 0},
      {6, "summability and suprema", summability, 0},
      {7, "measure roundtrips", measure_roundtrips, 0},
      {8, "integration", integration, 0},
      {9, "tree metric", tree_metric, 0},
      {10, "weights", weights, 0},
      {11, "cli", cli, 0},
  };
  int failed = 0;
  for (const auto& cr : all) {
    auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = cr.run();
    } catch (const std::exception& e) {
      o = {false, std::string("unexpected exception: ") + e.what()};
    }
    double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    if (cr.limit_ms > 0 && ms > cr.limit_ms) {
      o.pass = false;
      o.detail += "; over the time limit of " + std::to_string(static_cast<int>(cr.limit_ms)) + " ms";
    }
    failed += o.pass ? 0 : 1;
    std::printf("[%s] %2d %-26s %8.1f ms  %s\n", o.pass ? "PASS" : "FAIL", cr.id, cr.name, ms, o.detail.c_str());
    std::fflush(stdout);
  }
  std::printf("%d of %zu criteria pass\n", static_cast<int>(all.size()) - failed, all.size());
  return failed == 0 ? 0 : 1;
}
