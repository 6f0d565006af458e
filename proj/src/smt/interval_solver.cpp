#include <algorithm>
#include <map>
#include <set>

#include "overfix/smt/solver.hpp"

namespace overfix::smt {

namespace {

constexpr Int kInf = kIntInfinity;

struct Interval {
  Int lo = -kInf;
  Int hi = kInf;
  bool empty() const { return lo > hi; }
  bool singleton() const { return lo == hi; }
  bool contains(Int v) const { return lo <= v && v <= hi; }
};

Interval meet(Interval a, Interval b) { return {std::max(a.lo, b.lo), std::min(a.hi, b.hi)}; }
Interval hull(Interval a, Interval b) { return {std::min(a.lo, b.lo), std::max(a.hi, b.hi)}; }

Int floorDiv(Int a, Int b) {
  Int q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

Int ceilDiv(Int a, Int b) {
  Int q = a / b;
  if ((a % b != 0) && ((a < 0) == (b < 0))) ++q;
  return q;
}

Interval mulI(Interval a, Interval b) {
  Int c[] = {satMul(a.lo, b.lo), satMul(a.lo, b.hi), satMul(a.hi, b.lo), satMul(a.hi, b.hi)};
  return {*std::min_element(c, c + 4), *std::max_element(c, c + 4)};
}

// Integers x with x*b in r for some b in `b`; `b` must exclude zero.
Interval quotientHull(Interval r, Interval b) {
  Int lo = kInf;
  Int hi = -kInf;
  for (Int rv : {r.lo, r.hi}) {
    for (Int bv : {b.lo, b.hi}) {
      lo = std::min(lo, ceilDiv(rv, bv));
      hi = std::max(hi, floorDiv(rv, bv));
    }
  }
  return {lo, hi};
}

// Truncating division hull for a divisor interval that excludes zero.
Interval truncDivI(Interval a, Interval b) {
  Int lo = kInf;
  Int hi = -kInf;
  for (Int av : {a.lo, a.hi}) {
    for (Int bv : {b.lo, b.hi}) {
      Int q = av / bv;
      lo = std::min(lo, q);
      hi = std::max(hi, q);
    }
  }
  return {lo, hi};
}

enum class Tri { True, False, Unknown };

class IntervalSolver final : public Solver {
 public:
  explicit IntervalSolver(IntervalOptions o) : opts_(o) {}

  std::string name() const override { return "internal"; }

  SolveResult check(const SmtScript& script) override {
    vars_.clear();
    names_.clear();
    for (const auto& d : script.decls()) {
      vars_.emplace(d.name, names_.size());
      names_.push_back(d.name);
    }
    userVars_ = names_.size();
    constraints_.clear();
    linearize(script);
    nodes_ = 0;
    outOfBudget_ = false;
    std::vector<Interval> box(names_.size());
    Model witness;
    bool found = search(box, witness);
    SolveResult r;
    if (found) {
      r.status = Status::Sat;
      for (std::size_t i = userVars_; i < names_.size(); ++i) witness.erase(names_[i]);
      r.model = std::move(witness);
    } else if (outOfBudget_) {
      r.status = Status::Unknown;
      r.reason = "search budget exhausted";
    } else {
      r.status = Status::Unsat;
    }
    return r;
  }

 private:
  using Box = std::vector<Interval>;

  // Linear normal form over monomials: sum of coef * atom + k.
  struct Lin {
    std::map<std::string, Int> coef;
    std::map<std::string, Formula> atoms;
    Int k = 0;
    bool ok = true;
  };

  static bool huge(Int v) { return v >= kInf / 4 || v <= -kInf / 4; }

  static void addTo(Lin& out, const Lin& x, Int scale) {
    if (!x.ok || huge(scale)) {
      out.ok = false;
      return;
    }
    for (const auto& [key, c] : x.coef) {
      Int v = satAdd(out.coef[key], satMul(c, scale));
      if (huge(v)) out.ok = false;
      if (v == 0) {
        out.coef.erase(key);
      } else {
        out.coef[key] = v;
        out.atoms[key] = x.atoms.at(key);
      }
    }
    out.k = satAdd(out.k, satMul(x.k, scale));
    if (huge(out.k)) out.ok = false;
  }

  static Lin atom(const Formula& f, std::string key) {
    Lin l;
    l.coef[key] = 1;
    l.atoms[key] = f;
    return l;
  }

  static void factors(const Formula& f, std::vector<Formula>& out) {
    if (f->op == Op::Mul) {
      factors(f->args[0], out);
      factors(f->args[1], out);
    } else {
      out.push_back(f);
    }
  }

  Lin lin(const Formula& f, int depth) const {
    const auto& a = f->args;
    switch (f->op) {
      case Op::Const: {
        Lin l;
        l.k = f->value;
        return l;
      }
      case Op::Var: {
        auto it = defs_.find(f->var);
        if (it != defs_.end() && depth < 8) return lin(it->second, depth + 1);
        return atom(f, f->var);
      }
      case Op::Add:
      case Op::Sub: {
        Lin l;
        addTo(l, lin(a[0], depth), 1);
        addTo(l, lin(a[1], depth), f->op == Op::Add ? 1 : -1);
        return l;
      }
      case Op::Neg: {
        Lin l;
        addTo(l, lin(a[0], depth), -1);
        return l;
      }
      case Op::Mul: {
        Lin x = lin(a[0], depth), y = lin(a[1], depth);
        if (x.ok && x.coef.empty()) {
          Lin l;
          addTo(l, y, x.k);
          return l;
        }
        if (y.ok && y.coef.empty()) {
          Lin l;
          addTo(l, x, y.k);
          return l;
        }
        std::vector<Formula> fs;
        factors(f, fs);
        std::vector<std::string> keys;
        for (const auto& g : fs) keys.push_back(toSmt(g));
        std::sort(keys.begin(), keys.end());
        std::string key = "(*";
        for (const auto& k : keys) key += " " + k;
        return atom(f, key + ")");
      }
      default: return atom(f, toSmt(f));
    }
  }

  static Op mirror(Op op) {
    switch (op) {
      case Op::Lt: return Op::Gt;
      case Op::Le: return Op::Ge;
      case Op::Gt: return Op::Lt;
      case Op::Ge: return Op::Le;
      default: return op;
    }
  }

  // Rewrites `l op r` as `aux op c` where aux names the normalized linear
  // form of l - r, so atoms over the same form share one interval.
  Formula normalizeAtom(const Formula& f) {
    Lin l;
    addTo(l, lin(f->args[0], 0), 1);
    addTo(l, lin(f->args[1], 0), -1);
    if (!l.ok) return f;
    if (l.coef.empty()) return binary(f->op, constant(0), constant(-l.k));
    Op op = f->op;
    if (l.coef.begin()->second < 0) {
      Lin n;
      addTo(n, l, -1);
      l = std::move(n);
      op = mirror(op);
    }
    if (!l.ok) return f;
    Formula term;
    if (l.coef.size() == 1 && l.coef.begin()->second == 1 && l.atoms.begin()->second->op == Op::Var) {
      term = l.atoms.begin()->second;
    } else {
      std::string key;
      for (const auto& [k, c] : l.coef) key += toString(c) + "*" + k + ";";
      auto it = aux_.find(key);
      if (it == aux_.end()) {
        std::string name = "$lin_" + std::to_string(aux_.size());
        vars_.emplace(name, names_.size());
        names_.push_back(name);
        Formula sum;
        for (const auto& [k, c] : l.coef) {
          Formula t = c == 1 ? l.atoms.at(k) : mul(constant(c), l.atoms.at(k));
          sum = sum ? add(sum, t) : t;
        }
        linking_.push_back(eq(var(name), sum));
        it = aux_.emplace(key, name).first;
      }
      term = var(it->second);
    }
    return binary(op, term, constant(-l.k));
  }

  // `t op (div n d)`, either way round, as a division-free formula over
  // the signs of n and d (truncating division). The d = 0 case keeps the
  // original atom and is returned separately so it is not lowered again.
  struct Lowered {
    Formula main;
    Formula zeroCase;
  };
  static std::optional<Lowered> lowerDivAtom(const Formula& f) {
    Op op = f->op;
    Formula t = f->args[0], q = f->args[1];
    if (q->op != Op::Div) {
      if (t->op != Op::Div) return std::nullopt;
      std::swap(t, q);
      op = mirror(op);
    }
    const Formula& n = q->args[0];
    const Formula& d = q->args[1];
    Formula zero = constant(0);
    // t + off <= trunc(n / d)
    auto le = [&](Int off) {
      Formula xd = mul(t, d);
      if (off != 0) xd = add(xd, mul(constant(off), d));
      Formula dPos = gt(d, zero), dNeg = lt(d, zero), nPos = ge(n, zero), nNeg = lt(n, zero);
      return lor(lor(land(land(dPos, nPos), smt::le(xd, n)), land(land(dPos, nNeg), lt(sub(xd, d), n))),
                 lor(land(land(dNeg, nPos), gt(sub(xd, d), n)), land(land(dNeg, nNeg), ge(xd, n))));
    };
    Formula lowered;
    switch (op) {
      case Op::Le: lowered = le(0); break;
      case Op::Lt: lowered = le(1); break;
      case Op::Gt: lowered = lnot(le(0)); break;
      case Op::Ge: lowered = lnot(le(1)); break;
      case Op::Eq: lowered = land(le(0), lnot(le(1))); break;
      case Op::Ne: lowered = lnot(land(le(0), lnot(le(1)))); break;
      default: return std::nullopt;
    }
    return Lowered{land(ne(d, zero), lowered), land(eq(d, zero), f)};
  }

  Formula normalize(const Formula& f) {
    switch (f->op) {
      case Op::And: return land(normalize(f->args[0]), normalize(f->args[1]));
      case Op::Or: return lor(normalize(f->args[0]), normalize(f->args[1]));
      case Op::Not: return lnot(normalize(f->args[0]));
      case Op::Lt:
      case Op::Le:
      case Op::Gt:
      case Op::Ge:
      case Op::Eq:
      case Op::Ne:
        if (auto low = lowerDivAtom(f)) return lor(normalize(low->main), low->zeroCase);
        return normalizeAtom(f);
      default: return f;
    }
  }

  void linearize(const SmtScript& script) {
    defs_.clear();
    aux_.clear();
    linking_.clear();
    std::map<std::string, int> defCount;
    for (const auto& a : script.asserts()) {
      const Formula& f = a.formula;
      if (f->op != Op::Eq || f->args[0]->op != Op::Var) continue;
      std::set<std::string> used;
      collectVars(f->args[1], used);
      if (used.count(f->args[0]->var)) continue;
      if (++defCount[f->args[0]->var] == 1) defs_[f->args[0]->var] = f->args[1];
    }
    for (const auto& [v, n] : defCount) {
      if (n > 1) defs_.erase(v);
    }
    // Keep the original asserts (definitions included) and add the
    // normalized atoms alongside them.
    for (const auto& a : script.asserts()) {
      constraints_.push_back(a.formula);
      Formula n = normalize(a.formula);
      if (n != a.formula && toSmt(n) != toSmt(a.formula)) constraints_.push_back(n);
    }
    for (auto& l : linking_) constraints_.push_back(std::move(l));
  }

  std::size_t index(const Formula& v) const {
    auto it = vars_.find(v->var);
    if (it == vars_.end()) throw UndeclaredVariable(v->var);
    return it->second;
  }

  Interval eval(const Formula& f, const Box& box) const {
    const auto& a = f->args;
    switch (f->op) {
      case Op::Const: return {f->value, f->value};
      case Op::Var: return box[index(f)];
      case Op::Add: {
        Interval x = eval(a[0], box), y = eval(a[1], box);
        return {satAdd(x.lo, y.lo), satAdd(x.hi, y.hi)};
      }
      case Op::Sub: {
        Interval x = eval(a[0], box), y = eval(a[1], box);
        return {satAdd(x.lo, -y.hi), satAdd(x.hi, -y.lo)};
      }
      case Op::Neg: {
        Interval x = eval(a[0], box);
        return {-x.hi, -x.lo};
      }
      case Op::Mul: {
        Interval x = eval(a[0], box);
        if (a[0]->op == Op::Var && a[1]->op == Op::Var && a[0]->var == a[1]->var) {
          Int l = satMul(x.lo, x.lo), h = satMul(x.hi, x.hi);
          if (x.contains(0)) return {0, std::max(l, h)};
          return {std::min(l, h), std::max(l, h)};
        }
        return mulI(x, eval(a[1], box));
      }
      case Op::Div: {
        Interval x = eval(a[0], box), y = eval(a[1], box);
        if (y.contains(0)) {
          Int m = std::max(x.hi < 0 ? -x.hi : x.hi, x.lo < 0 ? -x.lo : x.lo);
          return {-m, m};
        }
        return truncDivI(x, y);
      }
      case Op::Mod: {
        Interval x = eval(a[0], box), y = eval(a[1], box);
        Int m = std::max(y.hi < 0 ? -y.hi : y.hi, y.lo < 0 ? -y.lo : y.lo);
        if (m > 0) m = m - 1;
        Interval r{x.lo >= 0 ? 0 : -m, x.hi <= 0 ? 0 : m};
        Interval ax{x.lo, x.hi};
        if (x.lo >= 0) r.hi = std::min(r.hi, ax.hi);
        if (x.hi <= 0) r.lo = std::max(r.lo, ax.lo);
        return r;
      }
      case Op::Ite: {
        Tri c = decide(a[0], box);
        if (c == Tri::True) return eval(a[1], box);
        if (c == Tri::False) return eval(a[2], box);
        return hull(eval(a[1], box), eval(a[2], box));
      }
      case Op::SqrtApprox: {
        Interval x = eval(a[0], box);
        return {floorSqrt(std::max<Int>(x.lo, 0)), floorSqrt(std::max<Int>(x.hi, 0))};
      }
      default: {
        Tri t = decide(f, box);
        if (t == Tri::True) return {1, 1};
        if (t == Tri::False) return {0, 0};
        return {0, 1};
      }
    }
  }

  Tri decide(const Formula& f, const Box& box) const {
    const auto& a = f->args;
    switch (f->op) {
      case Op::And: {
        Tri x = decide(a[0], box), y = decide(a[1], box);
        if (x == Tri::False || y == Tri::False) return Tri::False;
        if (x == Tri::True && y == Tri::True) return Tri::True;
        return Tri::Unknown;
      }
      case Op::Or: {
        Tri x = decide(a[0], box), y = decide(a[1], box);
        if (x == Tri::True || y == Tri::True) return Tri::True;
        if (x == Tri::False && y == Tri::False) return Tri::False;
        return Tri::Unknown;
      }
      case Op::Not: {
        Tri x = decide(a[0], box);
        if (x == Tri::True) return Tri::False;
        if (x == Tri::False) return Tri::True;
        return Tri::Unknown;
      }
      case Op::Lt:
      case Op::Le:
      case Op::Gt:
      case Op::Ge:
      case Op::Eq:
      case Op::Ne: {
        Interval x = eval(a[0], box), y = eval(a[1], box);
        return compare(f->op, x, y);
      }
      default: {
        Interval x = eval(f, box);
        if (!x.contains(0)) return Tri::True;
        if (x.singleton()) return Tri::False;
        return Tri::Unknown;
      }
    }
  }

  static Tri compare(Op op, Interval x, Interval y) {
    switch (op) {
      case Op::Lt:
        if (x.hi < y.lo) return Tri::True;
        if (x.lo >= y.hi) return Tri::False;
        return Tri::Unknown;
      case Op::Le:
        if (x.hi <= y.lo) return Tri::True;
        if (x.lo > y.hi) return Tri::False;
        return Tri::Unknown;
      case Op::Gt: return compare(Op::Lt, y, x);
      case Op::Ge: return compare(Op::Le, y, x);
      case Op::Eq:
        if (x.singleton() && y.singleton() && x.lo == y.lo) return Tri::True;
        if (x.hi < y.lo || y.hi < x.lo) return Tri::False;
        return Tri::Unknown;
      case Op::Ne: {
        Tri e = compare(Op::Eq, x, y);
        if (e == Tri::True) return Tri::False;
        if (e == Tri::False) return Tri::True;
        return Tri::Unknown;
      }
      default: return Tri::Unknown;
    }
  }

  // Narrows the box so that term `f` can take a value in `r`.
  bool revise(const Formula& f, Interval r, Box& box) const {
    Interval cur = eval(f, box);
    Interval want = meet(cur, r);
    if (want.empty()) return false;
    const auto& a = f->args;
    switch (f->op) {
      case Op::Const: return true;
      case Op::Var: {
        Interval& v = box[index(f)];
        v = meet(v, want);
        return !v.empty();
      }
      case Op::Add: {
        Interval x = eval(a[0], box), y = eval(a[1], box);
        if (!revise(a[0], {satAdd(want.lo, -y.hi), satAdd(want.hi, -y.lo)}, box)) return false;
        x = eval(a[0], box);
        return revise(a[1], {satAdd(want.lo, -x.hi), satAdd(want.hi, -x.lo)}, box);
      }
      case Op::Sub: {
        Interval y = eval(a[1], box);
        if (!revise(a[0], {satAdd(want.lo, y.lo), satAdd(want.hi, y.hi)}, box)) return false;
        Interval x = eval(a[0], box);
        return revise(a[1], {satAdd(x.lo, -want.hi), satAdd(x.hi, -want.lo)}, box);
      }
      case Op::Neg: return revise(a[0], {-want.hi, -want.lo}, box);
      case Op::Mul: {
        if (a[0]->op == Op::Var && a[1]->op == Op::Var && a[0]->var == a[1]->var) {
          // x*x <= hi bounds |x| by floorSqrt(hi).
          if (want.hi < 0) return false;
          if (want.hi < kInf) {
            Int k = floorSqrt(want.hi);
            if (!revise(a[0], {-k, k}, box)) return false;
          }
          return true;
        }
        Interval y = eval(a[1], box);
        if (!y.contains(0) && !revise(a[0], quotientHull(want, y), box)) return false;
        Interval x = eval(a[0], box);
        if (!x.contains(0) && !revise(a[1], quotientHull(want, x), box)) return false;
        return true;
      }
      case Op::Ite: {
        Tri c = decide(a[0], box);
        if (c == Tri::True) return revise(a[1], want, box);
        if (c == Tri::False) return revise(a[2], want, box);
        return true;
      }
      default: return true;
    }
  }

  // Narrows the box so that boolean `f` has truth value `truth`.
  bool enforce(const Formula& f, bool truth, Box& box) const {
    const auto& a = f->args;
    switch (f->op) {
      case Op::Not: return enforce(a[0], !truth, box);
      case Op::And:
        if (truth) return enforce(a[0], true, box) && enforce(a[1], true, box);
        return either(a[0], false, a[1], false, box);
      case Op::Or:
        if (!truth) return enforce(a[0], false, box) && enforce(a[1], false, box);
        return either(a[0], true, a[1], true, box);
      case Op::Lt:
      case Op::Le:
      case Op::Gt:
      case Op::Ge:
      case Op::Eq:
      case Op::Ne: return relate(truth ? f->op : negate(f->op), a[0], a[1], box);
      default: {
        Interval x = eval(f, box);
        if (truth) return !(x.singleton() && x.lo == 0);
        return revise(f, {0, 0}, box);
      }
    }
  }

  bool either(const Formula& p, bool pt, const Formula& q, bool qt, Box& box) const {
    Box left = box;
    Box right = box;
    bool l = enforce(p, pt, left);
    bool r = enforce(q, qt, right);
    if (!l && !r) return false;
    if (!l) {
      box = std::move(right);
    } else if (!r) {
      box = std::move(left);
    } else {
      for (std::size_t i = 0; i < box.size(); ++i) box[i] = hull(left[i], right[i]);
    }
    return true;
  }

  static Op negate(Op op) {
    switch (op) {
      case Op::Lt: return Op::Ge;
      case Op::Le: return Op::Gt;
      case Op::Gt: return Op::Le;
      case Op::Ge: return Op::Lt;
      case Op::Eq: return Op::Ne;
      case Op::Ne: return Op::Eq;
      default: return op;
    }
  }

  bool relate(Op op, const Formula& l, const Formula& r, Box& box) const {
    Interval x = eval(l, box), y = eval(r, box);
    if (x.empty() || y.empty()) return false;
    Tri t = compare(op, x, y);
    if (t == Tri::False) return false;
    if (t == Tri::True) return true;
    switch (op) {
      case Op::Lt:
        if (!revise(l, {-kInf, satAdd(y.hi, -1)}, box)) return false;
        x = eval(l, box);
        return revise(r, {satAdd(x.lo, 1), kInf}, box);
      case Op::Le:
        if (!revise(l, {-kInf, y.hi}, box)) return false;
        x = eval(l, box);
        return revise(r, {x.lo, kInf}, box);
      case Op::Gt: return relate(Op::Lt, r, l, box);
      case Op::Ge: return relate(Op::Le, r, l, box);
      case Op::Eq: {
        Interval m = meet(x, y);
        return revise(l, m, box) && revise(r, m, box);
      }
      case Op::Ne:
        if (y.singleton()) {
          if (x.lo == y.lo) return revise(l, {satAdd(x.lo, 1), kInf}, box);
          if (x.hi == y.lo) return revise(l, {-kInf, satAdd(x.hi, -1)}, box);
        }
        if (x.singleton()) {
          if (y.lo == x.lo) return revise(r, {satAdd(y.lo, 1), kInf}, box);
          if (y.hi == x.lo) return revise(r, {-kInf, satAdd(y.hi, -1)}, box);
        }
        return true;
      default: return true;
    }
  }

  bool propagate(Box& box) const {
    for (int round = 0; round < opts_.propagationRounds; ++round) {
      Box before = box;
      for (const auto& c : constraints_) {
        if (!enforce(c, true, box)) return false;
      }
      bool changed = false;
      for (std::size_t i = 0; i < box.size(); ++i) {
        if (box[i].lo != before[i].lo || box[i].hi != before[i].hi) {
          changed = true;
          break;
        }
      }
      if (!changed) break;
    }
    return true;
  }

  bool verify(const Box& box, Model& out) const {
    Model m;
    for (std::size_t i = 0; i < names_.size(); ++i) m.emplace(names_[i], box[i].lo);
    for (const auto& c : constraints_) {
      auto v = evaluate(c, m);
      if (!v || *v == 0) return false;
    }
    out = std::move(m);
    return true;
  }

  static Int preferred(Interval d) {
    if (d.contains(0)) return 0;
    return d.lo > 0 ? d.lo : d.hi;
  }

  // Greedy descent: fixes one variable at a time to a preferred value,
  // propagating after each choice. Never backtracks.
  bool dive(Box box, Model& out) const {
    for (std::size_t i = 0; i < box.size(); ++i) {
      if (box[i].singleton()) continue;
      bool placed = false;
      for (Int v : {preferred(box[i]), box[i].hi, box[i].lo}) {
        Box trial = box;
        trial[i] = {v, v};
        if (propagate(trial)) {
          box = std::move(trial);
          placed = true;
          break;
        }
      }
      if (!placed) return false;
    }
    return verify(box, out);
  }

  bool search(Box& box, Model& out) {
    if (++nodes_ > opts_.nodeBudget) {
      outOfBudget_ = true;
      return false;
    }
    if (!propagate(box)) return false;
    std::size_t pick = box.size();
    for (std::size_t i = 0; i < box.size(); ++i) {
      if (!box[i].singleton() && pick == box.size()) pick = i;
      if (box[i].lo < 0 && box[i].hi > 0) {
        pick = i;
        break;
      }
    }
    if (pick == box.size()) return verify(box, out);
    if (dive(box, out)) return true;
    Interval d = box[pick];
    std::vector<Interval> parts;
    if (d.lo < 0 && d.hi > 0) {
      // Sign first: products and guards are decided by operand signs.
      parts = {{d.lo, -1}, {0, 0}, {1, d.hi}};
    } else if (d.lo == 0 || d.hi == 0) {
      parts = d.lo == 0 ? std::vector<Interval>{{0, 0}, {1, d.hi}} : std::vector<Interval>{{d.lo, -1}, {0, 0}};
    } else {
      Int mid = d.lo + (d.hi - d.lo) / 2;
      parts = {{d.lo, mid}, {mid + 1, d.hi}};
    }
    for (Interval half : parts) {
      Box child = box;
      child[pick] = half;
      if (search(child, out)) return true;
      if (outOfBudget_) return false;
    }
    return false;
  }

  IntervalOptions opts_;
  std::map<std::string, std::size_t, std::less<>> vars_;
  std::vector<std::string> names_;
  std::vector<Formula> constraints_;
  std::size_t userVars_ = 0;
  std::map<std::string, Formula> defs_;
  std::map<std::string, std::string> aux_;
  std::vector<Formula> linking_;
  std::size_t nodes_ = 0;
  bool outOfBudget_ = false;
};

}  // namespace

std::unique_ptr<Solver> makeIntervalSolver(IntervalOptions options) {
  return std::make_unique<IntervalSolver>(options);
}

}  // namespace overfix::smt
