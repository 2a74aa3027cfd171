#include "lgres/clause_ops.hpp"

#include <algorithm>
#include <map>

namespace lgres {

namespace {

// Matching where identity bindings must be tracked. Bindings live in a flat
// vector so backtracking is a truncation.
using VarMap = std::vector<std::pair<VarId, Term>>;

bool match_term(const Term& p, const Term& t, VarMap& m) {
  if (p.is_var()) {
    for (const auto& [v, bound] : m) {
      if (v == p.var_id()) return bound == t;
    }
    m.emplace_back(p.var_id(), t);
    return true;
  }
  if (p.kind() != t.kind() || p.symbol() != t.symbol()) return false;
  auto pa = p.args();
  auto ta = t.args();
  for (std::size_t i = 0; i < pa.size(); ++i) {
    if (!match_term(pa[i], ta[i], m)) return false;
  }
  return true;
}

bool match_literal(const Literal& p, const Literal& t, VarMap& m) {
  if (p.positive != t.positive || p.atom.predicate != t.atom.predicate) return false;
  for (std::size_t i = 0; i < p.atom.args.size(); ++i) {
    if (!match_term(p.atom.args[i], t.atom.args[i], m)) return false;
  }
  return true;
}

bool subsumes_from(const Clause& c, const Clause& d, std::size_t i, VarMap& m) {
  if (i == c.literals.size()) return true;
  for (const Literal& target : d.literals) {
    std::size_t mark = m.size();
    if (match_literal(c.literals[i], target, m) && subsumes_from(c, d, i + 1, m)) return true;
    m.erase(m.begin() + static_cast<std::ptrdiff_t>(mark), m.end());
  }
  return false;
}

// Bijective renaming search for the variant check.
bool rename_term(const Term& a, const Term& b, std::map<VarId, VarId>& fwd,
                 std::map<VarId, VarId>& bwd) {
  if (a.is_var() || b.is_var()) {
    if (!a.is_var() || !b.is_var()) return false;
    auto f = fwd.find(a.var_id());
    auto g = bwd.find(b.var_id());
    if (f == fwd.end() && g == bwd.end()) {
      fwd.emplace(a.var_id(), b.var_id());
      bwd.emplace(b.var_id(), a.var_id());
      return true;
    }
    return f != fwd.end() && g != bwd.end() && f->second == b.var_id() &&
           g->second == a.var_id();
  }
  if (a.kind() != b.kind() || a.symbol() != b.symbol()) return false;
  auto aa = a.args();
  auto ba = b.args();
  for (std::size_t i = 0; i < aa.size(); ++i) {
    if (!rename_term(aa[i], ba[i], fwd, bwd)) return false;
  }
  return true;
}

bool variant_from(const Clause& a, const Clause& b, std::size_t i, std::vector<bool>& used,
                  std::map<VarId, VarId>& fwd, std::map<VarId, VarId>& bwd) {
  if (i == a.literals.size()) return true;
  const Literal& la = a.literals[i];
  for (std::size_t j = 0; j < b.literals.size(); ++j) {
    const Literal& lb = b.literals[j];
    if (used[j] || la.positive != lb.positive || la.atom.predicate != lb.atom.predicate) continue;
    auto f = fwd;
    auto g = bwd;
    bool ok = true;
    for (std::size_t k = 0; ok && k < la.atom.args.size(); ++k)
      ok = rename_term(la.atom.args[k], lb.atom.args[k], f, g);
    if (!ok) continue;
    used[j] = true;
    if (variant_from(a, b, i + 1, used, f, g)) return true;
    used[j] = false;
  }
  return false;
}

void encode(const Term& t, std::string& out) {
  switch (t.kind()) {
    case Term::Kind::Variable:
      out += '_';
      return;
    case Term::Kind::Constant:
      out += 'c' + std::to_string(t.symbol());
      return;
    case Term::Kind::Compound:
      out += 'f' + std::to_string(t.symbol()) + '(';
      for (const Term& a : t.args()) {
        encode(a, out);
        out += ',';
      }
      out += ')';
      return;
  }
}

}  // namespace

std::optional<Substitution> match(const Term& pattern, const Term& target) {
  VarMap m;
  if (!match_term(pattern, target, m)) return std::nullopt;
  Substitution theta;
  for (auto& [v, t] : m) theta.bind(v, t);
  return theta;
}

std::optional<Substitution> match(const Atom& pattern, const Atom& target) {
  if (pattern.predicate != target.predicate || pattern.args.size() != target.args.size())
    return std::nullopt;
  VarMap m;
  for (std::size_t i = 0; i < pattern.args.size(); ++i) {
    if (!match_term(pattern.args[i], target.args[i], m)) return std::nullopt;
  }
  Substitution theta;
  for (auto& [v, t] : m) theta.bind(v, t);
  return theta;
}

bool subsumes(const Clause& c, const Clause& d) {
  VarMap m;
  return subsumes_from(c, d, 0, m);
}

Clause condense(const Clause& c) {
  Clause cur;
  for (const Literal& l : c.literals) {
    if (std::find(cur.literals.begin(), cur.literals.end(), l) == cur.literals.end())
      cur.literals.push_back(l);
  }
  if (is_ground(cur)) return cur;
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i < cur.literals.size(); ++i) {
      Clause candidate = cur;
      candidate.literals.erase(candidate.literals.begin() + static_cast<std::ptrdiff_t>(i));
      if (subsumes(cur, candidate)) {
        cur = std::move(candidate);
        changed = true;
        break;
      }
    }
  }
  return cur;
}

bool is_variant(const Clause& a, const Clause& b) {
  if (a.literals.size() != b.literals.size()) return false;
  std::vector<bool> used(b.literals.size(), false);
  std::map<VarId, VarId> fwd, bwd;
  return variant_from(a, b, 0, used, fwd, bwd);
}

bool is_tautology(const Clause& c) {
  for (std::size_t i = 0; i < c.literals.size(); ++i) {
    for (std::size_t j = i + 1; j < c.literals.size(); ++j) {
      if (c.literals[i].positive != c.literals[j].positive &&
          c.literals[i].atom == c.literals[j].atom)
        return true;
    }
  }
  return false;
}

std::string variant_key(const Clause& c) {
  std::vector<std::string> parts;
  parts.reserve(c.literals.size());
  for (const Literal& l : c.literals) {
    std::string s = l.positive ? "+" : "-";
    s += std::to_string(l.atom.predicate);
    s += '(';
    for (const Term& t : l.atom.args) {
      encode(t, s);
      s += ',';
    }
    s += ')';
    parts.push_back(std::move(s));
  }
  std::sort(parts.begin(), parts.end());
  std::string key;
  for (const auto& p : parts) key += p + '|';
  return key;
}

LgcCheck check_lgc(const Clause& c) {
  LgcCheck out;
  if (!is_simple(c)) {
    out.reason = "not simple";
    return out;
  }
  if (!is_weakly_covering(c)) {
    out.reason = "not weakly covering";
    return out;
  }
  if (is_ground(c)) {
    out.verdict = LgcCheck::Verdict::Ground;
    return out;
  }
  std::vector<VarSet> guard_vars;
  for (std::size_t i = 0; i < c.literals.size(); ++i) {
    const Literal& l = c.literals[i];
    if (l.negative() && is_flat(l) && !is_ground(l)) {
      out.guards.push_back(i);
      guard_vars.push_back(vars_of(l));
    }
  }
  VarSet vars = vars_of(c);
  for (auto x = vars.begin(); x != vars.end(); ++x) {
    for (auto y = x; y != vars.end(); ++y) {
      bool covered = std::any_of(guard_vars.begin(), guard_vars.end(), [&](const VarSet& g) {
        return g.count(*x) && g.count(*y);
      });
      if (!covered) {
        out.guards.clear();
        out.reason = "no guard set covers all variable pairs";
        return out;
      }
    }
  }
  out.verdict = LgcCheck::Verdict::Guarded;
  return out;
}

}  // namespace lgres
