#include "lgres/io.hpp"

#include <cctype>
#include <map>
#include <optional>
#include <set>
#include <sstream>

namespace lgres {

std::string to_string(Rule r) {
  switch (r) {
    case Rule::Input:
      return "input";
    case Rule::OrderedFactoring:
      return "ordered_factoring";
    case Rule::OrderedResolution:
      return "ordered_resolution";
    case Rule::ResTop:
      return "res_top";
  }
  return "unknown";
}

namespace {

enum class Tok {
  Lower,
  Upper,
  Number,
  LParen,
  RParen,
  LBracket,
  RBracket,
  Comma,
  Colon,
  Dot,
  Not,
  And,
  Or,
  Implies,
  Iff,
  True,
  False,
  End,
};

struct Token {
  Tok kind;
  std::string text;
  int line;
  int column;
};

class Lexer {
 public:
  explicit Lexer(std::string_view src) : src_(src) {}

  std::vector<Token> run() {
    std::vector<Token> out;
    for (;;) {
      skip_space();
      if (pos_ >= src_.size()) {
        out.push_back({Tok::End, "", line_, col_});
        return out;
      }
      out.push_back(next());
    }
  }

 private:
  void skip_space() {
    while (pos_ < src_.size()) {
      char c = src_[pos_];
      if (c == '%') {
        while (pos_ < src_.size() && src_[pos_] != '\n') advance();
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        advance();
      } else {
        return;
      }
    }
  }

  void advance() {
    if (src_[pos_] == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    ++pos_;
  }

  bool starts_with(std::string_view s) const { return src_.substr(pos_, s.size()) == s; }

  Token take(Tok k, std::size_t n) {
    Token t{k, std::string(src_.substr(pos_, n)), line_, col_};
    for (std::size_t i = 0; i < n; ++i) advance();
    return t;
  }

  Token next() {
    char c = src_[pos_];
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t n = 0;
      while (pos_ + n < src_.size() &&
             (std::isalnum(static_cast<unsigned char>(src_[pos_ + n])) || src_[pos_ + n] == '_'))
        ++n;
      bool upper = std::isupper(static_cast<unsigned char>(c)) || c == '_';
      return take(upper ? Tok::Upper : Tok::Lower, n);
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t n = 0;
      while (pos_ + n < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_ + n])))
        ++n;
      return take(Tok::Number, n);
    }
    if (starts_with("<->")) return take(Tok::Iff, 3);
    if (starts_with("->")) return take(Tok::Implies, 2);
    if (starts_with("$true")) return take(Tok::True, 5);
    if (starts_with("$false")) return take(Tok::False, 6);
    switch (c) {
      case '(':
        return take(Tok::LParen, 1);
      case ')':
        return take(Tok::RParen, 1);
      case '[':
        return take(Tok::LBracket, 1);
      case ']':
        return take(Tok::RBracket, 1);
      case ',':
        return take(Tok::Comma, 1);
      case ':':
        return take(Tok::Colon, 1);
      case '.':
        return take(Tok::Dot, 1);
      case '~':
        return take(Tok::Not, 1);
      case '&':
        return take(Tok::And, 1);
      case '|':
        return take(Tok::Or, 1);
      default:
        throw ParseError(std::string("unexpected character '") + c + "'", line_, col_);
    }
  }

  std::string_view src_;
  std::size_t pos_ = 0;
  int line_ = 1;
  int col_ = 1;
};

class Parser {
 public:
  Parser(std::string_view text, Signature& sig, VarTable& vars)
      : toks_(Lexer(text).run()), sig_(sig), vars_(vars) {}

  const Token& peek() const { return toks_[pos_]; }
  bool at(Tok k) const { return peek().kind == k; }
  bool at_end() const { return at(Tok::End); }

  Token expect(Tok k, const char* what) {
    if (!at(k)) fail(std::string("expected ") + what);
    return toks_[pos_++];
  }

  bool accept(Tok k) {
    if (!at(k)) return false;
    ++pos_;
    return true;
  }

  [[noreturn]] void fail(const std::string& msg) const {
    const Token& t = peek();
    std::string found = t.kind == Tok::End ? "end of input" : "'" + t.text + "'";
    throw ParseError(msg + ", found " + found, t.line, t.column);
  }

  // --- terms and atoms -----------------------------------------------------

  Term term(std::map<std::string, VarId>* locals) {
    const Token& t = peek();
    if (t.kind == Tok::Upper) {
      ++pos_;
      return Term::var(variable(t.text, locals));
    }
    if (t.kind != Tok::Lower && t.kind != Tok::Number) fail("expected a term");
    ++pos_;
    if (accept(Tok::LParen)) {
      std::vector<Term> args;
      do {
        args.push_back(term(locals));
      } while (accept(Tok::Comma));
      expect(Tok::RParen, "')'");
      SymbolId f = intern(t, SymbolKind::Function, static_cast<unsigned>(args.size()));
      return Term::compound(f, std::move(args));
    }
    return Term::constant(intern(t, SymbolKind::Constant, 0));
  }

  Atom atom(std::map<std::string, VarId>* locals) {
    Token name = peek();
    if (name.kind != Tok::Lower) fail("expected a predicate name");
    ++pos_;
    Atom a;
    if (accept(Tok::LParen)) {
      do {
        a.args.push_back(term(locals));
      } while (accept(Tok::Comma));
      expect(Tok::RParen, "')'");
    }
    a.predicate = intern(name, SymbolKind::Predicate, static_cast<unsigned>(a.args.size()));
    return a;
  }

  // --- formulas ------------------------------------------------------------

  FormulaPtr formula() {
    FormulaPtr lhs = implication();
    if (accept(Tok::Iff)) return Formula::equivalence(lhs, implication());
    return lhs;
  }

  FormulaPtr implication() {
    FormulaPtr lhs = disjunction();
    if (accept(Tok::Implies)) return Formula::implication(lhs, implication());
    return lhs;
  }

  FormulaPtr disjunction() {
    std::vector<FormulaPtr> parts{conjunction()};
    while (accept(Tok::Or)) parts.push_back(conjunction());
    return Formula::disjunction(std::move(parts));
  }

  FormulaPtr conjunction() {
    std::vector<FormulaPtr> parts{unary()};
    while (accept(Tok::And)) parts.push_back(unary());
    return Formula::conjunction(std::move(parts));
  }

  FormulaPtr unary() {
    if (accept(Tok::Not)) return Formula::negation(unary());
    if (accept(Tok::True)) return Formula::truth();
    if (accept(Tok::False)) return Formula::falsity();
    if (accept(Tok::LParen)) {
      FormulaPtr f = formula();
      expect(Tok::RParen, "')'");
      return f;
    }
    if (at(Tok::Lower) && (peek().text == "forall" || peek().text == "exists") &&
        toks_[pos_ + 1].kind == Tok::LBracket) {
      bool universal = peek().text == "forall";
      ++pos_;
      std::vector<VarId> bound = var_list();
      FormulaPtr body = unary();
      return universal ? Formula::forall(std::move(bound), body)
                       : Formula::exists(std::move(bound), body);
    }
    return Formula::atom(atom(nullptr));
  }

  std::vector<VarId> var_list() {
    expect(Tok::LBracket, "'['");
    std::vector<VarId> out;
    do {
      Token v = expect(Tok::Upper, "a variable");
      out.push_back(vars_.intern(v.text));
    } while (accept(Tok::Comma));
    expect(Tok::RBracket, "']'");
    return out;
  }

  // --- clauses -------------------------------------------------------------

  Clause clause() {
    std::map<std::string, VarId> locals;
    Clause c;
    if (accept(Tok::False)) return c;
    do {
      bool positive = !accept(Tok::Not);
      c.literals.push_back(Literal{positive, atom(&locals)});
    } while (accept(Tok::Or));
    return c;
  }

  // --- statements ----------------------------------------------------------

  void statement(Problem& p) {
    Token kw = expect(Tok::Lower, "a statement keyword");
    Token name = peek();
    if (name.kind != Tok::Lower && name.kind != Tok::Upper && name.kind != Tok::Number)
      fail("expected a statement name");
    ++pos_;
    expect(Tok::Colon, "':'");
    if (kw.text == "formula") {
      p.formulas.push_back({name.text, formula()});
    } else if (kw.text == "fact") {
      Token at_tok = peek();
      Atom a = atom(nullptr);
      if (!is_ground(a)) throw ParseError("fact is not ground", at_tok.line, at_tok.column);
      p.facts.push_back({name.text, std::move(a)});
    } else if (kw.text == "query") {
      p.queries.push_back(query(name.text));
    } else if (kw.text == "clause") {
      p.clauses.push_back({name.text, clause()});
    } else if (kw.text == "option") {
      Token v = peek();
      if (v.kind != Tok::Lower && v.kind != Tok::Upper && v.kind != Tok::Number)
        fail("expected an option value");
      ++pos_;
      p.options[name.text] = v.text;
    } else {
      throw ParseError("unknown statement '" + kw.text + "'", kw.line, kw.column);
    }
    expect(Tok::Dot, "'.'");
  }

  Bcq query(const std::string& name) {
    Token start = peek();
    FormulaPtr f = formula();
    Bcq q{name, {}, {}};
    std::set<VarId> declared;
    while (f->kind() == Formula::Kind::Exists) {
      for (VarId v : f->bound()) {
        if (declared.insert(v).second) q.vars.push_back(v);
      }
      f = f->child();
    }
    std::vector<FormulaPtr> conjuncts;
    if (f->kind() == Formula::Kind::And) {
      conjuncts = f->children();
    } else {
      conjuncts.push_back(f);
    }
    for (const FormulaPtr& c : conjuncts) {
      if (c->kind() != Formula::Kind::Atom)
        throw ParseError("query must be a conjunction of atoms", start.line, start.column);
      if (has_compound_term(c->atom_value()))
        throw ParseError("query contains a compound term", start.line, start.column);
      q.atoms.push_back(c->atom_value());
    }
    // Free variables are existentially closed as well.
    for (const Atom& a : q.atoms) {
      for (VarId v : vars_of(a)) {
        if (declared.insert(v).second) q.vars.push_back(v);
      }
    }
    return q;
  }

 private:
  VarId variable(const std::string& name, std::map<std::string, VarId>* locals) {
    if (!locals) return vars_.intern(name);
    auto [it, inserted] = locals->try_emplace(name, static_cast<VarId>(locals->size()));
    return it->second;
  }

  SymbolId intern(const Token& t, SymbolKind kind, unsigned arity) {
    try {
      return sig_.intern(t.text, kind, arity);
    } catch (const SignatureError& e) {
      throw ParseError(e.what(), t.line, t.column);
    }
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
  Signature& sig_;
  VarTable& vars_;
};

class ClauseNamer {
 public:
  std::string name(VarId v) {
    auto [it, inserted] = names_.try_emplace(v, clause_var_name(names_.size()));
    return it->second;
  }

 private:
  std::map<VarId, std::string> names_;
};

template <class Namer>
void render_term_into(const Signature& sig, const Term& t, Namer& namer, std::string& out) {
  switch (t.kind()) {
    case Term::Kind::Variable:
      out += namer(t.var_id());
      return;
    case Term::Kind::Constant:
      out += sig[t.symbol()].name;
      return;
    case Term::Kind::Compound:
      out += sig[t.symbol()].name;
      out += '(';
      for (std::size_t i = 0; i < t.args().size(); ++i) {
        if (i) out += ',';
        render_term_into(sig, t.args()[i], namer, out);
      }
      out += ')';
      return;
  }
}

template <class Namer>
void render_atom_into(const Signature& sig, const Atom& a, Namer& namer, std::string& out) {
  out += sig[a.predicate].name;
  if (a.args.empty()) return;
  out += '(';
  for (std::size_t i = 0; i < a.args.size(); ++i) {
    if (i) out += ',';
    render_term_into(sig, a.args[i], namer, out);
  }
  out += ')';
}

std::string raw_var(VarId v) { return "V" + std::to_string(v); }

}  // namespace

Problem parse_problem(std::string_view text) {
  Problem p;
  Parser parser(text, p.signature, p.variables);
  while (!parser.at_end()) parser.statement(p);
  return p;
}

Clause parse_clause(std::string_view text, Signature& sig) {
  VarTable unused;
  Parser parser(text, sig, unused);
  Clause c = parser.clause();
  if (!parser.at_end()) parser.fail("expected end of clause");
  return c;
}

FormulaPtr parse_formula(std::string_view text, Signature& sig, VarTable& vars) {
  Parser parser(text, sig, vars);
  FormulaPtr f = parser.formula();
  if (!parser.at_end()) parser.fail("expected end of formula");
  return f;
}

std::string clause_var_name(std::size_t index) {
  static const char* base[] = {"X", "Y", "Z", "U", "V", "W"};
  std::string name = base[index % 6];
  if (index >= 6) name += std::to_string(index / 6);
  return name;
}

std::string render_term(const Signature& sig, const Term& t) {
  auto namer = [](VarId v) { return raw_var(v); };
  std::string out;
  render_term_into(sig, t, namer, out);
  return out;
}

std::string render_atom(const Signature& sig, const Atom& a) {
  auto namer = [](VarId v) { return raw_var(v); };
  std::string out;
  render_atom_into(sig, a, namer, out);
  return out;
}

std::string render_literal(const Signature& sig, const Literal& l) {
  return (l.positive ? "" : "~") + render_atom(sig, l.atom);
}

std::string render_clause(const Signature& sig, const Clause& c) {
  if (c.empty()) return "$false";
  std::vector<std::size_t> all(c.size());
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
  return render_literals(sig, c, all, " | ");
}

std::string render_literals(const Signature& sig, const Clause& c,
                            const std::vector<std::size_t>& positions, const std::string& sep) {
  ClauseNamer names;
  auto namer = [&](VarId v) { return names.name(v); };
  // Name variables by first occurrence in the whole clause.
  std::string scratch;
  for (const Literal& l : c.literals) render_atom_into(sig, l.atom, namer, scratch);
  std::string out;
  for (std::size_t k = 0; k < positions.size(); ++k) {
    if (k) out += sep;
    const Literal& l = c.literals.at(positions[k]);
    if (l.negative()) out += '~';
    render_atom_into(sig, l.atom, namer, out);
  }
  return out;
}

namespace {

void render_formula_into(const Signature& sig, const VarTable& vars, const Formula& f,
                         std::string& out) {
  auto namer = [&](VarId v) { return v < vars.size() ? vars.name(v) : raw_var(v); };
  auto nary = [&](const char* op) {
    out += '(';
    for (std::size_t i = 0; i < f.children().size(); ++i) {
      if (i) out += op;
      render_formula_into(sig, vars, *f.child(i), out);
    }
    out += ')';
  };
  switch (f.kind()) {
    case Formula::Kind::True:
      out += "$true";
      return;
    case Formula::Kind::False:
      out += "$false";
      return;
    case Formula::Kind::Atom:
      render_atom_into(sig, f.atom_value(), namer, out);
      return;
    case Formula::Kind::Not:
      out += '~';
      render_formula_into(sig, vars, *f.child(), out);
      return;
    case Formula::Kind::And:
      nary(" & ");
      return;
    case Formula::Kind::Or:
      nary(" | ");
      return;
    case Formula::Kind::Implies:
      nary(" -> ");
      return;
    case Formula::Kind::Iff:
      nary(" <-> ");
      return;
    case Formula::Kind::Forall:
    case Formula::Kind::Exists: {
      out += f.kind() == Formula::Kind::Forall ? "forall [" : "exists [";
      for (std::size_t i = 0; i < f.bound().size(); ++i) {
        if (i) out += ',';
        out += namer(f.bound()[i]);
      }
      out += "] ";
      render_formula_into(sig, vars, *f.child(), out);
      return;
    }
  }
}

}  // namespace

std::string render_formula(const Signature& sig, const VarTable& vars, const Formula& f) {
  std::string out;
  render_formula_into(sig, vars, f, out);
  return out;
}

std::string render_substitution(const Signature& sig, const Substitution& s) {
  std::string out = "{";
  bool first = true;
  for (const auto& [v, t] : s.bindings()) {
    if (!first) out += ", ";
    first = false;
    out += raw_var(v) + "->" + render_term(sig, t);
  }
  return out + "}";
}

std::string render_proof(const Signature& sig, const std::vector<InferenceRecord>& steps) {
  std::ostringstream os;
  for (const InferenceRecord& r : steps) {
    os << r.conclusion << ". " << render_clause(sig, r.clause) << " [";
    if (r.rule == Rule::Input) {
      os << "input";
      if (!r.source.empty()) os << ", " << r.source;
    } else {
      os << to_string(r.rule) << ", ";
      for (std::size_t i = 0; i < r.premises.size(); ++i) os << (i ? " " : "") << r.premises[i];
      os << ", " << render_substitution(sig, r.unifier);
    }
    os << "]\n";
  }
  return os.str();
}

}  // namespace lgres
