#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "lgres/formula.hpp"
#include "lgres/proof.hpp"
#include "lgres/signature.hpp"
#include "lgres/term.hpp"

namespace lgres {

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& msg, int line, int column)
      : std::runtime_error(std::to_string(line) + ":" + std::to_string(column) + ": " + msg),
        line_(line),
        column_(column) {}

  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_;
  int column_;
};

struct NamedFormula {
  std::string name;
  FormulaPtr formula;
};

struct NamedFact {
  std::string name;
  Atom atom;
};

/// Boolean conjunctive query: an existentially closed conjunction of atoms
/// over constants and variables.
struct Bcq {
  std::string name;
  std::vector<VarId> vars;
  std::vector<Atom> atoms;
};

struct NamedClause {
  std::string name;
  Clause clause;
};

/// A parsed problem file.
///
/// Statements: `formula N: F.`, `fact N: A.`, `query N: Q.`,
/// `clause N: L | ... | L.` (universally closed clause given directly) and
/// `option KEY: VALUE.`. `%` starts a line comment.
struct Problem {
  Signature signature;
  VarTable variables;
  std::vector<NamedFormula> formulas;
  std::vector<NamedFact> facts;
  std::vector<Bcq> queries;
  std::vector<NamedClause> clauses;
  std::map<std::string, std::string> options;
};

Problem parse_problem(std::string_view text);

/// Parses a single clause such as `~r(X,Y) | p(f(X),Y)` or `$false` into
/// `sig`. Variables are numbered by first occurrence.
Clause parse_clause(std::string_view text, Signature& sig);

/// Parses a single formula; variable names are interned into `vars`.
FormulaPtr parse_formula(std::string_view text, Signature& sig, VarTable& vars);

/// Clause variable names by first occurrence: X, Y, Z, U, V, W, X1, ...
std::string clause_var_name(std::size_t index);

std::string render_term(const Signature& sig, const Term& t);
std::string render_atom(const Signature& sig, const Atom& a);
std::string render_literal(const Signature& sig, const Literal& l);
std::string render_clause(const Signature& sig, const Clause& c);
/// Selected literals of `c`, with variables named as render_clause names
/// them.
std::string render_literals(const Signature& sig, const Clause& c,
                            const std::vector<std::size_t>& positions, const std::string& sep);
std::string render_formula(const Signature& sig, const VarTable& vars, const Formula& f);
std::string render_substitution(const Signature& sig, const Substitution& s);

/// Numbered proof lines `<id>. <clause> [<rule>, <premise ids>, <unifier>]`.
std::string render_proof(const Signature& sig, const std::vector<InferenceRecord>& steps);

}  // namespace lgres
