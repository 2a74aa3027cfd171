#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace lgres {

using SymbolId = std::uint32_t;

enum class SymbolKind : std::uint8_t { Constant, Function, Predicate };

/// Where a symbol came from. Fresh symbols are introduced by clausification.
enum class SymbolOrigin : std::uint8_t { User, Skolem, Definition };

struct Symbol {
  std::string name;
  SymbolKind kind;
  unsigned arity;
  SymbolOrigin origin = SymbolOrigin::User;
};

class SignatureError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Symbol table of one problem instance.
///
/// Symbols are keyed by (name, kind); the same name may be used as a
/// predicate and as a constant, but a given (name, kind) has one arity.
/// Not thread-safe: a signature belongs to exactly one problem.
class Signature {
 public:
  SymbolId intern(std::string_view name, SymbolKind kind, unsigned arity);
  std::optional<SymbolId> find(std::string_view name, SymbolKind kind) const;

  /// Mints `sk<N>` (constant when arity is 0).
  SymbolId fresh_skolem(unsigned arity);
  /// Mints the predicate `def<N>`.
  SymbolId fresh_definition(unsigned arity);

  const Symbol& operator[](SymbolId id) const { return symbols_.at(id); }
  std::size_t size() const { return symbols_.size(); }
  const std::vector<Symbol>& symbols() const { return symbols_; }

 private:
  SymbolId fresh(std::string_view prefix, unsigned& counter, SymbolKind kind,
                 unsigned arity, SymbolOrigin origin);
  bool name_taken(const std::string& name) const;

  std::vector<Symbol> symbols_;
  std::map<std::pair<std::string, SymbolKind>, SymbolId, std::less<>> index_;
  unsigned next_skolem_ = 1;
  unsigned next_definition_ = 1;
};

}  // namespace lgres
