#include "lgres/signature.hpp"

namespace lgres {

SymbolId Signature::intern(std::string_view name, SymbolKind kind, unsigned arity) {
  if (name.empty()) throw SignatureError("empty symbol name");
  if (kind == SymbolKind::Function && arity == 0)
    throw SignatureError("function symbol '" + std::string(name) + "' must have positive arity");
  if (kind == SymbolKind::Constant && arity != 0)
    throw SignatureError("constant '" + std::string(name) + "' cannot take arguments");
  auto key = std::make_pair(std::string(name), kind);
  if (auto it = index_.find(key); it != index_.end()) {
    const Symbol& s = symbols_[it->second];
    if (s.arity != arity) {
      throw SignatureError("symbol '" + s.name + "' used with arity " + std::to_string(arity) +
                           " but previously with arity " + std::to_string(s.arity));
    }
    return it->second;
  }
  auto id = static_cast<SymbolId>(symbols_.size());
  symbols_.push_back(Symbol{std::string(name), kind, arity, SymbolOrigin::User});
  index_.emplace(std::move(key), id);
  return id;
}

std::optional<SymbolId> Signature::find(std::string_view name, SymbolKind kind) const {
  auto it = index_.find(std::make_pair(std::string(name), kind));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

bool Signature::name_taken(const std::string& name) const {
  for (auto kind : {SymbolKind::Constant, SymbolKind::Function, SymbolKind::Predicate}) {
    if (index_.count(std::make_pair(name, kind))) return true;
  }
  return false;
}

SymbolId Signature::fresh(std::string_view prefix, unsigned& counter, SymbolKind kind,
                          unsigned arity, SymbolOrigin origin) {
  std::string name;
  do {
    name = std::string(prefix) + std::to_string(counter++);
  } while (name_taken(name));
  SymbolId id = intern(name, kind, arity);
  symbols_[id].origin = origin;
  return id;
}

SymbolId Signature::fresh_skolem(unsigned arity) {
  return fresh("sk", next_skolem_, arity == 0 ? SymbolKind::Constant : SymbolKind::Function,
               arity, SymbolOrigin::Skolem);
}

SymbolId Signature::fresh_definition(unsigned arity) {
  return fresh("def", next_definition_, SymbolKind::Predicate, arity, SymbolOrigin::Definition);
}

}  // namespace lgres
