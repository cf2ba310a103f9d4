#pragma once

#include <cstdint>
#include <optional>
#include <shared_mutex>
#include <string>
#include <vector>

namespace yforge {

using SymId = std::uint32_t;

/// Global append-only symbol registry.
///
/// Symbol ids order the variables for the graded-lex monomial order, so the
/// canonical form of every polynomial in a process is determined by the order
/// in which symbols were first registered.  "h1" and "h2" are pre-registered
/// at ids 0 and 1.  "h3" is deliberately not a symbol: it is always rewritten
/// as -h1-h2 at construction time.
class SymbolRegistry {
public:
    static SymbolRegistry& instance();

    SymId intern(const std::string& name);
    std::optional<SymId> lookup(const std::string& name) const;
    std::string name(SymId id) const;
    std::size_t size() const;

private:
    SymbolRegistry();
    mutable std::shared_mutex mutex_;
    std::vector<std::string> names_;
};

inline SymId sym(const std::string& name) { return SymbolRegistry::instance().intern(name); }
inline std::string sym_name(SymId id) { return SymbolRegistry::instance().name(id); }

inline constexpr SymId SYM_H1 = 0;
inline constexpr SymId SYM_H2 = 1;

}  // namespace yforge
