#include "yforge/symbols.hpp"

#include <mutex>
#include <stdexcept>

namespace yforge {

SymbolRegistry& SymbolRegistry::instance() {
    static SymbolRegistry reg;
    return reg;
}

SymbolRegistry::SymbolRegistry() {
    names_.push_back("h1");
    names_.push_back("h2");
}

SymId SymbolRegistry::intern(const std::string& name) {
    if (name == "h3")
        throw std::invalid_argument("h3 is not a symbol: it is rewritten as -h1-h2");
    {
        std::shared_lock lk(mutex_);
        for (SymId i = 0; i < names_.size(); ++i)
            if (names_[i] == name) return i;
    }
    std::unique_lock lk(mutex_);
    for (SymId i = 0; i < names_.size(); ++i)
        if (names_[i] == name) return i;
    names_.push_back(name);
    return static_cast<SymId>(names_.size() - 1);
}

std::optional<SymId> SymbolRegistry::lookup(const std::string& name) const {
    std::shared_lock lk(mutex_);
    for (SymId i = 0; i < names_.size(); ++i)
        if (names_[i] == name) return i;
    return std::nullopt;
}

std::string SymbolRegistry::name(SymId id) const {
    std::shared_lock lk(mutex_);
    if (id >= names_.size()) throw std::out_of_range("unknown symbol id");
    return names_[id];
}

std::size_t SymbolRegistry::size() const {
    std::shared_lock lk(mutex_);
    return names_.size();
}

}  // namespace yforge
