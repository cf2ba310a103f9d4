#pragma once

#include <set>
#include <string>

#include "yforge/scalar.hpp"

namespace yforge {

struct ParseError : std::runtime_error {
    explicit ParseError(const std::string& msg) : std::runtime_error("parse error: " + msg) {}
};

/// Declared parameter symbols for one parsing context.  h1, h2 are always
/// available and "h3" parses as -h1-h2.  Any other undeclared name is an
/// error, which catches typos in transcribed formulas.
class ParseContext {
public:
    ParseContext() = default;
    explicit ParseContext(std::set<std::string> params) : params_(std::move(params)) {}
    void declare(const std::string& name) { params_.insert(name); }
    bool declared(const std::string& name) const;

    /// Grammar: symbols, integers, + - * / ^, parentheses.
    Scalar parse(const std::string& text) const;

private:
    std::set<std::string> params_;
};

}  // namespace yforge
