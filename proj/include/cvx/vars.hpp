#pragma once

#include <cstdint>
#include <string>
#include <string_view>

namespace cvx {

/// Interned variable identifier. Ids are process-global; the canonical
/// ordering used by monomials is by NAME, so canonical forms do not depend
/// on interning history.
using Var = std::uint32_t;

/// Interns a name ([A-Za-z_][A-Za-z0-9_]*) and returns its id. Thread-safe.
Var var(std::string_view name);

const std::string& var_name(Var v);

/// Name-lexicographic order; stable for the lifetime of the process.
bool var_precedes(Var a, Var b);

} // namespace cvx
