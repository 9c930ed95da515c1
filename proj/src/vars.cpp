#include "cvx/vars.hpp"

#include <cctype>
#include <deque>
#include <mutex>
#include <shared_mutex>
#include <unordered_map>

#include "cvx/error.hpp"

namespace cvx {

namespace {

struct VarTable {
    std::shared_mutex mu;
    std::deque<std::string> names; // deque: element addresses are stable
    std::unordered_map<std::string_view, Var> index;
};

VarTable& table() {
    static VarTable t;
    return t;
}

bool valid_name(std::string_view s) {
    if (s.empty()) return false;
    if (!std::isalpha(static_cast<unsigned char>(s[0])) && s[0] != '_') return false;
    for (char c : s)
        if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') return false;
    return true;
}

} // namespace

Var var(std::string_view name) {
    CVX_REQUIRE(valid_name(name), "invalid variable name '" + std::string(name) + "'");
    VarTable& t = table();
    {
        std::shared_lock lock(t.mu);
        auto it = t.index.find(name);
        if (it != t.index.end()) return it->second;
    }
    std::unique_lock lock(t.mu);
    auto it = t.index.find(name);
    if (it != t.index.end()) return it->second;
    t.names.emplace_back(name);
    Var id = static_cast<Var>(t.names.size() - 1);
    t.index.emplace(t.names.back(), id);
    return id;
}

const std::string& var_name(Var v) {
    VarTable& t = table();
    std::shared_lock lock(t.mu);
    return t.names.at(v);
}

bool var_precedes(Var a, Var b) {
    if (a == b) return false;
    VarTable& t = table();
    std::shared_lock lock(t.mu);
    return t.names.at(a) < t.names.at(b);
}

} // namespace cvx
