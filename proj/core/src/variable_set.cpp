#include "haantjes/variable_set.hpp"

#include <algorithm>
#include <set>

#include "haantjes/errors.hpp"

namespace haantjes {

VariableSet::VariableSet(std::vector<std::string> names) : names_(std::move(names)) {}

Context VariableSet::make(std::vector<std::string> names) {
    if (names.size() > kMaxVariables) {
        throw Error("too many variables: " + std::to_string(names.size()));
    }
    std::set<std::string> seen;
    for (const auto& n : names) {
        if (n.empty()) throw Error("empty variable name");
        if (!seen.insert(n).second) throw Error("duplicate variable name '" + n + "'");
    }
    return Context(new VariableSet(std::move(names)));
}

Context VariableSet::extend(const std::vector<std::string>& extra) const {
    std::vector<std::string> all = names_;
    all.insert(all.end(), extra.begin(), extra.end());
    return make(std::move(all));
}

std::optional<std::size_t> VariableSet::find(std::string_view name) const {
    auto it = std::find(names_.begin(), names_.end(), name);
    if (it == names_.end()) return std::nullopt;
    return static_cast<std::size_t>(it - names_.begin());
}

std::size_t VariableSet::index(std::string_view name) const {
    if (auto i = find(name)) return *i;
    throw UnknownVariable(std::string(name));
}

bool VariableSet::embeds_into(const VariableSet& other) const {
    if (this == &other) return true;
    if (other.names_.size() < names_.size()) return false;
    return std::equal(names_.begin(), names_.end(), other.names_.begin());
}

const Context& standard_context() {
    static const Context ctx = VariableSet::make({
        "q1", "q2", "p1", "p2",
        "Q1", "Q2", "P1", "P2",
        "qb1", "qb2", "pb1", "pb2",
        "g1", "g2", "g3", "g4", "g5",
        "k1", "k2", "g", "b",
        "lam", "t",
    });
    return ctx;
}

} // namespace haantjes
