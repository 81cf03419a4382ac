#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace haantjes {

/// Upper bound on the number of variables in one context (monomials are fixed-width).
inline constexpr std::size_t kMaxVariables = 32;

class VariableSet;

/// Contexts are shared read-only; identity is pointer identity.
using Context = std::shared_ptr<const VariableSet>;

/// Ordered, duplicate-free list of variable names. The order fixes the
/// graded-lex term order of every polynomial built over the set.
class VariableSet : public std::enable_shared_from_this<VariableSet> {
public:
    static Context make(std::vector<std::string> names);

    /// New context whose first size() variables coincide with this one.
    /// Expressions can be embedded into the extension with `embed`.
    Context extend(const std::vector<std::string>& extra) const;

    std::size_t size() const noexcept { return names_.size(); }
    const std::string& name(std::size_t index) const { return names_.at(index); }
    const std::vector<std::string>& names() const noexcept { return names_; }

    std::optional<std::size_t> find(std::string_view name) const;
    /// Throws UnknownVariable.
    std::size_t index(std::string_view name) const;

    /// True if `other` is this set or an extension of it.
    bool embeds_into(const VariableSet& other) const;

private:
    explicit VariableSet(std::vector<std::string> names);
    std::vector<std::string> names_;
};

/// The context shared by the whole toolkit:
/// phase variables q1 q2 p1 p2, new coordinates Q1 Q2 P1 P2, oscillator
/// coordinates qb1 qb2 pb1 pb2, parameters g1..g5 (the gamma_n), k1 k2,
/// g (with g2 = g^2), b (beta), and auxiliaries lam, t.
const Context& standard_context();

} // namespace haantjes
