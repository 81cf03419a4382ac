#include "haantjes/chain_solver.hpp"

#include <algorithm>
#include <map>
#include <optional>

#include "haantjes/linear_solver.hpp"
#include "haantjes/torsion.hpp"

namespace haantjes {

namespace {

using Slot = AnsatzTerm::Slot;

// All monomials of total degree <= d in the given variables, ascending.
std::vector<Monomial> monomials_up_to(std::span<const std::size_t> vars, int degree) {
    std::vector<Monomial> out{Monomial{}};
    for (int d = 1; d <= degree; ++d) {
        std::vector<Monomial> next;
        for (const auto& m : out) {
            if (m.degree != d - 1) continue;
            for (std::size_t v : vars) {
                const Monomial candidate = m * Monomial::variable(v);
                if (std::find(next.begin(), next.end(), candidate) == next.end()) next.push_back(candidate);
            }
        }
        out.insert(out.end(), next.begin(), next.end());
    }
    std::sort(out.begin(), out.end(), [](const Monomial& a, const Monomial& b) { return graded_lex(a, b) < 0; });
    return out;
}

std::vector<Monomial> products(const std::vector<Monomial>& a, const std::vector<Monomial>& b) {
    std::vector<Monomial> out;
    out.reserve(a.size() * b.size());
    for (const auto& x : a) {
        for (const auto& y : b) out.push_back(x * y);
    }
    return out;
}

// Basis tensor for one ansatz term with unit coefficient.
Tensor11 term_tensor(const Context& ctx, const AnsatzTerm& term, const Rational& coefficient) {
    Tensor11 t(ctx);
    const Scalar e(Polynomial::from_terms(ctx, {Term{term.monomial, coefficient}}));
    switch (term.slot) {
    case Slot::a00: t(0, 0) = e; t(2, 2) = e; break;
    case Slot::a01: t(0, 1) = e; t(3, 2) = e; break;
    case Slot::a10: t(1, 0) = e; t(2, 3) = e; break;
    case Slot::a11: t(1, 1) = e; t(3, 3) = e; break;
    case Slot::b: t(0, 3) = e; t(1, 2) = -e; break;
    case Slot::c: t(2, 1) = e; t(3, 0) = -e; break;
    }
    return t;
}

Tensor11 assemble(const Context& ctx, const std::vector<AnsatzTerm>& terms, std::span<const Rational> coords) {
    // Accumulate per slot as polynomials, then place.
    std::map<int, std::vector<Term>> slots;
    for (std::size_t i = 0; i < terms.size(); ++i) {
        if (coords[i] != 0) slots[static_cast<int>(terms[i].slot)].push_back(Term{terms[i].monomial, coords[i]});
    }
    Tensor11 t(ctx);
    for (auto& [slot, list] : slots) {
        const Scalar e(Polynomial::from_terms(ctx, std::move(list)));
        switch (static_cast<Slot>(slot)) {
        case Slot::a00: t(0, 0) = e; t(2, 2) = e; break;
        case Slot::a01: t(0, 1) = e; t(3, 2) = e; break;
        case Slot::a10: t(1, 0) = e; t(2, 3) = e; break;
        case Slot::a11: t(1, 1) = e; t(3, 3) = e; break;
        case Slot::b: t(0, 3) = e; t(1, 2) = -e; break;
        case Slot::c: t(2, 1) = e; t(3, 0) = -e; break;
        }
    }
    return t;
}

Polynomial as_polynomial(const Scalar& s, const char* what) {
    const RationalFunction r = require_rational(s);
    if (!r.is_polynomial()) throw Error(std::string(what) + " must be polynomial for the chain solver");
    return r.numerator();
}

std::string monomial_text(const Context& ctx, const Monomial& m) {
    return Polynomial::from_terms(ctx, {Term{m, Rational(1)}}).to_string();
}

// Coordinates of K in the ansatz, if it lies in the ansatz space.
std::optional<std::vector<Rational>> decompose(const LinearSolutionFamily& family, const Tensor11& k) {
    const Context& ctx = k.context();
    std::map<std::pair<int, std::string>, std::size_t> index;
    for (std::size_t i = 0; i < family.terms.size(); ++i) {
        index[{static_cast<int>(family.terms[i].slot), monomial_text(ctx, family.terms[i].monomial)}] = i;
    }
    std::vector<Rational> coords(family.terms.size(), Rational(0));
    const std::array<std::pair<Slot, std::pair<std::size_t, std::size_t>>, 6> where{{{Slot::a00, {0, 0}},
                                                                                      {Slot::a01, {0, 1}},
                                                                                      {Slot::a10, {1, 0}},
                                                                                      {Slot::a11, {1, 1}},
                                                                                      {Slot::b, {0, 3}},
                                                                                      {Slot::c, {2, 1}}}};
    for (const auto& [slot, pos] : where) {
        const Scalar& e = k(pos.first, pos.second);
        if (e.has_radical()) return std::nullopt;
        const RationalFunction r = e.rational_part();
        if (!r.is_polynomial()) return std::nullopt;
        const Polynomial num = r.numerator();
        for (const auto& term : num.terms()) {
            auto it = index.find({static_cast<int>(slot), monomial_text(ctx, term.monomial)});
            if (it == index.end()) return std::nullopt;
            coords[it->second] = term.coefficient;
        }
    }
    if (!is_zero(assemble(ctx, family.terms, coords) - k)) return std::nullopt;
    return coords;
}

} // namespace

AnsatzSpec make_ansatz(int degree, const std::vector<std::string>& parameters, int parameter_degree) {
    AnsatzSpec spec;
    spec.degree_a = degree;
    spec.degree_c = degree;
    spec.parameter_degree = parameter_degree;
    for (const auto& name : parameters) spec.parameters.push_back(standard_context()->index(name));
    return spec;
}

LinearSolutionFamily solve_chain(const Scalar& h, const Scalar& integral, const AnsatzSpec& ansatz) {
    const Context& ctx = h.context();
    const Chart chart = Chart::standard(ctx);
    const Polynomial hp = as_polynomial(h, "H");
    const Polynomial ip = as_polynomial(integral, "I");

    const std::vector<std::size_t> qs{chart.q[0], chart.q[1]};
    const std::vector<std::size_t> qps{chart.q[0], chart.q[1], chart.p[0], chart.p[1]};
    const std::vector<Monomial> params = monomials_up_to(ansatz.parameters, ansatz.parameter_degree);

    LinearSolutionFamily family{false, Tensor11(ctx), {}, {}, {}, 0, 0, {}, {}, {}, {}};
    auto add_slot = [&](Slot slot, int degree, bool positions_only) {
        if (degree < 0) return;
        for (const auto& m : products(monomials_up_to(positions_only ? qs : qps, degree), params)) {
            family.terms.push_back(AnsatzTerm{slot, m});
        }
    };
    add_slot(Slot::a00, ansatz.degree_a, ansatz.momentum_free_a);
    add_slot(Slot::a01, ansatz.degree_a, ansatz.momentum_free_a);
    add_slot(Slot::a10, ansatz.degree_a, ansatz.momentum_free_a);
    add_slot(Slot::a11, ansatz.degree_a, ansatz.momentum_free_a);
    add_slot(Slot::b, ansatz.degree_b, false);
    add_slot(Slot::c, ansatz.degree_c, false);
    family.unknowns = family.terms.size();

    // Column j contributes E_j^T dH; equations are matched per monomial in all variables.
    std::array<Polynomial, 4> dh{hp.derivative(chart.variable(0)), hp.derivative(chart.variable(1)),
                                 hp.derivative(chart.variable(2)), hp.derivative(chart.variable(3))};
    std::map<std::pair<std::size_t, std::string>, std::size_t> row_of;
    std::vector<std::pair<std::size_t, Monomial>> row_key;
    std::vector<std::map<std::size_t, Rational>> rows;
    std::vector<Rational> rhs;
    auto row = [&](std::size_t component, const Monomial& m) {
        const auto key = std::make_pair(component, monomial_text(ctx, m));
        auto [it, inserted] = row_of.try_emplace(key, rows.size());
        if (inserted) {
            rows.emplace_back();
            rhs.emplace_back(0);
            row_key.emplace_back(component, m);
        }
        return it->second;
    };
    for (std::size_t j = 0; j < family.terms.size(); ++j) {
        const Tensor11 e = term_tensor(ctx, family.terms[j], Rational(1));
        for (std::size_t c = 0; c < 4; ++c) {
            Polynomial sum(ctx);
            for (std::size_t i = 0; i < 4; ++i) {
                const Scalar& entry = e(i, c);
                if (!entry.is_zero() && !dh[i].is_zero()) sum += entry.rational_part().numerator() * dh[i];
            }
            for (const auto& term : sum.terms()) rows[row(c, term.monomial)][j] += term.coefficient;
        }
    }
    for (std::size_t c = 0; c < 4; ++c) {
        const Polynomial di = ip.derivative(chart.variable(c));
        for (const auto& term : di.terms()) rhs[row(c, term.monomial)] += term.coefficient;
    }
    LinearSystem system(family.unknowns);
    for (std::size_t r = 0; r < rows.size(); ++r) system.add_equation(rows[r], rhs[r]);
    family.equations = system.equations();

    const LinearSolution solution = solve(system);
    family.consistent = solution.consistent;
    if (!solution.consistent) {
        static const std::array<const char*, 4> names{"dq1", "dq2", "dp1", "dp2"};
        for (std::size_t r : solution.inconsistent_rows) {
            family.diagnostics.push_back(std::string(names[row_key[r].first]) + " coefficient of " +
                                         monomial_text(ctx, row_key[r].second));
        }
        return family;
    }
    family.particular_coords = solution.particular;
    family.kernel_coords = solution.kernel;
    family.free_columns = solution.free_columns;
    family.particular = assemble(ctx, family.terms, family.particular_coords);
    for (std::size_t k = 0; k < solution.kernel.size(); ++k) {
        family.basis.push_back(assemble(ctx, family.terms, solution.kernel[k]));
        family.free_names.push_back("f" + std::to_string(k + 1));
    }
    return family;
}

bool family_contains(const LinearSolutionFamily& family, const Tensor11& k) {
    if (!family.consistent) return false;
    const auto coords = decompose(family, k);
    if (!coords) return false;
    // Kernel vectors are unit on their own free column and zero on the others.
    std::vector<Rational> rebuilt = family.particular_coords;
    for (std::size_t j = 0; j < family.free_columns.size(); ++j) {
        const Rational t = (*coords)[family.free_columns[j]] - family.particular_coords[family.free_columns[j]];
        if (t == 0) continue;
        for (std::size_t i = 0; i < rebuilt.size(); ++i) rebuilt[i] += t * family.kernel_coords[j][i];
    }
    return rebuilt == *coords;
}

FilterResult filter_haantjes(const LinearSolutionFamily& family, std::span<const Tensor11> extra_candidates,
                             const Relations& relations) {
    FilterResult result;
    if (!family.consistent) {
        result.strategy = "direct";
        result.diagnostics.push_back("empty family");
        return result;
    }
    const Context& ctx = family.particular.context();
    const Chart chart = Chart::standard(ctx);
    auto haantjes = [&](const Tensor11& k) { return is_zero(haantjes_torsion(k, chart), relations); };
    const std::size_t m = family.basis.size();

    std::vector<std::pair<std::vector<Rational>, Tensor11>> found;
    auto consider = [&](std::vector<Rational> coeffs, const Tensor11& k) {
        for (const auto& f : found) {
            if (f.first == coeffs) return;
        }
        if (haantjes(k)) found.emplace_back(std::move(coeffs), k);
    };
    auto member = [&](std::span<const Rational> f) {
        Tensor11 k = family.particular;
        for (std::size_t j = 0; j < m; ++j) {
            if (f[j] != 0) k = k + Scalar::constant(ctx, f[j]) * family.basis[j];
        }
        return k;
    };

    if (m == 0) {
        result.strategy = "direct";
        consider({}, family.particular);
    } else if (ctx->size() + m <= kMaxVariables) {
        // Torsion with the free coefficients as symbols, then coefficient equations in them.
        std::vector<std::string> names;
        for (std::size_t j = 0; j < m; ++j) names.push_back("f" + std::to_string(j + 1));
        const Context ext = ctx->extend(names);
        Tensor11 k = family.particular.map([&ext](const Scalar& s) { return s.embed(ext); });
        for (std::size_t j = 0; j < m; ++j) {
            const Tensor11 b = family.basis[j].map([&ext](const Scalar& s) { return s.embed(ext); });
            k = k + Scalar::variable(ext, names[j]) * b;
        }
        const Torsion3 t = haantjes_torsion(k, chart);
        std::vector<std::size_t> fvars;
        for (std::size_t j = 0; j < m; ++j) fvars.push_back(ctx->size() + j);
        std::vector<Polynomial> equations;
        bool linear = true;
        for (std::size_t i = 0; i < 4; ++i) {
            for (std::size_t a = 0; a < 4; ++a) {
                for (std::size_t b = a + 1; b < 4; ++b) {
                    const RationalFunction c = reduce(require_rational(t(i, a, b)), relations);
                    if (c.is_zero()) continue;
                    // Group by the monomial in the non-f variables.
                    std::map<std::string, std::vector<Term>> groups;
                    const Polynomial num = c.numerator();
                    for (const auto& term : num.terms()) {
                        Monomial fpart{};
                        for (std::size_t v : fvars) {
                            if (const unsigned e = term.monomial[v]) fpart = fpart * Monomial::variable(v, e);
                        }
                        const Monomial rest = fpart.quotient_of(term.monomial);
                        groups[monomial_text(ext, rest)].push_back(Term{fpart, term.coefficient});
                    }
                    for (auto& [key, list] : groups) {
                        Polynomial eq = Polynomial::from_terms(ext, std::move(list));
                        if (eq.is_zero()) continue;
                        if (eq.total_degree() > 1) linear = false;
                        equations.push_back(std::move(eq));
                    }
                }
            }
        }
        if (linear) {
            result.strategy = "linear";
            LinearSystem system(m);
            for (const auto& eq : equations) {
                std::map<std::size_t, Rational> coeffs;
                Rational rhs(0);
                for (const auto& term : eq.terms()) {
                    if (term.monomial.is_one()) rhs -= term.coefficient;
                    for (std::size_t j = 0; j < m; ++j) {
                        if (term.monomial[fvars[j]] == 1) coeffs[j] += term.coefficient;
                    }
                }
                system.add_equation(std::move(coeffs), rhs);
            }
            const LinearSolution s = solve(system);
            if (s.consistent) {
                consider(s.particular, member(s.particular));
                for (const auto& kv : s.kernel) {
                    std::vector<Rational> f = s.particular;
                    for (std::size_t j = 0; j < m; ++j) f[j] += kv[j];
                    consider(f, member(f));
                }
            } else {
                result.diagnostics.push_back("Haantjes condition inconsistent on the family");
            }
        } else {
            result.strategy = "candidates";
        }
    } else {
        result.strategy = "candidates";
        result.diagnostics.push_back("too many free coefficients for a symbolic torsion; candidates only");
    }

    if (result.strategy == "candidates") {
        // Corners of {-1, 0, 1}^m, capped to keep the search finite.
        if (m <= 6) {
            std::vector<Rational> f(m, Rational(-1));
            while (true) {
                consider(f, member(f));
                std::size_t j = 0;
                while (j < m && f[j] == 1) f[j++] = -1;
                if (j == m) break;
                f[j] += 1;
            }
        } else {
            result.diagnostics.push_back("corner search skipped for " + std::to_string(m) + " free coefficients");
        }
    }
    for (const auto& candidate : extra_candidates) {
        if (!family_contains(family, candidate)) continue;
        const auto coords = decompose(family, candidate);
        std::vector<Rational> f;
        for (std::size_t c : family.free_columns) f.push_back((*coords)[c]);
        consider(f, candidate);
    }
    std::sort(found.begin(), found.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    for (auto& [coeffs, k] : found) {
        result.coefficients.push_back(coeffs);
        result.members.push_back(std::move(k));
    }
    return result;
}

} // namespace haantjes
