#include "haantjes/fixtures.hpp"

#include <fstream>
#include <sstream>

#include "haantjes/expression.hpp"
#include "json.hpp"

namespace haantjes {

namespace {

using Json = nlohmann::ordered_json;

Scalar parse(const std::string& text) { return parse_expression(text, standard_context()); }

Json matrix_json(const Tensor11& t) {
    Json rows = Json::array();
    for (std::size_t i = 0; i < 4; ++i) {
        Json row = Json::array();
        for (std::size_t j = 0; j < 4; ++j) row.push_back(t(i, j).to_string());
        rows.push_back(std::move(row));
    }
    return rows;
}

Tensor11 matrix_from_json(const Json& rows) {
    if (!rows.is_array() || rows.size() != 4) throw Error("fixture matrix must have four rows");
    std::array<std::array<Scalar, 4>, 4> m{
        {{Scalar(standard_context()), Scalar(standard_context()), Scalar(standard_context()), Scalar(standard_context())},
         {Scalar(standard_context()), Scalar(standard_context()), Scalar(standard_context()), Scalar(standard_context())},
         {Scalar(standard_context()), Scalar(standard_context()), Scalar(standard_context()), Scalar(standard_context())},
         {Scalar(standard_context()), Scalar(standard_context()), Scalar(standard_context()), Scalar(standard_context())}}};
    for (std::size_t i = 0; i < 4; ++i) {
        if (!rows[i].is_array() || rows[i].size() != 4) throw Error("fixture matrix rows need four entries");
        for (std::size_t j = 0; j < 4; ++j) m[i][j] = parse(rows[i][j].get<std::string>());
    }
    return Tensor11::from_rows(m);
}

Json relations_json(const Relations& relations) {
    const Context& ctx = standard_context();
    Json out = Json::array();
    for (const auto& rw : relations) {
        out.push_back(Json{{"variable", ctx->name(rw.variable)}, {"square", rw.replacement.to_string()}});
    }
    return out;
}

Relations relations_from_json(const Json& j) {
    const Context& ctx = standard_context();
    Relations out;
    for (const auto& item : j) {
        const Scalar rep = parse(item.at("square").get<std::string>());
        const RationalFunction r = require_rational(rep);
        if (!r.is_polynomial()) throw Error("relation replacement must be a polynomial");
        out.push_back(SquareRewrite{ctx->index(item.at("variable").get<std::string>()), r.numerator()});
    }
    return out;
}

std::string chart_name(const Chart& chart) {
    const Context& ctx = standard_context();
    for (const auto& [name, c] : {std::pair{"standard", Chart::standard(ctx)}, std::pair{"separated", Chart::separated(ctx)},
                                  std::pair{"oscillator", Chart::oscillator(ctx)}}) {
        if (c.q == chart.q && c.p == chart.p) return name;
    }
    throw Error("chart has no fixture name");
}

Chart chart_from_name(const std::string& name) {
    const Context& ctx = standard_context();
    if (name == "standard") return Chart::standard(ctx);
    if (name == "separated") return Chart::separated(ctx);
    if (name == "oscillator") return Chart::oscillator(ctx);
    throw Error("unknown chart '" + name + "'");
}

Json header(const std::string& kind, const std::string& name) {
    return Json{{"schema", kFixtureSchemaVersion}, {"kind", kind}, {"name", name}};
}

Json parse_document(const std::string& text, const std::string& kind) {
    Json doc;
    try {
        doc = Json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw Error(std::string("malformed fixture: ") + e.what());
    }
    if (!doc.is_object()) throw Error("malformed fixture: expected an object");
    if (doc.value("schema", 0) != kFixtureSchemaVersion) throw Error("unsupported fixture schema");
    if (doc.value("kind", std::string()) != kind) throw Error("fixture is not of kind '" + kind + "'");
    return doc;
}

// Missing or mistyped fields surface as Error.
template <class F>
auto guarded(F&& body) {
    try {
        return body();
    } catch (const nlohmann::json::exception& e) {
        throw Error(std::string("malformed fixture: ") + e.what());
    }
}

std::string dump(const Json& doc) { return doc.dump(2) + "\n"; }

std::string read_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot read " + path.string());
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

} // namespace

std::string operator_fixture(const CatalogEntry& entry) {
    Json doc = header("operator", entry.name);
    doc["matrix"] = matrix_json(entry.tensor);
    doc["hamiltonian"] = entry.hamiltonian.to_string();
    doc["integral"] = entry.integral ? Json(entry.integral->to_string()) : Json(nullptr);
    doc["relations"] = relations_json(entry.relations);
    doc["nijenhuis"] = entry.nijenhuis;
    doc["note"] = entry.note;
    return dump(doc);
}

CatalogEntry load_operator_fixture(const std::string& text) {
    return guarded([&]() -> CatalogEntry {
        const Json doc = parse_document(text, "operator");
        CatalogEntry entry{doc.at("name").get<std::string>(),
                           matrix_from_json(doc.at("matrix")),
                           parse(doc.at("hamiltonian").get<std::string>()),
                           std::nullopt,
                           relations_from_json(doc.at("relations")),
                           doc.at("nijenhuis").get<bool>(),
                           doc.value("note", std::string())};
        if (!doc.at("integral").is_null()) entry.integral = parse(doc.at("integral").get<std::string>());
        return entry;
    });
}

std::string map_fixture(const CanonicalMap& map) {
    Json doc = header("canonical_map", map.name);
    doc["chart"] = chart_name(map.chart);
    Json coords = Json::array();
    for (const auto& c : map.coordinates) {
        Json item{{"label", c.label}};
        if (c.value) {
            item["value"] = c.value->to_string();
        } else {
            Json grad = Json::array();
            for (const auto& g : c.gradient) grad.push_back(g.to_string());
            item["gradient"] = std::move(grad);
        }
        coords.push_back(std::move(item));
    }
    doc["coordinates"] = std::move(coords);
    doc["is_ept"] = map.is_ept;
    Json locus = Json::array();
    for (const auto& f : map.singular_locus) locus.push_back(f.to_string());
    doc["singular_locus"] = std::move(locus);
    doc["relations"] = relations_json(map.relations);
    doc["note"] = map.note;
    return dump(doc);
}

CanonicalMap load_map_fixture(const std::string& text) {
    return guarded([&]() -> CanonicalMap {
        const Json doc = parse_document(text, "canonical_map");
        const Chart chart = chart_from_name(doc.at("chart").get<std::string>());
        const Json& coords = doc.at("coordinates");
        if (!coords.is_array() || coords.size() != 4) throw Error("a canonical map needs four coordinates");
        auto coordinate = [&](const Json& item) {
            const std::string label = item.at("label").get<std::string>();
            if (item.contains("value")) return make_coordinate(label, parse(item.at("value").get<std::string>()), chart);
            const Json& g = item.at("gradient");
            return make_coordinate(label, OneForm{parse(g.at(0).get<std::string>()), parse(g.at(1).get<std::string>()),
                                                  parse(g.at(2).get<std::string>()), parse(g.at(3).get<std::string>())});
        };
        CanonicalMap map{doc.at("name").get<std::string>(),
                         chart,
                         {coordinate(coords[0]), coordinate(coords[1]), coordinate(coords[2]), coordinate(coords[3])},
                         doc.at("is_ept").get<bool>(),
                         {},
                         relations_from_json(doc.at("relations")),
                         doc.value("note", std::string())};
        for (const auto& f : doc.at("singular_locus")) map.singular_locus.push_back(parse(f.get<std::string>()));
        return map;
    });
}

std::string candidate_fixture(const EptCandidate& candidate) {
    Json doc = header("ept_candidate", candidate.name);
    doc["positions"] = Json::array({candidate.positions[0].to_string(), candidate.positions[1].to_string()});
    return dump(doc);
}

EptCandidate load_candidate_fixture(const std::string& text) {
    return guarded([&]() -> EptCandidate {
        const Json doc = parse_document(text, "ept_candidate");
        const Json& pos = doc.at("positions");
        return make_candidate(doc.at("name").get<std::string>(), parse(pos.at(0).get<std::string>()),
                              parse(pos.at(1).get<std::string>()));
    });
}

std::string separated_fixture(const SeparatedForm& form) {
    Json doc = header("separated_form", form.name);
    doc["map"] = form.map;
    doc["function"] = form.function.to_string();
    doc["claimed"] = form.claimed.to_string();
    doc["identity"] = form.identity;
    return dump(doc);
}

SeparatedForm load_separated_fixture(const std::string& text) {
    return guarded([&]() -> SeparatedForm {
        const Json doc = parse_document(text, "separated_form");
        return {doc.at("name").get<std::string>(), doc.at("map").get<std::string>(),
                parse(doc.at("function").get<std::string>()), parse(doc.at("claimed").get<std::string>()),
                doc.value("identity", std::string())};
    });
}

std::string expression_fixture(const std::string& name, const Scalar& value, const std::string& note) {
    Json doc = header("expression", name);
    doc["value"] = value.to_string();
    doc["note"] = note;
    return dump(doc);
}

std::string family_fixture(const FamilyFixture& f) {
    Json doc = header("chain_family", "solve");
    doc["hamiltonian"] = f.hamiltonian;
    doc["integral"] = f.integral;
    doc["degree"] = f.degree;
    doc["parameters"] = f.parameters;
    doc["parameter_degree"] = f.parameter_degree;
    doc["consistent"] = f.family.consistent;
    doc["unknowns"] = f.family.unknowns;
    doc["equations"] = f.family.equations;
    doc["diagnostics"] = f.family.diagnostics;
    if (f.family.consistent) {
        doc["particular"] = matrix_json(f.family.particular);
        Json basis = Json::array();
        for (const auto& b : f.family.basis) basis.push_back(matrix_json(b));
        doc["basis"] = std::move(basis);
        doc["free_names"] = f.family.free_names;
        doc["filter_strategy"] = f.filter.strategy;
        Json members = Json::array();
        for (const auto& m : f.filter.members) members.push_back(matrix_json(m));
        doc["haantjes_members"] = std::move(members);
        doc["filter_diagnostics"] = f.filter.diagnostics;
        doc["catalog_members"] = f.catalog_members;
    } else {
        doc["particular"] = nullptr;
        doc["basis"] = Json::array();
        doc["haantjes_members"] = Json::array();
    }
    return dump(doc);
}

std::optional<Scalar> named_function(std::string_view name) {
    const Context& ctx = standard_context();
    const Integrals in = integrals(ctx);
    if (name.size() == 3 && name.starts_with("H_") && name[2] >= '1' && name[2] <= '0' + kMaxFamilyDegree) {
        return hamiltonian(ctx, name[2] - '0');
    }
    if (name == "J") return in.J;
    if (name == "J2") return in.J * in.J;
    if (name == "I1") return in.I1;
    if (name == "I2") return in.I2;
    if (name == "I_e") return elliptic_integral(ctx);
    return std::nullopt;
}

FamilyFixture solve_request(const std::string& hamiltonian_text, const std::string& integral_text, int degree,
                            std::vector<std::string> parameters, std::optional<int> parameter_degree) {
    const Context& ctx = standard_context();
    auto resolve = [](const std::string& text) {
        if (auto f = named_function(text)) return *f;
        return parse(text);
    };
    const Scalar h = resolve(hamiltonian_text);
    const Scalar i = resolve(integral_text);
    const std::vector<std::string> known{"g1", "g2", "g3", "g4", "g5", "k1", "k2"};
    if (parameters.empty()) {
        for (const auto& name : known) {
            const std::size_t v = ctx->index(name);
            if (h.depends_on(v) || i.depends_on(v)) parameters.push_back(name);
        }
    }
    if (!parameter_degree) {
        const RationalFunction ri = require_rational(i);
        int top = 1;
        for (const auto& term : ri.numerator().terms()) {
            int d = 0;
            for (const auto& name : known) d += static_cast<int>(term.monomial[ctx->index(name)]);
            top = std::max(top, d);
        }
        parameter_degree = top;
    }
    FamilyFixture out{hamiltonian_text,
                      integral_text,
                      degree,
                      parameters,
                      *parameter_degree,
                      solve_chain(h, i, make_ansatz(degree, parameters, *parameter_degree)),
                      FilterResult{},
                      {}};
    if (!out.family.consistent) return out;
    std::vector<Tensor11> extra;
    Relations relations;
    for (const auto& name : catalog_names()) {
        const CatalogEntry e = catalog(name, {}, false);
        if (!family_contains(out.family, e.tensor)) continue;
        out.catalog_members.push_back(name);
        extra.push_back(e.tensor);
        for (const auto& r : e.relations) relations.push_back(r);
    }
    out.filter = filter_haantjes(out.family, extra, relations);
    return out;
}

std::vector<FixtureFile> generate_fixtures() {
    std::vector<FixtureFile> out;
    for (const auto& name : catalog_names()) out.push_back({"operators/" + name + ".json", operator_fixture(catalog(name))});
    for (const auto& name : canonical_map_names()) out.push_back({"maps/" + name + ".json", map_fixture(canonical_map(name))});
    for (const auto& name : candidate_names()) {
        out.push_back({"candidates/" + name + ".json", candidate_fixture(candidate(name))});
    }
    for (const auto& form : separated_forms(kMaxFamilyDegree)) {
        out.push_back({"separated/" + form.name + ".json", separated_fixture(form)});
    }
    out.push_back({"expressions/I1_in_I2_coordinates.json",
                   expression_fixture("I1_in_I2_coordinates", i1_in_i2_coordinates(),
                                      "I1 in the coordinates adapted to I2; no reference value exists")});
    return out;
}

void write_fixtures(const std::filesystem::path& root) {
    for (const auto& file : generate_fixtures()) {
        const std::filesystem::path path = root / file.path;
        std::filesystem::create_directories(path.parent_path());
        std::ofstream out(path, std::ios::binary);
        if (!out) throw Error("cannot write " + path.string());
        out << file.contents;
    }
}

VerificationReport fixture_suite(const std::filesystem::path& root) {
    VerificationReport report;
    report.suite = "fixtures";
    for (const auto& file : generate_fixtures()) {
        const std::filesystem::path path = root / file.path;
        const std::string id = file.path.substr(0, file.path.size() - 5);
        std::string text;
        try {
            text = read_file(path);
        } catch (const Error& e) {
            report.add(bool_check(id + ".present", "fixture file exists", false, e.what()));
            continue;
        }
        report.add(bool_check(id + ".current", "checked-in fixture matches the regenerated document", text == file.contents));
        try {
            if (file.path.starts_with("operators/")) {
                const CatalogEntry loaded = load_operator_fixture(text);
                const CatalogEntry built = catalog(loaded.name, {}, false);
                report.add(bool_check(id + ".round_trip", "loaded operator equals the catalog operator",
                                      equal(loaded.tensor, built.tensor, built.relations)));
                report.add(bool_check(id + ".valid", "loaded operator passes its load-time checks",
                                      validate_entry(loaded).passed()));
            } else if (file.path.starts_with("maps/")) {
                const CanonicalMap loaded = load_map_fixture(text);
                report.add(bool_check(id + ".canonical", "loaded map is canonical", verify_canonical(loaded).passed()));
            } else if (file.path.starts_with("candidates/")) {
                const EptCandidate loaded = load_candidate_fixture(text);
                const EptCandidate built = candidate(loaded.name);
                const Scalar d = (loaded.positions[0] - built.positions[0]) + (loaded.positions[1] - built.positions[1]);
                report.add(exact_check(id + ".round_trip", "loaded positions equal the built ones", d.is_zero(),
                                       residual_head(d)));
            } else if (file.path.starts_with("separated/")) {
                const SeparatedForm loaded = load_separated_fixture(text);
                report.add(pullback_check(canonical_map(loaded.map), loaded.function, loaded.claimed, id + ".pullback",
                                          loaded.identity));
            } else {
                const Json doc = parse_document(text, "expression");
                const Scalar value = parse(doc.at("value").get<std::string>());
                report.add(recorded(id + ".value", doc.value("note", std::string()),
                                    std::to_string(value.to_string().size()) + " characters"));
            }
        } catch (const Error& e) {
            report.add(bool_check(id + ".load", "fixture loads", false, e.what()));
        }
    }
    return report;
}

} // namespace haantjes
