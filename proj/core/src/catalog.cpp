#include "duval/catalog.hpp"

#include <algorithm>
#include <fstream>
#include <future>
#include <sstream>

#include <json.hpp>

#include "duval/errors.hpp"
#include "duval/parser.hpp"

namespace duval {

using nlohmann::json;

bool GeneratorSpec::active_in(const std::string& mode_label) const {
    if (modes.empty()) return true;
    return std::find(modes.begin(), modes.end(), mode_label) != modes.end();
}

bool RelationSpec::active_in(const std::string& mode_label) const {
    if (modes.empty()) return true;
    return std::find(modes.begin(), modes.end(), mode_label) != modes.end();
}

std::string CaseRecord::structure_for(const std::string& mode_label) const {
    auto it = structure.find(mode_label);
    if (it != structure.end()) return it->second;
    it = structure.find("*");
    if (it != structure.end()) return it->second;
    return "";
}

const GeneratorSpec* CaseRecord::find_generator(const std::string& name,
                                                const std::string& mode_label) const {
    for (const auto& g : generators)
        if (g.name == name && g.active_in(mode_label)) return &g;
    return nullptr;
}

const CaseRecord* Catalog::find_case(const std::string& id) const {
    for (const auto& c : cases)
        if (c.id == id) return &c;
    return nullptr;
}

std::string check_status_str(CheckStatus s) {
    switch (s) {
        case CheckStatus::pass: return "PASS";
        case CheckStatus::fail: return "FAIL";
        case CheckStatus::skipped_ambiguous: return "SKIPPED-AMBIGUOUS";
        case CheckStatus::not_applicable: return "NOT-APPLICABLE";
    }
    return "?";
}

bool CaseReport::passed() const {
    for (const auto& c : checks)
        if (c.status == CheckStatus::fail) return false;
    return true;
}

std::string CaseReport::verdict() const { return passed() ? "PASS" : "FAIL"; }

int CaseReport::count(CheckStatus s) const {
    int n = 0;
    for (const auto& c : checks)
        if (c.status == s) ++n;
    return n;
}

namespace {

// --- loading ---

[[noreturn]] void schema_fail(const std::string& where, const std::string& msg) {
    throw SchemaError(where, msg);
}

const json& require(const json& j, const char* key, const std::string& where) {
    if (!j.is_object() || !j.contains(key)) schema_fail(where, std::string("missing '") + key + "'");
    return j.at(key);
}

std::string get_string(const json& j, const char* key, const std::string& where) {
    const json& v = require(j, key, where);
    if (!v.is_string()) schema_fail(where + "." + key, "expected a string");
    return v.get<std::string>();
}

std::vector<std::string> get_string_list(const json& j, const char* key, const std::string& where,
                                         bool required) {
    std::vector<std::string> out;
    if (!j.contains(key)) {
        if (required) schema_fail(where, std::string("missing '") + key + "'");
        return out;
    }
    const json& v = j.at(key);
    if (!v.is_array()) schema_fail(where + "." + key, "expected an array of strings");
    for (const auto& e : v) {
        if (!e.is_string()) schema_fail(where + "." + key, "expected an array of strings");
        out.push_back(e.get<std::string>());
    }
    return out;
}

Scalar parse_scalar_field(const std::string& text, const std::vector<std::string>& symbols,
                          const std::string& where) {
    try {
        return parse_scalar(text, symbols);
    } catch (const Error& e) {
        schema_fail(where, std::string("'") + text + "': " + e.what());
    }
}

DeclaredInverse parse_inverse(const json& j, const std::vector<std::string>& symbols,
                              const std::string& where) {
    if (j.is_string()) {
        if (j.get<std::string>() == "self") return InverseSelf{};
        schema_fail(where, "inverse must be \"self\", {\"power\": k}, or {\"sub\": {...}}");
    }
    if (j.is_object() && j.contains("power")) {
        const json& p = j.at("power");
        if (!p.is_number_integer()) schema_fail(where + ".power", "expected an integer");
        return InversePower{p.get<int>()};
    }
    if (j.is_object() && j.contains("sub")) {
        const json& s = j.at("sub");
        if (!s.is_object() || s.size() != 1)
            schema_fail(where + ".sub", "expected one symbol -> expression entry");
        const auto it = s.begin();
        return InverseSub{intern_symbol(it.key()),
                          parse_scalar_field(it.value().get<std::string>(), symbols, where)};
    }
    schema_fail(where, "unrecognized inverse declaration");
}

// A 4x4 (or nxn) matrix of scalar expressions expands to a linear tuple.
std::vector<Poly> expand_matrix(const json& rows, const Ambient& ambient,
                                const std::vector<std::string>& symbols,
                                const std::string& where) {
    if (!rows.is_array() || rows.size() != ambient.dim())
        schema_fail(where, "matrix must have one row per coordinate");
    std::vector<Poly> images;
    for (std::size_t i = 0; i < rows.size(); ++i) {
        const json& row = rows.at(i);
        if (!row.is_array() || row.size() != ambient.dim())
            schema_fail(where, "matrix row " + std::to_string(i) + " has wrong length");
        Poly im(ambient.dim());
        for (std::size_t k = 0; k < row.size(); ++k) {
            Scalar c;
            const json& cell = row.at(k);
            if (cell.is_number_integer())
                c = Scalar(Rat(cell.get<long>()));
            else if (cell.is_string())
                c = parse_scalar_field(cell.get<std::string>(), symbols,
                                       where + "[" + std::to_string(i) + "][" + std::to_string(k) + "]");
            else
                schema_fail(where, "matrix entries must be integers or expression strings");
            im = im + Poly::coordinate(ambient.dim(), k) * c;
        }
        images.push_back(im);
    }
    return images;
}

WordRef parse_word_ref(const json& j, const std::vector<std::string>& symbols,
                       const std::string& where) {
    if (!j.is_object()) schema_fail(where, "word entries are objects");
    WordRef ref;
    ref.map = get_string(j, "map", where);
    if (j.contains("inverse")) ref.inverse = j.at("inverse").get<bool>();
    if (j.contains("at"))
        ref.at = parse_scalar_field(j.at("at").get<std::string>(), symbols, where + ".at");
    if (ref.inverse && ref.at)
        schema_fail(where, "a word entry may carry 'inverse' or 'at', not both");
    return ref;
}

LatticeAction parse_lattice_action(const json& j, const std::vector<std::string>& symbols,
                                   const std::string& where) {
    LatticeAction action;
    action.name = get_string(j, "name", where);
    action.torus_dim = j.value("torusDim", 0);
    action.additive_dim = j.value("addDim", 0);
    if (action.torus_dim == 0 && action.additive_dim == 0)
        schema_fail(where, "action needs torusDim or addDim");
    const json& gens = require(j, "generators", where);
    for (std::size_t i = 0; i < gens.size(); ++i) {
        const std::string gwhere = where + ".generators[" + std::to_string(i) + "]";
        const json& g = gens.at(i);
        ActionGenerator ag;
        ag.name = get_string(g, "name", gwhere);
        const json& order = require(g, "order", gwhere);
        ag.stated_order = order.get<int>();
        if (g.contains("torus")) {
            for (const auto& row : g.at("torus")) {
                std::vector<long> r;
                for (const auto& x : row) r.push_back(x.get<long>());
                ag.torus.push_back(std::move(r));
            }
        }
        if (g.contains("add")) {
            for (const auto& row : g.at("add")) {
                std::vector<CycNum> r;
                for (const auto& x : row) {
                    if (x.is_number_integer())
                        r.push_back(CycNum(Rat(x.get<long>())));
                    else
                        r.push_back(parse_scalar_field(x.get<std::string>(), symbols, gwhere)
                                        .constant_value());
                }
                ag.additive.push_back(std::move(r));
            }
        }
        action.generators.push_back(std::move(ag));
    }
    action.relations = get_string_list(j, "relations", where, false);
    return action;
}

CaseRecord parse_case(const json& j, std::size_t index) {
    const std::string where0 = "cases[" + std::to_string(index) + "]";
    CaseRecord rec;
    rec.id = get_string(j, "id", where0);
    const std::string where = "case " + rec.id;
    const json& deg = require(j, "degree", where);
    if (!deg.is_number_integer()) schema_fail(where + ".degree", "expected an integer");
    rec.degree = deg.get<int>();
    rec.singularity_type = get_string(j, "type", where);
    rec.aut0 = j.value("aut0", "");
    rec.metadata_only = j.value("metadataOnly", false);
    rec.symbols = get_string_list(j, "symbols", where, false);
    rec.lambda_modes = get_string_list(j, "lambdaModes", where, false);
    if (rec.lambda_modes.empty()) rec.lambda_modes.push_back("generic");
    for (const auto& label : rec.lambda_modes) {
        try {
            lambda_mode_from_label(label);
        } catch (const Error& e) {
            schema_fail(where + ".lambdaModes", e.what());
        }
    }
    rec.notes = get_string_list(j, "notes", where, false);

    if (j.contains("ambient")) {
        const json& a = j.at("ambient");
        std::vector<int> weights;
        for (const auto& w : require(a, "weights", where + ".ambient")) weights.push_back(w.get<int>());
        const auto coords = get_string_list(a, "coords", where + ".ambient", true);
        try {
            rec.ambient = Ambient(weights, coords);
        } catch (const Error& e) {
            schema_fail(where + ".ambient", e.what());
        }
    }

    if (j.contains("equation")) {
        if (!rec.ambient) schema_fail(where, "equation requires an ambient");
        rec.equation_text = j.at("equation").get<std::string>();
        try {
            rec.equation = parse_poly(rec.equation_text, *rec.ambient, rec.symbols);
        } catch (const ParseError& e) {
            schema_fail(where + ".equation", e.what());
        }
        const WeightedDegree d = weighted_degree(*rec.equation, rec.ambient->weights);
        if (!d.is_uniform())
            schema_fail(where + ".equation", "not quasi-homogeneous for the ambient weights");
    }

    if (j.contains("generators")) {
        if (rec.metadata_only) schema_fail(where, "metadata-only records cannot carry generators");
        if (!rec.ambient) schema_fail(where, "generators require an ambient");
        const json& gens = j.at("generators");
        for (std::size_t i = 0; i < gens.size(); ++i) {
            const json& g = gens.at(i);
            const std::string name =
                get_string(g, "name", where + ".generators[" + std::to_string(i) + "]");
            const std::string gwhere = where + ".generator " + name;
            const auto modes = get_string_list(g, "modes", gwhere, false);
            std::optional<int> expected_order;
            if (g.contains("order")) expected_order = g.at("order").get<int>();

            std::optional<Symbol> param;
            if (g.contains("param")) param = intern_symbol(g.at("param").get<std::string>());
            DeclaredInverse inverse;
            if (g.contains("inverse")) inverse = parse_inverse(g.at("inverse"), rec.symbols, gwhere);

            std::vector<Poly> images;
            if (g.contains("tuple")) {
                const json& tuple = g.at("tuple");
                if (!tuple.is_array() || tuple.size() != rec.ambient->dim())
                    schema_fail(gwhere, "tuple needs one image per coordinate");
                for (std::size_t k = 0; k < tuple.size(); ++k) {
                    try {
                        images.push_back(
                            parse_poly(tuple.at(k).get<std::string>(), *rec.ambient, rec.symbols));
                    } catch (const ParseError& e) {
                        schema_fail(gwhere + ".tuple[" + std::to_string(k) + "]", e.what());
                    }
                }
            } else if (g.contains("matrix")) {
                images = expand_matrix(g.at("matrix"), *rec.ambient, rec.symbols, gwhere + ".matrix");
            } else {
                schema_fail(gwhere, "generator needs a 'tuple' or a 'matrix'");
            }
            try {
                GeneratorSpec spec{name,
                                   GradedMap(name, *rec.ambient, std::move(images), param, inverse),
                                   expected_order,
                                   g.value("inClosure", false),
                                   modes,
                                   g.value("note", "")};
                // Same name may only recur with disjoint mode sets.
                for (const auto& other : rec.generators) {
                    if (other.name != spec.name) continue;
                    if (other.modes.empty() || spec.modes.empty())
                        schema_fail(gwhere, "duplicate generator name without disjoint modes");
                    for (const auto& m : spec.modes)
                        if (std::find(other.modes.begin(), other.modes.end(), m) !=
                            other.modes.end())
                            schema_fail(gwhere, "duplicate generator name in mode " + m);
                }
                rec.generators.push_back(std::move(spec));
            } catch (const SchemaError&) {
                throw;
            } catch (const Error& e) {
                schema_fail(gwhere, e.what());
            }
        }
    }

    if (j.contains("relations")) {
        const json& rels = j.at("relations");
        for (std::size_t i = 0; i < rels.size(); ++i) {
            const json& r = rels.at(i);
            RelationSpec spec;
            spec.label = get_string(r, "label", where + ".relations[" + std::to_string(i) + "]");
            const std::string rwhere = where + ".relation '" + spec.label + "'";
            const std::string kind = r.value("kind", "word");
            if (kind == "family")
                spec.kind = RelationSpec::Kind::family;
            else if (kind == "word")
                spec.kind = RelationSpec::Kind::word;
            else
                schema_fail(rwhere, "kind must be 'family' or 'word'");
            const std::string status = r.value("status", "verify");
            if (status == "verify")
                spec.status = RelationSpec::Status::verify;
            else if (status == "skip-ambiguous")
                spec.status = RelationSpec::Status::skip_ambiguous;
            else
                schema_fail(rwhere, "status must be 'verify' or 'skip-ambiguous'");
            spec.modes = get_string_list(r, "modes", rwhere, false);
            spec.note = r.value("note", "");
            if (spec.kind == RelationSpec::Kind::family) {
                spec.outer = get_string(r, "outer", rwhere);
                spec.family = get_string(r, "family", rwhere);
                const json& sub = require(r, "sub", rwhere);
                if (!sub.is_object() || sub.size() != 1)
                    schema_fail(rwhere + ".sub", "expected one symbol -> expression entry");
                spec.sub = parse_scalar_field(sub.begin().value().get<std::string>(), rec.symbols,
                                              rwhere + ".sub");
            } else if (spec.status == RelationSpec::Status::verify) {
                for (const auto& e : require(r, "lhs", rwhere))
                    spec.lhs.push_back(parse_word_ref(e, rec.symbols, rwhere + ".lhs"));
                if (r.contains("rhs"))
                    for (const auto& e : r.at("rhs"))
                        spec.rhs.push_back(parse_word_ref(e, rec.symbols, rwhere + ".rhs"));
            }
            rec.relations.push_back(std::move(spec));
        }
    }

    if (j.contains("closure")) {
        const json& c = j.at("closure");
        ClosureSpec spec;
        spec.generators = get_string_list(c, "generators", where + ".closure", true);
        spec.expected_group = get_string(c, "expected", where + ".closure");
        spec.cap = c.value("cap", 64);
        rec.closure_spec = spec;
        for (const auto& name : spec.generators) {
            bool found = false;
            for (const auto& g : rec.generators)
                if (g.name == name) found = true;
            if (!found) schema_fail(where + ".closure", "unknown generator " + name);
        }
    }

    if (j.contains("latticeActions")) {
        const json& acts = j.at("latticeActions");
        for (std::size_t i = 0; i < acts.size(); ++i)
            rec.lattice_actions.push_back(parse_lattice_action(
                acts.at(i), rec.symbols, where + ".latticeActions[" + std::to_string(i) + "]"));
    }

    if (j.contains("graph")) {
        const json& g = j.at("graph");
        rec.graph = GraphSpec{get_string(g, "file", where + ".graph"),
                              get_string(g, "expected", where + ".graph")};
    }

    if (j.contains("structure")) {
        const json& s = j.at("structure");
        if (s.is_string()) {
            rec.structure["*"] = s.get<std::string>();
        } else {
            for (auto it = s.begin(); it != s.end(); ++it)
                rec.structure[it.key()] = it.value().get<std::string>();
        }
    }

    if (rec.metadata_only && (rec.closure_spec || !rec.lattice_actions.empty() || rec.graph))
        schema_fail(where, "metadata-only records cannot carry checks");
    return rec;
}

}  // namespace

Catalog load_catalog_text(const std::string& text, const std::string& base_dir) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw Error(std::string("catalog is not valid JSON: ") + e.what());
    }
    Catalog catalog;
    catalog.base_dir = base_dir;
    const json& version = require(j, "schemaVersion", "catalog");
    if (!version.is_number_integer()) schema_fail("catalog.schemaVersion", "expected an integer");
    catalog.schema_version = version.get<int>();
    if (catalog.schema_version != kCatalogSchemaVersion)
        schema_fail("catalog.schemaVersion",
                    "unsupported version " + std::to_string(catalog.schema_version));
    catalog.description = j.value("description", "");
    const json& cases = require(j, "cases", "catalog");
    if (!cases.is_array()) schema_fail("catalog.cases", "expected an array");
    for (std::size_t i = 0; i < cases.size(); ++i) {
        CaseRecord rec = parse_case(cases.at(i), i);
        for (const auto& existing : catalog.cases)
            if (existing.id == rec.id) schema_fail("case " + rec.id, "duplicate case id");
        catalog.cases.push_back(std::move(rec));
    }
    return catalog;
}

Catalog load_catalog(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open catalog file '" + path + "'");
    std::stringstream buffer;
    buffer << in.rdbuf();
    std::string dir = ".";
    const auto slash = path.find_last_of('/');
    if (slash != std::string::npos) dir = path.substr(0, slash);
    return load_catalog_text(buffer.str(), dir);
}

// --- verification ---

const GradedMap& PreparedCase::map(const std::string& name) const {
    for (const auto& [n, m] : maps)
        if (n == name) return m;
    throw UnknownMapError(name);
}

PreparedCase prepare_case(const CaseRecord& rec, const std::string& mode_label) {
    if (std::find(rec.lambda_modes.begin(), rec.lambda_modes.end(), mode_label) ==
        rec.lambda_modes.end())
        throw Error("case " + rec.id + " does not list mode " + mode_label);
    PreparedCase prepared;
    prepared.mode = lambda_mode_from_label(mode_label);
    if (rec.equation)
        prepared.surface =
            Surface(*rec.ambient, specialize_poly(*rec.equation, prepared.mode), prepared.mode);
    for (const auto& g : rec.generators) {
        if (!g.active_in(mode_label)) continue;
        prepared.maps.emplace_back(g.name, specialize_map(g.map, prepared.mode));
    }
    return prepared;
}

std::vector<GradedMap> resolve_word(const PreparedCase& prepared,
                                    const std::vector<WordRef>& word) {
    std::vector<GradedMap> out;
    for (const auto& ref : word) {
        GradedMap m = prepared.map(ref.map);
        if (ref.at) {
            if (!m.param()) throw Error("map '" + ref.map + "' takes no parameter");
            m = m.substituted(*m.param(), specialize_scalar(*ref.at, prepared.mode));
        }
        if (ref.inverse) m = resolve_declared_inverse(m);
        out.push_back(std::move(m));
    }
    return out;
}

CaseReport verify_case(const Catalog& catalog, const CaseRecord& rec,
                       const std::string& mode_label) {
    CaseReport report;
    report.case_id = rec.id;
    report.mode_label = mode_label;
    auto add = [&](std::string check, std::string target, CheckStatus status, std::string detail) {
        report.checks.push_back({std::move(check), std::move(target), status, std::move(detail)});
    };

    if (rec.metadata_only) {
        add("metadata", "", CheckStatus::not_applicable,
            "metadata-only record; structure recorded as '" + rec.structure_for(mode_label) + "'");
        return report;
    }

    PreparedCase prepared;
    try {
        prepared = prepare_case(rec, mode_label);
    } catch (const std::exception& e) {
        add("prepare", "", CheckStatus::fail, e.what());
        return report;
    }

    // Gradedness: construction of Surface / GradedMap has already verified
    // it for this mode; report what was established.
    if (prepared.surface) {
        add("gradedness", "equation", CheckStatus::pass,
            "quasi-homogeneous of degree " + std::to_string(prepared.surface->degree()));
    } else {
        add("gradedness", "equation", CheckStatus::not_applicable, "no equation in this record");
    }
    for (const auto& [name, m] : prepared.maps)
        add("gradedness", name, CheckStatus::pass, "graded tuple " + m.tuple_str());

    // Equation preservation.
    if (prepared.surface) {
        for (const auto& [name, m] : prepared.maps) {
            try {
                const Scalar c = verify_automorphism(*prepared.surface, m);
                add("automorphism", name, CheckStatus::pass, "c = " + c.str());
            } catch (const NotAnAutomorphismError& e) {
                add("automorphism", name, CheckStatus::fail,
                    std::string(e.what()) + "; residual " + e.residual);
            } catch (const std::exception& e) {
                add("automorphism", name, CheckStatus::fail, e.what());
            }
        }
    } else if (!prepared.maps.empty()) {
        add("automorphism", "all generators", CheckStatus::not_applicable,
            "no equation; relations are verified on the ambient space");
    }

    // Declared inverses.
    for (const auto& [name, m] : prepared.maps) {
        if (!m.has_declared_inverse()) continue;
        try {
            const bool ok = verify_declared_inverse(m);
            add("inverse", name, ok ? CheckStatus::pass : CheckStatus::fail,
                ok ? "declared inverse round-trips to the identity"
                   : "declared inverse does not round-trip");
        } catch (const std::exception& e) {
            add("inverse", name, CheckStatus::fail, e.what());
        }
    }

    // Element orders.
    for (const auto& g : rec.generators) {
        if (!g.active_in(mode_label) || !g.expected_order) continue;
        try {
            const int order = element_order(prepared.map(g.name));
            add("order", g.name, order == *g.expected_order ? CheckStatus::pass : CheckStatus::fail,
                "order = " + std::to_string(order) + ", expected " +
                    std::to_string(*g.expected_order));
        } catch (const std::exception& e) {
            add("order", g.name, CheckStatus::fail, e.what());
        }
    }

    // Relations.
    for (const auto& r : rec.relations) {
        if (!r.active_in(mode_label)) continue;
        if (r.status == RelationSpec::Status::skip_ambiguous) {
            add("relation", r.label, CheckStatus::skipped_ambiguous,
                r.note.empty() ? "notation ambiguous; not verified" : r.note);
            continue;
        }
        try {
            bool ok = false;
            if (r.kind == RelationSpec::Kind::family) {
                ok = verify_family_relation(prepared.map(r.outer), prepared.map(r.family),
                                            specialize_scalar(r.sub, prepared.mode));
            } else {
                const auto lhs = resolve_word(prepared, r.lhs);
                const auto rhs = resolve_word(prepared, r.rhs);
                const bool relation = std::holds_alternative<LambdaSixthRoot>(prepared.mode);
                ok = verify_word_relation(lhs, rhs, *rec.ambient, relation);
            }
            add("relation", r.label, ok ? CheckStatus::pass : CheckStatus::fail,
                r.note.empty() ? (ok ? "holds exactly" : "does not hold") : r.note);
        } catch (const std::exception& e) {
            add("relation", r.label, CheckStatus::fail, e.what());
        }
    }

    // Closure + fingerprint + named-group match.
    if (rec.closure_spec) {
        try {
            std::vector<GradedMap> gens;
            for (const auto& name : rec.closure_spec->generators)
                gens.push_back(prepared.map(name));
            const auto elements = closure(gens, rec.closure_spec->cap);
            add("closure", "", CheckStatus::pass,
                "size = " + std::to_string(elements.size()));
            const GroupFingerprint fp = fingerprint(multiplication_table(elements));
            const auto name = match_named_group(fp);
            if (name && *name == rec.closure_spec->expected_group) {
                add("component-group", *name, CheckStatus::pass, fp.str());
            } else {
                add("component-group", name ? *name : "(no match)", CheckStatus::fail,
                    "expected " + rec.closure_spec->expected_group + "; " + fp.str());
            }
        } catch (const std::exception& e) {
            add("component-group", "", CheckStatus::fail, e.what());
        }
    }

    // Quasitorus / unipotent actions on parameters.
    for (const auto& action : rec.lattice_actions) {
        try {
            const LatticeActionResult result = verify_lattice_action(action);
            std::string detail = "orders and relations exact";
            if (!result.ok) {
                detail = result.failures.front();
                for (std::size_t i = 1; i < result.failures.size(); ++i)
                    detail += "; " + result.failures[i];
            }
            add("lattice-action", action.name,
                result.ok ? CheckStatus::pass : CheckStatus::fail, detail);
        } catch (const std::exception& e) {
            add("lattice-action", action.name, CheckStatus::fail, e.what());
        }
    }

    // Dual-graph automorphism group.
    if (rec.graph) {
        try {
            std::ifstream in(catalog.base_dir + "/" + rec.graph->file);
            if (!in) throw Error("cannot open graph file " + rec.graph->file);
            std::stringstream buffer;
            buffer << in.rdbuf();
            const ColoredGraph g = ColoredGraph::from_json_text(buffer.str());
            const auto auts = graph_automorphisms(g);
            const auto name = identify_graph_group(g);
            const std::string got = name ? *name : "(no match)";
            add("graph-group", rec.graph->file,
                name && *name == rec.graph->expected_group ? CheckStatus::pass : CheckStatus::fail,
                "order " + std::to_string(auts.size()) + ", " + got + "; expected " +
                    rec.graph->expected_group);
        } catch (const std::exception& e) {
            add("graph-group", rec.graph->file, CheckStatus::fail, e.what());
        }
    }

    return report;
}

std::vector<CaseReport> run_all(const Catalog& catalog,
                                const std::optional<std::string>& only_mode) {
    // Deterministic order: degree descending, then id.
    std::vector<const CaseRecord*> order;
    for (const auto& rec : catalog.cases) order.push_back(&rec);
    std::stable_sort(order.begin(), order.end(), [](const CaseRecord* a, const CaseRecord* b) {
        if (a->degree != b->degree) return a->degree > b->degree;
        return a->id < b->id;
    });

    struct Task {
        const CaseRecord* rec;
        std::string mode;
    };
    std::vector<Task> tasks;
    for (const CaseRecord* rec : order)
        for (const auto& mode : rec->lambda_modes) {
            if (only_mode && *only_mode != mode) continue;
            tasks.push_back({rec, mode});
        }

    // Cases are independent and all inputs immutable; verify concurrently
    // and merge in task order.
    std::vector<std::future<CaseReport>> futures;
    futures.reserve(tasks.size());
    for (const auto& task : tasks)
        futures.push_back(std::async(std::launch::async, [&catalog, task] {
            return verify_case(catalog, *task.rec, task.mode);
        }));
    std::vector<CaseReport> reports;
    reports.reserve(tasks.size());
    for (auto& f : futures) reports.push_back(f.get());
    return reports;
}

Summary summarize(const std::vector<CaseReport>& reports) {
    Summary s;
    s.cases = static_cast<int>(reports.size());
    for (const auto& r : reports) {
        s.checks += static_cast<int>(r.checks.size());
        s.pass += r.count(CheckStatus::pass);
        s.fail += r.count(CheckStatus::fail);
        s.skipped += r.count(CheckStatus::skipped_ambiguous);
        s.not_applicable += r.count(CheckStatus::not_applicable);
    }
    return s;
}

}  // namespace duval
