#include "eucalc/json_io.hpp"

#include <fstream>
#include <set>
#include <sstream>

namespace eucalc::io {

namespace {

constexpr int kSchemaVersion = 1;

void expect_object(const json& j, const std::string& path) {
    if (!j.is_object()) throw SchemaError(path, "expected an object");
}

void check_fields(const json& j, const std::string& path, const std::set<std::string>& required,
                  const std::set<std::string>& optional = {}) {
    expect_object(j, path);
    for (const auto& field : required)
        if (!j.contains(field)) throw SchemaError(path, "missing field '" + field + "'");
    for (auto it = j.begin(); it != j.end(); ++it)
        if (!required.count(it.key()) && !optional.count(it.key()))
            throw SchemaError(path + "." + it.key(), "unknown field");
}

std::string get_string(const json& j, const std::string& field, const std::string& path) {
    if (!j.at(field).is_string()) throw SchemaError(path + "." + field, "expected a string");
    return j.at(field).get<std::string>();
}

int get_small_int(const json& j, const std::string& path) {
    if (!j.is_number_integer() && !j.is_number_unsigned())
        throw SchemaError(path, "expected a small integer");
    auto v = j.get<long long>();
    if (v < -(1LL << 30) || v > (1LL << 30)) throw SchemaError(path, "integer out of range");
    return static_cast<int>(v);
}

Mode mode_from_string(const std::string& s, const std::string& path) {
    if (s == "topological") return Mode::Topological;
    if (s == "algebraic") return Mode::Algebraic;
    throw SchemaError(path, "mode must be 'topological' or 'algebraic'");
}

}  // namespace

json int_to_json(const Int& v) {
    if (v.fits_slong_p()) return json(static_cast<std::int64_t>(v.get_si()));
    return json(v.get_str());
}

Int int_from_json(const json& j, const std::string& path) {
    if (j.is_number_integer()) return Int(static_cast<long>(j.get<std::int64_t>()));
    if (j.is_number_unsigned()) {
        auto u = j.get<std::uint64_t>();
        Int out;
        mpz_import(out.get_mpz_t(), 1, 1, sizeof(u), 0, 0, &u);
        return out;
    }
    if (j.is_string()) {
        const std::string s = j.get<std::string>();
        try {
            return Int(s);
        } catch (const std::invalid_argument&) {
            throw SchemaError(path, "'" + s + "' is not a decimal integer");
        }
    }
    if (j.is_number_float())
        throw SchemaError(path, "integer outside the 64-bit range must be a decimal string");
    throw SchemaError(path, "expected an integer or a decimal string");
}

DocKind sniff_kind(const json& doc, const std::string& path) {
    expect_object(doc, path);
    if (doc.contains("cells")) return DocKind::Space;
    if (doc.contains("assign")) return DocKind::Map;
    if (doc.contains("provenance")) return DocKind::Behrend;
    if (doc.contains("failedAxiom")) return DocKind::Counterexample;
    if (doc.contains("checks")) return DocKind::Report;
    if (doc.contains("entries")) {
        const auto& entries = doc.at("entries");
        if (entries.is_array() && !entries.empty() && entries.front().is_object() &&
            entries.front().contains("sub"))
            return DocKind::EuMatrix;
        return DocKind::K0Class;
    }
    if (doc.contains("values")) return DocKind::Cf;
    throw SchemaError(path, "unrecognized document kind");
}

json parse_document(const std::string& text, const std::string& path) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw SchemaError(path, std::string("invalid JSON: ") + e.what());
    }
    expect_object(doc, path);
    if (!doc.contains("schemaVersion"))
        throw Error(Err::VersionError, path + ": missing schemaVersion");
    const auto& v = doc.at("schemaVersion");
    if (!v.is_number_integer() || v.get<int>() != kSchemaVersion)
        throw Error(Err::VersionError, path + ": unsupported schemaVersion");
    return doc;
}

json read_document_file(const std::string& filename) {
    std::ifstream in(filename);
    if (!in) throw Error(Err::UsageError, "cannot open '" + filename + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_document(buffer.str(), filename);
}

json save_space(const CellSpace& space) {
    json doc;
    doc["schemaVersion"] = kSchemaVersion;
    doc["name"] = space.name();
    doc["mode"] = mode_name(space.mode());
    json cells = json::array();
    for (const auto& c : space.cells()) cells.push_back({{"id", c.id}, {"dim", c.dim}});
    doc["cells"] = std::move(cells);
    json closure = json::array();
    for (int i = 0; i < space.size(); ++i)
        for (int j = 0; j < space.size(); ++j)
            if (space.strictly_less(i, j))
                closure.push_back(json::array({space.cell(i).id, space.cell(j).id}));
    doc["closure"] = std::move(closure);
    return doc;
}

SpacePtr load_space(const json& doc, const std::string& path) {
    check_fields(doc, path, {"schemaVersion", "name", "mode", "cells", "closure"});
    std::string name = get_string(doc, "name", path);
    Mode mode = mode_from_string(get_string(doc, "mode", path), path + ".mode");
    if (!doc.at("cells").is_array()) throw SchemaError(path + ".cells", "expected an array");
    std::vector<Cell> cells;
    int i = 0;
    for (const auto& cj : doc.at("cells")) {
        std::string cpath = path + ".cells[" + std::to_string(i++) + "]";
        check_fields(cj, cpath, {"id", "dim"});
        Cell c{get_string(cj, "id", cpath), get_small_int(cj.at("dim"), cpath + ".dim")};
        if (c.dim < 0) throw SchemaError(cpath + ".dim", "dimension must be non-negative");
        cells.push_back(std::move(c));
    }
    if (!doc.at("closure").is_array()) throw SchemaError(path + ".closure", "expected an array");
    std::vector<std::pair<std::string, std::string>> closure;
    i = 0;
    for (const auto& pj : doc.at("closure")) {
        std::string ppath = path + ".closure[" + std::to_string(i++) + "]";
        if (!pj.is_array() || pj.size() != 2 || !pj[0].is_string() || !pj[1].is_string())
            throw SchemaError(ppath, "expected a [lower, upper] pair of cell ids");
        closure.emplace_back(pj[0].get<std::string>(), pj[1].get<std::string>());
    }
    return CellSpace::make(std::move(name), mode, std::move(cells), closure);
}

json save_map(const CellMap& map) {
    json doc;
    doc["schemaVersion"] = kSchemaVersion;
    doc["source"] = map.source()->name();
    doc["target"] = map.target()->name();
    json assign = json::array();
    for (int e = 0; e < map.source()->size(); ++e)
        assign.push_back(json::array(
            {map.source()->cell(e).id, map.target()->cell(map.apply(e)).id}));
    doc["assign"] = std::move(assign);
    doc["smooth"] = map.smooth();
    return doc;
}

CellMap load_map(const json& doc, const DocumentSet& docs, const std::string& path) {
    check_fields(doc, path, {"schemaVersion", "source", "target", "assign"}, {"smooth"});
    auto source = docs.space(get_string(doc, "source", path), path + ".source");
    auto target = docs.space(get_string(doc, "target", path), path + ".target");
    if (!doc.at("assign").is_array()) throw SchemaError(path + ".assign", "expected an array");
    std::vector<std::pair<std::string, std::string>> assign;
    int i = 0;
    for (const auto& pj : doc.at("assign")) {
        std::string ppath = path + ".assign[" + std::to_string(i++) + "]";
        if (!pj.is_array() || pj.size() != 2 || !pj[0].is_string() || !pj[1].is_string())
            throw SchemaError(ppath, "expected a [source, target] pair of cell ids");
        assign.emplace_back(pj[0].get<std::string>(), pj[1].get<std::string>());
    }
    bool smooth = false;
    if (doc.contains("smooth")) {
        if (!doc.at("smooth").is_boolean()) throw SchemaError(path + ".smooth", "expected a boolean");
        smooth = doc.at("smooth").get<bool>();
    }
    return CellMap::make_by_ids(std::move(source), std::move(target), assign, smooth);
}

namespace {

json values_to_json(const SpacePtr& space, const std::vector<Int>& values) {
    json out = json::object();
    for (int c = 0; c < space->size(); ++c) out[space->cell(c).id] = int_to_json(values[c]);
    return out;
}

std::vector<Int> values_from_json(const json& j, const SpacePtr& space, const std::string& path) {
    expect_object(j, path);
    std::vector<Int> values(space->size(), Int(0));
    for (auto it = j.begin(); it != j.end(); ++it) {
        auto idx = space->find(it.key());
        if (!idx) throw SchemaError(path + "." + it.key(), "not a cell of '" + space->name() + "'");
        values[*idx] = int_from_json(it.value(), path + "." + it.key());
    }
    return values;
}

}  // namespace

json save_cf(const ConstructibleFunction& cf) {
    json doc;
    doc["schemaVersion"] = kSchemaVersion;
    doc["space"] = cf.space()->name();
    doc["values"] = values_to_json(cf.space(), cf.values());
    return doc;
}

ConstructibleFunction load_cf(const json& doc, const DocumentSet& docs, const std::string& path) {
    check_fields(doc, path, {"schemaVersion", "space", "values"});
    auto space = docs.space(get_string(doc, "space", path), path + ".space");
    return ConstructibleFunction(space, values_from_json(doc.at("values"), space, path + ".values"));
}

json save_behrend(const BehrendData& b) {
    json doc;
    doc["schemaVersion"] = kSchemaVersion;
    doc["space"] = b.space()->name();
    doc["values"] = values_to_json(b.space(), b.values());
    doc["provenance"] = provenance_name(b.provenance());
    return doc;
}

BehrendData load_behrend(const json& doc, const DocumentSet& docs, const std::string& path) {
    check_fields(doc, path, {"schemaVersion", "space", "values", "provenance"});
    auto space = docs.space(get_string(doc, "space", path), path + ".space");
    auto values = values_from_json(doc.at("values"), space, path + ".values");
    Provenance prov;
    try {
        prov = provenance_from_name(get_string(doc, "provenance", path));
    } catch (const Error&) {
        throw SchemaError(path + ".provenance", "unknown provenance");
    }
    try {
        return BehrendData::from_document(space, std::move(values), prov);
    } catch (const Error& e) {
        throw SchemaError(path + ".values", e.what());
    }
}

json save_k0(const MotivicClass& xi) {
    json doc;
    doc["schemaVersion"] = kSchemaVersion;
    doc["space"] = xi.space()->name();
    json entries = json::array();
    for (const auto& [key, mult] : xi.table())
        entries.push_back({{"cell", xi.space()->cell(key.first).id},
                           {"fiberDim", key.second},
                           {"mult", int_to_json(mult)}});
    doc["entries"] = std::move(entries);
    return doc;
}

MotivicClass load_k0(const json& doc, const DocumentSet& docs, const std::string& path) {
    check_fields(doc, path, {"schemaVersion", "space", "entries"});
    auto space = docs.space(get_string(doc, "space", path), path + ".space");
    if (!doc.at("entries").is_array()) throw SchemaError(path + ".entries", "expected an array");
    MotivicClass xi(space);
    int i = 0;
    for (const auto& ej : doc.at("entries")) {
        std::string epath = path + ".entries[" + std::to_string(i++) + "]";
        check_fields(ej, epath, {"cell", "fiberDim", "mult"});
        int cell = space->index_of(get_string(ej, "cell", epath));
        int fiber_dim = get_small_int(ej.at("fiberDim"), epath + ".fiberDim");
        if (fiber_dim < 0) throw SchemaError(epath + ".fiberDim", "must be non-negative");
        xi.add(cell, fiber_dim, int_from_json(ej.at("mult"), epath + ".mult"));
    }
    return xi;
}

json save_eumatrix(const EuMatrix& eu) {
    json doc;
    doc["schemaVersion"] = kSchemaVersion;
    doc["space"] = eu.space()->name();
    json entries = json::array();
    const int n = eu.space()->size();
    for (int sub = 0; sub < n; ++sub)
        for (int super = 0; super < n; ++super) {
            if (sub == super || eu.entry(sub, super) == 0) continue;
            entries.push_back({{"sub", eu.space()->cell(sub).id},
                               {"super", eu.space()->cell(super).id},
                               {"value", int_to_json(eu.entry(sub, super))}});
        }
    doc["entries"] = std::move(entries);
    return doc;
}

EuMatrix load_eumatrix(const json& doc, const DocumentSet& docs, const std::string& path) {
    check_fields(doc, path, {"schemaVersion", "space", "entries"});
    auto space = docs.space(get_string(doc, "space", path), path + ".space");
    if (!doc.at("entries").is_array()) throw SchemaError(path + ".entries", "expected an array");
    std::vector<std::tuple<int, int, Int>> entries;
    int i = 0;
    for (const auto& ej : doc.at("entries")) {
        std::string epath = path + ".entries[" + std::to_string(i++) + "]";
        check_fields(ej, epath, {"sub", "super", "value"});
        entries.emplace_back(space->index_of(get_string(ej, "sub", epath)),
                             space->index_of(get_string(ej, "super", epath)),
                             int_from_json(ej.at("value"), epath + ".value"));
    }
    return EuMatrix::make(space, entries);
}

json save_instance(const AxiomInstance& instance) {
    json doc;
    doc["schemaVersion"] = kSchemaVersion;
    doc["failedAxiom"] = instance.axiom;
    doc["seed"] = std::to_string(instance.seed);
    json spaces = json::array();
    for (const auto& s : instance.spaces) spaces.push_back(save_space(*s));
    doc["spaces"] = std::move(spaces);
    json maps = json::array();
    for (const auto& m : instance.maps) maps.push_back(save_map(m));
    doc["maps"] = std::move(maps);
    json functions = json::array();
    for (const auto& f : instance.functions) functions.push_back(save_cf(f));
    doc["functions"] = std::move(functions);
    json behrend = json::array();
    for (const auto& b : instance.behrend) behrend.push_back(save_behrend(b));
    doc["behrend"] = std::move(behrend);
    return doc;
}

AxiomInstance load_instance(const json& doc, const std::string& path) {
    check_fields(doc, path,
                 {"schemaVersion", "failedAxiom", "seed", "spaces", "maps", "functions", "behrend"});
    AxiomInstance instance;
    instance.axiom = get_string(doc, "failedAxiom", path);
    const auto& seed = doc.at("seed");
    if (seed.is_string()) {
        instance.seed = std::stoull(seed.get<std::string>());
    } else if (seed.is_number_unsigned() || seed.is_number_integer()) {
        instance.seed = seed.get<std::uint64_t>();
    } else {
        throw SchemaError(path + ".seed", "expected a decimal string or integer");
    }
    DocumentSet local;
    int i = 0;
    for (const auto& sj : doc.at("spaces")) {
        auto space = load_space(sj, path + ".spaces[" + std::to_string(i++) + "]");
        instance.spaces.push_back(space);
        local.add(sj, path);
    }
    i = 0;
    for (const auto& mj : doc.at("maps"))
        instance.maps.push_back(load_map(mj, local, path + ".maps[" + std::to_string(i++) + "]"));
    i = 0;
    for (const auto& fj : doc.at("functions"))
        instance.functions.push_back(load_cf(fj, local, path + ".functions[" + std::to_string(i++) + "]"));
    i = 0;
    for (const auto& bj : doc.at("behrend"))
        instance.behrend.push_back(load_behrend(bj, local, path + ".behrend[" + std::to_string(i++) + "]"));
    return instance;
}

json save_report(const HarnessReport& report) {
    json doc;
    doc["schemaVersion"] = kSchemaVersion;
    json checks = json::array();
    for (const auto& tally : report.tallies)
        checks.push_back({{"axiom", tally.axiom}, {"run", tally.run}, {"passed", tally.passed}});
    doc["checks"] = std::move(checks);
    doc["seeds"] = {{"start", std::to_string(report.seed)}, {"count", report.count}};
    json failures = json::array();
    for (const auto& failure : report.failures) failures.push_back(save_instance(failure));
    doc["failures"] = std::move(failures);
    return doc;
}

json save_polynomial(const IntPolynomial& p, const std::string& variable) {
    json doc;
    doc["schemaVersion"] = kSchemaVersion;
    doc["variable"] = variable;
    json coeffs = json::array();
    for (const auto& c : p.coefficients()) coeffs.push_back(int_to_json(c));
    doc["coefficients"] = std::move(coeffs);
    return doc;
}

void DocumentSet::add(const json& doc, const std::string& path) {
    switch (sniff_kind(doc, path)) {
        case DocKind::Space: {
            auto space = load_space(doc, path);
            for (const auto& existing : spaces_)
                if (existing->name() == space->name() && !same_space(existing, space))
                    throw SchemaError(path, "conflicting definitions of space '" + space->name() + "'");
            spaces_.push_back(std::move(space));
            return;
        }
        case DocKind::Map: maps_.push_back(load_map(doc, *this, path)); return;
        case DocKind::Cf: cfs_.push_back(load_cf(doc, *this, path)); return;
        case DocKind::Behrend: behrends_.push_back(load_behrend(doc, *this, path)); return;
        case DocKind::K0Class: k0classes_.push_back(load_k0(doc, *this, path)); return;
        case DocKind::EuMatrix: eumatrices_.push_back(load_eumatrix(doc, *this, path)); return;
        case DocKind::Counterexample: instances_.push_back(load_instance(doc, path)); return;
        case DocKind::Report: reports_.push_back(doc); return;
    }
}

SpacePtr DocumentSet::space(const std::string& name, const std::string& path) const {
    for (const auto& s : spaces_)
        if (s->name() == name) return s;
    throw SchemaError(path, "space '" + name + "' has not been loaded");
}

}  // namespace eucalc::io
