#include "serialize.hpp"

#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <utility>
#include <vector>

#include "builtin_rings.hpp"
#include "errors.hpp"

namespace ts {

namespace {

const Json& field_at(const Json& j, const char* key, const char* where) {
    if (!j.is_object() || !j.contains(key))
        throw MalformedInput(std::string(where) + " is missing the '" + key + "' field");
    return j.at(key);
}

int int_at(const Json& j, const char* key, const char* where) {
    const Json& v = field_at(j, key, where);
    if (!v.is_number_integer())
        throw MalformedInput(std::string(where) + " field '" + key + "' must be an integer");
    return v.get<int>();
}

std::string string_at(const Json& j, const char* key, const char* where) {
    const Json& v = field_at(j, key, where);
    if (!v.is_string())
        throw MalformedInput(std::string(where) + " field '" + key + "' must be a string");
    return v.get<std::string>();
}

const Json& array_at(const Json& j, const char* key, const char* where) {
    const Json& v = field_at(j, key, where);
    if (!v.is_array())
        throw MalformedInput(std::string(where) + " field '" + key + "' must be an array");
    return v;
}

Json scalar_to_json(const Scalar& s) {
    if (s.is_rational_kind()) return Json(s.str());
    return Json(s.fp_value());
}

Scalar scalar_from_json(const Field& f, const Json& j) {
    if (j.is_number_integer()) return Scalar::from_int(f, j.get<std::int64_t>());
    if (j.is_string()) return Scalar::parse(f, j.get<std::string>());
    throw MalformedInput("coefficients must be integers or fraction strings");
}

Json value_to_json(const RingElement& v) {
    Json arr = Json::array();
    const auto& names = v.ring()->basis(v.bidegree());
    for (size_t i = 0; i < v.coeffs().size(); ++i) {
        if (v.coeffs()[i].is_zero()) continue;
        arr.push_back({{"coeff", scalar_to_json(v.coeffs()[i])}, {"name", names[i]}});
    }
    return arr;
}

RingElement value_from_json(const BigradedRing& ring, Bidegree bd, const Json& arr) {
    if (!arr.is_array()) throw MalformedInput("a value must be an array of {name, coeff}");
    const auto& names = ring.basis(bd);
    std::vector<Scalar> coeffs(names.size(), Scalar::zero(ring.field()));
    std::set<std::string> seen;
    for (const auto& item : arr) {
        std::string name = string_at(item, "name", "value term");
        if (!seen.insert(name).second)
            throw MalformedInput("monomial '" + name + "' listed twice in one value");
        size_t pos = names.size();
        for (size_t i = 0; i < names.size(); ++i)
            if (names[i] == name) pos = i;
        if (pos == names.size())
            throw MalformedInput("monomial '" + name + "' does not live in bidegree (" +
                                 std::to_string(bd.p) + "," + std::to_string(bd.q) + ")");
        coeffs[pos] = scalar_from_json(ring.field(), field_at(item, "coeff", "value term"));
    }
    return ring.element(bd, coeffs);
}

std::vector<Generator> generators_from_json(const Json& j, const char* where) {
    std::vector<Generator> gens;
    std::set<std::string> seen;
    for (const auto& item : array_at(j, "generators", where)) {
        Generator g{string_at(item, "name", "generator"),
                    {int_at(item, "p", "generator"), int_at(item, "q", "generator")}};
        if (!seen.insert(g.name).second)
            throw MalformedInput("duplicate generator name '" + g.name + "'");
        gens.push_back(std::move(g));
    }
    return gens;
}

Json entry_rows_to_json(const TateComplex& tgt, const TateComplex& src,
                        const std::map<std::pair<size_t, size_t>, RingElement>& entries) {
    Json arr = Json::array();
    for (const auto& [key, v] : entries)
        arr.push_back({{"source", src.gen(key.second).name},
                       {"target", tgt.gen(key.first).name},
                       {"value", value_to_json(v)}});
    return arr;
}

size_t gen_index(const TateComplex& M, const std::string& name, const char* role) {
    for (size_t k = 0; k < M.size(); ++k)
        if (M.gen(k).name == name) return k;
    throw MalformedInput(std::string("entry ") + role + " '" + name + "' names no generator");
}

}  // namespace

Json ring_to_json(const BigradedRing& ring) {
    Json j;
    j["base"] = ring.field().name();
    const auto& w = ring.window();
    j["window"] = {{"p_min", w.p_min}, {"p_max", w.p_max}, {"q_max", w.q_max}};
    Json basis = Json::array();
    for (const auto& s : ring.symbols())
        basis.push_back({{"name", s.name}, {"p", s.bd.p}, {"q", s.bd.q}});
    j["basis"] = basis;
    j["unit"] = ring.unit_name();
    Json mult = Json::array();
    for (size_t l = 0; l < ring.symbol_count(); ++l)
        for (size_t r = 0; r < ring.symbol_count(); ++r) {
            const RingElement& e = ring.table_entry(l, r);
            if (e.is_zero()) continue;
            mult.push_back({{"left", ring.symbols()[l].name},
                            {"result", value_to_json(e)},
                            {"right", ring.symbols()[r].name}});
        }
    j["mult"] = mult;
    return j;
}

RingPtr ring_from_json(const Json& j) {
    auto base = Field::parse(string_at(j, "base", "ring"));
    if (!base) throw MalformedInput("unknown base field '" + string_at(j, "base", "ring") + "'");
    const Json& jw = field_at(j, "window", "ring");
    BigradedRing::Window w{int_at(jw, "p_min", "window"), int_at(jw, "p_max", "window"),
                           int_at(jw, "q_max", "window")};
    std::vector<BigradedRing::Symbol> symbols;
    for (const auto& item : array_at(j, "basis", "ring"))
        symbols.push_back({string_at(item, "name", "basis symbol"),
                           {int_at(item, "p", "basis symbol"), int_at(item, "q", "basis symbol")}});
    std::string unit = string_at(j, "unit", "ring");
    std::map<std::pair<std::string, std::string>, BigradedRing::Expansion> table;
    for (const auto& item : array_at(j, "mult", "ring")) {
        BigradedRing::Expansion exp;
        for (const auto& term : array_at(item, "result", "mult row"))
            exp.emplace_back(string_at(term, "name", "mult term"),
                             scalar_from_json(*base, field_at(term, "coeff", "mult term")));
        auto key = std::make_pair(string_at(item, "left", "mult row"),
                                  string_at(item, "right", "mult row"));
        if (!table.emplace(std::move(key), std::move(exp)).second)
            throw MalformedInput("duplicate mult row");
    }
    auto ring = std::make_shared<BigradedRing>(*base, w, std::move(symbols), std::move(unit),
                                               std::move(table));
    ValidationReport report = validate_ring(*ring);
    if (!report.empty()) throw MalformedInput("invalid ring: " + report.front());
    return ring;
}

RingPtr ring_from_spec(const Json& spec) {
    if (spec.is_object()) return ring_from_json(spec);
    if (spec.is_string()) {
        std::string s = spec.get<std::string>();
        if (s.rfind("builtin:", 0) == 0) return builtin_ring(s.substr(8));
        return ring_from_json(load_json(s));
    }
    throw MalformedInput("a ring must be an inline object, 'builtin:NAME', or a file path");
}

Json complex_to_json(const TateComplex& M, bool include_ring) {
    Json j;
    if (include_ring) j["ring"] = ring_to_json(*M.ring());
    Json gens = Json::array();
    for (const auto& g : M.generators())
        gens.push_back({{"name", g.name}, {"p", g.bd.p}, {"q", g.bd.q}});
    j["generators"] = gens;
    j["differential"] = entry_rows_to_json(M, M, M.entries());
    return j;
}

TateComplex complex_from_json(const Json& j, RingPtr ambient) {
    if (!j.is_object()) throw MalformedInput("a complex must be an object");
    RingPtr ring = j.contains("ring") ? ring_from_spec(j.at("ring")) : std::move(ambient);
    if (!ring) throw MalformedInput("complex has no ring and no ambient ring was given");
    TateComplex M(ring, generators_from_json(j, "complex"));
    for (const auto& item : array_at(j, "differential", "complex")) {
        size_t tgt = gen_index(M, string_at(item, "target", "differential row"), "target");
        size_t src = gen_index(M, string_at(item, "source", "differential row"), "source");
        M.set_entry(tgt, src,
                    value_from_json(*ring, M.entry_bidegree(tgt, src),
                                    field_at(item, "value", "differential row")));
    }
    return M;
}

Json morphism_to_json(const GradedMorphism& f, bool include_ring) {
    Json j;
    if (include_ring) j["ring"] = ring_to_json(*f.source().ring());
    j["degree"] = f.degree();
    j["source"] = complex_to_json(f.source(), false);
    j["target"] = complex_to_json(f.target(), false);
    j["entries"] = entry_rows_to_json(f.target(), f.source(), f.entries());
    return j;
}

GradedMorphism morphism_from_json(const Json& j, RingPtr ambient) {
    if (!j.is_object()) throw MalformedInput("a morphism must be an object");
    RingPtr ring = j.contains("ring") ? ring_from_spec(j.at("ring")) : std::move(ambient);
    if (!ring) throw MalformedInput("morphism has no ring and no ambient ring was given");
    TateComplex source = complex_from_json(field_at(j, "source", "morphism"), ring);
    TateComplex target = complex_from_json(field_at(j, "target", "morphism"), ring);
    GradedMorphism f(std::move(source), std::move(target), int_at(j, "degree", "morphism"));
    for (const auto& item : array_at(j, "entries", "morphism")) {
        size_t tgt = gen_index(f.target(), string_at(item, "target", "entry row"), "target");
        size_t src = gen_index(f.source(), string_at(item, "source", "entry row"), "source");
        f.set_entry(tgt, src,
                    value_from_json(*ring, f.entry_bidegree(tgt, src),
                                    field_at(item, "value", "entry row")));
    }
    return f;
}

std::string canonical_text(const Json& j) { return j.dump(2) + "\n"; }

Json parse_text(const std::string& text) {
    try {
        return Json::parse(text);
    } catch (const Json::parse_error& e) {
        throw MalformedInput(std::string("bad structured text: ") + e.what());
    }
}

Json load_json(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw MalformedInput("cannot read '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_text(buf.str());
}

void save_json(const std::string& path, const Json& j) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw MalformedInput("cannot write '" + path + "'");
    out << canonical_text(j);
    if (!out) throw MalformedInput("failed writing '" + path + "'");
}

}  // namespace ts
