// Command-line front end: file-based operations on twisted complexes over a
// bigraded coefficient ring, plus the batch verification suite.
//
// Exit codes: 0 success, 1 mathematical failure (a validation or check
// reports violations), 2 usage or input error. Diagnostics go to stderr.

#include <CLI11.hpp>

#include <cstdint>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "builtin_rings.hpp"
#include "complex.hpp"
#include "errors.hpp"
#include "homalg.hpp"
#include "inthom.hpp"
#include "serialize.hpp"
#include "slice.hpp"
#include "suite.hpp"

using namespace ts;

namespace {

struct Globals {
    std::string ring_spec = "builtin:f2-tau";
    std::string window;  // "pmin,pmax,qmax", builtin rings only
    std::uint64_t seed = 1;
    std::string format = "text";

    bool structured() const { return format == "structured"; }
};

std::optional<BigradedRing::Window> parse_window(const std::string& s) {
    if (s.empty()) return std::nullopt;
    BigradedRing::Window w{};
    char c1 = 0, c2 = 0;
    std::istringstream in(s);
    if (!(in >> w.p_min >> c1 >> w.p_max >> c2 >> w.q_max) || c1 != ',' || c2 != ',' ||
        !(in >> std::ws).eof())
        throw MalformedInput("--window expects three integers: pmin,pmax,qmax");
    return w;
}

RingPtr resolve_ring(const Globals& g) {
    auto window = parse_window(g.window);
    if (g.ring_spec.rfind("builtin:", 0) == 0) {
        std::string name = g.ring_spec.substr(8);
        return window ? builtin_ring(name, *window) : builtin_ring(name);
    }
    if (window) throw MalformedInput("--window applies to builtin rings only");
    return ring_from_spec(Json(g.ring_spec));
}

TateComplex load_complex(const std::string& path, const RingPtr& ambient) {
    return complex_from_json(load_json(path), ambient);
}

GradedMorphism load_morphism(const std::string& path, const RingPtr& ambient) {
    return morphism_from_json(load_json(path), ambient);
}

std::string describe_generator(const Bidegree& bd) {
    std::string s = "Z";
    if (bd.q != 0) s += "(" + std::to_string(bd.q) + ")";
    if (bd.p != 0) s += "[" + std::to_string(bd.p) + "]";
    return s;
}

std::string describe_complex(const TateComplex& M) {
    if (M.size() == 0) return "0";
    std::string s;
    for (size_t k = 0; k < M.size(); ++k) {
        if (k) s += " (+) ";
        s += describe_generator(M.gen(k).bd);
    }
    if (!M.entries().empty())
        s += " with " + std::to_string(M.entries().size()) + " differential entries";
    return s;
}

void emit(const Json& j) { std::cout << canonical_text(j); }

void maybe_save(const std::string& out, const Json& j) {
    if (!out.empty()) save_json(out, j);
}

// ---- subcommand handlers; each returns the process exit code ----

int do_validate(const Globals& g, const std::string& object, const std::string& morphism) {
    RingPtr ring = resolve_ring(g);  // ring files are validated while loading
    std::vector<std::string> problems;
    std::string what = "ring";
    if (!object.empty()) {
        what = "complex";
        problems = validate_complex(load_complex(object, ring));
    } else if (!morphism.empty()) {
        what = "morphism";
        problems = validate_morphism(load_morphism(morphism, ring));
    }
    if (g.structured()) {
        Json j;
        j["valid"] = problems.empty();
        j["violations"] = problems;
        emit(j);
    } else {
        for (const auto& p : problems) std::cout << p << "\n";
        std::cout << what << (problems.empty() ? " is valid" : " is invalid") << "\n";
    }
    return problems.empty() ? 0 : 1;
}

int do_hom(const Globals& g, const std::string& source, const std::string& target, int degree) {
    RingPtr ring = resolve_ring(g);
    TateComplex S = load_complex(source, ring);
    TateComplex T = load_complex(target, ring);
    HomSpace hs = hom_space(S, T, degree);
    if (g.structured()) {
        Json j;
        j["degree"] = degree;
        j["dimension"] = hs.dim();
        j["closed"] = hs.closed_dim();
        j["boundaries"] = hs.boundary_dim();
        j["representatives"] = Json::array();
        for (const auto& r : hs.representatives())
            j["representatives"].push_back(morphism_to_json(r, false));
        emit(j);
        return 0;
    }
    std::cout << "dimension " << hs.dim() << " (closed " << hs.closed_dim() << ", boundaries "
              << hs.boundary_dim() << ")\n";
    if (hs.dim()) std::cout << "basis:\n";
    for (int i = 0; i < hs.dim(); ++i) {
        const GradedMorphism& r = hs.representatives()[i];
        std::cout << "  [" << i << "]";
        for (const auto& [key, v] : r.entries())
            std::cout << " " << r.source().gen(key.second).name << " -> "
                      << r.target().gen(key.first).name << ": " << v.str() << ";";
        std::cout << "\n";
    }
    return 0;
}

int do_minimize(const Globals& g, const std::string& object, const std::string& out) {
    RingPtr ring = resolve_ring(g);
    TateComplex M = load_complex(object, ring);
    Minimization m = minimize(M);
    maybe_save(out, complex_to_json(m.reduced));
    if (g.structured()) {
        Json j;
        j["before"] = M.size();
        j["after"] = m.reduced.size();
        j["reduced"] = complex_to_json(m.reduced, false);
        emit(j);
    } else {
        std::cout << "generators " << M.size() << " -> " << m.reduced.size() << "\n"
                  << describe_complex(m.reduced) << "\n";
    }
    return 0;
}

int do_cone(const Globals& g, const std::string& map, const std::string& out) {
    RingPtr ring = resolve_ring(g);
    ConeResult c = cone(load_morphism(map, ring));
    maybe_save(out, complex_to_json(c.cone));
    if (g.structured()) {
        Json j;
        j["cone"] = complex_to_json(c.cone, false);
        emit(j);
    } else {
        std::cout << describe_complex(c.cone) << "\n";
    }
    return 0;
}

int do_tensor(const Globals& g, const std::string& left, const std::string& right,
              const std::string& out) {
    RingPtr ring = resolve_ring(g);
    TateComplex T = tensor(load_complex(left, ring), load_complex(right, ring));
    maybe_save(out, complex_to_json(T));
    if (g.structured()) {
        Json j;
        j["tensor"] = complex_to_json(T, false);
        emit(j);
    } else {
        std::cout << describe_complex(T) << "\n";
    }
    return 0;
}

int do_slices(const Globals& g, const std::string& object) {
    RingPtr ring = resolve_ring(g);
    auto parts = slices(load_complex(object, ring));
    if (g.structured()) {
        Json j = Json::array();
        for (const auto& [n, s] : parts)
            j.push_back(Json{{"weight", n}, {"complex", complex_to_json(s, false)}});
        emit(Json{{"slices", j}});
        return 0;
    }
    std::string line = "[";
    for (size_t i = 0; i < parts.size(); ++i) {
        if (i) line += ", ";
        line += "(" + std::to_string(parts[i].first) + ", " + describe_complex(parts[i].second) +
                ")";
    }
    std::cout << line << "]\n";
    return 0;
}

int do_pi(const Globals& g, const std::string& object, int n, const std::string& part,
          const std::string& out) {
    RingPtr ring = resolve_ring(g);
    TateComplex M = load_complex(object, ring);
    TateComplex R;
    if (part == "ge")
        R = pi_ge(M, n);
    else if (part == "lt")
        R = pi_lt(M, n);
    else if (part == "slice")
        R = slice(M, n);
    else
        throw MalformedInput("--part must be ge, lt, or slice");
    maybe_save(out, complex_to_json(R));
    if (g.structured()) {
        Json j;
        j["part"] = part;
        j["n"] = n;
        j["complex"] = complex_to_json(R, false);
        emit(j);
    } else {
        std::cout << describe_complex(R) << "\n";
    }
    return 0;
}

int do_dual(const Globals& g, const std::string& object, int n, int shift_deg,
            const std::string& out) {
    RingPtr ring = resolve_ring(g);
    InternalHom ih = dualize_to(load_complex(object, ring), n, shift_deg);
    maybe_save(out, complex_to_json(ih.dual));
    if (g.structured()) {
        Json j;
        j["twist"] = ih.twist;
        j["shift"] = ih.shift_deg;
        j["dual"] = complex_to_json(ih.dual, false);
        j["evaluation"] = morphism_to_json(ih.evaluation, false);
        emit(j);
    } else {
        std::cout << describe_complex(ih.dual) << "\n";
    }
    return 0;
}

int do_check(const Globals& g, const std::string& suite, int objects, int max_generators,
             int max_twist, int probes, const std::string& out) {
    SuiteConfig cfg;
    cfg.ring_spec = g.ring_spec;
    cfg.window = parse_window(g.window);
    cfg.objects = objects;
    cfg.max_generators = max_generators;
    cfg.max_twist = max_twist;
    cfg.probes = probes;
    cfg.seed = g.seed;
    if (suite != "all") {
        std::istringstream in(suite);
        std::string token;
        while (std::getline(in, token, ','))
            if (!token.empty()) cfg.checks.push_back(token);
        if (cfg.checks.empty()) throw MalformedInput("--suite expects 'all' or check names");
    }
    Report rep = run_suite(cfg);
    maybe_save(out, rep.to_json(true));
    if (g.structured())
        emit(rep.to_json(true));
    else
        std::cout << rep.text();
    return rep.all_passed() ? 0 : 1;
}

int do_report(const Globals& g, const std::string& from, const std::string& witness) {
    if (from.empty() == witness.empty())
        throw MalformedInput("report needs exactly one of --from or --witness");
    if (!witness.empty()) {
        CheckRecord r = replay_check(load_json(witness));
        if (g.structured())
            emit(r.to_json(false));
        else
            std::cout << (r.skipped ? "SKIP" : r.pass ? "PASS" : "FAIL") << " " << r.check << ": "
                      << r.note << "\n";
        return r.pass ? 0 : 1;
    }
    Json rep = load_json(from);
    if (!rep.is_object() || !rep.contains("records"))
        throw MalformedInput("--from expects a structured check report");
    int replayed = 0, mismatched = 0;
    Json lines = Json::array();
    for (const auto& rec : rep.at("records")) {
        if (!rec.is_object() || !rec.contains("witness")) continue;
        ++replayed;
        CheckRecord again = replay_check(rec.at("witness"));
        bool recorded_pass = rec.value("pass", false);
        bool match = again.pass == recorded_pass;
        if (!match) ++mismatched;
        if (g.structured()) {
            lines.push_back(Json{{"check", again.check},
                                 {"instance", rec.value("instance", std::string{})},
                                 {"matches", match},
                                 {"note", again.note}});
        } else {
            std::cout << (match ? "reproduced" : "DIVERGED") << " " << again.check << " "
                      << rec.value("instance", std::string{}) << ": " << again.note << "\n";
        }
    }
    if (g.structured()) {
        emit(Json{{"replayed", replayed}, {"mismatched", mismatched}, {"results", lines}});
    } else {
        std::cout << "replayed " << replayed << " witnessed records, " << mismatched
                  << " diverged\n";
    }
    return mismatched == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"operations on twisted complexes over a bigraded coefficient ring"};
    app.require_subcommand(1);
    Globals g;
    app.add_option("--ring", g.ring_spec, "coefficient ring: file path or builtin:NAME");
    app.add_option("--window", g.window, "window override pmin,pmax,qmax (builtin rings)");
    app.add_option("--seed", g.seed, "seed for randomized corpora and probes");
    app.add_option("--format", g.format, "output format")
        ->check(CLI::IsMember({"text", "structured"}));

    std::string object, morphism, source, target, map, left, right, out, part = "ge";
    std::string suite = "all", from, witness;
    int degree = 0, n = 0, shift_deg = 0;
    int objects = 8, max_generators = 3, max_twist = 2, probes = 3;

    // Global flags may follow the subcommand, e.g. `check --suite all --seed 1`.
    auto add_sub = [&app](const char* name, const char* desc) {
        CLI::App* s = app.add_subcommand(name, desc);
        s->fallthrough();
        return s;
    };

    CLI::App* validate = add_sub("validate", "check a ring, complex, or morphism file");
    validate->add_option("--object", object, "complex file");
    validate->add_option("--morphism", morphism, "morphism file");

    CLI::App* hom = add_sub("hom", "maps between two complexes modulo homotopy");
    hom->add_option("--source", source, "source complex file")->required();
    hom->add_option("--target", target, "target complex file")->required();
    hom->add_option("--degree", degree, "map degree");

    CLI::App* mini = add_sub("minimize", "minimal model of a complex");
    mini->add_option("--object", object, "complex file")->required();
    mini->add_option("--out", out, "write the reduced complex here");

    CLI::App* conec = add_sub("cone", "cone of a chain map");
    conec->add_option("--map", map, "morphism file")->required();
    conec->add_option("--out", out, "write the cone here");

    CLI::App* tens = add_sub("tensor", "tensor product of two complexes");
    tens->add_option("--left", left, "left factor file")->required();
    tens->add_option("--right", right, "right factor file")->required();
    tens->add_option("--out", out, "write the product here");

    CLI::App* slc = add_sub("slices", "nonzero weight parts, minimized");
    slc->add_option("--object", object, "complex file")->required();

    CLI::App* pi = add_sub("pi", "weight truncation or single weight part");
    pi->add_option("--object", object, "complex file")->required();
    pi->add_option("--n", n, "weight cut")->required();
    pi->add_option("--part", part, "ge, lt, or slice");
    pi->add_option("--out", out, "write the result here");

    CLI::App* dual = add_sub("dual", "dual complex with its evaluation pairing");
    dual->add_option("--object", object, "complex file")->required();
    dual->add_option("--n", n, "twist of the pairing target")->required();
    dual->add_option("--shift", shift_deg, "shift of the pairing target");
    dual->add_option("--out", out, "write the dual complex here");

    CLI::App* check = add_sub("check", "run the verification suite");
    check->add_option("--suite", suite, "'all' or comma-separated check names");
    check->add_option("--objects", objects, "random corpus size");
    check->add_option("--max-generators", max_generators, "generator bound per random object");
    check->add_option("--max-twist", max_twist, "twist bound for random objects");
    check->add_option("--probes", probes, "representability probe budget");
    check->add_option("--out", out, "write the structured report here");

    CLI::App* report = add_sub("report", "replay recorded check witnesses");
    report->add_option("--from", from, "structured report file; replays every witness");
    report->add_option("--witness", witness, "single witness file");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);  // prints the diagnostic
        return 2;
    }

    try {
        if (*validate) return do_validate(g, object, morphism);
        if (*hom) return do_hom(g, source, target, degree);
        if (*mini) return do_minimize(g, object, out);
        if (*conec) return do_cone(g, map, out);
        if (*tens) return do_tensor(g, left, right, out);
        if (*slc) return do_slices(g, object);
        if (*pi) return do_pi(g, object, n, part, out);
        if (*dual) return do_dual(g, object, n, shift_deg, out);
        if (*check)
            return do_check(g, suite, objects, max_generators, max_twist, probes, out);
        if (*report) return do_report(g, from, witness);
    } catch (const MalformedInput& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const UnknownRing& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const NonEffectiveTwist& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const RingMismatch& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const ShapeMismatch& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const WindowOverflow& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        std::cerr << "failed: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
