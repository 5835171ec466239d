// stratamon: exact-arithmetic toolkit for affine subsemigroups of N^n.
// One command per process, JSON in / JSON out, deterministic output.

#include "CLI11.hpp"
#include "json.hpp"

#include "stratamon/block.hpp"
#include "stratamon/error.hpp"
#include "stratamon/extraction.hpp"
#include "stratamon/hilbert.hpp"
#include "stratamon/monoid.hpp"
#include "stratamon/oracle.hpp"
#include "stratamon/stratify.hpp"

#include <cstdint>
#include <fstream>
#include <iostream>
#include <limits>
#include <sstream>
#include <string>
#include <vector>

namespace {

using nlohmann::json;
using ojson = nlohmann::ordered_json;
using namespace stratamon;

ojson jint(const Int& v) {
    static const Int lo = std::numeric_limits<std::int64_t>::min();
    static const Int hi = std::numeric_limits<std::int64_t>::max();
    if (v >= lo && v <= hi) return v.convert_to<std::int64_t>();
    return v.str();
}

ojson jvec(const IntVec& v) {
    ojson a = ojson::array();
    for (const Int& e : v) a.push_back(jint(e));
    return a;
}

ojson jvecs(const std::vector<IntVec>& vs) {
    ojson a = ojson::array();
    for (const IntVec& v : vs) a.push_back(jvec(v));
    return a;
}

ojson jints(const std::vector<Int>& v) {
    ojson a = ojson::array();
    for (const Int& e : v) a.push_back(jint(e));
    return a;
}

json get_json(const std::string& text) {
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        throw input_error(std::string("invalid JSON: ") + e.what());
    }
}

Int pint(const json& j, const char* what) {
    if (!j.is_number_integer())
        throw input_error(std::string(what) + " must be an integer");
    return Int(j.get<std::int64_t>());
}

IntVec pvec(const json& j, const char* what) {
    if (!j.is_array())
        throw input_error(std::string(what) + " must be an array of integers");
    IntVec v;
    for (const auto& e : j) v.push_back(pint(e, what));
    return v;
}

std::vector<IntVec> pvecs(const json& j, const char* what) {
    if (!j.is_array())
        throw input_error(std::string(what) + " must be an array of integer vectors");
    std::vector<IntVec> vs;
    for (const auto& e : j) vs.push_back(pvec(e, what));
    return vs;
}

Monoid parse_monoid(const json& j) {
    if (!j.is_object() || !j.contains("kind"))
        throw input_error("monoid description must be an object with a \"kind\" field");
    std::string kind = j.at("kind").get<std::string>();
    if (kind == "congruence") {
        CongruenceSystem sys;
        sys.dim = (int)j.at("dim").get<std::int64_t>();
        if (!j.contains("rows") || !j.at("rows").is_array())
            throw input_error("congruence monoid needs a \"rows\" array");
        for (const auto& r : j.at("rows")) {
            CongruenceRow row;
            row.coeffs = pvec(r.at("coeffs"), "row coefficient");
            row.modulus = pint(r.at("mod"), "row modulus");
            sys.rows.push_back(std::move(row));
        }
        return Monoid::full(std::move(sys));
    }
    if (kind == "generators") {
        std::vector<IntVec> vecs = pvecs(j.at("vectors"), "generator");
        if (vecs.empty()) throw input_error("generator list must be nonempty");
        GeneratedSemigroup g;
        g.dim = (int)vecs.front().size();
        g.generators = std::move(vecs);
        return Monoid::generated(std::move(g));
    }
    if (kind == "elliott") {
        Int a = pint(j.at("a"), "a");
        Int b = pint(j.at("b"), "b");
        Int c = pint(j.at("c"), "c");
        return elliott_monoid(a, b, c).monoid;
    }
    throw input_error("unknown monoid kind: " + kind);
}

GroupSpec parse_group(const json& j) {
    if (!j.is_object())
        throw input_error("group description must be an object");
    GroupSpec g;
    if (j.contains("moduli")) g.torsion_moduli = pvec(j.at("moduli"), "modulus");
    if (j.contains("free_rank")) g.free_rank = (int)j.at("free_rank").get<std::int64_t>();
    g.elements = pvecs(j.at("elements"), "group element");
    return g;
}

ojson rows_json(const CongruenceSystem& sys) {
    ojson rows = ojson::array();
    for (const auto& r : sys.rows)
        rows.push_back({{"coeffs", jvec(r.coeffs)}, {"mod", jint(r.modulus)}});
    return rows;
}

ojson monoid_json(const Monoid& m) {
    if (m.kind() == MonoidKind::full)
        return {{"kind", "congruence"}, {"dim", m.dim()}, {"rows", rows_json(m.system())}};
    return {{"kind", "generators"}, {"dim", m.dim()}, {"vectors", jvecs(m.generators().generators)}};
}

ojson witness_json(const FailureWitness& w) {
    return {{"atoms", jvecs(w.atoms)},
            {"left", jints(w.left)},
            {"right", jints(w.right)},
            {"value", jvec(w.value)}};
}

ojson strata_json(const Stratification& s) {
    ojson arr = ojson::array();
    for (const Stratum& st : s.strata)
        arr.push_back({{"atoms", jvecs(st.atoms)},
                       {"independent", st.independent},
                       {"base_certified", st.base_certified},
                       {"s3_certified", st.s3_certified}});
    ojson out;
    out["strata"] = arr;
    out["complete"] = s.complete;
    out["failed_stage"] = s.failed_stage ? ojson(*s.failed_stage) : ojson(nullptr);
    out["witness"] = s.witness ? witness_json(*s.witness) : ojson(nullptr);
    return out;
}

ojson apery_json(const AperySet& ap) {
    return {{"base", jvecs(ap.base)},
            {"elements", jvecs(ap.elements)},
            {"count", (std::int64_t)ap.elements.size()},
            {"complete", ap.complete},
            {"box", jvec(ap.box)}};
}

ojson param_json(const Parametrization& p) {
    ojson syms = ojson::array();
    for (const Symbol& s : p.symbols)
        syms.push_back({{"atom", jvec(s.atom)},
                        {"name", s.name},
                        {"stratum", s.stratum},
                        {"free", s.free}});
    ojson cons = ojson::array();
    for (const Constraint& c : p.constraints) {
        ojson co = ojson::object();
        for (size_t i = 0; i < p.symbols.size() && i < c.coeffs.size(); ++i)
            if (c.coeffs[i] != 0) co[p.symbols[i].name] = jint(c.coeffs[i]);
        cons.push_back({{"coeffs", co},
                        {"strict_lt", jint(c.strict_lt)},
                        {"le", jint(c.strict_lt - 1)}});
    }
    return {{"symbols", syms}, {"constraints", cons}};
}

ojson bij_json(const BijectionReport& r) {
    ojson mult = ojson::array();
    for (size_t i = 0; i < r.multiple.size(); ++i)
        mult.push_back({{"value", jvec(r.multiple[i])},
                        {"first", jints(r.multiple_a[i])},
                        {"second", jints(r.multiple_b[i])}});
    return {{"box", jint(r.box)},
            {"members", jint(r.members)},
            {"tuples", jint(r.tuples)},
            {"bijection", r.bijection},
            {"missing", jvecs(r.missing)},
            {"multiple", mult}};
}

struct Options {
    std::string inline_json;
    std::string file_path;
    std::string format = "json";
    std::string base_json;
    std::string element_json;
    std::string x_json;
    std::string y_json;
    std::string op;
    std::string target;
    long long box = 40;
    long long max_den = 60;
};

std::string load_input(const Options& o) {
    if (!o.inline_json.empty() && !o.file_path.empty())
        throw input_error("pass exactly one of --inline and --file");
    if (!o.inline_json.empty()) return o.inline_json;
    if (o.file_path.empty())
        throw input_error("an input is required; pass --inline JSON or --file PATH");
    std::ifstream in(o.file_path);
    if (!in) throw input_error("cannot read file: " + o.file_path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

Monoid input_monoid(const Options& o) { return parse_monoid(get_json(load_input(o))); }

Int checked_box(const Options& o) {
    if (o.box < 1) throw input_error("box bound must be >= 1");
    return Int(o.box);
}

Stratification complete_stratification(const Monoid& m) {
    Stratification s = stratify(m);
    if (!s.complete)
        throw input_error("stratification is incomplete on this instance; "
                          "no layered representation is defined");
    return s;
}

ojson do_hilbert(const Options& o) {
    HilbertBasis hb = hilbert_basis(input_monoid(o));
    return {{"atoms", jvecs(hb.atoms)}, {"count", (std::int64_t)hb.atoms.size()}};
}

ojson do_apery(const Options& o) {
    Monoid m = input_monoid(o);
    std::vector<IntVec> base = pvecs(get_json(o.base_json), "base element");
    return apery_json(apery(m, base, checked_box(o)));
}

ojson do_lambda(const Options& o) {
    Monoid m = input_monoid(o);
    IntVec x = pvec(get_json(o.x_json), "x");
    IntVec y = pvec(get_json(o.y_json), "y");
    auto g = extraction_grade(m, x, y);
    return {{"x", jvec(x)},
            {"y", jvec(y)},
            {"lambda", g ? ojson(rat_string(*g)) : ojson(nullptr)}};
}

ojson do_classify(const Options& o) {
    Monoid m = input_monoid(o);
    ojson arr = ojson::array();
    for (const IntVec& a : hilbert_basis(m).atoms) {
        AtomClassification c = classify_atom(m, a);
        arr.push_back({{"atom", jvec(c.atom)},
                       {"extremal", c.extremal},
                       {"pure", c.pure},
                       {"strong", c.strong}});
    }
    return {{"atoms", arr}};
}

ojson do_coords(const Options& o) {
    IntVec x = pvec(get_json(o.element_json), "element");
    std::vector<IntVec> base = pvecs(get_json(o.base_json), "base element");
    RatVec c = coordinates(x, base);
    ojson cj = ojson::array();
    for (const Rat& r : c) cj.push_back(rat_string(r));
    return {{"element", jvec(x)},
            {"base", jvecs(base)},
            {"coordinates", cj},
            {"in_D", in_D(x, base)},
            {"mu", jint(mu(x, base))}};
}

ojson do_stratify(const Options& o) { return strata_json(stratify(input_monoid(o))); }

ojson do_decompose(const Options& o) {
    Monoid m = input_monoid(o);
    IntVec x = pvec(get_json(o.element_json), "element");
    Stratification s = complete_stratification(m);
    Representation r = decompose(m, s, x);
    ojson strata = ojson::array();
    ojson coeffs = ojson::array();
    for (size_t i = 0; i < s.strata.size(); ++i) {
        strata.push_back(jvecs(s.strata[i].atoms));
        coeffs.push_back(jints(r.coeffs[i]));
    }
    return {{"element", jvec(x)}, {"strata", strata}, {"coeffs", coeffs}};
}

ojson do_parametrize(const Options& o) {
    Monoid m = input_monoid(o);
    return param_json(parametrize(m, complete_stratification(m)));
}

ojson do_verify(const Options& o) {
    Monoid m = input_monoid(o);
    Parametrization p = parametrize(m, complete_stratification(m));
    return bij_json(verify_bijection(m, p, checked_box(o)));
}

ojson do_block(const Options& o) {
    GroupSpec g = parse_group(get_json(load_input(o)));
    Monoid m = block_to_congruence(g);
    ojson out;
    out["dim"] = m.dim();
    out["rows"] = rows_json(m.system());
    out["atoms"] = jvecs(hilbert_basis(m).atoms);
    if (!o.element_json.empty()) {
        IntVec a = pvec(get_json(o.element_json), "element");
        out["element"] = jvec(a);
        out["elementary"] = is_elementary(g, a);
    }
    return out;
}

ojson do_oracle(const Options& o) {
    ojson out;
    out["op"] = o.op;
    if (o.op == "enum") {
        Monoid m = input_monoid(o);
        auto members = oracle::enum_monoid(m, checked_box(o));
        out["box"] = o.box;
        out["members"] = jvecs(members);
        out["count"] = (std::int64_t)members.size();
    } else if (o.op == "atoms") {
        Monoid m = input_monoid(o);
        auto atoms = oracle::brute_atoms(m, checked_box(o));
        out["box"] = o.box;
        out["atoms"] = jvecs(atoms);
        out["count"] = (std::int64_t)atoms.size();
    } else if (o.op == "apery") {
        Monoid m = input_monoid(o);
        if (o.base_json.empty()) throw input_error("oracle apery needs --base");
        std::vector<IntVec> base = pvecs(get_json(o.base_json), "base element");
        IntVec box(m.dim(), checked_box(o));
        auto elems = oracle::brute_apery(m, base, box);
        out["base"] = jvecs(base);
        out["box"] = o.box;
        out["elements"] = jvecs(elems);
        out["count"] = (std::int64_t)elems.size();
    } else if (o.op == "lambda") {
        Monoid m = input_monoid(o);
        if (o.x_json.empty() || o.y_json.empty())
            throw input_error("oracle lambda needs --x and --y");
        IntVec x = pvec(get_json(o.x_json), "x");
        IntVec y = pvec(get_json(o.y_json), "y");
        if (o.max_den < 1) throw input_error("--max-den must be >= 1");
        Rat g = oracle::brute_lambda(m, x, y, Int(o.max_den));
        out["x"] = jvec(x);
        out["y"] = jvec(y);
        out["max_den"] = o.max_den;
        out["lambda"] = rat_string(g);
    } else if (o.op == "reps") {
        Monoid m = input_monoid(o);
        if (o.element_json.empty()) throw input_error("oracle reps needs --element");
        IntVec x = pvec(get_json(o.element_json), "element");
        Stratification s = complete_stratification(m);
        std::vector<std::vector<IntVec>> strata;
        for (const Stratum& st : s.strata) strata.push_back(st.atoms);
        auto reps = oracle::brute_representations(m, strata, x);
        out["element"] = jvec(x);
        ojson sj = ojson::array();
        for (const auto& st : strata) sj.push_back(jvecs(st));
        out["strata"] = sj;
        ojson rj = ojson::array();
        for (const auto& r : reps) {
            ojson one = ojson::array();
            for (const auto& c : r.coeffs) one.push_back(jints(c));
            rj.push_back(one);
        }
        out["count"] = (std::int64_t)reps.size();
        out["representations"] = rj;
    } else if (o.op == "rootclosed") {
        Monoid m = input_monoid(o);
        RootClosedReport r = is_root_closed(m, checked_box(o));
        out["box"] = o.box;
        out["root_closed"] = r.root_closed;
        out["witness"] = r.witness ? jvec(*r.witness) : ojson(nullptr);
    } else {
        throw input_error("unknown oracle op: " + o.op);
    }
    return out;
}

ojson do_reproduce(const Options& o) {
    if (o.target == "elliott-mod7") {
        EmbeddedModel em = elliott_monoid(1, 2, 7);
        const Monoid& m = em.monoid;
        ojson out;
        out["target"] = o.target;
        out["monoid"] = monoid_json(m);
        out["embedding"] = em.embedding;
        out["atoms"] = jvecs(hilbert_basis(m).atoms);
        out["apery"] = apery_json(apery(m, {IntVec{7, 0}, IntVec{0, 7}}, 40));
        Stratification s = stratify(m);
        ojson sj = strata_json(s);
        out["strata"] = sj["strata"];
        out["complete"] = sj["complete"];
        Parametrization p = parametrize(m, s);
        out["parametrization"] = param_json(p);
        out["verify"] = bij_json(verify_bijection(m, p, 40));
        return out;
    }
    if (o.target == "mod11-counterexample") {
        CongruenceSystem sys;
        sys.dim = 3;
        sys.rows.push_back(CongruenceRow{IntVec{4, 5, 8}, 11});
        Monoid m = Monoid::full(std::move(sys));
        HilbertBasis hb = hilbert_basis(m);
        ojson out;
        out["target"] = o.target;
        out["monoid"] = monoid_json(m);
        out["atoms"] = jvecs(hb.atoms);
        out["count"] = (std::int64_t)hb.atoms.size();
        ojson sj = strata_json(stratify(m));
        out["strata"] = sj["strata"];
        out["complete"] = sj["complete"];
        out["failed_stage"] = sj["failed_stage"];
        out["witness"] = sj["witness"];
        return out;
    }
    throw input_error("unknown reproduce target: " + o.target);
}

void emit(const ojson& j, const std::string& format) {
    if (format == "pretty")
        std::cout << j.dump(2) << std::endl;
    else
        std::cout << j.dump() << std::endl;
}

int emit_error(const std::string& kind, const std::string& message,
               const std::string& format, int code) {
    ojson body = {{"error", {{"kind", kind}, {"message", message}}}};
    emit(body, format);
    return code;
}

}  // namespace

int main(int argc, char** argv) {
    Options o;
    CLI::App app{"exact-arithmetic toolkit for affine subsemigroups of N^n"};
    app.require_subcommand(1);

    auto add_source = [&](CLI::App* s) {
        s->add_option("--inline", o.inline_json, "monoid JSON as a literal argument");
        s->add_option("--file", o.file_path, "path to a file holding the monoid JSON");
    };
    auto add_format = [&](CLI::App* s) {
        s->add_option("--format", o.format, "output format")
            ->check(CLI::IsMember({"json", "pretty"}));
    };
    auto add_box = [&](CLI::App* s) {
        s->add_option("--box", o.box, "enumeration box bound (default 40)");
    };

    ojson result;
    bool have_result = false;
    auto hook = [&](ojson (*fn)(const Options&)) {
        return [&o, &result, &have_result, fn] {
            result = fn(o);
            have_result = true;
        };
    };

    CLI::App* c;
    c = app.add_subcommand("hilbert", "minimal generating set (atoms)");
    add_source(c), add_format(c);
    c->callback(hook(&do_hilbert));

    c = app.add_subcommand("apery", "Apery set with respect to a base");
    add_source(c), add_format(c), add_box(c);
    c->add_option("--base", o.base_json, "JSON array of base vectors")->required();
    c->callback(hook(&do_apery));

    c = app.add_subcommand("lambda", "extraction grade of x from y");
    add_source(c), add_format(c);
    c->add_option("--x", o.x_json, "extracted element (JSON vector)")->required();
    c->add_option("--y", o.y_json, "host element (JSON vector)")->required();
    c->callback(hook(&do_lambda));

    c = app.add_subcommand("classify", "extremal/pure/strong flags per atom");
    add_source(c), add_format(c);
    c->callback(hook(&do_classify));

    c = app.add_subcommand("coords", "rational coordinates of an element in a base");
    add_format(c);
    c->add_option("--element", o.element_json, "element (JSON vector)")->required();
    c->add_option("--base", o.base_json, "JSON array of base vectors")->required();
    c->callback(hook(&do_coords));

    c = app.add_subcommand("stratify", "layer the atom set into strata");
    add_source(c), add_format(c);
    c->callback(hook(&do_stratify));

    c = app.add_subcommand("decompose", "layered representation of an element");
    add_source(c), add_format(c);
    c->add_option("--element", o.element_json, "element (JSON vector)")->required();
    c->callback(hook(&do_decompose));

    c = app.add_subcommand("parametrize", "closed-form coefficient constraints");
    add_source(c), add_format(c);
    c->callback(hook(&do_parametrize));

    c = app.add_subcommand("verify", "check the coefficient map is a bijection in a box");
    add_source(c), add_format(c), add_box(c);
    c->callback(hook(&do_verify));

    c = app.add_subcommand("block", "block monoid of a finite subset of an abelian group");
    add_source(c), add_format(c);
    c->add_option("--element", o.element_json, "atom to test for elementarity (JSON vector)");
    c->callback(hook(&do_block));

    c = app.add_subcommand("oracle", "definition-chasing reference computations (debugging)");
    add_source(c), add_format(c), add_box(c);
    c->add_option("--op", o.op, "enum|atoms|apery|lambda|reps|rootclosed")->required();
    c->add_option("--base", o.base_json, "JSON array of base vectors");
    c->add_option("--x", o.x_json, "extracted element (JSON vector)");
    c->add_option("--y", o.y_json, "host element (JSON vector)");
    c->add_option("--element", o.element_json, "element (JSON vector)");
    c->add_option("--max-den", o.max_den, "denominator cap for the lambda scan (default 60)");
    c->callback(hook(&do_oracle));

    c = app.add_subcommand("reproduce", "end-to-end worked examples");
    add_format(c);
    c->add_option("target", o.target, "elliott-mod7 | mod11-counterexample")
        ->required()
        ->check(CLI::IsMember({"elliott-mod7", "mod11-counterexample"}));
    c->callback(hook(&do_reproduce));

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        return emit_error("input", e.what(), o.format, 1);
    } catch (const input_error& e) {
        return emit_error("input", e.what(), o.format, 1);
    } catch (const unsupported_error& e) {
        return emit_error("unsupported", e.what(), o.format, 2);
    } catch (const internal_error& e) {
        return emit_error("internal", e.what(), o.format, 3);
    } catch (const json::exception& e) {
        return emit_error("input", e.what(), o.format, 1);
    } catch (const std::exception& e) {
        return emit_error("internal", e.what(), o.format, 3);
    }

    if (have_result) emit(result, o.format);
    return 0;
}
