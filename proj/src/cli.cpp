#include "tubealg/cli.hpp"

#include <chrono>
#include <cstdlib>
#include <functional>
#include <limits>
#include <map>
#include <optional>

#include "CLI11.hpp"
#include "tubealg/annular.hpp"
#include "tubealg/cutdown.hpp"
#include "tubealg/io.hpp"

namespace tubealg {

namespace {

struct Options {
    std::string group, cocycle, bh, rep;
    std::uint64_t seed = 0;
    std::size_t max_exhaustive = 24;
    std::optional<std::size_t> cls;
};

class Report {
public:
    explicit Report(std::string command) { j_["command"] = std::move(command); }

    Json& root() { return j_; }
    void input(const std::string& name, const std::string& path) {
        j_["inputs"][name] = {{"path", path}, {"fnv1a", fnv1a_hex(read_file(path))}};
    }
    bool check(const std::string& name, const CheckResult& r) {
        j_["checks"].push_back(check_to_json(name, r));
        if (!r.passed) ok_ = false;
        return r.passed;
    }
    Json& result() { return j_["result"]; }
    bool ok() const { return ok_; }

private:
    Json j_;
    bool ok_ = true;
};

std::size_t env_max_exhaustive() {
    if (const char* v = std::getenv("TUBEALG_MAX_EXHAUSTIVE")) {
        char* end = nullptr;
        const unsigned long long x = std::strtoull(v, &end, 10);
        if (end != v && *end == '\0') return static_cast<std::size_t>(x);
    }
    return 24;
}

void need(const std::string& value, const char* flag) {
    if (value.empty()) throw InputError(std::string("missing ") + flag);
}

GroupTable load_group(const Options& o, Report& r) {
    need(o.group, "--group");
    r.input("group", o.group);
    return group_from_json(load_json_file(o.group));
}

Cocycle3 load_cocycle(const Options& o, Report& r, std::size_t n) {
    need(o.cocycle, "--cocycle");
    r.input("cocycle", o.cocycle);
    return cocycle_from_json(load_json_file(o.cocycle), n);
}

BHSetup load_bh(const Options& o, Report& r) {
    need(o.bh, "--bh");
    r.input("bh", o.bh);
    const std::filesystem::path p(o.bh);
    return bh_from_json(load_json_file(p), p.parent_path());
}

AlgebraCheckOptions algebra_options(const Options& o, std::size_t group_order) {
    AlgebraCheckOptions a;
    a.exhaustive_max_dimension = group_order <= o.max_exhaustive ? std::numeric_limits<std::size_t>::max() : 0;
    a.seed = o.seed;
    return a;
}

void algebra_checks(Report& r, const MonomialAlgebra& alg, const AlgebraCheckOptions& opts) {
    r.check("associativity", check_associativity(alg, opts));
    r.check("star", check_star(alg));
    r.check("trace-symmetry", check_trace(alg));
    r.check("gram-identity", check_gram(alg));
    r.check("unit", check_unit(alg));
}

void iso_checks(Report& r, const TubeLikeAlgebra& alg) {
    const auto iso = verify_block_isomorphism(alg);
    r.check("star-isomorphism[opposite]", iso.opposite);
    // the conjugate convention is reported, not required
    r.root()["conventions"]["conjugate"] = check_to_json("star-isomorphism[conjugate]", iso.conjugate);
    if (!iso.opposite.passed && iso.conjugate.passed) r.check("star-isomorphism[conjugate]", iso.conjugate);
    r.result()["convention"] = iso.selected ? to_string(*iso.selected) : "none";
}

Json class_json(const ClassData& cd, const SimpleCount& sc) {
    Json out = Json::array();
    for (std::size_t c = 0; c < cd.class_count(); ++c)
        out.push_back({{"class", c},
                       {"representative", cd.rep[c]},
                       {"size", cd.classes[c].size()},
                       {"centralizer_order", cd.centralizers[c].size()},
                       {"simples", sc.per_class[c]}});
    return out;
}

Json decomposition_json(const Decomposition& d) {
    Json blocks = Json::array();
    for (const auto& b : d.blocks) blocks.push_back({{"dimension", b.dimension}, {"multiplicity", b.multiplicity}});
    return {{"count", d.blocks.size()}, {"blocks", blocks}, {"seed", d.seed}, {"attempts", d.attempts}};
}

// First triple where two cocycle tables differ.
CheckResult same_table(const Cocycle3& a, const Cocycle3& b, const char* relation) {
    const std::size_t n = a.n;
    for (std::size_t i = 0; i < a.values.size(); ++i)
        if (a.values[i] != b.values[i]) {
            const auto x = static_cast<std::int64_t>(i / (n * n)), y = static_cast<std::int64_t>((i / n) % n),
                       z = static_cast<std::int64_t>(i % n);
            return CheckResult::fail(relation, {x, y, z});
        }
    return CheckResult::pass(a.values.size());
}

CheckResult normalized_check(const GroupTable& g, const Cocycle3& w3) {
    if (is_normalized(g, w3)) return CheckResult::pass(1);
    const std::size_t n = g.order();
    for (Elem a = 0; a < n; ++a)
        for (Elem b = 0; b < n; ++b)
            for (Elem c = 0; c < n; ++c)
                if ((a == 0 || b == 0 || c == 0) && !w3(a, b, c).is_one())
                    return CheckResult::fail("normalized", {a, b, c});
    return CheckResult::fail("normalized", {});
}

CheckResult equal_counts(std::size_t exact, std::size_t numeric) {
    if (exact == numeric) return CheckResult::pass(1);
    return CheckResult::fail("count-mismatch", {static_cast<std::int64_t>(exact), static_cast<std::int64_t>(numeric)});
}

// Validates and gauge fixes a BH setup. Returns nullopt after a failed check.
std::optional<BHSetup> prepared_bh(const Options& o, Report& r, std::ostream& err) {
    BHSetup s = load_bh(o, r);
    if (!r.check("bh-setup", validate_bh_setup(s))) return std::nullopt;
    const auto fix = gauge_fix_bh(s);
    const bool changed = !(fix.omega == s.omega);
    if (changed) err << "tubealg: gauge fixing the cocycle before building\n";
    r.result()["gauge_fixed"] = changed;
    s.omega = fix.omega;
    return s;
}

int cmd_verify_group(const Options& o, Report& r) {
    need(o.group, "--group");
    r.input("group", o.group);
    const Json j = load_json_file(o.group);
    if (j.is_object() && j.value("type", "") == "table") {
        const auto raw = raw_table_from_json(j);
        if (!r.check("group-axioms", GroupTable::validate(raw))) return 1;
        r.result()["order"] = raw.size();
        return 0;
    }
    const auto g = group_from_json(j);
    r.check("group-axioms", CheckResult::pass(g.order()));
    r.result()["order"] = g.order();
    return 0;
}

int cmd_verify_cocycle(const Options& o, Report& r) {
    const auto g = load_group(o, r);
    const auto w3 = load_cocycle(o, r, g.order());
    r.check("cocycle", cocycle3_check(g, w3));
    r.result()["normalized"] = is_normalized(g, w3);
    r.result()["modulus"] = w3.modulus();
    return r.ok() ? 0 : 1;
}

int cmd_normalize(const Options& o, Report& r) {
    const auto g = load_group(o, r);
    const auto w3 = load_cocycle(o, r, g.order());
    if (!r.check("cocycle", cocycle3_check(g, w3))) return 1;
    const auto phi = normalizing_cochain(g, w3);
    const auto out = normalize3(g, w3);
    r.check("normalized", normalized_check(g, out));
    r.check("cohomologous", same_table(pointwise_quotient(out, w3), coboundary2(g, phi), "coboundary"));
    r.result()["cocycle"] = cocycle_to_json(out);
    r.result()["phi"] = cochain_to_json(phi);
    return r.ok() ? 0 : 1;
}

int cmd_gauge_fix(const Options& o, Report& r) {
    BHSetup s = load_bh(o, r);
    if (!r.check("bh-setup", validate_bh_setup(s))) return 1;
    const auto fix = gauge_fix_bh(s);
    const auto& g = s.group;
    r.check("gl-relations", gl_relations_check(g, s.h, s.k, fix.omega));
    r.check("cocycle", cocycle3_check(g, fix.omega));
    BHSetup fixed = s;
    fixed.omega = fix.omega;
    r.check("bh-setup-after", validate_bh_setup(fixed));
    r.check("normalized", normalized_check(g, fix.omega));
    r.check("coboundary", same_table(pointwise_quotient(fix.omega, s.omega), coboundary2(g, fix.phi), "coboundary"));
    r.result()["cocycle"] = cocycle_to_json(fix.omega);
    r.result()["phi"] = cochain_to_json(fix.phi);
    r.result()["reps_disjoint"] = fix.reps_disjoint;
    return r.ok() ? 0 : 1;
}

int cmd_tube(const std::string& action, const Options& o, Report& r, std::ostream& err) {
    const auto g = load_group(o, r);
    const auto w3 = load_cocycle(o, r, g.order());
    if (!r.check("cocycle", cocycle3_check(g, w3))) return 1;
    TubeAlgebra t(g, w3);
    r.result()["dimension"] = t.dimension();
    if (action == "build") {
        r.result()["modulus"] = structure_modulus(t);
        r.result()["structure"] = structure_dump(t);
    } else if (action == "check") {
        algebra_checks(r, t, algebra_options(o, g.order()));
        iso_checks(r, t);
    } else {
        const auto sc = simple_count(t);
        const auto dec = decompose(t, regular_representation(t), o.seed);
        r.result()["total"] = sc.total;
        r.result()["classes"] = class_json(conjugacy_data(g), sc);
        r.result()["decomposition"] = decomposition_json(dec);
        r.check("counts-agree", equal_counts(sc.total, dec.blocks.size()));
        err << "tubealg: " << sc.total << " simple tube modules\n";
    }
    return r.ok() ? 0 : 1;
}

int cmd_bh(const std::string& action, const Options& o, Report& r, std::ostream& err) {
    const auto s = prepared_bh(o, r, err);
    if (!s) return 1;
    AnnularAlgebra a(*s);
    r.result()["dimension"] = a.dimension();
    if (action == "build") {
        r.result()["cocycle"] = cocycle_to_json(s->omega);
        r.result()["modulus"] = structure_modulus(a);
        r.result()["structure"] = structure_dump(a);
    } else if (action == "check") {
        algebra_checks(r, a, algebra_options(o, s->group.order()));
        iso_checks(r, a);
        const auto cd = conjugacy_data(s->group);
        std::size_t audit = 0;
        for (std::size_t c = 0; c < cd.class_count(); ++c) {
            const std::size_t sc = s->h.size() * cd.classes[c].size();
            audit += sc * sc * cd.centralizers[c].size();
        }
        r.result()["block_audit"] = audit;
        r.check("block-audit", equal_counts(a.dimension(), audit));
        BoxAlgebra b(*s);
        r.check("box-associativity", check_associativity(b, algebra_options(o, s->group.order())));
        r.check("box-star", check_star(b));
        r.check("box-unitarity", check_box_unitarity(b));
        for (Elem g = 0; g < s->group.order(); ++g)
            r.check("end-xg-cocycle[" + std::to_string(g) + "]", cocycle2_check(s->group, end_xg_twist(*s, g)));
    } else {
        const auto sc = simple_count(a);
        const auto dec = decompose(a, regular_representation(a), o.seed);
        const auto cut = tube_cutdown(*s, o.seed);
        r.result()["total"] = sc.total;
        r.result()["classes"] = class_json(conjugacy_data(s->group), sc);
        r.result()["decomposition"] = decomposition_json(dec);
        r.result()["cutdown"] = {{"representatives", cut.representatives},
                                 {"dimension_table", cut.dimension_table},
                                 {"corner_dimension", cut.corner_dimension},
                                 {"simples", cut.corner_simple_count}};
        r.check("counts-agree", equal_counts(sc.total, dec.blocks.size()));
        r.check("cutdown", cut.check);
        r.check("cutdown-counts-agree", equal_counts(sc.total, cut.corner_simple_count));
        err << "tubealg: " << sc.total << " simple annular modules\n";
    }
    return r.ok() ? 0 : 1;
}

int cmd_rep(const std::string& action, const Options& o, Report& r, std::ostream& err) {
    std::unique_ptr<TubeLikeAlgebra> alg;
    if (!o.bh.empty()) {
        const auto s = prepared_bh(o, r, err);
        if (!s) return 1;
        alg = std::make_unique<AnnularAlgebra>(*s);
    } else {
        const auto g = load_group(o, r);
        const auto w3 = load_cocycle(o, r, g.order());
        if (!r.check("cocycle", cocycle3_check(g, w3))) return 1;
        alg = std::make_unique<TubeAlgebra>(g, w3);
    }
    const auto bp = block_presentation(*alg);
    if (action == "induce") {
        if (!o.cls) throw InputError("missing --class");
        const std::size_t c = *o.cls;
        if (c >= bp.classes.class_count()) throw InputError("class index out of range", {static_cast<std::int64_t>(c)});
        const TwistedGroupAlgebra small(alg->group(), bp.blocks->blocks()[c].twist);
        need(o.rep, "--rep");
        r.input("rep", o.rep);
        const auto pi = rep_from_json(load_json_file(o.rep), small);
        if (!r.check("input-representation", check_representation(small, pi))) return 1;
        const auto big = induce(*alg, bp, c, pi);
        r.check("induced-representation", check_representation(*alg, big));
        r.result()["class"] = c;
        r.result()["representation"] = rep_to_json(big, *alg);
        return r.ok() ? 0 : 1;
    }
    Representation rep;
    if (o.rep.empty()) {
        rep = regular_representation(*alg);
        r.result()["source"] = "regular";
    } else {
        r.input("rep", o.rep);
        rep = rep_from_json(load_json_file(o.rep), *alg);
        if (!r.check("input-representation", check_representation(*alg, rep))) return 1;
    }
    const auto dec = decompose(*alg, rep, o.seed);
    Json blocks = Json::array();
    for (const auto& b : dec.blocks) {
        const auto sup = support_decompose(*alg, bp, b.rep);
        Json support = Json::array();
        for (const auto& p : sup.parts)
            if (p.rep.dimension > 0) support.push_back(p.cls);
        blocks.push_back({{"dimension", b.dimension}, {"multiplicity", b.multiplicity}, {"classes", support}});
    }
    r.result()["blocks"] = blocks;
    r.result()["seed"] = dec.seed;
    r.result()["attempts"] = dec.attempts;
    return 0;
}

}  // namespace

int cli_dispatch(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    const auto start = std::chrono::steady_clock::now();
    Options o;
    o.max_exhaustive = env_max_exhaustive();

    CLI::App app{"tube algebras of pointed fusion categories and Bisch-Haagerup annular algebras", "tubealg"};
    app.require_subcommand(1);
    std::string command;
    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--group", o.group, "group JSON file");
        sub->add_option("--cocycle", o.cocycle, "cocycle JSON file");
        sub->add_option("--bh", o.bh, "BH setup JSON file");
        sub->add_option("--rep", o.rep, "representation JSON file");
        sub->add_option("--seed", o.seed, "random seed");
        sub->add_option("--max-exhaustive", o.max_exhaustive, "largest group order checked exhaustively");
        sub->add_option("--class", o.cls, "conjugacy class index");
    };
    auto leaf = [&](CLI::App* parent, const std::string& name, const std::string& desc, const std::string& full) {
        auto* sub = parent->add_subcommand(name, desc);
        add_common(sub);
        sub->callback([&command, full] { command = full; });
        return sub;
    };
    leaf(&app, "verify-group", "check the group axioms of a table", "verify-group");
    leaf(&app, "verify-cocycle", "check the 3-cocycle law", "verify-cocycle");
    leaf(&app, "normalize", "normalize a 3-cocycle", "normalize");
    leaf(&app, "gauge-fix", "gauge fix a BH setup", "gauge-fix");
    for (const char* fam : {"tube", "bh"}) {
        auto* f = app.add_subcommand(fam, std::string(fam) + " algebra commands");
        f->require_subcommand(1);
        for (const char* a : {"build", "check", "simples"}) leaf(f, a, a, std::string(fam) + " " + a);
    }
    auto* rep = app.add_subcommand("rep", "representation commands");
    rep->require_subcommand(1);
    leaf(rep, "induce", "induce from a class algebra", "rep induce");
    leaf(rep, "decompose", "split into irreducible blocks", "rep decompose");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        err << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "tubealg: " << e.what() << "\n";
        Json j;
        j["error"] = {{"kind", "usage"}, {"message", e.what()}};
        out << j.dump(2) << "\n";
        return 2;
    }

    Report r(command);
    r.root()["seed"] = o.seed;
    r.root()["max_exhaustive"] = o.max_exhaustive;
    int code = 0;
    try {
        if (command == "verify-group") code = cmd_verify_group(o, r);
        else if (command == "verify-cocycle") code = cmd_verify_cocycle(o, r);
        else if (command == "normalize") code = cmd_normalize(o, r);
        else if (command == "gauge-fix") code = cmd_gauge_fix(o, r);
        else if (command.rfind("tube ", 0) == 0) code = cmd_tube(command.substr(5), o, r, err);
        else if (command.rfind("bh ", 0) == 0) code = cmd_bh(command.substr(3), o, r, err);
        else code = cmd_rep(command.substr(4), o, r, err);
    } catch (const InputError& e) {
        err << "tubealg: " << e.what() << "\n";
        Json j;
        j["command"] = command;
        j["error"] = {{"kind", "input"}, {"message", e.what()}, {"witness", e.witness()}};
        out << j.dump(2) << "\n";
        return 2;
    } catch (const NumericalError& e) {
        err << "tubealg: " << e.what() << "\n";
        r.check("numerical", CheckResult::fail("numerical", {static_cast<std::int64_t>(o.seed)}, e.what()));
        code = 1;
    }
    r.root()["passed"] = code == 0;
    const auto ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    r.root()["elapsed_ms"] = ms;
    out << r.root().dump(2) << "\n";
    if (code != 0) err << "tubealg: " << command << " failed\n";
    return code;
}

}  // namespace tubealg
