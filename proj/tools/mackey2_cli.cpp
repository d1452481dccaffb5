#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "mackey2/mackey2.hpp"

using namespace mackey2;

namespace {

enum class Format { text, json };

Format parse_format(const std::string& s) {
    if (s == "json") return Format::json;
    if (s == "text") return Format::text;
    throw CLI::ValidationError("--format", "expected text or json, got " + s);
}

void print_idempotents(const std::vector<std::string>& basis, const std::vector<QVec>& es, const Algebra& a,
                       const std::string& noun, const std::string& suffix) {
    std::cout << es.size() << " " << noun << (es.size() == 1 ? "" : "s") << " " << suffix << "\n";
    for (size_t k = 0; k < es.size(); ++k)
        std::cout << "  e" << k << " = " << format_element(basis, es[k]) << "   (rank of e" << k
                  << "R: " << ideal_dimension(a, es[k]) << ")\n";
}

// ---------------------------------------------------------------------------

int cmd_ring(const std::string& name, bool crossed, bool rational, const std::string& fmt) {
    auto format = parse_format(fmt);
    auto g = resolve_group(name);
    auto idx = pair_index(g);
    Ring r = crossed ? crossed_burnside_ring(g, idx) : burnside_ring(g, idx.subs);
    json out{{"group", g.label()}, {"ring", to_json(r)}};
    bool ok = true;
    std::string verdict;
    if (crossed) {
        auto e = end_ring(g, Groupoid::from_group(g), idx, false);
        ok = e.agrees && e.reduces;
        verdict = std::string("End(Id) ≅ xB: ") + (ok ? "OK" : "FAILED");
        out["end_matches_crossed"] = ok;
    }
    std::vector<QVec> prim;
    Algebra a;
    if (rational) {
        a = algebra_of(r);
        prim = primitive_idempotents(a);
        json js = json::array();
        for (const auto& e : prim) js.push_back(to_json(e));
        out["rational_idempotents"] = js;
    }
    if (format == Format::json) {
        std::cout << out.dump(2) << "\n";
    } else {
        std::cout << ring_text(r);
        if (rational) {
            std::cout << "\n";
            print_idempotents(r.basis, prim, a, "primitive idempotent", "over Q");
        }
        if (crossed) std::cout << "\n" << verdict << "\n";
    }
    return ok ? 0 : 1;
}

int cmd_verify(const std::string& suite, std::vector<std::string> groups, const std::string& fmt, bool timings) {
    auto format = parse_format(fmt);
    if (groups.empty()) groups = catalog_names();
    std::vector<Group> gs;
    for (const auto& n : groups) gs.push_back(resolve_group(n));
    auto rep = run_suite(suite, gs);
    if (format == Format::json) {
        std::cout << to_json(rep, timings).dump(2) << "\n";
    } else {
        for (const auto& c : rep.checks) {
            std::cout << (c.pass ? "PASS " : "FAIL ") << c.name << " [" << c.inputs << "]";
            if (timings) std::cout << " " << std::fixed << std::setprecision(1) << c.ms << " ms";
            std::cout << "\n";
            if (!c.pass) std::cout << c.counterexample.dump() << "\n";
        }
        std::cout << rep.suite << ": " << rep.checks.size() - rep.failures() << "/" << rep.checks.size()
                  << " checks passed\n";
    }
    return rep.all_passed() ? 0 : 1;
}

int cmd_blocks(const std::string& name, const std::string& coeff, const std::string& target, const std::string& fmt) {
    auto format = parse_format(fmt);
    if (coeff != "Z" && coeff != "Q") throw CLI::ValidationError("--coeff", "expected Z or Q");
    if (target != "burnside" && target != "crossed") throw CLI::ValidationError("--target", "expected burnside or crossed");
    auto g = resolve_group(name);
    auto idx = pair_index(g);
    Ring r = target == "crossed" ? crossed_burnside_ring(g, idx) : burnside_ring(g, idx.subs);
    auto a = algebra_of(r);
    auto prim = primitive_idempotents(a);
    bool integral = coeff == "Z";
    auto es = integral ? integral_blocks(a, prim) : prim;
    auto check = check_idempotents(a, es, integral);
    if (format == Format::json) {
        json js = json::array();
        for (const auto& e : es) js.push_back({{"idempotent", to_json(e)}, {"rank", ideal_dimension(a, e)}});
        std::cout << json{{"group", g.label()},
                          {"ring", r.name},
                          {"basis", r.basis},
                          {"coefficients", coeff},
                          {"idempotents", js},
                          {"complete", check.complete},
                          {"orthogonal", check.orthogonal},
                          {"primitive", check.primitive}}
                         .dump(2)
                  << "\n";
    } else {
        std::cout << r.name << " over " << coeff << "\n";
        print_idempotents(r.basis, es, a, integral ? "block" : "primitive idempotent", integral ? "(primitive idempotents over Z)" : "over Q");
        std::cout << "complete: " << (check.complete ? "yes" : "no") << ", orthogonal: " << (check.orthogonal ? "yes" : "no")
                  << ", primitive: " << (check.primitive ? "yes" : "no") << "\n";
    }
    return check.all() ? 0 : 1;
}

// Subgroup from "1", the group label, or a comma-separated list of generator names.
Subgroup parse_subgroup(const Group& g, const std::string& s) {
    if (s == "1") return trivial_subgroup(g);
    if (s == g.label() || s == "G") return whole(g);
    std::vector<int> gens;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ',')) gens.push_back(g.find(tok));
    return generate(g, gens);
}

struct Piece {
    Span span;
    Subgroup from, to;
};

// res:K[:H] is restriction H -> K, ind:K[:H] induction K -> H; H defaults to G.
Piece parse_piece(const Group& g, const std::string& tok) {
    auto colon = tok.find(':');
    if (colon == std::string::npos) throw UnknownName("expected res:K[:H] or ind:K[:H], got " + tok);
    std::string kind = tok.substr(0, colon), rest = tok.substr(colon + 1);
    auto c2 = rest.find(':');
    auto k = parse_subgroup(g, rest.substr(0, c2));
    auto h = c2 == std::string::npos ? whole(g) : parse_subgroup(g, rest.substr(c2 + 1));
    if (!is_subgroup_of(k, h)) throw Mismatch(rest.substr(0, c2) + " is not contained in the ambient subgroup");
    auto inc = detail::nested_inclusion(g, h, k).incl;
    if (kind == "res") return {upper(inc), h, k};
    if (kind == "ind") return {lower(inc), k, h};
    throw UnknownName("unknown span kind " + kind);
}

int cmd_compose(const std::string& name, const std::vector<std::string>& tokens, const std::string& fmt, bool dot) {
    auto format = parse_format(fmt);
    auto g = resolve_group(name);
    if (tokens.empty()) throw CLI::ValidationError("compose", "no spans given");
    std::vector<Piece> ps;
    for (const auto& t : tokens) ps.push_back(parse_piece(g, t));
    // rightmost acts first
    Piece acc = ps.back();
    for (int k = static_cast<int>(ps.size()) - 2; k >= 0; --k) {
        if (ps[k].from != acc.to) throw Mismatch("spans do not compose at " + tokens[k]);
        acc = {hcompose(ps[k].span, acc.span), acc.from, ps[k].to};
    }
    const auto& s = acc.span;
    if (dot) {
        std::cout << to_dot(*s.middle);
        return 0;
    }
    auto comps = components(*s.middle);
    auto image = [&](const Functor& leg, const Subgroup& amb, int obj) {
        std::set<int> img;
        for (int m : s.middle->aut(obj)) img.insert(amb[leg.mor[m]]);
        return detail::subgroup_name(g, Subgroup(img.begin(), img.end()));
    };
    if (format == Format::json) {
        json cs = json::array();
        for (int c = 0; c < comps.count(); ++c)
            cs.push_back({{"order", comps.vertex_order[c]}, {"left_image", image(s.u, acc.from, comps.rep[c])},
                          {"right_image", image(s.i, acc.to, comps.rep[c])}});
        std::cout << json{{"source", detail::subgroup_name(g, acc.from)},
                          {"target", detail::subgroup_name(g, acc.to)},
                          {"components", cs},
                          {"span", to_json(s)}}
                         .dump(2)
                  << "\n";
    } else {
        std::cout << "span " << detail::subgroup_name(g, acc.from) << " <- P -> " << detail::subgroup_name(g, acc.to)
                  << ", " << comps.count() << " component" << (comps.count() == 1 ? "" : "s") << "\n";
        for (int c = 0; c < comps.count(); ++c)
            std::cout << "  |Aut| = " << comps.vertex_order[c] << ", left image " << image(s.u, acc.from, comps.rep[c])
                      << ", right image " << image(s.i, acc.to, comps.rep[c]) << "\n";
    }
    return 0;
}

int cmd_groupoid_dump(const std::string& name, const std::string& fmt) {
    auto g = resolve_groupoid(name);
    if (fmt == "json")
        std::cout << to_json(*g).dump(2) << "\n";
    else if (fmt == "dot")
        std::cout << to_dot(*g, "groupoid");
    else
        throw CLI::ValidationError("--format", "expected dot or json");
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Spans of finite groupoids, Burnside rings and Mackey functors"};
    app.require_subcommand(1);
    int status = 0;

    auto* ring = app.add_subcommand("ring", "Multiplication table of B(G), or xB(G) with --crossed");
    std::string ring_group, ring_fmt = "text";
    bool crossed = false, rational = false;
    ring->add_option("group", ring_group, "catalog name or JSON file")->required();
    ring->add_flag("--crossed", crossed, "crossed Burnside ring, checked against End(Id_G)");
    ring->add_flag("--rational", rational, "also list the primitive idempotents over Q");
    ring->add_option("--format", ring_fmt, "text or json");
    ring->callback([&] { status = cmd_ring(ring_group, crossed, rational, ring_fmt); });

    auto* verify = app.add_subcommand("verify", "Run a verification suite");
    std::string suite, verify_fmt = "text";
    std::vector<std::string> groups;
    bool timings = false;
    verify->add_option("suite", suite, "suite name")->required()->check(CLI::IsMember(suite_names()));
    verify->add_option("groups", groups, "groups (default: whole catalog)");
    verify->add_option("--format", verify_fmt, "text or json");
    verify->add_flag("--timings", timings, "report wall-clock time per check");
    verify->callback([&] { status = cmd_verify(suite, groups, verify_fmt, timings); });

    auto* blocks = app.add_subcommand("blocks", "Primitive idempotents over Q or Z");
    std::string blocks_group, coeff = "Q", target = "burnside", blocks_fmt = "text";
    blocks->add_option("group", blocks_group, "catalog name or JSON file")->required();
    blocks->add_option("--coeff", coeff, "Z or Q");
    blocks->add_option("--target", target, "burnside or crossed");
    blocks->add_option("--format", blocks_fmt, "text or json");
    blocks->callback([&] { status = cmd_blocks(blocks_group, coeff, target, blocks_fmt); });

    auto* compose = app.add_subcommand("compose", "Compose restriction and induction spans, rightmost first");
    std::string compose_group, compose_fmt = "text";
    std::vector<std::string> tokens;
    bool dot = false;
    compose->add_option("group", compose_group, "catalog name or JSON file")->required();
    compose->add_option("spans", tokens, "res:K[:H] or ind:K[:H]")->required();
    compose->add_option("--format", compose_fmt, "text or json");
    compose->add_flag("--dot", dot, "print the middle groupoid as DOT");
    compose->callback([&] { status = cmd_compose(compose_group, tokens, compose_fmt, dot); });

    auto* gpd = app.add_subcommand("groupoid", "Groupoid utilities");
    gpd->require_subcommand(1);
    auto* dump = gpd->add_subcommand("dump", "Print a groupoid as DOT or JSON");
    std::string dump_name, dump_fmt = "dot";
    dump->add_option("groupoid", dump_name, "catalog name or JSON file")->required();
    dump->add_option("--format", dump_fmt, "dot or json");
    dump->callback([&] { status = cmd_groupoid_dump(dump_name, dump_fmt); });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return status;
}
