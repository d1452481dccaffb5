#pragma once

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "algebra.hpp"
#include "catalog.hpp"
#include "mackey.hpp"

namespace mackey2 {

using json = nlohmann::ordered_json;

// ---------------------------------------------------------------------------
// Groups and groupoids.

inline json to_json(const Group& g) {
    json t = json::array();
    for (int a = 0; a < g.order(); ++a) {
        json row = json::array();
        for (int b = 0; b < g.order(); ++b) row.push_back(g.mul(a, b));
        t.push_back(row);
    }
    json names = json::array();
    for (int a = 0; a < g.order(); ++a) names.push_back(g.name(a));
    return json{{"label", g.label()}, {"order", g.order()}, {"table", t}, {"names", names}};
}

// {order, table} with table either n rows of n entries or a flat list of n*n; names and label optional.
inline Group group_from_json(const json& j) {
    try {
        int n = j.at("order").get<int>();
        std::vector<int> flat;
        const auto& t = j.at("table");
        if (!t.is_array()) throw MalformedGroup("table must be an array");
        for (const auto& row : t) {
            if (row.is_array())
                for (const auto& v : row) flat.push_back(v.get<int>());
            else
                flat.push_back(row.get<int>());
        }
        std::vector<std::string> names;
        if (j.contains("names")) names = j["names"].get<std::vector<std::string>>();
        std::string label = j.value("label", std::string("G"));
        return Group(n, flat, names, label);
    } catch (const json::exception& e) {
        throw MalformedGroup(std::string("malformed group document: ") + e.what());
    }
}

// compose holds triples [h, f, h o f] for every composable pair (f first).
inline json to_json(const Groupoid& g) {
    json mor = json::array(), comp = json::array(), ids = json::array(), invs = json::array();
    for (int m = 0; m < g.morphisms(); ++m) {
        mor.push_back({g.src(m), g.tgt(m)});
        invs.push_back(g.inv(m));
    }
    for (int f = 0; f < g.morphisms(); ++f)
        for (int h : g.out(g.tgt(f))) comp.push_back({h, f, g.comp(h, f)});
    for (int x = 0; x < g.objects(); ++x) ids.push_back(g.id(x));
    return json{{"objects", g.objects()}, {"morphisms", mor}, {"compose", comp}, {"identities", ids}, {"inverses", invs}};
}

inline GroupoidPtr groupoid_from_json(const json& j) {
    try {
        int n = j.at("objects").get<int>();
        std::vector<int> src, tgt;
        for (const auto& m : j.at("morphisms")) {
            if (!m.is_array() || m.size() != 2) throw MalformedGroup("morphism must be [source, target]");
            src.push_back(m[0].get<int>());
            tgt.push_back(m[1].get<int>());
        }
        int nm = static_cast<int>(src.size());
        auto ids = j.at("identities").get<std::vector<int>>();
        auto invs = j.at("inverses").get<std::vector<int>>();
        if (static_cast<int>(ids.size()) != n) throw MalformedGroup("one identity per object required");
        if (static_cast<int>(invs.size()) != nm) throw MalformedGroup("one inverse per morphism required");
        for (int k = 0; k < nm; ++k)
            if (src[k] < 0 || src[k] >= n || tgt[k] < 0 || tgt[k] >= n) throw MalformedGroup("endpoint out of range");
        for (int v : ids)
            if (v < 0 || v >= nm) throw MalformedGroup("identity out of range");
        for (int v : invs)
            if (v < 0 || v >= nm) throw MalformedGroup("inverse out of range");
        std::map<std::pair<int, int>, int> table;
        for (const auto& t : j.at("compose")) {
            if (!t.is_array() || t.size() != 3) throw MalformedGroup("compose entries are [h, f, h o f]");
            int h = t[0].get<int>(), f = t[1].get<int>(), hf = t[2].get<int>();
            if (h < 0 || h >= nm || f < 0 || f >= nm || hf < 0 || hf >= nm) throw MalformedGroup("compose index out of range");
            if (tgt[f] != src[h]) throw MalformedGroup("compose entry for a non-composable pair");
            if (!table.emplace(std::pair{h, f}, hf).second) throw MalformedGroup("duplicate compose entry");
        }
        auto g = Groupoid::build(n, src, tgt, ids, invs, [&](int h, int f) {
            auto it = table.find({h, f});
            return it == table.end() ? -1 : it->second;
        });
        std::string why;
        if (!g->validate(&why)) throw MalformedGroup("not a groupoid: " + why);
        return g;
    } catch (const json::exception& e) {
        throw MalformedGroup(std::string("malformed groupoid document: ") + e.what());
    }
}

// The group of a one-object groupoid.
inline Group group_of(const GroupoidPtr& g, const std::string& label = "G") {
    if (g->objects() != 1) throw Mismatch("groupoid has " + std::to_string(g->objects()) + " objects, expected 1");
    auto v = vertex_group(*g, 0);
    return Group(v.order(), [&] {
        std::vector<int> t;
        for (int a = 0; a < v.order(); ++a)
            for (int b = 0; b < v.order(); ++b) t.push_back(v.mul(a, b));
        return t;
    }(), {}, label);
}

inline json read_json_file(const std::filesystem::path& p) {
    std::ifstream in(p);
    if (!in) throw UnknownName("cannot open " + p.string());
    try {
        return json::parse(in);
    } catch (const json::exception& e) {
        throw MalformedGroup(p.string() + ": " + e.what());
    }
}

inline Group group_from_document(const json& j, const std::string& label) {
    if (j.contains("table")) {
        if (j.contains("label")) return group_from_json(j);
        auto k = j;
        k["label"] = label;
        return group_from_json(k);
    }
    if (j.contains("objects")) return group_of(groupoid_from_json(j), label);
    throw MalformedGroup("document is neither a group nor a groupoid");
}

// Built-in catalog, then <name>.json (or <name>) in $MACKEY2_CATALOG, then a file path.
inline Group resolve_group(const std::string& name) {
    const auto& names = catalog_names();
    if (std::find(names.begin(), names.end(), name) != names.end()) return catalog_group(name);
    namespace fs = std::filesystem;
    if (const char* dir = std::getenv("MACKEY2_CATALOG"); dir && *dir) {
        for (const auto& p : {fs::path(dir) / (name + ".json"), fs::path(dir) / name})
            if (fs::is_regular_file(p)) return group_from_document(read_json_file(p), name);
    }
    if (fs::is_regular_file(name)) return group_from_document(read_json_file(name), fs::path(name).stem().string());
    throw UnknownName("unknown group: " + name);
}

inline GroupoidPtr resolve_groupoid(const std::string& name) {
    namespace fs = std::filesystem;
    const auto& names = catalog_names();
    if (std::find(names.begin(), names.end(), name) == names.end() && fs::is_regular_file(name)) {
        auto j = read_json_file(name);
        if (j.contains("objects")) return groupoid_from_json(j);
    }
    return Groupoid::from_group(resolve_group(name));
}

// ---------------------------------------------------------------------------
// Functors, spans and 2-cells, for counterexample payloads.

inline json to_json(const Functor& f) { return json{{"objects", f.obj}, {"morphisms", f.mor}}; }

inline json to_json(const NatIso& n) { return json{{"components", n.comp}}; }

inline json to_json(const Span& s) {
    return json{{"left", to_json(*s.left)}, {"middle", to_json(*s.middle)}, {"right", to_json(*s.right)},
                {"u", to_json(s.u)}, {"i", to_json(s.i)}};
}

inline json to_json(const SpanRep& x) { return json{{"a", to_json(x.a)}, {"alpha1", to_json(x.a1)}, {"alpha2", to_json(x.a2)}}; }

inline json to_json(const DoubleSpanTwoCell& t) {
    return json{{"source", to_json(t.src)}, {"target", to_json(t.tgt)}, {"middle", to_json(t.mid)},
                {"up", to_json(t.up)}, {"down", to_json(t.down)}};
}

// ---------------------------------------------------------------------------
// Rings.

inline json to_json(const Ring& r) {
    return json{{"name", r.name}, {"basis", r.basis}, {"constants", r.constants}, {"unit", r.unit}};
}

inline std::string format_element(const std::vector<std::string>& basis, const std::vector<mpq_class>& c) {
    std::string s;
    for (size_t k = 0; k < c.size(); ++k) {
        if (c[k] == 0) continue;
        mpq_class a = abs(c[k]);
        if (!s.empty()) s += c[k] < 0 ? " - " : " + ";
        else if (c[k] < 0) s += "-";
        if (a != 1) s += a.get_str() + (a.get_den() == 1 ? "" : "*");
        s += basis[k];
    }
    return s.empty() ? "0" : s;
}

inline std::string format_element(const std::vector<std::string>& basis, const std::vector<long>& c) {
    std::vector<mpq_class> q(c.begin(), c.end());
    return format_element(basis, q);
}

// Aligned multiplication table; entry (i, j) is e_i e_j.
inline std::string ring_text(const Ring& r) {
    int n = r.rank();
    std::vector<std::vector<std::string>> cells(n + 1, std::vector<std::string>(n + 1));
    cells[0][0] = r.name;
    for (int k = 0; k < n; ++k) cells[0][k + 1] = cells[k + 1][0] = r.basis[k];
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) cells[i + 1][j + 1] = format_element(r.basis, r.constants[i][j]);
    std::vector<size_t> w(n + 1, 0);
    for (const auto& row : cells)
        for (int k = 0; k <= n; ++k) w[k] = std::max(w[k], row[k].size());
    std::ostringstream os;
    for (const auto& row : cells) {
        std::string line;
        for (int k = 0; k <= n; ++k) {
            line += row[k] + std::string(w[k] - row[k].size(), ' ');
            if (k < n) line += " | ";
        }
        while (!line.empty() && line.back() == ' ') line.pop_back();
        os << line << '\n';
    }
    return os.str();
}

inline json to_json(const QVec& v) {
    json a = json::array();
    for (const auto& x : v) a.push_back(x.get_str());
    return a;
}

// ---------------------------------------------------------------------------
// Mackey functor tables.

inline json to_json(const MackeyFunctorTable& m) {
    const auto& g = m.g;
    auto sname = [&](const Subgroup& s) {
        json a = json::array();
        for (int x : s) a.push_back(g.name(x));
        return a;
    };
    json values = json::array();
    for (size_t h = 0; h < m.subgroups.size(); ++h)
        values.push_back({{"subgroup", sname(m.subgroups[h])}, {"basis", m.basis[h]}});
    json res = json::array(), ind = json::array(), conj = json::array();
    for (const auto& [key, mat] : m.res)
        res.push_back({{"from", key.first}, {"to", key.second}, {"matrix", mat}});
    for (const auto& [key, mat] : m.ind)
        ind.push_back({{"from", key.second}, {"to", key.first}, {"matrix", mat}});
    for (size_t h = 0; h < m.conj.size(); ++h)
        for (int x = 0; x < g.order(); ++x)
            conj.push_back({{"subgroup", h}, {"element", g.name(x)}, {"to", m.id(conjugate(g, x, m.subgroups[h]))},
                            {"matrix", m.conj[h][x]}});
    return json{{"group", g.label()}, {"values", values}, {"R", res}, {"I", ind}, {"c", conj}};
}

}  // namespace mackey2
