#pragma once

#include <chrono>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "io.hpp"

namespace mackey2 {

struct CheckRecord {
    std::string name;
    std::string inputs;
    bool pass = false;
    json counterexample;  // null when the check passed
    double ms = 0;
};

struct RunReport {
    std::string suite;
    std::vector<CheckRecord> checks;

    bool all_passed() const {
        for (const auto& c : checks)
            if (!c.pass) return false;
        return true;
    }
    int failures() const {
        int n = 0;
        for (const auto& c : checks) n += !c.pass;
        return n;
    }
};

// Timings are left out unless asked for, so reports stay byte-identical across runs.
inline json to_json(const RunReport& r, bool timings = false) {
    json checks = json::array();
    for (const auto& c : r.checks) {
        json j{{"name", c.name}, {"inputs", c.inputs}, {"pass", c.pass}};
        if (!c.pass) j["counterexample"] = c.counterexample;
        if (timings) j["ms"] = c.ms;
        checks.push_back(j);
    }
    return json{{"suite", r.suite}, {"total", r.checks.size()}, {"failed", r.failures()}, {"checks", checks}};
}

namespace detail {

// Runs fn, which returns a null payload on success; exceptions count as failures.
inline void run_check(RunReport& r, std::string name, std::string inputs, const std::function<json()>& fn) {
    CheckRecord c{std::move(name), std::move(inputs), false, nullptr, 0};
    auto t0 = std::chrono::steady_clock::now();
    try {
        c.counterexample = fn();
        c.pass = c.counterexample.is_null();
    } catch (const std::exception& e) {
        c.counterexample = json{{"error", e.what()}};
    }
    c.ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    r.checks.push_back(std::move(c));
}

inline std::string subgroup_name(const Group& g, const Subgroup& s) {
    if (s.size() == 1) return "1";
    if (static_cast<int>(s.size()) == g.order()) return g.label();
    auto gens = generating_set(subgroup_group(g, s));
    std::string r = "<";
    for (size_t k = 0; k < gens.size(); ++k) r += (k ? "," : "") + g.name(s[gens[k]]);
    return r + ">";
}

// Inclusion K -> H of one-object groupoids, for K <= H <= G.
struct NestedInclusion {
    GroupoidPtr gh;
    Functor incl;
};

inline NestedInclusion nested_inclusion(const Group& g, const Subgroup& h, const Subgroup& k) {
    auto hg = subgroup_group(g, h);
    auto gh = Groupoid::from_group(hg);
    Subgroup pos;
    for (int x : k) pos.push_back(static_cast<int>(std::lower_bound(h.begin(), h.end(), x) - h.begin()));
    return {gh, subgroup_inclusion(hg, gh, pos).incl};
}

// Pairs K <= H with H up to G-conjugacy and K up to H-conjugacy.
inline std::vector<std::pair<Subgroup, Subgroup>> inclusion_pairs(const Group& g) {
    std::vector<std::pair<Subgroup, Subgroup>> out;
    auto subs = all_subgroups(g);
    for (const auto& c : subgroup_classes(g)) {
        const auto& h = c.rep;
        std::set<Subgroup> seen;
        for (const auto& k : subs) {
            if (!is_subgroup_of(k, h) || seen.count(k)) continue;
            for (int x : h) seen.insert(conjugate(g, x, k));
            out.push_back({h, k});
        }
    }
    return out;
}

inline json triangle_failure(const Functor& i, const TriangleReport& t, bool frobenius_only) {
    bool ok = frobenius_only ? t.frobenius : t.all();
    if (ok) return nullptr;
    return json{{"left_triangle_1", t.left_1}, {"left_triangle_2", t.left_2}, {"right_triangle_1", t.right_1},
                {"right_triangle_2", t.right_2}, {"frobenius", t.frobenius}, {"lower", to_json(lower(i))},
                {"upper", to_json(upper(i))}};
}

inline json square_json(const Square& s) {
    return json{{"i", to_json(s.i)}, {"u", to_json(s.u)}, {"v", to_json(s.v)}, {"j", to_json(s.j)},
                {"gamma", to_json(s.gamma)}, {"apex", to_json(*s.v.dom)}};
}

inline json mackey_failure(const Square& s) {
    auto r = check_strict_mackey(s);
    if (r.all()) return nullptr;
    return json{{"left_inverse", r.left_inverse}, {"right_inverse", r.right_inverse}, {"square", square_json(s)},
                {"left_mate", to_json(mate_left(s).t)}, {"right_mate", to_json(mate_right(s).t)}};
}

inline json cell_failure(const DoubleSpanTwoCell& got, const DoubleSpanTwoCell& want) {
    if (equal(got, want)) return nullptr;
    return json{{"computed", to_json(got)}, {"expected", to_json(want)}};
}

}  // namespace detail

// i_! -| i^* -| i_* for every inclusion K <= H of subgroups.
inline RunReport suite_adjunction(const std::vector<Group>& groups) {
    RunReport r{"adjunction", {}};
    for (const auto& g : groups)
        for (const auto& [h, k] : detail::inclusion_pairs(g)) {
            auto inc = detail::nested_inclusion(g, h, k);
            detail::run_check(r, "triangles", g.label() + ": " + detail::subgroup_name(g, k) + " <= " + detail::subgroup_name(g, h),
                              [&] { return detail::triangle_failure(inc.incl, check_triangles(inc.incl), false); });
        }
    return r;
}

// eps_r o eta_l = id for every inclusion K <= H.
inline RunReport suite_frobenius(const std::vector<Group>& groups) {
    RunReport r{"frobenius", {}};
    for (const auto& g : groups)
        for (const auto& [h, k] : detail::inclusion_pairs(g)) {
            auto inc = detail::nested_inclusion(g, h, k);
            detail::run_check(r, "special Frobenius",
                              g.label() + ": " + detail::subgroup_name(g, k) + " <= " + detail::subgroup_name(g, h),
                              [&] { return detail::triangle_failure(inc.incl, check_triangles(inc.incl), true); });
        }
    return r;
}

// Iso-comma squares of the cospans K -> L <- H, with L up to conjugacy, H up to
// L-conjugacy and K arbitrary in L.
inline RunReport suite_strict_mackey(const std::vector<Group>& groups) {
    RunReport r{"strict-mackey", {}};
    for (const auto& g : groups) {
        auto subs = all_subgroups(g);
        for (const auto& lc : subgroup_classes(g)) {
            const auto& l = lc.rep;
            std::set<Subgroup> seen;
            for (const auto& h : subs) {
                if (!is_subgroup_of(h, l) || seen.count(h)) continue;
                for (int x : l) seen.insert(conjugate(g, x, h));
                for (const auto& k : subs) {
                    if (!is_subgroup_of(k, l)) continue;
                    auto ih = detail::nested_inclusion(g, l, h);
                    auto ik = detail::nested_inclusion(g, l, k);
                    ik.incl.cod = ih.incl.cod;
                    auto name = g.label() + ": " + detail::subgroup_name(g, h) + " -> " + detail::subgroup_name(g, l) +
                                " <- " + detail::subgroup_name(g, k);
                    detail::run_check(r, "iso-comma square", name,
                                      [&] { return detail::mackey_failure(iso_comma_square(ih.incl, ik.incl)); });
                }
            }
        }
    }
    return r;
}

// Triangles and Frobenius for faithful functors that are not subgroup inclusions:
// identities, summand inclusions, folds and transport projections.
inline RunReport suite_zigzag(const std::vector<Group>& groups) {
    RunReport r{"zigzag", {}};
    for (const auto& g : groups) {
        auto gg = Groupoid::from_group(g);
        auto check = [&](const std::string& what, const Functor& f) {
            detail::run_check(r, "zig-zag", g.label() + ": " + what,
                              [&] { return detail::triangle_failure(f, check_triangles(f), false); });
        };
        check("identity", identity_functor(gg));
        auto idx = subgroup_index(g);
        for (const auto& c : idx.classes) {
            auto sub = subgroup_inclusion(g, gg, c.rep);
            auto sum = coproduct({gg, sub.gpd});
            check("summand " + g.label() + " -> " + g.label() + " + " + c.label, sum.incl[0]);
            check("fold " + g.label() + " + " + c.label + " -> " + g.label(),
                  copair(sum, std::vector<Functor>{identity_functor(gg), sub.incl}, gg));
            check("transport " + g.label() + "/" + c.label, transport_groupoid(coset_set(g, c.rep), gg).proj);
        }
    }
    return r;
}

// Strict Mackey on double-coset squares and the unit/counit as mates of identity squares.
inline RunReport suite_pullover(const std::vector<Group>& groups) {
    RunReport r{"pullover", {}};
    for (const auto& g : groups) {
        auto gg = Groupoid::from_group(g);
        auto idx = subgroup_index(g);
        auto subs = all_subgroups(g);
        for (const auto& c : idx.classes)
            for (const auto& k : subs) {
                auto name = g.label() + ": " + c.label + ", " + detail::subgroup_name(g, k);
                detail::run_check(r, "double-coset square", name,
                                  [&] { return detail::mackey_failure(double_coset_square(g, gg, c.rep, k)); });
            }
        for (const auto& c : idx.classes) {
            auto i = subgroup_inclusion(g, gg, c.rep).incl;
            auto id = identity_functor(gg);
            auto idnat = identity_nat(id);
            auto a = unit_counit(i);
            auto name = g.label() + ": " + c.label;
            auto UI = comp(leaf(upper(id)), leaf(lower(id)));
            auto unit = into_composite(identity_span(gg), UI->value, id, id, idnat, idnat, idnat);
            Square sq{id, id, i, i, identity_nat(i)};
            detail::run_check(r, "left mate is the counit", name, [&] {
                auto l = mate_left(sq);
                auto want = reframe(make_cell(vcompose(covariant(unit), a.eps_l), comp(leaf(lower(i)), leaf(upper(i))), UI),
                                    l.src, l.tgt);
                return detail::cell_failure(l.t, want.t);
            });
            detail::run_check(r, "right mate is the unit", name, [&] {
                auto m = mate_right(sq);
                auto want = reframe(make_cell(vcompose(a.eta_r, covariant(inverse(unit))), UI, comp(leaf(lower(i)), leaf(upper(i)))),
                                    m.src, m.tgt);
                return detail::cell_failure(m.t, want.t);
            });
            detail::run_check(r, "mate of the identity square", name, [&] {
                auto idh = identity_functor(i.dom);
                auto idnh = identity_nat(idh);
                auto l2 = mate_left(Square{i, id, idh, i, identity_nat(i)});
                auto lh = comp(leaf(lower(i)), leaf(upper(idh)));
                auto rh = comp(leaf(upper(id)), leaf(lower(i)));
                auto x = into_composite(lower(i), lh->value, idh, idh, idnh, idnh, identity_nat(i));
                auto y = into_composite(lower(i), rh->value, idh, i, identity_nat(i), idnh, identity_nat(i));
                return detail::cell_failure(l2.t, vcompose(covariant(y), contravariant(x)));
            });
        }
    }
    return r;
}

// Axioms of the Burnside Mackey functor and the double-coset formula for every triple J, K <= H.
inline RunReport suite_mackey_formula(const std::vector<Group>& groups) {
    RunReport r{"mackey-formula", {}};
    for (const auto& g : groups) {
        auto m = burnside_mackey_functor(g);
        detail::run_check(r, "axioms (a)-(c)", g.label(), [&]() -> json {
            auto a = check_mackey_axioms(m);
            if (a.a && a.b && a.c) return nullptr;
            return json{{"a", a.a}, {"b", a.b}, {"c", a.c}, {"first_failure", a.first_failure}};
        });
        int ns = static_cast<int>(m.subgroups.size());
        for (int h = 0; h < ns; ++h)
            for (int j = 0; j < ns; ++j)
                for (int k = 0; k < ns; ++k) {
                    if (!is_subgroup_of(m.subgroups[j], m.subgroups[h]) || !is_subgroup_of(m.subgroups[k], m.subgroups[h]))
                        continue;
                    auto name = g.label() + ": H=" + detail::subgroup_name(g, m.subgroups[h]) + " J=" +
                                detail::subgroup_name(g, m.subgroups[j]) + " K=" + detail::subgroup_name(g, m.subgroups[k]);
                    detail::run_check(r, "double-coset formula", name, [&]() -> json {
                        auto [lhs, rhs] = double_coset_sides(m, h, j, k);
                        if (lhs == rhs) return nullptr;
                        return json{{"source_basis", m.basis[k]}, {"target_basis", m.basis[j]}, {"lhs", lhs}, {"rhs", rhs}};
                    });
                }
    }
    return r;
}

inline RunReport suite_k0(const std::vector<Group>& groups) {
    RunReport r{"k0", {}};
    for (const auto& g : groups) {
        detail::run_check(r, "decategorification", g.label(), [&]() -> json {
            auto k = k0_bridge(g);
            if (k.all()) return nullptr;
            return json{{"rank", k.rank}, {"expected_rank", k.expected_rank}, {"classes_distinct", k.classes_distinct},
                        {"classes_complete", k.classes_complete}, {"action_matches", k.action_matches},
                        {"comparison_iso", k.comparison_iso}};
        });
        detail::run_check(r, "spans of G-sets", g.label(), [&]() -> json {
            auto s = span_category_over_G(g);
            if (s.all()) return nullptr;
            return json{{"objects_biject", s.objects_biject}, {"composition_matches", s.composition_matches},
                        {"identities_match", s.identities_match}, {"triples", s.triples}};
        });
    }
    return r;
}

inline RunReport suite_end_ring(const std::vector<Group>& groups) {
    RunReport r{"end-ring", {}};
    for (const auto& g : groups) {
        auto e = end_ring(g);
        auto ring_failure = [&]() -> json {
            return json{{"end", to_json(e.ring)}, {"crossed", to_json(crossed_burnside_ring(g))}};
        };
        detail::run_check(r, "products reduce to basis cells", g.label(), [&]() -> json {
            if (e.reduces) return nullptr;
            return ring_failure();
        });
        detail::run_check(r, "End(Id) = xB", g.label(), [&]() -> json {
            if (e.agrees) return nullptr;
            return ring_failure();
        });
        detail::run_check(r, "horizontal = vertical", g.label(), [&]() -> json {
            if (e.horizontal_agrees) return nullptr;
            return ring_failure();
        });
        detail::run_check(r, "commutative", g.label(), [&]() -> json {
            if (is_commutative(e.ring)) return nullptr;
            return to_json(e.ring);
        });
        detail::run_check(r, "phi/psi square", g.label(), [&]() -> json {
            auto s = check_phi_psi(g);
            if (s.all()) return nullptr;
            return json{{"section", s.section}, {"phi", s.phi_ok}, {"psi", s.psi_ok}, {"homomorphisms", s.homomorphisms}};
        });
    }
    return r;
}

// Components of the iso-comma of K -> G <- H are the double cosets K x H, with vertex
// groups K cap xHx^-1 (read off through the projection to K).
inline RunReport suite_iso_comma(const std::vector<Group>& groups) {
    RunReport r{"iso-comma", {}};
    for (const auto& g : groups) {
        auto gg = Groupoid::from_group(g);
        auto subs = all_subgroups(g);
        for (const auto& k : subs)
            for (const auto& h : subs) {
                auto name = g.label() + ": K=" + detail::subgroup_name(g, k) + " H=" + detail::subgroup_name(g, h);
                detail::run_check(r, "double-coset components", name, [&]() -> json {
                    auto ih = subgroup_inclusion(g, gg, h), ik = subgroup_inclusion(g, gg, k);
                    auto sq = iso_comma(ih.incl, ik.incl);
                    auto comps = components(*sq.apex);
                    auto reps = double_coset_reps(g, k, h);
                    json bad = json::array();
                    if (comps.count() != static_cast<int>(reps.size()))
                        bad.push_back({{"components", comps.count()}, {"double_cosets", reps.size()}});
                    for (int c = 0; c < comps.count(); ++c) {
                        int x = sq.og[comps.rep[c]];
                        std::set<int> coset, objs;
                        for (int a : k)
                            for (int b : h) coset.insert(g.mul(g.mul(a, x), b));
                        for (int o = 0; o < sq.apex->objects(); ++o)
                            if (comps.comp_of[o] == c) objs.insert(sq.og[o]);
                        std::set<int> img;
                        for (int m : sq.apex->aut(comps.rep[c])) img.insert(ik.incl.mor[sq.q.mor[m]]);
                        auto inter = intersect(k, conjugate(g, x, h));
                        if (objs != coset || img != std::set<int>(inter.begin(), inter.end()) ||
                            static_cast<size_t>(sq.apex->aut(comps.rep[c]).size()) != inter.size())
                            bad.push_back({{"component", c}, {"element", g.name(x)},
                                           {"vertex_group", std::vector<int>(img.begin(), img.end())},
                                           {"expected", inter}});
                    }
                    if (bad.empty()) return nullptr;
                    return json{{"mismatches", bad}, {"apex", to_json(*sq.apex)}};
                });
            }
    }
    return r;
}

namespace detail {

// A seeded corpus of endomorphisms of Id_G, each with its coordinates in xB(G)
// computed from the ring table alone.
struct EndoCorpus {
    std::vector<DoubleSpanTwoCell> cells;
    std::vector<RingElement> coords;
};

inline EndoCorpus endo_corpus(const Group& g, const GroupoidPtr& gg, const PairIndex& idx, const Ring& xb, int size,
                              unsigned seed) {
    EndoCorpus c;
    auto id = identity_span(gg);
    std::mt19937 rng(seed);
    c.cells.push_back(zero_cell(id, id));
    c.coords.push_back(zero(xb));
    for (int k = 0; k < idx.size(); ++k) {
        c.cells.push_back(sigma_c(g, gg, idx.classes[k].h, idx.classes[k].a));
        c.coords.push_back(basis_element(xb, k));
    }
    while (static_cast<int>(c.cells.size()) < size) {
        auto pick = [&] { return std::uniform_int_distribution<size_t>(0, c.cells.size() - 1)(rng); };
        size_t a = pick(), b = pick();
        if (rng() % 2) {
            c.cells.push_back(add(c.cells[a], c.cells[b]));
            c.coords.push_back(c.coords[a] + c.coords[b]);
        } else {
            c.cells.push_back(vcompose(c.cells[a], c.cells[b]));
            c.coords.push_back(multiply(xb, c.coords[a], c.coords[b]));
        }
    }
    return c;
}

}  // namespace detail

// Equality of 2-cells is an equivalence relation agreeing with the ring coordinates,
// addition is a commutative monoid and both compositions are bilinear.
inline RunReport suite_properties(const std::vector<Group>& groups, int size = 14, unsigned seed = 20240611u) {
    RunReport r{"properties", {}};
    for (const auto& g : groups) {
        auto gg = Groupoid::from_group(g);
        auto idx = pair_index(g);
        auto xb = crossed_burnside_ring(g, idx);
        auto corpus = detail::endo_corpus(g, gg, idx, xb, size, seed);
        const auto& cs = corpus.cells;
        int n = static_cast<int>(cs.size());
        auto id = identity_span(gg);
        std::vector<std::vector<char>> eq(n, std::vector<char>(n));
        detail::run_check(r, "equality matches coordinates", g.label(), [&]() -> json {
            for (int a = 0; a < n; ++a)
                for (int b = 0; b < n; ++b) {
                    eq[a][b] = equal(cs[a], cs[b]);
                    if (static_cast<bool>(eq[a][b]) != (corpus.coords[a] == corpus.coords[b]))
                        return json{{"x", to_json(cs[a])}, {"y", to_json(cs[b])}, {"equal", static_cast<bool>(eq[a][b])}};
                }
            return nullptr;
        });
        detail::run_check(r, "equality is an equivalence relation", g.label(), [&]() -> json {
            for (int a = 0; a < n; ++a) {
                if (!eq[a][a]) return json{{"not_reflexive", to_json(cs[a])}};
                for (int b = 0; b < n; ++b) {
                    if (eq[a][b] != eq[b][a]) return json{{"not_symmetric", {to_json(cs[a]), to_json(cs[b])}}};
                    for (int c = 0; c < n; ++c)
                        if (eq[a][b] && eq[b][c] && !eq[a][c])
                            return json{{"not_transitive", {to_json(cs[a]), to_json(cs[b]), to_json(cs[c])}}};
                }
            }
            return nullptr;
        });
        detail::run_check(r, "matching agrees with the fast path", g.label(), [&]() -> json {
            for (int a = 0; a < n; ++a)
                for (int b = a; b < n; ++b)
                    if (equal_by_matching(cs[a], cs[b]) != static_cast<bool>(eq[a][b]))
                        return json{{"x", to_json(cs[a])}, {"y", to_json(cs[b])}};
            return nullptr;
        });
        // a second corpus in End(i_! i^*) for the largest proper subgroup class, compared by the general path
        if (idx.subs.size() > 1) {
            auto i = subgroup_inclusion(g, gg, idx.subs.classes[idx.subs.size() - 2].rep).incl;
            auto a = unit_counit(i);
            auto q = identity_cell(a.eps_l.src);
            std::vector<DoubleSpanTwoCell> ds{zero_cell(q.src, q.tgt), q, vcompose(a.eta_r, a.eps_l)};
            std::mt19937 rng2(seed + 2);
            while (ds.size() < 9) {
                auto pk = [&] { return std::uniform_int_distribution<size_t>(0, ds.size() - 1)(rng2); };
                size_t x = pk(), y = pk();
                ds.push_back(rng2() % 2 ? add(ds[x], ds[y]) : vcompose(ds[x], ds[y]));
            }
            int m = static_cast<int>(ds.size());
            detail::run_check(r, "equality is an equivalence relation on End(i_! i^*)", g.label(), [&]() -> json {
                std::vector<std::vector<char>> e(m, std::vector<char>(m));
                for (int x = 0; x < m; ++x)
                    for (int y = 0; y < m; ++y) e[x][y] = equal(ds[x], ds[y]);
                for (int x = 0; x < m; ++x) {
                    if (!e[x][x]) return json{{"not_reflexive", to_json(ds[x])}};
                    for (int y = 0; y < m; ++y) {
                        if (e[x][y] != e[y][x]) return json{{"not_symmetric", {to_json(ds[x]), to_json(ds[y])}}};
                        for (int z = 0; z < m; ++z)
                            if (e[x][y] && e[y][z] && !e[x][z])
                                return json{{"not_transitive", {to_json(ds[x]), to_json(ds[y]), to_json(ds[z])}}};
                    }
                }
                if (e[0][1]) return json{{"zero_equals_identity", to_json(ds[1])}};
                return nullptr;
            });
        }
        std::mt19937 rng(seed + 1);
        auto pick = [&] { return std::uniform_int_distribution<int>(0, n - 1)(rng); };
        auto zero_c = zero_cell(id, id);
        auto I = leaf(id);
        auto flat = [&](const DoubleSpanTwoCell& t) { return reframe(make_cell(t, comp(I, I), comp(I, I)), I, I).t; };
        detail::run_check(r, "commutative monoid, bilinear compositions", g.label(), [&]() -> json {
            for (int t = 0; t < 12; ++t) {
                const auto &x = cs[pick()], &y = cs[pick()], &z = cs[pick()];
                auto fail = [&](const char* law) {
                    return json{{"law", law}, {"x", to_json(x)}, {"y", to_json(y)}, {"z", to_json(z)}};
                };
                if (!equal(add(x, y), add(y, x))) return fail("commutativity");
                if (!equal(add(add(x, y), z), add(x, add(y, z)))) return fail("associativity");
                if (!equal(add(x, zero_c), x) || !equal(add(zero_c, x), x)) return fail("unit");
                if (!equal(vcompose(x, add(y, z)), add(vcompose(x, y), vcompose(x, z)))) return fail("vcompose right");
                if (!equal(vcompose(add(y, z), x), add(vcompose(y, x), vcompose(z, x)))) return fail("vcompose left");
                if (!equal(flat(hcompose(x, add(y, z))), add(flat(hcompose(x, y)), flat(hcompose(x, z)))))
                    return fail("hcompose right");
                if (!equal(flat(hcompose(add(y, z), x)), add(flat(hcompose(y, x)), flat(hcompose(z, x)))))
                    return fail("hcompose left");
                if (!equal(vcompose(x, zero_c), zero_c)) return fail("zero absorbs");
            }
            return nullptr;
        });
    }
    return r;
}

inline const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names{"adjunction", "frobenius",      "strict-mackey", "zigzag",
                                                "pullover",   "mackey-formula", "k0",            "end-ring",
                                                "iso-comma",  "properties"};
    return names;
}

inline RunReport run_suite(const std::string& name, const std::vector<Group>& groups) {
    if (name == "adjunction") return suite_adjunction(groups);
    if (name == "frobenius") return suite_frobenius(groups);
    if (name == "strict-mackey") return suite_strict_mackey(groups);
    if (name == "zigzag") return suite_zigzag(groups);
    if (name == "pullover") return suite_pullover(groups);
    if (name == "mackey-formula") return suite_mackey_formula(groups);
    if (name == "k0") return suite_k0(groups);
    if (name == "end-ring") return suite_end_ring(groups);
    if (name == "iso-comma") return suite_iso_comma(groups);
    if (name == "properties") return suite_properties(groups);
    throw UnknownName("unknown suite: " + name);
}

}  // namespace mackey2
