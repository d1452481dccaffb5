#pragma once

#include <map>
#include <string>
#include <vector>

#include "group.hpp"

namespace mackey2 {

namespace detail {

using Perm = std::vector<int>;

inline Perm perm_mul(const Perm& p, const Perm& q) {
    Perm r(p.size());
    for (size_t x = 0; x < p.size(); ++x) r[x] = p[q[x]];
    return r;
}

inline std::string render_word(const std::vector<char>& w) {
    if (w.empty()) return "e";
    std::string s;
    for (size_t k = 0; k < w.size();) {
        size_t j = k;
        while (j < w.size() && w[j] == w[k]) ++j;
        s += w[k];
        if (j - k > 1) s += std::to_string(j - k);
        k = j;
    }
    return s;
}

// Closure of permutation generators; elements in breadth-first order, named by shortest words.
inline Group perm_group(int degree, const std::vector<std::pair<char, Perm>>& gens, std::string label) {
    Perm id(degree);
    for (int k = 0; k < degree; ++k) id[k] = k;
    std::vector<Perm> elems{id};
    std::vector<std::vector<char>> words{{}};
    std::map<Perm, int> index{{id, 0}};
    for (size_t k = 0; k < elems.size(); ++k)
        for (const auto& [c, p] : gens) {
            Perm y = perm_mul(elems[k], p);
            if (index.count(y)) continue;
            index.emplace(y, static_cast<int>(elems.size()));
            auto w = words[k];
            w.push_back(c);
            elems.push_back(std::move(y));
            words.push_back(std::move(w));
        }
    int n = static_cast<int>(elems.size());
    std::vector<int> t(n * n);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) t[a * n + b] = index.at(perm_mul(elems[a], elems[b]));
    std::vector<std::string> names(n);
    for (int a = 0; a < n; ++a) names[a] = render_word(words[a]);
    return Group(n, std::move(t), std::move(names), std::move(label));
}

inline Group cyclic(int n) {
    std::vector<int> r(n);
    for (int k = 0; k < n; ++k) r[k] = (k + 1) % n;
    return perm_group(n, {{'r', r}}, "C" + std::to_string(n));
}

}  // namespace detail

inline const std::vector<std::string>& catalog_names() {
    static const std::vector<std::string> names{"C1", "C2", "C3", "C4", "C6", "V4",
                                                "S3", "D4", "Q8", "A4", "D6", "S4"};
    return names;
}

inline Group catalog_group(const std::string& name) {
    using detail::perm_group;
    if (name == "C1") return detail::cyclic(1);
    if (name == "C2") return detail::cyclic(2);
    if (name == "C3") return detail::cyclic(3);
    if (name == "C4") return detail::cyclic(4);
    if (name == "C6") return detail::cyclic(6);
    if (name == "V4") return perm_group(4, {{'a', {1, 0, 3, 2}}, {'b', {2, 3, 0, 1}}}, "V4");
    if (name == "S3") return perm_group(3, {{'r', {1, 2, 0}}, {'s', {1, 0, 2}}}, "S3");
    if (name == "D4") return perm_group(4, {{'r', {1, 2, 3, 0}}, {'s', {0, 3, 2, 1}}}, "D4");
    if (name == "Q8") {
        // unit quaternions 1,i,j,k,-1,-i,-j,-k acting on themselves by right multiplication
        static const int unit[4][4] = {{0, 1, 2, 3}, {1, 4, 3, 6}, {2, 7, 4, 1}, {3, 2, 5, 4}};
        auto qmul = [](int a, int b) {
            int r = unit[a % 4][b % 4];
            if ((a >= 4) != (b >= 4)) r = (r + 4) % 8;
            return r;
        };
        detail::Perm pi(8), pj(8);
        for (int x = 0; x < 8; ++x) {
            pi[x] = qmul(x, 1);
            pj[x] = qmul(x, 2);
        }
        return perm_group(8, {{'i', pi}, {'j', pj}}, "Q8");
    }
    if (name == "A4") return perm_group(4, {{'a', {1, 2, 0, 3}}, {'b', {1, 0, 3, 2}}}, "A4");
    if (name == "D6") return perm_group(6, {{'r', {1, 2, 3, 4, 5, 0}}, {'s', {0, 5, 4, 3, 2, 1}}}, "D6");
    if (name == "S4") return perm_group(4, {{'r', {1, 2, 3, 0}}, {'s', {1, 0, 2, 3}}}, "S4");
    throw UnknownName("unknown group " + name);
}

inline bool is_catalog_name(const std::string& name) {
    for (const auto& n : catalog_names())
        if (n == name) return true;
    return false;
}

// Isomorphism type name, by canonical form against the catalog.
inline std::string iso_type_name(const Group& g) {
    static const std::map<std::vector<int>, std::string> known = [] {
        std::map<std::vector<int>, std::string> m;
        for (const auto& n : catalog_names()) m.emplace(canonical_form(catalog_group(n)), n == "C1" ? "1" : n);
        return m;
    }();
    if (g.order() > 24) return "G" + std::to_string(g.order());
    auto it = known.find(canonical_form(g));
    if (it != known.end()) return it->second;
    return "G" + std::to_string(g.order());
}

}  // namespace mackey2
