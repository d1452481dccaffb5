#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace mackey2 {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct MalformedGroup : Error {
    using Error::Error;
};
struct Mismatch : Error {
    using Error::Error;
};
struct NotFaithful : Error {
    using Error::Error;
};
struct NotMackey : Error {
    using Error::Error;
};
struct UnknownName : Error {
    using Error::Error;
};

// A finite group given by its full multiplication table.
class Group {
public:
    Group() : Group(1, {0}) {}

    Group(int order, std::vector<int> table, std::vector<std::string> names = {},
          std::string label = "G")
        : n_(order), mul_(std::move(table)), names_(std::move(names)), label_(std::move(label)) {
        if (n_ <= 0) throw MalformedGroup("group order must be positive");
        if (static_cast<int>(mul_.size()) != n_ * n_) throw MalformedGroup("table has wrong size");
        for (int v : mul_)
            if (v < 0 || v >= n_) throw MalformedGroup("table entry out of range");
        e_ = -1;
        for (int a = 0; a < n_ && e_ < 0; ++a) {
            bool ok = true;
            for (int b = 0; b < n_ && ok; ++b) ok = mul(a, b) == b && mul(b, a) == b;
            if (ok) e_ = a;
        }
        if (e_ < 0) throw MalformedGroup("no identity element");
        inv_.assign(n_, -1);
        for (int a = 0; a < n_; ++a)
            for (int b = 0; b < n_; ++b)
                if (mul(a, b) == e_ && mul(b, a) == e_) inv_[a] = b;
        for (int a = 0; a < n_; ++a)
            if (inv_[a] < 0) throw MalformedGroup("element " + std::to_string(a) + " is not invertible");
        for (int a = 0; a < n_; ++a)
            for (int b = 0; b < n_; ++b)
                for (int c = 0; c < n_; ++c)
                    if (mul(mul(a, b), c) != mul(a, mul(b, c))) throw MalformedGroup("table is not associative");
        if (names_.empty()) {
            names_.resize(n_);
            for (int a = 0; a < n_; ++a) names_[a] = a == e_ ? "e" : "g" + std::to_string(a);
        }
        if (static_cast<int>(names_.size()) != n_) throw MalformedGroup("wrong number of element names");
    }

    int order() const { return n_; }
    int identity() const { return e_; }
    int mul(int a, int b) const { return mul_[a * n_ + b]; }
    int inv(int a) const { return inv_[a]; }
    // ^g x = g x g^-1
    int conj(int g, int x) const { return mul(mul(g, x), inv_[g]); }
    const std::string& name(int a) const { return names_[a]; }
    const std::vector<std::string>& names() const { return names_; }
    const std::string& label() const { return label_; }
    void set_label(std::string s) { label_ = std::move(s); }
    const std::vector<int>& table() const { return mul_; }

    int element_order(int a) const {
        int k = 1;
        for (int x = a; x != e_; x = mul(x, a)) ++k;
        return k;
    }
    bool is_abelian() const {
        for (int a = 0; a < n_; ++a)
            for (int b = 0; b < a; ++b)
                if (mul(a, b) != mul(b, a)) return false;
        return true;
    }
    int find(const std::string& nm) const {
        for (int a = 0; a < n_; ++a)
            if (names_[a] == nm) return a;
        throw UnknownName("no element named " + nm + " in " + label_);
    }

private:
    int n_;
    std::vector<int> mul_;
    std::vector<int> inv_;
    std::vector<std::string> names_;
    std::string label_;
    int e_ = 0;
};

// Subgroups are sorted element lists.
using Subgroup = std::vector<int>;

inline bool contains(const Subgroup& h, int x) { return std::binary_search(h.begin(), h.end(), x); }

inline Subgroup generate(const Group& g, const std::vector<int>& gens) {
    std::vector<char> in(g.order(), 0);
    std::vector<int> elems{g.identity()};
    in[g.identity()] = 1;
    for (size_t k = 0; k < elems.size(); ++k)
        for (int s : gens) {
            int y = g.mul(elems[k], s);
            if (!in[y]) {
                in[y] = 1;
                elems.push_back(y);
            }
        }
    std::sort(elems.begin(), elems.end());
    return elems;
}

inline Subgroup conjugate(const Group& g, int x, const Subgroup& h) {
    Subgroup r;
    r.reserve(h.size());
    for (int a : h) r.push_back(g.conj(x, a));
    std::sort(r.begin(), r.end());
    return r;
}

inline Subgroup intersect(const Subgroup& a, const Subgroup& b) {
    Subgroup r;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(r));
    return r;
}

inline Subgroup whole(const Group& g) {
    Subgroup r(g.order());
    std::iota(r.begin(), r.end(), 0);
    return r;
}

inline Subgroup trivial_subgroup(const Group& g) { return {g.identity()}; }

inline bool is_subgroup_of(const Subgroup& k, const Subgroup& h) {
    return std::includes(h.begin(), h.end(), k.begin(), k.end());
}

inline Subgroup centralizer(const Group& g, const Subgroup& h) {
    Subgroup r;
    for (int x = 0; x < g.order(); ++x) {
        bool ok = true;
        for (int a : h) ok = ok && g.mul(x, a) == g.mul(a, x);
        if (ok) r.push_back(x);
    }
    return r;
}

inline Subgroup normalizer(const Group& g, const Subgroup& h) {
    Subgroup r;
    for (int x = 0; x < g.order(); ++x)
        if (conjugate(g, x, h) == h) r.push_back(x);
    return r;
}

// All subgroups, ordered by (order, element list).
inline std::vector<Subgroup> all_subgroups(const Group& g) {
    std::vector<Subgroup> subs;
    std::map<Subgroup, int> seen;
    auto add = [&](Subgroup s) {
        if (seen.count(s)) return false;
        seen.emplace(s, 0);
        subs.push_back(std::move(s));
        return true;
    };
    for (int x = 0; x < g.order(); ++x) add(generate(g, {x}));
    std::vector<Subgroup> cyclic = subs;
    for (size_t k = 0; k < subs.size(); ++k)
        for (const auto& c : cyclic) {
            if (is_subgroup_of(c, subs[k])) continue;
            Subgroup gens = subs[k];
            gens.insert(gens.end(), c.begin(), c.end());
            add(generate(g, gens));
        }
    std::sort(subs.begin(), subs.end(), [](const Subgroup& a, const Subgroup& b) {
        if (a.size() != b.size()) return a.size() < b.size();
        return a < b;
    });
    return subs;
}

// Representatives of K\G/H, each the smallest element of its double coset.
inline std::vector<int> double_coset_reps(const Group& g, const Subgroup& k, const Subgroup& h) {
    std::vector<char> seen(g.order(), 0);
    std::vector<int> reps;
    for (int x = 0; x < g.order(); ++x) {
        if (seen[x]) continue;
        reps.push_back(x);
        for (int a : k)
            for (int b : h) seen[g.mul(g.mul(a, x), b)] = 1;
    }
    return reps;
}

// Left coset representatives of G/H (smallest element of each coset), in increasing order.
inline std::vector<int> coset_reps(const Group& g, const Subgroup& h) {
    return double_coset_reps(g, trivial_subgroup(g), h);
}

// The group structure of a subgroup; element k of the result is h[k].
inline Group subgroup_group(const Group& g, const Subgroup& h, std::string label = "H") {
    int n = static_cast<int>(h.size());
    std::vector<int> pos(g.order(), -1);
    for (int k = 0; k < n; ++k) pos[h[k]] = k;
    std::vector<int> t(n * n);
    std::vector<std::string> names(n);
    for (int a = 0; a < n; ++a) {
        names[a] = g.name(h[a]);
        for (int b = 0; b < n; ++b) {
            int p = pos[g.mul(h[a], h[b])];
            if (p < 0) throw MalformedGroup("element list is not closed under multiplication");
            t[a * n + b] = p;
        }
    }
    return Group(n, std::move(t), std::move(names), std::move(label));
}

// Complete isomorphism invariant: the smallest multiplication table over all orderings
// obtained by breadth-first enumeration from a generating tuple of minimal length.
inline std::vector<int> canonical_form(const Group& g) {
    int n = g.order();
    if (n == 1) return {0};
    std::vector<int> best;
    for (int d = 1; d <= n; ++d) {
        std::vector<int> tup(d, 0);
        bool found = false;
        while (true) {
            std::vector<int> label(n, -1), order;
            order.reserve(n);
            label[g.identity()] = 0;
            order.push_back(g.identity());
            for (size_t k = 0; k < order.size(); ++k)
                for (int s : tup) {
                    int y = g.mul(order[k], s);
                    if (label[y] < 0) {
                        label[y] = static_cast<int>(order.size());
                        order.push_back(y);
                    }
                }
            if (static_cast<int>(order.size()) == n) {
                found = true;
                std::vector<int> t(n * n);
                for (int a = 0; a < n; ++a)
                    for (int b = 0; b < n; ++b) t[a * n + b] = label[g.mul(order[a], order[b])];
                if (best.empty() || t < best) best = std::move(t);
            }
            int pos = d - 1;
            while (pos >= 0 && ++tup[pos] == n) tup[pos--] = 0;
            if (pos < 0) break;
        }
        if (found) break;
    }
    return best;
}

// Order profile used to prune isomorphism search.
inline std::vector<int> order_profile(const Group& g) {
    std::vector<int> p;
    for (int a = 0; a < g.order(); ++a) p.push_back(g.element_order(a));
    std::sort(p.begin(), p.end());
    return p;
}

// Small generating set, greedily adding elements of largest order.
inline std::vector<int> generating_set(const Group& g) {
    std::vector<int> cand(g.order());
    std::iota(cand.begin(), cand.end(), 0);
    std::stable_sort(cand.begin(), cand.end(),
                     [&](int a, int b) { return g.element_order(a) > g.element_order(b); });
    std::vector<int> gens;
    Subgroup cur = trivial_subgroup(g);
    for (int x : cand) {
        if (static_cast<int>(cur.size()) == g.order()) break;
        if (contains(cur, x)) continue;
        gens.push_back(x);
        cur = generate(g, gens);
    }
    return gens;
}

// Isomorphism a -> b as an element map, or nothing.
inline std::optional<std::vector<int>> find_isomorphism(const Group& a, const Group& b) {
    if (a.order() != b.order()) return std::nullopt;
    if (order_profile(a) != order_profile(b)) return std::nullopt;
    int n = a.order();
    std::vector<int> gens = generating_set(a);
    std::vector<std::vector<int>> cands(gens.size());
    for (size_t k = 0; k < gens.size(); ++k)
        for (int y = 0; y < n; ++y)
            if (b.element_order(y) == a.element_order(gens[k])) cands[k].push_back(y);
    std::vector<int> img(gens.size());
    std::optional<std::vector<int>> result;
    auto attempt = [&]() -> bool {
        std::vector<int> phi(n, -1), order{a.identity()};
        phi[a.identity()] = b.identity();
        for (size_t k = 0; k < order.size(); ++k)
            for (size_t s = 0; s < gens.size(); ++s) {
                int x = a.mul(order[k], gens[s]);
                int y = b.mul(phi[order[k]], img[s]);
                if (phi[x] < 0) {
                    phi[x] = y;
                    order.push_back(x);
                } else if (phi[x] != y) {
                    return false;
                }
            }
        std::vector<char> hit(n, 0);
        for (int x = 0; x < n; ++x) {
            if (hit[phi[x]]) return false;
            hit[phi[x]] = 1;
        }
        for (int x = 0; x < n; ++x)
            for (int y = 0; y < n; ++y)
                if (phi[a.mul(x, y)] != b.mul(phi[x], phi[y])) return false;
        result = std::move(phi);
        return true;
    };
    auto rec = [&](auto&& self, size_t k) -> bool {
        if (k == gens.size()) return attempt();
        for (int y : cands[k]) {
            img[k] = y;
            if (self(self, k + 1)) return true;
        }
        return false;
    };
    rec(rec, 0);
    return result;
}

}  // namespace mackey2
