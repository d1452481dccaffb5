#pragma once

#include <gmpxx.h>

#include <functional>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "poly.hpp"
#include "rings.hpp"

namespace mackey2 {

using QVec = std::vector<mpq_class>;

// Row echelon span of rational vectors.
inline int rank(std::vector<QVec> rows) {
    if (rows.empty()) return 0;
    size_t m = rows[0].size();
    int r = 0;
    for (size_t c = 0; c < m && r < static_cast<int>(rows.size()); ++c) {
        int s = -1;
        for (int k = r; k < static_cast<int>(rows.size()); ++k)
            if (rows[k][c] != 0) {
                s = k;
                break;
            }
        if (s < 0) continue;
        std::swap(rows[s], rows[r]);
        for (int k = r + 1; k < static_cast<int>(rows.size()); ++k) {
            if (rows[k][c] == 0) continue;
            mpq_class f = rows[k][c] / rows[r][c];
            for (size_t j = c; j < m; ++j) rows[k][j] -= f * rows[r][j];
        }
        ++r;
    }
    return r;
}

// A commutative algebra over Q given by structure constants in a basis.
struct Algebra {
    int n = 0;
    std::vector<std::vector<QVec>> c;  // e_i e_j = sum_k c[i][j][k] e_k
    QVec one;

    QVec mul(const QVec& x, const QVec& y) const {
        QVec z(n);
        for (int i = 0; i < n; ++i) {
            if (x[i] == 0) continue;
            for (int j = 0; j < n; ++j) {
                if (y[j] == 0) continue;
                mpq_class s = x[i] * y[j];
                for (int k = 0; k < n; ++k)
                    if (c[i][j][k] != 0) z[k] += s * c[i][j][k];
            }
        }
        return z;
    }

    QVec basis(int k) const {
        QVec v(n);
        v[k] = 1;
        return v;
    }
};

inline Algebra algebra_of(const Ring& r) {
    if (!is_commutative(r)) throw Mismatch("algebra: multiplication table of " + r.name + " is not commutative");
    Algebra a;
    a.n = r.rank();
    a.c.assign(a.n, std::vector<QVec>(a.n, QVec(a.n)));
    for (int i = 0; i < a.n; ++i)
        for (int j = 0; j < a.n; ++j)
            for (int k = 0; k < a.n; ++k) a.c[i][j][k] = r.constants[i][j][k];
    a.one = a.basis(r.unit);
    return a;
}

inline QVec axpy(const mpq_class& s, const QVec& x, QVec y) {
    for (size_t k = 0; k < y.size(); ++k) y[k] += s * x[k];
    return y;
}

// Dimension of e A.
inline int ideal_dimension(const Algebra& a, const QVec& e) {
    std::vector<QVec> rows;
    for (int k = 0; k < a.n; ++k) rows.push_back(a.mul(e, a.basis(k)));
    return rank(rows);
}

// Minimal polynomial of y in the algebra e A with unit e (y in eA).
inline poly::QPoly minimal_polynomial(const Algebra& a, const QVec& y, const QVec& e) {
    // reduced vectors with their expressions in powers of y
    std::vector<QVec> red;
    std::vector<poly::QPoly> expr;
    std::vector<int> piv;
    QVec p = e;
    for (int k = 0;; ++k) {
        QVec v = p;
        poly::QPoly x(k + 1);
        x[k] = 1;
        for (size_t r = 0; r < red.size(); ++r) {
            if (v[piv[r]] == 0) continue;
            mpq_class f = v[piv[r]] / red[r][piv[r]];
            v = axpy(-f, red[r], v);
            x = poly::sub(x, poly::mul(poly::QPoly{f}, expr[r]));
        }
        int pv = -1;
        for (int j = 0; j < a.n; ++j)
            if (v[j] != 0) {
                pv = j;
                break;
            }
        if (pv < 0) return poly::monic(x);
        red.push_back(v);
        expr.push_back(x);
        piv.push_back(pv);
        p = a.mul(p, y);
    }
}

inline QVec evaluate(const Algebra& a, const poly::QPoly& f, const QVec& y, const QVec& e) {
    QVec acc(a.n);
    for (int k = poly::degree(f); k >= 0; --k) acc = axpy(f[k], e, a.mul(acc, y));
    return acc;
}

inline bool is_idempotent(const Algebra& a, const QVec& e) { return a.mul(e, e) == e; }

// Complete set of primitive idempotents of a commutative semisimple Q-algebra. Each
// returned e is certified primitive by exhibiting y in eA with irreducible minimal
// polynomial of degree dim eA, so that eA is a field.
inline std::vector<QVec> primitive_idempotents(const Algebra& a) {
    std::vector<QVec> pending{a.one}, done;
    std::mt19937 rng(20240611u);
    while (!pending.empty()) {
        QVec e = pending.back();
        pending.pop_back();
        int d = ideal_dimension(a, e);
        if (d == 1) {
            done.push_back(e);
            continue;
        }
        bool settled = false;
        for (int attempt = 0; attempt < a.n + 200 && !settled; ++attempt) {
            QVec y(a.n);
            if (attempt < a.n) {
                y = a.mul(e, a.basis(attempt));
            } else {
                std::uniform_int_distribution<int> coef(-4, 4);
                for (int k = 0; k < a.n; ++k) y = axpy(coef(rng), a.mul(e, a.basis(k)), y);
            }
            auto m = minimal_polynomial(a, y, e);
            auto fs = poly::factor(m);
            for (const auto& f : fs)
                if (f.second > 1) throw Error("idempotents: the algebra is not semisimple");
            if (fs.size() > 1) {
                for (size_t i = 0; i < fs.size(); ++i) {
                    auto pi = poly::to_q(fs[i].first);
                    auto mi = poly::divmod(m, pi).first;
                    poly::QPoly g, s, t;
                    poly::xgcd(mi, pi, g, s, t);
                    auto ei = poly::divmod(poly::mul(s, mi), m).second;
                    pending.push_back(evaluate(a, ei, y, e));
                }
                settled = true;
            } else if (poly::degree(m) == d) {
                done.push_back(e);
                settled = true;
            }
        }
        if (!settled) throw Error("idempotents: could not certify primitivity");
    }
    std::sort(done.begin(), done.end());
    return done;
}

// Minimal integral sums of the given rational idempotents, found by splitting parts along
// integral proper subsums located with a meet-in-the-middle search. Exponential; used as a
// cross-check of integral_blocks.
inline std::vector<QVec> integral_blocks_by_search(const Algebra& a, const std::vector<QVec>& prim) {
    mpz_class den = 1;
    for (const auto& e : prim)
        for (const auto& x : e) den = lcm(den, mpz_class(x.get_den()));
    // residues of den * e_i modulo den
    std::vector<std::vector<mpz_class>> w;
    for (const auto& e : prim) {
        std::vector<mpz_class> r;
        for (const auto& x : e) {
            mpz_class v = mpz_class(x * den) % den;
            if (v < 0) v += den;
            r.push_back(v);
        }
        w.push_back(std::move(r));
    }
    auto add_into = [&](std::vector<mpz_class>& s, const std::vector<mpz_class>& x, int sign) {
        for (size_t k = 0; k < s.size(); ++k) {
            s[k] += sign * x[k];
            s[k] %= den;
            if (s[k] < 0) s[k] += den;
        }
    };
    // a nonempty proper subset S of part with integral sum, or empty
    auto find_split = [&](const std::vector<int>& part) -> std::vector<int> {
        std::vector<int> rest(part.begin() + 1, part.end());
        size_t h = rest.size() / 2;
        std::vector<int> left(rest.begin(), rest.begin() + h), right(rest.begin() + h, rest.end());
        if (left.size() > 18 || right.size() > 18) throw Error("blocks: too many rational idempotents");
        std::map<std::vector<mpz_class>, uint64_t> table;
        std::vector<mpz_class> s(a.n, 0);
        for (uint64_t mask = 0; mask < (uint64_t{1} << left.size()); ++mask) {
            std::fill(s.begin(), s.end(), 0);
            for (size_t k = 0; k < left.size(); ++k)
                if (mask >> k & 1) add_into(s, w[left[k]], 1);
            table.emplace(s, mask);
        }
        for (uint64_t mask = 0; mask < (uint64_t{1} << right.size()); ++mask) {
            std::fill(s.begin(), s.end(), 0);
            for (size_t k = 0; k < right.size(); ++k)
                if (mask >> k & 1) add_into(s, w[right[k]], -1);
            auto it = table.find(s);
            if (it == table.end()) continue;
            if (mask == 0 && it->second == 0) {
                // the empty pair; look for another left subset with zero sum
                continue;
            }
            std::vector<int> out;
            for (size_t k = 0; k < left.size(); ++k)
                if (it->second >> k & 1) out.push_back(left[k]);
            for (size_t k = 0; k < right.size(); ++k)
                if (mask >> k & 1) out.push_back(right[k]);
            return out;
        }
        // left-only zero sums are shadowed by the empty set in the table; search them directly
        for (uint64_t mask = 1; mask < (uint64_t{1} << left.size()); ++mask) {
            std::fill(s.begin(), s.end(), 0);
            for (size_t k = 0; k < left.size(); ++k)
                if (mask >> k & 1) add_into(s, w[left[k]], 1);
            if (std::all_of(s.begin(), s.end(), [](const mpz_class& x) { return x == 0; })) {
                std::vector<int> out;
                for (size_t k = 0; k < left.size(); ++k)
                    if (mask >> k & 1) out.push_back(left[k]);
                return out;
            }
        }
        return {};
    };
    std::vector<std::vector<int>> todo{{}}, blocks;
    for (size_t k = 0; k < prim.size(); ++k) todo[0].push_back(static_cast<int>(k));
    while (!todo.empty()) {
        auto part = todo.back();
        todo.pop_back();
        auto s = part.size() > 1 ? find_split(part) : std::vector<int>{};
        if (s.empty()) {
            blocks.push_back(part);
            continue;
        }
        std::vector<int> c;
        for (int x : part)
            if (std::find(s.begin(), s.end(), x) == s.end()) c.push_back(x);
        todo.push_back(s);
        todo.push_back(c);
    }
    std::vector<QVec> out;
    for (const auto& b : blocks) {
        QVec e(a.n);
        for (int k : b)
            for (int j = 0; j < a.n; ++j) e[j] += prim[k][j];
        out.push_back(e);
    }
    std::sort(out.begin(), out.end());
    return out;
}

namespace detail {

// Z-basis of {x in Z^n : M x = 0}, by unimodular column reduction.
inline std::vector<std::vector<mpz_class>> integer_kernel(const std::vector<std::vector<mpz_class>>& m, int n) {
    int rows = static_cast<int>(m.size());
    // columns of [M; I]
    std::vector<std::vector<mpz_class>> col(n, std::vector<mpz_class>(rows + n, 0));
    for (int c = 0; c < n; ++c) {
        for (int r = 0; r < rows; ++r) col[c][r] = m[r][c];
        col[c][rows + c] = 1;
    }
    int piv = 0;
    for (int r = 0; r < rows && piv < n; ++r) {
        while (true) {
            int best = -1;
            for (int c = piv; c < n; ++c)
                if (col[c][r] != 0 && (best < 0 || abs(col[c][r]) < abs(col[best][r]))) best = c;
            if (best < 0) break;
            std::swap(col[piv], col[best]);
            bool done = true;
            for (int c = piv + 1; c < n; ++c) {
                if (col[c][r] == 0) continue;
                mpz_class q;
                mpz_fdiv_q(q.get_mpz_t(), col[c][r].get_mpz_t(), col[piv][r].get_mpz_t());
                for (int k = 0; k < rows + n; ++k) col[c][k] -= q * col[piv][k];
                if (col[c][r] != 0) done = false;
            }
            if (done) {
                ++piv;
                break;
            }
        }
    }
    std::vector<std::vector<mpz_class>> out;
    for (int c = piv; c < n; ++c) out.emplace_back(col[c].begin() + rows, col[c].end());
    return out;
}

inline int rank_mod_p(const std::vector<std::vector<mpz_class>>& vs, int n, long p) {
    std::vector<std::vector<long>> rows;
    for (const auto& v : vs) {
        std::vector<long> r(n);
        for (int k = 0; k < n; ++k) {
            mpz_class x = v[k] % p;
            if (x < 0) x += p;
            r[k] = x.get_si();
        }
        rows.push_back(std::move(r));
    }
    int rk = 0;
    for (int c = 0; c < n && rk < static_cast<int>(rows.size()); ++c) {
        int s = -1;
        for (int k = rk; k < static_cast<int>(rows.size()); ++k)
            if (rows[k][c]) {
                s = k;
                break;
            }
        if (s < 0) continue;
        std::swap(rows[s], rows[rk]);
        long inv = poly::modp::inv(rows[rk][c], p);
        for (auto& x : rows[rk]) x = x * inv % p;
        for (int k = rk + 1; k < static_cast<int>(rows.size()); ++k) {
            long f = rows[k][c];
            if (!f) continue;
            for (int j = c; j < n; ++j) rows[k][j] = ((rows[k][j] - f * rows[rk][j]) % p + p) % p;
        }
        ++rk;
    }
    return rk;
}

inline std::vector<long> prime_factors(mpz_class d) {
    std::vector<long> ps;
    for (long p = 2; d > 1; ++p) {
        if (p * p > d) {
            if (!d.fits_slong_p()) throw Error("blocks: denominator has a large prime factor");
            ps.push_back(d.get_si());
            break;
        }
        if (d % p == 0) {
            ps.push_back(p);
            while (d % p == 0) d /= p;
        }
    }
    return ps;
}

}  // namespace detail

// Primitive idempotents of the Z-form, as sums of the rational primitive idempotents. The ring
// structure is integral in the given basis; P_i = {x in Z^n : e_i x = 0} is the kernel of the
// projection to the i-th factor. Factors i and j lie in one block iff, for some prime p dividing
// the denominators, a maximal ideal contains P_i + P_j + pR, i.e. (P_i + P_j) mod p is proper.
inline std::vector<QVec> integral_blocks(const Algebra& a, const std::vector<QVec>& prim) {
    int r = static_cast<int>(prim.size());
    mpz_class den = 1;
    for (const auto& e : prim)
        for (const auto& x : e) den = lcm(den, mpz_class(x.get_den()));
    std::vector<std::vector<std::vector<mpz_class>>> ker;
    for (const auto& e : prim) {
        std::vector<std::vector<mpz_class>> m(a.n, std::vector<mpz_class>(a.n));
        for (int k = 0; k < a.n; ++k) {
            auto col = a.mul(e, a.basis(k));
            for (int j = 0; j < a.n; ++j) m[j][k] = mpz_class(col[j] * den);
        }
        ker.push_back(detail::integer_kernel(m, a.n));
    }
    std::vector<int> parent(r);
    for (int k = 0; k < r; ++k) parent[k] = k;
    std::function<int(int)> root = [&](int x) { return parent[x] == x ? x : parent[x] = root(parent[x]); };
    for (long p : detail::prime_factors(den))
        for (int i = 0; i < r; ++i)
            for (int j = i + 1; j < r; ++j) {
                if (root(i) == root(j)) continue;
                auto both = ker[i];
                both.insert(both.end(), ker[j].begin(), ker[j].end());
                if (detail::rank_mod_p(both, a.n, p) < a.n) parent[root(i)] = root(j);
            }
    std::map<int, QVec> sums;
    for (int k = 0; k < r; ++k) {
        auto& e = sums[root(k)];
        if (e.empty()) e.assign(a.n, 0);
        e = axpy(1, prim[k], e);
    }
    std::vector<QVec> out;
    for (auto& [k, e] : sums) out.push_back(e);
    std::sort(out.begin(), out.end());
    return out;
}

// ---------------------------------------------------------------------------
// Checks on idempotent families.

struct IdempotentReport {
    bool complete = false;    // sum is 1
    bool orthogonal = false;  // e_i e_j = 0 for i != j, e_i^2 = e_i
    bool primitive = false;   // no idempotent strictly below any member, over the same coefficients
    bool all() const { return complete && orthogonal && primitive; }
};

// Rational primitivity: e A is a field, witnessed by an element with irreducible minimal polynomial
// of full degree. Integral primitivity: no proper subsum of the rational primitives below e is integral.
inline IdempotentReport check_idempotents(const Algebra& a, const std::vector<QVec>& es, bool integral) {
    IdempotentReport r;
    QVec sum(a.n);
    for (const auto& e : es) sum = axpy(1, e, sum);
    r.complete = sum == a.one;
    r.orthogonal = true;
    for (size_t i = 0; i < es.size(); ++i)
        for (size_t j = 0; j < es.size(); ++j) {
            auto p = a.mul(es[i], es[j]);
            if (i == j ? p != es[i] : std::any_of(p.begin(), p.end(), [](const mpq_class& x) { return x != 0; }))
                r.orthogonal = false;
        }
    r.primitive = true;
    if (!integral) {
        for (const auto& e : es) {
            if (std::all_of(e.begin(), e.end(), [](const mpq_class& x) { return x == 0; })) {
                r.primitive = false;
                continue;
            }
            int d = ideal_dimension(a, e);
            bool field = d == 1;
            for (int k = 0; k < a.n && !field; ++k) {
                auto m = minimal_polynomial(a, a.mul(e, a.basis(k)), e);
                field = poly::degree(m) == d && poly::is_irreducible(m);
            }
            std::mt19937 rng(7u);
            std::uniform_int_distribution<int> coef(-4, 4);
            for (int t = 0; t < 200 && !field; ++t) {
                QVec y(a.n);
                for (int k = 0; k < a.n; ++k) y = axpy(coef(rng), a.mul(e, a.basis(k)), y);
                auto m = minimal_polynomial(a, y, e);
                field = poly::degree(m) == d && poly::is_irreducible(m);
            }
            r.primitive = r.primitive && field;
        }
    } else {
        for (const auto& e : es) {
            if (!std::all_of(e.begin(), e.end(), [](const mpq_class& x) { return x.get_den() == 1; }))
                r.primitive = false;
        }
        auto prim = primitive_idempotents(a);
        auto has_integral_proper_subsum = [&](const std::vector<QVec>& xs) {
            if (xs.size() > 36) return integral_blocks(a, xs).size() != 1;
            if (xs.size() > 12) return integral_blocks_by_search(a, xs).size() != 1;
            for (uint32_t mask = 1; mask + 1 < (1u << xs.size()); ++mask) {
                QVec s(a.n);
                for (size_t k = 0; k < xs.size(); ++k)
                    if (mask >> k & 1) s = axpy(1, xs[k], s);
                if (std::all_of(s.begin(), s.end(), [](const mpq_class& x) { return x.get_den() == 1; })) return true;
            }
            return false;
        };
        for (const auto& e : es) {
            std::vector<QVec> below;
            for (const auto& p : prim)
                if (a.mul(e, p) == p) below.push_back(p);
            if (below.empty() || has_integral_proper_subsum(below)) r.primitive = false;
        }
    }
    return r;
}

}  // namespace mackey2
