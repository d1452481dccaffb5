#pragma once

#include <gmpxx.h>

#include <algorithm>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <utility>
#include <vector>

namespace mackey2::poly {

// Dense polynomials, coefficient k is the coefficient of x^k; no trailing zeros.
using ZPoly = std::vector<mpz_class>;
using QPoly = std::vector<mpq_class>;

template <class P>
void trim(P& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

template <class P>
int degree(const P& p) {
    return static_cast<int>(p.size()) - 1;
}

inline QPoly to_q(const ZPoly& p) { return QPoly(p.begin(), p.end()); }

inline QPoly mul(const QPoly& a, const QPoly& b) {
    if (a.empty() || b.empty()) return {};
    QPoly r(a.size() + b.size() - 1);
    for (size_t i = 0; i < a.size(); ++i)
        if (a[i] != 0)
            for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    trim(r);
    return r;
}

inline QPoly sub(QPoly a, const QPoly& b) {
    if (a.size() < b.size()) a.resize(b.size());
    for (size_t k = 0; k < b.size(); ++k) a[k] -= b[k];
    trim(a);
    return a;
}

inline QPoly add(QPoly a, const QPoly& b) {
    if (a.size() < b.size()) a.resize(b.size());
    for (size_t k = 0; k < b.size(); ++k) a[k] += b[k];
    trim(a);
    return a;
}

inline std::pair<QPoly, QPoly> divmod(QPoly a, const QPoly& b) {
    if (b.empty()) throw std::domain_error("polynomial division by zero");
    trim(a);
    if (a.size() < b.size()) return {{}, a};
    QPoly q(a.size() - b.size() + 1);
    for (int k = degree(a) - degree(b); k >= 0; --k) {
        mpq_class c = a[k + b.size() - 1] / b.back();
        q[k] = c;
        if (c != 0)
            for (size_t j = 0; j < b.size(); ++j) a[k + j] -= c * b[j];
    }
    trim(a);
    trim(q);
    return {q, a};
}

inline QPoly monic(QPoly a) {
    if (a.empty()) return a;
    mpq_class l = a.back();
    for (auto& c : a) c /= l;
    return a;
}

inline QPoly gcd(QPoly a, QPoly b) {
    trim(a);
    trim(b);
    while (!b.empty()) {
        auto r = divmod(a, b).second;
        a = std::move(b);
        b = std::move(r);
    }
    return monic(a);
}

// s a + t b = gcd(a, b), monic.
inline void xgcd(const QPoly& a, const QPoly& b, QPoly& g, QPoly& s, QPoly& t) {
    QPoly r0 = a, r1 = b, s0{1}, s1{}, t0{}, t1{1};
    trim(r0);
    trim(r1);
    while (!r1.empty()) {
        auto [q, r] = divmod(r0, r1);
        r0 = std::move(r1);
        r1 = std::move(r);
        auto s2 = sub(s0, mul(q, s1));
        auto t2 = sub(t0, mul(q, t1));
        s0 = std::move(s1);
        s1 = std::move(s2);
        t0 = std::move(t1);
        t1 = std::move(t2);
    }
    mpq_class l = r0.back();
    g = monic(r0);
    s = s0;
    t = t0;
    for (auto& c : s) c /= l;
    for (auto& c : t) c /= l;
}

inline QPoly derivative(const QPoly& a) {
    QPoly d;
    for (size_t k = 1; k < a.size(); ++k) d.push_back(a[k] * static_cast<unsigned long>(k));
    trim(d);
    return d;
}

inline QPoly power(const QPoly& a, int e) {
    QPoly r{1};
    for (int k = 0; k < e; ++k) r = mul(r, a);
    return r;
}

// Primitive integer polynomial with positive leading coefficient, proportional to a.
inline ZPoly primitive(const QPoly& a) {
    mpz_class l = 1;
    for (const auto& c : a) l = lcm(l, mpz_class(c.get_den()));
    ZPoly z;
    for (const auto& c : a) z.push_back(mpz_class(c * l));
    mpz_class g = 0;
    for (const auto& c : z) g = gcd(g, c);
    if (g == 0) return {};
    if (z.back() < 0) g = -g;
    for (auto& c : z) c /= g;
    return z;
}

// ---------------------------------------------------------------------------
// Arithmetic over F_p, p small enough that products fit in 64 bits.

namespace modp {

using Poly = std::vector<int64_t>;

inline void trim(Poly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

inline int64_t inv(int64_t a, int64_t p) {
    int64_t r = 1, b = ((a % p) + p) % p, e = p - 2;
    while (e) {
        if (e & 1) r = r * b % p;
        b = b * b % p;
        e >>= 1;
    }
    return r;
}

inline Poly reduce(const ZPoly& a, int64_t p) {
    Poly r;
    for (const auto& c : a) {
        mpz_class m = c % p;
        if (m < 0) m += p;
        r.push_back(m.get_si());
    }
    trim(r);
    return r;
}

inline Poly mul(const Poly& a, const Poly& b, int64_t p) {
    if (a.empty() || b.empty()) return {};
    Poly r(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + a[i] * b[j]) % p;
    trim(r);
    return r;
}

inline Poly sub(Poly a, const Poly& b, int64_t p) {
    if (a.size() < b.size()) a.resize(b.size(), 0);
    for (size_t k = 0; k < b.size(); ++k) a[k] = ((a[k] - b[k]) % p + p) % p;
    trim(a);
    return a;
}

inline Poly add(Poly a, const Poly& b, int64_t p) {
    if (a.size() < b.size()) a.resize(b.size(), 0);
    for (size_t k = 0; k < b.size(); ++k) a[k] = (a[k] + b[k]) % p;
    trim(a);
    return a;
}

inline std::pair<Poly, Poly> divmod(Poly a, const Poly& b, int64_t p) {
    trim(a);
    if (a.size() < b.size()) return {{}, a};
    int64_t li = inv(b.back(), p);
    Poly q(a.size() - b.size() + 1, 0);
    for (int k = static_cast<int>(a.size() - b.size()); k >= 0; --k) {
        int64_t c = a[k + b.size() - 1] * li % p;
        q[k] = c;
        if (c)
            for (size_t j = 0; j < b.size(); ++j) a[k + j] = ((a[k + j] - c * b[j]) % p + p) % p;
    }
    trim(a);
    trim(q);
    return {q, a};
}

inline Poly monic(Poly a, int64_t p) {
    if (a.empty()) return a;
    int64_t li = inv(a.back(), p);
    for (auto& c : a) c = c * li % p;
    return a;
}

inline Poly gcd(Poly a, Poly b, int64_t p) {
    trim(a);
    trim(b);
    while (!b.empty()) {
        auto r = divmod(a, b, p).second;
        a = std::move(b);
        b = std::move(r);
    }
    return monic(a, p);
}

inline void xgcd(const Poly& a, const Poly& b, int64_t p, Poly& g, Poly& s, Poly& t) {
    Poly r0 = a, r1 = b, s0{1}, s1{}, t0{}, t1{1};
    while (!r1.empty()) {
        auto [q, r] = divmod(r0, r1, p);
        r0 = std::move(r1);
        r1 = std::move(r);
        auto s2 = sub(s0, mul(q, s1, p), p);
        auto t2 = sub(t0, mul(q, t1, p), p);
        s0 = std::move(s1);
        s1 = std::move(s2);
        t0 = std::move(t1);
        t1 = std::move(t2);
    }
    int64_t li = inv(r0.back(), p);
    g = monic(r0, p);
    s = s0;
    t = t0;
    for (auto& c : s) c = c * li % p;
    for (auto& c : t) c = c * li % p;
}

inline Poly derivative(const Poly& a, int64_t p) {
    Poly d;
    for (size_t k = 1; k < a.size(); ++k) d.push_back(a[k] * static_cast<int64_t>(k % p) % p);
    trim(d);
    return d;
}

// Distinct monic irreducible factors of a monic squarefree f, by Berlekamp's algorithm.
inline std::vector<Poly> berlekamp(const Poly& f, int64_t p) {
    int n = static_cast<int>(f.size()) - 1;
    if (n <= 1) return {f};
    // rows: x^{ip} mod f
    std::vector<Poly> rows;
    Poly xp{0, 1};
    {
        Poly r{1}, b = divmod(xp, f, p).second;
        int64_t e = p;
        while (e) {
            if (e & 1) r = divmod(mul(r, b, p), f, p).second;
            b = divmod(mul(b, b, p), f, p).second;
            e >>= 1;
        }
        xp = r;
    }
    Poly cur{1};
    for (int i = 0; i < n; ++i) {
        rows.push_back(cur);
        cur = divmod(mul(cur, xp, p), f, p).second;
    }
    // kernel of (Q - I)^T: vectors v with sum_i v_i (row_i - e_i) = 0, i.e. v(x^p) = v(x) mod f
    std::vector<std::vector<int64_t>> m(n, std::vector<int64_t>(n, 0));  // m[col j][i]
    for (int i = 0; i < n; ++i) {
        for (size_t j = 0; j < rows[i].size(); ++j) m[j][i] = rows[i][j];
        m[i][i] = (m[i][i] - 1 + p) % p;
    }
    std::vector<int> pivot_col;
    int r = 0;
    std::vector<int> where(n, -1);
    for (int c = 0; c < n && r < n; ++c) {
        int s = -1;
        for (int k = r; k < n; ++k)
            if (m[k][c]) s = k;
        if (s < 0) continue;
        std::swap(m[s], m[r]);
        int64_t li = inv(m[r][c], p);
        for (auto& x : m[r]) x = x * li % p;
        for (int k = 0; k < n; ++k)
            if (k != r && m[k][c]) {
                int64_t f2 = m[k][c];
                for (int j = 0; j < n; ++j) m[k][j] = ((m[k][j] - f2 * m[r][j]) % p + p) % p;
            }
        where[c] = r++;
    }
    std::vector<Poly> kernel;
    for (int c = 0; c < n; ++c) {
        if (where[c] >= 0) continue;
        Poly v(n, 0);
        v[c] = 1;
        for (int c2 = 0; c2 < n; ++c2)
            if (where[c2] >= 0) v[c2] = (p - m[where[c2]][c]) % p;
        trim(v);
        kernel.push_back(v);
    }
    size_t count = kernel.size();
    std::vector<Poly> factors{f};
    for (const auto& v : kernel) {
        if (factors.size() == count) break;
        if (v.size() <= 1) continue;
        std::vector<Poly> next;
        for (const auto& g : factors) {
            if (g.size() <= 2) {
                next.push_back(g);
                continue;
            }
            Poly rest = g;
            for (int64_t s = 0; s < p && rest.size() > 2; ++s) {
                Poly w = v;
                w[0] = ((w[0] - s) % p + p) % p;
                trim(w);
                Poly d = gcd(rest, w, p);
                if (d.size() > 1 && d.size() < rest.size()) {
                    next.push_back(d);
                    rest = divmod(rest, d, p).first;
                }
            }
            next.push_back(monic(rest, p));
        }
        factors = std::move(next);
    }
    return factors;
}

}  // namespace modp

// ---------------------------------------------------------------------------
// Factorisation over Z of a primitive squarefree polynomial (Zassenhaus).

namespace detail {

inline mpz_class mod_sym(const mpz_class& a, const mpz_class& m) {
    mpz_class r = a % m;
    if (r < 0) r += m;
    if (2 * r > m) r -= m;
    return r;
}

inline ZPoly zmul_mod(const ZPoly& a, const ZPoly& b, const mpz_class& m) {
    if (a.empty() || b.empty()) return {};
    ZPoly r(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    for (auto& c : r) {
        c %= m;
        if (c < 0) c += m;
    }
    trim(r);
    return r;
}

// Exact division of integer polynomials; false if b does not divide a.
inline bool zdivide(const ZPoly& a, const ZPoly& b, ZPoly& q) {
    ZPoly r = a;
    trim(r);
    if (r.size() < b.size()) return false;
    q.assign(r.size() - b.size() + 1, 0);
    for (int k = static_cast<int>(r.size() - b.size()); k >= 0; --k) {
        const mpz_class& top = r[k + b.size() - 1];
        if (top % b.back() != 0) return false;
        mpz_class c = top / b.back();
        q[k] = c;
        if (c != 0)
            for (size_t j = 0; j < b.size(); ++j) r[k + j] -= c * b[j];
    }
    for (const auto& c : r)
        if (c != 0) return false;
    trim(q);
    return true;
}

inline modp::Poly to_modp(const ZPoly& a, int64_t p) { return modp::reduce(a, p); }

inline ZPoly from_modp(const modp::Poly& a) {
    ZPoly r;
    for (auto c : a) r.push_back(mpz_class(static_cast<long>(c)));
    return r;
}

// Lift f = g h (mod p), all monic, to f = g h (mod p^k).
inline void hensel(const ZPoly& f, ZPoly& g, ZPoly& h, int64_t p, int k) {
    modp::Poly gg, s, t;
    modp::xgcd(to_modp(g, p), to_modp(h, p), p, gg, s, t);
    mpz_class pj = p;
    for (int j = 1; j < k; ++j) {
        ZPoly gh(g.size() + h.size() - 1, 0);
        for (size_t a = 0; a < g.size(); ++a)
            for (size_t b = 0; b < h.size(); ++b) gh[a + b] += g[a] * h[b];
        ZPoly e(std::max(f.size(), gh.size()), 0);
        for (size_t a = 0; a < f.size(); ++a) e[a] += f[a];
        for (size_t a = 0; a < gh.size(); ++a) e[a] -= gh[a];
        for (auto& c : e) c /= pj;
        auto em = to_modp(e, p);
        auto et = modp::mul(em, t, p);
        auto [q, dg] = modp::divmod(et, to_modp(g, p), p);
        auto dh = modp::add(modp::mul(em, s, p), modp::mul(q, to_modp(h, p), p), p);
        for (size_t a = 0; a < dg.size(); ++a) g[a] += pj * dg[a];
        if (h.size() < dh.size()) h.resize(dh.size(), 0);
        for (size_t a = 0; a < dh.size(); ++a) h[a] += pj * dh[a];
        pj *= p;
        for (auto& c : g) c %= pj, c += (c < 0 ? pj : mpz_class(0));
        for (auto& c : h) c %= pj, c += (c < 0 ? pj : mpz_class(0));
    }
}

// Factors of a monic squarefree integer polynomial.
inline std::vector<ZPoly> factor_monic(const ZPoly& f) {
    int n = degree(f);
    if (n <= 1) return {f};
    // prime with f squarefree mod p and few modular factors
    static const int primes[] = {3,  5,  7,  11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53,
                                 59, 61, 67, 71, 73, 79, 83, 89, 97, 101, 103, 107, 109, 113, 127};
    int64_t best_p = 0;
    std::vector<modp::Poly> best;
    int tried = 0;
    for (int p : primes) {
        auto fp = to_modp(f, p);
        if (static_cast<int>(fp.size()) != n + 1) continue;
        if (modp::gcd(fp, modp::derivative(fp, p), p).size() != 1) continue;
        auto fs = modp::berlekamp(fp, p);
        if (best_p == 0 || fs.size() < best.size()) {
            best_p = p;
            best = fs;
        }
        if (best.size() == 1 || ++tried >= 6) break;
    }
    if (best_p == 0) throw std::runtime_error("factor: no suitable prime");
    if (best.size() == 1) return {f};
    // coefficient bound for factors
    mpz_class norm2 = 0;
    for (const auto& c : f) norm2 += c * c;
    mpz_class bound = sqrt(norm2) + 1;
    bound <<= n;
    int k = 1;
    mpz_class pk = best_p;
    while (pk <= 2 * bound) {
        pk *= best_p;
        ++k;
    }
    // lift all modular factors, peeling one at a time
    std::vector<ZPoly> lifted;
    ZPoly rest = f;
    for (auto& c : rest) c %= pk, c += (c < 0 ? pk : mpz_class(0));
    for (size_t a = 0; a + 1 < best.size(); ++a) {
        ZPoly g = from_modp(best[a]);
        modp::Poly hp{1};
        for (size_t b = a + 1; b < best.size(); ++b) hp = modp::mul(hp, best[b], best_p);
        ZPoly h = from_modp(hp);
        hensel(rest, g, h, best_p, k);
        lifted.push_back(g);
        rest = h;
    }
    lifted.push_back(rest);
    // recombination
    std::vector<ZPoly> out;
    ZPoly cur = f;
    std::vector<int> alive(lifted.size());
    for (size_t a = 0; a < lifted.size(); ++a) alive[a] = static_cast<int>(a);
    for (size_t s = 1; 2 * s <= alive.size();) {
        bool found = false;
        std::vector<int> pick(s);
        std::function<bool(size_t, size_t)> rec = [&](size_t start, size_t depth) -> bool {
            if (depth == s) {
                ZPoly prod{1};
                for (int x : pick) prod = zmul_mod(prod, lifted[x], pk);
                for (auto& c : prod) c = mod_sym(c, pk);
                trim(prod);
                ZPoly q;
                if (zdivide(cur, prod, q)) {
                    out.push_back(prod);
                    cur = q;
                    std::vector<int> keep;
                    for (int x : alive)
                        if (std::find(pick.begin(), pick.end(), x) == pick.end()) keep.push_back(x);
                    alive = keep;
                    return true;
                }
                return false;
            }
            for (size_t a = start; a < alive.size(); ++a) {
                pick[depth] = alive[a];
                if (rec(a + 1, depth + 1)) return true;
            }
            return false;
        };
        found = rec(0, 0);
        if (!found) ++s;
    }
    out.push_back(cur);
    return out;
}

}  // namespace detail

// Irreducible factors over Q of a nonzero polynomial with their multiplicities;
// factors are primitive integer polynomials with positive leading coefficient.
inline std::vector<std::pair<ZPoly, int>> factor(const QPoly& a) {
    std::vector<std::pair<ZPoly, int>> out;
    QPoly f = monic(a);
    if (degree(f) < 1) return out;
    // Yun's squarefree decomposition
    std::vector<std::pair<QPoly, int>> sqf;
    {
        QPoly d = derivative(f);
        QPoly b = gcd(f, d);
        QPoly c = divmod(f, b).first;
        QPoly e = sub(divmod(d, b).first, derivative(c));
        for (int m = 1; degree(c) >= 1; ++m) {
            QPoly y = gcd(c, e);
            if (degree(y) >= 1) sqf.push_back({y, m});
            c = divmod(c, y).first;
            e = sub(divmod(e, y).first, derivative(c));
        }
    }
    for (const auto& [q, m] : sqf) {
        ZPoly z = primitive(q);
        // monic transform lc^{n-1} z(x/lc)
        int n = degree(z);
        mpz_class lc = z.back();
        ZPoly g(z.size());
        for (int k = 0; k < n; ++k) {
            mpz_class t;
            mpz_pow_ui(t.get_mpz_t(), lc.get_mpz_t(), n - 1 - k);
            g[k] = z[k] * t;
        }
        g[n] = 1;
        for (const auto& h : detail::factor_monic(g)) {
            // back: h(lc x)
            QPoly back(h.size());
            mpz_class t = 1;
            for (size_t k = 0; k < h.size(); ++k) {
                back[k] = mpq_class(h[k] * t);
                t *= lc;
            }
            out.push_back({primitive(back), m});
        }
    }
    std::sort(out.begin(), out.end(), [](const auto& x, const auto& y) {
        if (x.first.size() != y.first.size()) return x.first.size() < y.first.size();
        return x.first < y.first;
    });
    return out;
}

inline bool is_irreducible(const QPoly& a) {
    auto f = factor(a);
    return f.size() == 1 && f[0].second == 1;
}

}  // namespace mackey2::poly
