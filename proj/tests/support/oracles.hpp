#pragma once

// Reference computations written directly on mpq_class vectors. They share
// no code with the library so that agreement means something.

#include <algorithm>
#include <cstddef>
#include <functional>
#include <random>
#include <vector>

#include <gmpxx.h>

namespace oracle {

using Q = mpq_class;
/// Coefficients of z^0..z^N.
using Poly = std::vector<Q>;

inline Poly mul(const Poly& a, const Poly& b)
{
    const std::size_t n = std::min(a.size(), b.size());
    Poly out(n, Q(0));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; i + j < n; ++j) out[i + j] += a[i] * b[j];
    }
    return out;
}

inline Poly add(Poly a, const Poly& b)
{
    a.resize(std::min(a.size(), b.size()));
    for (std::size_t i = 0; i < a.size(); ++i) a[i] += b[i];
    return a;
}

inline Poly inverse(const Poly& a)
{
    Poly out(a.size(), Q(0));
    out[0] = 1 / a[0];
    for (std::size_t n = 1; n < a.size(); ++n) {
        Q s = 0;
        for (std::size_t k = 1; k <= n; ++k) s += a[k] * out[n - k];
        out[n] = -s / a[0];
    }
    return out;
}

/// f(g) with g(0) = 0, by summing powers of g.
inline Poly compose(const Poly& f, const Poly& g)
{
    const std::size_t n = std::min(f.size(), g.size());
    Poly out(n, Q(0));
    Poly power(n, Q(0));
    power[0] = 1;
    for (std::size_t k = 0; k < n; ++k) {
        for (std::size_t i = 0; i < n; ++i) out[i] += f[k] * power[i];
        power = mul(power, Poly(g.begin(), g.begin() + static_cast<long>(n)));
    }
    return out;
}

/// w * f(w).
inline Poly times_w(const Poly& f)
{
    Poly out(f.size(), Q(0));
    for (std::size_t i = 0; i + 1 < f.size(); ++i) out[i + 1] = f[i];
    return out;
}

/// Restricted growth strings of length m, each a set partition of {1..m}.
inline void for_each_set_partition(std::size_t m, const std::function<void(const std::vector<int>&)>& visit)
{
    std::vector<int> a(m, 0);
    std::function<void(std::size_t, int)> rec = [&](std::size_t i, int blocks) {
        if (i == m) {
            visit(a);
            return;
        }
        for (int b = 0; b <= blocks; ++b) {
            a[i] = b;
            rec(i + 1, std::max(blocks, b + 1));
        }
    };
    if (m == 0) {
        visit(a);
        return;
    }
    rec(0, 0);
}

inline bool crossing(const std::vector<int>& a)
{
    const std::size_t m = a.size();
    for (std::size_t p = 0; p < m; ++p)
        for (std::size_t q = p + 1; q < m; ++q)
            for (std::size_t r = q + 1; r < m; ++r)
                for (std::size_t s = r + 1; s < m; ++s)
                    if (a[p] == a[r] && a[q] == a[s] && a[p] != a[q]) return true;
    return false;
}

inline std::size_t count_noncrossing(std::size_t m)
{
    std::size_t count = 0;
    for_each_set_partition(m, [&](const std::vector<int>& a) { count += crossing(a) ? 0 : 1; });
    return count;
}

inline Q catalan(std::size_t n)
{
    mpz_class c = 1;
    for (std::size_t k = 0; k < n; ++k) c = c * 2 * (2 * k + 1) / (k + 2);
    return Q(c);
}

/// Block sizes of every non-crossing partition of {1..n}, found by brute
/// force over all set partitions and cached.
inline const std::vector<std::vector<std::size_t>>& noncrossing_block_sizes(std::size_t n)
{
    static std::vector<std::vector<std::vector<std::size_t>>> cache;
    if (cache.size() <= n) cache.resize(n + 1);
    auto& out = cache[n];
    if (out.empty()) {
        for_each_set_partition(n, [&](const std::vector<int>& a) {
            if (crossing(a)) return;
            std::vector<std::size_t> sizes;
            for (int b : a) {
                if (static_cast<std::size_t>(b) >= sizes.size()) sizes.resize(static_cast<std::size_t>(b) + 1, 0);
                ++sizes[static_cast<std::size_t>(b)];
            }
            out.push_back(std::move(sizes));
        });
    }
    return out;
}

/// M(0..m) from r(1..p) (r[0] = r(1)) as a sum over non-crossing partitions.
inline Poly moments_bruteforce(const std::vector<Q>& r, std::size_t m)
{
    Poly out(m + 1, Q(0));
    out[0] = 1;
    for (std::size_t n = 1; n <= m; ++n) {
        for (const auto& sizes : noncrossing_block_sizes(n)) {
            Q term = 1;
            for (auto s : sizes) term *= s <= r.size() ? r[s - 1] : Q(0);
            out[n] += term;
        }
    }
    return out;
}

/// R(w) = sum r(n) w^(n-1) to w^order.
inline Poly r_series(const std::vector<Q>& r, std::size_t order)
{
    Poly out(order + 1, Q(0));
    for (std::size_t n = 0; n <= order && n < r.size(); ++n) out[n] = r[n];
    return out;
}

/// w R(w X(w)), the moment-variable form of R(G).
inline Poly subordinated(const std::vector<Q>& r, const Poly& x)
{
    return times_w(compose(r_series(r, x.size() - 1), times_w(x)));
}

/// Free convolution: cumulants add.
inline Poly free_moments(const std::vector<Q>& r1, const std::vector<Q>& r2, std::size_t m)
{
    std::vector<Q> r(std::max(r1.size(), r2.size()), Q(0));
    for (std::size_t i = 0; i < r1.size(); ++i) r[i] += r1[i];
    for (std::size_t i = 0; i < r2.size(); ++i) r[i] += r2[i];
    return moments_bruteforce(r, m);
}

/// Monotone convolution of mu1 after mu2: F = F1 o F2, that is
/// M(w) = M2(w) M1(w M2(w)).
inline Poly monotone_moments(const std::vector<Q>& r1, const std::vector<Q>& r2, std::size_t m)
{
    const Poly m1 = moments_bruteforce(r1, m);
    const Poly m2 = moments_bruteforce(r2, m);
    return mul(m2, compose(m1, times_w(m2)));
}

/// Boolean convolution: 1/M = 1/M1 + 1/M2 - 1.
inline Poly boolean_moments(const std::vector<Q>& r1, const std::vector<Q>& r2, std::size_t m)
{
    Poly s = add(inverse(moments_bruteforce(r1, m)), inverse(moments_bruteforce(r2, m)));
    s[0] -= 1;
    return inverse(s);
}

/// M = 1/(1 - w R1(w X)) for a given subordinate X.
inline Poly one_law_over(const std::vector<Q>& r1, const Poly& x)
{
    Poly d = subordinated(r1, x);
    for (auto& c : d) c = -c;
    d[0] += 1;
    return inverse(d);
}

inline Poly s_free_moments(const std::vector<Q>& r1, const std::vector<Q>& r2, std::size_t m)
{
    return one_law_over(r1, free_moments(r1, r2, m));
}

inline Poly orthogonal_moments(const std::vector<Q>& r1, const std::vector<Q>& r2, std::size_t m)
{
    return one_law_over(r1, monotone_moments(r1, r2, m));
}

/// 1/(1 + z R(z)) coefficient by coefficient as a signed sum over
/// compositions n = n_1 + ... + n_k of products r(n_1)...r(n_k).
inline Poly composition_inverse(const std::vector<Q>& r, std::size_t order)
{
    Poly out(order + 1, Q(0));
    for (std::size_t n = 0; n <= order; ++n) {
        Q total = 0;
        std::function<void(std::size_t, int, const Q&)> walk = [&](std::size_t left, int k, const Q& prod) {
            if (left == 0) {
                total += (k % 2 == 0 ? prod : -prod);
                return;
            }
            for (std::size_t part = 1; part <= left; ++part) {
                const Q rp = part <= r.size() ? r[part - 1] : Q(0);
                if (rp == 0) continue;
                walk(left - part, k + 1, prod * rp);
            }
        };
        walk(n, 0, Q(1));
        out[n] = total;
    }
    return out;
}

inline Q random_rational(std::mt19937_64& rng, int lo = -9, int hi = 9, int max_den = 7)
{
    std::uniform_int_distribution<int> num(lo, hi);
    std::uniform_int_distribution<int> den(1, max_den);
    Q q(num(rng), den(rng));
    q.canonicalize();
    return q;
}

}  // namespace oracle
