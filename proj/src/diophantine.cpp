#include "borderlim/diophantine.hpp"

#include <algorithm>

namespace borderlim {

namespace {

Integer iabs(const Integer& n) { return boost::multiprecision::abs(n); }

Integer powmod(Integer base, Integer exp, const Integer& mod) {
    Integer result = 1;
    base %= mod;
    if (base < 0) base += mod;
    while (exp > 0) {
        if (boost::multiprecision::bit_test(exp, 0)) result = result * base % mod;
        base = base * base % mod;
        exp >>= 1;
    }
    return result;
}

} // namespace

namespace {

Integer mulmod(const Integer& a, const Integer& b, const Integer& m) { return a * b % m; }

bool miller_rabin(const Integer& n) {
    if (n < 2) return false;
    for (int small : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
        if (n == small) return true;
        if (n % small == 0) return false;
    }
    Integer d = n - 1;
    int r = 0;
    while (d % 2 == 0) {
        d /= 2;
        ++r;
    }
    for (int base : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
        Integer x = powmod(base, d, n);
        if (x == 1 || x == n - 1) continue;
        bool witness = true;
        for (int i = 0; i < r - 1 && witness; ++i) {
            x = mulmod(x, x, n);
            if (x == n - 1) witness = false;
        }
        if (witness) return false;
    }
    return true;
}

// Brent's cycle-finding variant; nullopt when the budget runs out
std::optional<Integer> pollard_brent(const Integer& n, long long budget) {
    if (n % 2 == 0) return Integer(2);
    Integer x0 = 2, c = 1;
    for (int attempt = 0; attempt < 20; ++attempt) {
        Integer y = x0, r = 1, q = 1, g = 1, x = 0, ys = 0;
        long long steps = 0;
        while (g == 1) {
            x = y;
            for (Integer i = 0; i < r; ++i) y = (mulmod(y, y, n) + c) % n;
            Integer k = 0;
            while (k < r && g == 1) {
                ys = y;
                Integer limit = Integer(r - k);
                if (limit > 128) limit = 128;
                for (Integer i = 0; i < limit; ++i) {
                    y = (mulmod(y, y, n) + c) % n;
                    q = mulmod(q, iabs(x - y), n);
                }
                g = boost::multiprecision::gcd(q, n);
                k += limit;
                steps += limit.convert_to<long long>();
                if (steps > budget) return std::nullopt;
            }
            r *= 2;
        }
        if (g == n) {
            // backtrack one at a time
            g = 1;
            while (g == 1) {
                ys = (mulmod(ys, ys, n) + c) % n;
                g = boost::multiprecision::gcd(iabs(x - ys), n);
                if (++steps > budget) return std::nullopt;
            }
        }
        if (g != n) return g;
        c += 1;  // unlucky polynomial, try another
        x0 += 1;
    }
    return std::nullopt;
}

} // namespace

std::optional<std::vector<std::pair<Integer, int>>> factorize(Integer n, long long budget) {
    n = iabs(n);
    std::vector<std::pair<Integer, int>> factors;
    if (n <= 1) return factors;

    // small primes by trial division
    long long steps = 0;
    for (Integer p = 2; p * p <= n && p < 100000; p += (p == 2) ? 1 : 2) {
        if (n % p == 0) {
            int e = 0;
            while (n % p == 0) {
                n /= p;
                ++e;
            }
            factors.push_back({p, e});
        }
        if (++steps > budget) return std::nullopt;
    }
    if (n == 1) return factors;

    // split the remaining cofactor
    std::vector<Integer> stack{n};
    while (!stack.empty()) {
        Integer m = stack.back();
        stack.pop_back();
        if (m == 1) continue;
        if (miller_rabin(m)) {
            bool merged = false;
            for (auto& [p, e] : factors)
                if (p == m) {
                    ++e;
                    merged = true;
                }
            if (!merged) factors.push_back({m, 1});
            continue;
        }
        Integer root = boost::multiprecision::sqrt(m);
        if (root * root == m) {
            stack.push_back(root);
            stack.push_back(root);
            continue;
        }
        auto d = pollard_brent(m, budget);
        if (!d || *d == 1 || *d == m) return std::nullopt;
        stack.push_back(*d);
        stack.push_back(m / *d);
    }
    std::sort(factors.begin(), factors.end());
    return factors;
}

std::optional<Integer> sqrt_mod_prime(Integer a, const Integer& p) {
    a %= p;
    if (a < 0) a += p;
    if (a == 0) return Integer(0);
    if (p == 2) return a;  // a = 1
    if (powmod(a, (p - 1) / 2, p) != 1) return std::nullopt;
    if (p % 4 == 3) return powmod(a, (p + 1) / 4, p);

    // Tonelli-Shanks
    Integer q = p - 1;
    int s = 0;
    while (q % 2 == 0) {
        q /= 2;
        ++s;
    }
    Integer z = 2;
    while (powmod(z, (p - 1) / 2, p) != p - 1) ++z;
    Integer m = s, c = powmod(z, q, p), t = powmod(a, q, p), r = powmod(a, (q + 1) / 2, p);
    while (t != 1) {
        Integer tt = t;
        Integer i = 0;
        while (tt != 1) {
            tt = tt * tt % p;
            ++i;
            if (i == m) return std::nullopt;
        }
        Integer b = c;
        for (Integer j = 0; j < m - i - 1; ++j) b = b * b % p;
        m = i;
        c = b * b % p;
        t = t * c % p;
        r = r * b % p;
    }
    return r;
}

namespace {

using Solution = std::array<Integer, 3>;

// full pipeline on arbitrary nonzero integers: normalize to a squarefree
// pairwise-coprime triple (tracking the coordinate rescalings), then descend
std::optional<Solution> solve_full(Integer a, Integer b, Integer c, int depth);

// requires squarefree, pairwise coprime, mixed signs, all nonzero
std::optional<Solution> solve_normalized(Integer a, Integer b, Integer c, int depth) {
    if (depth > 64) return std::nullopt;

    // order |a| <= |b| <= |c|, remembering how to undo it
    std::array<Integer, 3> coef{a, b, c};
    std::array<std::size_t, 3> perm{0, 1, 2};
    std::sort(perm.begin(), perm.end(),
              [&](std::size_t i, std::size_t j) { return iabs(coef[i]) < iabs(coef[j]); });
    Integer sa = coef[perm[0]], sb = coef[perm[1]], sc = coef[perm[2]];
    auto unpermute = [&](const Solution& v) {
        Solution out;
        out[perm[0]] = v[0];
        out[perm[1]] = v[1];
        out[perm[2]] = v[2];
        return out;
    };

    if (iabs(sa * sb * sc) <= 512) {
        for (Integer x = 0; x <= 24; ++x)
            for (Integer y = -24; y <= 24; ++y)
                for (Integer z = -24; z <= 24; ++z) {
                    if (x == 0 && y == 0 && z == 0) continue;
                    if (sa * x * x + sb * y * y + sc * z * z == 0) return unpermute({x, y, z});
                }
        return std::nullopt;
    }

    // t with t^2 = -sa*sb (mod |sc|), assembled by CRT over the primes of sc
    Integer modulus_c = iabs(sc);
    auto factors = factorize(modulus_c);
    if (!factors) return std::nullopt;
    Integer target = -sa * sb;
    Integer t = 0, modulus = 1;
    for (const auto& [p, e] : *factors) {
        auto root = sqrt_mod_prime(target, p);
        if (!root) return std::nullopt;  // genuine residue obstruction
        if (modulus == 1) {
            t = *root;
            modulus = p;
            continue;
        }
        Integer inv = powmod(modulus % p, p - 2, p);
        Integer delta = ((*root - t) % p + p) % p * inv % p;
        t += modulus * delta;
        modulus *= p;
    }
    if (t > modulus / 2) t = modulus - t;

    Integer numerator = t * t + sa * sb;
    if (numerator == 0) return unpermute({t, sa, 0});  // sa t^2 + sb sa^2 = sa (t^2 + sa sb)
    if (numerator % sc != 0) return std::nullopt;
    Integer c_next = numerator / sc;

    auto sub = solve_full(sa, sb, c_next, depth + 1);
    if (!sub) return std::nullopt;
    const Integer& x1 = (*sub)[0];
    const Integer& y1 = (*sub)[1];
    const Integer& z1 = (*sub)[2];
    // (t^2 + sa sb)(sa x^2 + sb y^2) = sa (t x + sb y)^2 + sb (t y - sa x)^2
    Solution lifted{t * x1 + sb * y1, t * y1 - sa * x1, c_next * z1};
    return unpermute(lifted);
}

std::optional<Solution> solve_full(Integer a, Integer b, Integer c, int depth) {
    if (depth > 64) return std::nullopt;
    if (a == 0 || b == 0 || c == 0) {
        // a vanished coefficient frees its coordinate
        Solution out{0, 0, 0};
        std::array<Integer, 3> coef{a, b, c};
        for (std::size_t i = 0; i < 3; ++i)
            if (coef[i] == 0) {
                out[i] = 1;
                return out;
            }
    }
    if ((a > 0 && b > 0 && c > 0) || (a < 0 && b < 0 && c < 0)) return std::nullopt;

    Integer g = boost::multiprecision::gcd(boost::multiprecision::gcd(iabs(a), iabs(b)), iabs(c));
    a /= g;
    b /= g;
    c /= g;

    std::array<Integer, 3> coef{a, b, c};
    std::array<Rational, 3> post{Rational(1), Rational(1), Rational(1)};

    // strip square parts: a = a' q^2 means x = X / q
    for (std::size_t i = 0; i < 3; ++i) {
        auto f = factorize(iabs(coef[i]));
        if (!f) return std::nullopt;
        for (const auto& [p, e] : *f)
            for (int k = 0; k + 1 < e; k += 2) {
                coef[i] /= p * p;
                post[i] /= Rational(p);
            }
    }

    // move shared primes to the third coordinate: p(a'x^2 + b'y^2) + cz^2 = 0
    // forces z = p z', giving (a', b', pc) with the third coordinate scaled
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t i = 0; i < 3 && !changed; ++i)
            for (std::size_t j = i + 1; j < 3 && !changed; ++j) {
                Integer shared = boost::multiprecision::gcd(iabs(coef[i]), iabs(coef[j]));
                if (shared == 1) continue;
                auto f = factorize(shared);
                if (!f || f->empty()) return std::nullopt;
                Integer p = f->front().first;
                std::size_t k = 3 - i - j;
                coef[i] /= p;
                coef[j] /= p;
                coef[k] *= p;
                post[k] *= Rational(p);
                changed = true;
            }
    }

    auto v = solve_normalized(coef[0], coef[1], coef[2], depth + 1);
    if (!v) return std::nullopt;
    // clear the rational rescalings back to integers
    std::array<Rational, 3> rat;
    for (std::size_t i = 0; i < 3; ++i) rat[i] = post[i] * Rational((*v)[i]);
    Integer lcm = 1;
    for (const auto& q : rat) lcm = boost::multiprecision::lcm(lcm, denominator(q));
    Solution out;
    for (std::size_t i = 0; i < 3; ++i) out[i] = numerator(rat[i]) * (lcm / denominator(rat[i]));
    return out;
}

} // namespace

namespace {

void make_primitive(Solution& v) {
    Integer g = boost::multiprecision::gcd(boost::multiprecision::gcd(iabs(v[0]), iabs(v[1])),
                                           iabs(v[2]));
    if (g > 1)
        for (auto& x : v) x /= g;
}

Integer height(const Solution& v) { return std::max({iabs(v[0]), iabs(v[1]), iabs(v[2])}); }

// height reduction by chords: the second intersection of a small-direction
// line through a known point is often much smaller; iterate greedily
void reduce_solution(const Integer& a, const Integer& b, const Integer& c, Solution& v) {
    make_primitive(v);
    for (int round = 0; round < 200; ++round) {
        Solution best = v;
        Integer best_h = height(v);
        for (int l = -2; l <= 2; ++l)
            for (int m = -2; m <= 2; ++m)
                for (int n = -2; n <= 2; ++n) {
                    if (l == 0 && m == 0 && n == 0) continue;
                    Integer q = a * l * l + b * m * m + c * n * n;
                    Integer w = a * l * v[0] + b * m * v[1] + c * n * v[2];
                    // second intersection: q * v - 2 w * (l, m, n)
                    Solution cand{q * v[0] - 2 * w * l, q * v[1] - 2 * w * m, q * v[2] - 2 * w * n};
                    if (cand[0] == 0 && cand[1] == 0 && cand[2] == 0) continue;
                    make_primitive(cand);
                    Integer h = height(cand);
                    if (h < best_h) {
                        best = cand;
                        best_h = h;
                    }
                }
        if (best == v) break;
        v = best;
    }
}

} // namespace

std::optional<std::array<Rational, 3>> solve_ternary(const Rational& a, const Rational& b,
                                                     const Rational& c) {
    if (a == 0 || b == 0 || c == 0) return std::nullopt;
    if ((a > 0 && b > 0 && c > 0) || (a < 0 && b < 0 && c < 0)) return std::nullopt;

    Integer lcm = boost::multiprecision::lcm(
        boost::multiprecision::lcm(denominator(a), denominator(b)), denominator(c));
    Integer ia = numerator(a) * (lcm / denominator(a));
    Integer ib = numerator(b) * (lcm / denominator(b));
    Integer ic = numerator(c) * (lcm / denominator(c));

    auto v = solve_full(ia, ib, ic, 0);
    if (!v) return std::nullopt;
    reduce_solution(ia, ib, ic, *v);
    std::array<Rational, 3> out{Rational((*v)[0]), Rational((*v)[1]), Rational((*v)[2])};
    if (a * out[0] * out[0] + b * out[1] * out[1] + c * out[2] * out[2] != 0) return std::nullopt;
    if (out[0] == 0 && out[1] == 0 && out[2] == 0) return std::nullopt;
    return out;
}

} // namespace borderlim
