#include "symrep/foursquare.hpp"

#include <algorithm>
#include <array>
#include <optional>
#include <vector>

#include "symrep/errors.hpp"

namespace symrep {

namespace {

Int isqrt(const Int& n) {
    Int r;
    mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
    return r;
}

bool is_square(const Int& n, Int* root = nullptr) {
    if (n < 0) return false;
    if (mpz_perfect_square_p(n.get_mpz_t()) == 0) return false;
    if (root) mpz_sqrt(root->get_mpz_t(), n.get_mpz_t());
    return true;
}

FourSquare canonical(const Int& target, Int a, Int b, Int c, Int d) {
    std::vector<Int> v{std::move(a), std::move(b), std::move(c), std::move(d)};
    std::sort(v.begin(), v.end(), [](const Int& x, const Int& y) { return x > y; });
    return {target, v[0], v[1], v[2], v[3]};
}

/// Greedy descending search with backtracking; always succeeds (Lagrange)
/// and the first hit in descending (a, b, c, d) order is canonical.
FourSquare decompose_small(const Int& n) {
    for (Int a = isqrt(n); a >= 0; --a) {
        Int r1 = n - a * a;
        if (r1 > 3 * a * a) break;  // even three copies of a cannot cover the rest
        for (Int b = std::min(Int(a), isqrt(r1)); b >= 0; --b) {
            Int r2 = r1 - b * b;
            if (r2 > 2 * b * b) break;
            for (Int c = std::min(Int(b), isqrt(r2)); c >= 0; --c) {
                Int r3 = r2 - c * c;
                if (r3 > c * c) break;
                Int d;
                if (is_square(r3, &d) && d <= c) return {n, a, b, c, d};
            }
        }
    }
    throw InternalCertificateFailure("four-square search fell through for " + Int(n).get_str());
}

bool miller_rabin_probable_prime(const Int& n) {
    // Deterministic for n below ~3.3e24 with these bases; beyond that a
    // strong pseudoprime slipping through is harmless because every
    // two-square decomposition is verified before use.
    static const unsigned long bases[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
    if (n < 2) return false;
    for (unsigned long base : bases) {
        if (n == static_cast<long>(base)) return true;
        if (n % static_cast<long>(base) == 0) return false;
    }
    Int d = n - 1;
    unsigned long s = mpz_scan1(d.get_mpz_t(), 0);
    mpz_tdiv_q_2exp(d.get_mpz_t(), d.get_mpz_t(), s);
    for (unsigned long base : bases) {
        Int x;
        Int b(base);
        mpz_powm(x.get_mpz_t(), b.get_mpz_t(), d.get_mpz_t(), n.get_mpz_t());
        if (x == 1 || x == n - 1) continue;
        bool witness = true;
        for (unsigned long i = 0; i + 1 < s; ++i) {
            x = x * x % n;
            if (x == n - 1) {
                witness = false;
                break;
            }
        }
        if (witness) return false;
    }
    return true;
}

/// Hermite-Serret: p an (apparent) prime with p % 4 == 1 -> u^2 + v^2 = p.
/// The result is verified; nullopt when p was not such a prime after all.
std::optional<std::pair<Int, Int>> two_squares_prime(const Int& p) {
    if (p == 2) return std::make_pair(Int(1), Int(1));
    if (p % 4 != 1) return std::nullopt;
    // smallest quadratic non-residue g, then z = g^((p-1)/4) has z^2 = -1
    Int g = 2;
    while (mpz_legendre(g.get_mpz_t(), p.get_mpz_t()) != -1) {
        ++g;
        if (g > 1000) return std::nullopt;  // p is surely composite
    }
    Int e = (p - 1) / 4;
    Int z;
    mpz_powm(z.get_mpz_t(), g.get_mpz_t(), e.get_mpz_t(), p.get_mpz_t());
    if ((z * z + 1) % p != 0) return std::nullopt;
    // Euclidean descent: the first remainder below sqrt(p) is one leg
    Int a = p, b = z;
    while (b * b > p) {
        Int t = a % b;
        a = b;
        b = t;
    }
    Int u = b;
    Int v;
    if (!is_square(p - u * u, &v)) return std::nullopt;
    if (u * u + v * v != p) return std::nullopt;
    return std::make_pair(u, v);
}

/// Three squares of m with m % 4 != 0 and m not 7 mod 8 (m > 0, not a
/// perfect square). Returns an unordered triple.
std::array<Int, 3> three_squares_reduced(const Int& m) {
    if (m <= 1000000) {
        // exhaustive descending scan, complete for every eligible m
        for (Int x = isqrt(m); x >= 0; --x) {
            Int r = m - x * x;
            if (r > 2 * x * x) break;
            for (Int y = std::min(Int(x), isqrt(r)); y >= 0; --y) {
                Int r2 = r - y * y;
                if (r2 > y * y) break;
                Int z;
                if (is_square(r2, &z) && z <= y) return {x, y, z};
            }
        }
        throw InternalCertificateFailure("three-square scan exhausted for " + m.get_str());
    }
    // pick the x parity that leaves a two-square-friendly remainder
    Int mod8 = m % 8;
    bool x_odd;
    bool halve;  // remainder = 2q with q % 4 == 1
    if (mod8 == 3) {
        x_odd = true;
        halve = true;
    } else if (mod8 == 1 || mod8 == 5) {
        x_odd = false;
        halve = false;
    } else {  // 2 or 6 mod 8
        x_odd = true;
        halve = false;
    }
    Int x = isqrt(m);
    if ((x % 2 != 0) != x_odd) --x;
    for (; x >= 0; x -= 2) {
        Int r = m - x * x;
        if (r <= 0) continue;
        Int q = halve ? r / 2 : r;
        if (q == 1) return halve ? std::array<Int, 3>{x, 1, 1} : std::array<Int, 3>{x, 1, 0};
        if (!miller_rabin_probable_prime(q)) continue;
        auto uv = two_squares_prime(q);
        if (!uv) continue;
        if (halve) {
            Int su = uv->first + uv->second;
            Int sv = abs(uv->first - uv->second);
            if (su * su + sv * sv != r) continue;
            return {x, su, sv};
        }
        return {x, uv->first, uv->second};
    }
    throw InternalCertificateFailure("three-square scan exhausted for " + m.get_str());
}

std::array<Int, 3> three_squares(Int m) {
    Int shift = 1;
    while (m != 0 && m % 4 == 0) {
        m /= 4;
        shift *= 2;
    }
    if (m == 0) return {0, 0, 0};
    Int root;
    std::array<Int, 3> t;
    if (is_square(m, &root))
        t = {root, 0, 0};
    else
        t = three_squares_reduced(m);
    for (Int& c : t) c *= shift;
    return t;
}

FourSquare decompose_large(const Int& n) {
    Int m = n;
    Int shift = 1;
    while (m % 4 == 0) {
        m /= 4;
        shift *= 2;
    }
    Int extra = 0;
    if (m % 8 == 7) {
        // drop the largest square x^2 with x not divisible by 4; the
        // remainder is 3 or 6 mod 8, never of the excluded 4^a(8b+7) shape
        Int x = isqrt(m);
        while (x % 4 == 0) --x;
        extra = x;
        m -= x * x;
    }
    auto t = three_squares(m);
    return canonical(n, t[0] * shift, t[1] * shift, t[2] * shift, extra * shift);
}

}  // namespace

FourSquare decompose(const Int& n) {
    if (n < 0) throw NegativeInput();
    if (n == 0) return {n, 0, 0, 0, 0};
    if (n <= 1000000) return decompose_small(n);
    Int root;
    if (is_square(n, &root)) return {n, root, 0, 0, 0};
    return decompose_large(n);
}

}  // namespace symrep
