/*
   Copyright 2026 the knotscan authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include "knotscan/factorization.hpp"

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace knotscan {

namespace {

// ---------------------------------------------------------------------
// Arithmetic in F_p[x], p a small odd prime. Dense v<long> with
// coefficients in [0, p), normalized (no leading zeros; zero = empty).
// ---------------------------------------------------------------------

using PolyP = std::vector<long>;

void trim_p(PolyP& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

long deg_p(const PolyP& a) { return static_cast<long>(a.size()) - 1; }

long inv_mod(long a, long p) {
    long t = 0, newt = 1, r = p, newr = ((a % p) + p) % p;
    while (newr != 0) {
        long q = r / newr;
        long tmp = t - q * newt;
        t = newt;
        newt = tmp;
        tmp = r - q * newr;
        r = newr;
        newr = tmp;
    }
    if (r != 1) throw std::logic_error("inv_mod: argument not invertible");
    return ((t % p) + p) % p;
}


PolyP sub_p(const PolyP& a, const PolyP& b, long p) {
    PolyP c(std::max(a.size(), b.size()), 0);
    for (std::size_t i = 0; i < a.size(); ++i) c[i] = a[i];
    for (std::size_t i = 0; i < b.size(); ++i) c[i] = ((c[i] - b[i]) % p + p) % p;
    trim_p(c);
    return c;
}

PolyP mul_p(const PolyP& a, const PolyP& b, long p) {
    if (a.empty() || b.empty()) return {};
    PolyP c(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) {
            c[i + j] = (c[i + j] + a[i] * b[j]) % p;
        }
    }
    trim_p(c);
    return c;
}

PolyP scale_p(const PolyP& a, long s, long p) {
    PolyP c(a);
    for (auto& v : c) v = (v * (s % p)) % p;
    trim_p(c);
    return c;
}

PolyP make_monic_p(const PolyP& a, long p) {
    if (a.empty()) return a;
    return scale_p(a, inv_mod(a.back(), p), p);
}

// Remainder of a modulo b (b nonzero).
PolyP rem_p(PolyP a, const PolyP& b, long p) {
    long leadinv = inv_mod(b.back(), p);
    while (deg_p(a) >= deg_p(b)) {
        long f = (a.back() * leadinv) % p;
        std::size_t shift = a.size() - b.size();
        for (std::size_t j = 0; j < b.size(); ++j) {
            a[shift + j] = ((a[shift + j] - f * b[j]) % p + p) % p;
        }
        trim_p(a);
        if (a.empty()) break;
    }
    return a;
}

PolyP divexact_p(const PolyP& a, const PolyP& b, long p) {
    PolyP r(a);
    PolyP q(a.size() >= b.size() ? a.size() - b.size() + 1 : 0, 0);
    long leadinv = inv_mod(b.back(), p);
    while (deg_p(r) >= deg_p(b)) {
        long f = (r.back() * leadinv) % p;
        std::size_t shift = r.size() - b.size();
        q[shift] = f;
        for (std::size_t j = 0; j < b.size(); ++j) {
            r[shift + j] = ((r[shift + j] - f * b[j]) % p + p) % p;
        }
        trim_p(r);
        if (r.empty()) break;
    }
    if (!r.empty()) throw std::logic_error("divexact_p: division not exact");
    trim_p(q);
    return q;
}

PolyP gcd_p(PolyP a, PolyP b, long p) {
    while (!b.empty()) {
        PolyP r = rem_p(a, b, p);
        a = std::move(b);
        b = std::move(r);
    }
    return make_monic_p(a, p);
}

PolyP derivative_p(const PolyP& a, long p) {
    if (a.size() <= 1) return {};
    PolyP c(a.size() - 1, 0);
    for (std::size_t i = 1; i < a.size(); ++i) {
        c[i - 1] = (a[i] * static_cast<long>(i % p)) % p;
    }
    trim_p(c);
    return c;
}

// base^e mod f, with an arbitrary-precision exponent.
PolyP powmod_p(PolyP base, const BigInt& e, const PolyP& f, long p) {
    PolyP acc{1};
    base = rem_p(std::move(base), f, p);
    for (long bit = static_cast<long>(mpz_sizeinbase(e.get_mpz_t(), 2)) - 1; bit >= 0; --bit) {
        acc = rem_p(mul_p(acc, acc, p), f, p);
        if (mpz_tstbit(e.get_mpz_t(), static_cast<mp_bitcnt_t>(bit))) {
            acc = rem_p(mul_p(acc, base, p), f, p);
        }
    }
    return acc;
}

// Extended Euclid in F_p[x]: returns (g, s) monic-normalized with
// s*a = g mod b (used for the inverse of a modulo b when g = 1).
PolyP inverse_mod_p(const PolyP& a, const PolyP& b, long p) {
    PolyP r0 = b, r1 = rem_p(a, b, p);
    PolyP s0 = {}, s1 = {1};
    while (!r1.empty()) {
        // r0 = q*r1 + r2
        PolyP q;
        {
            PolyP r(r0);
            q.assign(r.size() >= r1.size() ? r.size() - r1.size() + 1 : 0, 0);
            long leadinv = inv_mod(r1.back(), p);
            while (deg_p(r) >= deg_p(r1)) {
                long f = (r.back() * leadinv) % p;
                std::size_t shift = r.size() - r1.size();
                q[shift] = f;
                for (std::size_t j = 0; j < r1.size(); ++j) {
                    r[shift + j] = ((r[shift + j] - f * r1[j]) % p + p) % p;
                }
                trim_p(r);
                if (r.empty()) break;
            }
            trim_p(q);
            r0.swap(r1);
            r1 = std::move(r);
        }
        PolyP s2 = sub_p(s0, mul_p(q, s1, p), p);
        s0.swap(s1);
        s1 = std::move(s2);
    }
    if (deg_p(r0) != 0) throw std::logic_error("inverse_mod_p: arguments not coprime");
    return rem_p(scale_p(s0, inv_mod(r0[0], p), p), b, p);
}

// Distinct-degree then deterministic equal-degree splitting of a monic
// squarefree polynomial over F_p (p odd). Returns monic irreducibles.
void equal_degree_split(const PolyP& g, long d, long p, std::vector<PolyP>& out) {
    if (deg_p(g) == d) {
        out.push_back(g);
        return;
    }
    BigInt half = (pow_int(BigInt(p), static_cast<unsigned long>(d)) - 1) / 2;
    // Enumerate candidate polynomials in a fixed order so the output is
    // deterministic: counter n expands in base p to the coefficients.
    for (unsigned long n = static_cast<unsigned long>(p);; ++n) {
        PolyP cand;
        unsigned long m = n;
        while (m > 0) {
            cand.push_back(static_cast<long>(m % static_cast<unsigned long>(p)));
            m /= static_cast<unsigned long>(p);
        }
        trim_p(cand);
        if (deg_p(cand) < 1 || deg_p(cand) >= deg_p(g)) continue;
        PolyP h = powmod_p(cand, half, g, p);
        h = sub_p(h, PolyP{1}, p);
        PolyP w = gcd_p(h, g, p);
        if (deg_p(w) > 0 && deg_p(w) < deg_p(g)) {
            equal_degree_split(w, d, p, out);
            equal_degree_split(divexact_p(g, w, p), d, p, out);
            return;
        }
    }
}

std::vector<PolyP> factor_mod_p(const PolyP& f_monic, long p) {
    std::vector<PolyP> out;
    PolyP v = f_monic;
    PolyP h{0, 1};  // x
    long d = 0;
    while (deg_p(v) >= 2 * (d + 1)) {
        ++d;
        h = powmod_p(std::move(h), BigInt(p), v, p);
        PolyP g = gcd_p(sub_p(h, PolyP{0, 1}, p), v, p);
        if (deg_p(g) > 0) {
            equal_degree_split(g, d, p, out);
            v = divexact_p(v, g, p);
            h = rem_p(std::move(h), v, p);
        }
    }
    if (deg_p(v) > 0) out.push_back(v);
    return out;
}

// ---------------------------------------------------------------------
// Arithmetic modulo p^k with BigInt coefficients.
// ---------------------------------------------------------------------

using PolyM = std::vector<BigInt>;

void trim_m(PolyM& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

PolyM reduce_m(const Polynomial<BigInt>& a, const BigInt& m) {
    PolyM c;
    c.reserve(a.coefficients().size());
    for (const auto& v : a.coefficients()) {
        BigInt r;
        mpz_fdiv_r(r.get_mpz_t(), v.get_mpz_t(), m.get_mpz_t());
        c.push_back(r);
    }
    trim_m(c);
    return c;
}

PolyM mul_m(const PolyM& a, const PolyM& b, const BigInt& m) {
    if (a.empty() || b.empty()) return {};
    PolyM c(a.size() + b.size() - 1, BigInt(0));
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
    }
    for (auto& v : c) mpz_fdiv_r(v.get_mpz_t(), v.get_mpz_t(), m.get_mpz_t());
    trim_m(c);
    return c;
}

PolyM sub_m(const PolyM& a, const PolyM& b, const BigInt& m) {
    PolyM c(std::max(a.size(), b.size()), BigInt(0));
    for (std::size_t i = 0; i < a.size(); ++i) c[i] = a[i];
    for (std::size_t i = 0; i < b.size(); ++i) {
        c[i] -= b[i];
        mpz_fdiv_r(c[i].get_mpz_t(), c[i].get_mpz_t(), m.get_mpz_t());
    }
    trim_m(c);
    return c;
}

// Symmetric representative of v modulo m, in (-m/2, m/2].
BigInt symmetric_lift(const BigInt& v, const BigInt& m) {
    BigInt r;
    mpz_fdiv_r(r.get_mpz_t(), v.get_mpz_t(), m.get_mpz_t());
    if (2 * r > m) r -= m;
    return r;
}

// ---------------------------------------------------------------------
// Hensel lifting and Zassenhaus recombination.
// ---------------------------------------------------------------------

struct LiftedFactors {
    std::vector<PolyM> factors;  // monic modulo pk
    BigInt pk;
};

// Lifts the monic mod-p factorization of s/lc(s) to modulo pk (linear
// multifactor lifting with a fixed Bezout basis).
LiftedFactors hensel_lift(const Polynomial<BigInt>& s, long p,
                          const std::vector<PolyP>& modp_factors, const BigInt& pk) {
    const std::size_t r = modp_factors.size();

    // Bezout basis: sigma_i = (prod_{j != i} g_j)^{-1} mod g_i.
    std::vector<PolyP> sigma(r);
    for (std::size_t i = 0; i < r; ++i) {
        PolyP pi{1};
        for (std::size_t j = 0; j < r; ++j) {
            if (j != i) pi = mul_p(pi, modp_factors[j], p);
        }
        sigma[i] = inverse_mod_p(pi, modp_factors[i], p);
    }

    std::vector<PolyM> G(r);
    for (std::size_t i = 0; i < r; ++i) {
        G[i].assign(modp_factors[i].begin(), modp_factors[i].end());
    }

    const BigInt lc = s.leading();
    BigInt m(p);
    while (m < pk) {
        BigInt next = m * p;
        // Target: T = s / lc(s), made monic modulo `next`.
        BigInt lcinv;
        if (mpz_invert(lcinv.get_mpz_t(), lc.get_mpz_t(), next.get_mpz_t()) == 0) {
            throw std::logic_error("hensel_lift: leading coefficient not invertible");
        }
        PolyM T = reduce_m(s, next);
        for (auto& v : T) {
            v *= lcinv;
            mpz_fdiv_r(v.get_mpz_t(), v.get_mpz_t(), next.get_mpz_t());
        }
        PolyM prod{BigInt(1)};
        for (const auto& g : G) prod = mul_m(prod, g, next);
        PolyM err = sub_m(T, prod, next);
        // err is divisible by m; the quotient lives over F_p.
        PolyP ehat(err.size(), 0);
        for (std::size_t i = 0; i < err.size(); ++i) {
            ehat[i] = static_cast<long>(mpz_fdiv_ui(BigInt(err[i] / m).get_mpz_t(),
                                                         static_cast<unsigned long>(p)));
        }
        trim_p(ehat);
        for (std::size_t i = 0; i < r; ++i) {
            PolyP di = rem_p(mul_p(sigma[i], ehat, p), modp_factors[i], p);
            for (std::size_t j = 0; j < di.size(); ++j) {
                if (j >= G[i].size()) G[i].resize(j + 1, BigInt(0));
                G[i][j] += m * di[j];
            }
        }
        m = next;
    }
    return LiftedFactors{std::move(G), m};
}


// Zassenhaus subset recombination: extracts the true irreducible factors
// of a squarefree primitive s (positive leading coefficient) from its
// lifted modular factors. Subsets are tried by size then lexicographic
// position, which makes the output deterministic.
std::vector<Polynomial<BigInt>> recombine(Polynomial<BigInt> s, const LiftedFactors& lifted) {
    std::vector<Polynomial<BigInt>> out;
    std::vector<std::size_t> remaining(lifted.factors.size());
    for (std::size_t i = 0; i < remaining.size(); ++i) remaining[i] = i;
    const BigInt& pk = lifted.pk;

    auto candidate = [&](const std::vector<std::size_t>& subset) {
        PolyM prod{s.leading()};
        for (std::size_t idx : subset) prod = mul_m(prod, lifted.factors[idx], pk);
        std::vector<BigInt> c(prod.size());
        for (std::size_t i = 0; i < prod.size(); ++i) c[i] = symmetric_lift(prod[i], pk);
        return primitive_part(Polynomial<BigInt>(std::move(c)));
    };

    bool progress = true;
    while (progress && !remaining.empty()) {
        progress = false;
        const std::size_t n = remaining.size();
        for (std::size_t size = 1; size <= n / 2 && !progress; ++size) {
            std::vector<std::size_t> pick(size);
            for (std::size_t i = 0; i < size; ++i) pick[i] = i;
            while (true) {
                std::vector<std::size_t> subset(size);
                for (std::size_t i = 0; i < size; ++i) subset[i] = remaining[pick[i]];
                // No degree filter here: any proper factor of s has a side
                // with at most n/2 modular factors, whatever its degree,
                // and that side must be tried for the complement argument
                // to terminate correctly.
                Polynomial<BigInt> cand = candidate(subset);
                if (cand.degree() >= 1 && cand.degree() < s.degree()) {
                    auto quotient = try_divide_exact(s, cand);
                    if (quotient) {
                        out.push_back(cand);
                        s = *quotient;
                        std::vector<std::size_t> next_remaining;
                        for (std::size_t i = 0, j = 0; i < remaining.size(); ++i) {
                            if (j < size && pick[j] == i) {
                                ++j;
                            } else {
                                next_remaining.push_back(remaining[i]);
                            }
                        }
                        remaining = std::move(next_remaining);
                        progress = true;
                        break;
                    }
                }
                // next combination
                long i = static_cast<long>(size) - 1;
                while (i >= 0 && pick[static_cast<std::size_t>(i)] ==
                                     n - size + static_cast<std::size_t>(i)) {
                    --i;
                }
                if (i < 0) break;
                ++pick[static_cast<std::size_t>(i)];
                for (std::size_t j = static_cast<std::size_t>(i) + 1; j < size; ++j) {
                    pick[j] = pick[j - 1] + 1;
                }
            }
        }
    }
    if (s.degree() >= 1) {
        out.push_back(primitive_part(s));
    } else if (!(s.degree() == 0 && s.coeff(0) == 1)) {
        throw std::logic_error("recombine: residual cofactor is not 1");
    }
    return out;
}

// Factors a squarefree primitive polynomial (positive leading
// coefficient, nonzero constant term, degree >= 1) into irreducibles.
std::vector<Polynomial<BigInt>> factor_squarefree(const Polynomial<BigInt>& s) {
    if (s.degree() == 1) return {s};

    // Pick an odd prime keeping s squarefree and the degree intact.
    long p = 0;
    BigInt candidate(3);
    for (int attempts = 0; attempts < 1000; ++attempts) {
        long q = candidate.get_si();
        if (!divides(candidate, s.leading())) {
            PolyP sp(static_cast<std::size_t>(s.degree()) + 1, 0);
            for (std::size_t i = 0; i < sp.size(); ++i) {
                sp[i] = static_cast<long>(mod_ui(s.coeff(i), static_cast<unsigned long>(q)));
            }
            trim_p(sp);
            PolyP g = gcd_p(sp, derivative_p(sp, q), q);
            if (deg_p(g) == 0) {
                p = q;
                break;
            }
        }
        mpz_nextprime(candidate.get_mpz_t(), candidate.get_mpz_t());
    }
    if (p == 0) throw std::logic_error("factor_squarefree: no usable prime found");

    PolyP sp(static_cast<std::size_t>(s.degree()) + 1, 0);
    for (std::size_t i = 0; i < sp.size(); ++i) {
        sp[i] = static_cast<long>(mod_ui(s.coeff(i), static_cast<unsigned long>(p)));
    }
    auto modp = factor_mod_p(make_monic_p(sp, p), p);
    std::sort(modp.begin(), modp.end(), [](const PolyP& a, const PolyP& b) {
        if (a.size() != b.size()) return a.size() < b.size();
        return a < b;
    });
    if (modp.size() == 1) return {s};

    // Lifting bound: past twice the Mignotte-style coefficient bound
    // 2^deg * |s|_2, times the leading coefficient carried by candidates.
    BigInt norm2(0);
    for (const auto& c : s.coefficients()) norm2 += c * c;
    BigInt bound = (isqrt(norm2) + 1) * pow_int(BigInt(2), static_cast<unsigned long>(s.degree()));
    bound = 2 * bound * abs(s.leading()) + 1;
    BigInt pk(p);
    while (pk < bound) pk *= p;

    auto lifted = hensel_lift(s, p, modp, pk);
    return recombine(s, lifted);
}

}  // namespace

bool factor_less(const Polynomial<BigInt>& a, const Polynomial<BigInt>& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    for (long i = 0; i <= a.degree(); ++i) {
        const BigInt va = a.coeff(static_cast<std::size_t>(i));
        const BigInt vb = b.coeff(static_cast<std::size_t>(i));
        if (va != vb) return va < vb;
    }
    return false;
}

BigInt content(const Polynomial<BigInt>& p) {
    BigInt g(0);
    for (const auto& c : p.coefficients()) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    }
    return g;
}

Polynomial<BigInt> primitive_part(const Polynomial<BigInt>& p) {
    if (p.is_zero()) return p;
    BigInt c = content(p);
    if (p.leading() < 0) c = -c;
    std::vector<BigInt> out;
    out.reserve(p.coefficients().size());
    for (const auto& v : p.coefficients()) out.push_back(exact_div(v, c));
    return Polynomial<BigInt>(std::move(out));
}

Polynomial<BigInt> int_poly_gcd(const Polynomial<BigInt>& a, const Polynomial<BigInt>& b) {
    Polynomial<BigInt> u = primitive_part(a);
    Polynomial<BigInt> v = primitive_part(b);
    if (u.is_zero()) return v;
    if (v.is_zero()) return u;
    if (u.degree() < v.degree()) std::swap(u, v);
    while (!v.is_zero()) {
        // Pseudo-remainder: scale u by lc(v) until v's leading term divides.
        Polynomial<BigInt> r = u;
        const BigInt d = v.leading();
        while (!r.is_zero() && r.degree() >= v.degree()) {
            Polynomial<BigInt> t =
                Polynomial<BigInt>::monomial(r.leading(), static_cast<std::size_t>(r.degree() - v.degree()));
            r = d * r - t * v;
        }
        u = std::move(v);
        v = primitive_part(r);
    }
    return u;
}

IntegerFactorization factor_integer_poly(const Polynomial<BigInt>& p) {
    if (p.is_zero()) throw std::invalid_argument("factor_integer_poly: zero polynomial");

    IntegerFactorization result;
    result.sign = p.leading() < 0 ? -1 : 1;

    // Integer content, factored into primes as degree-0 factors.
    BigInt cont = content(p);
    for (const auto& [q, e] : factor_integer(cont)) {
        for (unsigned i = 0; i < e; ++i) result.factors.push_back(Polynomial<BigInt>::constant(q));
    }

    Polynomial<BigInt> body = primitive_part(p);

    // Powers of x.
    std::size_t xpow = 0;
    while (body.degree() >= 1 && body.coeff(0) == 0) {
        body = *try_divide_exact(body, Polynomial<BigInt>::monomial(BigInt(1), 1));
        ++xpow;
    }
    for (std::size_t i = 0; i < xpow; ++i) {
        result.factors.push_back(Polynomial<BigInt>::monomial(BigInt(1), 1));
    }

    if (body.degree() >= 1) {
        Polynomial<BigInt> sqfree = *try_divide_exact(body, int_poly_gcd(body, derivative(body)));
        std::vector<Polynomial<BigInt>> irreducibles = factor_squarefree(primitive_part(sqfree));
        std::sort(irreducibles.begin(), irreducibles.end(), factor_less);
        for (const auto& q : irreducibles) {
            while (true) {
                auto quotient = try_divide_exact(body, q);
                if (!quotient) break;
                body = *quotient;
                result.factors.push_back(q);
            }
        }
        if (!body.is_one()) {
            throw std::logic_error("factor_integer_poly: factors do not exhaust the input");
        }
    }

    // Normalize each factor to a positive constant term where one exists;
    // the overall sign absorbs the flips.
    for (auto& f : result.factors) {
        if (f.coeff(0) < 0) {
            f = -f;
            result.sign = -result.sign;
        }
    }
    std::sort(result.factors.begin(), result.factors.end(), factor_less);

    Polynomial<BigInt> check = Polynomial<BigInt>::constant(BigInt(result.sign));
    for (const auto& f : result.factors) check = check * f;
    if (check != p) {
        throw std::logic_error("factor_integer_poly: product of factors does not equal input");
    }
    return result;
}

}  // namespace knotscan
