/*
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include "meanking/galois.hpp"

#include <algorithm>
#include <optional>
#include <stdexcept>

namespace meanking::galois {

namespace {

int mod(int x, int p) {
    int r = x % p;
    return r < 0 ? r + p : r;
}

// Dense Z_p[x] polynomials, index = degree. Used only for spec validation.
using Poly = std::vector<int>;

int degree(const Poly& f) {
    for (int i = static_cast<int>(f.size()) - 1; i >= 0; --i)
        if (f[i] != 0) return i;
    return -1;  // zero polynomial
}

// Remainder of f by monic g.
Poly poly_rem(Poly f, const Poly& g, int p) {
    int dg = degree(g);
    for (int df = degree(f); df >= dg; df = degree(f)) {
        int c = f[df];
        for (int i = 0; i <= dg; ++i)
            f[df - dg + i] = mod(f[df - dg + i] - c * g[i], p);
    }
    return f;
}

// Smallest monic divisor of monic f with 1 <= deg <= n/2, if any. Trial
// division over all candidate polynomials; fine at the field sizes in play.
std::optional<Poly> find_monic_divisor(const Poly& f, int n, int p) {
    for (int d = 1; d <= n / 2; ++d) {
        long long count = 1;
        for (int i = 0; i < d; ++i) count *= p;
        for (long long code = 0; code < count; ++code) {
            Poly g(d + 1, 0);
            long long c = code;
            for (int i = 0; i < d; ++i) {
                g[i] = static_cast<int>(c % p);
                c /= p;
            }
            g[d] = 1;
            if (degree(poly_rem(f, g, p)) < 0) return g;
        }
    }
    return std::nullopt;
}

bool is_irreducible(const std::vector<int>& low_coeffs, int p) {
    int n = static_cast<int>(low_coeffs.size());
    Poly f(low_coeffs);
    f.push_back(1);  // monic of degree n
    return !find_monic_divisor(f, n, p).has_value();
}

std::string monic_string(const Poly& g) {
    int d = degree(g);
    std::string s = d == 1 ? "x" : "x^" + std::to_string(d);
    for (int i = d - 1; i >= 0; --i) {
        if (g[i] == 0) continue;
        s += "+";
        if (i == 0 || g[i] != 1) s += std::to_string(g[i]);
        if (i >= 1) s += "x";
        if (i >= 2) s += "^" + std::to_string(i);
    }
    return s;
}

}  // namespace

int FieldSpec::order() const {
    int q = 1;
    for (int i = 0; i < n; ++i) q *= p;
    return q;
}

bool FieldElement::is_zero() const {
    return std::all_of(coeffs.begin(), coeffs.end(), [](int c) { return c == 0; });
}

bool is_prime(int p) {
    if (p < 2) return false;
    for (int d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

FieldSpec validate_spec(int p, int n, std::vector<int> poly) {
    if (!is_prime(p)) throw NotPrime("p = " + std::to_string(p) + " is not prime");
    if (n < 1) throw BadDegree("degree n must be >= 1, got " + std::to_string(n));
    if (static_cast<int>(poly.size()) != n)
        throw BadDegree("defining polynomial needs exactly n = " + std::to_string(n) +
                        " coefficients, got " + std::to_string(poly.size()));
    for (int& c : poly) c = mod(c, p);
    Poly f(poly);
    f.push_back(1);
    if (auto g = find_monic_divisor(f, n, p))
        throw Reducible("defining polynomial is reducible; divisible by " + monic_string(*g));
    return FieldSpec{p, n, std::move(poly)};
}

FieldSpec default_spec(int p, int n) {
    if (!is_prime(p)) throw NotPrime("p = " + std::to_string(p) + " is not prime");
    if (n < 1) throw BadDegree("degree n must be >= 1, got " + std::to_string(n));
    if (n == 1) return FieldSpec{p, 1, {0}};
    if (p == 2 && n == 2) return FieldSpec{2, 2, {1, 1}};     // a^2 + a + 1
    if (p == 2 && n == 3) return FieldSpec{2, 3, {1, 1, 0}};  // a^3 + a + 1
    if (p == 3 && n == 2) return FieldSpec{3, 2, {2, 1}};     // a^2 + a + 2
    // Smallest monic irreducible, ordering coefficient tuples (c_{n-1},...,c_0)
    // lexicographically.
    long long count = 1;
    for (int i = 0; i < n; ++i) count *= p;
    for (long long code = 0; code < count; ++code) {
        // Base-p digits of the code; the top coefficient varies slowest, so
        // codes run in lexicographic order of (c_{n-1}, ..., c_0).
        std::vector<int> poly(n, 0);
        long long c = code;
        for (int i = 0; i < n; ++i) {
            poly[i] = static_cast<int>(c % p);
            c /= p;
        }
        if (is_irreducible(poly, p)) return FieldSpec{p, n, std::move(poly)};
    }
    throw Reducible("no irreducible polynomial found");  // unreachable for prime p
}

FieldElement from_integer(int x, const FieldSpec& spec) {
    int q = spec.order();
    if (x < 0 || x >= q)
        throw OutOfRange("integer code " + std::to_string(x) + " outside [0, " +
                         std::to_string(q) + ")");
    FieldElement e;
    e.spec = spec;
    e.coeffs.resize(spec.n);
    for (int i = 0; i < spec.n; ++i) {
        e.coeffs[i] = x % spec.p;
        x /= spec.p;
    }
    return e;
}

int to_integer(const FieldElement& e) {
    int x = 0;
    for (int i = e.spec.n - 1; i >= 0; --i) x = x * e.spec.p + e.coeffs[i];
    return x;
}

FieldElement zero(const FieldSpec& spec) { return from_integer(0, spec); }

FieldElement one(const FieldSpec& spec) { return from_integer(1, spec); }

namespace {

void check_same_spec(const FieldElement& a, const FieldElement& b) {
    if (!(a.spec == b.spec))
        throw SpecMismatch("operands live in different fields (" + poly_string(a.spec) +
                           " over Z_" + std::to_string(a.spec.p) + " vs " + poly_string(b.spec) +
                           " over Z_" + std::to_string(b.spec.p) + ")");
}

}  // namespace

FieldElement add(const FieldElement& a, const FieldElement& b) {
    check_same_spec(a, b);
    FieldElement out = a;
    for (int i = 0; i < a.spec.n; ++i) out.coeffs[i] = mod(a.coeffs[i] + b.coeffs[i], a.spec.p);
    return out;
}

FieldElement neg(const FieldElement& a) {
    FieldElement out = a;
    for (int& c : out.coeffs) c = mod(-c, a.spec.p);
    return out;
}

FieldElement sub(const FieldElement& a, const FieldElement& b) { return add(a, neg(b)); }

FieldElement mul(const FieldElement& a, const FieldElement& b) {
    check_same_spec(a, b);
    const int p = a.spec.p;
    const int n = a.spec.n;
    // Schoolbook product, then reduce a^n -> -(c_{n-1} a^{n-1} + ... + c_0).
    std::vector<int> prod(2 * n - 1, 0);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) prod[i + j] = mod(prod[i + j] + a.coeffs[i] * b.coeffs[j], p);
    for (int d = 2 * n - 2; d >= n; --d) {
        int c = prod[d];
        if (c == 0) continue;
        prod[d] = 0;
        for (int i = 0; i < n; ++i)
            prod[d - n + i] = mod(prod[d - n + i] - c * a.spec.poly[i], p);
    }
    FieldElement out;
    out.spec = a.spec;
    out.coeffs.assign(prod.begin(), prod.begin() + n);
    return out;
}

FieldElement inv(const FieldElement& a) {
    if (a.is_zero()) throw ZeroInverse("zero has no multiplicative inverse");
    // The fields in play are tiny, so scan for the inverse directly.
    for (int x = 1; x < a.spec.order(); ++x) {
        FieldElement cand = from_integer(x, a.spec);
        if (to_integer(mul(a, cand)) == 1) return cand;
    }
    throw ZeroInverse("no inverse found; field spec is inconsistent");
}

FieldElement pow(const FieldElement& a, long long k) {
    if (a.is_zero() && k < 0) throw ZeroInverse("zero has no multiplicative inverse");
    FieldElement base = k < 0 ? inv(a) : a;
    unsigned long long e = k < 0 ? static_cast<unsigned long long>(-(k + 1)) + 1ull
                                 : static_cast<unsigned long long>(k);
    FieldElement acc = one(a.spec);
    while (e > 0) {
        if (e & 1ull) acc = mul(acc, base);
        base = mul(base, base);
        e >>= 1;
    }
    return acc;
}

bool is_primitive(const FieldElement& a) {
    if (a.is_zero()) throw ZeroInput("zero generates nothing; primitivity is undefined for 0");
    const int q = a.spec.order();
    std::vector<bool> seen(q, false);
    FieldElement x = a;
    for (int k = 1; k < q; ++k) {
        seen[to_integer(x)] = true;
        x = mul(x, a);
    }
    for (int v = 1; v < q; ++v)
        if (!seen[v]) return false;
    return true;
}

FieldTables tables(const FieldSpec& spec) {
    const int q = spec.order();
    FieldTables t;
    t.add.assign(q, std::vector<int>(q, 0));
    t.mul.assign(q, std::vector<int>(q, 0));
    std::vector<FieldElement> elems;
    elems.reserve(q);
    for (int i = 0; i < q; ++i) elems.push_back(from_integer(i, spec));
    for (int i = 0; i < q; ++i)
        for (int j = 0; j < q; ++j) {
            t.add[i][j] = to_integer(add(elems[i], elems[j]));
            t.mul[i][j] = to_integer(mul(elems[i], elems[j]));
        }
    return t;
}

namespace {

// Renders c * a^k with the usual omissions ("a", "2a", "a^2", "1", ...).
std::string term_string(int c, int k) {
    std::string s;
    if (k == 0 || c != 1) s += std::to_string(c);
    if (k >= 1) s += "a";
    if (k >= 2) s += "^" + std::to_string(k);
    return s;
}

}  // namespace

std::string to_string(const FieldElement& e) {
    std::string s;
    for (int k = e.spec.n - 1; k >= 0; --k) {
        if (e.coeffs[k] == 0) continue;
        if (!s.empty()) s += "+";
        s += term_string(e.coeffs[k], k);
    }
    return s.empty() ? "0" : s;
}

std::string poly_string(const FieldSpec& spec) {
    std::string s = spec.n == 1 ? "a" : "a^" + std::to_string(spec.n);
    for (int k = spec.n - 1; k >= 0; --k) {
        if (spec.poly[k] == 0) continue;
        s += "+" + term_string(spec.poly[k], k);
    }
    return s;
}

}  // namespace meanking::galois
