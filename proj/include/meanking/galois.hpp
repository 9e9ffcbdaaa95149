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

/**
 * Exact arithmetic in GF(p) and GF(p^n).
 *
 * Elements are degree-(n-1) polynomials in the adjoined root `a` with
 * coefficients in Z_p, reduced by a monic irreducible defining polynomial
 *     a^n + c_{n-1} a^{n-1} + ... + c_1 a + c_0.
 * Integers 0..p^n-1 map to elements through their base-p digits (least
 * significant digit = coefficient of a^0).
 *
 * Everything here is a pure function over immutable values; all operations
 * are safe to call concurrently. Fields are desk scale (p^n <= 9 in the
 * shipped constructions), so inverses and irreducibility use exhaustive
 * search rather than the extended Euclidean algorithm.
 */

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "meanking/error.hpp"

namespace meanking::galois {

struct NotPrime : Error {
    using Error::Error;
};
struct BadDegree : Error {
    using Error::Error;
};
struct Reducible : Error {
    using Error::Error;
};
struct OutOfRange : Error {
    using Error::Error;
};
struct SpecMismatch : Error {
    using Error::Error;
};
struct ZeroInverse : Error {
    using Error::Error;
};
struct ZeroInput : Error {
    using Error::Error;
};

/// A validated field description: prime p, degree n, defining polynomial.
struct FieldSpec {
    int p = 0;
    int n = 0;
    std::vector<int> poly;  // c_0..c_{n-1}; the leading coefficient 1 is implicit

    int order() const;  // p^n
    bool operator==(const FieldSpec&) const = default;
};

/// One element of GF(p^n): coefficient of a^k at index k.
struct FieldElement {
    std::vector<int> coeffs;
    FieldSpec spec;

    bool is_zero() const;
    bool operator==(const FieldElement&) const = default;
};

bool is_prime(int p);

/// Checks p prime, |poly| == n and irreducibility (trial division by all
/// monic polynomials of degree 1..n/2). Coefficients are reduced mod p.
FieldSpec validate_spec(int p, int n, std::vector<int> poly);

/// The defining polynomials used throughout: a^2+a+1 for GF(4), a^3+a+1 for
/// GF(8), a^2+a+2 for GF(9), `a` itself for n = 1. Any other (p, n) gets the
/// lexicographically smallest (by c_{n-1}..c_0) monic irreducible.
FieldSpec default_spec(int p, int n);

FieldElement from_integer(int x, const FieldSpec& spec);
int to_integer(const FieldElement& e);

FieldElement zero(const FieldSpec& spec);
FieldElement one(const FieldSpec& spec);

FieldElement add(const FieldElement& a, const FieldElement& b);
FieldElement neg(const FieldElement& a);
FieldElement sub(const FieldElement& a, const FieldElement& b);
FieldElement mul(const FieldElement& a, const FieldElement& b);
FieldElement inv(const FieldElement& a);
FieldElement pow(const FieldElement& a, long long k);

/// True iff the powers a^1..a^{p^n-1} enumerate every nonzero element.
bool is_primitive(const FieldElement& a);

/// Full addition and multiplication tables with integer-coded entries:
/// entry (i, j) is to_integer(from_integer(i) op from_integer(j)).
struct FieldTables {
    std::vector<std::vector<int>> add;
    std::vector<std::vector<int>> mul;
};
FieldTables tables(const FieldSpec& spec);

/// Polynomial rendering: "0", "1", "a", "a+1", "2a+2", "a^2+1", ...
std::string to_string(const FieldElement& e);
std::string poly_string(const FieldSpec& spec);  // e.g. "a^2+a+1"

}  // namespace meanking::galois
