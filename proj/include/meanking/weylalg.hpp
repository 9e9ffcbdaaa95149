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
 * Complex state vectors and generalized Pauli (Weyl) words.
 *
 * A letter is a single-particle operator X^x Z^z on a p-level system, where
 *     X|k> = |k+1 mod p>,   Z|k> = w^k |k>,   w = exp(2*pi*i/p),
 * and a word is the tensor product of one letter per particle, realized as a
 * dense p^n x p^n unitary.
 *
 * Spelling conventions. For p = 2 the letters are 1, X, Y, Z with Y the
 * Hermitian Pauli sigma_y = i*XZ (the phase i is part of the letter). For
 * p = 3 the letters are the bare products X^x Z^z, written 1, X, X2, Z, Z2,
 * Y, W with Y = XZ and W = XZ^2; the exponent-doubled classes render as Y2
 * (x=z=2) and W2 (x=2, z=1). Every letter and word here has order p, so
 * eigenvalues are exact p-th roots of unity and are reported as integer
 * exponents where convenient.
 */

#pragma once

#include <complex>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "meanking/error.hpp"

namespace meanking {

/// Library-wide default for every certification tolerance (orthonormality,
/// unbiasedness, overlap law). Internal linear-algebra checks use 1e-12.
inline constexpr double kDefaultTol = 1e-9;

}  // namespace meanking

namespace meanking::weylalg {

struct UnknownSymbol : Error {
    using Error::Error;
};
struct DimMismatch : Error {
    using Error::Error;
};
struct NotAnEigenvector : Error {
    using Error::Error;
};

using Vector = Eigen::VectorXcd;
using Matrix = Eigen::MatrixXcd;

/// Exponent pair of one single-particle factor X^x Z^z, 0 <= x, z < p.
struct Letter {
    int x = 0;
    int z = 0;
    bool operator==(const Letter&) const = default;
};

/// A tensor word over n particles of a p-level system.
struct WeylWord {
    int p = 0;
    std::vector<Letter> letters;

    int particles() const { return static_cast<int>(letters.size()); }
    int dim() const;  // p^particles()
    bool operator==(const WeylWord&) const = default;
};

std::complex<double> root_of_unity(int p, int s);  // exp(2*pi*i*s/p)

/// The p x p matrix of one letter: X^x Z^z, times i^(x*z) when p = 2 so the
/// mixed letter is the Hermitian sigma_y.
Matrix letter_matrix(const Letter& l, int p);

/// Same, addressed by symbol ("Y", "Z2", ...). Throws UnknownSymbol.
Matrix letter_matrix(const std::string& symbol, int p);

Matrix word_matrix(const WeylWord& w);

/// Parses a word such as "XY1Z" (p = 2) or "XZ2" / "Z2Y" (p = 3, greedy
/// letter-then-optional-2 tokenization; spaces allowed). The token count
/// must equal `particles`.
WeylWord parse_word(const std::string& text, int p, int particles);

std::string render_word(const WeylWord& w);

/// Matrix test: max entry of AB - BA below tol.
bool commutes(const WeylWord& a, const WeylWord& b, double tol = kDefaultTol);

/// Symbolic cross-check: AB = w^form * BA with form = sum_i (z_a x_b - z_b x_a)
/// over particles, reduced mod p. Zero iff the words commute.
int symplectic_form(const WeylWord& a, const WeylWord& b);

Vector apply(const WeylWord& w, const Vector& v);
std::complex<double> inner(const Vector& a, const Vector& b);  // <a|b>, conjugate-linear in a

Vector tensor(const Vector& a, const Vector& b);
Matrix tensor(const Matrix& a, const Matrix& b);

/// Entry-wise complex conjugation in the standard basis.
Vector conjugate_std(const Vector& v);

/// The eigenvalue lambda = <v|W|v> of a normalized eigenvector, certified by
/// ||W v - lambda v|| < tol. Throws NotAnEigenvector otherwise.
std::complex<double> eigenvalue_of(const WeylWord& w, const Vector& v, double tol = kDefaultTol);

/// Same value snapped to the exponent s with lambda = w^s (words have order
/// p, so the snap is certified to land within tol of an exact root).
int eigenvalue_exponent(const WeylWord& w, const Vector& v, double tol = kDefaultTol);

}  // namespace meanking::weylalg
