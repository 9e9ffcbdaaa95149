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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <complex>
#include <vector>

#include "meanking/weylalg.hpp"

using namespace meanking;
using namespace meanking::weylalg;

namespace {

constexpr std::complex<double> kI{0.0, 1.0};

template <class A, class B>
bool approx_eq(const A& a_expr, const B& b_expr, double tol = 1e-12) {
    Matrix a = a_expr, b = b_expr;
    return a.rows() == b.rows() && a.cols() == b.cols() &&
           (a - b).cwiseAbs().maxCoeff() < tol;
}

Matrix mat2(std::complex<double> a, std::complex<double> b, std::complex<double> c,
            std::complex<double> d) {
    Matrix m(2, 2);
    m << a, b, c, d;
    return m;
}

}  // namespace

TEST_CASE("qubit letter matrices are the identity and the Pauli matrices") {
    CHECK(approx_eq(letter_matrix("1", 2), mat2(1, 0, 0, 1)));
    CHECK(approx_eq(letter_matrix("X", 2), mat2(0, 1, 1, 0)));
    CHECK(approx_eq(letter_matrix("Z", 2), mat2(1, 0, 0, -1)));
    // Y carries the i^{xz} phase and is the Hermitian sigma_y.
    CHECK(approx_eq(letter_matrix("Y", 2), mat2(0, -kI, kI, 0)));
    Matrix y = letter_matrix("Y", 2);
    CHECK(approx_eq(y, y.adjoint()));
    CHECK(approx_eq(y * y, Matrix::Identity(2, 2)));
}

TEST_CASE("qutrit letter matrices follow Z = clock, X = shift, Y = XZ, W = XZ2") {
    const std::complex<double> w = root_of_unity(3, 1);
    Matrix z = letter_matrix("Z", 3);
    Matrix expect_z = Matrix::Zero(3, 3);
    expect_z(0, 0) = 1;
    expect_z(1, 1) = w;
    expect_z(2, 2) = w * w;
    CHECK(approx_eq(z, expect_z));

    Matrix x = letter_matrix("X", 3);
    Matrix expect_x = Matrix::Zero(3, 3);
    expect_x(1, 0) = expect_x(2, 1) = expect_x(0, 2) = 1;  // |j> -> |j+1 mod 3>
    CHECK(approx_eq(x, expect_x));

    CHECK(approx_eq(letter_matrix("Y", 3), x * z));
    CHECK(approx_eq(letter_matrix("W", 3), x * z * z));
    CHECK(approx_eq(letter_matrix("X2", 3), x * x));
    CHECK(approx_eq(letter_matrix("Z2", 3), z * z));
    // Squared symbols are the bare Weyl representatives X^x Z^z; they agree
    // with the operator squares only up to the commutation phase:
    // (XZ)^2 = w X^2 Z^2 and (XZ^2)^2 = w^2 X^2 Z.
    const std::complex<double> w3 = root_of_unity(3, 1);
    CHECK(approx_eq(letter_matrix("Y2", 3), x * x * z * z));
    CHECK(approx_eq(letter_matrix("W2", 3), x * x * z));
    CHECK(approx_eq(x * z * x * z, w3 * letter_matrix("Y2", 3)));
    Matrix xz2 = x * z * z;
    CHECK(approx_eq(xz2 * xz2, w3 * w3 * letter_matrix("W2", 3)));
}

TEST_CASE("qutrit operator relations: ZX = wXZ, X^3 = Z^3 = 1") {
    const std::complex<double> w = root_of_unity(3, 1);
    Matrix x = letter_matrix("X", 3);
    Matrix z = letter_matrix("Z", 3);
    CHECK(approx_eq(z * x, w * x * z));
    CHECK(approx_eq(x * x * x, Matrix::Identity(3, 3)));
    CHECK(approx_eq(z * z * z, Matrix::Identity(3, 3)));
    // Every letter at odd p is unitary of order p.
    for (const char* sym : {"Y", "W", "Y2", "W2", "X2", "Z2"}) {
        Matrix a = letter_matrix(sym, 3);
        CHECK(approx_eq(a * a * a, Matrix::Identity(3, 3)));
    }
}

TEST_CASE("every letter and word matrix is unitary") {
    for (const char* sym : {"1", "X", "Y", "Z"}) {
        Matrix a = letter_matrix(sym, 2);
        CHECK(approx_eq(a.adjoint() * a, Matrix::Identity(2, 2)));
    }
    for (const char* sym : {"1", "X", "X2", "Z", "Z2", "Y", "Y2", "W", "W2"}) {
        Matrix a = letter_matrix(sym, 3);
        CHECK(approx_eq(a.adjoint() * a, Matrix::Identity(3, 3)));
    }
    for (const char* text : {"XYX", "XZZ", "YYZ", "Z11", "1Z1"}) {
        Matrix a = word_matrix(parse_word(text, 2, 3));
        CHECK(approx_eq(a.adjoint() * a, Matrix::Identity(8, 8)));
    }
    for (const char* text : {"XZ", "ZW", "XZ2", "Z2Y", "WZ", "Z2X"}) {
        Matrix a = word_matrix(parse_word(text, 3, 2));
        CHECK(approx_eq(a.adjoint() * a, Matrix::Identity(9, 9)));
    }
}

TEST_CASE("word matrices are ordered tensor products") {
    Matrix sx = letter_matrix("X", 2);
    CHECK(approx_eq(word_matrix(parse_word("XX", 2, 2)), tensor(sx, sx)));

    Matrix z1 = word_matrix(parse_word("Z1", 2, 2));
    Matrix expect = Matrix::Zero(4, 4);
    expect(0, 0) = expect(1, 1) = 1;
    expect(2, 2) = expect(3, 3) = -1;
    CHECK(approx_eq(z1, expect));

    CHECK(approx_eq(word_matrix(parse_word("ZW", 3, 2)),
                    tensor(letter_matrix("Z", 3), letter_matrix("W", 3))));
}

TEST_CASE("parse_word and render_word round-trip, skipping spaces") {
    for (const char* text : {"XYX", "Z11", "ZYY", "1X1"}) {
        WeylWord w = parse_word(text, 2, 3);
        CHECK(w.particles() == 3);
        CHECK(render_word(w) == text);
    }
    for (const char* text : {"Z2Y", "X2Z", "WZ2", "11", "W2W"}) {
        WeylWord w = parse_word(text, 3, 2);
        CHECK(w.particles() == 2);
        CHECK(render_word(w) == text);
    }
    CHECK(render_word(parse_word("Z 1", 2, 2)) == "Z1");
    CHECK(render_word(parse_word(" X Z2 ", 3, 2)) == "XZ2");
    // '2' binds to the previous letter: "X2Z" is [X^2][Z], not [X][2Z].
    WeylWord w = parse_word("X2Z", 3, 2);
    CHECK(w.letters[0].x == 2);
    CHECK(w.letters[0].z == 0);
    CHECK(w.letters[1].x == 0);
    CHECK(w.letters[1].z == 1);
}

TEST_CASE("parse_word rejects unknown symbols and wrong particle counts") {
    CHECK_THROWS_AS(parse_word("Q1", 2, 2), UnknownSymbol);
    CHECK_THROWS_AS(parse_word("W", 2, 1), UnknownSymbol);   // W exists only at p=3
    CHECK_THROWS_AS(parse_word("X2", 2, 1), UnknownSymbol);  // no squares at p=2
    CHECK_THROWS_AS(parse_word("2X", 3, 1), UnknownSymbol);  // dangling exponent
    CHECK_THROWS_AS(parse_word("XX", 2, 3), DimMismatch);
    CHECK_THROWS_AS(parse_word("XXX", 2, 2), DimMismatch);
}

TEST_CASE("commutes matches hand-checked examples and the symplectic form") {
    CHECK(commutes(parse_word("Z1", 2, 2), parse_word("1Z", 2, 2)));
    CHECK_FALSE(commutes(parse_word("X1", 2, 2), parse_word("Z1", 2, 2)));
    CHECK(commutes(parse_word("XZ", 3, 2), parse_word("ZW", 3, 2)));
    CHECK_THROWS_AS(commutes(parse_word("X1", 2, 2), parse_word("X", 2, 1)), DimMismatch);

    // The matrix residual and the symplectic form must agree everywhere.
    std::vector<WeylWord> qubit_words, qutrit_words;
    for (const char* text : {"11", "X1", "Y1", "Z1", "XY", "ZZ", "YX", "XZ", "ZX", "YY"})
        qubit_words.push_back(parse_word(text, 2, 2));
    for (const char* text : {"11", "X1", "1Z", "XZ", "ZW", "YZ", "Z2Y", "WZ2", "YY"})
        qutrit_words.push_back(parse_word(text, 3, 2));
    for (const auto& words : {qubit_words, qutrit_words})
        for (const auto& a : words)
            for (const auto& b : words)
                CHECK(commutes(a, b) == (symplectic_form(a, b) == 0));
}

TEST_CASE("apply, inner, tensor and conjugate_std behave as stated") {
    Vector e0 = Vector::Zero(4), e1 = Vector::Zero(4);
    e0[0] = 1;
    e1[1] = 1;
    CHECK(inner(e0, e0) == std::complex<double>(1.0, 0.0));
    CHECK(std::abs(inner(e0, e1)) == 0.0);

    Vector v(4);
    v << 0.5, 0.5 * kI, 0.5 * kI, -0.5;
    Vector vbar(4);
    vbar << 0.5, -0.5 * kI, -0.5 * kI, -0.5;
    CHECK(approx_eq(conjugate_std(v), vbar));
    // inner(a,b) = conj(inner(b,a))
    CHECK(std::abs(inner(v, e0) - std::conj(inner(e0, v))) < 1e-15);

    Vector a(2), b(2);
    a << 1, 0;
    b << 0, 1;
    Vector ab = tensor(a, b);
    Vector expect = Vector::Zero(4);
    expect[1] = 1;
    CHECK(approx_eq(ab, expect));

    // apply = matrix-vector product.
    WeylWord x1 = parse_word("X1", 2, 2);
    Vector e2 = Vector::Zero(4);
    e2[2] = 1;
    CHECK(approx_eq(weylalg::apply(x1, e0), e2));
}

TEST_CASE("eigenvalue_of certifies and eigenvalue_exponent snaps to a root of unity") {
    WeylWord z1 = parse_word("Z1", 2, 2);
    Vector e00 = Vector::Zero(4);
    e00[0] = 1;
    CHECK(std::abs(eigenvalue_of(z1, e00) - std::complex<double>(1, 0)) < 1e-12);
    CHECK(eigenvalue_exponent(z1, e00) == 0);

    WeylWord x1 = parse_word("X1", 2, 2);
    CHECK_THROWS_AS(eigenvalue_of(x1, e00), NotAnEigenvector);
    CHECK_THROWS_AS(eigenvalue_exponent(x1, e00), NotAnEigenvector);

    // Z(x)1 at p=3 on |1>(x)|0>: eigenvalue w.
    WeylWord z1_3 = parse_word("Z1", 3, 2);
    Vector e10 = Vector::Zero(9);
    e10[3] = 1;  // |1>(x)|0> = component 1*3+0
    CHECK(std::abs(eigenvalue_of(z1_3, e10) - root_of_unity(3, 1)) < 1e-12);
    CHECK(eigenvalue_exponent(z1_3, e10) == 1);

    Vector minus(4);
    minus << 1 / std::sqrt(2.0), 0, -1 / std::sqrt(2.0), 0;
    CHECK(std::abs(eigenvalue_of(x1, minus) - std::complex<double>(-1, 0)) < 1e-12);
    CHECK(eigenvalue_exponent(x1, minus) == 1);
}

TEST_CASE("root_of_unity gives exact-quadrant values") {
    CHECK(std::abs(root_of_unity(4, 1) - kI) < 1e-15);
    CHECK(std::abs(root_of_unity(2, 1) - std::complex<double>(-1, 0)) < 1e-15);
    CHECK(std::abs(root_of_unity(8, 8) - std::complex<double>(1, 0)) < 1e-15);
    CHECK(std::abs(root_of_unity(3, 1) * root_of_unity(3, 2) -
                   std::complex<double>(1, 0)) < 1e-15);
}

TEST_CASE("letter powers: (X^x Z^z)^p = 1 at odd p, and Y^2 = 1 at p = 2") {
    for (int x = 0; x < 3; ++x)
        for (int z = 0; z < 3; ++z) {
            Matrix a = letter_matrix(Letter{x, z}, 3);
            CHECK(approx_eq(a * a * a, Matrix::Identity(3, 3)));
        }
    Matrix y = letter_matrix(Letter{1, 1}, 2);
    CHECK(approx_eq(y * y, Matrix::Identity(2, 2)));
}
