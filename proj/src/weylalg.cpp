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

#include "meanking/weylalg.hpp"

#include <cmath>
#include <numbers>

#include <unsupported/Eigen/KroneckerProduct>

namespace meanking::weylalg {

namespace {

int mod(int x, int p) {
    int r = x % p;
    return r < 0 ? r + p : r;
}

void check_same_dim(const WeylWord& a, const WeylWord& b) {
    if (a.p != b.p || a.particles() != b.particles())
        throw DimMismatch("words act on different spaces: " + render_word(a) + " vs " +
                          render_word(b));
}

}  // namespace

int WeylWord::dim() const {
    int d = 1;
    for (int i = 0; i < particles(); ++i) d *= p;
    return d;
}

std::complex<double> root_of_unity(int p, int s) {
    const double t = 2.0 * std::numbers::pi * s / p;
    return {std::cos(t), std::sin(t)};
}

Matrix letter_matrix(const Letter& l, int p) {
    if (l.x < 0 || l.x >= p || l.z < 0 || l.z >= p)
        throw UnknownSymbol("letter exponents (" + std::to_string(l.x) + "," +
                            std::to_string(l.z) + ") out of range for p=" + std::to_string(p));
    Matrix m = Matrix::Zero(p, p);
    // (X^x Z^z)|k> = w^(z*k) |k+x>, plus the Hermitizing i^(x*z) for qubits.
    std::complex<double> phase = p == 2 ? std::pow(std::complex<double>(0, 1), l.x * l.z)
                                        : std::complex<double>(1, 0);
    for (int k = 0; k < p; ++k) m((k + l.x) % p, k) = phase * root_of_unity(p, mod(l.z * k, p));
    return m;
}

namespace {

Letter letter_from_symbol(const std::string& symbol, int p) {
    if (p == 2) {
        if (symbol == "1") return {0, 0};
        if (symbol == "X") return {1, 0};
        if (symbol == "Y") return {1, 1};
        if (symbol == "Z") return {0, 1};
    } else if (p == 3) {
        if (symbol == "1") return {0, 0};
        if (symbol == "X") return {1, 0};
        if (symbol == "X2") return {2, 0};
        if (symbol == "Z") return {0, 1};
        if (symbol == "Z2") return {0, 2};
        if (symbol == "Y") return {1, 1};
        if (symbol == "Y2") return {2, 2};
        if (symbol == "W") return {1, 2};
        if (symbol == "W2") return {2, 1};
    }
    throw UnknownSymbol("unknown letter '" + symbol + "' for p=" + std::to_string(p));
}

std::string symbol_from_letter(const Letter& l, int p) {
    if (p == 2) {
        if (l == Letter{0, 0}) return "1";
        if (l == Letter{1, 0}) return "X";
        if (l == Letter{1, 1}) return "Y";
        return "Z";
    }
    if (p == 3) {
        if (l == Letter{0, 0}) return "1";
        if (l == Letter{1, 0}) return "X";
        if (l == Letter{2, 0}) return "X2";
        if (l == Letter{0, 1}) return "Z";
        if (l == Letter{0, 2}) return "Z2";
        if (l == Letter{1, 1}) return "Y";
        if (l == Letter{2, 2}) return "Y2";
        if (l == Letter{1, 2}) return "W";
        return "W2";
    }
    // Generic product spelling for larger p (single-particle reports only).
    if (l == Letter{0, 0}) return "1";
    std::string s;
    if (l.x > 0) s += l.x == 1 ? "X" : "X" + std::to_string(l.x);
    if (l.z > 0) s += l.z == 1 ? "Z" : "Z" + std::to_string(l.z);
    return s;
}

}  // namespace

Matrix letter_matrix(const std::string& symbol, int p) {
    return letter_matrix(letter_from_symbol(symbol, p), p);
}

Matrix word_matrix(const WeylWord& w) {
    Matrix m = letter_matrix(w.letters.at(0), w.p);
    for (size_t i = 1; i < w.letters.size(); ++i)
        m = tensor(m, letter_matrix(w.letters[i], w.p));
    return m;
}

WeylWord parse_word(const std::string& text, int p, int particles) {
    if (p != 2 && p != 3)
        throw UnknownSymbol("word parsing is defined for p=2 and p=3, got p=" +
                            std::to_string(p));
    WeylWord w;
    w.p = p;
    for (size_t i = 0; i < text.size();) {
        if (text[i] == ' ') {
            ++i;
            continue;
        }
        std::string symbol(1, text[i]);
        ++i;
        if (p == 3 && i < text.size() && text[i] == '2') {
            symbol += '2';
            ++i;
        }
        w.letters.push_back(letter_from_symbol(symbol, p));
    }
    if (w.particles() != particles)
        throw DimMismatch("word '" + text + "' has " + std::to_string(w.particles()) +
                          " letters, expected " + std::to_string(particles));
    return w;
}

std::string render_word(const WeylWord& w) {
    std::string s;
    for (const Letter& l : w.letters) s += symbol_from_letter(l, w.p);
    return s;
}

bool commutes(const WeylWord& a, const WeylWord& b, double tol) {
    check_same_dim(a, b);
    Matrix ma = word_matrix(a), mb = word_matrix(b);
    return ((ma * mb - mb * ma).cwiseAbs().maxCoeff()) < tol;
}

int symplectic_form(const WeylWord& a, const WeylWord& b) {
    check_same_dim(a, b);
    int form = 0;
    for (int i = 0; i < a.particles(); ++i)
        form += a.letters[i].z * b.letters[i].x - b.letters[i].z * a.letters[i].x;
    return mod(form, a.p);
}

Vector apply(const WeylWord& w, const Vector& v) {
    if (w.dim() != v.size())
        throw DimMismatch("word of dimension " + std::to_string(w.dim()) +
                          " applied to state of dimension " + std::to_string(v.size()));
    return word_matrix(w) * v;
}

std::complex<double> inner(const Vector& a, const Vector& b) {
    if (a.size() != b.size())
        throw DimMismatch("inner product of states with dimensions " + std::to_string(a.size()) +
                          " and " + std::to_string(b.size()));
    return a.dot(b);  // Eigen's dot conjugates the left argument
}

Vector tensor(const Vector& a, const Vector& b) {
    return Eigen::kroneckerProduct(a, b).eval();
}

Matrix tensor(const Matrix& a, const Matrix& b) {
    return Eigen::kroneckerProduct(a, b).eval();
}

Vector conjugate_std(const Vector& v) { return v.conjugate(); }

std::complex<double> eigenvalue_of(const WeylWord& w, const Vector& v, double tol) {
    Vector wv = apply(w, v);
    std::complex<double> lambda = inner(v, wv);
    double residual = (wv - lambda * v).norm();
    if (residual >= tol)
        throw NotAnEigenvector("state is not an eigenvector of " + render_word(w) +
                               " (residual " + std::to_string(residual) + ")");
    return lambda;
}

int eigenvalue_exponent(const WeylWord& w, const Vector& v, double tol) {
    std::complex<double> lambda = eigenvalue_of(w, v, tol);
    const double two_pi = 2.0 * std::numbers::pi;
    int s = mod(static_cast<int>(std::lround(std::arg(lambda) * w.p / two_pi)), w.p);
    if (std::abs(lambda - root_of_unity(w.p, s)) >= tol)
        throw NotAnEigenvector("eigenvalue of " + render_word(w) +
                               " is not a p-th root of unity within tolerance");
    return s;
}

}  // namespace meanking::weylalg
