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

#include "meanking/mub.hpp"

#include <Eigen/Eigenvalues>

#include "meanking/galois.hpp"

namespace meanking::mub {

using weylalg::inner;
using weylalg::Matrix;
using weylalg::Vector;
using weylalg::WeylWord;

std::vector<int> signature_rank_order(int p) {
    if (p == 2) return {0, 1};
    std::vector<int> order;
    for (int s = 1; s < p; ++s) order.push_back(s);
    order.push_back(0);
    return order;
}

namespace {

void validate_commuting(const ObservableSet& set) {
    for (size_t i = 0; i < set.words.size(); ++i)
        for (size_t j = i + 1; j < set.words.size(); ++j)
            if (!commutes(set.words[i], set.words[j]))
                throw SetValidationFailed("words " + render_word(set.words[i]) + " and " +
                                          render_word(set.words[j]) + " do not commute");
}

ObservableSet make_set(int d, int p, int particles, const std::vector<std::string>& words,
                       int generator_count) {
    ObservableSet set;
    set.d = d;
    set.generator_count = generator_count;
    for (const std::string& text : words)
        set.words.push_back(weylalg::parse_word(text, p, particles));
    validate_commuting(set);
    return set;
}

}  // namespace

std::vector<ObservableSet> builtin_sets(int d) {
    std::vector<ObservableSet> sets;
    if (d == 4) {
        // Two qubits: triads of commuting Pauli words, first two generate.
        for (auto words : {std::vector<std::string>{"Z1", "1Z", "ZZ"},
                           {"X1", "1X", "XX"},
                           {"Y1", "1Y", "YY"},
                           {"XY", "YZ", "ZX"},
                           {"YX", "ZY", "XZ"}})
            sets.push_back(make_set(4, 2, 2, words, 2));
    } else if (d == 8) {
        // Three qubits: all three listed words are needed to separate the
        // eight states (each triad sits inside a larger commuting set whose
        // remaining members are products of these).
        for (auto words : {std::vector<std::string>{"Z11", "1Z1", "11Z"},
                           {"X11", "1X1", "11X"},
                           {"Y11", "1Y1", "11Y"},
                           {"XYX", "XZZ", "YYZ"},
                           {"XXZ", "YXY", "YZZ"},
                           {"YXX", "YZY", "ZZX"},
                           {"YYX", "ZXX", "ZYZ"},
                           {"XYY", "XZX", "ZZY"},
                           {"XXY", "ZXZ", "ZYY"}})
            sets.push_back(make_set(8, 2, 3, words, 3));
    } else if (d == 9) {
        // Two qutrits: a generating pair per basis; the six remaining
        // members of each commuting set are powers and products of the pair.
        for (auto words : {std::vector<std::string>{"Z1", "1Z"},
                           {"X1", "1X"},
                           {"Y1", "1Y"},
                           {"W1", "1W"},
                           {"XZ", "ZW"},
                           {"YZ", "ZX"},
                           {"XZ2", "Z2Y"},
                           {"YZ2", "Z2W"},
                           {"WZ", "ZY"},
                           {"WZ2", "Z2X"}})
            sets.push_back(make_set(9, 3, 2, words, 2));
    } else {
        throw UnsupportedDimension("no built-in observable sets for d=" + std::to_string(d) +
                                   " (available: 4, 8, 9)");
    }
    // Distinct-signature certification: computing each joint eigenbasis
    // throws DegenerateSignatures if any generator signature repeats.
    for (const ObservableSet& set : sets) joint_eigenbasis(set);
    return sets;
}

std::vector<ObservableSet> prime_sets(int p) {
    if (!galois::is_prime(p)) throw galois::NotPrime("p = " + std::to_string(p) + " is not prime");
    std::vector<ObservableSet> sets;
    auto single = [p](int x, int z) {
        ObservableSet set;
        set.d = p;
        set.generator_count = 1;
        set.words.push_back(WeylWord{p, {weylalg::Letter{x, z}}});
        return set;
    };
    sets.push_back(single(0, 1));  // Z
    sets.push_back(single(1, 0));  // X
    for (int t = 1; t < p; ++t) sets.push_back(single(1, t));  // XZ^t
    return sets;
}

namespace {

// One partially-refined signature class: an orthonormal column frame
// spanning the joint eigenspace of the generators processed so far.
struct Block {
    Matrix frame;
    std::vector<int> signature;
};

void fix_phase(Vector& v, double tol) {
    for (Eigen::Index i = 0; i < v.size(); ++i) {
        double mag = std::abs(v[i]);
        if (mag >= tol) {
            v *= std::conj(v[i]) / mag;
            return;
        }
    }
    throw PhaseConventionUnavailable("state has no amplitude above tolerance to anchor its phase");
}

}  // namespace

namespace detail {

Basis joint_eigenbasis_ordered(const ObservableSet& set, double tol,
                               const std::vector<int>& class_order) {
    const int d = set.d;
    const int p = set.words.at(0).p;

    std::vector<Block> blocks;
    blocks.push_back({Matrix::Identity(d, d), {}});

    for (int g = 0; g < set.generator_count; ++g) {
        Matrix u = word_matrix(set.words[g]);
        // Spectral projectors P_s = (1/p) sum_t w^(-st) U^t; exact root-of-
        // unity spectra make these an orthogonal resolution of identity, so
        // no eigenvalue-grouping tolerance is ever needed.
        std::vector<Matrix> projector(p, Matrix::Zero(d, d));
        Matrix power = Matrix::Identity(d, d);
        for (int t = 0; t < p; ++t) {
            for (int s = 0; s < p; ++s)
                projector[s] += weylalg::root_of_unity(p, (p - ((s * t) % p)) % p) * power;
            power = power * u;
        }
        for (int s = 0; s < p; ++s) projector[s] /= p;

        std::vector<Block> refined;
        for (const Block& block : blocks) {
            for (int s : class_order) {
                Matrix m = block.frame.adjoint() * projector[s] * block.frame;
                Eigen::SelfAdjointEigenSolver<Matrix> solver(m);
                std::vector<Eigen::Index> keep;
                for (Eigen::Index i = 0; i < solver.eigenvalues().size(); ++i)
                    if (solver.eigenvalues()[i] > 0.5) keep.push_back(i);
                if (keep.empty()) continue;
                Matrix sub(m.rows(), keep.size());
                for (size_t i = 0; i < keep.size(); ++i)
                    sub.col(i) = solver.eigenvectors().col(keep[i]);
                Block next{block.frame * sub, block.signature};
                next.signature.push_back(s);
                refined.push_back(std::move(next));
            }
        }
        blocks = std::move(refined);
    }

    // Reassemble in signature-rank order regardless of refinement order.
    std::vector<int> rank_of(p);
    {
        auto order = signature_rank_order(p);
        for (int r = 0; r < p; ++r) rank_of[order[r]] = r;
    }
    std::sort(blocks.begin(), blocks.end(), [&](const Block& a, const Block& b) {
        for (size_t i = 0; i < a.signature.size(); ++i)
            if (a.signature[i] != b.signature[i])
                return rank_of[a.signature[i]] < rank_of[b.signature[i]];
        return false;
    });

    Basis basis;
    basis.set = set;
    for (Block& block : blocks) {
        if (block.frame.cols() > 1) {
            std::string sig;
            for (int s : block.signature) sig += std::to_string(s);
            throw DegenerateSignatures("generator signature (" + sig + ") labels a " +
                                       std::to_string(block.frame.cols()) +
                                       "-dimensional eigenspace; generators do not separate "
                                       "the states");
        }
        Vector v = block.frame.col(0);
        fix_phase(v, tol);
        basis.states.push_back(std::move(v));
        basis.signatures.push_back(block.signature);
    }
    if (static_cast<int>(basis.states.size()) != d)
        throw Error("joint eigenbasis construction lost states; got " +
                    std::to_string(basis.states.size()) + " of " + std::to_string(d));

    // Certify the result: orthonormality, and every word in the set (not
    // just the generators) acting by an exact root of unity on every state.
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) {
            double expect = i == j ? 1.0 : 0.0;
            if (std::abs(std::abs(inner(basis.states[i], basis.states[j])) - expect) >= tol)
                throw Error("joint eigenbasis is not orthonormal within tolerance");
        }
    for (const WeylWord& w : set.words)
        for (const Vector& v : basis.states) weylalg::eigenvalue_exponent(w, v, tol);
    return basis;
}

}  // namespace detail

Basis joint_eigenbasis(const ObservableSet& set, double tol) {
    const int p = set.words.at(0).p;
    return detail::joint_eigenbasis_ordered(set, tol, signature_rank_order(p));
}

MubFamily family(int d, double tol) {
    std::vector<ObservableSet> sets;
    if (d == 4 || d == 8 || d == 9)
        sets = builtin_sets(d);
    else if (d == 2 || d == 3 || d == 5 || d == 7)
        sets = prime_sets(d);
    else
        throw UnsupportedDimension("supported dimensions are 2, 3, 4, 5, 7, 8, 9; got " +
                                   std::to_string(d));

    MubFamily fam;
    fam.d = d;
    for (size_t m = 0; m < sets.size(); ++m) {
        Basis basis = joint_eigenbasis(sets[m], tol);
        basis.m = static_cast<int>(m);
        fam.bases.push_back(std::move(basis));
    }
    UnbiasednessReport report = unbiasedness_report(fam, tol);
    if (!report.pass)
        throw SetValidationFailed("family is not mutually unbiased: bases " +
                                  std::to_string(report.worst_a) + " and " +
                                  std::to_string(report.worst_b) + " deviate by " +
                                  std::to_string(report.max_deviation));
    return fam;
}

UnbiasednessReport unbiasedness_report(const MubFamily& fam, double tol) {
    UnbiasednessReport report;
    report.d = fam.d;
    report.tol = tol;
    const double target = 1.0 / fam.d;
    for (size_t a = 0; a < fam.bases.size(); ++a)
        for (size_t b = a + 1; b < fam.bases.size(); ++b) {
            PairDeviation pair{static_cast<int>(a), static_cast<int>(b), 0.0};
            for (const Vector& va : fam.bases[a].states)
                for (const Vector& vb : fam.bases[b].states) {
                    double dev = std::abs(std::norm(inner(va, vb)) - target);
                    pair.max_deviation = std::max(pair.max_deviation, dev);
                }
            if (pair.max_deviation > report.max_deviation) {
                report.max_deviation = pair.max_deviation;
                report.worst_a = pair.basis_a;
                report.worst_b = pair.basis_b;
            }
            report.pairs.push_back(pair);
        }
    report.pass = report.max_deviation < tol;
    return report;
}

std::vector<std::pair<WeylWord, int>> signature_decode(const Basis& basis, int k, double tol) {
    if (k < 1 || k > static_cast<int>(basis.states.size()))
        throw Error("state index k=" + std::to_string(k) + " outside 1.." +
                    std::to_string(basis.states.size()));
    std::vector<std::pair<WeylWord, int>> decoded;
    for (const WeylWord& w : basis.set.words)
        decoded.emplace_back(w, weylalg::eigenvalue_exponent(w, basis.states[k - 1], tol));
    return decoded;
}

}  // namespace meanking::mub
