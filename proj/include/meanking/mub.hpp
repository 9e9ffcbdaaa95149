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
 * Mutually unbiased bases from commuting sets of Weyl words.
 *
 * Dimensions 4, 8 and 9 ship fixture observable sets (one per basis, d+1 per
 * dimension); prime dimensions use the standard single-qudit family Z, X,
 * XZ, ..., XZ^{p-1}. A basis is the joint eigenbasis of one set, with three
 * conventions fixed once and used everywhere:
 *
 *  1. basis 0 of each family diagonalizes Z-type words (the fixture tables
 *     put the standard-basis set first);
 *  2. states are ordered by their eigenvalue signature with respect to the
 *     set's generators, ranking eigenvalues +1 before -1 for p = 2 and
 *     w, conj(w), 1 for p = 3 (exponents 1, 2, 0);
 *  3. each state's phase makes its first above-tolerance amplitude real
 *     positive - equivalently, for any basis unbiased to the standard one,
 *     the overlap with |0...0> is real positive.
 */

#pragma once

#include <utility>
#include <vector>

#include "meanking/error.hpp"
#include "meanking/weylalg.hpp"

namespace meanking::mub {

struct UnsupportedDimension : Error {
    using Error::Error;
};
struct SetValidationFailed : Error {
    using Error::Error;
};
struct DegenerateSignatures : Error {
    using Error::Error;
};
struct PhaseConventionUnavailable : Error {
    using Error::Error;
};

/// A commuting set of words whose first `generator_count` members already
/// separate the d joint eigenstates by eigenvalue signature.
struct ObservableSet {
    int d = 0;
    std::vector<weylalg::WeylWord> words;
    int generator_count = 0;

    std::vector<weylalg::WeylWord> generators() const {
        return {words.begin(), words.begin() + generator_count};
    }
};

/// One ordered orthonormal eigenbasis; signatures hold the generator
/// eigenvalue exponents of each state, in state order.
struct Basis {
    int m = 0;
    ObservableSet set;
    std::vector<weylalg::Vector> states;
    std::vector<std::vector<int>> signatures;
};

struct MubFamily {
    int d = 0;
    std::vector<Basis> bases;  // d+1 of them, basis 0 = standard
};

struct PairDeviation {
    int basis_a = 0;
    int basis_b = 0;
    double max_deviation = 0.0;  // of |<a|b>|^2 from 1/d, worst state pair
};

struct UnbiasednessReport {
    int d = 0;
    double tol = 0.0;
    double max_deviation = 0.0;
    int worst_a = 0, worst_b = 0;  // basis pair achieving max_deviation
    bool pass = false;
    std::vector<PairDeviation> pairs;
};

/// Eigenvalue rank order used in signatures: {0,1} for p=2 (+1 before -1),
/// {1,2,0} for odd p (w, w^2, ..., then 1).
std::vector<int> signature_rank_order(int p);

/// The d+1 fixture sets for d in {4, 8, 9}, in table order; each is checked
/// for pairwise commutativity (SetValidationFailed names the offending pair)
/// and distinct generator signatures before return.
std::vector<ObservableSet> builtin_sets(int d);

/// The standard prime-dimension family {Z}, {X}, {XZ}, ..., {XZ^{p-1}}.
std::vector<ObservableSet> prime_sets(int p);

Basis joint_eigenbasis(const ObservableSet& set, double tol = kDefaultTol);

namespace detail {
/// As joint_eigenbasis, but refining eigenvalue classes in the given order
/// (a permutation of 0..p-1). The result must not depend on it; exposed so
/// tests can verify that invariance.
Basis joint_eigenbasis_ordered(const ObservableSet& set, double tol,
                               const std::vector<int>& class_order);
}  // namespace detail

/// Full family for d in {2, 3, 4, 5, 7, 8, 9}; certifies the cross-basis
/// unbiasedness invariant before returning.
MubFamily family(int d, double tol = kDefaultTol);

UnbiasednessReport unbiasedness_report(const MubFamily& fam, double tol = kDefaultTol);

/// Eigenvalue exponent of every word in the basis's set (generators and
/// derived words) on state k (1-based), each certified on the actual matrix.
std::vector<std::pair<weylalg::WeylWord, int>> signature_decode(const Basis& basis, int k,
                                                                double tol = kDefaultTol);

}  // namespace meanking::mub
