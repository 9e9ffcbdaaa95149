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
 * The retrodiction protocol itself.
 *
 * A round: the physicist prepares the maximally entangled object-ancilla
 * state Psi_0, hands the object to the king, who measures one of the d+1
 * unbiased bases (index m) and finds state k; the system collapses to the
 * doubled state |m_k>|conj(m_k)>. The physicist then measures the tracking
 * basis - d^2 states |[k_0...k_d]>, one per label row, each overlapping
 * exactly one doubled state per basis with magnitude 1/sqrt(d). Whatever
 * row she obtains, its m-th label IS the king's outcome.
 *
 * Label rows come from seeds (k_0, k_1) in 1..d x 1..d via
 *     k_m = (m-1) * k_0 + k_1   (m = 2..d, arithmetic in GF(p^n)),
 * where label L < d stands for the field element with integer code L and
 * label d stands for the zero element. Any two rows agree in exactly one
 * position; that coincidence property is equivalent to orthogonality of the
 * corresponding tracking states.
 */

#pragma once

#include <complex>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "meanking/error.hpp"
#include "meanking/galois.hpp"
#include "meanking/mub.hpp"
#include "meanking/weylalg.hpp"

namespace meanking::kings {

struct ConditionViolated : Error {
    using Error::Error;
};
struct MIndependenceViolated : Error {
    using Error::Error;
};
struct BadPairing : Error {
    using Error::Error;
};
struct GramDeviation : Error {
    using Error::Error;
};
struct PredictionFailed : Error {
    using Error::Error;
};

/// The d+1 conjugated bases; bases[m][k-1] = conj(|m_k>) entry-wise.
struct AncillaFamily {
    int d = 0;
    std::vector<std::vector<weylalg::Vector>> bases;
};

/// The entangled state of Eq.-(1) form: d^{-1/2} sum_k |m_k>|conj(m_k)>,
/// certified identical for every m. p^n = d records the local factorization.
struct InitialState {
    int d = 0;
    int p = 0;
    int n = 0;
    weylalg::Vector psi0;  // dimension d^2, object index major
};

/// Psi_0 plus Psi_{(d-1)m+j} = d^{-1/2} sum_k |m_k conj(m_k)> q^{-jk} for
/// m = 0..d, j = 1..d-1; an orthonormal basis of the d^2 joint space.
struct PsiBasis {
    int d = 0;
    std::complex<double> q;  // exp(2*pi*i/d)
    std::vector<weylalg::Vector> states;
};

struct LabelRow {
    std::vector<int> labels;  // d+1 entries, values 1..d, position = m
};

struct LabelTable {
    int d = 0;
    galois::FieldSpec spec;
    std::vector<LabelRow> rows;  // d^2 rows sorted by (labels[0], labels[1])
};

struct CoincidenceReport {
    bool pass = false;
    long long pairs_checked = 0;
    // First violating pair, if any:
    int row_a = -1;
    int row_b = -1;
    int agreements = -1;
};

/// Tracking states, aligned 1:1 with LabelTable rows.
struct TrackingBasis {
    int d = 0;
    std::vector<weylalg::Vector> states;
};

struct RoundTranscript {
    int d = 0;
    int m = -1;                 // basis the king chose
    int king_k = 0;             // his outcome, 1..d
    std::vector<std::pair<weylalg::WeylWord, int>> king_eigenvalues;
    int row_index = -1;         // physicist's tracking outcome
    LabelRow row;
    int predicted_k = 0;
    std::vector<std::pair<weylalg::WeylWord, int>> predicted_eigenvalues;
    bool correct = false;
};

struct VerifyReport {
    int d = 0;
    long long branches = 0;          // (m, k, possible row) triples visited
    long long correct = 0;
    double max_prob_slack = 0.0;     // |p_row - 1/d| over in-support rows
    double max_stray_overlap = 0.0;  // |<row|m_k conj(m_k)>| off support
    bool pass = false;
};

struct SampleReport {
    int d = 0;
    int rounds = 0;
    int correct = 0;
    std::uint64_t seed = 0;
    bool pass = false;
};

/// Everything one dimension's protocol needs, built once and reused.
struct ProtocolSetup {
    int d = 0;
    double tol = kDefaultTol;
    mub::MubFamily object;
    AncillaFamily ancilla;
    InitialState init;
    PsiBasis psi;
    LabelTable table;
    TrackingBasis tracking;
};

struct RoundOptions {
    std::optional<int> force_king_outcome;  // 1..d
    std::optional<int> force_row;           // absolute row index, 0..d^2-1
};

/// Entry-wise conjugation of every object basis. Certifies |conj(0_j)> =
/// |0_j> and <0_j|m_k> = <conj(m_k)|conj(0_j)> for all m, j, k.
AncillaFamily ancilla_family(const mub::MubFamily& object, double tol = kDefaultTol);

/// Builds Psi_0 from basis 0 and certifies the m-independence invariant:
/// every basis yields the same amplitudes (else MIndependenceViolated).
InitialState initial_state(const mub::MubFamily& object, const AncillaFamily& ancilla,
                           double tol = kDefaultTol);

/// True iff regrouping the 2n local qudits by `pairing` (1-based positions,
/// object first) factorizes psi0 into maximally entangled local pairs.
/// The pairing must be a perfect matching of 1..2n (else BadPairing).
bool bell_factorization_check(const InitialState& state,
                              const std::vector<std::pair<int, int>>& pairing,
                              double tol = kDefaultTol);

PsiBasis psi_basis(const mub::MubFamily& object, const AncillaFamily& ancilla,
                   double tol = kDefaultTol);

/// Label rows from Eq.-(4) arithmetic over the given field (whose order must
/// equal d, else galois::SpecMismatch).
LabelTable label_table(int d, const galois::FieldSpec& spec);

/// All-pairs "exactly one agreement" check.
CoincidenceReport coincidence_check(const LabelTable& table);

TrackingBasis tracking_basis(const PsiBasis& psi, const LabelTable& table,
                             double tol = kDefaultTol);

/// Family, ancillas, initial state, Psi basis, labels and tracking basis for
/// one dimension; `spec` overrides the label-table field (default pinned).
ProtocolSetup build_protocol(int d, double tol = kDefaultTol,
                             std::optional<galois::FieldSpec> spec = std::nullopt);

/// One protocol round. Outcomes are sampled from the exact Born
/// distributions through `rng` unless forced; forcing an impossible branch
/// is an error. Throws PredictionFailed if the prediction misses (a bug).
RoundTranscript run_round(const ProtocolSetup& setup, int m, std::mt19937_64& rng,
                          const RoundOptions& options = {});

/// Visits every (basis, outcome, possible tracking row) branch and certifies
/// the prediction on each; also certifies the uniform Born weights.
VerifyReport exhaustive_verify(const ProtocolSetup& setup);
VerifyReport exhaustive_verify(int d, double tol = kDefaultTol);

/// `rounds` random rounds (king's basis uniform) under the given seed.
SampleReport sample_verify(const ProtocolSetup& setup, int rounds, std::uint64_t seed);

/// Concatenated-digit rendering, one string per row ("11432", ...); labels
/// are single digits at desk scale (d <= 9), space-separated beyond that.
std::vector<std::string> row_digits(const LabelTable& table);

/// Verbatim row strings of the published reference tables for d in {4,8,9},
/// in their printed order (which matches this library's row order).
std::vector<std::string> printed_rows(int d);

struct PrintedRowMismatch {
    int index = -1;
    std::string printed;
    std::string generated;
};

/// Compares the generated table against printed_rows(d). The generated
/// table is the authority (it is coincidence-verified); mismatches flag
/// defects in the printed source rather than failures of the construction.
struct PrintedComparison {
    int d = 0;
    int matched = 0;
    std::vector<PrintedRowMismatch> mismatches;
};

PrintedComparison compare_with_printed(const LabelTable& table);

}  // namespace meanking::kings
