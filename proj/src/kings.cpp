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

#include "meanking/kings.hpp"

#include <algorithm>
#include <cmath>

namespace meanking::kings {

using weylalg::inner;
using weylalg::Matrix;
using weylalg::tensor;
using weylalg::Vector;

namespace {

// Internal linear-algebra tolerance (certification tolerances are the
// caller-visible `tol`, default 1e-9).
constexpr double kInternalTol = 1e-12;

int mod(int x, int m) {
    int r = x % m;
    return r < 0 ? r + m : r;
}

double unit_double(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

// Inverse-CDF sample from an explicit distribution (sums to 1 within tol).
int sample_index(const std::vector<double>& probs, std::mt19937_64& rng) {
    double u = unit_double(rng);
    double acc = 0.0;
    for (size_t i = 0; i < probs.size(); ++i) {
        acc += probs[i];
        if (u < acc) return static_cast<int>(i);
    }
    return static_cast<int>(probs.size()) - 1;  // guard against rounding
}

std::pair<int, int> prime_power_split(int d) {
    for (int p = 2; p <= d; ++p) {
        if (d % p != 0) continue;
        int q = 1, n = 0;
        while (q < d) {
            q *= p;
            ++n;
        }
        if (q != d) throw Error(std::to_string(d) + " is not a prime power");
        return {p, n};
    }
    throw Error(std::to_string(d) + " is not a prime power");
}

Vector doubled_state(const ProtocolSetup& setup, int m, int k) {
    return tensor(setup.object.bases[m].states[k - 1], setup.ancilla.bases[m][k - 1]);
}

void certify_gram(const std::vector<Vector>& states, double tol, const std::string& what) {
    const Eigen::Index dim = states.at(0).size();
    Matrix s(dim, static_cast<Eigen::Index>(states.size()));
    for (size_t i = 0; i < states.size(); ++i) s.col(static_cast<Eigen::Index>(i)) = states[i];
    Matrix gram = s.adjoint() * s;
    double dev = (gram - Matrix::Identity(gram.rows(), gram.cols())).cwiseAbs().maxCoeff();
    if (dev >= tol)
        throw GramDeviation(what + " Gram matrix deviates from identity by " +
                            std::to_string(dev));
}

}  // namespace

AncillaFamily ancilla_family(const mub::MubFamily& object, double tol) {
    AncillaFamily anc;
    anc.d = object.d;
    for (const mub::Basis& basis : object.bases) {
        std::vector<Vector> conj_states;
        for (const Vector& v : basis.states) conj_states.push_back(weylalg::conjugate_std(v));
        anc.bases.push_back(std::move(conj_states));
    }
    // Basis 0 must be real, i.e. fixed by conjugation.
    for (int j = 0; j < anc.d; ++j) {
        double dev = (anc.bases[0][j] - object.bases[0].states[j]).cwiseAbs().maxCoeff();
        if (dev >= tol)
            throw ConditionViolated("conjugated basis-0 state " + std::to_string(j + 1) +
                                    " differs from the object state by " + std::to_string(dev));
    }
    // <0_j|m_k> = <conj(m_k)|conj(0_j)> for all m, j, k.
    for (int m = 0; m <= anc.d; ++m)
        for (int j = 0; j < anc.d; ++j)
            for (int k = 0; k < anc.d; ++k) {
                std::complex<double> lhs =
                    inner(object.bases[0].states[j], object.bases[m].states[k]);
                std::complex<double> rhs = inner(anc.bases[m][k], anc.bases[0][j]);
                if (std::abs(lhs - rhs) >= tol)
                    throw ConditionViolated("ancilla condition fails at m=" + std::to_string(m) +
                                            " j=" + std::to_string(j + 1) +
                                            " k=" + std::to_string(k + 1));
            }
    return anc;
}

InitialState initial_state(const mub::MubFamily& object, const AncillaFamily& ancilla,
                           double tol) {
    InitialState state;
    state.d = object.d;
    auto [p, n] = prime_power_split(state.d);
    state.p = p;
    state.n = n;

    const double scale = 1.0 / std::sqrt(static_cast<double>(state.d));
    auto build_from = [&](int m) {
        Vector v = Vector::Zero(state.d * state.d);
        for (int k = 0; k < state.d; ++k)
            v += scale * tensor(object.bases[m].states[k], ancilla.bases[m][k]);
        return v;
    };

    state.psi0 = build_from(0);
    if (std::abs(state.psi0.norm() - 1.0) >= tol)
        throw Error("initial state is not normalized");
    for (int m = 1; m <= state.d; ++m) {
        double dev = (build_from(m) - state.psi0).cwiseAbs().maxCoeff();
        if (dev >= tol)
            throw MIndependenceViolated("basis m=" + std::to_string(m) +
                                        " yields a different state (amplitude deviation " +
                                        std::to_string(dev) + ")");
    }
    return state;
}

bool bell_factorization_check(const InitialState& state,
                              const std::vector<std::pair<int, int>>& pairing, double tol) {
    const int p = state.p;
    const int slots = 2 * state.n;
    std::vector<int> seen(slots + 1, 0);
    for (auto [a, b] : pairing) {
        if (a < 1 || a > slots || b < 1 || b > slots || a == b)
            throw BadPairing("pair (" + std::to_string(a) + "," + std::to_string(b) +
                             ") is not a pair of distinct positions in 1.." +
                             std::to_string(slots));
        ++seen[a];
        ++seen[b];
    }
    for (int s = 1; s <= slots; ++s)
        if (seen[s] != 1)
            throw BadPairing("position " + std::to_string(s) +
                             " is not covered exactly once; need a perfect matching of 1.." +
                             std::to_string(slots));

    // The target product of local maximally entangled pairs has amplitude
    // p^{-n/2} exactly when each pair's digits agree, and 0 otherwise.
    const double amp = std::pow(static_cast<double>(p), -0.5 * state.n);
    const int dim = state.d * state.d;
    for (int v = 0; v < dim; ++v) {
        std::vector<int> digit(slots + 1, 0);
        int rest = v;
        for (int s = slots; s >= 1; --s) {
            digit[s] = rest % p;
            rest /= p;
        }
        bool matched = std::all_of(pairing.begin(), pairing.end(),
                                   [&](auto pr) { return digit[pr.first] == digit[pr.second]; });
        if (std::abs(state.psi0[v] - std::complex<double>(matched ? amp : 0.0, 0.0)) >= tol)
            return false;
    }
    return true;
}

PsiBasis psi_basis(const mub::MubFamily& object, const AncillaFamily& ancilla, double tol) {
    PsiBasis psi;
    psi.d = object.d;
    const int d = psi.d;
    psi.q = weylalg::root_of_unity(d, 1);
    psi.states.assign(d * d, Vector());

    const double scale = 1.0 / std::sqrt(static_cast<double>(d));
    std::vector<Vector> doubled(d);
    psi.states[0] = Vector::Zero(d * d);
    for (int m = 0; m <= d; ++m) {
        for (int k = 0; k < d; ++k)
            doubled[k] = tensor(object.bases[m].states[k], ancilla.bases[m][k]);
        if (m == 0)
            for (int k = 0; k < d; ++k) psi.states[0] += scale * doubled[k];
        for (int j = 1; j <= d - 1; ++j) {
            Vector v = Vector::Zero(d * d);
            for (int k = 1; k <= d; ++k)
                v += scale * weylalg::root_of_unity(d, mod(-j * k, d)) * doubled[k - 1];
            psi.states[(d - 1) * m + j] = std::move(v);
        }
    }
    certify_gram(psi.states, tol, "Psi-basis");
    return psi;
}

LabelTable label_table(int d, const galois::FieldSpec& spec) {
    if (spec.order() != d)
        throw galois::SpecMismatch("field of order " + std::to_string(spec.order()) +
                                   " cannot label " + std::to_string(d) + " states");
    auto field_of_label = [&](int label) {
        return label == d ? galois::zero(spec) : galois::from_integer(label, spec);
    };
    auto label_of_field = [&](const galois::FieldElement& e) {
        return e.is_zero() ? d : galois::to_integer(e);
    };

    LabelTable table;
    table.d = d;
    table.spec = spec;
    for (int k0 = 1; k0 <= d; ++k0)
        for (int k1 = 1; k1 <= d; ++k1) {
            LabelRow row;
            row.labels.resize(d + 1);
            row.labels[0] = k0;
            row.labels[1] = k1;
            galois::FieldElement e0 = field_of_label(k0);
            galois::FieldElement e1 = field_of_label(k1);
            for (int m = 2; m <= d; ++m) {
                galois::FieldElement e =
                    galois::add(galois::mul(galois::from_integer(m - 1, spec), e0), e1);
                row.labels[m] = label_of_field(e);
            }
            table.rows.push_back(std::move(row));
        }
    return table;
}

CoincidenceReport coincidence_check(const LabelTable& table) {
    CoincidenceReport report;
    report.pass = true;
    const int positions = table.d + 1;
    for (size_t a = 0; a < table.rows.size(); ++a)
        for (size_t b = a + 1; b < table.rows.size(); ++b) {
            ++report.pairs_checked;
            int agree = 0;
            for (int m = 0; m < positions; ++m)
                if (table.rows[a].labels[m] == table.rows[b].labels[m]) ++agree;
            if (agree != 1 && report.pass) {
                report.pass = false;
                report.row_a = static_cast<int>(a);
                report.row_b = static_cast<int>(b);
                report.agreements = agree;
            }
        }
    return report;
}

TrackingBasis tracking_basis(const PsiBasis& psi, const LabelTable& table, double tol) {
    TrackingBasis tracking;
    tracking.d = psi.d;
    const int d = psi.d;
    if (table.d != d) throw Error("label table and Psi basis disagree on d");
    for (const LabelRow& row : table.rows) {
        Vector v = psi.states[0];
        for (int m = 0; m <= d; ++m)
            for (int j = 1; j <= d - 1; ++j)
                v += weylalg::root_of_unity(d, mod(j * row.labels[m], d)) *
                     psi.states[(d - 1) * m + j];
        tracking.states.push_back(v / d);
    }
    certify_gram(tracking.states, tol, "tracking-basis");
    return tracking;
}

ProtocolSetup build_protocol(int d, double tol, std::optional<galois::FieldSpec> spec) {
    ProtocolSetup setup;
    setup.d = d;
    setup.tol = tol;
    setup.object = mub::family(d, tol);
    setup.ancilla = ancilla_family(setup.object, tol);
    setup.init = initial_state(setup.object, setup.ancilla, tol);
    setup.psi = psi_basis(setup.object, setup.ancilla, tol);
    setup.table = label_table(d, spec ? *spec : galois::default_spec(setup.init.p, setup.init.n));
    setup.tracking = tracking_basis(setup.psi, setup.table, tol);
    return setup;
}

RoundTranscript run_round(const ProtocolSetup& setup, int m, std::mt19937_64& rng,
                          const RoundOptions& options) {
    const int d = setup.d;
    if (m < 0 || m > d)
        throw Error("basis index m=" + std::to_string(m) + " outside 0.." + std::to_string(d));

    RoundTranscript t;
    t.d = d;
    t.m = m;

    // King's Born distribution over outcomes of basis m on the object half:
    // p_k = || (<m_k| (x) 1) Psi_0 ||^2, certified uniform.
    std::vector<double> king_probs(d);
    std::vector<Vector> residuals(d);
    for (int k = 1; k <= d; ++k) {
        const Vector& mk = setup.object.bases[m].states[k - 1];
        Vector r = Vector::Zero(d);
        for (int o = 0; o < d; ++o)
            for (int a = 0; a < d; ++a) r[a] += std::conj(mk[o]) * setup.init.psi0[o * d + a];
        king_probs[k - 1] = r.squaredNorm();
        residuals[k - 1] = std::move(r);
        if (std::abs(king_probs[k - 1] - 1.0 / d) >= kInternalTol)
            throw Error("king outcome distribution is not uniform at m=" + std::to_string(m) +
                        " k=" + std::to_string(k));
    }
    if (options.force_king_outcome) {
        t.king_k = *options.force_king_outcome;
        if (t.king_k < 1 || t.king_k > d)
            throw Error("forced king outcome " + std::to_string(t.king_k) + " outside 1.." +
                        std::to_string(d));
    } else {
        t.king_k = sample_index(king_probs, rng) + 1;
    }

    // Collapse: the normalized ancilla residual must be |conj(m_k)>.
    Vector collapsed = residuals[t.king_k - 1].normalized();
    if (std::abs(std::abs(inner(setup.ancilla.bases[m][t.king_k - 1], collapsed)) - 1.0) >=
        setup.tol)
        throw Error("collapse after the king's measurement missed the conjugated basis state");
    t.king_eigenvalues = mub::signature_decode(setup.object.bases[m], t.king_k, setup.tol);

    // Physicist's tracking measurement on the doubled state.
    Vector doubled = doubled_state(setup, m, t.king_k);
    std::vector<double> row_probs(setup.tracking.states.size());
    for (size_t r = 0; r < setup.tracking.states.size(); ++r)
        row_probs[r] = std::norm(inner(setup.tracking.states[r], doubled));
    if (options.force_row) {
        t.row_index = *options.force_row;
        if (t.row_index < 0 || t.row_index >= static_cast<int>(row_probs.size()))
            throw Error("forced row index outside the table");
        if (row_probs[t.row_index] <= 1.0 / (2.0 * d))
            throw Error("forced row " + std::to_string(t.row_index) +
                        " has zero probability in this branch");
    } else {
        t.row_index = sample_index(row_probs, rng);
    }
    t.row = setup.table.rows[t.row_index];

    t.predicted_k = t.row.labels[m];
    t.predicted_eigenvalues = mub::signature_decode(setup.object.bases[m], t.predicted_k,
                                                    setup.tol);
    t.correct = t.predicted_k == t.king_k && t.predicted_eigenvalues == t.king_eigenvalues;
    if (!t.correct)
        throw PredictionFailed("prediction missed at m=" + std::to_string(m) +
                               ": king found k=" + std::to_string(t.king_k) +
                               ", physicist predicted k=" + std::to_string(t.predicted_k) +
                               " from row " + std::to_string(t.row_index));
    return t;
}

VerifyReport exhaustive_verify(const ProtocolSetup& setup) {
    VerifyReport report;
    const int d = setup.d;
    report.d = d;
    const double uniform = 1.0 / d;
    for (int m = 0; m <= d; ++m)
        for (int k = 1; k <= d; ++k) {
            Vector doubled = doubled_state(setup, m, k);
            int support = 0;
            for (size_t r = 0; r < setup.tracking.states.size(); ++r) {
                double a = std::abs(inner(setup.tracking.states[r], doubled));
                if (a * a > uniform / 2) {
                    ++support;
                    report.max_prob_slack = std::max(report.max_prob_slack,
                                                     std::abs(a * a - uniform));
                    if (setup.table.rows[r].labels[m] != k)
                        throw PredictionFailed(
                            "branch m=" + std::to_string(m) + " k=" + std::to_string(k) +
                            " row=" + std::to_string(r) + " predicts k=" +
                            std::to_string(setup.table.rows[r].labels[m]));
                    ++report.branches;
                    ++report.correct;
                } else {
                    report.max_stray_overlap = std::max(report.max_stray_overlap, a);
                }
            }
            if (support != d)
                throw PredictionFailed("branch m=" + std::to_string(m) + " k=" +
                                       std::to_string(k) + " has " + std::to_string(support) +
                                       " possible tracking rows, expected " + std::to_string(d));
        }
    report.pass = report.correct == report.branches &&
                  report.branches == static_cast<long long>(d + 1) * d * d;
    return report;
}

VerifyReport exhaustive_verify(int d, double tol) {
    return exhaustive_verify(build_protocol(d, tol));
}

SampleReport sample_verify(const ProtocolSetup& setup, int rounds, std::uint64_t seed) {
    SampleReport report;
    report.d = setup.d;
    report.rounds = rounds;
    report.seed = seed;
    std::mt19937_64 rng(seed);
    for (int i = 0; i < rounds; ++i) {
        int m = static_cast<int>(unit_double(rng) * (setup.d + 1));
        m = std::min(m, setup.d);
        RoundTranscript t = run_round(setup, m, rng);
        if (t.correct) ++report.correct;
    }
    report.pass = report.correct == report.rounds;
    return report;
}

std::vector<std::string> row_digits(const LabelTable& table) {
    std::vector<std::string> out;
    for (const LabelRow& row : table.rows) {
        std::string s;
        for (size_t m = 0; m < row.labels.size(); ++m) {
            if (table.d > 9 && m > 0) s += ' ';
            s += std::to_string(row.labels[m]);
        }
        out.push_back(std::move(s));
    }
    return out;
}

std::vector<std::string> printed_rows(int d) {
    // Verbatim digit strings from the published reference tables, in their
    // printed (row-major) order. Kept exactly as printed - including any
    // defects - so compare_with_printed can document where the generated,
    // coincidence-verified table disagrees with the printed source.
    if (d == 4)
        return {
            "11432", "12341", "13214", "14123",  //
            "21324", "22413", "23142", "24231",  //
            "31243", "32134", "33421", "34312",  //
            "41111", "42222", "43333", "44444",
        };
    if (d == 8)
        return {
            "118325476", "123816745", "132187654", "145678123", "154761832", "167452381",
            "176543218", "181234567",  //
            "213572064", "228641357", "231758246", "246827531", "257136428", "264285713",
            "275314682", "282463175",  //
            "312746583", "321475638", "338564721", "347213856", "356382147", "365831274",
            "374128365", "383657412",  //
            "415267348", "426154873", "437845162", "448732615", "451623784", "462518437",
            "473481526", "484376251",  //
            "514853627", "527368514", "536271485", "541586372", "558417263", "563724158",
            "572635841", "585142736",  //
            "617684235", "624537186", "635426817", "642351768", "653248671", "668173542",
            "671862453", "686715324",  //
            "716438752", "725783461", "734612578", "743165287", "752874316", "761347825",
            "778256134", "787521643",  //
            "811111111", "822222222", "833333333", "844444444", "855555555", "866666666",
            "877777777", "888888888",
        };
    if (d == 9)
        return {
            "1129453786", "1291534867", "1345678912", "1453786129", "1534867291", "1678912345",
            "1786129453", "1867291534", "1912345678",  //
            "2192768435", "2219876543", "2354921687", "2435192768", "2543219876", "2687354921",
            "2768435192", "2876543219", "2921687354",  //
            "3147825369", "3258693471", "3369147825", "3471258693", "3582936714", "3693471258",
            "3714582936", "3825369147", "3936714582",  //
            "4156237948", "4237948156", "4372489561", "4489561372", "4561372489", "4615723894",
            "4723894615", "4894615723", "4948156237",  //
            "5138579624", "5246381795", "5381795246", "5462813957", "5579624138", "5624138579",
            "5795246381", "5813957462", "5957462813",  //
            "6174396852", "6285417639", "6396852174", "6417639285", "6528741963", "6639285417",
            "6741963528", "6852174396", "6963528741",  //
            "7183642507", "7264759318", "7318264759", "7426975831", "7597183642", "7642597183",
            "7759318264", "7831426975", "7975831426",  //
            "8165984273", "8273165984", "8327516498", "8498327516", "8516498327", "8651849732",
            "8732651849", "8849732651", "8984273165",  //
            "9111111111", "9222222222", "9333333333", "9444444444", "9555555555", "9666666666",
            "9777777777", "9888888888", "9999999999",
        };
    throw mub::UnsupportedDimension("printed reference tables exist for d in {4, 8, 9}, not d=" +
                                    std::to_string(d));
}

PrintedComparison compare_with_printed(const LabelTable& table) {
    PrintedComparison cmp;
    cmp.d = table.d;
    std::vector<std::string> generated = row_digits(table);
    std::vector<std::string> printed = printed_rows(table.d);
    if (generated.size() != printed.size())
        throw Error("generated table has " + std::to_string(generated.size()) +
                    " rows but the printed table has " + std::to_string(printed.size()));
    for (size_t i = 0; i < generated.size(); ++i) {
        if (generated[i] == printed[i])
            ++cmp.matched;
        else
            cmp.mismatches.push_back(
                {static_cast<int>(i), printed[i], generated[i]});
    }
    return cmp;
}

}  // namespace meanking::kings
