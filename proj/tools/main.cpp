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

/*
 * meanking - finite-field tables, mutually unbiased bases and the mean
 * king retrodiction protocol in prime power dimensions.
 *
 * Exit codes: 0 success, 2 bad input, 3 validation failure, 4 failed
 * prediction.
 */

#include <CLI11.hpp>

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "meanking/galois.hpp"
#include "meanking/kings.hpp"
#include "meanking/mub.hpp"
#include "meanking/serialize.hpp"
#include "meanking/weylalg.hpp"

namespace {

using namespace meanking;
using serialize::Format;

constexpr int kExitBadInput = 2;
constexpr int kExitValidation = 3;
constexpr int kExitPrediction = 4;

struct GlobalOptions {
    std::string format = "text";
    std::string out_path;
    double tol = kDefaultTol;
    std::uint64_t seed = 0;
    std::vector<int> poly;

    Format parsed_format() const { return serialize::parse_format(format); }

    std::optional<galois::FieldSpec> field_override(int p, int n) const {
        if (poly.empty()) return std::nullopt;
        return galois::validate_spec(p, n, poly);
    }
};

void emit(const GlobalOptions& opts, const std::string& rendered) {
    if (opts.out_path.empty()) {
        std::cout << rendered;
        return;
    }
    std::ofstream file(opts.out_path, std::ios::binary);
    if (!file) throw Error("cannot open output path '" + opts.out_path + "'");
    file << rendered;
    if (!file.flush()) throw Error("failed writing to '" + opts.out_path + "'");
}

int supported_dimension(int d) {
    static const int supported[] = {2, 3, 4, 5, 7, 8, 9};
    for (int s : supported)
        if (s == d) return d;
    throw mub::UnsupportedDimension("dimension " + std::to_string(d) +
                                    " is not a prime power in 2..9");
}

std::pair<int, int> split_dimension(int d) {
    for (int p = 2; p <= d; ++p) {
        if (d % p != 0) continue;
        int q = 1, n = 0;
        while (q < d) q *= p, ++n;
        return {p, n};
    }
    return {d, 1};
}

int cmd_field(const GlobalOptions& opts, int p, int n) {
    galois::FieldSpec spec =
        opts.poly.empty() ? galois::default_spec(p, n) : galois::validate_spec(p, n, opts.poly);
    emit(opts, serialize::field_tables(spec, opts.parsed_format()));
    return 0;
}

int cmd_mub(const GlobalOptions& opts, int d) {
    supported_dimension(d);
    mub::MubFamily fam = mub::family(d, opts.tol);
    mub::UnbiasednessReport report = mub::unbiasedness_report(fam, opts.tol);
    emit(opts, serialize::mub_family(fam, report, opts.parsed_format()));
    return report.pass ? 0 : kExitValidation;
}

int cmd_labels(const GlobalOptions& opts, int d) {
    supported_dimension(d);
    auto [p, n] = split_dimension(d);
    std::optional<galois::FieldSpec> spec = opts.field_override(p, n);
    kings::LabelTable table = kings::label_table(d, spec ? *spec : galois::default_spec(p, n));
    kings::CoincidenceReport coincidence = kings::coincidence_check(table);
    emit(opts, serialize::label_table(table, opts.parsed_format()));
    if (!coincidence.pass) {
        std::cerr << "error: coincidence check failed: rows " << coincidence.row_a << " and "
                  << coincidence.row_b << " agree in " << coincidence.agreements
                  << " positions (expected exactly 1)\n";
        return kExitValidation;
    }
    return 0;
}

int cmd_verify(const GlobalOptions& opts, int d, bool exhaustive, int rounds) {
    supported_dimension(d);
    auto [p, n] = split_dimension(d);
    kings::ProtocolSetup setup = kings::build_protocol(d, opts.tol, opts.field_override(p, n));
    if (rounds > 0 && !exhaustive) {
        kings::SampleReport report = kings::sample_verify(setup, rounds, opts.seed);
        emit(opts, serialize::sample_report(report, opts.parsed_format()));
        return report.pass ? 0 : kExitPrediction;
    }
    kings::VerifyReport report = kings::exhaustive_verify(setup);
    emit(opts, serialize::verify_report(report, opts.parsed_format()));
    return report.pass ? 0 : kExitPrediction;
}

int cmd_play(const GlobalOptions& opts, int d, bool reveal_early) {
    supported_dimension(d);
    kings::ProtocolSetup setup = kings::build_protocol(d, opts.tol);

    std::cout << "The object and its ancilla are prepared in the maximally entangled state\n"
              << "of dimension " << d << " x " << d << ". The king now picks one of the " << d + 1
              << " bases.\n\n";

    int m = -1;
    std::string line;
    while (true) {
        std::cout << "Choose the king's basis m (0.." << d << "): " << std::flush;
        if (!std::getline(std::cin, line)) {
            std::cout << "\nNo basis chosen; the round is abandoned.\n";
            return kExitBadInput;
        }
        std::istringstream in(line);
        if (in >> m && m >= 0 && m <= d) {
            std::string rest;
            if (!(in >> rest)) break;
        }
        std::cout << "Please enter a single number in the range 0.." << d << ".\n";
    }

    std::mt19937_64 rng(opts.seed);
    kings::RoundTranscript t = kings::run_round(setup, m, rng);

    std::cout << "\nThe king measures basis " << m << " {";
    for (size_t i = 0; i < setup.object.bases[m].set.words.size(); ++i)
        std::cout << (i ? ", " : "") << weylalg::render_word(setup.object.bases[m].set.words[i]);
    std::cout << "}";
    if (reveal_early)
        std::cout << " and secretly obtains state k = " << t.king_k << ".\n";
    else
        std::cout << " and keeps the outcome to himself.\n";

    std::cout << "The physicist measures her tracking basis and obtains row " << t.row_index
              << ": [" << kings::row_digits(setup.table)[t.row_index] << "].\n"
              << "The king reveals that he measured basis m = " << m << ".\n\n"
              << "Physicist's prediction: k = " << t.predicted_k << '\n'
              << "King's actual outcome:  k = " << t.king_k << '\n'
              << "Verdict: " << (t.correct ? "correct" : "incorrect") << '\n';
    return t.correct ? 0 : kExitPrediction;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Finite-field tables, mutually unbiased bases and the mean king's\n"
                 "retrodiction protocol in prime power dimensions 2..9."};
    app.require_subcommand(1);

    GlobalOptions opts;
    app.add_option("--format", opts.format, "Output format: text, csv or json")
        ->capture_default_str()
        ->check(CLI::IsMember({"text", "csv", "json"}));
    app.add_option("--out", opts.out_path, "Write output to this path instead of stdout");
    app.add_option("--tol", opts.tol, "Certification tolerance")->capture_default_str();
    app.add_option("--seed", opts.seed, "Random seed for sampled rounds")
        ->capture_default_str();
    app.add_option("--poly", opts.poly,
                   "Field modulus coefficients c0,c1,... (low degree first)")
        ->delimiter(',');

    int p = 0, n = 1, dim = 0, rounds = 0;
    bool exhaustive = false, reveal_early = false;

    CLI::App* field = app.add_subcommand("field", "Print addition and multiplication tables");
    field->fallthrough();
    field->add_option("--p", p, "Characteristic (prime)")->required();
    field->add_option("--n", n, "Extension degree")->capture_default_str();

    CLI::App* mub_cmd =
        app.add_subcommand("mub", "Print the mutually unbiased bases and certification");
    mub_cmd->fallthrough();
    mub_cmd->add_option("--dim", dim, "Dimension (prime power in 2..9)")->required();

    CLI::App* labels = app.add_subcommand("labels", "Print the state label table");
    labels->fallthrough();
    labels->add_option("--dim", dim, "Dimension (prime power in 2..9)")->required();

    CLI::App* verify = app.add_subcommand("verify", "Verify the retrodiction protocol");
    verify->fallthrough();
    verify->add_option("--dim", dim, "Dimension (prime power in 2..9)")->required();
    verify->add_flag("--exhaustive", exhaustive,
                     "Check every branch (default unless --rounds is given)");
    verify->add_option("--rounds", rounds, "Run this many sampled rounds instead");

    CLI::App* play = app.add_subcommand("play", "Interactive round: you act as the king");
    play->fallthrough();
    play->add_option("--dim", dim, "Dimension (prime power in 2..9)")->required();
    play->add_flag("--reveal-early", reveal_early,
                   "Reveal the king's outcome before the prediction (debugging)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : kExitBadInput;
    }

    try {
        if (*field) return cmd_field(opts, p, n);
        if (*mub_cmd) return cmd_mub(opts, dim);
        if (*labels) return cmd_labels(opts, dim);
        if (*verify) return cmd_verify(opts, dim, exhaustive, rounds);
        if (*play) return cmd_play(opts, dim, reveal_early);
    } catch (const kings::PredictionFailed& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitPrediction;
    } catch (const galois::NotPrime& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitBadInput;
    } catch (const galois::BadDegree& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitBadInput;
    } catch (const galois::Reducible& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitBadInput;
    } catch (const galois::OutOfRange& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitBadInput;
    } catch (const weylalg::UnknownSymbol& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitBadInput;
    } catch (const mub::UnsupportedDimension& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitBadInput;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitValidation;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitValidation;
    }
    return 0;
}
