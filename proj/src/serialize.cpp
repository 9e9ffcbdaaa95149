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

#include "meanking/serialize.hpp"

#include <json.hpp>

#include <cmath>
#include <cstdio>
#include <sstream>

namespace meanking::serialize {

using nlohmann::json;

namespace {

std::string g3(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.3g", x);
    return buf;
}

std::string g17(double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

std::string pad(const std::string& s, size_t width) {
    return s + std::string(width > s.size() ? width - s.size() : 0, ' ');
}

const char* verdict(bool pass) { return pass ? "PASS" : "FAIL"; }

std::string row_string(const kings::LabelRow& row, int d) {
    std::string s;
    for (size_t m = 0; m < row.labels.size(); ++m) {
        if (d > 9 && m > 0) s += ' ';
        s += std::to_string(row.labels[m]);
    }
    return s;
}

json field_json(const galois::FieldSpec& spec) {
    return json{{"p", spec.p}, {"n", spec.n}, {"poly", spec.poly}};
}

json eigenvalue_json(const std::vector<std::pair<weylalg::WeylWord, int>>& values) {
    json arr = json::array();
    for (const auto& [word, s] : values)
        arr.push_back({{"word", weylalg::render_word(word)}, {"exponent", s}});
    return arr;
}

std::string eigenvalue_list_text(const std::vector<std::pair<weylalg::WeylWord, int>>& values) {
    std::string out;
    for (const auto& [word, s] : values) {
        if (!out.empty()) out += ", ";
        out += weylalg::render_word(word) + "=" + eigenvalue_text(word.p, s);
    }
    return out;
}

std::string signature_string(const std::vector<int>& signature, int p) {
    std::string out;
    for (int s : signature) out += eigenvalue_text(p, s);
    return out;
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

}  // namespace

Format parse_format(const std::string& name) {
    if (name == "text") return Format::Text;
    if (name == "csv") return Format::Csv;
    if (name == "json") return Format::Json;
    throw Error("unknown format '" + name + "'; expected text, csv or json");
}

std::string amplitude_shorthand(std::complex<double> amplitude, double scale) {
    const std::complex<double> v = amplitude * scale;
    const double half_sqrt3 = std::sqrt(3.0) / 2.0;
    const struct {
        std::complex<double> value;
        const char* text;
    } tokens[] = {
        {{0.0, 0.0}, "0"},
        {{1.0, 0.0}, "1"},
        {{-1.0, 0.0}, "1̄"},
        {{0.0, 1.0}, "i"},
        {{0.0, -1.0}, "ī"},
        {{-0.5, half_sqrt3}, "ω"},
        {{-0.5, -half_sqrt3}, "ω̄"},
    };
    for (const auto& t : tokens)
        if (std::abs(v - t.value) < 1e-9) return t.text;
    char buf[80];
    std::snprintf(buf, sizeof buf, "(%.6g,%.6g)", v.real(), v.imag());
    return buf;
}

std::string eigenvalue_text(int p, int exponent) {
    if (p == 2) return exponent == 0 ? "+" : "-";
    if (p == 3) {
        if (exponent == 0) return "1";
        return exponent == 1 ? "ω" : "ω̄";
    }
    return exponent == 0 ? "1" : "ω^" + std::to_string(exponent);
}

std::string field_tables(const galois::FieldSpec& spec, Format format) {
    const int q = spec.order();
    std::vector<std::string> names(q);
    std::vector<std::vector<int>> add_table(q, std::vector<int>(q));
    std::vector<std::vector<int>> mul_table(q, std::vector<int>(q));
    for (int i = 0; i < q; ++i) names[i] = galois::to_string(galois::from_integer(i, spec));
    for (int i = 0; i < q; ++i)
        for (int j = 0; j < q; ++j) {
            galois::FieldElement a = galois::from_integer(i, spec);
            galois::FieldElement b = galois::from_integer(j, spec);
            add_table[i][j] = galois::to_integer(galois::add(a, b));
            mul_table[i][j] = galois::to_integer(galois::mul(a, b));
        }

    if (format == Format::Json) {
        json j{{"schema_version", 1}, {"kind", "field_tables"},
               {"p", spec.p},         {"n", spec.n},
               {"poly", spec.poly},   {"elements", names},
               {"add", add_table},    {"mul", mul_table}};
        return dump(j);
    }
    if (format == Format::Csv) {
        std::ostringstream out;
        out << "table,elem";
        for (int j = 0; j < q; ++j) out << ',' << j;
        out << '\n';
        for (const char* kind : {"add", "mul"}) {
            const auto& table = kind[0] == 'a' ? add_table : mul_table;
            for (int i = 0; i < q; ++i) {
                out << kind << ',' << i;
                for (int j = 0; j < q; ++j) out << ',' << table[i][j];
                out << '\n';
            }
        }
        return out.str();
    }

    size_t width = 1;
    for (const std::string& name : names) width = std::max(width, name.size());
    auto grid = [&](const char* op, const std::vector<std::vector<int>>& table) {
        std::ostringstream out;
        out << pad(op, width) << " |";
        for (int j = 0; j < q; ++j) out << ' ' << pad(names[j], width);
        out << '\n' << std::string(width, '-') << "-+" << std::string((width + 1) * q, '-')
            << '\n';
        for (int i = 0; i < q; ++i) {
            out << pad(names[i], width) << " |";
            for (int j = 0; j < q; ++j) out << ' ' << pad(names[table[i][j]], width);
            out << '\n';
        }
        return out.str();
    };
    std::ostringstream out;
    if (spec.n == 1)
        out << "GF(" << q << "), integers mod " << spec.p << "\n\n";
    else
        out << "GF(" << q << "), modulus " << galois::poly_string(spec) << " over Z" << spec.p
            << "\n\n";
    out << grid("+", add_table) << '\n' << grid("x", mul_table);
    return out.str();
}

std::string label_table(const kings::LabelTable& table, Format format) {
    if (format == Format::Json) {
        json rows = json::array();
        for (const kings::LabelRow& row : table.rows) rows.push_back(row.labels);
        json j{{"schema_version", 1},
               {"kind", "label_table"},
               {"d", table.d},
               {"field", field_json(table.spec)},
               {"rows", rows}};
        return dump(j);
    }
    if (format == Format::Csv) {
        std::ostringstream out;
        for (int m = 0; m <= table.d; ++m) out << (m ? "," : "") << 'k' << m;
        out << '\n';
        for (const kings::LabelRow& row : table.rows) {
            for (size_t m = 0; m < row.labels.size(); ++m)
                out << (m ? "," : "") << row.labels[m];
            out << '\n';
        }
        return out.str();
    }
    std::ostringstream out;
    for (const std::string& line : kings::row_digits(table)) out << line << '\n';
    return out.str();
}

std::string mub_family(const mub::MubFamily& family, const mub::UnbiasednessReport& report,
                       Format format) {
    const int d = family.d;
    if (format == Format::Json) {
        json bases = json::array();
        for (const mub::Basis& basis : family.bases) {
            json words = json::array();
            for (const weylalg::WeylWord& w : basis.set.words)
                words.push_back(weylalg::render_word(w));
            json states = json::array();
            for (const weylalg::Vector& v : basis.states) {
                json amps = json::array();
                for (Eigen::Index i = 0; i < v.size(); ++i)
                    amps.push_back({v[i].real(), v[i].imag()});
                states.push_back(amps);
            }
            bases.push_back({{"m", basis.m},
                             {"words", words},
                             {"generator_count", basis.set.generator_count},
                             {"signatures", basis.signatures},
                             {"states", states}});
        }
        json j{{"schema_version", 1},
               {"kind", "mub_family"},
               {"d", d},
               {"bases", bases},
               {"report",
                {{"tol", report.tol},
                 {"max_deviation", report.max_deviation},
                 {"worst_a", report.worst_a},
                 {"worst_b", report.worst_b},
                 {"pass", report.pass}}}};
        return dump(j);
    }
    if (format == Format::Csv) {
        std::ostringstream out;
        out << "m,k,component,re,im\n";
        for (const mub::Basis& basis : family.bases)
            for (size_t k = 0; k < basis.states.size(); ++k)
                for (Eigen::Index i = 0; i < basis.states[k].size(); ++i)
                    out << basis.m << ',' << k + 1 << ',' << i << ','
                        << g17(basis.states[k][i].real()) << ','
                        << g17(basis.states[k][i].imag()) << '\n';
        return out.str();
    }

    const int p = family.bases.at(0).set.words.at(0).p;
    std::ostringstream out;
    out << "d = " << d << " (" << family.bases.size() << " bases)\n";
    for (const mub::Basis& basis : family.bases) {
        out << "\nbasis " << basis.m << ":";
        for (const weylalg::WeylWord& w : basis.set.words)
            out << ' ' << weylalg::render_word(w);
        out << '\n';
        for (size_t k = 0; k < basis.states.size(); ++k) {
            // Print unnormalized, with the largest amplitude scaled to 1 as
            // in the published shorthand (1000, 1111, 1ii1-bar, ...).
            const double scale = 1.0 / basis.states[k].cwiseAbs().maxCoeff();
            out << "  " << k + 1 << "  " << signature_string(basis.signatures[k], p) << "  ";
            for (Eigen::Index i = 0; i < basis.states[k].size(); ++i)
                out << (i ? " " : "") << amplitude_shorthand(basis.states[k][i], scale);
            out << '\n';
        }
    }
    out << "\nunbiasedness: max |<a|b>|^2 deviation = " << g3(report.max_deviation)
        << " (bases " << report.worst_a << ", " << report.worst_b << "), tol = "
        << g3(report.tol) << ", " << verdict(report.pass) << '\n';
    return out.str();
}

std::string verify_report(const kings::VerifyReport& report, Format format) {
    if (format == Format::Json) {
        json j{{"schema_version", 1},
               {"kind", "verify_report"},
               {"mode", "exhaustive"},
               {"d", report.d},
               {"branches", report.branches},
               {"correct", report.correct},
               {"max_prob_slack", report.max_prob_slack},
               {"max_stray_overlap", report.max_stray_overlap},
               {"pass", report.pass}};
        return dump(j);
    }
    if (format == Format::Csv) {
        std::ostringstream out;
        out << "d,branches,correct,max_prob_slack,max_stray_overlap,pass\n"
            << report.d << ',' << report.branches << ',' << report.correct << ','
            << g17(report.max_prob_slack) << ',' << g17(report.max_stray_overlap) << ','
            << (report.pass ? 1 : 0) << '\n';
        return out.str();
    }
    std::ostringstream out;
    out << "exhaustive verification, d = " << report.d << '\n'
        << "branches checked: " << report.branches << '\n'
        << "correct predictions: " << report.correct << '\n'
        << "max probability slack: " << g3(report.max_prob_slack) << '\n'
        << "max stray overlap: " << g3(report.max_stray_overlap) << '\n'
        << "result: " << verdict(report.pass) << '\n';
    return out.str();
}

std::string sample_report(const kings::SampleReport& report, Format format) {
    if (format == Format::Json) {
        json j{{"schema_version", 1}, {"kind", "sample_report"}, {"mode", "sampled"},
               {"d", report.d},       {"rounds", report.rounds}, {"correct", report.correct},
               {"seed", report.seed}, {"pass", report.pass}};
        return dump(j);
    }
    if (format == Format::Csv) {
        std::ostringstream out;
        out << "d,rounds,correct,seed,pass\n"
            << report.d << ',' << report.rounds << ',' << report.correct << ',' << report.seed
            << ',' << (report.pass ? 1 : 0) << '\n';
        return out.str();
    }
    std::ostringstream out;
    out << "sampled verification, d = " << report.d << '\n'
        << "rounds: " << report.rounds << '\n'
        << "correct predictions: " << report.correct << '\n'
        << "seed: " << report.seed << '\n'
        << "result: " << verdict(report.pass) << '\n';
    return out.str();
}

std::string transcript(const kings::RoundTranscript& t, Format format) {
    if (format == Format::Json) {
        json j{{"schema_version", 1},
               {"kind", "round_transcript"},
               {"d", t.d},
               {"m", t.m},
               {"king_k", t.king_k},
               {"king_eigenvalues", eigenvalue_json(t.king_eigenvalues)},
               {"row_index", t.row_index},
               {"row", t.row.labels},
               {"predicted_k", t.predicted_k},
               {"predicted_eigenvalues", eigenvalue_json(t.predicted_eigenvalues)},
               {"correct", t.correct}};
        return dump(j);
    }
    if (format == Format::Csv) {
        std::ostringstream out;
        out << "d,m,king_k,row_index,row,predicted_k,correct\n"
            << t.d << ',' << t.m << ',' << t.king_k << ',' << t.row_index << ','
            << row_string(t.row, t.d) << ',' << t.predicted_k << ',' << (t.correct ? 1 : 0)
            << '\n';
        return out.str();
    }
    std::ostringstream out;
    out << "round transcript, d = " << t.d << '\n'
        << "king's basis: m = " << t.m << '\n'
        << "king's outcome: k = " << t.king_k << " ("
        << eigenvalue_list_text(t.king_eigenvalues) << ")\n"
        << "physicist's row: index " << t.row_index << ", [" << row_string(t.row, t.d) << "]\n"
        << "physicist's prediction: k = " << t.predicted_k << " ("
        << eigenvalue_list_text(t.predicted_eigenvalues) << ")\n"
        << "verdict: " << (t.correct ? "correct" : "incorrect") << '\n';
    return out.str();
}

}  // namespace meanking::serialize
