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

#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <complex>
#include <random>
#include <string>

#include "meanking/serialize.hpp"

using namespace meanking;
using namespace meanking::serialize;
using nlohmann::json;

namespace {

kings::LabelTable d4_table() { return kings::label_table(4, galois::default_spec(2, 2)); }

}  // namespace

TEST_CASE("parse_format accepts exactly text, csv and json") {
    CHECK(parse_format("text") == Format::Text);
    CHECK(parse_format("csv") == Format::Csv);
    CHECK(parse_format("json") == Format::Json);
    CHECK_THROWS_AS(parse_format("yaml"), Error);
    CHECK_THROWS_AS(parse_format("TEXT"), Error);
}

TEST_CASE("amplitude_shorthand covers the published token alphabet") {
    const std::complex<double> i{0, 1};
    const std::complex<double> w{-0.5, std::sqrt(3.0) / 2};
    CHECK(amplitude_shorthand({0.5, 0}, 2.0) == "1");
    CHECK(amplitude_shorthand({-0.5, 0}, 2.0) == "1̄");
    CHECK(amplitude_shorthand(0.5 * i, 2.0) == "i");
    CHECK(amplitude_shorthand(-0.5 * i, 2.0) == "ī");
    CHECK(amplitude_shorthand(w / 3.0, 3.0) == "ω");
    CHECK(amplitude_shorthand(std::conj(w) / 3.0, 3.0) == "ω̄");
    CHECK(amplitude_shorthand({0, 0}, 2.0) == "0");
    CHECK(amplitude_shorthand({0.3, 0.4}, 1.0) == "(0.3,0.4)");
}

TEST_CASE("eigenvalue_text uses +/- at p=2 and omega powers at odd p") {
    CHECK(eigenvalue_text(2, 0) == "+");
    CHECK(eigenvalue_text(2, 1) == "-");
    CHECK(eigenvalue_text(3, 0) == "1");
    CHECK(eigenvalue_text(3, 1) == "ω");
    CHECK(eigenvalue_text(3, 2) == "ω̄");
    CHECK(eigenvalue_text(5, 0) == "1");
    CHECK(eigenvalue_text(5, 3) == "ω^3");
}

TEST_CASE("field tables render in all three formats") {
    galois::FieldSpec gf2 = galois::default_spec(2, 1);
    CHECK(field_tables(gf2, Format::Csv) ==
          "table,elem,0,1\n"
          "add,0,0,1\n"
          "add,1,1,0\n"
          "mul,0,0,0\n"
          "mul,1,0,1\n");

    galois::FieldSpec gf4 = galois::default_spec(2, 2);
    std::string text = field_tables(gf4, Format::Text);
    CHECK(text ==
          "GF(4), modulus a^2+a+1 over Z2\n"
          "\n"
          "+   | 0   1   a   a+1\n"
          "----+----------------\n"
          "0   | 0   1   a   a+1\n"
          "1   | 1   0   a+1 a  \n"
          "a   | a   a+1 0   1  \n"
          "a+1 | a+1 a   1   0  \n"
          "\n"
          "x   | 0   1   a   a+1\n"
          "----+----------------\n"
          "0   | 0   0   0   0  \n"
          "1   | 0   1   a   a+1\n"
          "a   | 0   a   a+1 1  \n"
          "a+1 | 0   a+1 1   a  \n");

    json doc = json::parse(field_tables(gf4, Format::Json));
    CHECK(doc["schema_version"] == 1);
    CHECK(doc["kind"] == "field_tables");
    CHECK(doc["p"] == 2);
    CHECK(doc["n"] == 2);
    CHECK(doc["poly"] == json::array({1, 1}));
    CHECK(doc["add"][1][1] == 0);
    CHECK(doc["mul"][2][2] == 3);
    CHECK(doc["elements"][3] == "a+1");
}

TEST_CASE("label tables render rows in table order in all formats") {
    kings::LabelTable table = d4_table();
    std::string text = label_table(table, Format::Text);
    CHECK(text.substr(0, 12) == "11432\n12341\n");
    CHECK(std::count(text.begin(), text.end(), '\n') == 16);

    std::string csv = label_table(table, Format::Csv);
    CHECK(csv.substr(0, 15) == "k0,k1,k2,k3,k4\n");
    CHECK(csv.find("1,1,4,3,2\n") != std::string::npos);

    json doc = json::parse(label_table(table, Format::Json));
    CHECK(doc["kind"] == "label_table");
    CHECK(doc["d"] == 4);
    CHECK(doc["rows"].size() == 16);
    CHECK(doc["rows"][0] == json::array({1, 1, 4, 3, 2}));
    CHECK(doc["field"]["poly"] == json::array({1, 1}));
}

TEST_CASE("mub family rendering shows words, signatures and shorthand states") {
    mub::MubFamily fam = mub::family(4);
    mub::UnbiasednessReport report = mub::unbiasedness_report(fam);

    std::string text = mub_family(fam, report, Format::Text);
    CHECK(text.find("basis 0: Z1 1Z ZZ") != std::string::npos);
    CHECK(text.find("  1  ++  1 0 0 0") != std::string::npos);
    CHECK(text.find("  1  ++  1 1 1 1") != std::string::npos);
    CHECK(text.find("PASS") != std::string::npos);

    std::string csv = mub_family(fam, report, Format::Csv);
    CHECK(csv.substr(0, 19) == "m,k,component,re,im");

    json doc = json::parse(mub_family(fam, report, Format::Json));
    CHECK(doc["d"] == 4);
    CHECK(doc["bases"].size() == 5);
    CHECK(doc["bases"][0]["words"] == json::array({"Z1", "1Z", "ZZ"}));
    CHECK(doc["bases"][1]["states"][0][0][0].get<double>() == doctest::Approx(0.5));
    CHECK(doc["bases"][1]["states"][0][0][1].get<double>() == doctest::Approx(0.0));
    CHECK(doc["bases"][0]["signatures"][3] == json::array({1, 1}));
    CHECK(doc["report"]["pass"] == true);
}

TEST_CASE("verification reports and transcripts serialize consistently") {
    kings::ProtocolSetup setup = kings::build_protocol(4, 1e-9);
    kings::VerifyReport report = kings::exhaustive_verify(setup);

    std::string text = verify_report(report, Format::Text);
    CHECK(text.find("branches checked: 80") != std::string::npos);
    CHECK(text.find("result: PASS") != std::string::npos);
    json vr = json::parse(verify_report(report, Format::Json));
    CHECK(vr["branches"] == 80);
    CHECK(vr["mode"] == "exhaustive");
    CHECK(verify_report(report, Format::Csv)
              .rfind("d,branches,correct,max_prob_slack,max_stray_overlap,pass\n", 0) == 0);

    kings::SampleReport sample = kings::sample_verify(setup, 10, 42);
    json sr = json::parse(sample_report(sample, Format::Json));
    CHECK(sr["rounds"] == 10);
    CHECK(sr["seed"] == 42);
    CHECK(sr["pass"] == true);
    CHECK(sample_report(sample, Format::Text).find("rounds: 10") != std::string::npos);

    std::mt19937_64 rng(7);
    kings::RoundTranscript t = kings::run_round(setup, 1, rng);
    std::string tr = transcript(t, Format::Text);
    CHECK(tr.find("king's basis: m = 1") != std::string::npos);
    CHECK(tr.find("verdict: correct") != std::string::npos);
    json tj = json::parse(transcript(t, Format::Json));
    CHECK(tj["kind"] == "round_transcript");
    CHECK(tj["m"] == 1);
    CHECK(tj["king_k"] == t.king_k);
    CHECK(tj["correct"] == true);
    CHECK(tj["king_eigenvalues"].size() == 3);
    CHECK(tj["king_eigenvalues"][0]["word"] == "X1");
    std::string tc = transcript(t, Format::Csv);
    CHECK(tc.rfind("d,m,king_k,row_index,row,predicted_k,correct\n", 0) == 0);
}

TEST_CASE("renderings are byte-stable across repeated calls") {
    kings::LabelTable table = d4_table();
    for (Format f : {Format::Text, Format::Csv, Format::Json})
        CHECK(label_table(table, f) == label_table(table, f));
    galois::FieldSpec gf8 = galois::default_spec(2, 3);
    CHECK(field_tables(gf8, Format::Text) == field_tables(gf8, Format::Text));
}
