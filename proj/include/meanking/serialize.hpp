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
 * serialize - text / CSV / JSON renderings of every exportable artifact.
 *
 * All renderings are deterministic byte-for-byte for equal inputs. JSON
 * documents carry {"schema_version": 1, "kind": ...}; CSV starts with a
 * header row; text is aligned for human diffing. Weyl words appear in their
 * ASCII form ("Z2Y") in machine formats.
 */

#ifndef MEANKING_SERIALIZE_HPP
#define MEANKING_SERIALIZE_HPP

#include <complex>
#include <string>

#include "meanking/galois.hpp"
#include "meanking/kings.hpp"
#include "meanking/mub.hpp"

namespace meanking::serialize {

enum class Format { Text, Csv, Json };

/// Accepts "text", "csv", "json" (case-sensitive); throws Error otherwise.
Format parse_format(const std::string& name);

/// Addition and multiplication tables of the field, as an aligned symbolic
/// grid (text), integer-coded wide rows (csv), or a schema'd object (json).
std::string field_tables(const galois::FieldSpec& spec, Format format);

/// d^2 label rows in table order: concatenated digit strings (text), one
/// integer column per position k0..kd (csv), or row arrays (json).
std::string label_table(const kings::LabelTable& table, Format format);

/// All bases with per-state amplitude shorthand and eigenvalue signatures,
/// plus the unbiasedness certification summary.
std::string mub_family(const mub::MubFamily& family, const mub::UnbiasednessReport& report,
                       Format format);

std::string verify_report(const kings::VerifyReport& report, Format format);
std::string sample_report(const kings::SampleReport& report, Format format);
std::string transcript(const kings::RoundTranscript& t, Format format);

/// Shorthand for one amplitude after multiplying by `scale` (callers use
/// 1/max|amp| of the state, so the largest entry renders as 1): one of
/// 0, 1, 1̄, i, ī, ω, ω̄ when within 1e-9 of it (overbar = negation for 1 and
/// i, complex conjugate for ω = exp(2πi/3)); otherwise a numeric "(re,im)"
/// fallback. Deterministic for equal inputs.
std::string amplitude_shorthand(std::complex<double> amplitude, double scale);

/// Eigenvalue exponent s rendered in the signature alphabet of the modulus:
/// p=2 -> "+"/"-"; p=3 -> "1"/"ω"/"ω̄"; otherwise "ω^s" ("1" for s=0).
std::string eigenvalue_text(int p, int exponent);

}  // namespace meanking::serialize

#endif  // MEANKING_SERIALIZE_HPP
