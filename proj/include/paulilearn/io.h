// Copyright 2026 The paulilearn Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef PAULILEARN_IO_H
#define PAULILEARN_IO_H

#include <complex>
#include <filesystem>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include "paulilearn/channel.h"
#include "paulilearn/dense.h"
#include "paulilearn/fourier.h"
#include "paulilearn/hypothesis.h"

namespace paulilearn {

/// Malformed input file; the message carries the line number when known.
class ParseError : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

// Channel spec text:
//   n=<int>
//   <base4-string> <probability>
// Probabilities are decimals or fractions a/b. '#' starts a comment.
ChannelSpec parse_spec(std::istream &in, ChannelSpec::Normalization normalization = ChannelSpec::Normalization::strict);
ChannelSpec load_spec(const std::filesystem::path &path,
                      ChannelSpec::Normalization normalization = ChannelSpec::Normalization::strict);
void write_spec(std::ostream &out, const ChannelSpec &spec);

// Batch dump: optional header "# paulilearn batch n=<n> family=<nontrivial|extended> nu=<nu>",
// then "probe readout failed" per record in base-4, binary, binary.
// Without a header the family is extended if any probe has a 0, and nu is 0.
ProbeBatch parse_batch(std::istream &in);
void write_batch(std::ostream &out, const ProbeBatch &batch);

/// "<base4-string> <estimate>" per entry, in stored order.
void write_hypothesis(std::ostream &out, const Hypothesis &hypothesis);
Hypothesis parse_hypothesis(std::istream &in);

// Kraus file: "n=<int>", "ops=<k>", then k row-major 2^n x 2^n matrices of complex tokens
// such as 0.5, -0.25i, 0.1-0.2i, separated by any whitespace.
KrausChannel parse_kraus(std::istream &in);
KrausChannel load_kraus(const std::filesystem::path &path);
void write_kraus(std::ostream &out, const KrausChannel &channel);

/// Parses one complex token.
std::complex<double> parse_complex(const std::string &token);

/// "<base4 A> <f(A)> <m>" per row.
void write_eigenvalues(std::ostream &out, const std::vector<EigenvalueEstimate> &rows);

/// Shortest round-tripping decimal form.
std::string format_double(double value);

}  // namespace paulilearn

#endif
