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

#include "paulilearn/io.h"

#include <gtest/gtest.h>

#include <sstream>

#include "paulilearn/experiment.h"

namespace paulilearn {
namespace {

PauliString P(const std::string &s) { return PauliString::from_string(s); }

ChannelSpec parse_text(const std::string &text,
                       ChannelSpec::Normalization norm = ChannelSpec::Normalization::strict) {
    std::istringstream in(text);
    return parse_spec(in, norm);
}

std::string parse_error_message(const std::string &text) {
    try {
        parse_text(text);
    } catch (const ParseError &e) {
        return e.what();
    }
    return "";
}

TEST(SpecFile, FractionsAndComments) {
    ChannelSpec spec = parse_text("# header comment\nn=3\n\n000 1/2  # identity\n123 0.25\n301 1/4\n");
    EXPECT_EQ(spec.num_qubits(), 3u);
    EXPECT_DOUBLE_EQ(spec.probability(P("000")), 0.5);
    EXPECT_DOUBLE_EQ(spec.probability(P("301")), 0.25);
}

TEST(SpecFile, RoundTrip) {
    Rng rng(500);
    ChannelSpec spec = random_sparse_spec(12, 7, 0.01, rng);
    std::ostringstream out;
    write_spec(out, spec);
    ChannelSpec back = parse_text(out.str());
    ASSERT_EQ(back.atoms().size(), spec.atoms().size());
    for (size_t i = 0; i < spec.atoms().size(); ++i) {
        EXPECT_EQ(back.atoms()[i].first, spec.atoms()[i].first);
        EXPECT_EQ(back.atoms()[i].second, spec.atoms()[i].second);
    }
}

TEST(SpecFile, ErrorsCarryLineNumbers) {
    EXPECT_NE(parse_error_message("n=2\n00 0.5\n0x 0.5\n").find("line 3"), std::string::npos);
    EXPECT_NE(parse_error_message("n=2\n00 abc\n").find("line 2"), std::string::npos);
    EXPECT_NE(parse_error_message("n=2\n00 0.5 7\n").find("line 2"), std::string::npos);
    EXPECT_NE(parse_error_message("00 1\n").find("line 1"), std::string::npos);
    EXPECT_NE(parse_error_message("n=2\n00 1/0\n").find("line 2"), std::string::npos);
    EXPECT_FALSE(parse_error_message("").empty());
    EXPECT_FALSE(parse_error_message("n=2\n00 0.5\n").empty());
    EXPECT_FALSE(parse_error_message("n=2\n000 1\n").empty());
    EXPECT_NO_THROW(parse_text("n=2\n00 1\n01 1\n", ChannelSpec::Normalization::renormalize));
}

TEST(SpecFile, FixturesLoad) {
    const auto dir = default_fixture_dir();
    ChannelSpec n5 = load_spec(dir / "example_n5.spec");
    EXPECT_EQ(n5.atoms().size(), 4u);
    EXPECT_DOUBLE_EQ(n5.probability(P("11323")), 2.0 / 6);
    EXPECT_EQ(load_spec(dir / "sparse_n10.spec").num_qubits(), 10u);
    EXPECT_DOUBLE_EQ(load_spec(dir / "identity_n10.spec").eta(), 0.0);
    EXPECT_THROW(load_spec(dir / "missing.spec"), ParseError);
}

TEST(BatchFile, RoundTripWithFailures) {
    Rng rng(501);
    ChannelSpec spec = random_sparse_spec(70, 3, 0.1, rng);
    for (ProbeFamily family : {ProbeFamily::nontrivial, ProbeFamily::uniform_extended}) {
        ProbeBatch batch = probe_batch(spec, 40, NoiseConfig{0.2}, rng, family);
        std::stringstream io;
        write_batch(io, batch);
        EXPECT_EQ(parse_batch(io), batch);
    }
}

TEST(BatchFile, HeaderlessInference) {
    std::istringstream plain("123 010 000\n321 000 100\n");
    ProbeBatch a = parse_batch(plain);
    EXPECT_EQ(a.family(), ProbeFamily::nontrivial);
    EXPECT_EQ(a.nu(), 0.0);
    EXPECT_EQ(a.size(), 2u);
    EXPECT_TRUE(a.has_failures());
    std::istringstream extended("103 000 000\n");
    EXPECT_EQ(parse_batch(extended).family(), ProbeFamily::uniform_extended);
}

TEST(BatchFile, Errors) {
    auto bad = [](const std::string &text) {
        std::istringstream in(text);
        EXPECT_THROW(parse_batch(in), ParseError) << text;
    };
    bad("");
    bad("123 01 000\n");
    bad("123 010\n");
    bad("# paulilearn batch n=3 family=nontrivial nu=0\n103 000 000\n");
    bad("# paulilearn batch n=3 family=odd nu=0\n");
    bad("# paulilearn batch n=3 family=nontrivial nu=0.5\n123 000 000\n");
    bad("123 000 000\n# paulilearn batch n=3\n");
    bad("# paulilearn batch n=2\n123 000 000\n");
}

TEST(HypothesisFile, RoundTrip) {
    Hypothesis h;
    h.entries = {{P("0120"), 0.3333333333333333}, {P("3000"), -1e-17}, {P("1111"), 0.1}};
    std::stringstream io;
    write_hypothesis(io, h);
    Hypothesis back = parse_hypothesis(io);
    EXPECT_EQ(back.entries, h.entries);
    std::istringstream bad("0120 x\n");
    EXPECT_THROW(parse_hypothesis(bad), ParseError);
}

TEST(ComplexToken, Forms) {
    using cd = std::complex<double>;
    EXPECT_EQ(parse_complex("0.5"), cd(0.5, 0));
    EXPECT_EQ(parse_complex("-0.25i"), cd(0, -0.25));
    EXPECT_EQ(parse_complex("0.1-0.2i"), cd(0.1, -0.2));
    EXPECT_EQ(parse_complex("i"), cd(0, 1));
    EXPECT_EQ(parse_complex("-i"), cd(0, -1));
    EXPECT_EQ(parse_complex("2+i"), cd(2, 1));
    EXPECT_EQ(parse_complex("1e-3+2e-3i"), cd(1e-3, 2e-3));
    EXPECT_EQ(parse_complex("-1.5E+2-3E-1i"), cd(-150, -0.3));
    for (const char *t : {"", "abc", "1+2", "1+xi", "1.0.0i", "ii"}) EXPECT_THROW(parse_complex(t), ParseError) << t;
}

TEST(KrausFile, RoundTripAndErrors) {
    KrausChannel fixture = load_kraus(default_fixture_dir() / "random_unitary.kraus");
    EXPECT_EQ(fixture.num_qubits(), 2u);
    std::stringstream io;
    write_kraus(io, fixture);
    KrausChannel back = parse_kraus(io);
    ASSERT_EQ(back.ops().size(), fixture.ops().size());
    for (size_t k = 0; k < back.ops().size(); ++k) EXPECT_TRUE(back.ops()[k] == fixture.ops()[k]);

    auto bad = [](const std::string &text) {
        std::istringstream in(text);
        EXPECT_THROW(parse_kraus(in), ParseError) << text;
    };
    bad("ops=1\n1 0 0 1\n");
    bad("n=1\nops=1\n1 0 0\n");
    bad("n=1\nops=1\n1 0 0 0.5\n");
    bad("n=1\nops=1\n1 0 0 q\n");
}

TEST(EigenvalueFile, Rows) {
    std::ostringstream out;
    write_eigenvalues(out, {{P("012"), 0.5, 100}, {P("000"), 1.0, 7}});
    EXPECT_EQ(out.str(), "012 0.5 100\n000 1 7\n");
}

TEST(FormatDouble, ShortestRoundTrip) {
    EXPECT_EQ(format_double(0.1), "0.1");
    EXPECT_EQ(format_double(1.0 / 3), "0.3333333333333333");
    EXPECT_EQ(std::stod(format_double(2.0 / 7)), 2.0 / 7);
}

}  // namespace
}  // namespace paulilearn
