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

#include <algorithm>
#include <charconv>
#include <cmath>
#include <complex>
#include <cstdlib>
#include <fstream>
#include <istream>
#include <optional>
#include <ostream>
#include <sstream>

namespace paulilearn {

namespace {

[[noreturn]] void fail(size_t line, const std::string &what) {
    throw ParseError("line " + std::to_string(line) + ": " + what);
}

std::string strip_comment(const std::string &line) {
    auto pos = line.find('#');
    return pos == std::string::npos ? line : line.substr(0, pos);
}

std::vector<std::string> split(const std::string &text) {
    std::istringstream in(text);
    std::vector<std::string> out;
    std::string token;
    while (in >> token) {
        out.push_back(token);
    }
    return out;
}

std::optional<double> to_double(const std::string &token) {
    if (token.empty()) {
        return std::nullopt;
    }
    char *end = nullptr;
    double v = std::strtod(token.c_str(), &end);
    if (end != token.c_str() + token.size() || !std::isfinite(v)) {
        return std::nullopt;
    }
    return v;
}

std::optional<size_t> to_size(const std::string &token) {
    size_t v = 0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), v);
    if (ec != std::errc() || ptr != token.data() + token.size()) {
        return std::nullopt;
    }
    return v;
}

// Decimal or a/b.
std::optional<double> to_probability(const std::string &token) {
    auto slash = token.find('/');
    if (slash == std::string::npos) {
        return to_double(token);
    }
    auto num = to_double(token.substr(0, slash));
    auto den = to_double(token.substr(slash + 1));
    if (!num || !den || *den == 0.0) {
        return std::nullopt;
    }
    return *num / *den;
}

// Value of "key=<value>" on a line, or nullopt.
std::optional<std::string> keyed(const std::string &token, const std::string &key) {
    if (token.rfind(key + "=", 0) != 0) {
        return std::nullopt;
    }
    return token.substr(key.size() + 1);
}

std::ifstream open_input(const std::filesystem::path &path) {
    std::ifstream in(path);
    if (!in) {
        throw ParseError("cannot open " + path.string());
    }
    return in;
}

}  // namespace

std::string format_double(double value) {
    char buffer[64];
    auto [ptr, ec] = std::to_chars(buffer, buffer + sizeof(buffer), value);
    return std::string(buffer, ptr);
}

ChannelSpec parse_spec(std::istream &in, ChannelSpec::Normalization normalization) {
    std::optional<size_t> n;
    std::vector<std::pair<PauliString, double>> atoms;
    std::string line;
    size_t number = 0;
    while (std::getline(in, line)) {
        ++number;
        auto tokens = split(strip_comment(line));
        if (tokens.empty()) {
            continue;
        }
        if (!n) {
            auto value = tokens.size() == 1 ? keyed(tokens[0], "n") : std::nullopt;
            auto parsed = value ? to_size(*value) : std::nullopt;
            if (!parsed || *parsed == 0) {
                fail(number, "expected header n=<positive int>");
            }
            n = parsed;
            continue;
        }
        if (tokens.size() != 2) {
            fail(number, "expected '<base4-string> <probability>'");
        }
        PauliString c;
        try {
            c = PauliString::from_string(tokens[0]);
        } catch (const std::invalid_argument &e) {
            fail(number, e.what());
        }
        auto p = to_probability(tokens[1]);
        if (!p) {
            fail(number, "bad probability '" + tokens[1] + "'");
        }
        atoms.emplace_back(std::move(c), *p);
    }
    if (!n) {
        throw ParseError("missing header n=<int>");
    }
    try {
        return ChannelSpec(*n, std::move(atoms), normalization);
    } catch (const std::invalid_argument &e) {
        throw ParseError(e.what());
    }
}

ChannelSpec load_spec(const std::filesystem::path &path, ChannelSpec::Normalization normalization) {
    auto in = open_input(path);
    try {
        return parse_spec(in, normalization);
    } catch (const ParseError &e) {
        throw ParseError(path.string() + ": " + e.what());
    }
}

void write_spec(std::ostream &out, const ChannelSpec &spec) {
    out << "n=" << spec.num_qubits() << '\n';
    for (const auto &[c, p] : spec.atoms()) {
        out << c.str() << ' ' << format_double(p) << '\n';
    }
}

ProbeBatch parse_batch(std::istream &in) {
    std::optional<size_t> n;
    std::optional<ProbeFamily> family;
    double nu = 0.0;
    std::vector<ProbeRecord> records;
    std::string line;
    size_t number = 0;
    while (std::getline(in, line)) {
        ++number;
        if (line.rfind("# paulilearn batch", 0) == 0) {
            if (number != 1) {
                fail(number, "batch header must be the first line");
            }
            for (const auto &token : split(line.substr(18))) {
                if (auto v = keyed(token, "n")) {
                    n = to_size(*v);
                    if (!n || *n == 0) {
                        fail(number, "bad n");
                    }
                } else if (auto f = keyed(token, "family")) {
                    if (*f == "nontrivial") {
                        family = ProbeFamily::nontrivial;
                    } else if (*f == "extended") {
                        family = ProbeFamily::uniform_extended;
                    } else {
                        fail(number, "unknown family '" + *f + "'");
                    }
                } else if (auto v = keyed(token, "nu")) {
                    auto parsed = to_double(*v);
                    if (!parsed) {
                        fail(number, "bad nu");
                    }
                    nu = *parsed;
                } else {
                    fail(number, "unknown header field '" + token + "'");
                }
            }
            continue;
        }
        auto tokens = split(strip_comment(line));
        if (tokens.empty()) {
            continue;
        }
        if (tokens.size() != 3) {
            fail(number, "expected 'probe readout failed'");
        }
        ProbeRecord rec;
        try {
            rec.probe = PauliString::from_string(tokens[0]);
            rec.readout = BitString::from_string(tokens[1]);
            rec.failed = BitString::from_string(tokens[2]);
        } catch (const std::invalid_argument &e) {
            fail(number, e.what());
        }
        if (!n) {
            n = rec.probe.size();
        }
        if (rec.probe.size() != *n || rec.readout.size() != *n || rec.failed.size() != *n) {
            fail(number, "record length does not match n=" + std::to_string(*n));
        }
        records.push_back(std::move(rec));
    }
    if (!n) {
        throw ParseError("empty batch");
    }
    if (!family) {
        bool extended = std::any_of(records.begin(), records.end(),
                                    [](const ProbeRecord &r) { return !r.probe.is_nontrivial_probe(); });
        family = extended ? ProbeFamily::uniform_extended : ProbeFamily::nontrivial;
    }
    try {
        NoiseConfig{nu}.validate();
    } catch (const std::invalid_argument &e) {
        throw ParseError(e.what());
    }
    ProbeBatch batch(*n, *family, nu);
    batch.reserve(records.size());
    for (size_t t = 0; t < records.size(); ++t) {
        if (*family == ProbeFamily::nontrivial && !records[t].probe.is_nontrivial_probe()) {
            throw ParseError("record " + std::to_string(t + 1) + ": probe contains 0 in a nontrivial batch");
        }
        batch.push_back(records[t]);
    }
    return batch;
}

void write_batch(std::ostream &out, const ProbeBatch &batch) {
    out << "# paulilearn batch n=" << batch.num_qubits()
        << " family=" << (batch.family() == ProbeFamily::nontrivial ? "nontrivial" : "extended")
        << " nu=" << format_double(batch.nu()) << '\n';
    for (size_t t = 0; t < batch.size(); ++t) {
        ProbeRecord rec = batch.record(t);
        out << rec.probe.str() << ' ' << rec.readout.str() << ' ' << rec.failed.str() << '\n';
    }
}

void write_hypothesis(std::ostream &out, const Hypothesis &hypothesis) {
    for (const auto &entry : hypothesis.entries) {
        out << entry.string.str() << ' ' << format_double(entry.estimate) << '\n';
    }
}

Hypothesis parse_hypothesis(std::istream &in) {
    Hypothesis h;
    std::string line;
    size_t number = 0;
    while (std::getline(in, line)) {
        ++number;
        auto tokens = split(strip_comment(line));
        if (tokens.empty()) {
            continue;
        }
        if (tokens.size() != 2) {
            fail(number, "expected '<base4-string> <estimate>'");
        }
        auto value = to_double(tokens[1]);
        if (!value) {
            fail(number, "bad estimate '" + tokens[1] + "'");
        }
        try {
            h.entries.push_back({PauliString::from_string(tokens[0]), *value});
        } catch (const std::invalid_argument &e) {
            fail(number, e.what());
        }
    }
    return h;
}

std::complex<double> parse_complex(const std::string &token) {
    auto bad = [&]() -> ParseError { return ParseError("bad complex number '" + token + "'"); };
    if (token.empty()) {
        throw bad();
    }
    if (token.back() != 'i') {
        auto re = to_double(token);
        if (!re) {
            throw bad();
        }
        return {*re, 0.0};
    }
    std::string body = token.substr(0, token.size() - 1);
    // Split before the last sign that is not a leading sign or an exponent sign.
    size_t split_at = std::string::npos;
    for (size_t k = body.size(); k-- > 1;) {
        if ((body[k] == '+' || body[k] == '-') && body[k - 1] != 'e' && body[k - 1] != 'E') {
            split_at = k;
            break;
        }
    }
    std::string re_text = split_at == std::string::npos ? "" : body.substr(0, split_at);
    std::string im_text = split_at == std::string::npos ? body : body.substr(split_at);
    double re = 0.0;
    if (!re_text.empty()) {
        auto v = to_double(re_text);
        if (!v) {
            throw bad();
        }
        re = *v;
    }
    double im = 0.0;
    if (im_text.empty() || im_text == "+") {
        im = 1.0;
    } else if (im_text == "-") {
        im = -1.0;
    } else {
        auto v = to_double(im_text);
        if (!v) {
            throw bad();
        }
        im = *v;
    }
    return {re, im};
}

KrausChannel parse_kraus(std::istream &in) {
    std::optional<size_t> n;
    std::optional<size_t> ops;
    std::vector<std::complex<double>> entries;
    std::string line;
    size_t number = 0;
    while (std::getline(in, line)) {
        ++number;
        auto tokens = split(strip_comment(line));
        if (tokens.empty()) {
            continue;
        }
        if (!n) {
            auto v = tokens.size() == 1 ? keyed(tokens[0], "n") : std::nullopt;
            n = v ? to_size(*v) : std::nullopt;
            if (!n || *n == 0 || *n > kMaxDenseQubits) {
                fail(number, "expected header n=<int> with 1 <= n <= " + std::to_string(kMaxDenseQubits));
            }
            continue;
        }
        if (!ops) {
            auto v = tokens.size() == 1 ? keyed(tokens[0], "ops") : std::nullopt;
            ops = v ? to_size(*v) : std::nullopt;
            if (!ops || *ops == 0) {
                fail(number, "expected header ops=<positive int>");
            }
            continue;
        }
        for (const auto &token : tokens) {
            try {
                entries.push_back(parse_complex(token));
            } catch (const ParseError &e) {
                fail(number, e.what());
            }
        }
    }
    if (!n || !ops) {
        throw ParseError("missing n= or ops= header");
    }
    const size_t dim = size_t{1} << *n;
    if (entries.size() != *ops * dim * dim) {
        throw ParseError("expected " + std::to_string(*ops * dim * dim) + " matrix entries, found " +
                         std::to_string(entries.size()));
    }
    std::vector<Matrix> matrices;
    for (size_t k = 0; k < *ops; ++k) {
        Matrix m(dim, dim);
        for (size_t r = 0; r < dim; ++r) {
            for (size_t c = 0; c < dim; ++c) {
                m(r, c) = entries[(k * dim + r) * dim + c];
            }
        }
        matrices.push_back(std::move(m));
    }
    try {
        return KrausChannel(*n, std::move(matrices));
    } catch (const std::invalid_argument &e) {
        throw ParseError(e.what());
    }
}

KrausChannel load_kraus(const std::filesystem::path &path) {
    auto in = open_input(path);
    try {
        return parse_kraus(in);
    } catch (const ParseError &e) {
        throw ParseError(path.string() + ": " + e.what());
    }
}

void write_kraus(std::ostream &out, const KrausChannel &channel) {
    out << "n=" << channel.num_qubits() << "\nops=" << channel.ops().size() << '\n';
    for (const auto &m : channel.ops()) {
        for (Eigen::Index r = 0; r < m.rows(); ++r) {
            for (Eigen::Index c = 0; c < m.cols(); ++c) {
                double im = m(r, c).imag();
                out << (c ? " " : "") << format_double(m(r, c).real()) << (im < 0 || std::signbit(im) ? "-" : "+")
                    << format_double(std::abs(im)) << 'i';
            }
            out << '\n';
        }
    }
}

void write_eigenvalues(std::ostream &out, const std::vector<EigenvalueEstimate> &rows) {
    for (const auto &row : rows) {
        out << row.index.str() << ' ' << format_double(row.value) << ' ' << row.samples << '\n';
    }
}

}  // namespace paulilearn
