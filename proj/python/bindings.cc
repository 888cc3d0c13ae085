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

#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>
#include <pybind11/stl/filesystem.h>

#include <sstream>

#include "paulilearn/additive.h"
#include "paulilearn/channel.h"
#include "paulilearn/dense.h"
#include "paulilearn/experiment.h"
#include "paulilearn/fourier.h"
#include "paulilearn/io.h"
#include "paulilearn/multiplicative.h"
#include "paulilearn/pauli.h"

namespace py = pybind11;
using namespace paulilearn;

namespace {

std::vector<std::pair<std::string, double>> entries_of(const Hypothesis &h) {
    std::vector<std::pair<std::string, double>> out;
    for (const auto &e : h.entries) {
        out.emplace_back(e.string.str(), e.estimate);
    }
    return out;
}

py::dict recovery_dict(const RecoveryResult &r) {
    py::dict d;
    d["status"] = r.ok() ? "ok" : "capacity_exceeded";
    d["hypothesis"] = entries_of(r.hypothesis);
    d["survivor_counts"] = r.survivor_counts;
    d["samples"] = r.samples;
    d["threshold"] = r.threshold;
    d["capacity"] = r.capacity;
    return d;
}

ChannelSpec spec_from_dict(size_t n, const std::map<std::string, double> &atoms, bool renormalize) {
    std::vector<std::pair<PauliString, double>> list;
    for (const auto &[s, p] : atoms) {
        list.emplace_back(PauliString::from_string(s), p);
    }
    return ChannelSpec(n, std::move(list),
                       renormalize ? ChannelSpec::Normalization::renormalize : ChannelSpec::Normalization::strict);
}

std::map<std::string, double> spec_to_dict(const ChannelSpec &spec) {
    std::map<std::string, double> out;
    for (const auto &[c, p] : spec.atoms()) {
        out[c.str()] = p;
    }
    return out;
}

}  // namespace

PYBIND11_MODULE(_paulilearn, m) {
    m.doc() = "Pauli channel simulation and error-rate learning";

    py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
    py::register_exception<ConfigError>(m, "ConfigError", PyExc_ValueError);

    py::class_<PauliString>(m, "PauliString")
        .def(py::init([](const std::string &s) { return PauliString::from_string(s); }))
        .def("__str__", &PauliString::str)
        .def("__repr__", [](const PauliString &a) { return "PauliString('" + a.str() + "')"; })
        .def("__len__", &PauliString::size)
        .def("__getitem__", [](const PauliString &a, size_t j) {
            if (j >= a.size()) throw py::index_error();
            return a[j];
        })
        .def("__eq__", [](const PauliString &a, const PauliString &b) { return a == b; })
        .def("__hash__", [](const PauliString &a) { return std::hash<PauliString>{}(a); })
        .def("weight", &PauliString::weight)
        .def("to_bytes", [](const PauliString &a) {
            auto v = a.to_packed_bytes();
            return py::bytes(reinterpret_cast<const char *>(v.data()), v.size());
        });

    m.def("pauli_xor", [](const std::string &a, const std::string &b) {
        return pauli_xor(PauliString::from_string(a), PauliString::from_string(b)).str();
    });
    m.def("star", [](const std::string &a, const std::string &b) {
        return star(PauliString::from_string(a), PauliString::from_string(b)).str();
    });
    m.def("symplectic_dot", [](const std::string &a, const std::string &b) {
        return static_cast<int>(symplectic_dot(PauliString::from_string(a), PauliString::from_string(b)));
    });
    m.def("bar", [](const std::string &a) { return bar(PauliString::from_string(a)).str(); });
    m.def("neq_mask", [](const std::string &c, const std::string &b) {
        return neq_mask(PauliString::from_string(c), PauliString::from_string(b)).str();
    });

    py::class_<ChannelSpec>(m, "ChannelSpec")
        .def(py::init(&spec_from_dict), py::arg("n"), py::arg("atoms"), py::arg("renormalize") = false)
        .def_static("load", [](const std::string &path) { return load_spec(path); })
        .def_property_readonly("n", &ChannelSpec::num_qubits)
        .def_property_readonly("eta", &ChannelSpec::eta)
        .def("atoms", &spec_to_dict)
        .def("probability", [](const ChannelSpec &s, const std::string &c) {
            return s.probability(PauliString::from_string(c));
        });

    py::class_<ProbeBatch>(m, "ProbeBatch")
        .def("__len__", &ProbeBatch::size)
        .def_property_readonly("n", &ProbeBatch::num_qubits)
        .def_property_readonly("nu", &ProbeBatch::nu)
        .def("record", [](const ProbeBatch &b, size_t t) {
            if (t >= b.size()) throw py::index_error();
            ProbeRecord r = b.record(t);
            return py::make_tuple(r.probe.str(), r.readout.str(), r.failed.str());
        })
        .def("dump", [](const ProbeBatch &b) {
            std::ostringstream out;
            write_batch(out, b);
            return out.str();
        })
        .def_static("parse", [](const std::string &text) {
            std::istringstream in(text);
            return parse_batch(in);
        });

    m.def(
        "probe_batch",
        [](const ChannelSpec &spec, size_t count, double nu, uint64_t seed, bool extended) {
            Rng rng(seed);
            return probe_batch(spec, count, NoiseConfig{nu}, rng,
                               extended ? ProbeFamily::uniform_extended : ProbeFamily::nontrivial);
        },
        py::arg("spec"), py::arg("m"), py::arg("nu") = 0.0, py::arg("seed") = 1, py::arg("extended") = false);

    m.def("required_samples", &required_samples, py::arg("epsilon0"), py::arg("delta0"));
    m.def(
        "individual_estimate",
        [](const ProbeBatch &b, const std::string &s, double nu) {
            return individual_estimate(b, PauliString::from_string(s), NoiseConfig{nu}.erasure_rate());
        },
        py::arg("batch"), py::arg("string"), py::arg("nu") = 0.0);
    m.def(
        "marginal_estimate",
        [](const ProbeBatch &b, const std::string &s, double nu) {
            return marginal_estimate(b, PauliString::from_string(s), NoiseConfig{nu}.erasure_rate());
        },
        py::arg("batch"), py::arg("prefix"), py::arg("nu") = 0.0);
    m.def(
        "population_recover",
        [](const ProbeBatch &b, double epsilon, double delta, bool fast) {
            LearnerParams p = LearnerParams::with_noise(epsilon, delta, b.nu());
            return recovery_dict(fast ? population_recover_fast(b, p) : population_recover(b, p));
        },
        py::arg("batch"), py::arg("epsilon"), py::arg("delta"), py::arg("fast") = true);
    m.def(
        "required_batch",
        [](size_t n, double epsilon, double delta, double nu) {
            return LearnerParams::with_noise(epsilon, delta, nu).required_batch(n);
        },
        py::arg("n"), py::arg("epsilon"), py::arg("delta"), py::arg("nu") = 0.0);

    m.def(
        "mult_population_recover",
        [](const ChannelSpec &spec, double eta0, double epsilon, double delta, double nu, uint64_t seed) {
            Rng rng(seed);
            PauliChannelAccess access(spec, NoiseConfig{nu});
            MultRecoveryResult r =
                mult_population_recover(access, eta0, LearnerParams::with_noise(epsilon, delta, nu), rng);
            py::dict d;
            d["verdict"] = r.halted_below_floor() ? "below_floor" : "estimate";
            d["eta_est"] = r.eta.value;
            d["stage1_probes"] = r.stage1_probes;
            d["stage2_samples"] = r.stage2_samples;
            d["eta_hat"] = r.eta_hat;
            if (!r.halted_below_floor()) {
                d["recovery"] = recovery_dict(r.recovery);
            }
            return d;
        },
        py::arg("spec"), py::arg("eta0"), py::arg("epsilon"), py::arg("delta"), py::arg("nu") = 0.0,
        py::arg("seed") = 1);

    m.def(
        "gl_recover",
        [](const ChannelSpec &spec, double epsilon, double delta, uint64_t seed) {
            Rng rng(seed);
            return recovery_dict(gl_recover(PauliChannelAccess(spec), LearnerParams::with_noise(epsilon, delta, 0.0), rng));
        },
        py::arg("spec"), py::arg("epsilon"), py::arg("delta"), py::arg("seed") = 1);
    m.def(
        "estimate_eigenvalue",
        [](const ChannelSpec &spec, const std::string &a, size_t count, uint64_t seed) {
            Rng rng(seed);
            return estimate_eigenvalue(spec, PauliString::from_string(a), count, rng).value;
        },
        py::arg("spec"), py::arg("index"), py::arg("m"), py::arg("seed") = 1);
    m.def("fourier_value", [](const ChannelSpec &spec, const std::string &a) {
        return fourier_value(spec, PauliString::from_string(a));
    });

    m.def(
        "pauli_error_rates",
        [](size_t n, const std::vector<Matrix> &ops) { return spec_to_dict(pauli_error_rates(KrausChannel(n, ops))); },
        py::arg("n"), py::arg("kraus_ops"));
    m.def("load_kraus_rates", [](const std::string &path) { return spec_to_dict(pauli_error_rates(load_kraus(path))); });

    m.def(
        "run_experiment",
        [](const std::string &mode, const std::string &channel, const std::string &kraus, double epsilon, double delta,
           double eta0, double nu, uint64_t seed, size_t trials) {
            ExperimentConfig config;
            auto parsed = parse_mode(mode);
            if (!parsed) {
                throw ConfigError("unknown mode '" + mode + "'");
            }
            config.mode = *parsed;
            config.channel = channel;
            config.kraus = kraus;
            config.epsilon = epsilon;
            config.delta = delta;
            config.eta0 = eta0;
            config.nu = nu;
            config.seed = seed;
            config.trials = trials;
            RunResult r = run(config);
            return py::make_tuple(r.exit_code, r.report.dump());
        },
        py::arg("mode") = "additive", py::arg("channel") = "", py::arg("kraus") = "", py::arg("epsilon") = 0.1,
        py::arg("delta") = 0.05, py::arg("eta0") = 1e-3, py::arg("nu") = 0.0, py::arg("seed") = 1,
        py::arg("trials") = 1);
}
