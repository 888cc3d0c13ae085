# Copyright 2026 The paulilearn Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#      http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Pauli channel simulation and error-rate learning."""

import json as _json

from ._paulilearn import (  # noqa: F401
    ChannelSpec,
    ConfigError,
    ParseError,
    PauliString,
    ProbeBatch,
    bar,
    estimate_eigenvalue,
    fourier_value,
    gl_recover,
    individual_estimate,
    load_kraus_rates,
    marginal_estimate,
    mult_population_recover,
    neq_mask,
    pauli_error_rates,
    pauli_xor,
    population_recover,
    probe_batch,
    required_batch,
    required_samples,
    star,
    symplectic_dot,
)
from ._paulilearn import run_experiment as _run_experiment

__version__ = "0.1.0"


def run_experiment(**kwargs):
    """Runs one experiment; returns (exit_code, report dict)."""
    code, report = _run_experiment(**kwargs)
    return code, _json.loads(report)
