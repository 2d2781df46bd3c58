# Copyright 2026 the stransport developers
# SPDX-License-Identifier: Apache-2.0
"""Linear transports of tensors along curves.

Thin python layer over the C++ core: tensor components, transport laws,
transport matrices built from the coefficient ODE, axiom verification, the
named geometric transports, and the scenario front end.
"""

import json as _json

from ._core import (  # noqa: F401
    Interval,
    ScenarioError,
    TensorComponents,
    TransportLaw,
    TransportMatrix,
    catalog_law,
    constant_law,
    contract,
    curve_catalog,
    derivation_of_transported,
    law_catalog,
    manifold_catalog,
    run_scenario_file,
    run_scenario_json,
    tabulated_law,
    tensor_product,
    trace_scenario_file,
    transport_matrix,
    transport_tensor,
    verify_axioms,
)

__all__ = [
    "Interval",
    "ScenarioError",
    "TensorComponents",
    "TransportLaw",
    "TransportMatrix",
    "catalog_law",
    "constant_law",
    "contract",
    "curve_catalog",
    "derivation_of_transported",
    "law_catalog",
    "manifold_catalog",
    "run_scenario",
    "run_scenario_file",
    "run_scenario_json",
    "tabulated_law",
    "tensor_product",
    "trace_scenario_file",
    "transport_matrix",
    "transport_tensor",
    "verify_axioms",
]


def run_scenario(scenario):
    """Run a scenario given as a dict (or JSON string); returns the report dict."""
    text = scenario if isinstance(scenario, str) else _json.dumps(scenario)
    return _json.loads(run_scenario_json(text))
