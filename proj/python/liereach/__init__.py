"""Python access to the liereach C++ core.

Report-producing calls return parsed JSON dictionaries with the same field
names as the command-line reports.
"""

import json as _json

from . import _core
from ._core import (
    ArgumentError,
    ParseError,
    PreconditionError,
    ValidationError,
    attainability,
    bracket,
    expm_skew,
    hamiltonian_matrices,
    normal_order,
    presets,
    propagate,
    reach_probe,
    run_command,
    trotter_commutator_error,
    trotter_sum_error,
    verify_jacobi,
)

__version__ = _core.__version__


def analyze(preset="", config="", config_text="", cap=None, seed=42, threads=1):
    """Controllability report for a preset name, a config path or config text."""
    return _json.loads(_core.analyze(preset, config, config_text, cap, seed, threads))


def closure(preset="", config="", config_text="", cap=None, threads=1):
    """Lie closure table of the system's generators at one cap."""
    return _json.loads(_core.closure(preset, config, config_text, cap, threads))


def coverage(preset="", config="", config_text="", order=3, cap=None):
    """PBW coverage of the closure for monomials up to `order`."""
    return _json.loads(_core.coverage(preset, config, config_text, order, cap))


def preset_config(name):
    """The schema v1 config of a built-in preset as a dictionary."""
    return _json.loads(_core.preset_config_json(name))


__all__ = [
    "ArgumentError",
    "ParseError",
    "PreconditionError",
    "ValidationError",
    "analyze",
    "attainability",
    "bracket",
    "closure",
    "coverage",
    "expm_skew",
    "hamiltonian_matrices",
    "normal_order",
    "preset_config",
    "presets",
    "propagate",
    "reach_probe",
    "run_command",
    "trotter_commutator_error",
    "trotter_sum_error",
    "verify_jacobi",
]
