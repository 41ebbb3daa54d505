"""Verification harness: families, independent oracles, identity checks,
and dilation sweeps.  Oracles live here, not in the core modules."""

from . import checks, families, oracles, sweeps
from .checks import CheckReport
from .sweeps import SweepResult, SweepRow
