"""Utilities: logging, config, deterministic serialization, invariant checks.

Modules are imported directly, e.g.:
    from ..utils.logging_config import StructuredLogger
    from ..utils.config_loader import config_loader

invariants is not re-exported here: it imports the automaton package, which itself
imports logging_config from this package.
"""
