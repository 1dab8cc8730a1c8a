"""Combinatorial block classification for GL_n(eta q) and SL_n(eta q)."""

from slblocks.params import GroundParams, GuardrailError, ParameterError

__all__ = ["GroundParams", "GuardrailError", "ParameterError"]
