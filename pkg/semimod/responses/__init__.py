"""
Output of the CLI commands: one envelope per command, serialized as json,
tsv or text
"""
from .command_responses import (
    census_response,
    decode_matrix_response,
    dual_response,
    gaps_response,
    lean_response,
    matrix_response,
    orbit_response,
    path_response,
    resolution_response,
    syzygy_response,
)
from .output_envelope import OutputEnvelope
from .response_serializer import ResponseSerializer

__all__ = [
    "OutputEnvelope",
    "ResponseSerializer",
    "census_response",
    "decode_matrix_response",
    "dual_response",
    "gaps_response",
    "lean_response",
    "matrix_response",
    "orbit_response",
    "path_response",
    "resolution_response",
    "syzygy_response",
]
