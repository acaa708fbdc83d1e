"""hyperint: exact symbolic integration of hyperexponential 1-forms."""

from .config import Settings, DEFAULT
from .numfield import (
    NumberField, AlgNumber, QQ_FIELD, trace, field_trace, is_traceless,
    galois_conjugates, splitting_field, compose_fields, embed, minpoly_of,
)

__all__ = [
    'Settings', 'DEFAULT',
    'NumberField', 'AlgNumber', 'QQ_FIELD', 'trace', 'field_trace',
    'is_traceless', 'galois_conjugates', 'splitting_field', 'compose_fields',
    'embed', 'minpoly_of',
]
