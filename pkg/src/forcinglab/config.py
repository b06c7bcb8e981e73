"""Instance-size caps.

Every enumeration in the package is exponential in something, so each one
checks its inputs against a :class:`Caps` object before starting. Raising a
cap above its default is allowed but emits a :class:`BlowUpWarning`.
"""

import dataclasses
import warnings
from dataclasses import dataclass


class BlowUpWarning(UserWarning):
    pass


@dataclass(frozen=True)
class Caps:
    max_conditions: int = 16
    max_potential_elements: int = 8
    max_x_elements: int = 8
    max_rank: int = 5
    max_size: int = 8
    hf_code_bits: int = 1 << 16

    def __post_init__(self):
        for field in dataclasses.fields(self):
            value = getattr(self, field.name)
            if value < 0:
                raise ValueError(f"{field.name} must be non-negative")
            if value > field.default:
                warnings.warn(
                    f"cap {field.name}={value} exceeds default {field.default}; "
                    "enumeration may blow up",
                    BlowUpWarning,
                    stacklevel=3,
                )

    def replace(self, **overrides):
        return dataclasses.replace(self, **{k: v for k, v in overrides.items() if v is not None})


DEFAULT_CAPS = Caps()
