"""Parameter bag and validation helpers for catalog entries."""

from dataclasses import dataclass, fields
from typing import Optional

from ..specfun import DomainError

_NUMERIC = (int, float, complex)


@dataclass
class IdentityParameters:
    """Free symbols of the catalog; each entry declares which are active."""

    m: Optional[complex] = None
    s: Optional[complex] = None
    v: Optional[complex] = None
    k: Optional[float] = None
    n: Optional[int] = None
    a: Optional[complex] = None
    b: Optional[complex] = None
    c: Optional[complex] = None
    beta: Optional[complex] = None
    gamma: Optional[complex] = None
    alpha: Optional[float] = None
    theta: Optional[float] = None

    def updated(self, **kw):
        vals = self.to_dict()
        vals.update(kw)
        return IdentityParameters(**vals)

    def to_dict(self):
        return {f.name: getattr(self, f.name) for f in fields(self)}

    @classmethod
    def field_names(cls):
        return tuple(f.name for f in fields(cls))

    @classmethod
    def from_mapping(cls, mapping):
        unknown = set(mapping) - set(cls.field_names())
        if unknown:
            raise DomainError(f"unknown parameters: {sorted(unknown)}")
        return cls(**mapping)


def require(cond, side_condition):
    """Raise DomainError echoing the entry's printed side condition."""
    if not cond:
        raise DomainError(f"parameter domain violated: requires {side_condition}")


def as_real(x, name):
    x = complex(x)
    if x.imag != 0.0:
        raise DomainError(f"{name} must be real, got {x}")
    return x.real


def as_int(x, name):
    xr = as_real(x, name)
    if xr != round(xr):
        raise DomainError(f"{name} must be an integer, got {x}")
    return int(round(xr))
