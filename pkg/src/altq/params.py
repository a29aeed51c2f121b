"""Structure constants shared by the presentation, the representations and the CLI."""

from __future__ import annotations

from dataclasses import dataclass

from .scalars import ONE, Q, RatFuncQ, as_ratfunc, parse_scalar

__all__ = ["FMParams", "ConfigInvalid", "DEFAULT_PARAMS"]


class ConfigInvalid(ValueError):
    """Rejected configuration (raised before any check runs)."""


@dataclass(frozen=True)
class FMParams:
    k_plus: RatFuncQ
    k_minus: RatFuncQ
    eps_plus: RatFuncQ = ONE
    eps_minus: RatFuncQ = ONE

    def __post_init__(self):
        for name in ("k_plus", "k_minus", "eps_plus", "eps_minus"):
            v = getattr(self, name)
            if isinstance(v, str):
                v = parse_scalar(v)
            object.__setattr__(self, name, as_ratfunc(v))
        if self.k_plus.is_zero() or self.k_minus.is_zero():
            raise ConfigInvalid("k_plus and k_minus must be nonzero (rho_bar would vanish)")

    @property
    def rho_bar(self) -> RatFuncQ:
        b = Q + Q.inverse()
        return self.k_plus * self.k_minus * b * b

    @classmethod
    def default(cls) -> "FMParams":
        return cls(Q * Q, -Q.inverse())

    def to_json(self) -> dict:
        return {
            "k_plus": str(self.k_plus),
            "k_minus": str(self.k_minus),
            "eps_plus": str(self.eps_plus),
            "eps_minus": str(self.eps_minus),
        }


DEFAULT_PARAMS = FMParams.default()
