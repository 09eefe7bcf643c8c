"""Names for the generalized local energies.

Lowercase kinds are the normalized, non-negative energies; the raw
piecewise-linear pieces ``V_i``, ``W_i`` live in :mod:`dncrystal.rmatrix`.
"""
from __future__ import annotations

import re
from dataclasses import dataclass

_NAMES = ("v", "v0s1", "vstar", "w", "wmv")


@dataclass(frozen=True, order=True)
class EnergyKind:
    name: str
    a: int = 0

    def __post_init__(self):
        if self.name not in _NAMES:
            raise ValueError(f"unknown energy kind {self.name!r}")
        if self.name == "v0s1" and self.a != 0:
            raise ValueError("v0^s1 carries no index")

    def check_rank(self, n: int) -> None:
        lo, hi = {
            "v": (0, n - 1),
            "v0s1": (0, 0),
            "vstar": (1, n - 1),
            "w": (1, n - 1),
            "wmv": (1, n - 2),
        }[self.name]
        if not lo <= self.a <= hi:
            raise ValueError(f"{self} is not defined for rank n={n}")

    def __str__(self):
        a = self.a
        return {
            "v": f"v{a}",
            "v0s1": "v0^s1",
            "vstar": f"v*{a}",
            "w": f"w{a}",
            "wmv": f"w{a}-v{a}",
        }[self.name]

    @classmethod
    def parse(cls, text: str) -> "EnergyKind":
        """Inverse of ``str``: accepts ``v0``, ``v0^s1``, ``v*3``, ``w2``, ``w2-v2``."""
        t = text.strip().replace(" ", "")
        if t in ("v0^s1", "v0s1", "v0^sigma1"):
            return cls("v0s1")
        m = re.fullmatch(r"w(\d+)-v(\d+)", t)
        if m:
            if m[1] != m[2]:
                raise ValueError(f"mismatched indices in {text!r}")
            return cls("wmv", int(m[1]))
        m = re.fullmatch(r"(v\*|v|w)(\d+)", t)
        if not m:
            raise ValueError(f"cannot parse energy kind {text!r}")
        return cls({"v*": "vstar", "v": "v", "w": "w"}[m[1]], int(m[2]))


def v(a: int) -> EnergyKind:
    return EnergyKind("v", a)


def vstar(a: int) -> EnergyKind:
    return EnergyKind("vstar", a)


def w(a: int) -> EnergyKind:
    return EnergyKind("w", a)


def wmv(a: int) -> EnergyKind:
    return EnergyKind("wmv", a)


V0S1 = EnergyKind("v0s1")


def all_kinds(n: int) -> list[EnergyKind]:
    """Every lowercase kind defined at rank ``n``."""
    out = [v(a) for a in range(n)] + [V0S1]
    out += [vstar(a) for a in range(1, n)]
    out += [w(a) for a in range(1, n)]
    out += [wmv(a) for a in range(1, n - 1)]
    return out


def main_kinds(n: int) -> list[EnergyKind]:
    """Kinds whose energy equals a counting function (the R-invariant family)."""
    return ([v(a) for a in range(n)] + [wmv(a) for a in range(1, n - 1)]
            + [vstar(n - 1), V0S1])


def table_kinds(n: int) -> list[EnergyKind]:
    """Row order of the counting-function table for rank ``n``."""
    return ([v(a) for a in range(n)] + [vstar(n - 1)]
            + [wmv(a) for a in range(n - 2, 0, -1)] + [V0S1])
