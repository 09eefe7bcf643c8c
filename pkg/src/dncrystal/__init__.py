"""Exact combinatorics of the D_n^(1) crystal B_l: combinatorial R, generalized
energies, the associated cellular automaton and ultradiscrete tau functions."""
from importlib.resources import files

from .crystal import (BoxState, StateError, XCoords, format_box, format_path, parse_box,
                      parse_path, star, star_path, star_vacuum, vacuum)
from .kinds import EnergyKind
from .rmatrix import CarrierError, apply_r, local_energy

__version__ = "0.1.0"


def data_file(name: str):
    """Path-like handle to a bundled golden file (``single_capacity.trace`` etc.)."""
    return files(__name__) / "data" / name


__all__ = [
    "BoxState", "XCoords", "StateError", "CarrierError", "EnergyKind", "apply_r",
    "local_energy", "parse_box", "parse_path", "format_box", "format_path", "vacuum",
    "star_vacuum", "star", "star_path", "data_file",
]
