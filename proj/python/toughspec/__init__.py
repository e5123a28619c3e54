"""Graph toughness, adjacency spectra and spectral 1/b-toughness certificates."""

from fractions import Fraction

from ._core import (
    BudgetExceededError,
    ContradictionError,
    Graph,
    Graph6Error,
    InfeasibleError,
    ToughspecError,
    UndefinedToughnessError,
    alpha_d,
    certify,
    complete,
    complete_bipartite,
    construct,
    cycle,
    eigenvalues,
    is_connected,
    is_feasible,
    is_one_over_b_tough,
    is_regular,
    lambda_k,
    parse_graph6,
    path,
    petersen,
    phi,
    psi,
    random_connected_regular,
    write_graph6,
)
from ._core import toughness as _toughness


def toughness(g, max_subsets=None):
    """Exact toughness as a Fraction together with a minimising cut."""
    args = (g,) if max_subsets is None else (g, max_subsets)
    num, den, witness, _components = _toughness(*args)
    return Fraction(num, den), witness


__all__ = [name for name in dir() if not name.startswith("_")]
