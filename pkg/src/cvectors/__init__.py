"""c-vectors of quivers: seed mutation, root systems, quiver representations and cluster categories."""

__version__ = "0.1.0"

from .dynkin import DynkinType
from .seeds import Seed, classify, detect_finite_type, enumerate_seeds, initial_seed, mutate_seed, mutate_word

__all__ = [
    "DynkinType",
    "Seed",
    "__version__",
    "classify",
    "detect_finite_type",
    "enumerate_seeds",
    "initial_seed",
    "mutate_seed",
    "mutate_word",
]
