"""Ready-made generator sets."""

from .mobius import make_mobius
from .tangency import GeneratorSet

# z -> a/(b + z) with |b| = 1 + |a|: each image disc touches the unit circle
GHK_ENTRIES = {
    "g": (0, 0.5, 1, 1.5),
    "h": (0, 0.5, 1, -1.5),
    "k": (0, -0.5, 1, -1.5),
}


def ghk_file() -> dict:
    """The {g, h, k} set as a generator-file document (unnormalised entries)."""
    return {
        "generators": [
            {"name": name, **{key: [float(v), 0.0] for key, v in zip("abcd", entries)}}
            for name, entries in GHK_ENTRIES.items()
        ]
    }


def ghk() -> GeneratorSet:
    return GeneratorSet([(name, make_mobius(*entries)) for name, entries in GHK_ENTRIES.items()])
