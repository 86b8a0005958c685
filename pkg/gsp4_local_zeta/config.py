import math
import os
from typing import Tuple

from sympy import primefactors


DEFAULT_TERM_LIMIT = 2_000_000
DEFAULT_Q_VALUES = "4,9,25,49"

_term_limit = int(os.environ.get("GSP4_TERM_LIMIT", DEFAULT_TERM_LIMIT))

default_order = int(os.environ.get("GSP4_ORDER", 10))
default_samples = int(os.environ.get("GSP4_SAMPLES", 20))
default_seed = int(os.environ.get("GSP4_SEED", 0))


def term_limit() -> int:
    return _term_limit


def set_term_limit(limit: int) -> int:
    """Override the term ceiling, returns the previous value."""
    global _term_limit
    if limit < 1:
        raise ValueError("term limit must be positive: {}".format(limit))
    previous = _term_limit
    _term_limit = int(limit)
    return previous


def is_square_of_prime_power(q: int) -> bool:
    if q < 4:
        return False
    root = math.isqrt(q)
    return root * root == q and len(primefactors(root)) == 1


def parse_q_values(text: str) -> Tuple[int, ...]:
    values = []
    for chunk in text.split(","):
        chunk = chunk.strip()
        if not chunk:
            continue
        q = int(chunk)
        if not is_square_of_prime_power(q):
            raise ValueError("q must be the square of a prime power: '{}'".format(chunk))
        values.append(q)

    if len(values) == 0:
        raise ValueError("empty q-value list")

    return tuple(values)


default_q_values = parse_q_values(os.environ.get("GSP4_Q_VALUES", DEFAULT_Q_VALUES))
