"""Thom polynomials for multisingularities of codimension <= 4 and the
partition-sum counting formula for curves with a prescribed multisingularity.
"""

from __future__ import annotations

import json
import math
import os
import re
from fractions import Fraction
from functools import lru_cache
from pathlib import Path

from .chow import LinearForm
from .partitions import enumerate_partitions

CODIM = {"A1": 1, "A2": 2, "A3": 3, "A4": 4, "D4": 4}

_LABEL_RE = re.compile(r"^(A[1-4]|D4)(?:\^(\d+))?$")


class MultisingularityType:
    """An unordered multiset of singularity labels, e.g. A1^2*A2."""

    __slots__ = ("labels",)

    def __init__(self, labels):
        labels = tuple(sorted(labels))
        for lab in labels:
            if lab not in CODIM:
                raise ValueError(f"unknown singularity label {lab!r}")
        if not labels:
            raise ValueError("a multisingularity type needs at least one label")
        self.labels = labels

    @classmethod
    def parse(cls, text):
        """Parse strings like 'A1^2*A2' or 'A1*A3'."""
        labels = []
        for token in text.split("*"):
            m = _LABEL_RE.match(token.strip())
            if not m:
                raise ValueError(f"cannot parse multisingularity token {token!r}")
            labels.extend([m.group(1)] * int(m.group(2) or 1))
        return cls(labels)

    def __eq__(self, other):
        return isinstance(other, MultisingularityType) and self.labels == other.labels

    def __hash__(self):
        return hash(self.labels)

    def __len__(self):
        return len(self.labels)

    @property
    def codim(self):
        return sum(CODIM[lab] for lab in self.labels)

    def key(self):
        """Canonical string, multiplicities folded into exponents."""
        parts = []
        for lab in sorted(set(self.labels)):
            m = self.labels.count(lab)
            parts.append(lab if m == 1 else f"{lab}^{m}")
        return "*".join(parts)

    def sub_type(self, indices):
        return MultisingularityType([self.labels[i] for i in indices])

    def __repr__(self):
        return f"MultisingularityType({self.key()!r})"


def aut_order(alpha):
    """Order of the symmetry group permuting identical labels."""
    n = 1
    for lab in set(alpha.labels):
        n *= math.factorial(alpha.labels.count(lab))
    return n


def _data_dir():
    override = os.environ.get("NODAL_ATLAS_DATA")
    if override:
        return Path(override)
    return Path(__file__).parent / "data"


@lru_cache(maxsize=None)
def _table():
    with open(_data_dir() / "kazarian.json") as f:
        rows = json.load(f)
    table = {}
    for row in rows:
        key = MultisingularityType.parse(row["labels"]).key()
        table[key] = LinearForm(
            int(row["d"]), int(row["k"]), int(row["s"]), int(row["x"])
        )
    return table


def s_alpha(alpha):
    """The tabulated linear form for a type of codimension <= 4."""
    if isinstance(alpha, str):
        alpha = MultisingularityType.parse(alpha)
    try:
        return _table()[alpha.key()]
    except KeyError:
        raise KeyError(
            f"multisingularity type {alpha.key()} is not in the table "
            f"(codimension {alpha.codim})"
        ) from None


def count_multisingular(alpha, chern):
    """Number of curves with the prescribed multisingularity through the
    expected number of general points.

    Sum over unordered set partitions of the label index set of products of
    the tabulated forms on the induced sub-multisets, divided by the
    automorphism order of the type.  Exact rational; integral for geometric
    Chern numbers.
    """
    if isinstance(alpha, str):
        alpha = MultisingularityType.parse(alpha)
    r = len(alpha)
    total = Fraction(0)
    for pi in enumerate_partitions(r):
        prod = Fraction(1)
        for block in pi.blocks:
            sub = alpha.sub_type([i - 1 for i in block])
            prod *= s_alpha(sub).evaluate(chern)
        total += prod
    return total / aut_order(alpha)
