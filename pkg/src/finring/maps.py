"""Maps between table rings.

A RingMap stores the full image array and verifies its own additivity,
multiplicativity and unitality at construction: flags are computed facts,
never declarations, and failures keep a sample pair for reporting.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional

import numpy as np

from .errors import ConstructionError
from .ring import Ring
from . import structure


@dataclass
class RingMap:
    domain: Ring
    codomain: Ring
    image: np.ndarray
    name: str = "map"
    additive: bool = field(init=False)
    multiplicative: bool = field(init=False)
    unital: bool = field(init=False)
    failure: Optional[dict] = field(init=False, default=None)

    def __post_init__(self):
        self.image = np.ascontiguousarray(self.image, dtype=np.int32)
        if self.image.shape != (self.domain.order,):
            raise ConstructionError(f"{self.name}: image array has wrong length")
        if self.image.min() < 0 or self.image.max() >= self.codomain.order:
            raise ConstructionError(f"{self.name}: image ids out of range")
        self.additive = self._law(self.domain.add, self.codomain.add, "additive")
        self.multiplicative = self._law(self.domain.mul, self.codomain.mul,
                                        "multiplicative")
        self.unital = bool(self.image[self.domain.one] == self.codomain.one)
        if not self.unital and self.failure is None:
            self.failure = {"law": "unital", "pair": (self.domain.one,),
                            "got": int(self.image[self.domain.one]),
                            "expected": self.codomain.one}

    def _law(self, dom_op, cod_op, law: str) -> bool:
        f = self.image
        lhs = f[dom_op]
        rhs = cod_op[f[:, None], f[None, :]]
        ok = lhs == rhs
        if ok.all():
            return True
        if self.failure is None:
            flat = int((~ok).argmax())
            n = self.domain.order
            a, b = flat // n, flat % n
            self.failure = {"law": law, "pair": (a, b),
                            "got": int(lhs[a, b]), "expected": int(rhs[a, b])}
        return False

    @property
    def is_homomorphism(self) -> bool:
        return self.additive and self.multiplicative and self.unital

    def apply(self, x: int) -> int:
        return int(self.image[x])

    def image_set(self, mask: np.ndarray) -> np.ndarray:
        """Sorted codomain ids hit by the masked domain elements."""
        return np.unique(self.image[np.flatnonzero(mask)])

    def is_bijective(self) -> bool:
        return (self.domain.order == self.codomain.order
                and len(np.unique(self.image)) == self.domain.order)

    def kernel_mask(self) -> np.ndarray:
        return self.image == self.codomain.zero

    def flags(self) -> dict:
        return {"additive": self.additive,
                "multiplicative": self.multiplicative,
                "unital": self.unital}


class Endomorphism(RingMap):
    """A verified unital ring endomorphism; rejects anything weaker."""

    def __init__(self, ring: Ring, image, name: str = "endo"):
        super().__init__(ring, ring, np.asarray(image), name)
        if not self.is_homomorphism:
            raise ConstructionError(
                f"{self.name}: not a unital endomorphism ({self.failure})")

    def power(self, k: int) -> np.ndarray:
        """Image array of the k-fold composite."""
        out = np.arange(self.domain.order, dtype=np.int32)
        for _ in range(k):
            out = self.image[out]
        return out


def identity_endo(ring: Ring) -> Endomorphism:
    return Endomorphism(ring, np.arange(ring.order, dtype=np.int32), "id")


def verify_retraction(inclusion: RingMap, retraction: RingMap) -> dict:
    """Check a retraction pair and how it transports structure.

    Asserts retraction(inclusion(x)) = x, then compares the retraction
    images of the nilpotent, unit and idempotent sets of the big ring with
    the corresponding sets of the small one.
    """
    small, big = inclusion.domain, inclusion.codomain
    if retraction.domain is not big or retraction.codomain is not small:
        raise ConstructionError("retraction pair rings do not line up")
    round_trip = retraction.image[inclusion.image]
    report = {
        "inclusion_homomorphism": inclusion.is_homomorphism,
        "retraction_homomorphism": retraction.is_homomorphism,
        "round_trip_identity": bool(
            (round_trip == np.arange(small.order, dtype=np.int32)).all()),
    }
    for kind in ("nilpotents", "units", "idempotents"):
        big_ids = retraction.image_set(structure.special_subset(big, kind).mask)
        small_ids = structure.special_subset(small, kind).ids
        report[f"{kind}_match"] = bool(np.array_equal(big_ids, small_ids))
    report["ok"] = all(v for v in report.values())
    return report
