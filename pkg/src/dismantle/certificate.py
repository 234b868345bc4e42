"""Dismantling certificates: replayable deletion sequences with witnesses.

A certificate records, for one of the three categories, an ordered list of
(deleted element, dominating witness) steps together with a digest of the
object it starts from. Verification replays the steps against that object
and checks the domination precondition in every residual stage; the replay
functions live with each category (graphs, posets, complexes).
"""

from __future__ import annotations

import json
from dataclasses import dataclass

from .canon import from_jsonable, to_jsonable
from .errors import InputError

CATEGORIES = ("graph", "poset", "complex")
MODES = ("strict", "weak")


@dataclass(frozen=True)
class DismantlingCertificate:
    """Ordered (deleted, witness) steps plus a digest of the start object.

    ``mode`` is only meaningful for poset certificates, where "weak" steps
    are justified by weak domination instead of least/greatest witnesses.
    """

    category: str
    start_digest: str
    steps: tuple = ()
    mode: str = "strict"

    def __post_init__(self):
        if self.category not in CATEGORIES:
            raise InputError(f"unknown certificate category: {self.category!r}")
        if self.mode not in MODES:
            raise InputError(f"unknown certificate mode: {self.mode!r}")
        steps = tuple((d, w) for d, w in self.steps)
        object.__setattr__(self, "steps", steps)
        seen = set()
        for d, w in steps:
            if d == w:
                raise InputError(f"witness equals deleted element: {d!r}")
            if d in seen:
                raise InputError(f"element deleted twice: {d!r}")
            seen.add(d)

    def __len__(self):
        return len(self.steps)

    def deleted(self):
        return tuple(d for d, _ in self.steps)

    def replace_step(self, index, deleted=None, witness=None):
        """Copy with one step changed; used by integrity tests."""
        steps = list(self.steps)
        d, w = steps[index]
        steps[index] = (d if deleted is None else deleted,
                        w if witness is None else witness)
        return DismantlingCertificate(self.category, self.start_digest,
                                      tuple(steps), self.mode)

    def to_json_dict(self) -> dict:
        return {
            "category": self.category,
            "mode": self.mode,
            "start_digest": self.start_digest,
            "steps": [[to_jsonable(d), to_jsonable(w)] for d, w in self.steps],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_json_dict(), indent=2)

    @classmethod
    def from_json_dict(cls, data: dict) -> "DismantlingCertificate":
        try:
            steps = tuple((from_jsonable(d), from_jsonable(w))
                          for d, w in data["steps"])
            return cls(category=data["category"],
                       start_digest=data["start_digest"],
                       steps=steps,
                       mode=data.get("mode", "strict"))
        except (KeyError, TypeError, ValueError) as exc:
            raise InputError(f"malformed certificate: {exc}") from exc

    @classmethod
    def from_json(cls, text: str) -> "DismantlingCertificate":
        try:
            data = json.loads(text)
        except json.JSONDecodeError as exc:
            raise InputError(f"certificate is not valid JSON: {exc}") from exc
        if isinstance(data, dict) and "certificate" in data:
            data = data["certificate"]  # accept a whole CLI report
        return cls.from_json_dict(data)
