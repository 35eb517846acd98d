"""Structured reports for congruence-checker sweeps."""
from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Optional


@dataclass(frozen=True)
class Mutation:
    """Test-harness fault injection: perturb the index-th compared value by delta.

    Checkers count the instances (coefficients) they compare; when the counter
    reaches ``index`` the observed left-hand value is offset by ``delta``, which
    a sound checker must then report as a violation.
    """

    index: int
    delta: int

    @classmethod
    def parse(cls, text: str) -> "Mutation":
        idx, _, delta = text.partition(":")
        return cls(int(idx), int(delta))


class MutationTap:
    """Applies a Mutation to a running stream of compared values."""

    def __init__(self, mutation: Optional[Mutation]):
        self.mutation = mutation
        self.counter = 0

    def tap(self, value: int) -> int:
        if self.mutation is not None and self.counter == self.mutation.index:
            value += self.mutation.delta
        self.counter += 1
        return value


def _jsonable(x):
    if isinstance(x, float):  # only infinities reach here (vp of 0)
        return "inf"
    if isinstance(x, int) and abs(x) > 2**53:
        return str(x)
    return x


@dataclass
class CongruenceReport:
    """Machine-readable outcome of one checker sweep."""

    checker: str
    params: dict
    instances: int = 0
    violations: list = field(default_factory=list)
    seed: Optional[int] = None
    elapsed_ms: Optional[int] = None
    advisory: bool = False  # True for non-asserted sweeps (the p=2 experiments)

    @property
    def passed(self) -> bool:
        return not self.violations

    def add_violation(
        self,
        instance: dict,
        difference: int,
        required_modulus: int,
        observed_vp,
        required_vp,
    ) -> None:
        self.violations.append(
            {
                "instance": instance,
                "difference": str(difference),
                "required_modulus": required_modulus,
                "observed_vp": _jsonable(observed_vp),
                "required_vp": _jsonable(required_vp),
            }
        )

    def to_json_obj(self) -> dict:
        obj = {
            "checker": self.checker,
            "params": {k: _jsonable(v) for k, v in sorted(self.params.items())},
            "instances": self.instances,
            "violations": self.violations,
        }
        if self.seed is not None:
            obj["seed"] = self.seed
        if self.advisory:
            obj["advisory"] = True
        if self.elapsed_ms is not None:
            obj["elapsed_ms"] = self.elapsed_ms
        return obj

    def to_json(self) -> str:
        return json.dumps(self.to_json_obj(), separators=(",", ":"), sort_keys=True)

    def to_text(self) -> str:
        status = "PASS" if self.passed else f"FAIL({len(self.violations)})"
        params = " ".join(f"{k}={v}" for k, v in sorted(self.params.items()))
        line = f"{status:8s} {self.checker:20s} {params} instances={self.instances}"
        if self.advisory:
            line += " [advisory]"
        if not self.passed:
            first = self.violations[0]
            line += f"\n         first witness: {json.dumps(first, sort_keys=True)}"
        return line
