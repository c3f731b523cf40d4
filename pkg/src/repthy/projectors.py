"""Certification of the idempotents on S⊗S, V⊗V and S⊗V."""

import logging
from math import comb
from typing import Any, Dict, List, Optional

from src.diagram import pi_r, sv_projector, v_projectors
from src.exactnum import CycloScalar
from src.incarnation import IncarnationParams, VerificationEntry, VerificationReport, incarnate
from src.linalg import LinearMap
from src.utils.errors import InvalidArgument

logger = logging.getLogger(__name__)


class _Checks:
    """Collects pass/fail entries for one parameter point."""

    def __init__(self, params: IncarnationParams) -> None:
        self.params = params
        self.entries: List[VerificationEntry] = []

    def record(self, relation: str, instance: str, ok: bool, witness: Optional[Dict[str, Any]] = None) -> None:
        status = "pass" if ok else "fail"
        if not ok:
            logger.info(f"FAIL {relation}:{instance} at {self.params.label()}")
        self.entries.append(
            VerificationEntry(
                relation, self.params.N, self.params.epsilon, instance, status, None if ok else witness
            )
        )

    def equal(self, relation: str, instance: str, lhs: LinearMap, rhs: LinearMap) -> None:
        difference = lhs.first_difference(rhs)
        witness = None
        if difference is not None:
            row, col, left, right = difference
            witness = {"row": row, "col": col, "lhs": str(left), "rhs": str(right)}
        self.record(relation, instance, difference is None, witness)

    def value(self, relation: str, instance: str, got: Any, expected: Any) -> None:
        ok = got == expected
        self.record(relation, instance, ok, {"row": 0, "col": 0, "lhs": str(got), "rhs": str(expected)})


def _pi_pairs_orthogonal(N: int, r: int, s: int) -> bool:
    # for odd N the maps for r and N - r project onto the same summand
    return r != s and (N % 2 == 0 or r + s != N)


def projector_checks(params: IncarnationParams) -> VerificationReport:
    """
    Idempotence, orthogonality, ranks and traces of the standard projectors.

    Covers π_0..π_N on S⊗S, the trivial, symmetric and antisymmetric projectors on
    V⊗V, and the projector of S⊗V onto S. For odd N it also records that π_0 π_N is
    nonzero.

    Raises:
        InvalidArgument: If N < 2.
    """
    N = params.N
    if N < 2:
        raise InvalidArgument(f"projector checks need N >= 2, got {N}")
    checks = _Checks(params)
    pis = [incarnate(pi_r(r), params) for r in range(N + 1)]
    for r, p in enumerate(pis):
        checks.equal("pi-idempotent", f"r={r}", p.then(p), p)
        checks.value("pi-rank", f"r={r}", p.rank(), comb(N, r))
        checks.value("pi-trace", f"r={r}", p.trace(), CycloScalar.of(comb(N, r)))
    for r in range(N + 1):
        for s in range(N + 1):
            if _pi_pairs_orthogonal(N, r, s):
                zero = LinearMap.zero(pis[r].rows, pis[r].cols)
                checks.equal("pi-orthogonal", f"r={r},s={s}", pis[r].then(pis[s]), zero)
    if N % 2:
        checks.record("pi-boundary", f"pi_0 pi_{N} nonzero", not pis[0].then(pis[N]).is_zero())

    names = ("trivial", "symmetric", "antisymmetric")
    ranks = (1, N * (N + 1) // 2 - 1, N * (N - 1) // 2)
    maps = [incarnate(p, params) for p in v_projectors()]
    total = LinearMap.zero(N * N, N * N)
    for name, rank, p in zip(names, ranks, maps):
        checks.equal("v-idempotent", name, p.then(p), p)
        checks.value("v-rank", name, p.rank(), rank)
        total = total + p
    for a, p in zip(names, maps):
        for b, q in zip(names, maps):
            if a != b:
                checks.equal("v-orthogonal", f"{a},{b}", p.then(q), LinearMap.zero(N * N, N * N))
    checks.equal("v-complete", "sum", total, LinearMap.identity(N * N))

    fork = incarnate(sv_projector(), params)
    checks.equal("sv-idempotent", "S in S⊗V", fork.then(fork), fork)
    checks.value("sv-rank", "S in S⊗V", fork.rank(), 2**params.n)
    return VerificationReport(checks.entries)
