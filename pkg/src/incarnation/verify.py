"""Relation verification suites and their JSON reports."""

import json
import logging
from dataclasses import dataclass, field
from itertools import product
from typing import Any, Dict, Iterable, List, Optional, Sequence, Tuple

from src.exactnum import EvaluationPole
from src.incarnation.affine_relations import affine_relation_instances, enmore_sides
from src.incarnation.functor import affine_incarnate_chain, incarnate_chain
from src.incarnation.params import IncarnationParams
from src.incarnation.relations import COLORS, RelationInstance, relation_instances
from src.linalg import LinearMap
from src.utils.errors import InvalidArgument, ShapeError

logger = logging.getLogger(__name__)

PASS = "pass"
FAIL = "fail"

# (instance, params, module letters or None for the plain functor)
CheckJob = Tuple[RelationInstance, IncarnationParams, Optional[str]]


@dataclass(frozen=True)
class VerificationEntry:
    relation: str
    N: int
    epsilon: int
    instance: str
    status: str
    witness: Optional[Dict[str, Any]] = None

    @property
    def passed(self) -> bool:
        return self.status == PASS

    def to_dict(self) -> Dict[str, Any]:
        data: Dict[str, Any] = {
            "relation": self.relation,
            "N": self.N,
            "epsilon": self.epsilon,
            "instance": self.instance,
            "status": self.status,
        }
        if self.witness is not None:
            data["witness"] = self.witness
        return data

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> "VerificationEntry":
        return cls(
            data["relation"],
            data["N"],
            data["epsilon"],
            data["instance"],
            data["status"],
            data.get("witness"),
        )


@dataclass
class VerificationReport:
    """Outcome of a suite, one entry per relation instance, in a fixed order."""

    entries: List[VerificationEntry] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(entry.passed for entry in self.entries)

    @property
    def failures(self) -> List[VerificationEntry]:
        return [entry for entry in self.entries if not entry.passed]

    def extend(self, other: "VerificationReport") -> "VerificationReport":
        self.entries.extend(other.entries)
        return self

    def to_list(self) -> List[Dict[str, Any]]:
        return [entry.to_dict() for entry in self.entries]

    def to_json(self) -> str:
        return json.dumps(self.to_list(), sort_keys=True, indent=2)

    def summary(self) -> str:
        total = len(self.entries)
        return f"{total - len(self.failures)}/{total} relation instances pass"


def _witness(lhs: LinearMap, rhs: LinearMap) -> Optional[Dict[str, Any]]:
    if (lhs.rows, lhs.cols) != (rhs.rows, rhs.cols):
        return {"row": -1, "col": -1, "lhs": f"{lhs.rows}x{lhs.cols}", "rhs": f"{rhs.rows}x{rhs.cols}"}
    difference = lhs.first_difference(rhs)
    if difference is None:
        return None
    row, col, left, right = difference
    return {"row": row, "col": col, "lhs": str(left), "rhs": str(right)}


def _sides(job: CheckJob) -> Tuple[LinearMap, LinearMap]:
    inst, params, module = job
    if module is None:
        return incarnate_chain(inst.lhs, params), incarnate_chain(inst.rhs, params)
    word = params.word(module)
    return (
        affine_incarnate_chain(inst.lhs, params, word),
        affine_incarnate_chain(inst.rhs, params, word),
    )


def _label(job: CheckJob) -> str:
    inst, _, module = job
    if module is None:
        return inst.instance
    return f"{inst.instance} M={module or 'empty'}"


def check_job(job: CheckJob) -> VerificationEntry:
    """
    Compare both sides of one relation instance exactly.

    Poles and shape mismatches become failed entries rather than exceptions.
    """
    inst, params, _ = job
    try:
        lhs, rhs = _sides(job)
        witness = _witness(lhs, rhs)
    except (EvaluationPole, ShapeError) as e:
        logger.warning(f"{inst.instance_id} at {params.label()} could not be compared: {e}")
        witness = {"row": -1, "col": -1, "lhs": type(e).__name__, "rhs": str(e)}
    status = PASS if witness is None else FAIL
    if witness is not None:
        logger.info(f"FAIL {inst.instance_id} [{_label(job)}] at {params.label()}: {witness}")
    return VerificationEntry(
        inst.relation, params.N, params.epsilon, _label(job), status, witness
    )


def run_checks(jobs: Iterable[CheckJob]) -> VerificationReport:
    return VerificationReport([check_job(job) for job in jobs])


def relation_jobs(
    params: IncarnationParams,
    slow: bool = False,
    extra: Sequence[RelationInstance] = (),
) -> List[CheckJob]:
    """Jobs for the plain suite, plugin instances appended after the built-in ones."""
    instances = relation_instances(params, slow) + list(extra)
    return [(inst, params, None) for inst in instances]


def verify_relations(
    params: IncarnationParams,
    slow: bool = False,
    extra: Sequence[RelationInstance] = (),
) -> VerificationReport:
    """
    Check every relation of the plain category under the incarnation functor.

    Args:
        params: N, epsilon and the D specialization (D_offset perturbs it).
        slow: Include the odd-N quotient relation at N >= 5.
        extra: Additional instances, e.g. from relation plugins.

    Returns:
        VerificationReport: One entry per instance.
    """
    jobs = relation_jobs(params, slow, extra)
    logger.debug(f"checking {len(jobs)} relation instances at {params.label()}")
    return run_checks(jobs)


def _enmore_instance_entry(params: IncarnationParams, letters: str) -> VerificationEntry:
    lhs, rhs = enmore_sides(params, letters)
    witness = _witness(lhs, rhs)
    return VerificationEntry(
        "enmore",
        params.N,
        params.epsilon,
        f"[{letters}]",
        PASS if witness is None else FAIL,
        witness,
    )


def affine_jobs(params: IncarnationParams, modules: Sequence[str]) -> List[CheckJob]:
    for module in modules:
        if any(letter not in COLORS for letter in module):
            raise InvalidArgument(f"module words use only S and V, got {module!r}")
    instances = affine_relation_instances(params)
    return [(inst, params, module) for inst in instances for module in modules]


def verify_affine_relations(
    params: IncarnationParams, modules: Sequence[str] = ("", "V", "S")
) -> VerificationReport:
    """
    Check the dot relations at every module word, then the dot-splitting identity.

    Args:
        params: N and epsilon; for N < 2 every dot is zero and the relations hold
            trivially.
        modules: Module words, "" for the empty word.

    Returns:
        VerificationReport: One entry per (instance, module word).
    """
    report = run_checks(affine_jobs(params, modules))
    return report.extend(enmore_report(params))


def enmore_report(params: IncarnationParams) -> VerificationReport:
    words = ["".join(letters) for letters in product(COLORS, repeat=3)]
    return VerificationReport([_enmore_instance_entry(params, word) for word in words])
