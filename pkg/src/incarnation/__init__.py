from src.incarnation.affine_relations import (
    affine_relation_instances,
    defining_dot_relations,
    derived_dot_relations,
    enmore_sides,
    mirrored,
    spin_exchange,
    two_factor_omega,
)
from src.incarnation.functor import (
    MEMO,
    IncarnationMemo,
    affine_incarnate,
    affine_incarnate_chain,
    box_table,
    incarnate,
    incarnate_chain,
)
from src.incarnation.params import IncarnationParams
from src.incarnation.relations import (
    RelationInstance,
    relation_instances,
    rotated_merge_svs,
    swishy_rhs,
)
from src.incarnation.verify import (
    CheckJob,
    VerificationEntry,
    VerificationReport,
    affine_jobs,
    check_job,
    enmore_report,
    relation_jobs,
    run_checks,
    verify_affine_relations,
    verify_relations,
)
from src.linalg import LinearMap

__all__ = [
    "CheckJob",
    "IncarnationMemo",
    "IncarnationParams",
    "LinearMap",
    "MEMO",
    "RelationInstance",
    "VerificationEntry",
    "VerificationReport",
    "affine_incarnate",
    "affine_incarnate_chain",
    "affine_jobs",
    "affine_relation_instances",
    "box_table",
    "check_job",
    "defining_dot_relations",
    "derived_dot_relations",
    "enmore_report",
    "enmore_sides",
    "incarnate",
    "incarnate_chain",
    "mirrored",
    "relation_instances",
    "relation_jobs",
    "rotated_merge_svs",
    "run_checks",
    "spin_exchange",
    "swishy_rhs",
    "two_factor_omega",
    "verify_affine_relations",
    "verify_relations",
]
