"""
Generic evaluation of closed diagrams.

An S loop carrying r spokes is popped by pairing its first spoke with each other
spoke in turn: two spokes on one strand anticommute up to twice their contraction,
and a loop with antisymmetrized spokes vanishes for generic d. Each pairing splices
the two V edges it joins, and a splice that closes a V edge on itself gives a factor d.
Vertex-free loops give D and d.
"""

import logging
from collections import defaultdict
from dataclasses import dataclass
from typing import Dict, List, Optional, Tuple, Union

from src.diagram import Diagram
from src.evaluator.graph import ClosedGraph, to_graph
from src.exactnum import CycloScalar, ParamScalar
from src.incarnation.params import IncarnationParams
from src.utils.constants import DEFAULT_STEP_BUDGET
from src.utils.errors import InvalidArgument

# loops of V closed so far -> signed count
Tally = Dict[int, int]


@dataclass(frozen=True)
class EvalResult:
    """Value in Q(d, D); when reduced is False the value is a partial sum only."""

    value: ParamScalar
    reduced: bool
    steps: int

    def to_dict(self) -> Dict[str, object]:
        return {"value": str(self.value), "reduced": self.reduced, "steps": self.steps}

    def specialize(self, params: IncarnationParams) -> CycloScalar:
        return params.evaluate(self.value)


class BudgetExhausted(RuntimeError):
    """Raised internally when the step budget runs out."""

    pass


def _splice(partner: Dict[int, int], i: int, j: int) -> int:
    """Contract the V legs of i and j; returns 1 when that closes a loop."""
    a = partner.pop(i)
    if a == j:
        partner.pop(j)
        return 1
    b = partner.pop(j)
    partner[a] = b
    partner[b] = a
    return 0


class PoppingEvaluator:
    """
    Evaluates closed diagrams of the spin Brauer category at generic d and D.

    Args:
        kappa: The sign kappa the category is built with.
        budget: Maximum number of expansion steps over one evaluation.
    """

    def __init__(self, kappa: int = 1, budget: int = DEFAULT_STEP_BUDGET) -> None:
        if kappa not in (1, -1):
            raise InvalidArgument(f"kappa must be +1 or -1, got {kappa}")
        if budget < 1:
            raise InvalidArgument(f"step budget must be positive, got {budget}")
        self.kappa = kappa
        self.budget = budget
        self.steps = 0
        self.logger = logging.getLogger(self.__class__.__name__)

    def _tick(self) -> None:
        self.steps += 1
        if self.steps > self.budget:
            raise BudgetExhausted(f"step budget {self.budget} exhausted")

    def _pop(
        self,
        cycles: List[List[int]],
        index: int,
        spokes: List[int],
        partner: Dict[int, int],
        sign: int,
        loops: int,
        tally: Tally,
    ) -> None:
        self._tick()
        if not spokes:
            if index == len(cycles):
                tally[loops] += sign
                return
            self._pop(cycles, index + 1, list(cycles[index]), partner, sign, loops, tally)
            return
        first = spokes[0]
        for k in range(1, len(spokes)):
            other = spokes[k]
            branch = dict(partner)
            closed = _splice(branch, first, other)
            rest = spokes[1:k] + spokes[k + 1 :]
            self._pop(
                cycles, index, rest, branch, sign if k % 2 else -sign, loops + closed, tally
            )

    def _graph_value(self, graph: ClosedGraph, tally: Tally) -> ParamScalar:
        kappa_sign = self.kappa ** graph.kappa_power
        D_power = graph.s_loops + len(graph.cycles)
        terms: Dict[Tuple[int, int], int] = {}
        for loops, count in tally.items():
            if count:
                terms[(loops + graph.v_loops, D_power)] = count * kappa_sign
        return ParamScalar.from_terms(terms)

    def evaluate_graph(self, graph: ClosedGraph) -> Tuple[ParamScalar, bool]:
        """Value of one graph; the flag is False when the budget ran out midway."""
        tally: Tally = defaultdict(int)
        if any(len(cycle) % 2 for cycle in graph.cycles):
            self._tick()
            return ParamScalar(0), True
        try:
            self._pop(graph.cycles, 0, [], dict(graph.partner), 1, 0, tally)
        except BudgetExhausted:
            return self._graph_value(graph, tally), False
        return self._graph_value(graph, tally), True

    def evaluate(self, f: Diagram) -> EvalResult:
        """
        Evaluate a closed diagram term by term.

        Args:
            f: Closed, dot-free diagram.

        Returns:
            EvalResult: The value, whether it is complete, and the steps spent.

        Raises:
            NotClosed: When f is not closed.
            UnsupportedBox: When f carries dots.
        """
        self.steps = 0
        total = ParamScalar(0)
        for graph, coeff in to_graph(f):
            value, complete = self.evaluate_graph(graph)
            total = total + value * coeff
            if not complete:
                self.logger.warning(
                    f"unreduced after {self.steps} steps (budget {self.budget}); "
                    f"logged for study: {f}"
                )
                return EvalResult(total, False, self.steps)
        self.logger.debug(f"evaluated {len(f)} terms in {self.steps} steps: {total}")
        return EvalResult(total, True, self.steps)


def evaluate_closed(
    f: Union[Diagram, ClosedGraph], kappa: int = 1, budget: Optional[int] = None
) -> EvalResult:
    """Evaluate a closed diagram, or a single graph, with a fresh evaluator."""
    evaluator = PoppingEvaluator(kappa, DEFAULT_STEP_BUDGET if budget is None else budget)
    if isinstance(f, ClosedGraph):
        value, complete = evaluator.evaluate_graph(f)
        return EvalResult(value, complete, evaluator.steps)
    return evaluator.evaluate(f)
