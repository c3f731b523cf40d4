from src.evaluator.graph import ClosedGraph, NotClosed, term_graph, to_graph
from src.evaluator.popping import BudgetExhausted, EvalResult, PoppingEvaluator, evaluate_closed

__all__ = [
    "BudgetExhausted",
    "ClosedGraph",
    "EvalResult",
    "NotClosed",
    "PoppingEvaluator",
    "evaluate_closed",
    "term_graph",
    "to_graph",
]
