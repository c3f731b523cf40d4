"""
The incarnation functor: diagrams to exact matrices on tensor words.

Basis vectors of a word are index tuples (S factor: n-bit mask, V factor: e-index),
flattened row-major. Terms are pushed through one box at a time.
"""

import logging
import threading
from functools import lru_cache
from itertools import product
from typing import Dict, List, Optional, Protocol, Sequence, Tuple

from src.clifford import (
    ModuleWord,
    e_action,
    left_dual_coeff,
    letter_dimension,
    phi_s_sign,
    quadratic_ops,
    sigma,
    spin_rank,
)
from src.diagram import Diagram, Gen, Term
from src.exactnum import CycloScalar
from src.incarnation.params import IncarnationParams
from src.linalg import Column, LinearMap, add_into
from src.utils.errors import ShapeError, UnsupportedBox

logger = logging.getLogger(__name__)

Index = Tuple[int, ...]
Images = List[Tuple[Index, CycloScalar]]
BoxTable = Dict[Index, Images]
State = Dict[Index, CycloScalar]

_ONE = CycloScalar.of(1)


def _indices(letters: str, N: int) -> List[Index]:
    return list(product(*(range(letter_dimension(letter, N)) for letter in letters)))


@lru_cache(maxsize=None)
def box_table(gen: Gen, N: int, epsilon: int = 1) -> BoxTable:
    """
    Image of each domain basis vector under a non-dot generator.

    Raises:
        UnsupportedBox: For dot generators, which need affine_incarnate.
    """
    if gen.is_dot:
        raise UnsupportedBox(f"{gen} has no image under the plain incarnation; use affine_incarnate")
    table: BoxTable = {}
    full = (1 << spin_rank(N)) - 1
    if gen is Gen.CUP_S:
        table[()] = [
            ((mask, full ^ mask), CycloScalar.of(left_dual_coeff(N, mask)))
            for mask in range(full + 1)
        ]
    elif gen is Gen.CUP_V:
        table[()] = [((a, a), _ONE) for a in range(N)]
    else:
        for idx in _indices(gen.domain, N):
            table[idx] = _box_images(gen, N, epsilon, idx, full)
    return table


def _box_images(gen: Gen, N: int, epsilon: int, idx: Index, full: int) -> Images:
    if gen.is_identity:
        return [(idx, _ONE)]
    if gen is Gen.CAP_S:
        value = phi_s_sign(N, idx[0], idx[1])
        return [((), CycloScalar.of(value))] if value else []
    if gen is Gen.CAP_V:
        return [((), _ONE)] if idx[0] == idx[1] else []
    if gen is Gen.CROSS_SS:
        return [((idx[1], idx[0]), CycloScalar.of(sigma(N)))]
    if gen.is_crossing:
        return [((idx[1], idx[0]), _ONE)]
    if gen is Gen.MERGE_VSS:
        mask, coeff = e_action(N, epsilon, idx[0] + 1, idx[1])
        return [((mask,), coeff)]
    if gen is Gen.SPLIT_VSS:
        # cupV then the merge on its right leg
        images: Images = []
        for a in range(N):
            mask, coeff = e_action(N, epsilon, a + 1, idx[0])
            images.append(((a, mask), coeff))
        return images
    raise UnsupportedBox(f"no image for {gen}")


def _crossing_permutation(term: Term, N: int) -> Optional[Tuple[List[int], CycloScalar]]:
    """For crossing-only terms: output position k reads input position perm[k]."""
    if not all(g.is_crossing for g in term.gens):
        return None
    positions = list(range(len(term.domain)))
    factor = _ONE
    for offset, g in term.atomize():
        positions[offset], positions[offset + 1] = positions[offset + 1], positions[offset]
        if g is Gen.CROSS_SS:
            factor = factor * sigma(N)
    return positions, factor


class _Pusher:
    """Applies atomized terms to sparse states, with an optional module tail."""

    def __init__(self, params: IncarnationParams, tail: str = "") -> None:
        self.params = params
        self.tail = tail
        self._dots: Dict[str, LinearMap] = {}

    def _dot_map(self, letters: str) -> Tuple[ModuleWord, LinearMap]:
        word = self.params.word(letters)
        if letters not in self._dots:
            self._dots[letters] = quadratic_ops("dot", word, split=1)
        return word, self._dots[letters]

    def push(self, term: Term, state: State) -> State:
        N, epsilon = self.params.N, self.params.epsilon
        letters = term.domain + self.tail
        for offset, g in term.atomize():
            width = len(g.domain)
            out: State = {}
            if g.is_dot:
                word, op = self._dot_map(letters[offset:])
                for idx, c in state.items():
                    column = op.column(word.index(idx[offset:]))
                    for row, v in column.items():
                        key = idx[:offset] + word.unindex(row)
                        _accumulate(out, key, c * v)
            else:
                table = box_table(g, N, epsilon)
                for idx, c in state.items():
                    for image, v in table.get(idx[offset : offset + width], ()):
                        key = idx[:offset] + image + idx[offset + width :]
                        _accumulate(out, key, c * v)
            state = out
            letters = letters[:offset] + g.codomain + letters[offset + width :]
            if not state:
                break
        return state


def _accumulate(state: State, key: Index, value: CycloScalar) -> None:
    total = state.get(key)
    total = value if total is None else total + value
    if total.is_zero():
        state.pop(key, None)
    else:
        state[key] = total


def _compile(f: Diagram, params: IncarnationParams, tail: str) -> LinearMap:
    domain = params.word(f.domain + tail)
    codomain = params.word(f.codomain + tail)
    pusher = _Pusher(params, tail)
    columns: Dict[int, Column] = {}
    sources = _indices(domain.letters, params.N)
    for term, coeff in f.terms.items():
        scale = params.evaluate(coeff)
        if scale.is_zero():
            continue
        fast = None if tail or term.dot_count else _crossing_permutation(term, params.N)
        for idx in sources:
            col = domain.index(idx)
            if fast is not None:
                perm, factor = fast
                image = {codomain.index(tuple(idx[p] for p in perm)): factor * scale}
            else:
                state = pusher.push(term, {idx: scale})
                image = {codomain.index(k): v for k, v in state.items()}
            if image:
                add_into(columns.setdefault(col, {}), image)
    return LinearMap(codomain.dimension, domain.dimension, columns, domain, codomain)


MemoKey = Tuple[str, IncarnationParams, str]


class MatrixStore(Protocol):
    def get(self, key: MemoKey) -> Optional[LinearMap]: ...

    def put(self, key: MemoKey, value: LinearMap) -> None: ...


class IncarnationMemo:
    """
    Per-process memo of incarnated diagrams keyed by (text, params, tail).

    An attached store (the on-disk result cache) is consulted on a miss and fed on
    every new entry.
    """

    def __init__(self) -> None:
        self._entries: Dict[MemoKey, LinearMap] = {}
        self._lock = threading.Lock()
        self.enabled = True
        self.store: Optional[MatrixStore] = None

    def attach(self, store: Optional[MatrixStore]) -> None:
        self.store = store

    def get(self, key: MemoKey) -> Optional[LinearMap]:
        if not self.enabled:
            return None
        hit = self._entries.get(key)
        if hit is None and self.store is not None:
            hit = self.store.get(key)
            if hit is not None:
                with self._lock:
                    self._entries.setdefault(key, hit)
        return hit

    def put(self, key: MemoKey, value: LinearMap) -> None:
        if not self.enabled:
            return
        with self._lock:
            self._entries.setdefault(key, value)
        if self.store is not None:
            self.store.put(key, value)

    def clear(self) -> None:
        with self._lock:
            self._entries.clear()


MEMO = IncarnationMemo()


def incarnate(f: Diagram, params: IncarnationParams) -> LinearMap:
    """
    Exact matrix of a dot-free diagram.

    Args:
        f: The diagram.
        params: N, epsilon and the D specialization.

    Returns:
        LinearMap: Map from the domain word to the codomain word; 1x1 for closed f.

    Raises:
        UnsupportedBox: When f contains dots.
        EvaluationPole: When a coefficient has a pole at (d, D).
    """
    if f.has_dots:
        raise UnsupportedBox("diagram contains dots; use affine_incarnate")
    key = (str(f), params, "")
    cached = MEMO.get(key)
    if cached is not None:
        return cached
    result = _compile(f, params, "")
    MEMO.put(key, result)
    return result


def incarnate_chain(parts: Sequence[Diagram], params: IncarnationParams) -> LinearMap:
    """Incarnation of parts[0] ; parts[1] ; ... as a product of the factor matrices."""
    if not parts:
        raise ShapeError("empty composition chain")
    result = incarnate(parts[0], params)
    for part in parts[1:]:
        if result.codomain is not None and result.codomain.letters != part.domain:
            raise ShapeError(f"chain breaks between {result.codomain} and {part.domain or 'empty'}")
        result = result.then(incarnate(part, params))
    return result


def affine_incarnate(f: Diagram, params: IncarnationParams, module: ModuleWord) -> LinearMap:
    """
    Component at the module word M of the natural transformation of f.

    Non-dot boxes act as in incarnate, tensored with the identity of M. A dot on
    strand k applies the dot operator across (strand k | every factor to its right,
    M included).

    Args:
        f: A diagram, possibly with dots.
        params: N and epsilon; the module word must share them.
        module: The module word M.

    Returns:
        LinearMap: Map from (domain + M) to (codomain + M).
    """
    if module.N != params.N or module.epsilon != params.epsilon:
        raise ShapeError(f"module word {module} belongs to different parameters")
    key = (str(f), params, module.letters)
    cached = MEMO.get(key)
    if cached is not None:
        return cached
    result = _compile(f, params, module.letters)
    MEMO.put(key, result)
    return result


def affine_incarnate_chain(
    parts: Sequence[Diagram], params: IncarnationParams, module: ModuleWord
) -> LinearMap:
    result = affine_incarnate(parts[0], params, module)
    for part in parts[1:]:
        result = result.then(affine_incarnate(part, params, module))
    return result
