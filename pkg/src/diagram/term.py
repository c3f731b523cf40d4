"""Layered string-diagram terms: a vertical stack of horizontal slices of boxes."""

from dataclasses import dataclass
from functools import cached_property
from typing import List, Tuple

from src.diagram.objects import CompositionError, Gen, identity_gen

Slice = Tuple[Gen, ...]
Atom = Tuple[int, Gen]


def slice_domain(boxes: Slice) -> str:
    return "".join(box.domain for box in boxes)


def slice_codomain(boxes: Slice) -> str:
    return "".join(box.codomain for box in boxes)


def identity_slice(word: str) -> Slice:
    return tuple(identity_gen(letter) for letter in word)


def _is_identity_slice(boxes: Slice) -> bool:
    return all(box.is_identity for box in boxes)


@dataclass(frozen=True)
class Term:
    """
    A single layered diagram, read bottom to top.

    Slices made only of identity boxes are dropped on construction, so the empty
    term is the identity on its domain.
    """

    domain: str
    slices: Tuple[Slice, ...] = ()

    def __post_init__(self) -> None:
        kept = tuple(tuple(s) for s in self.slices if not _is_identity_slice(s))
        object.__setattr__(self, "slices", kept)
        word = self.domain
        for level, boxes in enumerate(kept):
            if slice_domain(boxes) != word:
                raise CompositionError(
                    f"slice {level} expects {slice_domain(boxes) or 'empty'} "
                    f"but receives {word or 'empty'}"
                )
            word = slice_codomain(boxes)
        object.__setattr__(self, "_codomain", word)

    @property
    def codomain(self) -> str:
        return self._codomain  # type: ignore[attr-defined]

    @classmethod
    def identity(cls, word: str) -> "Term":
        return cls(word, ())

    @classmethod
    def box(cls, gen: Gen) -> "Term":
        return cls(gen.domain, ((gen,),))

    def levels(self) -> List[str]:
        """Object words between slices, bottom first."""
        words = [self.domain]
        for boxes in self.slices:
            words.append(slice_codomain(boxes))
        return words

    def then(self, other: "Term") -> "Term":
        if self.codomain != other.domain:
            raise CompositionError(
                f"cannot compose {self.domain or 'empty'}->{self.codomain or 'empty'} "
                f"with {other.domain or 'empty'}->{other.codomain or 'empty'}"
            )
        return Term(self.domain, self.slices + other.slices)

    def tensor(self, other: "Term") -> "Term":
        """Side by side; the shorter term is padded with identity slices on top."""
        height = max(len(self.slices), len(other.slices))
        left_top, right_top = self.codomain, other.codomain
        slices = []
        for k in range(height):
            left = self.slices[k] if k < len(self.slices) else identity_slice(left_top)
            right = other.slices[k] if k < len(other.slices) else identity_slice(right_top)
            slices.append(left + right)
        return Term(self.domain + other.domain, tuple(slices))

    @cached_property
    def dot_count(self) -> int:
        return sum(1 for boxes in self.slices for box in boxes if box.is_dot)

    @cached_property
    def gens(self) -> Tuple[Gen, ...]:
        return tuple(box for boxes in self.slices for box in boxes if not box.is_identity)

    def atomize(self) -> List[Atom]:
        """
        One box per step as (offset, gen), offsets in the word current at that step.

        Boxes of a slice are applied left to right.
        """
        atoms: List[Atom] = []
        for boxes in self.slices:
            offset = 0
            for box in boxes:
                if not box.is_identity:
                    atoms.append((offset, box))
                offset += len(box.codomain)
        return atoms

    def normal_form(self) -> Tuple[Atom, ...]:
        """
        Atom sequence with independent boxes sorted leftmost first.

        Two terms related by the interchange law share a normal form.
        """
        atoms = self.atomize()
        changed = True
        while changed:
            changed = False
            for k in range(len(atoms) - 1):
                (o1, a), (o2, b) = atoms[k], atoms[k + 1]
                width_b = len(b.domain)
                if o2 + width_b <= o1:
                    shifted = o1 - width_b + len(b.codomain)
                    atoms[k], atoms[k + 1] = (o2, b), (shifted, a)
                    changed = True
        return tuple(atoms)

    def __str__(self) -> str:
        if not self.domain and not self.slices:
            return "alt(0)"
        shown = self.slices or (identity_slice(self.domain),)
        return " ; ".join("(" + " * ".join(g.value for g in boxes) + ")" for boxes in shown)
