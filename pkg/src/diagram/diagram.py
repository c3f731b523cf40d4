"""Linear combinations of layered terms and their monoidal calculus."""

from fractions import Fraction
from typing import Dict, Iterator, List, Optional, Tuple, Union

from src.diagram.objects import CompositionError, Gen, check_word
from src.diagram.term import Term
from src.exactnum import ParamScalar

Coefficient = Union[ParamScalar, Fraction, int]


def _word_text(word: str) -> str:
    return word or "empty"


class Diagram:
    """
    A k-linear morphism: a finite map from terms to ParamScalar coefficients.

    All terms share the diagram's domain and codomain. Zero coefficients are never
    stored, so the zero morphism has no terms.
    """

    __slots__ = ("domain", "codomain", "terms")

    def __init__(
        self,
        domain: str,
        codomain: str,
        terms: Optional[Dict[Term, Coefficient]] = None,
    ) -> None:
        self.domain: str = check_word(domain)
        self.codomain: str = check_word(codomain)
        self.terms: Dict[Term, ParamScalar] = {}
        for term, coeff in (terms or {}).items():
            if term.domain != domain or term.codomain != codomain:
                raise CompositionError(
                    f"term {term} has type {_word_text(term.domain)}->"
                    f"{_word_text(term.codomain)}, expected "
                    f"{_word_text(domain)}->{_word_text(codomain)}"
                )
            self._accumulate(term, ParamScalar.of(coeff))

    def _accumulate(self, term: Term, coeff: ParamScalar) -> None:
        total = self.terms.get(term)
        total = coeff if total is None else total + coeff
        if total.is_zero():
            self.terms.pop(term, None)
        else:
            self.terms[term] = total

    @classmethod
    def from_term(cls, term: Term, coeff: Coefficient = 1) -> "Diagram":
        return cls(term.domain, term.codomain, {term: coeff})

    @classmethod
    def identity(cls, word: str) -> "Diagram":
        return cls.from_term(Term.identity(word))

    @classmethod
    def generator(cls, gen: Union[Gen, str]) -> "Diagram":
        return cls.from_term(Term.box(Gen(gen)))

    @classmethod
    def zero(cls, domain: str, codomain: str) -> "Diagram":
        return cls(domain, codomain)

    def items(self) -> List[Tuple[Term, ParamScalar]]:
        """Terms with coefficients, sorted by their printed form."""
        return sorted(self.terms.items(), key=lambda item: str(item[0]))

    def __iter__(self) -> Iterator[Tuple[Term, ParamScalar]]:
        return iter(self.items())

    def __len__(self) -> int:
        return len(self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    @property
    def is_closed(self) -> bool:
        return not self.domain and not self.codomain

    @property
    def has_dots(self) -> bool:
        return any(term.dot_count for term in self.terms)

    def then(self, other: "Diagram") -> "Diagram":
        """Stack other on top of self (self first)."""
        if self.codomain != other.domain:
            raise CompositionError(
                f"cannot compose {_word_text(self.domain)}->{_word_text(self.codomain)} "
                f"with {_word_text(other.domain)}->{_word_text(other.codomain)}"
            )
        out = Diagram(self.domain, other.codomain)
        for t1, c1 in self.terms.items():
            for t2, c2 in other.terms.items():
                out._accumulate(t1.then(t2), c1 * c2)
        return out

    def tensor(self, other: "Diagram") -> "Diagram":
        out = Diagram(self.domain + other.domain, self.codomain + other.codomain)
        for t1, c1 in self.terms.items():
            for t2, c2 in other.terms.items():
                out._accumulate(t1.tensor(t2), c1 * c2)
        return out

    def _check_parallel(self, other: "Diagram") -> None:
        if (self.domain, self.codomain) != (other.domain, other.codomain):
            raise CompositionError(
                f"cannot add {_word_text(self.domain)}->{_word_text(self.codomain)} "
                f"and {_word_text(other.domain)}->{_word_text(other.codomain)}"
            )

    def __add__(self, other: "Diagram") -> "Diagram":
        self._check_parallel(other)
        out = Diagram(self.domain, self.codomain, dict(self.terms))
        for term, coeff in other.terms.items():
            out._accumulate(term, coeff)
        return out

    def __neg__(self) -> "Diagram":
        return self.scale(-1)

    def __sub__(self, other: "Diagram") -> "Diagram":
        return self + (-other)

    def scale(self, factor: Coefficient) -> "Diagram":
        factor = ParamScalar.of(factor)
        out = Diagram(self.domain, self.codomain)
        if factor.is_zero():
            return out
        for term, coeff in self.terms.items():
            out.terms[term] = coeff * factor
        return out

    def __rmul__(self, factor: Coefficient) -> "Diagram":
        return self.scale(factor)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Diagram):
            return NotImplemented
        return (
            self.domain == other.domain
            and self.codomain == other.codomain
            and self.terms == other.terms
        )

    def __hash__(self) -> int:
        return hash((self.domain, self.codomain, frozenset(self.terms.items())))

    def __str__(self) -> str:
        if not self.terms:
            if self.domain != self.codomain:
                return f"0 : {_word_text(self.domain)}->{_word_text(self.codomain)}"
            return f"0 * {Term.identity(self.domain)}"
        text = ""
        for k, (term, coeff) in enumerate(self.items()):
            sign, body = _format_summand(term, coeff)
            if k == 0:
                text = ("- " if sign == "-" else "") + body
            else:
                text += f" {sign} {body}"
        return text

    def __repr__(self) -> str:
        return f"Diagram({_word_text(self.domain)}->{_word_text(self.codomain)}: {self})"


def _format_summand(term: Term, coeff: ParamScalar) -> Tuple[str, str]:
    if coeff.is_constant:
        value = coeff.constant()
        magnitude = abs(value)
        sign = "-" if value < 0 else "+"
        if magnitude == 1:
            return sign, str(term)
        return sign, f"{magnitude} * {term}"
    return "+", f"({coeff}) * {term}"


def compose(f: Diagram, g: Diagram) -> Diagram:
    """f then g, reading bottom to top."""
    return f.then(g)


def tensor(f: Diagram, g: Diagram) -> Diagram:
    return f.tensor(g)


def compose_all(*parts: Diagram) -> Diagram:
    result = parts[0]
    for part in parts[1:]:
        result = result.then(part)
    return result


def tensor_all(parts: List[Diagram], word: str = "") -> Diagram:
    """Tensor product of a list; the empty list gives the identity on the unit."""
    result = Diagram.identity(word) if not parts else parts[0]
    for part in parts[1:]:
        result = result.tensor(part)
    return result


def whisker(left: str, f: Diagram, right: str) -> Diagram:
    """id_left ⊗ f ⊗ id_right."""
    return Diagram.identity(left).tensor(f).tensor(Diagram.identity(right))
