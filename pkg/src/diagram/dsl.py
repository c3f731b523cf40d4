"""Text syntax for diagrams."""

from fractions import Fraction
from functools import lru_cache
from typing import Optional

from lark import Lark, Transformer, v_args
from lark.exceptions import UnexpectedInput, VisitError

from src.diagram.builders import BUILDERS
from src.diagram.diagram import Diagram
from src.diagram.objects import Gen
from src.diagram.vertices import MACROS
from src.exactnum import D_PARAM, ParamScalar, d_PARAM


class DslSyntaxError(ValueError):
    """Raised when diagram text does not match the grammar."""

    def __init__(self, message: str, line: Optional[int] = None, column: Optional[int] = None):
        self.line = line
        self.column = column
        where = f" at line {line}, column {column}" if line is not None else ""
        super().__init__(f"{message}{where}")


# Earley: '*' is both the coefficient product and the tensor product.
DSL_GRAMMAR = r"""
    ?start: sum

    ?sum: term
        | "-" term              -> neg
        | sum "+" term          -> add
        | sum "-" term          -> sub

    ?term: comp
        | coeff "*" comp        -> scaled

    ?comp: factor
        | comp ";" factor       -> then

    ?factor: atom
        | factor "*" atom       -> tensor

    ?atom: GEN                                  -> gen
        | MACRO                                 -> macro
        | "(" sum ")"
        | "alt" "(" INT ")"                     -> alt
        | "pi" "(" INT ")"                      -> pi
        | "barbell" "(" INT "," INT ")"         -> barbell
        | "bubble" "(" COLOR "," INT ")"        -> bubble
        | "spokedloop" "(" INT "," BOOL ")"     -> spokedloop

    ?coeff: cprod

    ?cprod: cunary
        | cprod "*" cunary      -> cmul
        | cprod "/" cunary      -> cdiv

    ?cunary: cpow
        | "-" cunary            -> cneg

    ?cpow: catom
        | catom "^" INT         -> cpower

    ?catom: INT                 -> cnum
        | "d"                   -> cvar_d
        | "D"                   -> cvar_big_d
        | "(" csum ")"

    ?csum: cprod
        | csum "+" cprod        -> cadd
        | csum "-" cprod        -> csub

    GEN: "idS" | "idV" | "cupS" | "capS" | "cupV" | "capV"
        | "xSS" | "xSV" | "xVS" | "xVV" | "mVSS" | "sVSS" | "dotS" | "dotV"
    MACRO: "split_svs" | "merge_svs" | "split_ssv" | "merge_ssv" | "split_vss"
    COLOR: "S" | "V"
    BOOL: "true" | "false"
    COMMENT: /#[^\n]*/

    %import common.INT
    %import common.WS
    %ignore WS
    %ignore COMMENT
"""


@v_args(inline=True)
class DiagramBuilder(Transformer):
    """Turns a parse tree into a Diagram."""

    def gen(self, token) -> Diagram:
        return Diagram.generator(Gen(str(token)))

    def macro(self, token) -> Diagram:
        return MACROS[str(token)]()

    def alt(self, r) -> Diagram:
        return BUILDERS["alt"](int(r))

    def pi(self, r) -> Diagram:
        return BUILDERS["pi"](int(r))

    def barbell(self, r, t) -> Diagram:
        return BUILDERS["barbell"](int(r), int(t))

    def bubble(self, color, dots) -> Diagram:
        return BUILDERS["bubble"](str(color), int(dots))

    def spokedloop(self, r, flag) -> Diagram:
        return BUILDERS["spokedloop"](int(r), str(flag) == "true")

    def tensor(self, left: Diagram, right: Diagram) -> Diagram:
        return left.tensor(right)

    def then(self, first: Diagram, second: Diagram) -> Diagram:
        return first.then(second)

    def scaled(self, coeff: ParamScalar, body: Diagram) -> Diagram:
        return body.scale(coeff)

    def neg(self, body: Diagram) -> Diagram:
        return -body

    def add(self, left: Diagram, right: Diagram) -> Diagram:
        return left + right

    def sub(self, left: Diagram, right: Diagram) -> Diagram:
        return left - right

    def cnum(self, token) -> ParamScalar:
        return ParamScalar(Fraction(int(token)))

    def cvar_d(self) -> ParamScalar:
        return d_PARAM

    def cvar_big_d(self) -> ParamScalar:
        return D_PARAM

    def cmul(self, a: ParamScalar, b: ParamScalar) -> ParamScalar:
        return a * b

    def cdiv(self, a: ParamScalar, b: ParamScalar) -> ParamScalar:
        return a / b

    def cneg(self, a: ParamScalar) -> ParamScalar:
        return -a

    def cpower(self, a: ParamScalar, exponent) -> ParamScalar:
        return a ** int(exponent)

    def cadd(self, a: ParamScalar, b: ParamScalar) -> ParamScalar:
        return a + b

    def csub(self, a: ParamScalar, b: ParamScalar) -> ParamScalar:
        return a - b


@lru_cache(maxsize=1)
def _parser() -> Lark:
    return Lark(DSL_GRAMMAR, start="start", parser="earley")


def parse_dsl(text: str) -> Diagram:
    """
    Parse diagram text.

    Args:
        text: Expression in the diagram grammar; '#' starts a comment.

    Returns:
        Diagram: The parsed linear combination.

    Raises:
        DslSyntaxError: When the text does not match the grammar.
        CompositionError: When a ';', '+' or '-' joins mismatched object words.
        InvalidArgument: When a builder receives an out-of-range argument.
    """
    parser = _parser()
    try:
        tree = parser.parse(text)
    except UnexpectedInput as e:
        raise DslSyntaxError(
            f"unexpected input {e.get_context(text).strip()!r}",
            getattr(e, "line", None),
            getattr(e, "column", None),
        ) from e
    try:
        result = DiagramBuilder().transform(tree)
    except VisitError as e:
        raise e.orig_exc from e
    if isinstance(result, ParamScalar):
        raise DslSyntaxError("a bare coefficient is not a diagram", 1, 1)
    return result


def to_dsl(f: Diagram) -> str:
    """Normalized text of a diagram; parse_dsl(to_dsl(f)) == f."""
    return str(f)
