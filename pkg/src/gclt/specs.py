"""
The group spec language.

    spec   := term (("x" | "o") term)*
    term   := C<n> | D<n> | Dic<n> | Q<2^k> | SD<2^k> | A<n1>x<n2>x...
            | M(<m>,<n>,<r>) | E(<p>,<k>,[<row>;<row>...],<m>)
            | P(<degree>;<gen>,<gen>...) | "(" spec ")"
    gen    := "()" | cycle+        cycle := "(" point ("," point)* ")"

"x" is the direct product and "o" the central product over the unique
central involutions; both associate to the left. Whitespace is ignored.
"""

from dataclasses import dataclass, field
from typing import Callable, Dict, Tuple, Union

from sympy.combinatorics import Permutation

from . import constructors
from .errors import ParameterConditionError, SpecParseError
from .group_core import FiniteGroup

Param = Union[int, Tuple[Tuple[int, ...], ...]]


@dataclass(frozen=True)
class GroupSpec:
    """A parsed constructor expression.

    family is one of C, D, Dic, Q, SD, A, M, E, P for constructors, "x" for a
    direct product or "o" for a central product. Products keep their operands
    in factors; permutation generators are tuples of 1-based cycles.
    """

    family: str
    params: Tuple[Param, ...] = ()
    factors: Tuple["GroupSpec", ...] = field(default=())

    @property
    def expression(self) -> str:
        return render(self)

    def __str__(self) -> str:
        return render(self)


def _render_cycles(generator: Tuple[Tuple[int, ...], ...]) -> str:
    if not generator:
        return "()"
    return "".join("(" + ",".join(str(i) for i in cycle) + ")" for cycle in generator)


def render(spec: GroupSpec) -> str:
    """Canonical text of a spec; parse(render(s)) == s."""
    family = spec.family
    if family in ("x", "o"):
        return family.join(constructors.operand(render(f), family) for f in spec.factors)
    if family == "A":
        return "A" + "x".join(str(p) for p in spec.params)
    if family == "M":
        return "M({},{},{})".format(*spec.params)
    if family == "E":
        p, k, matrix, m = spec.params
        return f"E({p},{k},{constructors.render_matrix(matrix)},{m})"
    if family == "P":
        degree, gens = spec.params
        return f"P({degree};" + ",".join(_render_cycles(g) for g in gens) + ")"
    return f"{family}{spec.params[0]}"


class _Parser:
    def __init__(self, text: str):
        self.text = "".join(text.split())
        self.pos = 0

    def error(self, message: str) -> SpecParseError:
        return SpecParseError(message, self.text, self.pos)

    def peek(self, length: int = 1) -> str:
        return self.text[self.pos : self.pos + length]

    def expect(self, token: str) -> None:
        if self.peek(len(token)) != token:
            found = self.peek() or "end of input"
            raise self.error(f"expected {token!r}, found {found!r}")
        self.pos += len(token)

    def integer(self) -> int:
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        if start == self.pos:
            raise self.error("expected an integer")
        return int(self.text[start : self.pos])

    def parse(self) -> GroupSpec:
        if not self.text:
            raise self.error("empty group spec")
        spec = self.expression()
        if self.pos != len(self.text):
            raise self.error(f"unexpected {self.peek()!r}")
        return spec

    def expression(self) -> GroupSpec:
        spec = self.term()
        while self.peek() in ("x", "o") and self.peek():
            op = self.peek()
            self.pos += 1
            right = self.term()
            if op == "x":
                left = spec.factors if spec.family == "x" else (spec,)
                extra = right.factors if right.family == "x" else (right,)
                spec = GroupSpec("x", (), left + extra)
            else:
                spec = GroupSpec("o", (), (spec, right))
        return spec

    def term(self) -> GroupSpec:
        if self.peek() == "(":
            self.pos += 1
            inner = self.expression()
            self.expect(")")
            return inner
        for family in ("Dic", "SD", "C", "D", "Q"):
            if self.peek(len(family)) == family:
                self.pos += len(family)
                return GroupSpec(family, (self.integer(),))
        head = self.peek()
        if head == "A":
            self.pos += 1
            parts = [self.integer()]
            while self.peek() == "x" and self.peek(2)[1:].isdigit():
                self.pos += 1
                parts.append(self.integer())
            return GroupSpec("A", tuple(parts))
        if head == "M":
            self.pos += 1
            self.expect("(")
            m = self.integer()
            self.expect(",")
            n = self.integer()
            self.expect(",")
            r = self.integer()
            self.expect(")")
            return GroupSpec("M", (m, n, r))
        if head == "E":
            self.pos += 1
            self.expect("(")
            p = self.integer()
            self.expect(",")
            k = self.integer()
            self.expect(",")
            matrix = self.matrix()
            self.expect(",")
            m = self.integer()
            self.expect(")")
            return GroupSpec("E", (p, k, matrix, m))
        if head == "P":
            self.pos += 1
            self.expect("(")
            degree = self.integer()
            self.expect(";")
            gens = [self.generator()]
            while self.peek() == ",":
                self.pos += 1
                gens.append(self.generator())
            self.expect(")")
            return GroupSpec("P", (degree, tuple(gens)))
        raise self.error(f"unknown group family at {head or 'end of input'!r}")

    def matrix(self) -> Tuple[Tuple[int, ...], ...]:
        self.expect("[")
        rows = [self.row()]
        while self.peek() == ";":
            self.pos += 1
            rows.append(self.row())
        self.expect("]")
        return tuple(rows)

    def row(self) -> Tuple[int, ...]:
        values = [self.integer()]
        while self.peek() == ",":
            self.pos += 1
            values.append(self.integer())
        return tuple(values)

    def generator(self) -> Tuple[Tuple[int, ...], ...]:
        if self.peek(2) == "()":
            self.pos += 2
            return ()
        cycles = [self.cycle()]
        while self.peek() == "(" and self.peek(2) != "()":
            cycles.append(self.cycle())
        return tuple(cycles)

    def cycle(self) -> Tuple[int, ...]:
        self.expect("(")
        points = [self.integer()]
        while self.peek() == ",":
            self.pos += 1
            points.append(self.integer())
        self.expect(")")
        return tuple(points)


def parse_spec(text: str) -> GroupSpec:
    """Parse a spec string.

    Raises:
        SpecParseError: With the position of the first offending character
    """
    return _Parser(text).parse()


def _permutation(degree: int, generator: Tuple[Tuple[int, ...], ...]) -> Permutation:
    for cycle in generator:
        for point in cycle:
            if not 1 <= point <= degree:
                raise ParameterConditionError(f"point {point} outside 1..{degree}", "cycle points lie in 1..degree")
    return Permutation([[point - 1 for point in cycle] for cycle in generator], size=degree)


_BUILDERS: Dict[str, Callable[..., FiniteGroup]] = {
    "C": constructors.cyclic,
    "D": constructors.dihedral,
    "Dic": constructors.dicyclic,
    "Q": constructors.generalized_quaternion,
    "SD": constructors.semidihedral,
    "M": constructors.metacyclic,
}


def build(spec: Union[GroupSpec, str]) -> FiniteGroup:
    """Build the group a spec describes, recording the canonical spec string."""
    if isinstance(spec, str):
        spec = parse_spec(spec)

    family = spec.family
    if family == "x":
        group = constructors.products([build(f) for f in spec.factors])
    elif family == "o":
        group = constructors.central_product(build(spec.factors[0]), build(spec.factors[1]))
    elif family == "A":
        group = constructors.abelian(spec.params)
    elif family == "E":
        p, k, matrix, m = spec.params
        group = constructors.elementary_semidirect(p, k, matrix, m)
    elif family == "P":
        degree, gens = spec.params
        group = constructors.from_permutations(degree, [_permutation(degree, g) for g in gens])
    else:
        group = _BUILDERS[family](*spec.params)
    return group.with_spec(render(spec))
