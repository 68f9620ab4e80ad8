"""Ring constructor trees and the ring-spec DSL.

Grammar::

    spec := term { "x" term }
    term := "Z/" nat | "GF(" nat ")" | "M" nat "(" spec ")" | "UT2(" term ")"
          | "Dual(" term [ "," "frob^" nat ] ")" | "EpsDelta(" term ")"
          | "Quot(" spec ";" gens ")" | "Table(" path ")"
          | "(" spec ")"

``gens`` is a comma separated list of element indices or element labels.
"""

from __future__ import annotations

from dataclasses import dataclass

from .field import is_prime, prime_power


class SpecError(ValueError):
    """Semantic error in a ring spec (valid syntax, invalid parameters)."""


class ParseError(SpecError):
    def __init__(self, text: str, pos: int, expected: list[str]):
        self.text, self.pos, self.expected = text, pos, expected
        found = repr(text[pos]) if pos < len(text) else "end of input"
        super().__init__(
            f"syntax error at position {pos}: expected {' or '.join(expected)}, found {found}"
            f"\n  {text}\n  {' ' * pos}^")


@dataclass(frozen=True)
class ModInt:
    n: int

    def __str__(self):
        return f"Z/{self.n}"


@dataclass(frozen=True)
class GaloisField:
    p: int
    k: int = 1
    modulus: tuple[int, ...] | None = None

    def __str__(self):
        return f"GF({self.p ** self.k})"


@dataclass(frozen=True)
class MatrixRing:
    base: "RingSpec"
    k: int

    def __str__(self):
        return f"M{self.k}({self.base})"


@dataclass(frozen=True)
class UpperTriangular2:
    field: "RingSpec"

    def __str__(self):
        return f"UT2({self.field})"


@dataclass(frozen=True)
class DualNumbers:
    field: "RingSpec"
    twist: int = 0  # power of the Frobenius automorphism

    def __str__(self):
        return f"Dual({self.field},frob^{self.twist})" if self.twist else f"Dual({self.field})"


@dataclass(frozen=True)
class EpsDelta:
    field: "RingSpec"

    def __str__(self):
        return f"EpsDelta({self.field})"


@dataclass(frozen=True)
class Product:
    factors: tuple["RingSpec", ...]

    def __str__(self):
        return " x ".join(
            f"({f})" if isinstance(f, Product) else str(f) for f in self.factors)


@dataclass(frozen=True)
class Quotient:
    base: "RingSpec"
    gens: tuple[str, ...]

    def __str__(self):
        return f"Quot({self.base};{','.join(self.gens)})"


@dataclass(frozen=True)
class Table:
    add: tuple[tuple[int, ...], ...]
    mul: tuple[tuple[int, ...], ...]
    zero: int = 0
    one: int = 1
    path: str | None = None

    def __str__(self):
        return f"Table({self.path})" if self.path else f"Table(<{len(self.add)} elements>)"


RingSpec = ModInt | GaloisField | MatrixRing | UpperTriangular2 | DualNumbers | EpsDelta | Product | Quotient | Table


def field_params(spec: RingSpec) -> tuple[int, int] | None:
    """(p, k) if the description denotes a finite field, else None."""
    if isinstance(spec, GaloisField):
        return spec.p, spec.k
    if isinstance(spec, ModInt) and is_prime(spec.n):
        return spec.n, 1
    return None


def validate(spec: RingSpec) -> RingSpec:
    """Check per-constructor parameter constraints; return the parsed description."""
    if isinstance(spec, ModInt):
        if spec.n < 1:
            raise SpecError(f"Z/{spec.n}: modulus must be positive")
    elif isinstance(spec, GaloisField):
        if not is_prime(spec.p) or spec.k < 1:
            raise SpecError(f"GF({spec.p}^{spec.k}): not a prime power")
    elif isinstance(spec, MatrixRing):
        if spec.k < 1:
            raise SpecError("matrix size must be >= 1")
        validate(spec.base)
    elif isinstance(spec, (UpperTriangular2, DualNumbers, EpsDelta)):
        validate(spec.field)
        fp = field_params(spec.field)
        if fp is None:
            raise SpecError(f"{type(spec).__name__} needs a field, got {spec.field}")
        if isinstance(spec, DualNumbers) and spec.twist < 0:
            raise SpecError("Frobenius power must be >= 0")
    elif isinstance(spec, Product):
        if not spec.factors:
            raise SpecError("empty product")
        for f in spec.factors:
            validate(f)
    elif isinstance(spec, Quotient):
        validate(spec.base)
    elif isinstance(spec, Table):
        n = len(spec.add)
        if n < 1 or len(spec.mul) != n or any(len(r) != n for r in spec.add + spec.mul):
            raise SpecError("table ring needs two n x n tables")
        if not (0 <= spec.zero < n and 0 <= spec.one < n):
            raise SpecError("zero/one index out of range")
    return spec


def load_table(path: str) -> Table:
    """Read a table ring file: ``n zero one`` then n addition rows, n multiplication rows."""
    with open(path, encoding="utf-8") as fh:
        nums = fh.read().split()
    try:
        vals = [int(x) for x in nums]
    except ValueError as exc:
        raise SpecError(f"{path}: non-integer entry") from exc
    if len(vals) < 3:
        raise SpecError(f"{path}: missing header")
    n, zero, one = vals[:3]
    body = vals[3:]
    if n < 1 or len(body) != 2 * n * n:
        raise SpecError(f"{path}: expected {2 * n * n} table entries, got {len(body)}")
    rows = [tuple(body[i * n:(i + 1) * n]) for i in range(2 * n)]
    return Table(tuple(rows[:n]), tuple(rows[n:]), zero, one, path)


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def error(self, *expected):
        raise ParseError(self.text, self.pos, list(expected))

    def ws(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self, lit: str) -> bool:
        self.ws()
        return self.text.startswith(lit, self.pos)

    def expect(self, lit: str):
        if not self.peek(lit):
            self.error(repr(lit))
        self.pos += len(lit)

    def nat(self) -> int:
        self.ws()
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        if start == self.pos:
            self.error("natural number")
        return int(self.text[start:self.pos])

    def spec(self) -> RingSpec:
        factors = [self.term()]
        while self.peek("x"):
            self.pos += 1
            factors.append(self.term())
        return factors[0] if len(factors) == 1 else Product(tuple(factors))

    def term(self) -> RingSpec:
        self.ws()
        start = self.pos
        if self.peek("Z/"):
            self.pos += 2
            return self._check(ModInt(self.nat()), start)
        if self.peek("GF("):
            self.pos += 3
            q = self.nat()
            self.expect(")")
            pk = prime_power(q)
            if pk is None:
                raise SpecError(f"GF({q}) at position {start}: {q} is not a prime power")
            return GaloisField(*pk)
        if self.peek("UT2("):
            self.pos += 4
            inner = self.term()
            self.expect(")")
            return self._check(UpperTriangular2(inner), start)
        if self.peek("Dual("):
            self.pos += 5
            inner = self.term()
            twist = 0
            if self.peek(","):
                self.pos += 1
                self.expect("frob^")
                twist = self.nat()
            self.expect(")")
            return self._check(DualNumbers(inner, twist), start)
        if self.peek("EpsDelta("):
            self.pos += 9
            inner = self.term()
            self.expect(")")
            return self._check(EpsDelta(inner), start)
        if self.peek("Quot("):
            self.pos += 5
            base = self.spec()
            self.expect(";")
            gens = self.gens()
            self.expect(")")
            return Quotient(base, gens)
        if self.peek("Table("):
            self.pos += 6
            end = self.text.find(")", self.pos)
            if end < 0:
                self.pos = len(self.text)
                self.error("')'")
            path = self.text[self.pos:end].strip()
            self.pos = end + 1
            return load_table(path)
        if self.peek("M"):
            self.pos += 1
            k = self.nat()
            self.expect("(")
            base = self.spec()
            self.expect(")")
            return self._check(MatrixRing(base, k), start)
        if self.peek("("):
            self.pos += 1
            inner = self.spec()
            self.expect(")")
            return inner
        self.error("'Z/'", "'GF('", "'M<n>('", "'UT2('", "'Dual('", "'EpsDelta('",
                   "'Quot('", "'Table('", "'('")

    def gens(self) -> tuple[str, ...]:
        out = []
        while True:
            self.ws()
            start = self.pos
            depth = 0
            while self.pos < len(self.text):
                ch = self.text[self.pos]
                if ch in "([":
                    depth += 1
                elif ch in ")]":
                    if depth == 0:
                        break
                    depth -= 1
                elif ch == "," and depth == 0:
                    break
                self.pos += 1
            tok = self.text[start:self.pos].strip()
            if not tok:
                self.error("element descriptor")
            out.append(tok)
            if self.peek(","):
                self.pos += 1
                continue
            return tuple(out)

    def _check(self, spec, start):
        try:
            return validate(spec)
        except SpecError as exc:
            raise SpecError(f"{exc} (at position {start})") from None


def parse_ring_spec(text: str) -> RingSpec:
    """Parse the ring-spec DSL into a constructor tree."""
    p = _Parser(text)
    spec = p.spec()
    p.ws()
    if p.pos != len(text):
        p.error("'x'", "end of input")
    return spec
