"""Finite unital rings with indexed elements.

Index 0 is always the additive identity and, when the ring has more than one
element, index 1 is the multiplicative identity.  Rings up to
``TABLE_THRESHOLD`` elements carry dense operation tables; larger ones
evaluate arithmetic on structured elements.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, field as dc_field
from functools import cached_property
from typing import Callable, Sequence

import numpy as np

from . import spec as S
from .field import FieldGF, gf, is_prime

TABLE_THRESHOLD = 256
DEFAULT_CEILING = 4096
FULL_AXIOM_SCAN = 64
AXIOM_SAMPLES = 10_000
AXIOM_SEED = 20000


class RingError(ValueError):
    pass


class CeilingExceeded(RingError):
    pass


class AxiomViolation(RingError):
    def __init__(self, law: str, triple: tuple):
        self.law, self.triple = law, triple
        super().__init__(f"ring axiom '{law}' fails at {triple}")


class HomError(RingError):
    def __init__(self, msg: str, witness=None):
        self.witness = witness
        super().__init__(msg)


@dataclass(frozen=True)
class KStructure:
    """A subfield K of R together with a basis of R as a left K-space."""

    field: FieldGF
    embed: tuple[int, ...]  # K element code -> ring index
    basis: tuple[int, ...]  # ring indices


@dataclass(eq=False)
class Ring:
    spec: object
    labels: tuple[str, ...]
    add_table: list[list[int]] | None = None
    mul_table: list[list[int]] | None = None
    neg_table: list[int] | None = None
    add_fn: Callable[[int, int], int] | None = None
    mul_fn: Callable[[int, int], int] | None = None
    kstruct: KStructure | None = None
    field: FieldGF | None = None  # set when the ring is GF(q) or Z/p itself
    units: dict[int, int] = dc_field(default_factory=dict)
    radical: frozenset[int] = frozenset()
    characteristic: int = 1
    structure: tuple = ()  # structured element per index, when built from a constructor

    @property
    def size(self) -> int:
        return len(self.labels)

    def __len__(self):
        return len(self.labels)

    @property
    def zero(self) -> int:
        return 0

    @property
    def one(self) -> int:
        return 1 if self.size > 1 else 0

    def add(self, a: int, b: int) -> int:
        if self.add_table is not None:
            return self.add_table[a][b]
        return self.add_fn(a, b)

    def mul(self, a: int, b: int) -> int:
        if self.mul_table is not None:
            return self.mul_table[a][b]
        return self.mul_fn(a, b)

    def neg(self, a: int) -> int:
        return self.neg_table[a]

    def sub(self, a: int, b: int) -> int:
        return self.add(a, self.neg_table[b])

    def is_unit(self, a: int) -> bool:
        return a in self.units

    def inv(self, a: int) -> int:
        return self.units[a]

    def label(self, a: int) -> str:
        return self.labels[a]

    def element(self, desc) -> int:
        """Resolve an element descriptor: an index or a label."""
        if isinstance(desc, int):
            idx = desc
        else:
            desc = str(desc).strip()
            if desc in self._label_index:
                return self._label_index[desc]
            try:
                idx = int(desc)
            except ValueError:
                raise RingError(f"unknown element {desc!r} of {self.name}") from None
        if not 0 <= idx < self.size:
            raise RingError(f"element index {idx} out of range for {self.name}")
        return idx

    @cached_property
    def _label_index(self) -> dict[str, int]:
        return {lab: i for i, lab in enumerate(self.labels)}

    @property
    def name(self) -> str:
        return str(self.spec)

    @property
    def has_tables(self) -> bool:
        return self.add_table is not None

    @cached_property
    def np_add(self) -> np.ndarray:
        self._need_tables()
        return np.array(self.add_table, dtype=np.int64).reshape(self.size, self.size)

    @cached_property
    def np_mul(self) -> np.ndarray:
        self._need_tables()
        return np.array(self.mul_table, dtype=np.int64).reshape(self.size, self.size)

    @cached_property
    def np_neg(self) -> np.ndarray:
        return np.array(self.neg_table, dtype=np.int64)

    def _need_tables(self):
        if self.add_table is None:
            raise CeilingExceeded(
                f"{self.name} has {self.size} elements; dense tables exist only up to "
                f"{TABLE_THRESHOLD}")

    def __repr__(self):
        return f"<Ring {self.name} size={self.size}>"


@dataclass(frozen=True, eq=False)
class Ideal:
    ring: Ring
    members: frozenset[int]

    def __contains__(self, a):
        return a in self.members

    def __len__(self):
        return len(self.members)

    def __eq__(self, other):
        return isinstance(other, Ideal) and other.ring is self.ring and other.members == self.members

    def __hash__(self):
        return hash((id(self.ring), self.members))

    def sorted(self) -> list[int]:
        return sorted(self.members)


@dataclass(frozen=True, eq=False)
class RingHom:
    source: Ring
    target: Ring
    table: tuple[int, ...]

    def __call__(self, a: int) -> int:
        return self.table[a]

    def kernel(self) -> frozenset[int]:
        return frozenset(a for a, b in enumerate(self.table) if b == 0)

    def image(self) -> frozenset[int]:
        return frozenset(self.table)

    def is_injective(self) -> bool:
        return len(set(self.table)) == len(self.table)

    def is_surjective(self) -> bool:
        return len(set(self.table)) == self.target.size

    def compose(self, other: "RingHom") -> "RingHom":
        """self followed by other."""
        return RingHom(self.source, other.target, tuple(other.table[b] for b in self.table))


# -- construction ------------------------------------------------------------

def _build(spec, elements: Sequence, zero, one, add, mul, label, ceiling,
           kstruct_fn=None, field_obj=None, check_full=False) -> Ring:
    """Index structured elements (zero first, one second) and wrap them as a Ring."""
    n = len(elements)
    if n > ceiling:
        raise CeilingExceeded(f"{spec} has {n} elements, above the ceiling {ceiling}")
    order = [zero] + ([one] if one != zero else []) + [e for e in elements if e != zero and e != one]
    index = {e: i for i, e in enumerate(order)}
    if len(index) != n:
        raise RingError(f"{spec}: duplicate elements")
    labels = tuple(label(e) for e in order)

    def add_fn(a, b):
        return index[add(order[a], order[b])]

    def mul_fn(a, b):
        return index[mul(order[a], order[b])]

    ring = Ring(spec=spec, labels=labels, field=field_obj, structure=tuple(order))
    if n <= TABLE_THRESHOLD:
        ring.add_table = [[add_fn(a, b) for b in range(n)] for a in range(n)]
        ring.mul_table = [[mul_fn(a, b) for b in range(n)] for a in range(n)]
    else:
        ring.add_fn, ring.mul_fn = add_fn, mul_fn
    ring.neg_table = _negations(ring)
    if kstruct_fn is not None:
        ring.kstruct = kstruct_fn(index)
    _finish(ring, full=check_full)
    return ring


def _negations(R: Ring) -> list[int]:
    out = []
    for a in range(R.size):
        for b in range(R.size):
            if R.add(a, b) == 0:
                out.append(b)
                break
        else:
            raise AxiomViolation("additive inverse", (a,))
    return out


def _finish(R: Ring, full: bool):
    check_ring_axioms(R, full=full)
    R.units = _compute_units(R)
    R.radical = _compute_radical(R)
    one, x, c = R.one, R.one, 1
    while x != 0:
        x = R.add(x, one)
        c += 1
    R.characteristic = c if R.size > 1 else 1
    if R.kstruct is None and is_prime(R.characteristic):
        R.kstruct = _prime_field_kstruct(R)


def _prime_field_kstruct(R: Ring) -> KStructure:
    """GF(p) inside a ring of prime characteristic p, with a greedily chosen basis."""
    F = gf(R.characteristic)
    embed = [0]
    for _ in range(F.q - 1):
        embed.append(R.add(embed[-1], R.one))
    basis: list[int] = []
    spanned = {0}
    for x in range(R.size):
        if x in spanned:
            continue
        basis.append(x)
        spanned = {R.add(s, R.mul(e, x)) for s in spanned for e in embed}
    return KStructure(F, tuple(embed), tuple(basis))


def check_ring_axioms(R: Ring, full: bool = False, samples: int = AXIOM_SAMPLES,
                      seed: int = AXIOM_SEED) -> None:
    """Raise AxiomViolation on the first failing law.

    Full scan of all triples for table rings of at most FULL_AXIOM_SCAN
    elements (or when ``full``); otherwise ``samples`` seeded random triples.
    """
    n = R.size
    one = R.one
    for a in range(n):
        if R.add(0, a) != a or R.add(a, 0) != a:
            raise AxiomViolation("additive identity", (a,))
        if R.mul(one, a) != a or R.mul(a, one) != a:
            raise AxiomViolation("multiplicative identity", (a,))
    if R.has_tables and (full or n <= FULL_AXIOM_SCAN):
        A, M = R.np_add, R.np_mul
        if not np.array_equal(A, A.T):
            a, b = map(int, np.argwhere(A != A.T)[0])
            raise AxiomViolation("additive commutativity", (a, b))
        idx = np.arange(n)
        laws = {
            "additive associativity": (A[A], A[idx[:, None, None], A[None, :, :]]),
            "multiplicative associativity": (M[M], M[idx[:, None, None], M[None, :, :]]),
            # a(b+c) = ab + ac
            "left distributivity": (M[idx[:, None, None], A[None, :, :]],
                                    A[M[:, :, None], M[:, None, :]]),
            # (a+b)c = ac + bc
            "right distributivity": (M[A], A[M[:, None, :], M[None, :, :]]),
        }
        for law, (lhs, rhs) in laws.items():
            bad = np.argwhere(lhs != rhs)
            if bad.size:
                raise AxiomViolation(law, tuple(int(v) for v in bad[0]))
        return
    rng = random.Random(seed)
    triples = ((rng.randrange(n), rng.randrange(n), rng.randrange(n)) for _ in range(samples))
    for a, b, c in triples:
        add, mul = R.add, R.mul
        if add(a, b) != add(b, a):
            raise AxiomViolation("additive commutativity", (a, b))
        if add(add(a, b), c) != add(a, add(b, c)):
            raise AxiomViolation("additive associativity", (a, b, c))
        if mul(mul(a, b), c) != mul(a, mul(b, c)):
            raise AxiomViolation("multiplicative associativity", (a, b, c))
        if mul(a, add(b, c)) != add(mul(a, b), mul(a, c)):
            raise AxiomViolation("left distributivity", (a, b, c))
        if mul(add(a, b), c) != add(mul(a, c), mul(b, c)):
            raise AxiomViolation("right distributivity", (a, b, c))


def _compute_units(R: Ring) -> dict[int, int]:
    one = R.one
    units = {}
    for a in range(R.size):
        for b in range(R.size):
            if R.mul(a, b) == one:
                if R.mul(b, a) != one:
                    raise RingError(
                        f"internal error: {R.label(b)} is a right but not a left inverse "
                        f"of {R.label(a)} in the finite ring {R.name}")
                units[a] = b
                break
    return units


def _compute_radical(R: Ring) -> frozenset[int]:
    one = R.one
    return frozenset(a for a in range(R.size)
                     if all(R.sub(one, R.mul(r, a)) in R.units for r in range(R.size)))


def _field_of(spec) -> FieldGF:
    if isinstance(spec, S.GaloisField):
        return gf(spec.p ** spec.k, spec.modulus)
    fp = S.field_params(spec)
    if fp is None:
        raise S.SpecError(f"{spec} is not a field")
    return gf(fp[0] ** fp[1])


def materialize(spec, ceiling: int = DEFAULT_CEILING) -> Ring:
    """Build and validate the ring described by ``spec`` (a RingSpec or DSL text)."""
    if isinstance(spec, str):
        spec = S.parse_ring_spec(spec)
    S.validate(spec)
    if isinstance(spec, S.ModInt):
        return _mod_int(spec, ceiling)
    if isinstance(spec, S.GaloisField):
        return _galois(spec, ceiling)
    if isinstance(spec, S.MatrixRing):
        return _matrix_ring(spec, ceiling)
    if isinstance(spec, S.UpperTriangular2):
        return _ut2(spec, ceiling)
    if isinstance(spec, S.DualNumbers):
        return _dual(spec, ceiling)
    if isinstance(spec, S.EpsDelta):
        return _eps_delta(spec, ceiling)
    if isinstance(spec, S.Product):
        return _product(spec, ceiling)
    if isinstance(spec, S.Quotient):
        base = materialize(spec.base, ceiling)
        I = ideal_closure(base, [base.element(g) for g in spec.gens])
        Q, _ = quotient_ring(base, I)
        Q.spec = spec
        return Q
    if isinstance(spec, S.Table):
        return _table(spec, ceiling)
    raise S.SpecError(f"unknown ring spec {spec!r}")


def _mod_int(spec: S.ModInt, ceiling) -> Ring:
    n = spec.n
    field_obj = gf(n) if S.field_params(spec) else None
    kfn = None
    if field_obj is not None:
        def kfn(index):
            return KStructure(field_obj, tuple(index[x] for x in range(n)), (index[1],))
    return _build(spec, list(range(n)), 0, 1 % n, lambda a, b: (a + b) % n,
                  lambda a, b: (a * b) % n, str, ceiling, kfn, field_obj)


def _galois(spec: S.GaloisField, ceiling) -> Ring:
    F = _field_of(spec)
    if F.q > ceiling:
        raise CeilingExceeded(f"{spec} has {F.q} elements, above the ceiling {ceiling}")
    ring = Ring(spec=spec, labels=tuple(F.label(x) for x in range(F.q)), field=F,
                add_table=F.add, mul_table=F.mul, neg_table=list(F.neg),
                structure=tuple(range(F.q)))
    ring.kstruct = KStructure(F, tuple(range(F.q)), (1,))
    _finish(ring, full=False)
    return ring


def _matrix_ring(spec: S.MatrixRing, ceiling) -> Ring:
    base = materialize(spec.base, ceiling)
    k, n = spec.k, base.size
    if n ** (k * k) > ceiling:
        raise CeilingExceeded(f"{spec} has {n ** (k * k)} elements, above the ceiling {ceiling}")
    elems = list(itertools.product(range(n), repeat=k * k))

    def add(x, y):
        return tuple(base.add(a, b) for a, b in zip(x, y))

    def mul(x, y):
        out = []
        for i in range(k):
            for j in range(k):
                s = 0
                for t in range(k):
                    s = base.add(s, base.mul(x[i * k + t], y[t * k + j]))
                out.append(s)
        return tuple(out)

    zero = tuple([0] * (k * k))
    one = tuple(base.one if i == j else 0 for i in range(k) for j in range(k))

    def label(x):
        rows = [",".join(base.label(x[i * k + j]) for j in range(k)) for i in range(k)]
        return "[" + ";".join(rows) + "]"

    kfn = None
    if base.kstruct is not None and base.kstruct.basis == (base.one,):
        K = base.kstruct

        def kfn(index):
            embed = tuple(index[tuple(K.embed[c] if i == j else 0 for i in range(k) for j in range(k))]
                          for c in range(K.field.q))
            basis = tuple(index[tuple(base.one if t == s else 0 for t in range(k * k))]
                          for s in range(k * k))
            return KStructure(K.field, embed, basis)

    return _build(spec, elems, zero, one, add, mul, label, ceiling, kfn)


def _ut2(spec: S.UpperTriangular2, ceiling) -> Ring:
    F = _field_of(spec.field)
    A, M = F.add, F.mul
    elems = list(itertools.product(range(F.q), repeat=3))  # [[a,b],[0,c]]

    def mul(x, y):
        a, b, c = x
        d, e, f = y
        return (M[a][d], A[M[a][e]][M[b][f]], M[c][f])

    def label(x):
        return "[{},{};0,{}]".format(*(F.label(v) for v in x))

    def kfn(index):
        return KStructure(F, tuple(index[(k, 0, k)] for k in range(F.q)),
                          (index[(1, 0, 0)], index[(0, 1, 0)], index[(0, 0, 1)]))

    return _build(spec, elems, (0, 0, 0), (1, 0, 1),
                  lambda x, y: tuple(A[u][v] for u, v in zip(x, y)), mul, label, ceiling, kfn)


def _dual(spec: S.DualNumbers, ceiling) -> Ring:
    """Twisted dual numbers a + b e with e^2 = 0 and e k = k^alpha e."""
    F = _field_of(spec.field)
    A, M = F.add, F.mul
    alpha = F.frobenius(spec.twist)
    elems = [(a, b) for b in range(F.q) for a in range(F.q)]

    def mul(x, y):
        a, b = x
        c, d = y
        # (a + b e)(c + d e) = ac + (ad + b c^alpha) e
        return (M[a][c], A[M[a][d]][M[b][alpha[c]]])

    def label(x):
        a, b = x
        if b == 0:
            return F.label(a)
        eb = "e" if b == 1 else f"({F.label(b)})e" if "+" in F.label(b) else f"{F.label(b)}e"
        return eb if a == 0 else f"{F.label(a)}+{eb}"

    def kfn(index):
        return KStructure(F, tuple(index[(k, 0)] for k in range(F.q)),
                          (index[(1, 0)], index[(0, 1)]))

    return _build(spec, elems, (0, 0), (1, 0),
                  lambda x, y: (A[x[0]][y[0]], A[x[1]][y[1]]), mul, label, ceiling, kfn)


def _eps_delta(spec: S.EpsDelta, ceiling) -> Ring:
    """K[e,d] with e, d central and e^2 = d^2 = ed = 0."""
    F = _field_of(spec.field)
    A, M = F.add, F.mul
    elems = [(a, b, c) for c in range(F.q) for b in range(F.q) for a in range(F.q)]

    def mul(x, y):
        a, b, c = x
        d, e, f = y
        return (M[a][d], A[M[a][e]][M[b][d]], A[M[a][f]][M[c][d]])

    def label(x):
        parts = []
        for coef, sym in zip(x, ("", "e", "d")):
            if coef == 0:
                continue
            cl = F.label(coef)
            if not sym:
                parts.append(cl)
            else:
                parts.append(sym if coef == 1 else (f"({cl}){sym}" if "+" in cl else f"{cl}{sym}"))
        return "+".join(parts) if parts else "0"

    def kfn(index):
        return KStructure(F, tuple(index[(k, 0, 0)] for k in range(F.q)),
                          (index[(1, 0, 0)], index[(0, 1, 0)], index[(0, 0, 1)]))

    return _build(spec, elems, (0, 0, 0), (1, 0, 0),
                  lambda x, y: tuple(A[u][v] for u, v in zip(x, y)), mul, label, ceiling, kfn)


def _product(spec: S.Product, ceiling) -> Ring:
    parts = [materialize(f, ceiling) for f in spec.factors]
    total = 1
    for p in parts:
        total *= p.size
    if total > ceiling:
        raise CeilingExceeded(f"{spec} has {total} elements, above the ceiling {ceiling}")
    elems = list(itertools.product(*(range(p.size) for p in parts)))

    def add(x, y):
        return tuple(p.add(a, b) for p, a, b in zip(parts, x, y))

    def mul(x, y):
        return tuple(p.mul(a, b) for p, a, b in zip(parts, x, y))

    def label(x):
        return "(" + ",".join(p.label(a) for p, a in zip(parts, x)) + ")"

    kfn = None
    fields = [p.kstruct.field if p.kstruct and p.kstruct.basis == (p.one,) else None for p in parts]
    if all(f is not None for f in fields) and len(set(fields)) == 1:
        F = fields[0]

        def kfn(index):
            embed = tuple(index[tuple(p.kstruct.embed[k] for p in parts)] for k in range(F.q))
            basis = tuple(index[tuple(p.one if i == j else 0 for j, p in enumerate(parts))]
                          for i in range(len(parts)))
            return KStructure(F, embed, basis)

    zero = tuple(0 for _ in parts)
    one = tuple(p.one for p in parts)
    return _build(spec, elems, zero, one, add, mul, label, ceiling, kfn)


def _table(spec: S.Table, ceiling) -> Ring:
    n = len(spec.add)
    if n > ceiling:
        raise CeilingExceeded(f"table ring has {n} elements, above the ceiling {ceiling}")
    for row in spec.add + spec.mul:
        if any(not 0 <= v < n for v in row):
            raise S.SpecError("table entry out of range")
    one = spec.one if n > 1 else spec.zero
    if n > 1 and one == spec.zero:
        raise S.SpecError("one index equals zero index in a ring with more than one element")
    return _build(spec, list(range(n)), spec.zero, one, lambda a, b: spec.add[a][b],
                  lambda a, b: spec.mul[a][b], str, ceiling, check_full=True)


# -- analysis ----------------------------------------------------------------

def units_and_inverses(R: Ring) -> dict[int, int]:
    return dict(R.units)


def jacobson_radical(R: Ring) -> Ideal:
    """{a : 1 - r a is a unit for all r}, checked to be a two-sided ideal."""
    I = Ideal(R, R.radical)
    check_ideal(I)
    return I


def left_radical_characterization(R: Ring) -> frozenset[int]:
    """{a : 1 - a r is a unit for all r} (the mirror-image characterization)."""
    one = R.one
    return frozenset(a for a in range(R.size)
                     if all(R.sub(one, R.mul(a, r)) in R.units for r in range(R.size)))


def check_ideal(I: Ideal) -> None:
    R, mem = I.ring, I.members
    if 0 not in mem:
        raise RingError("ideal does not contain 0")
    for a in mem:
        if R.neg(a) not in mem:
            raise RingError(f"ideal not closed under negation at {R.label(a)}")
        for b in mem:
            if R.add(a, b) not in mem:
                raise RingError(f"ideal not closed under addition at {R.label(a)}, {R.label(b)}")
        for r in range(R.size):
            if R.mul(r, a) not in mem or R.mul(a, r) not in mem:
                raise RingError(f"ideal not closed under multiplication at {R.label(a)}, {R.label(r)}")


def ideal_closure(R: Ring, generators) -> Ideal:
    """Smallest two-sided ideal containing ``generators``."""
    members = {0}
    todo = [int(g) for g in generators]
    while todo:
        a = todo.pop()
        if a in members:
            continue
        new = {a, R.neg(a)}
        new.update(R.mul(r, a) for r in range(R.size))
        new.update(R.mul(a, r) for r in range(R.size))
        new.update(R.add(a, b) for b in members)
        members.add(a)
        todo.extend(x for x in new if x not in members)
    I = Ideal(R, frozenset(members))
    check_ideal(I)
    return I


def quotient_ring(R: Ring, I: Ideal) -> tuple[Ring, RingHom]:
    """R/I as a table ring over minimal coset representatives, with the canonical map."""
    check_ideal(I)
    rep = {}
    for a in range(R.size):
        if a in rep:
            continue
        coset = [R.add(a, i) for i in I.members]
        m = min(coset)
        for c in coset:
            rep[c] = m
    reps = sorted(set(rep.values()))
    pos = {r: i for i, r in enumerate(reps)}
    n = len(reps)
    add_t = [[pos[rep[R.add(x, y)]] for y in reps] for x in reps]
    mul_t = [[pos[rep[R.mul(x, y)]] for y in reps] for x in reps]
    labels = tuple(R.label(r) if len(I) == 1 else f"{R.label(r)}+I" for r in reps)
    spec = S.Quotient(R.spec, tuple(str(g) for g in sorted(I.members)))
    Q = Ring(spec=spec, labels=labels, add_table=add_t, mul_table=mul_t)
    Q.neg_table = _negations(Q)
    table = tuple(pos[rep[a]] for a in range(R.size))
    if R.kstruct is not None and Q.size > 1:
        Q.kstruct = _quotient_kstruct(R.kstruct, table, Q)
    _finish(Q, full=n <= FULL_AXIOM_SCAN)
    pi = validate_hom(R, Q, table)
    return Q, pi


def _quotient_kstruct(K: KStructure, table, Q: Ring) -> KStructure | None:
    embed = tuple(table[e] for e in K.embed)
    F = K.field
    basis: list[int] = []
    spanned = {0}
    for b in (table[x] for x in K.basis):
        if b in spanned:
            continue
        basis.append(b)
        spanned = {Q.add(s, Q.mul(embed[k], b)) for s in spanned for k in range(F.q)}
    if len(spanned) != Q.size:
        return None
    return KStructure(F, embed, tuple(basis))


def validate_hom(source: Ring, target: Ring, table) -> RingHom:
    """Check additivity, multiplicativity and 1 -> 1; raise HomError otherwise."""
    table = tuple(int(t) for t in table)
    if len(table) != source.size or any(not 0 <= t < target.size for t in table):
        raise HomError("map is not a total function into the target")
    if table[source.one] != target.one:
        raise HomError(f"1 maps to {target.label(table[source.one])}, not 1", ("unit", source.one))
    for a in range(source.size):
        for b in range(source.size):
            if table[source.add(a, b)] != target.add(table[a], table[b]):
                raise HomError(f"not additive at ({source.label(a)}, {source.label(b)})", ("add", a, b))
            if table[source.mul(a, b)] != target.mul(table[a], table[b]):
                raise HomError(f"not multiplicative at ({source.label(a)}, {source.label(b)})",
                               ("mul", a, b))
    return RingHom(source, target, table)


def identity_hom(R: Ring) -> RingHom:
    return RingHom(R, R, tuple(range(R.size)))


def reduction_hom(source: Ring, target: Ring) -> RingHom:
    """The hom sending the integer multiple k*1 to k*1, for cyclic-additive sources
    such as Z/n; validated afterwards."""
    table = [0] * source.size
    x, y = 0, 0
    for _ in range(source.size):
        x, y = source.add(x, source.one), target.add(y, target.one)
        table[x] = y
    return validate_hom(source, target, table)


def is_dedekind_finite(R: Ring) -> tuple[bool, tuple[int, int] | None]:
    one = R.one
    for a in range(R.size):
        for b in range(R.size):
            if R.mul(a, b) == one and R.mul(b, a) != one:
                return False, (a, b)
    return True, None


def right_invertible(R: Ring) -> frozenset[int]:
    one = R.one
    return frozenset(a for a in range(R.size) if any(R.mul(a, x) == one for x in range(R.size)))


def unimodular_matrix(R: Ring) -> np.ndarray:
    """Boolean n x n array: entry [a, b] says ax + by = 1 is solvable."""
    n = R.size
    A, M = R.np_add, R.np_mul
    # member[b, z] : z lies in the right ideal bR
    member = np.zeros((n, n), dtype=bool)
    member[np.arange(n)[:, None], M] = True
    out = np.zeros((n, n), dtype=bool)
    neg = R.np_neg
    for a in range(n):
        targets = np.unique(A[R.one, neg[M[a]]])  # 1 - a x over all x
        out[a] = member[:, targets].any(axis=1)
    return out


def has_stable_rank_2(R: Ring) -> tuple[bool, tuple[int, int] | None]:
    n = R.size
    if n == 1:
        return True, None
    A, M = R.np_add, R.np_mul
    rinv = np.zeros(n, dtype=bool)
    rinv[list(right_invertible(R))] = True
    U = unimodular_matrix(R)
    for a, b in zip(*np.nonzero(U)):
        if not rinv[A[a, M[b]]].any():
            return False, (int(a), int(b))
    return True, None


def non_units_form_ideal(R: Ring) -> bool:
    nonunits = [a for a in range(R.size) if a not in R.units]
    if not nonunits:
        return R.size == 1
    try:
        check_ideal(Ideal(R, frozenset(nonunits)))
    except RingError:
        return False
    return True


def ring_summary(R: Ring) -> dict:
    out = {"spec": R.name, "size": R.size, "characteristic": R.characteristic,
           "elements": list(R.labels)}
    if R.field is not None:
        out["field"] = R.field.to_dict()
    return out
