"""(K, R)-bimodules as matrix tables and the projective representation of P(R).

A bimodule is a unital ring homomorphism a -> rho_a from R into the m x m
matrices over K acting on row vectors, u . a = u rho_a.  The point R(a, b)
goes to the row space of [rho_a | rho_b] in K^(2m); coordinates of U x U
are ordered u-block then v-block.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import cached_property

from . import linalg as L
from .certificate import Certificate
from .field import FieldGF
from .linalg import Matrix, Subspace
from .projline import (Mat2, Point, apply_gl2, distant, distant_graph, induced_map,
                       projective_line, sample_matrices)
from .ring import Ideal, Ring, RingError, RingHom, quotient_ring

COLLINEATION_WORDS = 50
COLLINEATION_SEED = 4242


class BimoduleError(ValueError):
    def __init__(self, msg, witness=None):
        self.witness = witness
        super().__init__(msg)


@dataclass(eq=False)
class Bimodule:
    ring: Ring
    field: FieldGF
    m: int
    rho: tuple[Matrix, ...]
    name: str = ""

    def matrix(self, a: int) -> Matrix:
        return self.rho[a]

    @cached_property
    def annihilator(self) -> frozenset[int]:
        zero = L.zeros(self.m, self.m)
        return frozenset(a for a, M in enumerate(self.rho) if M == zero)

    @property
    def faithful(self) -> bool:
        return len(set(self.rho)) == len(self.rho)

    def describe(self) -> dict:
        return {"ring": self.ring.name, "field": self.field.descriptor(), "m": self.m,
                "name": self.name}


def make_bimodule(R: Ring, K: FieldGF, rho, name: str = "") -> Bimodule:
    """Validate a -> rho_a as a unital ring homomorphism into K^(m x m)."""
    rho = tuple(tuple(tuple(int(x) for x in row) for row in M) for M in rho)
    if len(rho) != R.size:
        raise BimoduleError(f"table has {len(rho)} entries for {R.size} ring elements")
    m = len(rho[0])
    for a, M in enumerate(rho):
        if len(M) != m or any(len(row) != m for row in M) or any(
                not 0 <= x < K.q for row in M for x in row):
            raise BimoduleError(f"rho[{R.label(a)}] is not an {m}x{m} matrix over {K.descriptor()}")
    if rho[R.one] != L.identity(m):
        raise BimoduleError("rho_1 is not the identity", ("unit", R.one))
    for a in range(R.size):
        for b in range(R.size):
            if rho[R.add(a, b)] != L.mat_add(K, rho[a], rho[b]):
                raise BimoduleError(f"not additive at ({R.label(a)}, {R.label(b)})", ("add", a, b))
            if rho[R.mul(a, b)] != L.mat_mul(K, rho[a], rho[b]):
                raise BimoduleError(f"not multiplicative at ({R.label(a)}, {R.label(b)})",
                                    ("mul", a, b))
    return Bimodule(R, K, m, rho, name)


def k_coordinates(R: Ring) -> dict[int, tuple[int, ...]]:
    """Coordinates of every ring element in the K-basis of R's K-structure."""
    K = R.kstruct
    if K is None:
        raise BimoduleError(f"{R.name} carries no distinguished subfield")
    F = K.field
    coords = {}
    for coeffs in itertools.product(range(F.q), repeat=len(K.basis)):
        x = 0
        for c, b in zip(coeffs, K.basis):
            x = R.add(x, R.mul(K.embed[c], b))
        if x in coords:
            raise BimoduleError(f"K-basis of {R.name} is linearly dependent")
        coords[x] = coeffs
    if len(coords) != R.size:
        raise BimoduleError(f"K-basis of {R.name} does not span")
    return coords


def regular_bimodule(R: Ring) -> Bimodule:
    """U = R as a left K-space, rho_a the matrix of x -> xa."""
    coords = k_coordinates(R)
    K = R.kstruct
    rho = [tuple(coords[R.mul(b, a)] for b in K.basis) for a in range(R.size)]
    return make_bimodule(R, K.field, rho, name="regular")


def pullback(B: Bimodule, phi: RingHom) -> Bimodule:
    """The bimodule over phi.source with rho_a = rho_{phi(a)}."""
    return make_bimodule(phi.source, B.field, [B.rho[phi(a)] for a in range(phi.source.size)],
                         name=f"{B.name} via {phi.target.name}")


def reduction_bimodule(R: Ring, generators) -> Bimodule:
    """R acting on the regular bimodule of R/I."""
    from .ring import ideal_closure

    I = ideal_closure(R, generators)
    Q, pi = quotient_ring(R, I)
    return pullback(regular_bimodule(Q), pi)


def annihilator_and_faithful(B: Bimodule) -> tuple[Ideal, bool]:
    ann = Ideal(B.ring, B.annihilator)
    faithful = B.faithful
    if faithful != (ann.members == {0}) and B.ring.size > 0:
        raise RingError("internal error: faithfulness disagrees with the annihilator")
    return ann, faithful


def psi_subspace(K: FieldGF, alpha: Matrix, beta: Matrix) -> Subspace:
    m = len(alpha)
    return L.span(K, list(L.hstack(alpha, beta)), 2 * m)


def phi_pair(B: Bimodule, a: int, b: int) -> Subspace:
    return psi_subspace(B.field, B.rho[a], B.rho[b])


def phi_point(B: Bimodule, p: Point) -> Subspace:
    return phi_pair(B, p.a, p.b)


def axis_spaces(B: Bimodule) -> tuple[Subspace, Subspace]:
    """U x {0} and {0} x U."""
    m, K = B.m, B.field
    I, Z = L.identity(m), L.zeros(m, m)
    return psi_subspace(K, I, Z), psi_subspace(K, Z, I)


@dataclass
class ProjectiveModel:
    bimodule: Bimodule
    points: list[Point]
    images: list[Subspace]
    annihilator: Ideal
    faithful: bool

    @property
    def ambient(self) -> int:
        return 2 * self.bimodule.m

    def image_of(self, p: Point) -> Subspace:
        return self.images[self.points.index(p)]

    def image_set(self) -> set[Subspace]:
        return set(self.images)

    def injective(self) -> bool:
        return len(set(self.images)) == len(self.images)

    def to_dict(self) -> dict:
        return {
            **self.bimodule.describe(),
            "faithful": self.faithful,
            "annihilator": [self.bimodule.ring.label(a) for a in sorted(self.annihilator.members)],
            "points": [{"pair": p.label(), "basis": W.to_list()}
                       for p, W in zip(self.points, self.images)],
        }


def build_model(B: Bimodule) -> ProjectiveModel:
    pts = projective_line(B.ring)
    ann, faithful = annihilator_and_faithful(B)
    return ProjectiveModel(B, pts, [phi_point(B, p) for p in pts], ann, faithful)


def nonunit_automorphisms(B: Bimodule) -> list[int]:
    """Ring elements a with rho_a invertible but a not a unit."""
    R, K = B.ring, B.field
    return [a for a in range(R.size)
            if a not in R.units and L.is_invertible_matrix(K, B.rho[a])]


def verify_model(model: ProjectiveModel) -> Certificate:
    """Distant implies complementary; images in G; injective iff faithful; and the
    non-distant/non-complementary biconditional against its ring-side condition."""
    B = model.bimodule
    cert = Certificate("projective_model")
    graph = distant_graph(B.ring)
    idx = {p: i for i, p in enumerate(graph.points)}
    imgs = {p: W for p, W in zip(model.points, model.images)}

    well_def = []
    for p in model.points:
        for pair in p.orbit:
            if phi_pair(B, *pair) != imgs[p]:
                well_def.append((p.label(), pair))
    cert.check("well_defined", not well_def, well_def)

    cert.check("images_in_G", all(L.in_G(W) for W in model.images),
               [p.label() for p, W in imgs.items() if not L.in_G(W)])

    dist_bad, nd_comp = [], []
    pts = model.points
    for i, p in enumerate(pts):
        for q in pts[i:]:
            comp = L.is_complementary(imgs[p], imgs[q])
            if graph.adjacency[idx[p], idx[q]]:
                if not comp:
                    dist_bad.append((p.label(), q.label()))
            elif comp:
                nd_comp.append((p.label(), q.label()))
    cert.check("distant_implies_complementary", not dist_bad, dist_bad)

    inj = model.injective()
    cert.check("injective_iff_faithful", inj == model.faithful,
               [] if inj == model.faithful else [{"injective": inj, "faithful": model.faithful}])

    bad_elems = nonunit_automorphisms(B)
    condition = not bad_elems
    geometric = not nd_comp
    cert.check("nondistant_noncomplementary_iff_condition", condition == geometric,
               [] if condition == geometric else [{"condition": condition, "geometric": geometric}])
    cert.details.update(points=len(pts), distinct_images=len(set(model.images)),
                        faithful=model.faithful, injective=inj,
                        unit_condition=condition,
                        unit_condition_witnesses=[B.ring.label(a) for a in bad_elems[:5]],
                        nondistant_complementary_pairs=len(nd_comp),
                        nondistant_complementary_examples=nd_comp[:3])
    return cert


def block_matrix(B: Bimodule, g: Mat2) -> Matrix:
    r = B.rho
    return L.block2(r[g.a], r[g.b], r[g.c], r[g.d])


def collineation_check(B: Bimodule, g: Mat2, model: ProjectiveModel | None = None) -> Certificate:
    """M(g) = [[rho_a, rho_b], [rho_c, rho_d]] is invertible and Phi(p g) = Phi(p) M(g)."""
    model = model or build_model(B)
    cert = Certificate("collineation")
    M = block_matrix(B, g)
    cert.check("block_invertible", L.is_invertible_matrix(B.field, M), [tuple(g)])
    bad = []
    for p, W in zip(model.points, model.images):
        if phi_point(B, apply_gl2(p, g)) != L.image(W, M):
            bad.append((p.label(), tuple(g)))
    cert.check("equivariant", not bad, bad)
    return cert


def collineation_sweep(B: Bimodule, words: int = COLLINEATION_WORDS,
                       seed: int = COLLINEATION_SEED) -> Certificate:
    """All E2 generators plus ``words`` seeded GE2 words."""
    model = build_model(B)
    cert = Certificate("collineation_sweep")
    mats = sample_matrices(B.ring, words, seed)
    for g in mats:
        sub = collineation_check(B, g, model)
        cert.merge(sub, "collineation")
    cert.details.update(matrices=len(mats), words=words, seed=seed)
    return cert


def factor_representation(B: Bimodule) -> tuple[Ring, RingHom, Bimodule, Certificate]:
    """R/J with J = ann(U), the faithful induced bimodule, and the image-set comparison."""
    R = B.ring
    J, _ = annihilator_and_faithful(B)
    Q, pi = quotient_ring(R, J)
    cert = Certificate("factor_representation")
    rho_f: list[Matrix | None] = [None] * Q.size
    clash = []
    for a in range(R.size):
        c = pi(a)
        if rho_f[c] is None:
            rho_f[c] = B.rho[a]
        elif rho_f[c] != B.rho[a]:
            clash.append(R.label(a))
    cert.check("well_defined", not clash, clash)
    Bf = make_bimodule(Q, B.field, rho_f, name=f"{B.name} factored")
    cert.check("faithful", Bf.faithful)
    img_R = build_model(B).image_set()
    img_Q = build_model(Bf).image_set()
    cert.check("contains", img_R <= img_Q)
    surj = induced_map(pi, words=0).is_surjective()
    equal = img_R == img_Q
    cert.check("equal_iff_pi_surjective", equal == surj, [] if equal == surj else [
        {"equal": equal, "surjective": surj}])
    cert.details.update(quotient_size=Q.size, image_set_R=len(img_R), image_set_Q=len(img_Q),
                        equal=equal, pi_bar_surjective=surj)
    return Q, pi, Bf, cert


# -- sub-bimodules -----------------------------------------------------------

@dataclass(frozen=True)
class SubBimoduleWitness:
    bimodule: Bimodule
    space: Subspace  # U' inside K^m

    @property
    def basis(self) -> Matrix:
        return self.space.basis


def sub_bimodule(B: Bimodule, rows) -> SubBimoduleWitness:
    W = L.span(B.field, [tuple(r) for r in rows], B.m)
    bad = [B.ring.label(a) for a in range(B.ring.size) if not W.contains(L.image(W, B.rho[a]))]
    if bad:
        raise BimoduleError(f"subspace is not invariant under rho_{bad[0]}", bad)
    return SubBimoduleWitness(B, W)


def invariant_subspaces(B: Bimodule, max_m: int = 3) -> list[SubBimoduleWitness]:
    """Exhaustive search for all sub-bimodules (helper for m <= max_m)."""
    if B.m > max_m:
        raise BimoduleError(f"exhaustive search limited to m <= {max_m}")
    out = []
    for r in range(B.m + 1):
        for W in L.enumerate_subspaces(B.field, B.m, r):
            if all(W.contains(L.image(W, M)) for M in set(B.rho)):
                out.append(SubBimoduleWitness(B, W))
    return out


def _coords_in(K: FieldGF, basis: Matrix, v) -> tuple[int, ...]:
    """Coordinates of v in the given (echelon) basis."""
    piv = [next(j for j, x in enumerate(r) if x) for r in basis]
    c = tuple(v[p] for p in piv)
    if L.combine(K, c, basis, len(v)) != tuple(v):
        raise BimoduleError("vector outside the subspace")
    return c


def restricted_bimodule(W: SubBimoduleWitness) -> Bimodule:
    B, K = W.bimodule, W.bimodule.field
    rho = []
    for M in B.rho:
        rho.append(tuple(_coords_in(K, W.basis, L.vec_mat(K, r, M)) for r in W.basis))
    return make_bimodule(B.ring, K, rho, name=f"{B.name} on U'")


def doubled_embedding(W: SubBimoduleWitness) -> Matrix:
    """(x, y) in K^(m') x K^(m') -> (x E, y E) in K^m x K^m, E the witness basis."""
    m = W.bimodule.m
    E = W.basis
    Z = L.zeros(len(E), m)
    return L.block2(E, Z, Z, E)


def doubled(W: SubBimoduleWitness) -> Subspace:
    """U' x U' inside K^(2m)."""
    B = W.bimodule
    return L.span(B.field, list(doubled_embedding(W)), 2 * B.m)


def sub_bimodule_model(W: SubBimoduleWitness) -> Certificate:
    B = W.bimodule
    cert = Certificate("sub_bimodule")
    UU = doubled(W)
    model = build_model(B)
    bad = []
    if W.space.dim == 0:
        sub_images = [L.zero_space(B.field, 2 * B.m) for _ in model.points]
        Bsub = None
    else:
        Bsub = restricted_bimodule(W)
        emb = doubled_embedding(W)
        sub_images = [L.image(phi_point(Bsub, p), emb) for p in model.points]
    for p, Wp, Wsub in zip(model.points, model.images, sub_images):
        if Wsub != L.intersection(Wp, UU):
            bad.append(p.label())
    cert.check("restriction_equals_intersection", not bad, bad)
    if Bsub is not None:
        ann, faithful = annihilator_and_faithful(Bsub)
        cert.details["annihilator"] = [B.ring.label(a) for a in sorted(ann.members)]
        cert.details["faithful"] = faithful
        if Bsub.ring.size > 1 and len(ann) < B.ring.size:
            Q, _, Bf, fcert = factor_representation(Bsub)
            cert.details["induced_faithful_ring_size"] = Q.size
            cert.merge(fcert, "induced_faithful")
    cert.details.update(dim=W.space.dim, distinct_traces=len(set(sub_images)))
    return cert


def direct_sum_model(W1: SubBimoduleWitness, W2: SubBimoduleWitness) -> Certificate:
    B = W1.bimodule
    if L.intersection(W1.space, W2.space).dim or L.sum_space(W1.space, W2.space).dim != B.m:
        raise BimoduleError("U' and U'' do not decompose U")
    cert = Certificate("direct_sum")
    model = build_model(B)
    parts = []
    for W in (W1, W2):
        if W.space.dim == 0:
            parts.append(None)
        else:
            parts.append((restricted_bimodule(W), doubled_embedding(W)))
    bad = []
    zero = L.zero_space(B.field, 2 * B.m)
    for p, Wp in zip(model.points, model.images):
        A1, A2 = (zero if part is None else L.image(phi_point(part[0], p), part[1])
                  for part in parts)
        if L.intersection(A1, A2).dim or L.sum_space(A1, A2) != Wp:
            bad.append(p.label())
    cert.check("image_is_direct_sum", not bad, bad)
    cert.merge(sub_bimodule_model(W1), "first")
    cert.merge(sub_bimodule_model(W2), "second")
    return cert


def quotient_bimodule(W: SubBimoduleWitness) -> tuple[Bimodule, L.QuotientMap]:
    B, K = W.bimodule, W.bimodule.field
    qm = L.quotient_space(K, B.m, W.space)
    k = len(qm.section)
    rho = []
    for M in B.rho:
        if k == 0:
            rho.append(())
        else:
            rho.append(L.mat_mul(K, L.mat_mul(K, qm.section, M), qm.coords))
    if k == 0:
        raise BimoduleError("quotient by the whole space is zero-dimensional")
    return make_bimodule(B.ring, K, rho, name=f"{B.name} on U/U'"), qm


def quotient_model(W: SubBimoduleWitness) -> Certificate:
    B, K = W.bimodule, W.bimodule.field
    cert = Certificate("quotient_bimodule")
    Bq, qm = quotient_bimodule(W)
    UU = doubled(W)
    model = build_model(B)
    k = Bq.m
    # the doubled section lifts K^(2k) into K^(2m)
    Z = L.zeros(k, B.m)
    lift_mat = L.block2(qm.section, Z, Z, qm.section)
    bad = []
    for p, Wp in zip(model.points, model.images):
        tilde = phi_point(Bq, p)
        lifted = L.sum_space(L.image(tilde, lift_mat), UU)
        if lifted != L.sum_space(Wp, UU):
            bad.append(p.label())
    cert.check("lift_equals_join", not bad, bad)
    ker = sorted(a for a in range(B.ring.size)
                 if all(W.space.contains_vector(r) for r in B.rho[a]))
    ker_direct = sorted(Bq.annihilator)
    cert.check("kernel_is_image_in_U'", ker == ker_direct)
    cert.details.update(kernel=[B.ring.label(a) for a in ker], quotient_dim=k)
    return cert
