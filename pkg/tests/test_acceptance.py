"""One test per acceptance criterion; each records a PASS/FAIL line that is
printed in the terminal summary."""

import itertools
import time
from math import gcd

from ringline import bimodule as BM
from ringline import geometry as G
from ringline import linalg as L
from ringline.cli import main
from ringline.field import gf
from ringline.projline import (Mat2, gamma_matrix, ge2_analysis, induced_map, is_admissible,
                               is_unimodular, mat2_mul, mat2_identity, module_set, projective_line,
                               check_distance_reflection, check_surjectivity)
from ringline.ring import (identity_hom, is_dedekind_finite, jacobson_radical, materialize,
                           reduction_hom, right_invertible, validate_hom)
from ringline.unbounded import poly_example, z_to_q_demo


def _brute_point_count(n):
    subs = set()
    for a, b in itertools.product(range(n), repeat=2):
        if gcd(gcd(a, b), n) == 1:
            subs.add(frozenset(((r * a) % n, (r * b) % n) for r in range(n)))
    return len(subs)


def test_criterion_1_projective_line_counts(acceptance_line):
    t = time.perf_counter()
    fields = {q: len(projective_line(materialize(f"GF({q})"))) for q in (2, 3, 4, 5)}
    z4, z6 = (len(projective_line(materialize(f"Z/{n}"))) for n in (4, 6))
    oracle = (_brute_point_count(4), _brute_point_count(6))
    dt = time.perf_counter() - t
    ok = all(v == q + 1 for q, v in fields.items()) and (z4, z6) == (6, 12) == oracle and dt < 1
    acceptance_line("1 projective-line counts", ok, f"|P(Z/4)|={z4}, |P(Z/6)|={z6}, {dt:.2f}s")
    assert ok


BATTERY = [f"Z/{n}" for n in range(2, 10)] + ["GF(4)", "GF(8)", "Dual(GF(2))", "Dual(GF(3))", "UT2(GF(2))",
                                               "EpsDelta(GF(2))", "Z/2 x Z/3", "M2(GF(2))"]


def _battery_violations(R):
    n = R.size
    bad = []
    left_inv = {s for s in range(n) if any(R.mul(l, s) == R.one for l in range(n))}
    right_inv = right_invertible(R)
    adm = {(a, b) for a, b in itertools.product(range(n), repeat=2) if is_admissible(R, a, b, mode="oracle")}
    uni = {(a, b) for a, b in itertools.product(range(n), repeat=2) if is_unimodular(R, a, b)}
    if adm != uni:
        bad.append("unimodular != admissible")
    msets = {p: module_set(R, a, b) for (a, b) in adm for p in [(a, b)]}
    for (a, b) in adm:
        for s in range(n):
            a2, b2 = R.mul(s, a), R.mul(s, b)
            if (msets[(a, b)] == module_set(R, a2, b2)) != (s in left_inv):
                bad.append(("same point iff left unit", a, b, s))
            if ((a2, b2) in adm) != (s in right_inv):
                bad.append(("admissible iff right unit", a, b, s))
    if not is_dedekind_finite(R)[0]:
        bad.append("dedekind finite")
    points = set(msets.values())
    for a, b in itertools.product(range(n), repeat=2):
        if module_set(R, a, b) in points and (a, b) not in adm:
            bad.append(("generator not admissible", a, b))
    for P, Q in itertools.permutations(points, 2):
        if P < Q:
            bad.append("strict point containment")
    for s, r in itertools.product(range(n), repeat=2):
        if R.mul(s, r) == R.one:
            g = gamma_matrix(R, s, r)
            ginv = Mat2(r, R.sub(R.one, R.mul(r, s)), 0, s)
            I = mat2_identity(R)
            if mat2_mul(R, g, ginv) != I or mat2_mul(R, ginv, g) != I:
                bad.append(("gamma inverse", s, r))
    ge = ge2_analysis(R)
    if not ge["e2_orbit_equals_pline"]:
        bad.append("orbit")
    if not ge["ge2_ring"]:
        bad.append("ge2")
    return bad


def test_criterion_2_point_battery(acceptance_line):
    t = time.perf_counter()
    violations = {text: _battery_violations(materialize(text)) for text in BATTERY}
    dt = time.perf_counter() - t
    total = sum(len(v) for v in violations.values())
    ok = total == 0 and dt < 60
    acceptance_line("2 point battery", ok, f"{len(BATTERY)} rings, {total} violations, {dt:.1f}s")
    assert ok, {k: v[:3] for k, v in violations.items() if v}


def test_criterion_3_induced_maps(acceptance_line):
    t = time.perf_counter()
    Z4, Z2, Z6, Z3 = (materialize(x) for x in ("Z/4", "Z/2", "Z/6", "Z/3"))
    D, F2 = materialize("Dual(GF(2))"), materialize("GF(2)")
    homs = [reduction_hom(Z4, Z2), reduction_hom(Z6, Z2), reduction_hom(Z6, Z3),
            validate_hom(D, F2, [0, 1, 0, 1])]
    homs += [identity_hom(materialize(x)) for x in ("Z/4", "Z/6", "Dual(GF(2))", "UT2(GF(2))")]
    failures, witnessed = [], {"1": False, "2": False, "3": False}
    for phi in homs:
        if not induced_map(phi).certificate.ok:
            failures.append(("induced map", phi.source.name, phi.target.name))
        if not check_distance_reflection(phi).ok:
            failures.append(("distance reflection", phi.source.name, phi.target.name))
        if phi.is_surjective():
            c = check_surjectivity(phi)
            if not c.ok:
                failures.append(("surjectivity conditions", phi.source.name, phi.target.name))
            d = c.details
            witnessed["1"] |= bool(d["condition1_S_is_GE2"])
            witnessed["2"] |= bool(d["condition2_kernel_in_radical"])
            witnessed["3"] |= bool(d["condition3_direct_factor"])
    dt = time.perf_counter() - t
    ok = not failures and all(witnessed.values()) and dt < 10
    acceptance_line("3 induced-map battery", ok, f"{len(homs)} homs, {len(failures)} violations, {dt:.1f}s")
    assert ok, (failures, witnessed)


def test_criterion_4_representations(acceptance_line):
    t = time.perf_counter()
    failures = []
    Z4 = materialize("Z/4")
    z4_b = BM.make_bimodule(Z4, gf(2), [[[int(Z4.label(a)) % 2]] for a in range(4)], "z4")
    E = materialize("EpsDelta(GF(2))")
    e_quot = BM.reduction_bimodule(E, sorted(jacobson_radical(E).members))
    Z6 = materialize("Z/6")
    models = [BM.regular_bimodule(materialize(x)) for x in
              ("GF(4)", "Dual(GF(2))", "Dual(GF(3))", "UT2(GF(2))", "EpsDelta(GF(2))", "M2(GF(2))",
               "Dual(GF(4),frob^1)", "GF(2) x GF(2)", "GF(3) x GF(3)")]
    models += [z4_b, e_quot, BM.reduction_bimodule(Z6, [Z6.element("2")]),
               BM.reduction_bimodule(Z6, [Z6.element("3")])]
    for s in (G.ExampleSpec("Regulus51", 3), G.ExampleSpec("Triangular55", 2), G.ExampleSpec("TwistedConjugate52", 2)):
        models.append(G.build_bimodule(s))
    unit_values = set()
    for B in models:
        c = BM.verify_model(BM.build_model(B))
        if not c.ok:
            failures.append(("model", B.ring.name, c.failures()))
        unit_values.add(c.details["unit_condition"])
        sweep = BM.collineation_sweep(B)
        if not sweep.ok or sweep.details["words"] != 50:
            failures.append(("collineations", B.ring.name))
    for B in (z4_b, e_quot):
        *_, fc = BM.factor_representation(B)
        if not (fc.ok and fc.details["equal"]):
            failures.append(("factor image", B.ring.name))
    # sub, direct-sum and quotient witnesses
    witnesses = []
    for text in ("Dual(GF(2))", "EpsDelta(GF(2))", "UT2(GF(2))", "GF(2) x GF(2)"):
        B = BM.regular_bimodule(materialize(text))
        witnesses += [W for W in BM.invariant_subspaces(B) if 0 < W.space.dim < B.m]
    for W in witnesses:
        if not BM.sub_bimodule_model(W).ok:
            failures.append(("sub-bimodule", W.bimodule.ring.name, W.space.to_list()))
        if not BM.quotient_model(W).ok:
            failures.append(("quotient", W.bimodule.ring.name, W.space.to_list()))
    for B in (BM.regular_bimodule(materialize("GF(3) x GF(3)")), G.build_bimodule(G.ExampleSpec("Regulus51", 2))):
        if not BM.direct_sum_model(BM.sub_bimodule(B, [(1, 0)]), BM.sub_bimodule(B, [(0, 1)])).ok:
            failures.append(("direct sum", B.ring.name))
    dt = time.perf_counter() - t
    ok = not failures and unit_values == {True, False} and dt < 60
    acceptance_line("4 representation battery", ok,
                    f"{len(models)} models, {len(witnesses)} sub-bimodules, {len(failures)} violations, {dt:.1f}s")
    assert ok, (failures, unit_values)


def test_criterion_5_geometry(acceptance_line):
    t = time.perf_counter()
    parts = {}
    for q in (2, 3, 4):
        _, fam = G.build_example(G.ExampleSpec("Regulus51", q))
        parts[f"regulus q={q}"] = G.is_regulus(fam)
    for q in (2, 3):
        model, _ = G.build_example(G.ExampleSpec("TwistedConjugate52", q))
        parts[f"baer trace regular spread q={q}"] = G.spread_checks(G.baer_trace(model)) == (True, True)
    for q in (2, 3):
        s = G.ExampleSpec("ProductHyperbolic53", q)
        model, _ = G.build_example(s)
        parts[f"hyperbolic congruence q={q}"] = G.congruence_equalities(s, model).ok
    for q, aux in ((2, 0), (4, 1)):
        s = G.ExampleSpec("DualParabolic54", q, aux)
        model, _ = G.build_example(s)
        _, bc = G.beta_map(s, model)
        parts[f"parabolic congruence and beta q={q} twist={aux}"] = G.congruence_equalities(s, model).ok and bc.ok
    s = G.ExampleSpec("Triangular55", 2)
    model, fam = G.build_example(s)
    c = G.congruence_equalities(s, model)
    parts["triangular complex equality q=2"] = c.checks["set_equality"]
    parts["count formula 3(q^2+q)+1 = enumeration"] = c.details["count_oracle_matches_enumeration"]
    parts[f"triangular model count {len(fam)} = 19"] = len(fam) == 19
    s = G.ExampleSpec("EpsDelta56", 2)
    model, _ = G.build_example(s)
    _, bc = G.beta_map(s, model)
    parts["plane regulus, beta and induced regulus q=2"] = (G.congruence_equalities(s, model).ok and bc.ok
                                                      and G.induced_regulus_check(s, model).ok)
    dt = time.perf_counter() - t
    failed = [k for k, v in parts.items() if not v]
    ok = not failed and dt < 120
    acceptance_line("5 geometry equalities", ok,
                    f"{len(parts) - len(failed)}/{len(parts)} parts, {dt:.1f}s" + (f"; failed: {failed}" if failed else ""))
    assert ok, failed


def test_criterion_6_infinite_demos(acceptance_line):
    t = time.perf_counter()
    certs = [poly_example(p, samples=100) for p in (2, 3, 5)]
    zq = z_to_q_demo(10)
    pair = all(zq.checks[k] for k in ("pair_nondistant_in_Z", "pair_images_distant_in_Q"))
    dt = time.perf_counter() - t
    ok = all(c.ok for c in certs) and zq.ok and pair and dt < 5
    acceptance_line("6 infinite demos", ok, f"{dt:.2f}s")
    assert ok


def test_criterion_7_determinism(acceptance_line, tmp_path):
    commands = [["ring", "M2(GF(2))"], ["pline", "Z/6"], ["hom", "Z/6", "Z/3"], ["rep", "UT2(GF(2))"],
                ["geometry", "5.4", "--q", "4", "--aux", "1"], ["demo", "poly", "--p", "5"], ["demo", "zq"], ["demo", "kernels"],
                ["pline", "Dual(GF(2))", "--dot", "{dot}"]]
    commands += [["geometry", e, "--q", "2"] for e in ("5.1", "5.2", "5.3", "5.4", "5.5", "5.6")]
    same = []
    for i, argv in enumerate(commands):
        outs = []
        for run in range(2):
            path = tmp_path / f"{i}_{run}.json"
            dot = tmp_path / f"{i}.dot"
            main([a.format(dot=dot) for a in argv] + ["--out", str(path)])
            outs.append(path.read_bytes() + (dot.read_bytes() if dot.exists() else b""))
        same.append(outs[0] == outs[1])
    ok = all(same)
    acceptance_line("7 determinism", ok, f"{sum(same)}/{len(same)} reports byte-identical")
    assert ok
