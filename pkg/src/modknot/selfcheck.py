"""Invariant suites run by ``modknot selfcheck``."""

from __future__ import annotations

import random
from typing import Iterator

from . import braid3, charvar, linking, qdeform, qmbasis
from .laurent import Laurent
from .modgroup import MatZ, cosign_len, reduce_to_cycle, word_to_matrix
from .words import coprime, enumerate_classes


def _pairs(max_len: int):
    cl = enumerate_classes(max_len, "hyperbolic", primitive=True)
    return [(a, b) for a in cl for b in cl if a != b and coprime(a, b)]


def _fan(fn, items, threads):
    from .cli import fan_out

    return fan_out(fn, items, threads)


def suite_linking(max_len: int, threads: int) -> dict:
    def check(pair):
        a, b = pair
        e = set(linking.enumerate_crossings(a, b))
        if e != set(linking.oracle_crossings(a, b)):
            return False
        if any(cosign_len(*linking.crossing_matrices(a, b, c)) != c.cosign for c in e):
            return False
        return linking.lk_shift(a, b) == linking.lk_slp(a, b) == linking.lk_oracle(a, b)

    pairs = _pairs(max_len)
    bad = [f"{a}/{b}" for (a, b), ok in zip(pairs, _fan(check, pairs, threads)) if not ok]
    return {"suite": "linking", "ok": not bad, "checked": len(pairs), "failures": bad[:10]}


def suite_reduction(max_len: int, seed: int) -> dict:
    rng = random.Random(seed)
    bad, n = [], 0
    for a in enumerate_classes(max_len, "all"):
        m = word_to_matrix(a)
        for _ in range(3):
            g = MatZ(1, rng.randint(-5, 5), 0, 1) @ MatZ(1, 0, rng.randint(-5, 5), 1)
            n += 1
            if reduce_to_cycle(m.conj(g)) != a:
                bad.append(a.canonical)
    return {"suite": "reduction", "ok": not bad, "checked": n, "failures": bad[:10]}


def suite_fricke(max_len: int) -> dict:
    bad, n = [], 0
    for a in enumerate_classes(max_len, "all"):
        tr = qdeform.fricke_trace(a)
        n += 1
        if not (tr.is_reciprocal() and tr.degree() == len(a) and sum(tr.coeffs.values()) == word_to_matrix(a).trace):
            bad.append(a.canonical)
        if a.is_hyperbolic and not braid3.fricke_alexander_check(a):
            bad.append(f"alexander:{a}")
    return {"suite": "fricke", "ok": not bad, "checked": n, "failures": bad[:10]}


def suite_link_q(max_len: int, tol: float, seed: int) -> dict:
    rng = random.Random(seed)
    bad, n = [], 0
    for a, b in _pairs(min(max_len, 5)):
        bt = b.transpose()
        if not coprime(a, bt):
            continue
        f, g = charvar.link_q_symbolic(a, b), charvar.link_q_symbolic(a, bt)
        n += 1
        if f.numerator + g.numerator != Laurent():
            bad.append(f"{a}/{b}")
            continue
        for _ in range(3):
            q = complex(rng.uniform(-3, 3), rng.uniform(-3, 3))
            total = charvar.link_q(a, b, q) + charvar.link_q(a, bt, q)
            if abs(total - f.crossing_count / 2) > tol or abs(f(q) - charvar.link_q(a, b, q)) > tol * max(1, abs(f(q))):
                bad.append(f"{a}/{b}@{q}")
    return {"suite": "link_q", "ok": not bad, "checked": n, "failures": bad[:10]}


def suite_quasimorphism(max_len: int) -> dict:
    bad, n = [], 0
    cl = enumerate_classes(min(max_len, 5), "hyperbolic", primitive=True)
    for a in cl:
        for b in cl:
            n += 1
            v = linking.cos_a(a, b)
            if any(linking.cos_a(a, b.power(k)) != k * v for k in (2, 3)):
                bad.append(f"cos:{a}/{b}")
            if qmbasis.mas(a.canonical, b) != -qmbasis.mas(a.canonical, b.transpose()):
                bad.append(f"mas:{a}/{b}")
        if qmbasis.mas("R", a) != a.rad:
            bad.append(f"rad:{a}")
    return {"suite": "quasimorphism", "ok": not bad, "checked": n, "failures": bad[:10]}


def suite_basis(max_len: int) -> dict:
    """The mas basis must be invertible with exact round trips; the Cos determinants are reported."""
    bad, cos_dets = [], {}
    for m in range(1, min(max_len, 6) + 1):
        m_mas, m_cos = qmbasis.basis_matrices(m)
        if qmbasis.det_exact(m_mas) == 0:
            bad.append(f"mas:{m}")
            continue
        cos_dets[m] = qmbasis.det_exact(m_cos)
        f = qmbasis.FunctionalVec.of(lambda x: qmbasis.mas("R", x), m)
        if qmbasis.recombine(qmbasis.decompose(f, "mas"), "mas") != f:
            bad.append(f"roundtrip:{m}")
    return {"suite": "basis", "ok": not bad, "checked": len(cos_dets), "failures": bad, "cos_determinants": cos_dets}


def run_suites(max_len: int, tol: float, seed: int, threads: int = 1) -> Iterator[dict]:
    yield suite_reduction(max_len, seed)
    yield suite_linking(max_len, threads)
    yield suite_fricke(max_len)
    yield suite_link_q(max_len, tol, seed)
    yield suite_quasimorphism(max_len)
    yield suite_basis(max_len)
