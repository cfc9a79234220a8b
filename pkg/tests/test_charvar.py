import cmath
import random

import numpy as np
import pytest

from modknot.charvar import (
    closed_under,
    cos_q,
    durand_kerner,
    geodesic_pair_geometry,
    laurent_roots,
    link_q,
    link_q_symbolic,
    plot_grid,
    ppm_bytes,
    render_grid,
    roots,
    sample_grid,
    wolpert_sum,
    write_roots_csv,
    write_samples_csv,
)
from modknot.laurent import Laurent
from modknot.linking import intersection_number, lk
from modknot.modgroup import S, word_to_matrix
from modknot.qdeform import cos_pair_q, disc_q
from modknot.words import transpose


def test_limits():
    assert abs(link_q("RL", "RLL", 32) - 1) < 0.01
    expect = 2 * lk("RLL", "RRL") - intersection_number("RLL", "RRL") / 2
    assert abs(cos_q("RLL", "RRL", 32) - expect) < 0.02


def test_sum_rule_and_reciprocity():
    rng = random.Random(5)
    for a, b in [("RLL", "RRLRL"), ("RRRL", "RRLLL"), ("RL", "RRL")]:
        half = intersection_number(a, b) / 2
        for _ in range(5):
            q = complex(rng.uniform(-2, 2), rng.uniform(-2, 2))
            assert abs(link_q(a, b, q) + link_q(a, transpose(b), q) - half) < 1e-9
            assert abs(cos_q(a, b, q) - (2 * link_q(a, b, q) - half)) < 1e-9
        for q in (1.5, 3.0):
            assert link_q(a, b, q) == pytest.approx(link_q(a, b, 1 / q), abs=1e-9)
            assert abs(link_q(a, b, q).imag) < 1e-12


def test_symbolic_matches_numeric():
    f = link_q_symbolic("RLL", "RRLRL")
    g = link_q_symbolic("RLL", transpose("RRLRL"))
    assert f.crossing_count == intersection_number("RLL", "RRLRL")
    assert f.numerator + g.numerator == Laurent()
    for q in (1.0, 2.5, 0.3 + 1.1j, -1.7 + 0.2j):
        assert abs(f(q) - link_q("RLL", "RRLRL", q)) < 1e-9 * max(1, abs(f(q)))


def test_wolpert_transposed_pair():
    assert abs(wolpert_sum("RRL", "RLL", 2.0)) < 1e-9


def test_geometry():
    a, b = word_to_matrix("RLL"), word_to_matrix("LRR")
    g = geodesic_pair_geometry(a, b)
    assert abs(np.cos(g["angle"]) - cos_pair_q("RLL", "LRR", 1).real) < 1e-9
    assert geodesic_pair_geometry(b, a)["angle"] == pytest.approx(-g["angle"])
    far = geodesic_pair_geometry(word_to_matrix("RL"), word_to_matrix("RLLL"))
    c = cos_pair_q("RL", "RLLL", 1).real
    assert abs(c) > 1 and np.cosh(far["ortho_length"]) == pytest.approx(abs(c))
    with pytest.raises(ValueError):
        geodesic_pair_geometry(a, a @ a)


def test_durand_kerner_simple():
    z = durand_kerner([1, 0, -1])
    assert sorted(z.real.round(9)) == [-1, 1]
    z = laurent_roots(disc_q("R"))
    assert sorted(np.round(z.real, 6)) == [-1, -1, 1, 1]
    with pytest.raises(ArithmeticError):
        durand_kerner([1, 0, 0, 0, 0, 0, 1e-300], max_iter=1)


def test_roots_symmetries(tmp_path):
    f = link_q_symbolic("RLL", "RRL")
    found = roots(f)
    for kind in ("zero", "pole"):
        z = np.array([r.value for r in found if r.kind == kind])
        assert closed_under(z, lambda p: 1 / p, 1e-6)
        assert closed_under(z, np.conj, 1e-6)
    write_roots_csv(tmp_path / "r.csv", found)
    assert (tmp_path / "r.csv").read_text().splitlines()[0] == "re,im,kind"


def test_roots_of_constant_function():
    with pytest.raises(ValueError):
        roots(link_q_symbolic("RL", "RLL"))


def test_raster(tmp_path):
    img = plot_grid("RL", "RLL", 1 + 0j, 0.5, 16)
    assert img.shape == (16, 16, 3)
    assert np.array_equal(img, plot_grid("RL", "RLL", 1 + 0j, 0.5, 16))
    vals = sample_grid(link_q_symbolic("RL", "RLL"), 1 + 0j, 0.5, 16)
    assert np.all(np.isfinite(vals))
    black = render_grid(np.zeros((16, 16), dtype=complex))
    assert not black.any()
    data = ppm_bytes(img)
    assert data.startswith(b"P6\n16 16\n255\n") and len(data) == 13 + 16 * 16 * 3
    with pytest.raises(ValueError):
        sample_grid(lambda q: q, 0j, 1.0, 8)
    write_samples_csv(tmp_path / "s.csv", [1 + 1j], [2 - 1j])
    assert (tmp_path / "s.csv").read_text().splitlines()[1] == "1.0,1.0,2.0,-1.0"


def test_poles_are_white():
    img = render_grid(np.array([[np.inf, 0]] * 16, dtype=complex).repeat(8, axis=1))
    assert (img[0, 0] == 255).all()
