import itertools
import random
from fractions import Fraction

import pytest

from projtorsor.exact_algebra import GF, OCTONION, RATIONAL, Mod, Octonion
from projtorsor.subspace_lattice import ProjectiveSpace
from projtorsor.ternary_geometry import (
    ChartConfig,
    CollinearError,
    DegenerateInputError,
    GeometryError,
    admissible_points,
    beta_of_ternary,
    binary_with_origin,
    chart_formula,
    collinear,
    difference,
    embed_chart,
    lift_chart,
    rebase,
    ternary_lattice,
    ternary_lattice_collinear,
    ternary_lattice_generic,
    ternary_via_chart,
    translate,
    u_ab,
)

S3 = ProjectiveSpace(3, 3)
H3 = S3.hyperplanes()


def gf(p, *vals):
    return tuple(Mod(v, p) for v in vals)


def test_chart_formula_gf7_example():
    cfg = ChartConfig.projection(GF(7))
    assert chart_formula(gf(7, 2, 1), gf(7, 3, 1), gf(7, 4, 5), cfg) == gf(7, 5, 5)


def test_chart_formula_translation_case():
    cfg = ChartConfig.translation(RATIONAL)
    x, y, z = (1, 2), (Fraction(1, 2), 0), (3, -1)
    assert chart_formula(x, y, z, cfg) == (Fraction(7, 2), 1)


def test_chart_formula_xxx_octonion(rng):
    cfg = ChartConfig.projection(OCTONION)
    x = cfg.random_point(rng)
    assert chart_formula(x, x, x, cfg) == x


def test_chart_formula_rejects_points_on_b():
    cfg = ChartConfig.projection(GF(7))
    with pytest.raises(DegenerateInputError):
        chart_formula(gf(7, 0, 1), gf(7, 3, 1), gf(7, 4, 5), cfg)


def test_beta_examples():
    cfg = ChartConfig.projection(GF(7))
    assert beta_of_ternary(gf(7, 2, 0), gf(7, 3, 0), gf(7, 4, 0), cfg) == Mod(5, 7)
    assert beta_of_ternary(gf(7, 1, 2), gf(7, 1, 3), gf(7, 1, 0), cfg) == Mod(1, 7)
    o = ChartConfig.projection(OCTONION)
    zero = Octonion()
    e = Octonion.unit
    got = beta_of_ternary((e(1), zero), (e(0), zero), (e(2), zero), o)
    assert got == -e(3)


def test_beta_homomorphism_octonion_sampled(rng):
    cfg = ChartConfig.projection(OCTONION)
    for _ in range(300):
        beta_of_ternary(*(cfg.random_point(rng) for _ in range(3)), cfg)


def test_octonion_forms_must_be_real():
    with pytest.raises(ValueError):
        ChartConfig(OCTONION, (Octonion.unit(1), 0))


def test_binary_with_origin_examples():
    cfg = ChartConfig(GF(5), (1, 0))
    z = gf(5, 1, 3)
    assert binary_with_origin(gf(5, 4, 2), z, cfg) == z
    assert binary_with_origin(gf(5, 0, 0), gf(5, 2, 2), cfg) == gf(5, 2, 2)
    add = ChartConfig.translation(RATIONAL)
    assert binary_with_origin((1, 2), (3, 4), add) == (4, 6)


@pytest.mark.parametrize("kind", [GF(7), RATIONAL], ids=str)
def test_rebase_identity(kind, rng):
    cfg = ChartConfig(kind, (2, 3))
    for _ in range(200):
        x, y, z = (cfg.random_point(rng) for _ in range(3))
        c2 = rebase(cfg, y)
        got = translate(binary_with_origin(difference(x, y), difference(z, y), c2), y)
        assert got == chart_formula(x, y, z, cfg)


def test_rebase_needs_commutative_scalars():
    with pytest.raises(TypeError):
        rebase(ChartConfig.projection(OCTONION), (Octonion.real(1), Octonion()))


def test_u_ab_sizes():
    a, b = H3[0], H3[1]
    assert len(u_ab(a, b)) == 6
    assert len(u_ab(a, a)) == 9


def test_embed_lift_roundtrip():
    for a, b in itertools.product(H3, H3):
        for x in S3.points():
            if x.rows and a.contains_vector(x.rows[0]):
                with pytest.raises(GeometryError):
                    embed_chart(x, a, b)
                continue
            assert lift_chart(embed_chart(x, a, b), a, b) == x


def test_t0_examples():
    a, b = H3[2], H3[7]
    U = u_ab(a, b)
    for x, y in itertools.product(U, U):
        assert ternary_lattice(x, x, y, a, b) == y
        assert ternary_lattice(y, x, x, a, b) == y


def test_swap_hyperplanes():
    a, b = H3[3], H3[9]
    U = set(u_ab(a, b))
    for x, y, z in itertools.permutations(U, 3):
        if not collinear(x, y, z):
            assert ternary_lattice_generic(x, y, z, b, a) == ternary_lattice_generic(z, y, x, a, b)


def test_parallelogram_when_a_equals_b():
    a = H3[5]
    for x, y, z in itertools.permutations(u_ab(a, a), 3):
        assert ternary_lattice(x, y, z, a, a) == ternary_via_chart(x, y, z, a, a)


def test_generic_rejects_collinear_and_bad_points():
    a, b = H3[0], H3[1]
    U = u_ab(a, b)
    x, y, z = next(t for t in itertools.permutations(U, 3) if collinear(*t))
    with pytest.raises(CollinearError):
        ternary_lattice_generic(x, y, z, a, b)
    on_a = next(p for p in S3.points() if a.contains_vector(p.rows[0]))
    with pytest.raises(DegenerateInputError):
        ternary_lattice(on_a, x, y, a, b)


def test_collinear_cases():
    a, b = H3[0], H3[4]
    U = u_ab(a, b)
    x = U[0]
    assert ternary_lattice_collinear(x, x, x, a, b) == x
    for y in U[1:]:
        assert ternary_lattice_collinear(x, x, y, a, b) == y


@pytest.mark.parametrize("p", [5, 7])
def test_collinear_matches_chart(p):
    S = ProjectiveSpace(p, 3)
    H = S.hyperplanes()
    rng = random.Random(p)
    hits = 0
    while hits < 60:
        a, b = rng.choice(H), rng.choice(H)
        U = u_ab(a, b)
        x, y = rng.sample(U, 2)
        line = [q for q in U if collinear(x, y, q)]
        z = rng.choice(line)
        want = ternary_via_chart(x, y, z, a, b)
        for u in admissible_points(x, y, a, b)[:5]:
            assert ternary_lattice_collinear(x, y, z, a, b, u=u) == want
        hits += 1


def test_u_contract():
    a, b = H3[0], H3[4]
    U = u_ab(a, b)
    x, y = U[0], U[1]
    on_line = next(q for q in S3.points() if q in (x, y) or collinear(x, y, q))
    with pytest.raises(GeometryError):
        ternary_lattice_collinear(x, y, x, a, b, u=on_line)


@pytest.mark.parametrize("p", [3, 5])
def test_lattice_matches_chart_sampled(p):
    H = ProjectiveSpace(p, 3).hyperplanes()
    rng = random.Random(7)
    for _ in range(400):
        a, b = rng.choice(H), rng.choice(H)
        U = u_ab(a, b)
        x, y, z = (rng.choice(U) for _ in range(3))
        assert ternary_lattice(x, y, z, a, b) == ternary_via_chart(x, y, z, a, b)
