import pytest

from charvar.complexes import kernel_homology_univariate, window_homology
from charvar.constructions import build_model, direct_product, free_group, surface_group
from charvar.errors import WindowTooLarge
from charvar.presentations import induced_on_free_part, validate_epimorphism


def univariate_model(p, images):
    model = build_model(p)
    nu = validate_epimorphism(p, images)
    return model.complex.specialize(induced_on_free_part(nu, model.abelian))


def bb_f2xf2():
    p = direct_product([free_group(2), free_group(2)])
    return univariate_model(p, [(1,)] * 4)


def test_window_growth_matches_free_rank():
    cx = bb_f2xf2()
    report = window_homology(cx, 6)
    seq = report.degree_sequence(2)
    assert all(x < y for x, y in zip(seq, seq[1:]))
    diffs = [y - x for x, y in zip(seq, seq[1:])]
    free_rank = kernel_homology_univariate(cx).degree(2).free_rank
    assert free_rank == 1
    assert diffs[-1] == free_rank
    assert diffs[-2] == free_rank


def test_window_stabilizes_for_finite_homology():
    p = surface_group(1)
    cx = univariate_model(p, [(1,), (0,)])
    report = window_homology(cx, 8)
    seq = report.degree_sequence(1)
    assert seq[-1] == seq[-2] == 1  # H_1(kernel) = Q, dimension one


def test_window_degree_zero_is_one():
    for cx in (bb_f2xf2(), univariate_model(surface_group(1), [(1,), (0,)])):
        report = window_homology(cx, 5)
        assert set(report.degree_sequence(0)) == {1}


def test_window_monotone_nondecreasing():
    suite = [bb_f2xf2(),
             univariate_model(surface_group(1), [(1,), (0,)]),
             univariate_model(surface_group(2), [(1,), (0,), (0,), (0,)]),
             univariate_model(free_group(2), [(1,), (1,)])]
    for cx in suite:
        report = window_homology(cx, 6)
        for j in range(cx.top + 1):
            seq = report.degree_sequence(j)
            assert all(x <= y for x, y in zip(seq, seq[1:]))


def test_window_unbounded_iff_positive_free_rank():
    suite = [bb_f2xf2(),
             univariate_model(surface_group(1), [(1,), (0,)]),
             univariate_model(surface_group(2), [(1,), (0,), (0,), (0,)]),
             univariate_model(free_group(2), [(1,), (1,)])]
    for cx in suite:
        kernel = kernel_homology_univariate(cx)
        report = window_homology(cx, 7)
        for j in range(cx.top + 1):
            seq = report.degree_sequence(j)
            growing = seq[-1] > seq[-3]
            assert growing == (kernel.degree(j).free_rank > 0)


def test_window_two_variables():
    # Z^2 cover of the genus-2 surface: windows over {0..k}^2
    p = surface_group(2)
    cx = univariate_model(p, [(1, 0), (0, 1), (0, 0), (0, 0)])
    assert cx.nvars == 2
    report = window_homology(cx, 4)
    assert set(report.degree_sequence(0)) == {1}
    seq = report.degree_sequence(1)
    assert all(x <= y for x, y in zip(seq, seq[1:]))
    assert seq[-1] > seq[0]  # H_1 of the Z^2-kernel is infinite-dimensional


def test_window_memory_ceiling():
    with pytest.raises(WindowTooLarge):
        window_homology(bb_f2xf2(), 6, ceiling=10)
