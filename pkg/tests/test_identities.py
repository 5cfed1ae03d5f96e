import random
from fractions import Fraction

import pytest

from multiharm import identities
from multiharm.identities import (
    IdentityDescriptor,
    UnknownIdentityError,
    int_axis,
    registry_catalog,
    registry_tags,
    telescope_harmonic_check,
    telescope_kollar_check,
    telescope_linear_check,
    telescope_reciprocal_check,
    verify_all,
    verify_descriptor,
    verify_identity,
)
from multiharm.sequences import (
    fibonacci,
    harmonic,
    harmonic_like,
    harmonic_order,
    hyperharmonic,
    odd_harmonic,
)

F = Fraction

REQUIRED_IDS = {
    # section2
    "main_id1", "remark_m1", "cor_id1", "cor_id2", "cor_id3", "classical_Hk",
    "cor_id4", "ex_Hk2_2n", "ex_alt_Hk2", "ex_alt_Hk2sq", "ex_inv_HkOverK",
    "ex_2k_alt", "ex_3n", "fib_Hk2", "lucas_Hk2", "fib_alt_Hk2", "lucas_alt_Hk2",
    "cor_id5",
    # section3
    "warmup_Hprev_over_k", "warmup_sum_Hk", "warmup_fib_harmonic",
    "thm_o107dby", "thm_o107dby_m1", "thm_o107dby_m2",
    "thm_hnp1", "thm_hnp1_m1", "thm_hnp1_m2",
    "har_helper", "har_example_p0", "har_example_p_pos",
    "thm_kk1", "thm_kk1_m1", "thm_kk1_m2",
    "thm_kollar", "thm_kollar_m1", "thm_kollar_m2",
    # section4
    "thm_hyphar", "thm_hyphar_m0", "thm_hyphar_m1",
    "czxfdu7_1", "czxfdu7_2", "czxfdu7_3", "czxfdu7_4", "czxfdu7_5",
    "czxfdu7_6", "czxfdu7_7",
    "lemma_m2jjbl5", "thm_suzj3to", "oklok93",
    "thm_odd_id1", "thm_odd_id1_m0", "thm_odd_id1_m1", "tb6ik5l",
    "thm_general_p", "thm_general_p_m0", "thm_xld8bhi",
    "thm_k_weighted_half", "thm_k_weighted_half_p0", "thm_yycg1tg",
}


def test_catalog_is_complete_and_well_formed():
    catalog = registry_catalog()
    ids = [entry[0] for entry in catalog]
    assert len(catalog) >= 45
    assert len(ids) == len(set(ids))
    assert all(anchor for _, anchor, _ in catalog)
    assert all(grid for _, _, grid in catalog)
    assert REQUIRED_IDS <= set(ids)
    assert {"section2", "section3", "section4"} <= set(registry_tags())


def test_catalog_listing_is_stable():
    assert registry_catalog() == registry_catalog()


def test_verify_identity_grid_cardinality():
    report = verify_identity("cor_id1", {"n": 20, "m": 5})
    assert report.passed
    assert report.cases == 21 * 6 == 126
    assert report.first_failure is None


def test_verify_identity_unknown_id():
    with pytest.raises(UnknownIdentityError):
        verify_identity("no_such")


def test_verify_all_with_unknown_tag_is_empty():
    assert verify_all(tag="no_such_tag") == []


def test_verify_all_section1():
    reports = verify_all(tag="section1")
    assert reports and all(r.passed for r in reports)
    assert [r.identity for r in reports] == sorted(r.identity for r in reports)


def test_oklok93_spot_value():
    desc = identities.get_identity("oklok93")
    assert desc.lhs(n=1) == desc.rhs(n=1) == F(1, 2)


def test_corrupted_evaluator_reports_smallest_failure():
    # deliberately broken twin of a simple identity; never registered
    broken = IdentityDescriptor(
        id="corrupted_fixture",
        title="broken on purpose",
        anchor="sum_{k=1..n} H_{k-1}/k = (H_n^2 - H_n^(2))/2 + [n>=3]/7",
        tags=("fixture",),
        axes=(int_axis("n", 1, 10),),
        lhs=lambda n: sum((harmonic(k - 1) / k for k in range(1, n + 1)), F(0)),
        rhs=lambda n: (harmonic(n) ** 2 - harmonic_order(n, 2)) / 2
        + (F(1, 7) if n >= 3 else 0),
    )
    report = verify_descriptor(broken)
    assert not report.passed
    assert report.cases == 10
    assert report.first_failure["binding"] == {"n": 3}
    lhs, rhs = F(report.first_failure["lhs"]), F(report.first_failure["rhs"])
    assert rhs - lhs == F(1, 7)


def test_reports_are_deterministic_apart_from_timing():
    a = verify_identity("czxfdu7_5").to_json_dict()
    b = verify_identity("czxfdu7_5").to_json_dict()
    a.pop("elapsed_ms")
    b.pop("elapsed_ms")
    assert a == b


# ---------------------------------------------------------------------------
# telescoping combinators


def test_telescope_harmonic_classic_fixtures():
    # a_k = H_{k-1}: the difference H_k - H_{k-1} is 1/k, so both sides are
    # sum H_k/k; moving the right-hand sum over yields the H_{k-1}/k closed form
    lhs, rhs = telescope_harmonic_check(lambda k: harmonic(k - 1), 5)
    assert lhs == rhs == (harmonic(5) ** 2 + harmonic_order(5, 2)) / 2
    assert harmonic(5) ** 2 - rhs == (harmonic(5) ** 2 - harmonic_order(5, 2)) / 2 == F(15, 8)

    lhs, rhs = telescope_harmonic_check(lambda k: k, 6)
    assert lhs == rhs == 7 * harmonic(6) - 6 == F(223, 20)

    lhs, rhs = telescope_harmonic_check(lambda k: fibonacci(k + 1), 5)
    assert lhs == rhs
    assert lhs == sum((harmonic(k) * fibonacci(k) for k in range(1, 6)), F(0))
    assert rhs == harmonic(5) * fibonacci(7) - sum(
        (F(fibonacci(k + 1), k) for k in range(1, 6)), F(0)
    )


def test_telescope_reciprocal_classic_fixtures():
    lhs, rhs = telescope_reciprocal_check(harmonic, 4)
    assert lhs == rhs
    assert sum((harmonic(k) / (k * (k + 1)) for k in range(1, 5)), F(0)) == harmonic_order(
        4, 2
    ) - harmonic(4) / 5

    lhs, rhs = telescope_reciprocal_check(lambda k: harmonic(k + 2), 5)
    assert lhs == rhs
    p, n = 2, 5
    assert sum((harmonic(k + p) / (k * (k + 1)) for k in range(1, n + 1)), F(0)) == (
        harmonic(n) + harmonic(p) - harmonic(n + p)
    ) / p + harmonic(p) - harmonic(n + p) / (n + 1)

    lhs, rhs = telescope_reciprocal_check(lambda k: F(5, 3), 7)
    assert lhs == rhs == 0


def test_telescope_kollar_classic_fixtures():
    lhs, rhs = telescope_kollar_check(harmonic, 3, 4)
    assert lhs == rhs

    lhs, rhs = telescope_kollar_check(lambda k: harmonic_like(k, 2), F(5, 2), 5)
    assert lhs == rhs

    lhs, rhs = telescope_kollar_check(lambda k: 1, F(7, 3), 6)
    assert lhs == rhs == 0


def test_telescope_linear_classic_fixtures():
    lhs, rhs = telescope_linear_check(lambda k: k, 6)
    assert lhs == rhs == 21

    p, n = 1, 5
    lhs, rhs = telescope_linear_check(lambda k: hyperharmonic(k, p + 1), n)
    assert lhs == rhs
    assert lhs == sum((k * hyperharmonic(k, p) for k in range(1, n + 1)), F(0))
    assert rhs == n * hyperharmonic(n, p + 1) - hyperharmonic(n - 1, p + 2)

    lhs, rhs = telescope_linear_check(fibonacci, 6)
    assert lhs == rhs


def _random_sequences(seed, count, length):
    rng = random.Random(seed)
    for _ in range(count):
        yield [F(rng.randint(-60, 60), rng.randint(1, 40)) for _ in range(length)]


@pytest.mark.parametrize(
    "checker,needs_r",
    [
        (telescope_harmonic_check, False),
        (telescope_reciprocal_check, False),
        (telescope_kollar_check, True),
        (telescope_linear_check, False),
    ],
)
def test_telescopes_hold_for_random_sequences(checker, needs_r):
    r_values = [F(3), F(1, 2), F(5, 2), F(-2, 3)]
    seed = sum(map(ord, checker.__name__))
    for i, seq in enumerate(_random_sequences(seed, 50, 14)):
        n = 3 + i % 10
        a = lambda k: seq[k]
        if needs_r:
            lhs, rhs = checker(a, r_values[i % 4], n)
        else:
            lhs, rhs = checker(a, n)
        assert lhs == rhs
