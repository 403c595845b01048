from math import factorial

import pytest

from eulermgn.errors import DomainError
from eulermgn.moduli import chi_m0_open
from eulermgn.quotients import (
    QuotientKind,
    QuotientSpec,
    chi_m0_mod_D4,
    chi_m0_mod_klein,
    chi_m0_mod_Sj,
    chi_m1_cross_m0_mod_S2,
    chi_m1_mod_S2,
    chi_prod2_mod_klein,
    chi_prod2_mod_S2,
    chi_prod2_mod_S3,
    chi_prod3_mod_klein,
    evaluate,
)
from eulermgn.verify import genus0_specs


@pytest.mark.parametrize(
    "fn, args, expected",
    [
        (chi_m0_mod_Sj, (9, 6), 1),
        (chi_m0_mod_Sj, (8, 6), 0),
        (chi_m0_mod_Sj, (5, 3), 1),
        (chi_m0_mod_klein, (6,), -2),
        (chi_m0_mod_klein, (4,), 0),
        (chi_m0_mod_klein, (7,), 6),
        (chi_m0_mod_D4, (6,), -1),
        (chi_m0_mod_D4, (5,), 0),
        (chi_m0_mod_D4, (7,), 3),
        (chi_prod2_mod_S2, (3, 6), -3),
        (chi_prod2_mod_S2, (4, 6), 3),
        (chi_prod2_mod_S2, (5, 5), 2),
        (chi_prod2_mod_S3, (4, 4), 2),
        (chi_prod2_mod_S3, (4, 5), 1),
        (chi_prod2_mod_S3, (4, 6), 1),
        (chi_prod2_mod_klein, (4, 5), -1),
        (chi_prod2_mod_klein, (3, 6), -2),
        (chi_prod2_mod_klein, (5, 5), 1),
        (chi_prod3_mod_klein, (4, 4, 4), -1),
        (chi_prod3_mod_klein, (4, 4, 7), 6),
        (chi_prod3_mod_klein, (3, 4, 5), -1),
        (chi_m1_mod_S2, (6,), 6),
        (chi_m1_mod_S2, (3,), 1),
        (chi_m1_mod_S2, (7,), -30),
        (chi_m1_cross_m0_mod_S2, (2, 3), 1),
        (chi_m1_cross_m0_mod_S2, (2, 4), 0),
        (chi_m1_cross_m0_mod_S2, (5, 5), -2),
    ],
)
def test_table_values(fn, args, expected):
    assert fn(*args) == expected


@pytest.mark.parametrize("n", range(3, 12))
def test_sj_with_no_free_markings(n):
    assert chi_m0_mod_Sj(n, n) == 1
    assert chi_m0_mod_Sj(n, n - 1) == 1
    assert chi_m0_mod_Sj(n, n - 2) == n % 2


@pytest.mark.parametrize("n", range(3, 12))
def test_trivial_group(n):
    assert chi_m0_mod_Sj(n, 0) == (-1) ** (n - 3) * factorial(n - 3)


@pytest.mark.parametrize(
    "fn, args",
    [
        (chi_m0_mod_Sj, (2, 0)),
        (chi_m0_mod_Sj, (5, 6)),
        (chi_m0_mod_klein, (3,)),
        (chi_m0_mod_D4, (3,)),
        (chi_prod2_mod_S2, (5, 4)),
        (chi_prod2_mod_S3, (2, 5)),
        (chi_prod2_mod_klein, (5, 4)),
        (chi_prod2_mod_klein, (3, 3)),
        (chi_prod3_mod_klein, (4, 3, 5)),
        (chi_prod3_mod_klein, (3, 3, 3)),
        (chi_m1_mod_S2, (1,)),
        (chi_m1_cross_m0_mod_S2, (0, 3)),
        (chi_m1_cross_m0_mod_S2, (2, 2)),
    ],
)
def test_out_of_range_is_refused(fn, args):
    with pytest.raises(DomainError):
        fn(*args)


@pytest.mark.parametrize("n2", [7, 8, 12])
def test_prod2_klein_unknown_range_refused(n2):
    with pytest.raises(DomainError, match="outside the known table"):
        chi_prod2_mod_klein(4, n2)


@pytest.mark.parametrize("n", range(3, 14))
def test_branch_locus_of_s2(n):
    branch = 2 * chi_m0_mod_Sj(n, 2) - chi_m0_open(n)
    if n >= 5:
        assert branch == 0
    else:
        assert branch == {3: 1, 4: 1}[n]


def _all_in_range_specs():
    yield from genus0_specs(11)
    for n in range(2, 14):
        yield QuotientSpec(QuotientKind.M1ModS2, (n,))
    for n1 in range(1, 10):
        for n2 in range(3, 10):
            yield QuotientSpec(QuotientKind.M1CrossM0ModS2, (n1, n2))


def test_all_values_are_integers():
    checked = 0
    for spec in _all_in_range_specs():
        try:
            value = evaluate(spec)
        except DomainError:
            continue
        assert value.denominator == 1, spec
        checked += 1
    assert checked > 500


def test_spec_validation():
    with pytest.raises(DomainError):
        QuotientSpec(QuotientKind.Prod2ModS2, (4,))
    with pytest.raises(DomainError):
        QuotientSpec(QuotientKind.M0ModSj, (6,))
    with pytest.raises(DomainError):
        QuotientSpec(QuotientKind.M0ModKlein, (6,), 2)
    assert QuotientKind.parse("prod2modklein") is QuotientKind.Prod2ModKlein
    with pytest.raises(DomainError):
        QuotientKind.parse("nope")


def test_evaluate_dispatch():
    assert evaluate(QuotientSpec(QuotientKind.M1CrossM0ModS2, (5, 5))) == -2
    assert evaluate(QuotientSpec(QuotientKind.M0ModSj, (8,), 6)) == 0
