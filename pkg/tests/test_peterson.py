import io
import random
from fractions import Fraction
from math import comb, gcd

import pytest

from rootbounds import (
    MultiplicityTable,
    Rank2Cartan,
    RootClass,
    Weight,
    bilinear_form,
    classify,
    count_valid_string_data,
    export_csv,
    kostant_count,
    multiplicity,
    peterson_c,
    positive_roots_up_to,
)
from rootbounds.peterson import _mobius_inversion_mult


def test_c_base_and_small_values(cartan3, table3):
    assert peterson_c((1, 0), cartan3, table3) == 1
    assert peterson_c((0, 1), cartan3, table3) == 1
    assert peterson_c((1, 1), cartan3, table3) == 1
    assert peterson_c((2, 0), cartan3, table3) == Fraction(1, 2)


def test_c_rejects_zero_weight(cartan3, table3):
    with pytest.raises(ValueError):
        peterson_c((0, 0), cartan3, table3)
    with pytest.raises(ValueError):
        multiplicity((0, 0), cartan3, table3)


def test_vanishing_denominator_weights(cartan3, table3):
    # (4,1) and its mirror sit where the recursion's denominator is zero:
    # norm equals twice the height there, so neither is a root and the
    # numerator must cancel.  The primitive (4,1) has c = 0 outright,
    # while (12,4) = 4*(3,1) keeps the divisor contribution of the real
    # root (3,1).
    assert bilinear_form((4, 1), (4, 1), cartan3) == 2 * 5
    assert peterson_c((4, 1), cartan3, table3) == 0
    assert multiplicity((4, 1), cartan3, table3) == 0
    assert bilinear_form((12, 4), (12, 4), cartan3) == 2 * 16
    assert peterson_c((12, 4), cartan3, table3) == Fraction(1, 4)
    assert multiplicity((12, 4), cartan3, table3) == 0
    assert multiplicity((4, 12), cartan3, table3) == 0


def test_multiplicity_examples(table3):
    assert table3.entry(Weight(16, 15))[1] == 815214
    assert table3.entry(Weight(15, 11))[1] == 23750
    assert table3.entry(Weight(3, 1))[1] == 1
    assert table3.entry(Weight(1, 1))[1] == 1
    assert table3.entry(Weight(2, 1))[1] == 1
    assert table3.entry(Weight(4, 3))[1] == 4


def test_multiplicity_flip_symmetric(table3):
    for c0 in range(1, 13):
        for c1 in range(1, 13):
            assert table3.entry(Weight(c0, c1))[1] == table3.entry(Weight(c1, c0))[1]


def test_real_roots_and_non_roots():
    for r in (3, 4, 5):
        cartan = Rank2Cartan(r)
        table = MultiplicityTable(cartan)
        for total in range(1, 21):
            for c0 in range(total + 1):
                c1 = total - c0
                if (c0, c1) == (0, 0):
                    continue
                m = table.entry(Weight(c0, c1))[1]
                cls = classify((c0, c1), cartan)
                if cls is RootClass.REAL:
                    assert m == 1, (r, c0, c1)
                elif cls is RootClass.NOT_A_ROOT:
                    assert m == 0, (r, c0, c1)
                else:
                    assert m >= 1, (r, c0, c1)
                # scaled-up real roots stop being roots
                g = gcd(c0, c1)
                if g >= 2:
                    prim = (c0 // g, c1 // g)
                    if classify(prim, cartan) is RootClass.REAL:
                        assert m == 0, (r, c0, c1)


def test_root_iff_positive_multiplicity(cartan3, cartan4, table3, table4):
    for cartan, table in ((cartan3, table3), (cartan4, table4)):
        for total in range(1, 13):
            for c0 in range(total + 1):
                c1 = total - c0
                if (c0, c1) == (0, 0):
                    continue
                is_root = classify((c0, c1), cartan) is not RootClass.NOT_A_ROOT
                assert is_root == (table.entry(Weight(c0, c1))[1] > 0), (c0, c1)


def test_mobius_inversion_agrees_with_table(table3):
    for c0 in range(0, 13):
        for c1 in range(0, 13):
            if (c0, c1) == (0, 0):
                continue
            assert _mobius_inversion_mult(Weight(c0, c1), table3) == table3.entry(
                Weight(c0, c1)
            )[1]


def test_positive_roots_up_to_examples(cartan3):
    roots = positive_roots_up_to((1, 1), cartan3)
    assert roots == [
        (Weight(0, 1), 1),
        (Weight(1, 0), 1),
        (Weight(1, 1), 1),
    ]
    bigger = dict(positive_roots_up_to((3, 1), cartan3))
    assert bigger[Weight(3, 1)] == 1
    assert Weight(2, 0) not in bigger


def test_kostant_examples(cartan3):
    assert kostant_count((4, 3), cartan3) == 32
    assert kostant_count((0, 0), cartan3) == 1
    assert kostant_count((1, 1), cartan3) == 2


def test_kostant_equals_string_count(cartan3, cartan4, table3, table4):
    for cartan, table in ((cartan3, table3), (cartan4, table4)):
        for total in range(0, 11):
            for c0 in range(total + 1):
                c1 = total - c0
                assert kostant_count((c0, c1), cartan, table) == count_valid_string_data(
                    (c0, c1), cartan
                ), (cartan.r, c0, c1)


def test_kostant_below_word_count(cartan3, table3):
    for total in range(1, 13):
        for c0 in range(total + 1):
            c1 = total - c0
            assert kostant_count((c0, c1), cartan3, table3) <= comb(total, c0)


def test_memoized_values_satisfy_recursion(cartan3, table3):
    # re-derive c at random weights straight from the definition
    table3.fill_box(20, 20)
    rng = random.Random(20)
    weights = [(rng.randint(0, 20), rng.randint(0, 20)) for _ in range(100)]
    for a0, a1 in weights:
        if (a0, a1) in ((0, 0), (1, 0), (0, 1)):
            continue
        num = Fraction(0)
        for b0 in range(a0 + 1):
            for b1 in range(a1 + 1):
                if (b0, b1) in ((0, 0), (a0, a1)):
                    continue
                c_left = table3.entry(Weight(b0, b1))[0]
                c_right = table3.entry(Weight(a0 - b0, a1 - b1))[0]
                num += bilinear_form((b0, b1), (a0 - b0, a1 - b1), cartan3) * c_left * c_right
        denom = bilinear_form((a0, a1), (a0, a1), cartan3) - 2 * (a0 + a1)
        c_stored = table3.entry(Weight(a0, a1))[0]
        assert denom * c_stored == num, (a0, a1)


def test_incremental_box_growth(cartan3):
    table = MultiplicityTable(cartan3)
    assert table.entry(Weight(4, 3))[1] == 4
    assert table.entry(Weight(15, 11))[1] == 23750
    assert table.entry(Weight(6, 5))[1] == 23


def test_csv_export_roundtrip(cartan3):
    table = MultiplicityTable(cartan3)
    table.fill_box(4, 4)
    buf = io.StringIO()
    export_csv(table, buf)
    lines = buf.getvalue().strip().splitlines()
    assert lines[0] == "c0,c1,norm,class,multiplicity"
    rows = {tuple(map(int, ln.split(",")[:2])): ln.split(",") for ln in lines[1:]}
    assert rows[(1, 1)][4] == "1"
    assert rows[(1, 1)][3] == "imaginary"
    assert rows[(1, 0)][3] == "real"
    assert rows[(2, 0)][4] == "0"
    assert len(lines) == 1 + 5 * 5 - 1  # every nonzero weight in the box
