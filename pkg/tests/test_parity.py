import pytest

from smallpart.parity import (
    ParityReport,
    c_signed_convolution,
    count_smallest_part_pie,
    distinct_signed_convolution,
    parity_counts,
    parity_counts_oracle,
    parity_difference,
    t_sum_enum,
    t_sum_formula,
)
from smallpart.partitions import build_count_table, enumerate_partitions, smallest_part


def test_parity_difference_known_values(table):
    assert parity_difference(17, table) == 201
    assert parity_difference(37, table) == 15907
    assert parity_difference(1, table) == 1


def test_parity_difference_requires_table_depth():
    short = build_count_table(5)
    assert parity_difference(6, short) == parity_difference(6, build_count_table(10))
    with pytest.raises(ValueError):
        parity_difference(7, short)
    with pytest.raises(ValueError):
        parity_difference(0, short)


def test_parity_counts_known_values(table):
    report = parity_counts(37, table)
    assert (report.p_n, report.diff, report.p_odd, report.p_even) == (21637, 15907, 18772, 2865)
    report = parity_counts(17, table)
    assert (report.p_odd, report.p_even) == (249, 48)
    report = parity_counts(1, table)
    assert (report.p_odd, report.p_even) == (1, 0)


def test_parity_counts_requires_table_depth():
    with pytest.raises(ValueError):
        parity_counts(6, build_count_table(5))


def test_parity_report_validates():
    ParityReport(n=2, p_n=2, diff=0, p_odd=1, p_even=1)
    with pytest.raises(ValueError):
        ParityReport(n=2, p_n=2, diff=0, p_odd=2, p_even=1)
    with pytest.raises(ValueError):
        ParityReport(n=2, p_n=2, diff=1, p_odd=1, p_even=1)
    with pytest.raises(ValueError):
        ParityReport(n=2, p_n=0, diff=2, p_odd=1, p_even=-1)


def test_parity_counts_oracle_small():
    assert (parity_counts_oracle(2).p_odd, parity_counts_oracle(2).p_even) == (1, 1)
    assert (parity_counts_oracle(4).p_odd, parity_counts_oracle(4).p_even) == (3, 2)
    report = parity_counts_oracle(17)
    assert (report.p_odd, report.p_even) == (249, 48)


def test_parity_counts_match_oracle(table):
    for n in range(1, 36):
        assert parity_counts(n, table) == parity_counts_oracle(n)


def test_parity_counts_rejects_parity_mismatch(table, monkeypatch):
    from smallpart import svalues

    healthy = svalues.s_of
    monkeypatch.setattr(svalues, "s_of", lambda i: healthy(i) + (1 if i == 3 else 0))
    with pytest.raises(RuntimeError):
        parity_counts(3, table)


def test_t_sum_enum_small():
    assert t_sum_enum(1) == 1
    assert t_sum_enum(2) == 0
    assert t_sum_enum(3) == 3


def test_t_sum_formula_is_the_convolution(table):
    assert t_sum_formula(3, table) == 3
    assert t_sum_formula(17, table) == 201
    assert t_sum_formula(1, table) == 1
    for n in range(1, 21):
        assert t_sum_enum(n) == t_sum_formula(n, table)


def test_count_smallest_part_pie_examples(table):
    assert count_smallest_part_pie(5, 5, table) == 1
    assert count_smallest_part_pie(4, 2, table) == 1
    assert count_smallest_part_pie(6, 3, table) == 1


def test_count_smallest_part_pie_domain(table):
    with pytest.raises(ValueError):
        count_smallest_part_pie(4, 5, table)
    with pytest.raises(ValueError):
        count_smallest_part_pie(4, 0, table)
    with pytest.raises(ValueError):
        count_smallest_part_pie(9, 2, build_count_table(5))


def test_pie_matches_enumeration_and_recovers_difference(table):
    for n in range(1, 26):
        tally = {}
        for pi in enumerate_partitions(n):
            s = smallest_part(pi)
            tally[s] = tally.get(s, 0) + 1
        signed_total = 0
        for i in range(1, n + 1):
            count = count_smallest_part_pie(n, i, table)
            assert count == tally.get(i, 0), (n, i)
            signed_total += count if i % 2 == 1 else -count
        assert signed_total == parity_difference(n, table)


def test_signed_convolutions_small(table):
    assert c_signed_convolution(1, table) == 1
    assert c_signed_convolution(2, table) == 0
    assert c_signed_convolution(3, table) == 3
    assert distinct_signed_convolution(1, table) == 1
    assert distinct_signed_convolution(3, table) == 3
    assert distinct_signed_convolution(17, table) == 201


def test_signed_convolution_chain(table):
    for n in range(1, 21):
        expected = t_sum_enum(n)
        assert c_signed_convolution(n, table) == expected
        assert distinct_signed_convolution(n, table) == expected


def test_signed_convolutions_require_table_depth():
    short = build_count_table(3)
    with pytest.raises(ValueError):
        c_signed_convolution(5, short)
    with pytest.raises(ValueError):
        distinct_signed_convolution(5, short)
