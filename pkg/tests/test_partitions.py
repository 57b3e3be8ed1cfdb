"""Tests for partitions, Levi data and induced-orbit arithmetic."""

from __future__ import annotations

import pytest

from springstack.errors import PartitionError
from springstack.partitions import (
    Composition,
    LeviDatum,
    Partition,
    centraliser_dimension,
    enumerate_compositions,
    enumerate_levi_data,
    enumerate_partitions,
    groupings,
    hook_length_count,
    induce_in_stages,
    induced_partition_oracle,
    levi_centraliser_dimension,
    levi_zero_datum,
    mu_sigma,
    random_levi_datum,
    springer_fibre_dimension,
    transpose,
)


class TestPartition:
    def test_trailing_zeros_are_stripped(self):
        assert Partition((3, 2, 0, 0)).parts == (3, 2)

    def test_rejects_increasing_parts(self):
        with pytest.raises(PartitionError, match="weakly decreasing"):
            Partition((2, 3))

    def test_rejects_negative_parts(self):
        with pytest.raises(PartitionError, match="positive"):
            Partition((2, -1))

    def test_rejects_non_integers(self):
        with pytest.raises(PartitionError):
            Partition((2.5,))
        with pytest.raises(PartitionError, match="integers"):
            Partition(("x",))  # type: ignore[arg-type]
        with pytest.raises(PartitionError):
            Partition((True, 1))

    def test_part_is_zero_padded(self):
        lam = Partition((3, 1))
        assert lam.part(1) == 3
        assert lam.part(2) == 1
        assert lam.part(3) == 0

    def test_parse(self):
        assert Partition.parse("3,2,2") == Partition((3, 2, 2))
        assert Partition.parse("(4,1)") == Partition((4, 1))
        assert Partition.parse("") == Partition()

    def test_parse_garbage(self):
        with pytest.raises(PartitionError, match="comma-separated"):
            Partition.parse("3;2")


class TestComposition:
    def test_order_is_kept(self):
        assert Composition((1, 3, 2)).parts == (1, 3, 2)

    def test_offsets(self):
        assert Composition((6, 5, 4)).offsets() == (0, 6, 11)

    def test_rejects_zero_part(self):
        with pytest.raises(PartitionError):
            Composition((2, 0, 1))

    def test_to_partition_sorts(self):
        assert Composition((1, 3, 2)).to_partition() == Partition((3, 2, 1))


class TestLeviDatum:
    def test_shape_defaults_to_block_weights(self):
        d = LeviDatum.of([(3, 3), (2, 2, 1)])
        assert d.levi_shape == Composition((6, 5))
        assert d.n == 2
        assert d.m == 3
        assert d.weight == 11

    def test_weight_mismatch(self):
        with pytest.raises(PartitionError, match="expected λ_2 = 4"):
            LeviDatum.of([(3, 3), (2, 2, 1)], (6, 4))

    def test_block_count_mismatch(self):
        with pytest.raises(PartitionError, match="3 blocks"):
            LeviDatum.of([(3, 3), (2, 2, 1)], (6, 4, 1))

    def test_parse(self, example_datum):
        assert LeviDatum.parse("3,3;2,2,1;1,1,1,1", "6,5,4") == example_datum

    def test_json(self, example_datum):
        assert LeviDatum.from_json(example_datum.to_json()) == example_datum
        assert example_datum.to_json()["levi_shape"] == [6, 5, 4]

    def test_sub_datum(self, example_datum):
        sub = example_datum.sub_datum(1, 3)
        assert sub.levi_shape == Composition((5, 4))
        assert sub.block_partitions == (Partition((2, 2, 1)), Partition((1, 1, 1, 1)))


class TestTranspose:
    def test_small(self):
        assert transpose(Partition((3, 2))) == Partition((2, 2, 1))

    def test_single_row(self):
        assert transpose(Partition((5,))) == Partition((1, 1, 1, 1, 1))

    def test_concatenated_columns(self):
        assert transpose(Partition((4, 3, 2, 2, 2, 2))) == Partition((6, 6, 2, 1))

    def test_empty(self):
        assert transpose(Partition()) == Partition()

    def test_involution(self):
        for n in range(0, 21):
            for lam in enumerate_partitions(n):
                assert transpose(transpose(lam)) == lam


class TestMuSigma:
    def test_three_blocks(self, example_datum):
        assert mu_sigma(example_datum) == Partition((6, 6, 2, 1))

    def test_representative_diagram_datum(self):
        d = LeviDatum.of([(4, 2, 1), (3, 2), (3, 3, 2, 2, 1, 1)], (7, 5, 12))
        assert mu_sigma(d) == Partition((10, 7, 3, 2, 1, 1))

    def test_single_block(self):
        d = LeviDatum.of([(3, 1, 1)])
        assert mu_sigma(d) == Partition((3, 1, 1))

    def test_sums_over_every_block(self):
        # five blocks but only two rows
        d = LeviDatum.of([(1, 1)] * 5)
        assert mu_sigma(d) == Partition((5, 5))

    def test_oracle_on_example(self, example_datum):
        assert induced_partition_oracle(example_datum) == Partition((6, 6, 2, 1))

    def test_oracle_single_block(self):
        d = LeviDatum.of([(4, 2, 2, 1)])
        assert induced_partition_oracle(d) == Partition((4, 2, 2, 1))

    def test_oracle_agrees_up_to_eight(self):
        for n in range(1, 9):
            for d in enumerate_levi_data(n):
                assert mu_sigma(d) == induced_partition_oracle(d), d

    @pytest.mark.slow
    def test_oracle_agrees_up_to_ten(self):
        for n in range(9, 11):
            for d in enumerate_levi_data(n):
                assert mu_sigma(d) == induced_partition_oracle(d), d

    def test_shape_is_partition_of_weight(self, rng):
        for _ in range(200):
            d = random_levi_datum(int(rng.integers(1, 25)), rng)
            assert mu_sigma(d).weight == d.weight


class TestDimensions:
    @pytest.mark.parametrize(
        "parts,fibre,centraliser",
        [
            ((4,), 0, 4),
            ((1, 1, 1, 1), 6, 16),
            ((3, 2), 2, 9),
        ],
    )
    def test_values(self, parts, fibre, centraliser):
        lam = Partition(parts)
        assert springer_fibre_dimension(lam) == fibre
        assert centraliser_dimension(lam) == centraliser

    def test_fibre_dimension_from_centraliser(self):
        for n in range(1, 9):
            for lam in enumerate_partitions(n):
                assert 2 * springer_fibre_dimension(lam) == centraliser_dimension(lam) - n

    def test_induction_preserves_codimension(self):
        for n in range(1, 8):
            for d in enumerate_levi_data(n):
                assert centraliser_dimension(mu_sigma(d)) == levi_centraliser_dimension(d)

    @pytest.mark.slow
    def test_codimension_and_fibre_dimension_up_to_ten(self):
        for n in range(8, 11):
            for d in enumerate_levi_data(n):
                assert centraliser_dimension(mu_sigma(d)) == levi_centraliser_dimension(d), d
                blocks = sum(springer_fibre_dimension(mu) for mu in d.block_partitions)
                assert springer_fibre_dimension(mu_sigma(d)) == blocks, d

    @pytest.mark.slow
    def test_fibre_dimension_from_centraliser_up_to_twelve(self):
        for n in range(9, 13):
            for lam in enumerate_partitions(n):
                assert 2 * springer_fibre_dimension(lam) == centraliser_dimension(lam) - n

    def test_induced_from_zero(self):
        for shape in enumerate_compositions(6):
            d = levi_zero_datum(shape)
            assert mu_sigma(d) == transpose(shape.to_partition())

    @pytest.mark.parametrize(
        "parts,count",
        [((3, 2), 5), ((2, 2), 2), ((1, 1), 1), ((3, 2, 1), 16), ((4, 4), 14)],
    )
    def test_hook_length_count(self, parts, count):
        assert hook_length_count(Partition(parts)) == count


class TestEnumeration:
    def test_partitions_descending_lex(self):
        got = [lam.parts for lam in enumerate_partitions(4)]
        assert got == [(4,), (3, 1), (2, 2), (2, 1, 1), (1, 1, 1, 1)]

    def test_partition_counts(self):
        assert [len(list(enumerate_partitions(n))) for n in range(0, 9)] == [1, 1, 2, 3, 5, 7, 11, 15, 22]

    def test_partitions_negative(self):
        with pytest.raises(PartitionError):
            list(enumerate_partitions(-1))

    def test_compositions(self):
        got = [c.parts for c in enumerate_compositions(3)]
        assert got == [(3,), (2, 1), (1, 2), (1, 1, 1)]

    def test_levi_data_count(self):
        # compositions of 3 weighted by products of partition counts: 3 + 2 + 2 + 1
        assert len(list(enumerate_levi_data(3))) == 8

    def test_groupings(self):
        assert list(groupings(3)) == [(3,), (2, 1), (1, 2), (1, 1, 1)]


class TestInduceInStages:
    def test_every_grouping_matches(self, example_datum):
        for grouping in groupings(3):
            assert induce_in_stages(example_datum, grouping) == mu_sigma(example_datum)

    def test_bad_grouping(self, example_datum):
        with pytest.raises(PartitionError, match="does not cut"):
            induce_in_stages(example_datum, (2, 2))
