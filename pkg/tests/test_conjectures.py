"""The product identities: periodic/twisted exact, reflecting numeric."""

import json
from fractions import Fraction

import pytest

from betheq.asmcounts import asm_count, asm_ht, asm_v, n8
from betheq.conjectures import (
    VerificationReport,
    groundstate_schur_det,
    verify_component_sums,
    verify_periodic_product,
    verify_reflecting_product,
    verify_twisted_product,
)
from betheq.exact import QINV, Cyclo
from betheq.qfunctions import elem_periodic


class TestPeriodicProduct:
    @pytest.mark.parametrize("n", range(1, 7))
    def test_equals_asm_cubed(self, n):
        rep = verify_periodic_product(n)
        assert rep.equal
        assert rep.lhs == Fraction(asm_count(n)) ** 3
        assert rep.method == "exact"

    def test_known_values(self):
        assert verify_periodic_product(3).lhs == 343
        assert verify_periodic_product(4).lhs == 74088

    def test_rejects_nonpositive(self):
        with pytest.raises(ValueError):
            verify_periodic_product(0)


class TestTwistedProduct:
    @pytest.mark.parametrize("n", range(1, 7))
    def test_equals_qpow_asm_ht(self, n):
        rep = verify_twisted_product(n)
        assert rep.equal
        assert rep.lhs == Cyclo(asm_count(n) * asm_ht(2 * n - 1)) * QINV ** (n - 1)

    def test_known_values(self):
        # n = 2: 6/q; n = 3: 175/q^2
        assert verify_twisted_product(2).lhs == Cyclo(6) * QINV
        assert verify_twisted_product(3).lhs == Cyclo(175) * QINV**2


class TestReflectingProduct:
    @pytest.mark.parametrize("n", range(1, 4))
    def test_matches_symmetry_class_product(self, n):
        rep = verify_reflecting_product(n, 256)
        assert rep.equal
        assert rep.rhs == asm_v(2 * n + 1) ** 2 * n8(2 * n) ** 4

    def test_known_targets(self):
        assert verify_reflecting_product(2, 256).rhs == 144
        assert verify_reflecting_product(3, 256).rhs == 9897316


class TestComponentSums:
    @pytest.mark.parametrize("n", range(1, 6))
    def test_sums_match_asm_counts(self, n):
        rep = verify_component_sums(n, 256)
        assert rep.equal
        assert rep.rhs == (asm_count(n), asm_count(n) ** 2)


class TestSchurDet:
    def test_degenerate_sizes(self):
        assert groundstate_schur_det(elem_periodic(1)) == 1

    def test_n2_value(self):
        # size-2 determinant over e-values (1, 11/5, 1)
        e = elem_periodic(2).evalues
        expect = e[1] * e[1] - e[0] * e[2]
        assert groundstate_schur_det(elem_periodic(2)) == expect


class TestReportSerialization:
    def test_exact_report_json(self):
        rep = verify_periodic_product(3)
        d = rep.to_json()
        json.dumps(d)  # must be serializable
        assert d["lhs"] == "343"
        assert d["equal"] is True
        assert d["precision_bits"] is None
        assert d["tolerance"] is None

    def test_numeric_report_json(self):
        rep = verify_reflecting_product(1, 128)
        d = rep.to_json()
        json.dumps(d)
        assert d["precision_bits"] == 128
        assert d["tolerance"] is not None

    def test_cyclo_report_json(self):
        d = verify_twisted_product(2).to_json()
        json.dumps(d)
        assert d["lhs"] == {"a": "6", "b": "-6"}
