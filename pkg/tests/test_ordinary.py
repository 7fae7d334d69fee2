import pytest

from ecensus.census2 import class_from_lambda2, enumerate2
from ecensus.census3 import class_from_lambda3, enumerate3
from ecensus.cm import LatticeVector, Polarization, validate_cm
from ecensus.errors import DimensionMismatch, ZeroMap
from ecensus.ordinary import (
    OrdinaryCurve,
    class_from_endomorphism_vector,
    endomorphism_degree,
    enumerate_ordinary,
    ordinary_class,
    ordinary_records,
)
from ecensus.records import Kind
from helpers import EXTRA_CMS, ORACLE_CMS, ref_ordinary_count

GI = validate_cm(0, 1, 1)


class TestOrdinaryCurve:
    def test_rejects(self):
        with pytest.raises(ValueError):
            OrdinaryCurve((2, 4))
        with pytest.raises(ValueError):
            OrdinaryCurve((-1, 1))
        with pytest.raises(ValueError):
            OrdinaryCurve((0, 0))

    def test_degree(self):
        assert OrdinaryCurve((1, -2, 1)).degree(Polarization((1, 2, 3))) == 12


class TestEnumerate:
    def test_g2(self):
        assert [c.v for c in enumerate_ordinary(2, Polarization((1, 1)), 2)] == [(0, 1), (1, 0), (1, -1), (1, 1)]

    def test_g3(self):
        assert len(enumerate_ordinary(3, Polarization((1, 1, 1)), 3)) == 13

    def test_empty(self):
        assert enumerate_ordinary(2, Polarization((1, 1)), 0) == []

    def test_mismatch(self):
        with pytest.raises(DimensionMismatch):
            enumerate_ordinary(3, Polarization((1, 1)), 3)

    @pytest.mark.parametrize("mults", [(1, 1), (2, 3), (1, 5), (1, 1, 1), (1, 2, 2)])
    def test_count_matches_brute_force(self, mults):
        for t in range(0, 40, 3):
            assert len(enumerate_ordinary(len(mults), Polarization(mults), t)) == ref_ordinary_count(mults, t)


class TestOrdinaryClass:
    def test_examples(self):
        assert ordinary_class(GI, OrdinaryCurve((1, 1))) == (1, 1, 1, 0)
        assert ordinary_class(validate_cm(1, 1, 1), OrdinaryCurve((1, 0))) == (1, 0, 0, 0)
        assert ordinary_class(GI, OrdinaryCurve((1, 1, 1))) == (1, 1, 1, 1, 1, 1, 0, 0, 0)

    @pytest.mark.parametrize("cm", ORACLE_CMS + EXTRA_CMS)
    def test_matches_lambda_class(self, cm):
        cm = validate_cm(*cm)
        for c in enumerate_ordinary(2, Polarization((1, 1)), 20):
            assert ordinary_class(cm, c) == class_from_lambda2(cm, LatticeVector(c.v, (0, 0)))
        for c in enumerate_ordinary(3, Polarization((1, 1, 1)), 9):
            assert ordinary_class(cm, c) == class_from_lambda3(cm, LatticeVector(c.v, (0, 0, 0)))

    @pytest.mark.parametrize("cm", ORACLE_CMS + EXTRA_CMS)
    def test_bijection_with_census(self, cm):
        cm = validate_cm(*cm)
        for g, enum, mults, t in ((2, enumerate2, (1, 2), 15), (3, enumerate3, (1, 1, 2), 6)):
            pol = Polarization(mults)
            census = {tuple(r.coords): r.degree for r in enum(cm, pol, t) if r.kind is Kind.ORDINARY}
            mine = {tuple(ordinary_class(cm, c)): c.degree(pol) for c in enumerate_ordinary(g, pol, t)}
            assert census == mine

    def test_records_basis(self):
        recs = ordinary_records(2, Polarization((1, 1)), 2, with_basis=True)
        assert recs[0].basis[0].coords == (0, 1, 0, 0)
        assert recs[0].basis[1].coords == (0, 0, 0, 1)


class TestEndomorphisms:
    def test_degree_formula(self):
        cm = validate_cm(1, 2, 3)
        # norm of x + y w tau: w (tau + tau') = -u and w^2 tau tau' = vw
        assert endomorphism_degree(cm, 1, 0) == 1
        assert endomorphism_degree(cm, 0, 1) == cm.vw
        assert endomorphism_degree(cm, 2, 1) == 4 - 2 + 6

    def test_graph_of_i(self):
        rep = class_from_endomorphism_vector(GI, [(1, 0), (0, 1)])
        assert rep.cls == (1, 1, 0, 1)
        assert (rep.formula_degree, rep.class_degree) == (2, 2)
        assert rep.degrees_match

    def test_one_plus_i(self):
        rep = class_from_endomorphism_vector(GI, [(1, 0), (1, 1), (0, 0)])
        assert rep.class_degree == rep.formula_degree == 3
        assert rep.cls[6:] != (0, 0, 0)

    def test_multiplication_by_two(self):
        rep = class_from_endomorphism_vector(GI, [(2, 0), (0, 0)])
        assert rep.cls == (1, 0, 0, 0)
        assert (rep.class_degree, rep.formula_degree) == (1, 4)
        assert not rep.degrees_match

    def test_zero(self):
        with pytest.raises(ZeroMap):
            class_from_endomorphism_vector(GI, [(0, 0), (0, 0)])

    def test_polarization(self):
        rep = class_from_endomorphism_vector(GI, [(1, 0), (0, 1)], Polarization((2, 3)))
        assert rep.class_degree == rep.formula_degree == 5

    def test_degree_three_family_one_plus_i(self):
        # (1, +-(1 +- i), 0) and its coordinate permutations with 1 in a fixed slot
        classes = set()
        for sx in (1, -1):
            for sy in (1, -1):
                rep = class_from_endomorphism_vector(GI, [(1, 0), (sx, sx * sy), (0, 0)])
                assert rep.degrees_match and rep.class_degree == 3
                classes.add(rep.cls)
        assert len(classes) == 4
