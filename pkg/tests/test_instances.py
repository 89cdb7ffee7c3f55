from fractions import Fraction

import pytest

from pqlab.errors import PreconditionError
from pqlab.family import has_pq_property, tuple_stats
from pqlab.formats import emit_family, emit_points
from pqlab.instances import GenSpec, Kind, gen, segments_plus_boxes


@pytest.mark.parametrize("kind", [k for k in Kind])
def test_generators_are_deterministic(kind):
    spec = GenSpec(kind, n=5, seed=7, p=5, q=3)
    emit = emit_points if kind is Kind.GRID_POINTS else emit_family
    assert emit(gen(spec)) == emit(gen(spec))


def test_seed_changes_output():
    a = gen(GenSpec(Kind.RANDOM_POLYGONS, n=5, seed=1))
    b = gen(GenSpec(Kind.RANDOM_POLYGONS, n=5, seed=2))
    assert emit_family(a) != emit_family(b)


def test_crossing_segments_general_position():
    fam = gen(GenSpec(Kind.CROSSING_SEGMENTS, n=7, seed=3))
    stats = tuple_stats(fam, 3)
    assert stats.f == (7, 21, 0)


def test_thick_crossing_segments_are_polygons():
    fam = gen(GenSpec(Kind.CROSSING_SEGMENTS, n=4, width=Fraction(1, 3)))
    assert all(b.kind == "polygon" for b in fam)


@pytest.mark.parametrize("p,q", [(4, 3), (5, 3), (6, 4), (7, 5)])
def test_segments_plus_boxes_has_property(p, q):
    fam = segments_plus_boxes(p, q, seed=p)
    assert len(fam) == p
    assert has_pq_property(fam, p, q).holds


def test_generator_preconditions():
    with pytest.raises(PreconditionError):
        segments_plus_boxes(3, 4)
    with pytest.raises(PreconditionError):
        gen(GenSpec(Kind.CONCENTRIC, n=0))
