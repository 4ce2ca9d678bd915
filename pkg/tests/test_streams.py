import pytest

from charp.errors import PolySyntaxError
from charp.ffield import make_context
from charp.streams import (SeriesStream, builtin_streams, from_seed,
                           geometric_gap, lacunary, lacunary_shift,
                           parse_stream_spec, perturb, t_stream)


class TestBuiltins:
    def test_lacunary_first_coefficients(self, f2):
        s = lacunary(f2)
        got = [int(bool(s.coefficient(n))) for n in range(1, 7)]
        assert got == [1, 1, 0, 0, 0, 1]  # factorials 1, 2, 6

    def test_lacunary_nonunit(self, f2):
        assert not lacunary(f2).coefficient(0)

    def test_lacunary_deep_exponents(self, f2):
        s = lacunary(f2)
        assert s.coefficient(24) and s.coefficient(120) and s.coefficient(720)
        assert not s.coefficient(719) and not s.coefficient(721)

    def test_shift_exponents(self, f2):
        s = lacunary_shift(f2, 1)
        hits = [n for n in range(30) if s.coefficient(n)]
        assert hits == [2, 3, 7, 25]

    def test_geometric_gap_exponents(self, f2):
        s = geometric_gap(f2, 2)
        hits = [n for n in range(40) if s.coefficient(n)]
        assert hits == [2, 4, 8, 16, 32]

    def test_from_seed_deterministic(self, f3):
        a = from_seed(f3, 7)
        b = from_seed(f3, 7)
        assert [a.coefficient(n) for n in range(64)] == \
            [b.coefficient(n) for n in range(64)]

    def test_distinct_seeds_differ_early(self, f2):
        pairs = [(1, 2), (7, 11), (3, 99), (1000, 1001), (5, 50)]
        for s1, s2 in pairs:
            a, b = from_seed(f2, s1), from_seed(f2, s2)
            assert any(a.coefficient(n) != b.coefficient(n)
                       for n in range(64))

    def test_oracle_is_pure(self, f2):
        s = from_seed(f2, 42)
        assert s.coefficient(17) == s.coefficient(17)

    def test_t_stream(self, f2):
        t = t_stream(f2)
        assert not t.coefficient(0)
        assert t.coefficient(1) == f2.one
        assert not t.coefficient(2)

    def test_catalog_contents(self, f2):
        cat = builtin_streams(f2)
        assert set(cat) == {"lacunary", "lacunary-shift(1)",
                            "geometric-gap(2)", "from-seed(7)",
                            "from-seed(11)"}
        for s in cat.values():
            assert s.transcendental_assumed
            assert not s.coefficient(0)

    def test_unit_stream_rejected(self, f2):
        with pytest.raises(ValueError):
            SeriesStream(f2, "unit", lambda n: f2.one, nonunit=True)


class TestPerturb:
    def test_adds_delta(self, f2):
        s = perturb(lacunary(f2), 3, f2.one)
        assert s.coefficient(3) == f2.one
        assert s.coefficient(2) == f2.one
        assert not s.coefficient(4)

    def test_cancels_existing_coefficient(self, f2):
        s = perturb(lacunary(f2), 2, f2.one)  # 1 + 1 = 0 in F_2
        assert not s.coefficient(2)

    def test_constant_perturbation_rejected(self, f2):
        with pytest.raises(ValueError):
            perturb(lacunary(f2), 0, f2.one)


class TestSpecLanguage:
    def test_plain_names(self, f2):
        assert parse_stream_spec("lacunary", f2).label == "lacunary"
        assert parse_stream_spec("t", f2).label == "t"

    def test_parameterized(self, f2):
        assert parse_stream_spec("lacunary-shift(1)", f2).label == \
            "lacunary-shift(1)"
        assert parse_stream_spec("geometric-gap(2)", f2).label == \
            "geometric-gap(2)"
        assert parse_stream_spec("from-seed(7)", f2).label == "from-seed(7)"

    def test_perturbation_suffix(self, f2):
        s = parse_stream_spec("lacunary+t^3", f2)
        assert s.coefficient(3) == f2.one
        base = lacunary(f2)
        assert all(s.coefficient(n) == base.coefficient(n)
                   for n in range(10) if n != 3)

    def test_minus_perturbation(self, f3):
        s = parse_stream_spec("lacunary-t^2", f3)
        assert not s.coefficient(2)  # 1 - 1 = 0 in F_3

    def test_coefficient_perturbation(self, f3):
        s = parse_stream_spec("lacunary+2*t^4", f3)
        assert s.coefficient(4) == f3.elem(2)

    def test_stacked_perturbations(self, f2):
        s = parse_stream_spec("lacunary+t^3+t^4", f2)
        assert s.coefficient(3) and s.coefficient(4)

    def test_unknown_name(self, f2):
        with pytest.raises(PolySyntaxError):
            parse_stream_spec("fibonacci", f2)

    def test_wrong_arity(self, f2):
        with pytest.raises(PolySyntaxError):
            parse_stream_spec("lacunary(3)", f2)
        with pytest.raises(PolySyntaxError):
            parse_stream_spec("from-seed", f2)

    def test_matches_direct_constructors(self, f2):
        spec = parse_stream_spec("lacunary-shift(1)", f2)
        direct = lacunary_shift(f2, 1)
        assert all(spec.coefficient(n) == direct.coefficient(n)
                   for n in range(40))
