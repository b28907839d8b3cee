"""Sequence generators: golden prefixes, cross-construction agreement,
structural identities, caps, and the spec-file loader."""

import pytest

import reduxwords as rw
from reduxwords.errors import CapacityError, ConfigurationError, SpecFileError
from reduxwords.sequences import ToeplitzSpec, _toeplitz_fill

from conftest import PF_PREFIX_55, TM_PREFIX_54


class TestGoldenPrefixes:
    def test_tm_prefix(self, tm_handle):
        assert str(tm_handle.prefix(54)) == TM_PREFIX_54

    def test_pf_prefix(self, pf_handle):
        assert str(pf_handle.prefix(55)) == PF_PREFIX_55

    def test_pointwise_matches_prefix(self, tm_handle, pf_handle):
        for n in range(1, 200):
            assert tm_handle.at(n) == rw.thue_morse_at(n)
            assert pf_handle.at(n) == rw.paperfolding_at(n)

    def test_one_based_indexing(self, tm_handle):
        assert tm_handle.at(1) == 0
        with pytest.raises(ValueError):
            tm_handle.at(0)
        with pytest.raises(ValueError):
            rw.thue_morse_at(0)
        with pytest.raises(ValueError):
            rw.paperfolding_at(-3)


class TestCrossConstruction:
    def test_tm_morphic_agrees_with_rule(self):
        a = rw.thue_morse().prefix_symbols(1 << 14)
        b = rw.thue_morse_morphic().prefix_symbols(1 << 14)
        assert a == b

    def test_pf_toeplitz_agrees_with_rule(self):
        a = rw.paperfolding().prefix_symbols(1 << 14)
        b = rw.paperfolding_toeplitz().prefix_symbols(1 << 14)
        assert a == b


class TestMorphic:
    def test_tm_prefix_is_fixed_by_morphism(self, tm_handle):
        mu = rw.thue_morse_morphism()
        for length in (1, 5, 32, 100):
            w = tm_handle.prefix(length)
            assert mu.apply(w) == tm_handle.prefix(2 * length)

    def test_nonuniform_images(self):
        # symbols 1 and 2 with images of lengths 3 and 5
        m = rw.Morphism({1: (1, 2, 1), 2: (1, 2, 2, 2, 1)}, alphabet_size=3)
        h = rw.morphic_fixed_point(m, 1)
        assert h.prefix_symbols(8) == [1, 2, 1, 1, 2, 2, 2, 1]

    def test_requires_prolongable_seed(self):
        m = rw.Morphism({0: (1, 0), 1: (0, 1)}, 2)
        with pytest.raises(ConfigurationError):
            rw.morphic_fixed_point(m, 0)

    def test_requires_length_two_image(self):
        m = rw.Morphism({0: (0,), 1: (1, 0)}, 2)
        with pytest.raises(ConfigurationError):
            rw.morphic_fixed_point(m, 0)

    def test_requires_closure(self):
        m = rw.Morphism({0: (0, 1)}, 2)
        with pytest.raises(ConfigurationError):
            rw.morphic_fixed_point(m, 0)

    def test_rejects_empty_image(self):
        with pytest.raises(ConfigurationError):
            rw.Morphism({0: ()}, 2)

    def test_rejects_out_of_alphabet_image(self):
        with pytest.raises(ConfigurationError):
            rw.Morphism({0: (0, 2)}, 2)


class TestToeplitz:
    def test_values_independent_of_buffer_length(self):
        spec = ToeplitzSpec(period=(0, 1), preperiod=(1, 1, 0))
        assert _toeplitz_fill(spec, 64) == _toeplitz_fill(spec, 512)[:64]

    def test_first_pass_writes_filler_into_even_positions(self):
        spec = ToeplitzSpec(period=(1, 0), preperiod=())
        buf = _toeplitz_fill(spec, 32)
        assert buf[0::2] == [spec.filler_at(j) for j in range(16)]

    def test_second_pass_restarts_filler(self):
        # positions 1, 5, 9, ... are the gaps the second pass fills, again
        # from the start of the filler
        spec = ToeplitzSpec(period=(0, 1))
        buf = _toeplitz_fill(spec, 64)
        assert buf[1::4] == [spec.filler_at(j) for j in range(16)]

    def test_rejects_empty_period(self):
        with pytest.raises(ConfigurationError):
            ToeplitzSpec(period=())

    def test_filler_preperiod_then_cycle(self):
        spec = ToeplitzSpec(period=(1, 0), preperiod=(0,))
        assert [spec.filler_at(i) for i in range(6)] == [0, 1, 0, 1, 0, 1]


class TestSequenceHandle:
    def test_prefix_stability_under_growth(self):
        h = rw.thue_morse()
        small = h.prefix_symbols(10)
        h.prefix_symbols(5000)
        assert h.prefix_symbols(10) == small
        assert h.prefix_symbols(5000)[:10] == small

    def test_prefix_of_prefix(self, pf_handle):
        long = pf_handle.prefix_symbols(2048)
        assert pf_handle.prefix_symbols(100) == long[:100]

    def test_capacity_error(self):
        h = rw.from_pointwise(rw.thue_morse_at, 2, "capped", max_prefix=100)
        assert len(h.prefix_symbols(100)) == 100
        with pytest.raises(CapacityError):
            h.prefix_symbols(101)

    def test_env_var_cap(self, monkeypatch):
        monkeypatch.setenv("REDUXWORDS_MAX_PREFIX", "50")
        h = rw.thue_morse()
        with pytest.raises(CapacityError):
            h.prefix_symbols(51)

    def test_env_var_must_be_positive_int(self, monkeypatch):
        monkeypatch.setenv("REDUXWORDS_MAX_PREFIX", "zero")
        with pytest.raises(ConfigurationError):
            rw.thue_morse()
        monkeypatch.setenv("REDUXWORDS_MAX_PREFIX", "0")
        with pytest.raises(ConfigurationError):
            rw.thue_morse()

    def test_prefix_requires_positive_length(self, tm_handle):
        with pytest.raises(rw.WordDomainError):
            tm_handle.prefix(0)


class TestFactorClosureProperties:
    def test_tm_factors_closed_under_complement(self, tm_handle):
        buf = bytes(tm_handle.prefix_symbols(16384))
        for length in (1, 2, 3, 5, 8, 13, 21, 40, 64):
            factors = {buf[i : i + length] for i in range(len(buf) - length + 1)}
            flipped = {bytes(1 - b for b in f) for f in factors}
            assert flipped == factors


class TestSpecFiles:
    def test_builtin(self, tmp_path):
        path = tmp_path / "seq.conf"
        path.write_text("kind = builtin\nname = tm\n")
        h = rw.load_sequence_spec(str(path))
        assert str(h.prefix(12)) == TM_PREFIX_54[:12]

    def test_morphic_matches_builtin(self, tmp_path):
        path = tmp_path / "tmlike.conf"
        path.write_text(
            "# fixed point of 0 -> 01, 1 -> 10\n"
            "kind = morphic\n"
            "alphabet_size = 2\n"
            "seed = 0\n"
            "image.0 = 01\n"
            "image.1 = 10\n"
        )
        h = rw.load_sequence_spec(str(path))
        assert h.prefix_symbols(512) == rw.thue_morse().prefix_symbols(512)

    def test_toeplitz_matches_builtin(self, tmp_path):
        path = tmp_path / "pflike.conf"
        path.write_text("kind = toeplitz\nalphabet_size = 2\nperiod = 01\n")
        h = rw.load_sequence_spec(str(path))
        assert h.prefix_symbols(512) == rw.paperfolding().prefix_symbols(512)

    def test_comma_separated_symbols(self):
        h = rw.parse_sequence_spec(
            "kind = morphic\nalphabet_size = 12\nseed = 0\n"
            "image.0 = 0,11\nimage.11 = 11,0\n"
        )
        assert h.prefix_symbols(4) == [0, 11, 11, 0]

    def test_missing_kind(self):
        with pytest.raises(SpecFileError):
            rw.parse_sequence_spec("name = tm\n")

    def test_unknown_kind(self):
        with pytest.raises(SpecFileError):
            rw.parse_sequence_spec("kind = automaton\n")

    def test_unknown_builtin(self):
        with pytest.raises(SpecFileError):
            rw.parse_sequence_spec("kind = builtin\nname = fib\n")

    def test_morphic_missing_images(self):
        with pytest.raises(SpecFileError):
            rw.parse_sequence_spec("kind = morphic\nalphabet_size = 2\nseed = 0\n")

    def test_morphic_bad_seed(self):
        with pytest.raises(SpecFileError):
            rw.parse_sequence_spec(
                "kind = morphic\nalphabet_size = 2\nseed = 1\nimage.1 = 01\nimage.0 = 10\n"
            )

    def test_malformed_line(self):
        with pytest.raises(SpecFileError):
            rw.parse_sequence_spec("kind builtin\n")

    def test_unrecognized_keys(self):
        with pytest.raises(SpecFileError):
            rw.parse_sequence_spec("kind = builtin\nname = tm\nbogus = 1\n")

    def test_non_integer_value(self):
        with pytest.raises(SpecFileError):
            rw.parse_sequence_spec("kind = toeplitz\nalphabet_size = two\nperiod = 01\n")

    def test_missing_file(self):
        with pytest.raises(SpecFileError):
            rw.load_sequence_spec("/nonexistent/path/seq.conf")

    def test_comments_and_blanks_ignored(self):
        h = rw.parse_sequence_spec("\n# a comment\nkind = builtin\nname = pf  # inline\n\n")
        assert str(h.prefix(8)) == PF_PREFIX_55[:8]
