import math

import pytest

from gaugegraph import (
    ConfigurationError,
    Pattern,
    config_from_mapping,
    config_to_mapping,
    parse_config,
)
from gaugegraph.config import parse_angle, parse_complex

MINIMAL = """
sites = 6
t_forward = "2i"
t_backward = "1i"
"""


class TestParseConfig:
    def test_minimal_doc_defaults(self):
        cfg = parse_config(MINIMAL)
        assert cfg.kind == "spectrum"
        assert cfg.criterion == "max_im"
        assert len(cfg.axes) == 1
        spec = cfg.axes[0]
        assert spec.sites == 6
        assert spec.pattern is Pattern.FCG
        assert spec.t_fwd == 2j
        assert spec.t_bwd == 1j
        assert spec.gauge == 0

    def test_hcs_odd_sites_error_message(self):
        doc = 'sites = 7\npattern = "hcs"\nt_forward = 2.0\nt_backward = 1.0\n'
        with pytest.raises(ConfigurationError, match="even site count"):
            parse_config(doc)

    def test_double_mode_caption_config(self):
        doc = 'sites = 20\npattern = "hcs"\nt_forward = 2.0\nt_backward = 1.0\n'
        cfg = parse_config(doc)
        assert cfg.axes[0].sites == 20
        assert cfg.axes[0].hopping_ratio == 2.0

    def test_unknown_keys_listed(self):
        doc = MINIMAL + 'smoothing = 3\ncolour = "red"\n'
        with pytest.raises(ConfigurationError) as err:
            parse_config(doc)
        assert "colour" in str(err.value) and "smoothing" in str(err.value)

    def test_unknown_axis_keys_listed(self):
        doc = '[[axis]]\nsites = 6\nt_forward = 2.0\nt_backward = 1.0\nhop = 1\n'
        with pytest.raises(ConfigurationError, match="hop"):
            parse_config(doc)

    def test_pattern_case_insensitive(self):
        doc = 'sites = 6\npattern = "HCS"\nt_forward = 2.0\nt_backward = 1.0\n'
        assert parse_config(doc).axes[0].pattern is Pattern.HCS

    def test_axis_tables(self):
        doc = """
kind = "fold"
[[axis]]
sites = 4
t_forward = 2.0
t_backward = 1.0
[[axis]]
sites = 3
t_forward = { re = 0.5, im = 0.1 }
t_backward = 1.0
"""
        cfg = parse_config(doc)
        assert [a.sites for a in cfg.axes] == [4, 3]
        assert cfg.axes[1].t_fwd == 0.5 + 0.1j

    def test_inline_and_tables_conflict(self):
        doc = 'sites = 6\nt_forward = 2.0\nt_backward = 1.0\n[[axis]]\nsites = 4\nt_forward = 1.0\nt_backward = 1.0\n'
        with pytest.raises(ConfigurationError, match="not both"):
            parse_config(doc)

    def test_missing_axis(self):
        with pytest.raises(ConfigurationError, match="no axis"):
            parse_config('kind = "spectrum"\n')

    def test_sweep_range(self):
        doc = MINIMAL + 'kind = "sweep"\nsweep = { start = 6, stop = 12, step = 2 }\n'
        assert parse_config(doc).sweep_sites == (6, 8, 10, 12)

    def test_sweep_required_for_sweep_kind(self):
        with pytest.raises(ConfigurationError, match="sweep"):
            parse_config(MINIMAL + 'kind = "sweep"\n')

    def test_fold_needs_two_axes(self):
        with pytest.raises(ConfigurationError, match="two"):
            parse_config(MINIMAL + 'kind = "fold"\n')

    def test_custom_connectivity(self):
        doc = """
sites = 4
pattern = "custom"
connectivity = [1, 0, 1]
t_forward = 2.0
t_backward = 1.0
"""
        assert parse_config(doc).axes[0].connectivity == (1, 0, 1)

    def test_invalid_connectivity_cites_rule(self):
        doc = """
sites = 4
pattern = "custom"
connectivity = [1, 1, 0]
t_forward = 2.0
t_backward = 1.0
"""
        with pytest.raises(ConfigurationError, match="a_d = a_"):
            parse_config(doc)
        cfg = parse_config(doc + "allow_invalid = true\n")
        assert cfg.allow_invalid

    def test_negative_tolerance_rejected(self):
        with pytest.raises(ConfigurationError, match="positive"):
            parse_config(MINIMAL + "tie_tol = -1.0\n")

    def test_bad_toml(self):
        with pytest.raises(ConfigurationError, match="TOML"):
            parse_config("sites = [unterminated\n")

    def test_windings_validated(self):
        with pytest.raises(ConfigurationError, match="windings"):
            parse_config(MINIMAL + "windings = [7]\n")


class TestComplexParsing:
    @pytest.mark.parametrize(
        "text,expected",
        [
            ("2i", 2j),
            ("1i", 1j),
            ("-3.5e-2i", -0.035j),
            ("1+2i", 1 + 2j),
            ("0.5 - 0.25j", 0.5 - 0.25j),
            ("4", 4 + 0j),
        ],
    )
    def test_string_forms(self, text, expected):
        assert parse_complex(text, "t") == expected

    def test_plain_numbers(self):
        assert parse_complex(3, "t") == 3 + 0j
        assert parse_complex(2.5, "t") == 2.5 + 0j

    def test_re_im_table(self):
        assert parse_complex({"re": 1.5, "im": -0.5}, "t") == 1.5 - 0.5j
        assert parse_complex({"im": 2.0}, "t") == 2j

    def test_bad_table_keys(self):
        with pytest.raises(ConfigurationError, match="abs"):
            parse_complex({"abs": 1.0}, "t")

    def test_garbage_rejected(self):
        with pytest.raises(ConfigurationError):
            parse_complex("two-ish", "t")


class TestAngleParsing:
    @pytest.mark.parametrize(
        "text,expected",
        [
            ("pi", math.pi),
            ("pi/3", math.pi / 3),
            ("2pi/5", 2 * math.pi / 5),
            ("-pi/2", -math.pi / 2),
            ("0.5pi", math.pi / 2),
            (1.25, 1.25),
            ("0.75", 0.75),
        ],
    )
    def test_forms(self, text, expected):
        assert parse_angle(text, "phi") == pytest.approx(expected, rel=1e-15)

    def test_garbage_rejected(self):
        with pytest.raises(ConfigurationError):
            parse_angle("about thirty degrees", "phi")


class TestRoundTrip:
    def test_mapping_round_trip(self):
        doc = """
kind = "rotate"
criterion = "max_abs"
phi = "pi/3"
tie_tol = 1e-7
output = "spin"

sites = 6
t_forward = { re = 1.0, im = 2.0 }
t_backward = 1.0
gauge = 2
"""
        cfg = parse_config(doc)
        assert config_from_mapping(config_to_mapping(cfg)) == cfg

    def test_fold_round_trip(self):
        doc = """
kind = "fold"
[[axis]]
sites = 4
t_forward = "0.3+0.2i"
t_backward = 1.0
[[axis]]
sites = 6
pattern = "hcs"
t_forward = 2.0
t_backward = 1.0
gauge = 3
"""
        cfg = parse_config(doc)
        assert config_from_mapping(config_to_mapping(cfg)) == cfg

    def test_custom_round_trip(self):
        doc = """
sites = 5
pattern = "custom"
connectivity = [1, 0, 0, 1]
t_forward = -2.0
t_backward = 1.0
windings = [0, 2]
"""
        cfg = parse_config(doc)
        assert config_from_mapping(config_to_mapping(cfg)) == cfg
