"""
Tests for configuration, logging and helper utilities
"""
import logging

from utils.config import Settings, settings
from utils.helpers import chunk_ranges, format_analyzer_response, format_enumerator, merge_counts, partition_ranges
from utils.logger import LOGGER_NAME, setup_logging


def test_format_analyzer_response():
    response = format_analyzer_response(success=False, error="bad", error_type="CapExceededError")
    assert response == {"success": False, "data": {}, "error": "bad", "error_type": "CapExceededError"}


def test_merge_counts():
    assert merge_counts({0: 1, 4: 2}, {4: 3, 8: 1}) == {0: 1, 4: 5, 8: 1}


def test_chunk_ranges():
    assert chunk_ranges(10, 4) == [(0, 4), (4, 8), (8, 10)]
    assert chunk_ranges(0, 4) == []


def test_partition_ranges():
    assert partition_ranges(10, 3) == [(0, 4), (4, 7), (7, 10)]
    assert partition_ranges(2, 5) == [(0, 1), (1, 2)]
    assert partition_ranges(16, 1) == [(0, 16)]


def test_format_enumerator():
    assert format_enumerator({0: 1, 4: 6, 8: 1}) == "1+6z^4+z^8"
    assert format_enumerator({0: 1, 32: 62, 64: 1}, variable="x") == "1+62x^32+x^64"


def test_settings_caps():
    assert settings.get_cap("BRUTE_FORCE_MAX_N") == settings.BRUTE_FORCE_MAX_N
    assert settings.get_analyzer_config("gray")["closure_cap"] == "CLOSURE_CHECK_MAX_N"
    assert settings.get_analyzer_config("unknown") == {}
    assert settings.AUTO_BRUTE_FORCE_MAX_N <= settings.BRUTE_FORCE_MAX_N <= settings.MATERIALIZE_MAX_N


def test_settings_fields_are_all_consumed():
    """Test that every setting is a logging option, a cap, an enumeration knob or an analyzer block"""
    for name in Settings.model_fields:
        assert (
            name.startswith("LOG_")
            or name.endswith("_MAX_N")
            or name.endswith("_ANALYZER_CONFIG")
            or name in ("ENUMERATION_CHUNK_SIZE", "CONCURRENT_TASKS")
        ), name
    for analyzer in ("closed_form", "fast_path", "brute_force", "gray"):
        for cap_name in settings.get_analyzer_config(analyzer).values():
            assert cap_name in Settings.model_fields


def test_setup_logging_is_idempotent():
    first = setup_logging()
    second = setup_logging(logging.DEBUG)
    assert first is second
    assert first.name == LOGGER_NAME
    assert len(second.handlers) == len(first.handlers)
    assert second.level == logging.DEBUG
    setup_logging()
