#!/usr/bin/env python3
"""
配置测试 - 环境变量与 .env 加载
"""
import logging
import os
import sys

import pytest

from load_env import TEVS_VARIABLES, load_dotenv
from tevs.config import Settings
from tevs.series import SMALLEST_POSITIVE


def test_defaults():
    settings = Settings.from_env({})
    assert settings.nu == 0.01
    assert settings.epsilon == SMALLEST_POSITIVE
    assert settings.max_concurrent == 1
    assert settings.logging_level == logging.WARNING


def test_from_env_mapping():
    settings = Settings.from_env({
        "TEVS_NU": "0.5",
        "TEVS_EPSILON": "1e-6",
        "TEVS_MAX_CONCURRENT": "4",
        "TEVS_LOG_LEVEL": "debug",
    })
    assert settings.nu == 0.5
    assert settings.epsilon == 1e-6
    assert settings.max_concurrent == 4
    assert settings.logging_level == logging.DEBUG


def test_blank_values_fall_back_to_defaults():
    assert Settings.from_env({"TEVS_NU": "  "}).nu == 0.01


@pytest.mark.parametrize("name, value", [
    ("TEVS_NU", "fast"),
    ("TEVS_NU", "-1"),
    ("TEVS_NU", "inf"),
    ("TEVS_EPSILON", "0"),
    ("TEVS_MAX_CONCURRENT", "0"),
    ("TEVS_MAX_CONCURRENT", "2.5"),
    ("TEVS_LOG_LEVEL", "LOUD"),
])
def test_invalid_values(name, value):
    with pytest.raises(ValueError, match=name):
        Settings.from_env({name: value})


def test_load_dotenv(tmp_path, monkeypatch):
    for name in TEVS_VARIABLES:
        monkeypatch.delenv(name, raising=False)
    monkeypatch.setenv("TEVS_LOG_LEVEL", "ERROR")
    env_file = tmp_path / ".env"
    env_file.write_text("TEVS_NU=0.25\nTEVS_LOG_LEVEL=INFO\n", encoding="utf-8")

    try:
        assert load_dotenv(env_file)
        settings = Settings.from_env()
        assert settings.nu == 0.25
        # 已存在的变量不被覆盖
        assert os.environ["TEVS_LOG_LEVEL"] == "ERROR"
        assert settings.logging_level == logging.ERROR
    finally:
        os.environ.pop("TEVS_NU", None)


def test_missing_dotenv(tmp_path):
    assert load_dotenv(tmp_path / "absent.env") is False


if __name__ == "__main__":
    sys.exit(pytest.main([__file__, "-q"]))
