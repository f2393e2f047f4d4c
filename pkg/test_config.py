#!/usr/bin/env python3
"""
Tests for settings loaded from the environment.
"""

import os
import sys
from fractions import Fraction

import pytest
from pydantic import ValidationError

# Add parent directory to path
sys.path.insert(0, os.path.dirname(os.path.abspath(__file__)))

from inertial_delays.config import Settings, load_settings

ENV_NAMES = ("INERTIA_LOG_LEVEL", "INERTIA_SEARCH_BOUND", "INERTIA_PROGRESS", "INERTIA_VCD_TIMESCALE")


@pytest.fixture
def clean_env(monkeypatch, tmp_path):
    for name in ENV_NAMES:
        # set first so values loaded from an env file are undone too
        monkeypatch.setenv(name, "")
        monkeypatch.delenv(name)
    # keep python-dotenv from picking up a stray .env
    monkeypatch.chdir(tmp_path)
    return monkeypatch


def test_defaults(clean_env):
    settings = load_settings(env_file=os.devnull)
    assert settings.log_level == "WARNING"
    assert settings.search_bound == Fraction(20)
    assert settings.show_progress is False
    assert settings.vcd_timescale == "1 ns"


def test_environment_overrides(clean_env):
    clean_env.setenv("INERTIA_LOG_LEVEL", "debug")
    clean_env.setenv("INERTIA_SEARCH_BOUND", "15/2")
    clean_env.setenv("INERTIA_PROGRESS", "yes")
    clean_env.setenv("INERTIA_VCD_TIMESCALE", "10 ps")
    settings = load_settings(env_file=os.devnull)
    assert settings.log_level == "DEBUG"
    assert settings.search_bound == Fraction(15, 2)
    assert settings.show_progress is True
    assert settings.vcd_timescale == "10 ps"


def test_env_file(clean_env, tmp_path):
    env_file = tmp_path / "inertia.env"
    env_file.write_text("INERTIA_SEARCH_BOUND=8\nINERTIA_PROGRESS=off\n", encoding="utf-8")
    settings = load_settings(env_file=str(env_file))
    assert settings.search_bound == Fraction(8)
    assert settings.show_progress is False


@pytest.mark.parametrize("field, value", [
    ("log_level", "chatty"),
    ("search_bound", "0"),
    ("search_bound", "-3"),
    ("search_bound", "many"),
])
def test_invalid_settings(field, value):
    with pytest.raises(ValidationError):
        Settings(**{field: value})


def test_settings_are_frozen():
    with pytest.raises(ValidationError):
        Settings().search_bound = Fraction(3)


def test_runtime_requirements_leave_out_test_tools():
    root = os.path.dirname(os.path.abspath(__file__))
    with open(os.path.join(root, "requirements.txt"), encoding="utf-8") as f:
        names = {line.split("==")[0].strip().lower() for line in f if line.strip()}
    assert {"pydantic", "python-dotenv", "tqdm", "numpy", "pyvcd"} <= names
    assert not names & {"pytest", "hypothesis"}
