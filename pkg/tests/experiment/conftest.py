import pytest

from config.loader import build_settings

SMALL_ARENA = {
    "width": "4",
    "height": "4",
    "nest_width": "0.8",
    "nest_height": "0.8",
    "initial_resources": "8",
    "target_collected": "12",
    "tick_limit": "15000",
}


@pytest.fixture
def small_config_text(tmp_path):
    """Config file text for a fast sweep writing into tmp_path."""
    lines = [
        "strategies = naive, adaptive-null",
        "sizes = 2, 3",
        "replicates = 3",
        "seed = 42",
        f"output = {tmp_path / 'sweep.csv'}",
    ]
    lines += [f"arena.{key} = {value}" for key, value in SMALL_ARENA.items()]
    return "\n".join(lines) + "\n"


@pytest.fixture
def small_config(tmp_path, small_config_text):
    path = tmp_path / "small.conf"
    path.write_text(small_config_text, encoding="utf-8")
    return path


@pytest.fixture
def small_settings():
    return build_settings(
        {
            "experiment": {"strategies": "naive, adaptive-null", "sizes": "2, 3", "replicates": "3", "output": ""},
            "arena": dict(SMALL_ARENA),
        }
    )
