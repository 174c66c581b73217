import pytest


@pytest.fixture
def isolated_config_dir(tmp_path, monkeypatch):
    """Point the config directory at a temporary path."""
    config_home = tmp_path / "config-home"
    monkeypatch.setenv("XDG_CONFIG_HOME", str(config_home))
    monkeypatch.delenv("APPDATA", raising=False)
    return config_home / "meander-py"
