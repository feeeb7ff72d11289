from critcolor.core.config import DEFAULT_BUDGET_MS, DEFAULT_WORKERS, get_settings, load_settings, reset_settings


def test_defaults():
    settings = load_settings()
    assert settings.budget_ms == DEFAULT_BUDGET_MS
    assert settings.workers == DEFAULT_WORKERS
    assert settings.log_level == "INFO"


def test_environment_overrides(monkeypatch):
    monkeypatch.setenv("CRITCOLOR_BUDGET_MS", "250")
    monkeypatch.setenv("CRITCOLOR_WORKERS", "3")
    monkeypatch.setenv("CRITCOLOR_LOG_LEVEL", "debug")
    settings = load_settings()
    assert (settings.budget_ms, settings.workers, settings.log_level) == (250, 3, "DEBUG")


def test_invalid_values_fall_back(monkeypatch, caplog):
    monkeypatch.setenv("CRITCOLOR_BUDGET_MS", "soon")
    monkeypatch.setenv("CRITCOLOR_WORKERS", "0")
    monkeypatch.setenv("CRITCOLOR_LOG_LEVEL", "loud")
    settings = load_settings()
    assert settings.budget_ms == DEFAULT_BUDGET_MS
    assert settings.workers == DEFAULT_WORKERS
    assert settings.log_level == "INFO"
    assert len([r for r in caplog.records if r.levelname == "WARNING"]) == 3


def test_settings_are_cached(monkeypatch):
    first = get_settings()
    monkeypatch.setenv("CRITCOLOR_WORKERS", "4")
    assert get_settings() is first
    reset_settings()
    assert get_settings().workers == 4
