import pytest
from pydantic import ValidationError

from hilbert_caratheodory.config.settings import Settings, settings
from hilbert_caratheodory.utils.logger import setup_logger


class TestSettings:
    """Test environment-driven configuration."""

    def test_defaults(self, monkeypatch):
        monkeypatch.delenv("HILBERT_CR_THREADS", raising=False)
        fresh = Settings(_env_file=None)
        assert fresh.threads == 1
        assert fresh.descent_close_stuck is True
        assert fresh.sigma_default_cap is None

    def test_env_override(self, monkeypatch):
        monkeypatch.setenv("HILBERT_CR_THREADS", "4")
        monkeypatch.setenv("HILBERT_CR_DESCENT_CLOSE_STUCK", "false")
        fresh = Settings(_env_file=None)
        assert fresh.threads == 4
        assert fresh.descent_close_stuck is False

    def test_invalid_guard(self, monkeypatch):
        monkeypatch.setenv("HILBERT_CR_LATTICE_POINTS_MAX", "0")
        with pytest.raises(ValidationError):
            Settings(_env_file=None)

    def test_test_environment_applied(self):
        assert settings.log_level == "WARNING"


class TestLogger:
    """Test structured logger setup."""

    def test_setup_logger(self):
        logger = setup_logger("hilbert_caratheodory.tests")
        logger.info("ignored at warning level", value=1)
        assert hasattr(logger, "warning")
