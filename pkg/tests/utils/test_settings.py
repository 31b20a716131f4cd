import pytest
from pydantic import ValidationError

from src.autodiff import DerivativeMode
from src.utils import Settings, load_dotenv_helper

VARIABLES = ("LOG_FILE", "LOG_LEVEL", "JACOBIAN_WORKERS", "JACOBIAN_CHUNK", "DERIVATIVE_MODE")


@pytest.fixture
def clean_env(monkeypatch):
    for name in VARIABLES:
        monkeypatch.delenv(f"ATTITUDE_OCP_{name}", raising=False)
    return monkeypatch


def test_defaults_without_environment(clean_env):
    settings = Settings.from_env()

    assert settings.log_file is None
    assert settings.log_level == "INFO"
    assert settings.jacobian_workers == 1
    assert settings.jacobian_chunk == 64
    assert settings.derivative_mode is DerivativeMode.DUAL


def test_environment_values_are_parsed(clean_env):
    clean_env.setenv("ATTITUDE_OCP_JACOBIAN_WORKERS", "4")
    clean_env.setenv("ATTITUDE_OCP_DERIVATIVE_MODE", "complex-step")
    clean_env.setenv("ATTITUDE_OCP_LOG_LEVEL", "")

    settings = Settings.from_env()

    assert settings.jacobian_workers == 4
    assert settings.derivative_mode is DerivativeMode.COMPLEX_STEP
    assert settings.log_level == "INFO"


def test_invalid_environment_value_is_rejected(clean_env):
    clean_env.setenv("ATTITUDE_OCP_JACOBIAN_CHUNK", "0")
    with pytest.raises(ValidationError):
        Settings.from_env()


def test_dotenv_file_in_working_directory_is_loaded(clean_env, tmp_path, mocker):
    mocker.patch("src.utils.load_env.load_dotenv", side_effect=[False, True])
    clean_env.chdir(tmp_path)
    (tmp_path / ".env").write_text("ATTITUDE_OCP_JACOBIAN_WORKERS=2\n")

    assert load_dotenv_helper() is True


def test_missing_dotenv_file(clean_env, tmp_path, mocker):
    mocker.patch("src.utils.load_env.load_dotenv", return_value=False)
    clean_env.chdir(tmp_path)

    assert load_dotenv_helper() is False
