import logging
from logging.handlers import TimedRotatingFileHandler

import pytest

import main
from src.utils.settings import Settings


@pytest.fixture
def restore_root_logger():
    root = logging.getLogger()
    level, handlers = root.level, list(root.handlers)
    yield root
    for handler in root.handlers:
        if handler not in handlers:
            root.removeHandler(handler)
            handler.close()
    root.setLevel(level)


def test_main_logging_setup(tmp_path, restore_root_logger):
    """
    Test the rotating file handler configured by main.py
    """
    log_path = tmp_path / "attitude.log"

    handler = main.configure_logging(str(log_path), "info")

    root = restore_root_logger
    assert root.level == logging.INFO
    assert handler in root.handlers
    assert isinstance(handler, TimedRotatingFileHandler)
    assert handler.baseFilename == str(log_path)
    assert handler.when == "MIDNIGHT"
    assert handler.backupCount == 30

    fmt = handler.formatter
    assert fmt is not None
    assert fmt._fmt == "%(asctime)s - %(name)s - %(levelname)s - %(message)s"
    assert fmt.datefmt == "%Y-%m-%dT%H:%M:%S%z"

    logging.info("Solve started - N=%d", 16)
    handler.flush()
    assert "INFO - Solve started - N=16" in log_path.read_text()


def test_logging_defaults_to_stderr(restore_root_logger):
    """Test that no file handler is created without a log file"""
    handler = main.configure_logging(None, "WARNING")

    assert type(handler) is logging.StreamHandler
    assert restore_root_logger.level == logging.WARNING


def test_main_passes_environment_settings_to_cli(monkeypatch, mocker, caplog, restore_root_logger):
    """Test that main reads settings from the environment and hands them to the command group"""
    monkeypatch.setenv("ATTITUDE_OCP_JACOBIAN_WORKERS", "3")
    monkeypatch.delenv("ATTITUDE_OCP_LOG_FILE", raising=False)
    mocker.patch("main.load_dotenv_helper", return_value=False)
    cli = mocker.patch("main.cli")

    with caplog.at_level(logging.INFO):
        main.main(["solve", "maneuver.yaml"])

    cli.main.assert_called_once()
    kwargs = cli.main.call_args.kwargs
    assert kwargs["args"] == ["solve", "maneuver.yaml"]
    assert kwargs["prog_name"] == "attitude-ocp"
    assert isinstance(kwargs["obj"], Settings)
    assert kwargs["obj"].jacobian_workers == 3
    assert "Starting the application" in caplog.text
    assert "Application shutdown completed" in caplog.text


def test_main_logs_unexpected_errors(mocker, caplog, restore_root_logger):
    """Test that unexpected failures are logged with a traceback and re-raised"""
    mocker.patch("main.load_dotenv_helper", return_value=False)
    mocker.patch("main.Settings.from_env", return_value=Settings())
    cli = mocker.patch("main.cli")
    cli.main.side_effect = RuntimeError("boom")

    with caplog.at_level(logging.ERROR):
        with pytest.raises(RuntimeError, match="boom"):
            main.main(["solve", "maneuver.yaml"])

    assert "Unexpected error - argv=['solve', 'maneuver.yaml']" in caplog.text
    record = next(r for r in caplog.records if r.getMessage().startswith("Unexpected error"))
    assert record.exc_info is not None
