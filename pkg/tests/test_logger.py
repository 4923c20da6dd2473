import io
import logging

from drinfeld_charpoly.logger import PACKAGE, get_logger, log_duration, setup_logging


class TestLogger:
    def test_get_logger_namespaces(self) -> None:
        assert get_logger("drinfeld_charpoly.bench").name == "drinfeld_charpoly.bench"
        assert get_logger("__main__").name == PACKAGE
        assert get_logger("scratch").name == "drinfeld_charpoly.scratch"

    def test_setup_logging_writes_to_given_stream(self) -> None:
        root = logging.getLogger()
        saved = (list(root.handlers), root.level)
        stream = io.StringIO()
        try:
            setup_logging(logging.INFO, stream=stream)
            get_logger("drinfeld_charpoly.cli").info("hello")
            logging.getLogger("filelock").info("noise")
        finally:
            root.handlers[:] = saved[0]
            root.setLevel(saved[1])
        output = stream.getvalue()
        assert " - INFO - drinfeld_charpoly.cli - hello" in output
        assert "noise" not in output

    def test_log_duration_records_seconds(self, caplog) -> None:
        logger = get_logger("drinfeld_charpoly.test")
        with caplog.at_level(logging.INFO, logger="drinfeld_charpoly.test"):
            with log_duration(logger, "step") as timing:
                pass
        assert timing["seconds"] >= 0
        assert any(record.getMessage().startswith("step took ") for record in caplog.records)
