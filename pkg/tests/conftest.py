import pytest

from spcob.lib import cache, config
from spcob.lib.display import ansi
from spcob.lib.display.writer import TestWriter


@pytest.fixture(autouse=True)
def spcob_home(tmp_path, monkeypatch):
    monkeypatch.setenv("SPCOB_HOME", str(tmp_path))
    monkeypatch.delenv("SPCOB_FORMAT", raising=False)
    monkeypatch.setattr(config, "_cache", None)
    ansi.use(ansi.PLAIN)
    return tmp_path


@pytest.fixture
def out() -> TestWriter:
    return TestWriter()


@pytest.fixture
def cold_cache():
    cache.clear()
    yield
    cache.clear()
