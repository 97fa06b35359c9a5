from __future__ import annotations

import json
from pathlib import Path

import pytest

from fsmlab.examples import eqabc as _eqabc, eqabc_nd as _eqabc_nd

REPO = Path(__file__).resolve().parent.parent
GOLDEN = Path(__file__).resolve().parent / "golden"


@pytest.fixture(scope="session")
def eqabc():
    return _eqabc()


@pytest.fixture(scope="session")
def eqabc_nd():
    return _eqabc_nd()


@pytest.fixture(scope="session")
def eqabc_path() -> str:
    return str(REPO / "machines" / "eqabc.json")


@pytest.fixture(scope="session")
def eqabc_nd_path() -> str:
    return str(REPO / "machines" / "eqabc-nd.json")


@pytest.fixture()
def machine_file(tmp_path):
    """Write a machine object to a temp file and hand back its path."""

    def write(obj: dict, name: str = "machine.json") -> str:
        path = tmp_path / name
        path.write_text(json.dumps(obj), encoding="utf-8")
        return str(path)

    return write


def golden(name: str) -> str:
    return (GOLDEN / name).read_text(encoding="utf-8")
