"""The committed session-walk fixture must match a live re-recording, so the
frontend replay tests and the server can never drift apart silently."""

import json
import pathlib
import threading

import pytest

from superquiver.replay import record
from superquiver.server import make_server

FIXTURE = pathlib.Path(__file__).resolve().parent.parent / "frontend" / "fixtures" / "session_walk.json"


@pytest.fixture()
def live_url():
    httpd = make_server(port=0)
    thread = threading.Thread(target=httpd.serve_forever, daemon=True)
    thread.start()
    host, port = httpd.server_address
    yield f"http://{host}:{port}"
    httpd.shutdown()
    httpd.server_close()


def test_recorded_walk_matches_live_server(live_url):
    recorded = json.loads(FIXTURE.read_text())
    fresh = record(live_url)
    assert fresh == recorded


def test_fixture_contains_frozen_rejection():
    recorded = json.loads(FIXTURE.read_text())
    osp = next(w for w in recorded["walks"] if w["session"] == "osp_example")
    frozen_step = osp["steps"][1]
    assert frozen_step["status"] == 409
    assert "frozen" in frozen_step["response"]["error"]


def test_fixture_polynomials_are_rendered_strings():
    recorded = json.loads(FIXTURE.read_text())
    first = recorded["walks"][0]["steps"][1]["response"]
    rendered = first["state"]["cluster"][0]["rendered"]
    assert rendered == "x1^-1 + x1^-1*x2 + x1^-1*xi1*xi2"
    assert first["exchange"]["rendered"].startswith("x1 * x1' = ")
