"""Scripted session walks, recordable against a live server.

The recorded payloads are committed as a fixture for the browser client's
replay tests, and the server test re-records the same walk to prove both
sides keep rendering identical polynomial strings and path counts.
"""

from __future__ import annotations

import json
import urllib.error
import urllib.request

SCRIPTED_WALK = [
    {
        "session": "two_vertex_example",
        "steps": [
            {"action": "mutate", "vertex": 1, "expect_status": 200},
            {"action": "mutate", "vertex": 2, "expect_status": 200},
            {"action": "undo", "expect_status": 200},
        ],
    },
    {
        "session": "somos4_a",
        "steps": [
            {"action": "mutate", "vertex": 1, "expect_status": 200},
            {"action": "mutate", "vertex": 2, "expect_status": 200},
        ],
    },
    {
        "session": "osp_example",
        "steps": [
            {"action": "mutate", "vertex": 2, "expect_status": 409},
            {"action": "mutate", "vertex": 1, "expect_status": 200},
        ],
    },
]


def _call(base_url, method, path, body=None):
    data = json.dumps(body).encode() if body is not None else None
    request = urllib.request.Request(
        base_url + path, data=data, method=method,
        headers={"Content-Type": "application/json"},
    )
    try:
        with urllib.request.urlopen(request) as response:
            return response.status, json.loads(response.read())
    except urllib.error.HTTPError as exc:
        return exc.code, json.loads(exc.read())


def scrub(obj):
    """Replace per-run session ids so recordings compare byte for byte."""
    if isinstance(obj, dict):
        return {k: ("SID" if k == "id" else scrub(v)) for k, v in obj.items()}
    if isinstance(obj, list):
        return [scrub(v) for v in obj]
    return obj


def record(base_url):
    walks = []
    for walk in SCRIPTED_WALK:
        status, created = _call(base_url, "POST", "/sessions", {"name": walk["session"]})
        assert status == 200, (walk["session"], created)
        sid = created["id"]
        steps = [{"action": "create", "status": status, "response": scrub(created)}]
        for step in walk["steps"]:
            if step["action"] == "mutate":
                status, payload = _call(
                    base_url, "POST", f"/sessions/{sid}/mutate", {"vertex": step["vertex"]}
                )
            else:
                status, payload = _call(base_url, "POST", f"/sessions/{sid}/undo")
            assert status == step["expect_status"], (walk["session"], step, payload)
            recorded = dict(step)
            recorded["status"] = status
            recorded["response"] = scrub(payload)
            steps.append(recorded)
        walks.append({"session": walk["session"], "steps": steps})
    return {"walks": walks}
