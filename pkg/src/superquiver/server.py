"""HTTP session API for interactive mutation exploration.

Endpoints (all JSON):

    POST /sessions                {"quiver": {...}} | {"seed": {...}} | {"name": "somos4_a"}
    GET  /sessions/<id>           current state
    POST /sessions/<id>/mutate    {"vertex": k} -> new state + the exchange relation used
    POST /sessions/<id>/undo      pop one mutation
    GET  /sessions/<id>/frieze    frieze view for path-quiver sessions

Errors: 400 malformed input, 404 unknown session, 409 mutation at a frozen
vertex.  Requests within one session are serialized by a per-session lock;
distinct sessions proceed concurrently under the threading server.
"""

from __future__ import annotations

import json
import re
import threading
import uuid
from http.server import BaseHTTPRequestHandler, ThreadingHTTPServer

from .errors import EngineError, FrozenVertex, IndexOutOfRange, UnknownName
from .frieze import generate
from .quiver import ExtendedQuiver, aquiv, named_quiver, weight_function
from .seed import Seed, exchange_numerator, mutate_seed


class ApiError(Exception):
    def __init__(self, status, message):
        super().__init__(message)
        self.status = status
        self.message = message


class Session:
    __slots__ = ("id", "seed", "undo", "lock", "undo_limit")

    def __init__(self, seed: Seed, undo_limit=256):
        self.id = uuid.uuid4().hex
        self.seed = seed
        self.undo = []
        self.lock = threading.Lock()
        self.undo_limit = undo_limit

    def state(self):
        seed = self.seed
        quiver = seed.quiver
        weights = list(weight_function(quiver)) if quiver.m == 2 else None
        return {
            "id": self.id,
            "quiver": quiver.to_json_obj(),
            "cluster": [
                {"poly": p.to_json_obj(), "rendered": p.render()} for p in seed.cluster
            ],
            "weights": weights,
            "mutable": [k not in quiver.frozen for k in range(1, quiver.n + 1)],
            "history": list(seed.history),
            "undo_depth": len(self.undo),
            "names": {
                "even": list(seed.ring.even_names),
                "odd": list(seed.ring.odd_names),
            },
        }

    def mutate(self, vertex):
        with self.lock:
            try:
                numerator = exchange_numerator(self.seed, vertex)
                new_seed = mutate_seed(self.seed, vertex)
            except FrozenVertex as exc:
                raise ApiError(409, f"vertex is frozen: {exc}")
            except (IndexOutOfRange, IndexError) as exc:
                raise ApiError(400, f"bad vertex: {exc}")
            self.undo.append(self.seed)
            if len(self.undo) > self.undo_limit:
                self.undo.pop(0)
            self.seed = new_seed
            name = self.seed.ring.even_names[vertex - 1]
            exchange = {
                "vertex": vertex,
                "numerator": numerator.to_json_obj(),
                "rendered": f"{name} * {name}' = {numerator.render()}",
                "new_value": new_seed.value(vertex).render(),
            }
            return self.state(), exchange

    def undo_one(self):
        with self.lock:
            if not self.undo:
                raise ApiError(400, "nothing to undo")
            self.seed = self.undo.pop()
            return self.state()

    def frieze_view(self):
        with self.lock:
            quiver = self.seed.quiver
            if quiver != aquiv(quiver.n):
                raise ApiError(400, "session quiver is not the path quiver shape")
            fr = generate(quiver.n, diagonals=quiver.n + 4, ring=self.seed.ring)
            obj = fr.to_json_obj()
            obj["text"] = fr.render_text()
            return obj


class SessionStore:
    def __init__(self, undo_limit=256):
        self.undo_limit = undo_limit
        self._sessions = {}
        self._lock = threading.Lock()

    def create(self, body):
        if "name" in body:
            try:
                quiver = named_quiver(body["name"])
            except UnknownName as exc:
                raise ApiError(400, f"unknown quiver name: {exc}")
            seed = Seed.initial(quiver)
        elif "seed" in body:
            seed = Seed.from_json_obj(body["seed"])
        elif "quiver" in body:
            seed = Seed.initial(ExtendedQuiver.from_json_obj(body["quiver"]))
        else:
            raise ApiError(400, 'body must contain "quiver", "seed" or "name"')
        session = Session(seed, self.undo_limit)
        with self._lock:
            self._sessions[session.id] = session
        return session

    def get(self, sid):
        with self._lock:
            session = self._sessions.get(sid)
        if session is None:
            raise ApiError(404, "unknown session")
        return session


_ROUTES = [
    ("POST", re.compile(r"^/sessions$"), "create"),
    ("GET", re.compile(r"^/sessions/([0-9a-f]+)$"), "state"),
    ("POST", re.compile(r"^/sessions/([0-9a-f]+)/mutate$"), "mutate"),
    ("POST", re.compile(r"^/sessions/([0-9a-f]+)/undo$"), "undo"),
    ("GET", re.compile(r"^/sessions/([0-9a-f]+)/frieze$"), "frieze"),
]


class Handler(BaseHTTPRequestHandler):
    store: SessionStore = None  # injected by make_server

    def log_message(self, *args):
        pass

    def _reply(self, status, obj):
        payload = json.dumps(obj, sort_keys=True).encode()
        self.send_response(status)
        self.send_header("Content-Type", "application/json")
        self.send_header("Content-Length", str(len(payload)))
        self.send_header("Access-Control-Allow-Origin", "*")
        self.end_headers()
        self.wfile.write(payload)

    def _body(self):
        length = int(self.headers.get("Content-Length") or 0)
        raw = self.rfile.read(length) if length else b"{}"
        try:
            obj = json.loads(raw or b"{}")
        except json.JSONDecodeError:
            raise ApiError(400, "malformed JSON body")
        if not isinstance(obj, dict):
            raise ApiError(400, "body must be a JSON object")
        return obj

    def _dispatch(self, method):
        for verb, pattern, action in _ROUTES:
            if verb != method:
                continue
            match = pattern.match(self.path)
            if not match:
                continue
            try:
                self._run(action, match)
            except ApiError as exc:
                self._reply(exc.status, {"error": exc.message})
            except EngineError as exc:
                self._reply(400, {"error": str(exc)})
            return
        self._reply(404, {"error": "no such route"})

    def _run(self, action, match):
        store = self.store
        if action == "create":
            session = store.create(self._body())
            self._reply(200, {"id": session.id, "state": session.state()})
        elif action == "state":
            self._reply(200, {"state": store.get(match.group(1)).state()})
        elif action == "mutate":
            body = self._body()
            vertex = body.get("vertex")
            if not isinstance(vertex, int):
                raise ApiError(400, '"vertex" must be an integer')
            state, exchange = store.get(match.group(1)).mutate(vertex)
            self._reply(200, {"state": state, "exchange": exchange})
        elif action == "undo":
            self._reply(200, {"state": store.get(match.group(1)).undo_one()})
        elif action == "frieze":
            self._reply(200, {"frieze": store.get(match.group(1)).frieze_view()})

    def do_GET(self):
        self._dispatch("GET")

    def do_POST(self):
        self._dispatch("POST")

    def do_OPTIONS(self):
        # CORS preflight for the browser client
        self.send_response(204)
        self.send_header("Access-Control-Allow-Origin", "*")
        self.send_header("Access-Control-Allow-Methods", "GET, POST, OPTIONS")
        self.send_header("Access-Control-Allow-Headers", "Content-Type")
        self.end_headers()


def make_server(host="127.0.0.1", port=0, undo_limit=256):
    handler = type("BoundHandler", (Handler,), {"store": SessionStore(undo_limit)})
    return ThreadingHTTPServer((host, port), handler)


def serve(host="127.0.0.1", port=8420, undo_limit=256):
    httpd = make_server(host, port, undo_limit)
    print(f"superquiver session API on http://{host}:{httpd.server_address[1]}")
    try:
        httpd.serve_forever()
    except KeyboardInterrupt:
        pass
    finally:
        httpd.server_close()
