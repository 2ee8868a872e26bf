"""Record the scripted session walk against a fresh in-process server and
write the fixture consumed by the browser client's replay tests."""

import json
import pathlib
import threading

from superquiver.replay import record
from superquiver.server import make_server

OUT = pathlib.Path(__file__).resolve().parent.parent / "frontend" / "fixtures" / "session_walk.json"


def main():
    httpd = make_server(port=0)
    thread = threading.Thread(target=httpd.serve_forever, daemon=True)
    thread.start()
    host, port = httpd.server_address
    try:
        recording = record(f"http://{host}:{port}")
    finally:
        httpd.shutdown()
        httpd.server_close()
    OUT.parent.mkdir(parents=True, exist_ok=True)
    OUT.write_text(json.dumps(recording, indent=2, sort_keys=True) + "\n")
    print(f"wrote {OUT}")


if __name__ == "__main__":
    main()
