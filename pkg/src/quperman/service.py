"""Local request/response service for the UI and other tooling.

Built on the stdlib threading HTTP server; no web framework. Endpoints:

  GET  /api/v1/project/health                 cached health.v1 for the corpus
  GET  /api/v1/benchmark/distribution?k=v...  distribution.v1 (query = tag filter)
  POST /api/v1/benchmark/entries              ingest one entry (the only mutation)
  POST /api/v1/model/evaluate                 scenario.v1 body -> evalresult.v1
  GET  /api/v1/model/defaults                 model defaults for form initialization

Evaluation responses are produced by the exact same document builders
the CLI uses, so for equal inputs the bytes are equal. The corpus is
analyzed once at startup and served from memory; benchmark writes are
serialized through a single lock. Static UI assets, when configured,
are served for any non-API path.
"""

from __future__ import annotations

import json
import os
import threading
from http.server import BaseHTTPRequestHandler, ThreadingHTTPServer
from urllib.parse import parse_qsl, urlparse

from . import benchmark as bench_mod, documents
from .config import load_config
from .errors import EmptyDistributionError, InputError, WorkbenchError
from .model.cost import (
    DEFAULT_CATEGORY_CYCLE,
    DEFAULT_FIXED_COSTS,
    DEFAULT_RATIONALES,
)
from .model.evaluate import build_roadmap, evaluate_target
from .model.gate import POLICIES

DEFAULT_BIND = "127.0.0.1:8787"

_CONTENT_TYPES = {
    ".html": "text/html; charset=utf-8",
    ".js": "text/javascript; charset=utf-8",
    ".mjs": "text/javascript; charset=utf-8",
    ".css": "text/css; charset=utf-8",
    ".json": "application/json; charset=utf-8",
    ".svg": "image/svg+xml",
    ".png": "image/png",
    ".ico": "image/x-icon",
    ".map": "application/json; charset=utf-8",
}


def defaults_document() -> dict:
    return {
        "schema": "defaults.v1",
        "curve": {"epsilon": 0.05, "kSlope": 1.5},
        "cost": {"baseMarginalCost": 10.0, "escalation": 2.0, "barrierSpacing": 1.5},
        "categories": [
            {
                "name": category.value,
                "fixedCost": DEFAULT_FIXED_COSTS[category],
                "rationale": DEFAULT_RATIONALES[category],
            }
            for category in DEFAULT_CATEGORY_CYCLE
        ],
        "gatePolicies": list(POLICIES),
    }


class WorkbenchState:
    """Everything the handler needs, computed once at startup."""

    def __init__(
        self,
        store_path: str | None,
        config_path: str | None,
        corpus_root: str | None,
        ui_dir: str | None,
    ) -> None:
        self.store_path = store_path
        self.store = bench_mod.load_store(store_path) if store_path else bench_mod.BenchmarkStore()
        self.store_lock = threading.Lock()
        self.ui_dir = os.path.realpath(ui_dir) if ui_dir else None
        self.health_bytes: bytes | None = None
        if corpus_root:
            from .cli import _health_pipeline

            config = load_config(config_path)
            result, project, mi_reports = _health_pipeline(corpus_root, config)
            doc = documents.health_document(project, mi_reports, config, result.warnings)
            self.health_bytes = documents.canonical_json(doc).encode("utf-8")
        self.defaults_bytes = documents.canonical_json(defaults_document()).encode("utf-8")


class WorkbenchHandler(BaseHTTPRequestHandler):
    server: "WorkbenchServer"

    def log_message(self, format: str, *args) -> None:  # noqa: A002 (stdlib signature)
        pass  # keep test output and CI logs quiet

    def _send(self, status: int, body: bytes, content_type: str = "application/json; charset=utf-8") -> None:
        self.send_response(status)
        self.send_header("Content-Type", content_type)
        self.send_header("Content-Length", str(len(body)))
        self.end_headers()
        self.wfile.write(body)

    def _send_json(self, status: int, document: dict) -> None:
        self._send(status, documents.canonical_json(document).encode("utf-8"))

    def _send_error(self, status: int, message: str) -> None:
        self._send_json(status, {"error": message})

    def _read_body(self) -> dict:
        length = int(self.headers.get("Content-Length") or 0)
        raw = self.rfile.read(length) if length else b""
        try:
            data = json.loads(raw.decode("utf-8"))
        except (UnicodeDecodeError, json.JSONDecodeError) as exc:
            raise InputError(f"request body is not valid JSON: {exc}") from None
        if not isinstance(data, dict):
            raise InputError("request body must be a JSON object")
        return data

    def do_GET(self) -> None:  # noqa: N802 (stdlib name)
        url = urlparse(self.path)
        state = self.server.state
        try:
            if url.path == "/api/v1/project/health":
                if state.health_bytes is None:
                    self._send_error(404, "no corpus configured; start with --root")
                    return
                self._send(200, state.health_bytes)
            elif url.path == "/api/v1/benchmark/distribution":
                filters = dict(parse_qsl(url.query))
                with state.store_lock:
                    dist = bench_mod.distribution(state.store, filters)
                self._send_json(200, documents.distribution_document(dist))
            elif url.path == "/api/v1/model/defaults":
                self._send(200, state.defaults_bytes)
            elif url.path.startswith("/api/"):
                self._send_error(404, f"unknown endpoint {url.path}")
            else:
                self._serve_static(url.path)
        except EmptyDistributionError as exc:
            self._send_error(404, str(exc))
        except WorkbenchError as exc:
            self._send_error(400, str(exc))
        except Exception as exc:  # noqa: BLE001 (response boundary)
            self._send_error(500, f"internal error: {exc}")

    def do_POST(self) -> None:  # noqa: N802 (stdlib name)
        url = urlparse(self.path)
        state = self.server.state
        try:
            if url.path == "/api/v1/benchmark/entries":
                data = self._read_body()
                with state.store_lock:
                    entry = bench_mod.ingest_entry(
                        state.store,
                        project_id=data.get("projectId", ""),
                        score=data.get("score"),
                        tags=data.get("tags") or {},
                        recorded_at=data.get("recordedAt", ""),
                    )
                    if state.store_path:
                        bench_mod.save_store(state.store, state.store_path)
                    count = len(state.store)
                self._send_json(
                    200,
                    {"schema": "ingest.v1", "stored": documents.entry_body(entry), "count": count},
                )
            elif url.path == "/api/v1/model/evaluate":
                data = self._read_body()
                scenario = documents.parse_scenario(data)
                with state.store_lock:
                    scores = bench_mod.matching_scores(state.store)
                scenario = documents.scenario_with_store_scores(scenario, scores)
                evaluation = evaluate_target(scenario)
                roadmap = build_roadmap(scenario)
                self._send_json(
                    200, documents.evalresult_document(scenario, evaluation, roadmap)
                )
            else:
                self._send_error(404, f"unknown endpoint {url.path}")
        except WorkbenchError as exc:
            self._send_error(400, str(exc))
        except Exception as exc:  # noqa: BLE001 (response boundary)
            self._send_error(500, f"internal error: {exc}")

    def _serve_static(self, path: str) -> None:
        state = self.server.state
        if state.ui_dir is None:
            self._send_error(404, "no UI assets configured; start with --ui")
            return
        relative = path.lstrip("/") or "index.html"
        full = os.path.realpath(os.path.join(state.ui_dir, relative))
        if not (full == state.ui_dir or full.startswith(state.ui_dir + os.sep)):
            self._send_error(404, "not found")
            return
        if os.path.isdir(full):
            full = os.path.join(full, "index.html")
        if not os.path.isfile(full):
            self._send_error(404, "not found")
            return
        ext = os.path.splitext(full)[1].lower()
        with open(full, "rb") as fh:
            body = fh.read()
        self._send(200, body, _CONTENT_TYPES.get(ext, "application/octet-stream"))


class WorkbenchServer(ThreadingHTTPServer):
    daemon_threads = True

    def __init__(self, address: tuple[str, int], state: WorkbenchState) -> None:
        super().__init__(address, WorkbenchHandler)
        self.state = state


def parse_bind(bind: str) -> tuple[str, int]:
    host, sep, port_text = bind.rpartition(":")
    if not sep or not host:
        raise InputError(f"bind address must look like host:port, got {bind!r}")
    try:
        port = int(port_text)
    except ValueError:
        raise InputError(f"bind port must be an integer, got {port_text!r}") from None
    return host, port


def build_server(
    bind: str = DEFAULT_BIND,
    store_path: str | None = None,
    config_path: str | None = None,
    corpus_root: str | None = None,
    ui_dir: str | None = None,
) -> WorkbenchServer:
    state = WorkbenchState(store_path, config_path, corpus_root, ui_dir)
    return WorkbenchServer(parse_bind(bind), state)


def serve(
    bind: str = DEFAULT_BIND,
    store_path: str | None = None,
    config_path: str | None = None,
    corpus_root: str | None = None,
    ui_dir: str | None = None,
):
    from .cli import EXIT_OK, CommandResult

    server = build_server(bind, store_path, config_path, corpus_root, ui_dir)
    host, port = server.server_address[0], server.server_address[1]
    print(f"serving on http://{host}:{port}/ (interrupt to stop)")
    try:
        server.serve_forever()
    except KeyboardInterrupt:
        pass
    finally:
        server.server_close()
    return CommandResult(EXIT_OK, "")
