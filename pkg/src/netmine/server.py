"""Local JSON API behind `netmine serve`, consumed by the web UI.

One network is active at a time; uploading replaces it.  Analyses run on
the snapshot current at request time.  Requests whose estimated cost
exceeds the async threshold come back as 202 + job id, polled at
/api/jobs/<id>.  docs/api.md documents every endpoint and schema.
"""

from __future__ import annotations

import json
import threading
import uuid
from concurrent.futures import ThreadPoolExecutor
from http.server import BaseHTTPRequestHandler, ThreadingHTTPServer
from pathlib import Path

import numpy as np

from .core import MembershipMatrix, NodeScore, Partition, ScoreMatrix
from .errors import NetmineError, ParseError, UnknownFormatError
from .io import detect_format, read_network, read_network_file
from .layout import LayoutPositions, StyleBinding, render_svg
from .registry import COMMUNITIES, LAYOUTS, LINKPRED, METRICS

_FALLBACK_PAGE = """<!doctype html>
<html><head><title>netmine</title></head>
<body><h1>netmine server</h1>
<p>The web UI bundle is not installed. The JSON API is live under /api/.</p>
</body></html>
"""

_COST_SCALE = 2e7  # crude "operations per second" for the async estimate


class ServerState:
    """The single active network plus positions, results, and jobs."""

    def __init__(self, network_dir=".", ui_dir=None, async_threshold=1.0):
        self.lock = threading.Lock()
        self.network = None
        self.positions = None
        self.network_dir = Path(network_dir)
        self.ui_dir = Path(ui_dir) if ui_dir else None
        self.async_threshold = async_threshold
        self.jobs = {}
        self.executor = ThreadPoolExecutor(max_workers=2)

    def snapshot(self):
        with self.lock:
            return self.network

    def replace_network(self, network):
        with self.lock:
            self.network = network
            self.positions = None

    def set_positions(self, coords):
        with self.lock:
            self.positions = coords

    def get_positions(self):
        with self.lock:
            return None if self.positions is None else list(self.positions)

    def submit_job(self, fn):
        job_id = uuid.uuid4().hex[:12]
        self.jobs[job_id] = {"status": "running"}

        def run():
            try:
                result = fn()
                self.jobs[job_id] = {"status": "done", "result": result}
            except Exception as error:  # noqa: BLE001 - reported via the job record
                self.jobs[job_id] = {"status": "error", "error": str(error)}

        self.executor.submit(run)
        return job_id


class ApiError(Exception):
    def __init__(self, status, message):
        super().__init__(message)
        self.status = status


def _network_payload(net):
    nodes = []
    for u in range(net.node_count):
        entry = {"id": u}
        for name, column in net.node_attributes.items():
            entry[name] = column[u]
        nodes.append(entry)
    links = []
    for index in range(net.link_count):
        u, v = net.link_ends(index)
        entry = {"source": u, "target": v}
        for name, column in net.link_attributes.items():
            entry[name] = column[index]
        links.append(entry)
    return {"directed": net.directed, "nodes": nodes, "links": links}


def _result_payload(kind, result, net):
    if kind == "node":
        return {"values": result.values.tolist(), "converged": result.converged}
    if kind == "hub_authority":
        hub, authority = result
        return {"hub": hub.values.tolist(), "authority": authority.values.tolist()}
    if kind == "link_list":
        return {"pairs": [[u, v, result.get(u, v)] for u, v in net.links()]}
    if kind == "record":
        return dict(result)
    if kind == "partition":
        partition, dendrogram = result if isinstance(result, tuple) else (result, None)
        payload = {"labels": partition.labels, "k": partition.k}
        if dendrogram is not None:
            payload["merges"] = [[a, b, h] for a, b, h in dendrogram.merges]
        return payload
    if kind == "membership":
        return {"memberships": result.normalized().tolist(), "k": result.k}
    if kind == "positions":
        return {"positions": result.coords.tolist()}
    if kind == "pairs":
        top = [[u, v, value] for u, v, value in result.top_pairs(None)
               if not net.has_link(u, v)]
        return {"pairs": top}
    raise ApiError(500, f"unmapped result kind {kind!r}")


def _sanitize(obj):
    """JSON-safe copy: numpy scalars to floats, non-finite to strings."""
    if isinstance(obj, dict):
        return {k: _sanitize(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_sanitize(v) for v in obj]
    if isinstance(obj, (np.floating, np.integer)):
        obj = obj.item()
    if isinstance(obj, float) and not np.isfinite(obj):
        return "Infinity" if obj > 0 else ("-Infinity" if obj < 0 else "NaN")
    return obj


class Handler(BaseHTTPRequestHandler):
    state: ServerState  # injected by serve()

    protocol_version = "HTTP/1.1"

    def log_message(self, *args):  # silent by default; tests need clean output
        pass

    # -- plumbing ------------------------------------------------------

    def _send_json(self, status, payload):
        body = json.dumps(_sanitize(payload)).encode("utf-8")
        self.send_response(status)
        self.send_header("Content-Type", "application/json")
        self.send_header("Content-Length", str(len(body)))
        self.end_headers()
        self.wfile.write(body)

    def _send_text(self, status, text, content_type="text/html; charset=utf-8"):
        body = text.encode("utf-8")
        self.send_response(status)
        self.send_header("Content-Type", content_type)
        self.send_header("Content-Length", str(len(body)))
        self.end_headers()
        self.wfile.write(body)

    def _read_body(self):
        length = int(self.headers.get("Content-Length") or 0)
        raw = self.rfile.read(length) if length else b""
        if not raw:
            return {}
        try:
            return json.loads(raw.decode("utf-8"))
        except (json.JSONDecodeError, UnicodeDecodeError) as error:
            raise ApiError(400, f"malformed JSON body: {error}") from None

    def _require_network(self):
        net = self.state.snapshot()
        if net is None:
            raise ApiError(404, "no-network: upload one with POST /api/network")
        return net

    def _maybe_async(self, algorithm, net, compute):
        estimate = algorithm.cost(net.node_count, net.link_count) / _COST_SCALE
        if estimate > self.state.async_threshold:
            job_id = self.state.submit_job(compute)
            self._send_json(202, {"job": job_id})
            return None
        return compute()

    # -- dispatch ------------------------------------------------------

    def do_GET(self):
        try:
            self._get(self.path)
        except ApiError as error:
            self._send_json(error.status, {"error": str(error)})
        except Exception as error:  # noqa: BLE001
            self._send_json(500, {"error": str(error)})

    def do_POST(self):
        try:
            self._post(self.path)
        except ApiError as error:
            self._send_json(error.status, {"error": str(error)})
        except NetmineError as error:
            self._send_json(500, {"error": str(error)})
        except Exception as error:  # noqa: BLE001
            self._send_json(500, {"error": str(error)})

    def _get(self, path):
        if path == "/api/network":
            self._send_json(200, _network_payload(self._require_network()))
        elif path == "/api/positions":
            positions = self.state.get_positions()
            if positions is None:
                raise ApiError(404, "no positions stored")
            self._send_json(200, {"positions": positions})
        elif path.startswith("/api/jobs/"):
            job = self.state.jobs.get(path.rsplit("/", 1)[-1])
            if job is None:
                raise ApiError(404, "unknown job id")
            self._send_json(200, job)
        elif path == "/api/algorithms":
            self._send_json(200, {
                "metrics": sorted(METRICS),
                "communities": sorted(COMMUNITIES),
                "linkpred": sorted(LINKPRED),
                "layouts": sorted(LAYOUTS),
            })
        elif path == "/" or path == "/index.html" or not path.startswith("/api/"):
            self._serve_static(path)
        else:
            raise ApiError(404, f"unknown endpoint {path}")

    def _serve_static(self, path):
        if self.state.ui_dir is None:
            self._send_text(200, _FALLBACK_PAGE)
            return
        name = "index.html" if path in ("/", "") else path.lstrip("/")
        target = (self.state.ui_dir / name).resolve()
        if not str(target).startswith(str(self.state.ui_dir.resolve())) or not target.is_file():
            if path in ("/", "/index.html"):
                self._send_text(200, _FALLBACK_PAGE)
            else:
                raise ApiError(404, f"no such file {path}")
            return
        content_types = {".html": "text/html; charset=utf-8",
                         ".js": "text/javascript; charset=utf-8",
                         ".mjs": "text/javascript; charset=utf-8",
                         ".css": "text/css; charset=utf-8",
                         ".svg": "image/svg+xml", ".json": "application/json",
                         ".map": "application/json"}
        self._send_text(200, target.read_text(encoding="utf-8"),
                        content_types.get(target.suffix, "text/plain; charset=utf-8"))

    def _post(self, path):
        if path == "/api/network":
            self._post_network()
        elif path == "/api/positions":
            self._post_positions()
        elif path in ("/api/metric", "/api/communities", "/api/linkpred", "/api/layout"):
            registries = {"/api/metric": METRICS, "/api/communities": COMMUNITIES,
                          "/api/linkpred": LINKPRED, "/api/layout": LAYOUTS}
            self._post_analysis(registries[path])
        elif path == "/api/render":
            self._post_render()
        else:
            raise ApiError(404, f"unknown endpoint {path}")

    def _post_network(self):
        body = self._read_body()
        if "content" in body:
            content = body["content"]
            if not isinstance(content, str):
                raise ApiError(400, "'content' must be a string")
            format_id = body.get("format")
            try:
                if format_id is None:
                    format_id = detect_format(content)
                net = read_network(content, format_id, directed=body.get("directed"))
            except (ParseError, UnknownFormatError) as error:
                raise ApiError(400, str(error)) from None
        elif "path" in body:
            target = (self.state.network_dir / str(body["path"])).resolve()
            if not str(target).startswith(str(self.state.network_dir.resolve())):
                raise ApiError(400, "path escapes the serving directory")
            if not target.is_file():
                raise ApiError(404, f"no such network file {body['path']!r}")
            try:
                net = read_network_file(target, body.get("format"),
                                        directed=body.get("directed"))
            except (ParseError, UnknownFormatError) as error:
                raise ApiError(400, str(error)) from None
        else:
            raise ApiError(400, "body must carry 'content' or 'path'")
        self.state.replace_network(net)
        self._send_json(200, {"nodes": net.node_count, "links": net.link_count,
                              "directed": net.directed})

    def _post_positions(self):
        body = self._read_body()
        net = self._require_network()
        positions = body.get("positions")
        if (not isinstance(positions, list) or len(positions) != net.node_count
                or not all(isinstance(p, list) and len(p) == 2 for p in positions)):
            raise ApiError(400, "'positions' must be an [x, y] pair per node")
        self.state.set_positions([[float(x), float(y)] for x, y in positions])
        self._send_json(200, {"stored": len(positions)})

    def _post_analysis(self, registry):
        body = self._read_body()
        name = body.get("name")
        if name not in registry:
            raise ApiError(404, f"unknown algorithm {name!r}")
        algorithm = registry[name]
        net = self._require_network()
        params = body.get("params") or {}
        if not isinstance(params, dict):
            raise ApiError(400, "'params' must be an object")
        top = body.get("top")

        def compute():
            result = algorithm.run(net, params)
            payload = _result_payload(algorithm.kind, result, net)
            if algorithm.kind == "pairs" and top:
                payload["pairs"] = payload["pairs"][:int(top)]
            if algorithm.kind == "positions":
                self.state.set_positions([list(map(float, xy)) for xy in result.coords])
            return payload

        try:
            result = self._maybe_async(algorithm, net, compute)
        except NetmineError as error:
            raise ApiError(500, str(error)) from None
        if result is not None:
            self._send_json(200, result)

    def _post_render(self):
        body = self._read_body()
        net = self._require_network()
        stored = self.state.get_positions()
        if body.get("positions"):
            coords = body["positions"]
        elif stored is not None:
            coords = stored
        else:
            raise ApiError(400, "no positions: run a layout or POST /api/positions first")
        if len(coords) != net.node_count:
            raise ApiError(400, "positions do not match the current network")
        styles = []
        for entry in body.get("styles") or []:
            channel = entry.get("channel")
            source = entry.get("source")
            if isinstance(source, dict):
                if "values" in source:
                    source = NodeScore(net, np.asarray(source["values"], dtype=float))
                else:
                    raise ApiError(400, "style source object needs 'values'")
            elif isinstance(source, str) and source.startswith("metric:"):
                name = source.split(":", 1)[1]
                if name not in METRICS or METRICS[name].kind != "node":
                    raise ApiError(404, f"unknown metric {name!r}")
                source = METRICS[name].run(net)
            try:
                styles.append(StyleBinding(channel, source,
                                           tuple(entry["range"]) if entry.get("range") else None))
            except ValueError as error:
                raise ApiError(400, str(error)) from None
        positions = LayoutPositions(net, np.asarray(coords, dtype=float))
        try:
            svg = render_svg(net, positions, styles,
                             width=int(body.get("width", 800)),
                             height=int(body.get("height", 800)))
        except (NetmineError, ValueError, KeyError) as error:
            raise ApiError(400, str(error)) from None
        self._send_text(200, svg, content_type="image/svg+xml")


def make_server(port=0, network_dir=".", network_file=None, ui_dir=None, async_threshold=1.0):
    """Build (but do not run) the HTTP server; returns (server, state)."""
    state = ServerState(network_dir=network_dir, ui_dir=ui_dir,
                        async_threshold=async_threshold)
    if network_file:
        state.replace_network(read_network_file(network_file))
    handler = type("BoundHandler", (Handler,), {"state": state})
    server = ThreadingHTTPServer(("127.0.0.1", port), handler)
    return server, state


def serve(port=8750, network_dir=".", network_file=None, ui_dir=None, async_threshold=1.0):
    """Run the JSON API server until interrupted."""
    if ui_dir is None:
        bundled = Path(network_dir) / "frontend" / "dist"
        ui_dir = bundled if bundled.is_dir() else None
    server, _state = make_server(port, network_dir, network_file, ui_dir, async_threshold)
    host, bound_port = server.server_address
    print(f"netmine serve: http://{host}:{bound_port}/ (Ctrl-C stops)", flush=True)
    try:
        server.serve_forever()
    except KeyboardInterrupt:
        pass
    finally:
        server.server_close()
