"""Read-only HTTP facade for the visualizer and other clients.

Endpoints (all GET, JSON out, UTF-8):

- /analyze?form=...   readings of a surface form with related words
- /inflect?lemma=...&features=...   surface forms for a lemma + bundle
- /verbs              the lexicon with honorific links

Responses carry apiVersion and status (ok | not_found | error). The
service holds an immutable index, so concurrent requests need no locking.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from http.server import BaseHTTPRequestHandler, ThreadingHTTPServer
from urllib.parse import parse_qs, urlparse

from .analyze import AnalysisIndex, analyze
from .errors import KatsuyoError, UnknownLemma
from .features import parse_bundle
from .inflect import inflect_lexical
from .lexicon import Lexicon
from .pipeline import PipelineConfig, build_runtime
from .rules import RuleInventory

API_VERSION = "1"


@dataclass
class AppState:
    lexicon: Lexicon
    inventory: RuleInventory
    index: AnalysisIndex


def _analyze_payload(state: AppState, form: str) -> dict | None:
    result = analyze(state.index, form, state.lexicon)
    if not result.found:
        return None
    readings = []
    for reading, related in zip(result.readings, result.related):
        readings.append(
            {
                "lemma": reading.lemma,
                "labels": reading.bundle.text,
                "confidence": reading.confidence,
                "related": [{"form": f, "confidence": c} for f, c in related],
            }
        )
    return {"form": form, "readings": readings}


def _inflect_payload(state: AppState, lemma: str, features: str) -> dict | None:
    bundle = parse_bundle(features)
    try:
        matches = inflect_lexical(lemma, bundle, state.lexicon, state.inventory)
    except UnknownLemma:
        return None
    if not matches:
        return None
    return {
        "lemma": lemma,
        "features": bundle.text,
        "forms": [{"lemma": m_lemma, "form": form, "ruleId": rule_id}
                  for m_lemma, form, rule_id in matches],
    }


def _verbs_payload(state: AppState) -> dict:
    verbs = []
    for entry in state.lexicon.entries:
        verbs.append(
            {
                "lemma": entry.lemma,
                "romanization": entry.romanization,
                "gloss": entry.gloss,
                "class": entry.conj_class.value,
                "politeness": entry.politeness.value,
                "respectful": list(entry.respectful),
                "humble": list(entry.humble),
            }
        )
    return {"verbs": verbs, "count": len(verbs)}


class ApiHandler(BaseHTTPRequestHandler):
    state: AppState  # assigned by make_handler

    def log_message(self, *args):  # quiet by default
        pass

    def _send(self, http_status: int, body: dict) -> None:
        payload = dict(body)
        payload["apiVersion"] = API_VERSION
        data = json.dumps(payload, ensure_ascii=False).encode("utf-8")
        self.send_response(http_status)
        self.send_header("Content-Type", "application/json; charset=utf-8")
        self.send_header("Content-Length", str(len(data)))
        self.send_header("Access-Control-Allow-Origin", "*")
        self.end_headers()
        self.wfile.write(data)

    def _ok(self, payload: dict) -> None:
        self._send(200, {"status": "ok", "payload": payload})

    def _not_found(self, message: str) -> None:
        self._send(404, {"status": "not_found", "message": message})

    def _error(self, message: str, http_status: int = 400) -> None:
        self._send(http_status, {"status": "error", "message": message})

    def do_GET(self):  # noqa: N802 (http.server API)
        url = urlparse(self.path)
        params = {k: v[0] for k, v in parse_qs(url.query).items()}
        try:
            if url.path == "/analyze":
                form = params.get("form", "").strip()
                if not form:
                    return self._error("missing form parameter")
                payload = _analyze_payload(self.state, form)
                if payload is None:
                    return self._not_found(f"form not in dataset: {form}")
                return self._ok(payload)
            if url.path == "/inflect":
                lemma = params.get("lemma", "").strip()
                features = params.get("features", "").strip()
                if not lemma or not features:
                    return self._error("missing lemma or features parameter")
                payload = _inflect_payload(self.state, lemma, features)
                if payload is None:
                    return self._not_found(f"no forms for {lemma} with {features}")
                return self._ok(payload)
            if url.path == "/verbs":
                return self._ok(_verbs_payload(self.state))
            return self._not_found(f"unknown endpoint: {url.path}")
        except KatsuyoError as exc:
            return self._error(str(exc))


def make_handler(state: AppState) -> type[ApiHandler]:
    return type("BoundApiHandler", (ApiHandler,), {"state": state})


def make_server(config: PipelineConfig, host: str = "127.0.0.1", port: int = 8765) -> ThreadingHTTPServer:
    data, index = build_runtime(config)
    state = AppState(data.lexicon, data.inventory, index)
    return ThreadingHTTPServer((host, port), make_handler(state))


def serve(config: PipelineConfig, host: str = "127.0.0.1", port: int = 8765) -> None:
    server = make_server(config, host, port)
    actual_port = server.server_address[1]
    print(f"serving on http://{host}:{actual_port}/ (endpoints: /analyze /inflect /verbs)")
    try:
        server.serve_forever()
    except KeyboardInterrupt:
        pass
    finally:
        server.server_close()
