"""JSON HTTP service exposing locus, trace, fit and prove.

Stateless: every response is a pure function of the request.  Jobs run on a
worker pool bounded at the host's parallelism with FIFO queueing; each job
carries a cancellation deadline measured from request receipt, so queue time
counts against it.  Responses echo a sha256 hash of the raw request body so
clients can drop stale answers.
"""

from __future__ import annotations

import asyncio
import hashlib
import json
import os
import time
from concurrent.futures import ThreadPoolExecutor

from fastapi import FastAPI, Request, Response
from fastapi.middleware.cors import CORSMiddleware

from .errors import Cancelled, LocusForgeError, ValidationError
from .jobs import DEFAULT_DEADLINE_MS, RUNNERS, canonical_json

MAX_DEADLINE_MS = 3_600_000


class _BadRequest(Exception):
    def __init__(self, message: str):
        self.message = message


def _json_response(obj, status: int = 200) -> Response:
    return Response(content=canonical_json(obj), status_code=status,
                    media_type="application/json")


def _error_response(status: int, code: str, message: str) -> Response:
    return _json_response({"error": {"code": code, "message": message}}, status)


def _parse_job_request(raw: bytes, route_kind: str) -> tuple[dict, int]:
    try:
        body = json.loads(raw)
    except json.JSONDecodeError as exc:
        raise _BadRequest(f"body is not valid JSON: {exc}") from exc
    if not isinstance(body, dict):
        raise _BadRequest("body must be a JSON object")
    kind = body.get("kind", route_kind)
    if kind != route_kind:
        raise _BadRequest(f"kind {kind!r} does not match route /{route_kind}")
    if "payload" not in body:
        raise _BadRequest("missing 'payload'")
    deadline_ms = body.get("deadline_ms", DEFAULT_DEADLINE_MS)
    if not isinstance(deadline_ms, int) or not 1 <= deadline_ms <= MAX_DEADLINE_MS:
        raise _BadRequest(
            f"deadline_ms must be an integer in [1, {MAX_DEADLINE_MS}]")
    return body["payload"], deadline_ms


def _execute(kind: str, payload: dict, expires_at: float) -> dict:
    # queue time counts against the deadline
    remaining_ms = int((expires_at - time.monotonic()) * 1000)
    if remaining_ms < 1:
        raise Cancelled("deadline exceeded while queued")
    return RUNNERS[kind](payload, remaining_ms)


def create_app() -> FastAPI:
    app = FastAPI(title="locusforge", docs_url=None, redoc_url=None)
    app.add_middleware(
        CORSMiddleware, allow_origins=["*"], allow_methods=["*"],
        allow_headers=["*"])
    pool = ThreadPoolExecutor(max_workers=os.cpu_count() or 2)
    app.state.pool = pool

    @app.get("/health")
    async def health() -> Response:
        return _json_response({"status": "ok"})

    def make_endpoint(kind: str):
        async def endpoint(request: Request) -> Response:
            raw = await request.body()
            request_hash = hashlib.sha256(raw).hexdigest()
            try:
                payload, deadline_ms = _parse_job_request(raw, kind)
            except _BadRequest as exc:
                return _error_response(400, "validation", exc.message)
            expires_at = time.monotonic() + deadline_ms / 1000.0
            loop = asyncio.get_running_loop()
            try:
                result = await loop.run_in_executor(
                    pool, _execute, kind, payload, expires_at)
            except Cancelled as exc:
                return _error_response(408, "cancelled", str(exc))
            except (ValidationError, LocusForgeError) as exc:
                return _error_response(400, "validation", str(exc))
            except Exception as exc:  # pragma: no cover - defensive
                return _error_response(500, "internal", str(exc))
            return _json_response(
                {"kind": kind, "request_hash": request_hash, "result": result})

        endpoint.__name__ = f"post_{kind}"
        return endpoint

    for kind in RUNNERS:
        app.post(f"/{kind}")(make_endpoint(kind))

    ui_dir = os.environ.get("LOCUSFORGE_UI_DIR")
    if ui_dir and os.path.isdir(ui_dir):
        from fastapi.staticfiles import StaticFiles
        app.mount("/ui", StaticFiles(directory=ui_dir, html=True), name="ui")

    return app


app = create_app()


def serve(host: str = "127.0.0.1", port: int | None = None) -> None:
    """Run the service with uvicorn (blocks)."""
    import uvicorn

    if port is None:
        port = int(os.environ.get("LOCUSFORGE_PORT", "8765"))
    uvicorn.run(app, host=host, port=port, log_level="info")
