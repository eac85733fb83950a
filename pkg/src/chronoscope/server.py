"""Read-only HTTP JSON API over a QueryEngine.

Every endpoint is GET and answers with the same payload dict the CLI
prints, so the two front doors cannot drift apart. Query parameters are
parsed by hand: unknown or repeated parameters are a 400 naming the
parameter, not a silent ignore, and malformed values are a 400 rather
than a framework-shaped validation response.

Errors: 400 bad parameters or data constraints, 404 unknown entity/group/
series with candidate suggestions, 500 for anything unexpected (always a
JSON body, never an empty 200).
"""

from __future__ import annotations

import logging

from fastapi import FastAPI, Request
from fastapi.middleware.cors import CORSMiddleware
from fastapi.responses import JSONResponse

from .engine import QueryEngine
from .errors import ChronoscopeError, DataError, UnknownNameError

log = logging.getLogger(__name__)


class _Params:
    """One request's query parameters, checked against an allow-list."""

    def __init__(self, request: Request, allowed: tuple[str, ...]):
        items = request.query_params.multi_items()
        unknown = sorted({k for k, _ in items if k not in allowed})
        if unknown:
            raise DataError(f"unknown query parameter(s): {', '.join(unknown)}")
        seen: set[str] = set()
        self._values: dict[str, str] = {}
        for key, value in items:
            if key in seen:
                raise DataError(f"query parameter {key!r} given more than once")
            seen.add(key)
            self._values[key] = value

    def get(self, name: str) -> str | None:
        return self._values.get(name)

    def require(self, name: str) -> str:
        value = self._values.get(name)
        if value is None or value == "":
            raise DataError(f"missing required query parameter {name!r}")
        return value

    def get_int(self, name: str) -> int | None:
        raw = self._values.get(name)
        if raw is None or raw == "":
            return None
        try:
            return int(raw)
        except ValueError:
            raise DataError(f"query parameter {name!r} must be an integer, got {raw!r}")

    def csv_list(self, name: str) -> list[str]:
        raw = self.require(name)
        values = [v.strip() for v in raw.split(",") if v.strip()]
        if not values:
            raise DataError(f"query parameter {name!r} is empty")
        return values


def create_app(engine: QueryEngine) -> FastAPI:
    app = FastAPI(title="chronoscope", docs_url=None, redoc_url=None, openapi_url=None)
    app.add_middleware(
        CORSMiddleware,
        allow_origins=[engine.config.cors_origin],
        allow_methods=["GET"],
        allow_headers=["*"],
    )

    @app.exception_handler(UnknownNameError)
    async def _unknown_name(request: Request, exc: UnknownNameError):
        return JSONResponse(
            status_code=404,
            content={
                "error": str(exc),
                "what": exc.what,
                "name": exc.name,
                "candidates": exc.candidates,
            },
        )

    @app.exception_handler(ChronoscopeError)
    async def _bad_request(request: Request, exc: ChronoscopeError):
        return JSONResponse(status_code=400, content={"error": str(exc)})

    @app.exception_handler(Exception)
    async def _internal(request: Request, exc: Exception):
        log.exception("internal error on %s", request.url)
        return JSONResponse(
            status_code=500,
            content={"error": f"internal error: {type(exc).__name__}"},
        )

    @app.get("/api/trend")
    async def api_trend(request: Request):
        p = _Params(request, ("terms", "from", "to", "mode"))
        return engine.trend(
            terms=p.csv_list("terms"),
            start=p.get_int("from"),
            end=p.get_int("to"),
            mode=p.get("mode"),
        )

    @app.get("/api/cooccur")
    async def api_cooccur(request: Request):
        p = _Params(request, ("a", "b", "from", "to"))
        return engine.cooccur(
            p.require("a"), p.require("b"), start=p.get_int("from"), end=p.get_int("to")
        )

    @app.get("/api/group-cooccur")
    async def api_group_cooccur(request: Request):
        p = _Params(request, ("anchor", "group", "region", "from", "to"))
        return engine.group_cooccur(
            p.require("group"),
            p.require("anchor"),
            start=p.get_int("from"),
            end=p.get_int("to"),
            region=p.get("region"),
        )

    @app.get("/api/sentiment")
    async def api_sentiment(request: Request):
        p = _Params(request, ("from", "to", "view"))
        return engine.sentiment(
            view=p.get("view") or "percent",
            start=p.get_int("from"),
            end=p.get_int("to"),
        )

    @app.get("/api/external")
    async def api_external(request: Request):
        p = _Params(request, ("name", "transform", "from", "to"))
        return engine.external(
            p.require("name"),
            transform=p.get("transform"),
            start=p.get_int("from"),
            end=p.get_int("to"),
        )

    @app.get("/api/top")
    async def api_top(request: Request):
        p = _Params(request, ("kind", "from", "to", "k"))
        k = p.get_int("k")
        return engine.top(
            kind=p.require("kind"),
            start=p.get_int("from"),
            end=p.get_int("to"),
            k=10 if k is None else k,
        )

    @app.get("/api/map")
    async def api_map(request: Request):
        p = _Params(request, ("from", "to", "k"))
        k = p.get_int("k")
        return engine.map_payload(
            start=p.get_int("from"),
            end=p.get_int("to"),
            k=10 if k is None else k,
        )

    @app.get("/api/meta")
    async def api_meta(request: Request):
        _Params(request, ())
        return engine.meta()

    return app


def run_server(engine: QueryEngine) -> None:
    """Serve until interrupted; in-flight requests finish on shutdown."""
    import uvicorn

    uvicorn.run(
        create_app(engine),
        host=engine.config.host,
        port=engine.config.port,
        log_level="info",
    )
