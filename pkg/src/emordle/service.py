"""Local HTTP service exposing the engine to the authoring UI.

All GET endpoints are pure functions of their query string, so responses
for identical URLs are byte-identical and safely cacheable.  The only state
is the uploaded word-list store: an in-memory map keyed by content hash,
optionally persisted as CSV files in ``EMORDLE_DATA_DIR`` so sessions
survive restarts.

GIF rendering, the one expensive path, is funneled through a small worker
pool with a per-request timeout so it cannot starve the interactive
descriptor endpoint.
"""

from __future__ import annotations

import hashlib
import os
import threading
from concurrent.futures import ThreadPoolExecutor, TimeoutError as FutureTimeout

from fastapi import FastAPI, Request, Response
from fastapi.responses import JSONResponse
from fastapi.staticfiles import StaticFiles

from .descriptor_io import export_descriptor, export_layout
from .errors import EmordleError, SchemaError, UnknownScheme
from .gif import encode_gif
from .layout import Dimensions, compute_layout
from .render import render_animation
from .schemes import EmordleSpec, SchemeRegistry
from .style import PALETTES, RenderStyle, get_palette
from .textmetrics import list_fonts, resolve_font_path
from .wordlist import WordList, normalize_weights, parse_wordle_csv, serialize_wordle_csv

GIF_WORKERS = 2
GIF_TIMEOUT_S = 60.0


class ApiError(Exception):
    def __init__(self, status: int, code: str, message: str, field: str | None = None):
        self.status = status
        self.payload = {"code": code, "message": message, "field": field}
        super().__init__(message)


class WordListStore:
    """Content-addressed word lists; optionally persisted as CSV files."""

    def __init__(self, data_dir: str | None = None):
        self._lock = threading.Lock()
        self._lists: dict[str, WordList] = {}
        self._dir = data_dir
        if data_dir:
            os.makedirs(data_dir, exist_ok=True)
            for name in sorted(os.listdir(data_dir)):
                if name.endswith(".csv"):
                    try:
                        with open(os.path.join(data_dir, name), "rb") as f:
                            words = parse_wordle_csv(f.read(), source_name=name[:-4])
                    except EmordleError:
                        continue
                    self._lists[name[:-4]] = words

    @staticmethod
    def _key(raw: bytes) -> str:
        return hashlib.sha256(raw).hexdigest()[:16]

    def put(self, raw: bytes) -> tuple[str, WordList]:
        words = parse_wordle_csv(raw)
        key = self._key(serialize_wordle_csv(words).encode("utf-8"))
        with self._lock:
            self._lists[key] = words
            if self._dir:
                path = os.path.join(self._dir, f"{key}.csv")
                if not os.path.exists(path):
                    with open(path, "w", encoding="utf-8") as f:
                        f.write(serialize_wordle_csv(words))
        return key, words

    def get(self, key: str) -> WordList:
        with self._lock:
            words = self._lists.get(key)
        if words is None:
            raise ApiError(404, "unknown_id", f"no word list with id {key!r}", "id")
        return words


def _positive_int(value: str | None, default: int, field: str) -> int:
    if value is None:
        return default
    try:
        return int(value)
    except ValueError:
        raise ApiError(400, "invalid_parameter", f"{field} must be an integer", field) from None


def _float_param(value: str | None, default: float, field: str) -> float:
    if value is None:
        return default
    try:
        return float(value)
    except ValueError:
        raise ApiError(400, "invalid_parameter", f"{field} must be a number", field) from None


def create_app(data_dir: str | None = None, frontend_dir: str | None = None) -> FastAPI:
    app = FastAPI(title="emordle service", docs_url=None, redoc_url=None)
    store = WordListStore(data_dir or os.environ.get("EMORDLE_DATA_DIR"))
    registry = SchemeRegistry()
    gif_pool = ThreadPoolExecutor(max_workers=GIF_WORKERS, thread_name_prefix="gif")

    @app.exception_handler(ApiError)
    async def _api_error(_req: Request, exc: ApiError):
        return JSONResponse(status_code=exc.status, content=exc.payload)

    def _dims(request: Request) -> Dimensions:
        q = request.query_params
        width = _positive_int(q.get("width"), 800, "width")
        height = _positive_int(q.get("height"), 600, "height")
        try:
            return Dimensions(width, height)
        except ValueError as exc:
            raise ApiError(400, "invalid_parameter", str(exc), "width") from exc

    def _spec(request: Request) -> EmordleSpec:
        q = request.query_params
        scheme = q.get("scheme")
        if not scheme:
            raise ApiError(400, "missing_parameter", "scheme is required", "scheme")
        seed = _positive_int(q.get("seed"), 0, "seed")
        if not 0 <= seed < 2 ** 64:
            raise ApiError(400, "invalid_parameter", "seed must be an unsigned 64-bit integer", "seed")
        return EmordleSpec(
            scheme,
            entropy=_float_param(q.get("entropy"), 0.5, "entropy"),
            speed=_float_param(q.get("speed"), 0.5, "speed"),
            seed=seed,
            palette=q.get("palette", "mono"),
            typeface=q.get("font", "default"),
        )

    def _layout_for(request: Request):
        q = request.query_params
        key = q.get("id")
        if not key:
            raise ApiError(400, "missing_parameter", "id is required", "id")
        words = store.get(key)
        seed = _positive_int(q.get("seed"), 0, "seed")
        typeface = q.get("font", "default")
        try:
            return compute_layout(words, _dims(request), seed=seed, typeface=typeface)
        except EmordleError as exc:
            raise ApiError(400, "layout_error", str(exc), "id") from exc

    @app.post("/api/wordlist")
    async def upload_wordlist(request: Request):
        raw = await request.body()
        try:
            key, words = store.put(raw)
        except EmordleError as exc:
            raise ApiError(400, "parse_error", str(exc), "body") from exc
        normalized = normalize_weights(words)
        return {
            "id": key,
            "word_count": len(words),
            "entries": [{"text": e.text, "weight": e.weight} for e in normalized.entries],
        }

    @app.get("/api/schemes")
    def schemes():
        return {"schemes": registry.list_schemes()}

    @app.get("/api/palettes")
    def palettes():
        return {"palettes": [
            {"id": p.id, "background": list(p.background),
             "ramp": [list(c) for c in p.ramp], "shift_target": list(p.shift_target)}
            for p in PALETTES.values()
        ]}

    @app.get("/api/fonts")
    def fonts():
        return {"fonts": [{"id": fid, "file": os.path.basename(resolve_font_path(fid))}
                          for fid in list_fonts()]}

    @app.get("/api/layout")
    def layout_endpoint(request: Request):
        layout = _layout_for(request)
        return Response(content=export_layout(layout), media_type="application/json")

    def _descriptor_bytes(request: Request) -> bytes:
        spec = _spec(request)
        layout = _layout_for(request)
        try:
            desc = registry.instantiate(layout, spec)
        except UnknownScheme as exc:
            raise ApiError(400, "unknown_scheme", str(exc), "scheme") from exc
        return export_descriptor(desc, layout)

    @app.get("/api/descriptor")
    def descriptor_endpoint(request: Request):
        return Response(content=_descriptor_bytes(request), media_type="application/json")

    @app.get("/api/gif")
    def gif_endpoint(request: Request):
        spec = _spec(request)
        layout = _layout_for(request)
        q = request.query_params
        fps = _positive_int(q.get("fps"), 20, "fps")
        try:
            style = RenderStyle(palette=get_palette(spec.palette),
                                typeface=spec.typeface, fps=fps)
        except ValueError as exc:
            raise ApiError(400, "invalid_parameter", str(exc), "fps") from exc
        try:
            desc = registry.instantiate(layout, spec)
        except UnknownScheme as exc:
            raise ApiError(400, "unknown_scheme", str(exc), "scheme") from exc

        def job() -> bytes:
            frames = render_animation(desc, layout, style, workers=1)
            return encode_gif(frames, style.fps)

        future = gif_pool.submit(job)
        try:
            gif = future.result(timeout=GIF_TIMEOUT_S)
        except FutureTimeout:
            future.cancel()
            raise ApiError(500, "render_timeout",
                           f"GIF render exceeded {GIF_TIMEOUT_S:.0f} s", None) from None
        except EmordleError as exc:
            raise ApiError(500, "render_error", "internal render failure", None) from exc
        return Response(content=gif, media_type="image/gif")

    if frontend_dir is None:
        bundled = os.path.join(os.path.dirname(os.path.dirname(os.path.dirname(
            os.path.abspath(__file__)))), "frontend", "dist")
        frontend_dir = bundled if os.path.isdir(bundled) else None
    if frontend_dir:
        app.mount("/", StaticFiles(directory=frontend_dir, html=True), name="ui")

    return app
