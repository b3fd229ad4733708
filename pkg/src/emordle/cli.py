"""Command-line entry points.

    emordle generate      one animation -> .gif or .descriptor
    emordle stimuli-grid  the 3x3 speed/entropy sweep per scheme, one shared layout
    emordle serve         local HTTP service for the authoring UI

Exit codes: 0 success, 2 input/validation errors, 3 render/encode errors.
Environment overrides: EMORDLE_FONT_DIR, EMORDLE_DATA_DIR, EMORDLE_PORT.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from .descriptor_io import export_descriptor
from .errors import (DimensionMismatch, EmordleError, FontLoadError, MissingGlyph,
                     PlacementFailure)
from .gif import encode_gif
from .layout import Dimensions, compute_layout
from .render import frame_count_for, render_animation
from .schemes import EmordleSpec, SchemeRegistry
from .style import RenderStyle, get_palette, list_palettes
from .textmetrics import list_fonts
from .util import clamp01
from .wordlist import parse_wordle_csv

GRID_LEVELS = (0.0, 0.5, 1.0)
_LEVEL_TAG = {0.0: "0", 0.5: "05", 1.0: "1"}

EXIT_OK = 0
EXIT_INPUT = 2
EXIT_RENDER = 3


def _add_canvas_args(p: argparse.ArgumentParser) -> None:
    p.add_argument("--width", type=int, default=800, help="canvas width in px")
    p.add_argument("--height", type=int, default=600, help="canvas height in px")
    p.add_argument("--fps", type=int, default=20, help="GIF frame rate (5..30)")
    p.add_argument("--palette", default="mono", help=f"one of: {', '.join(list_palettes())}")
    p.add_argument("--font", default="default", help=f"one of: {', '.join(list_fonts())}")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="emordle",
                                     description="animated emotion word clouds")
    sub = parser.add_subparsers(dest="command", required=True)

    gen = sub.add_parser("generate", help="render one animation")
    gen.add_argument("--input", required=True, help="CSV file with text,weight rows")
    gen.add_argument("--scheme", default="dance")
    gen.add_argument("--speed", type=float, default=0.5)
    gen.add_argument("--entropy", type=float, default=0.5)
    gen.add_argument("--seed", type=int, default=0)
    gen.add_argument("--out", required=True, help="output path: .gif or .descriptor")
    _add_canvas_args(gen)

    grid = sub.add_parser("stimuli-grid",
                          help="render speed x entropy in {0, 0.5, 1}^2 for each scheme")
    grid.add_argument("--input", required=True)
    grid.add_argument("--seed", type=int, default=0)
    grid.add_argument("--outdir", required=True)
    grid.add_argument("--schemes", default=None,
                      help="comma-separated scheme filter (default: all built-ins)")
    _add_canvas_args(grid)

    srv = sub.add_parser("serve", help="run the local HTTP service")
    srv.add_argument("--port", type=int, default=int(os.environ.get("EMORDLE_PORT", "8765")))
    srv.add_argument("--host", default="127.0.0.1")
    srv.add_argument("--data-dir", default=os.environ.get("EMORDLE_DATA_DIR"))
    return parser


def _clamped(name: str, value: float) -> float:
    clamped = clamp01(value)
    if clamped != value:
        print(f"warning: {name} {value} outside [0, 1], clamped to {clamped}", file=sys.stderr)
    return clamped


def _read_csv(path: str):
    try:
        with open(path, "rb") as f:
            raw = f.read()
    except OSError as exc:
        raise EmordleError(f"cannot read {path}: {exc.strerror}") from exc
    return parse_wordle_csv(raw, source_name=os.path.basename(path))


def cmd_generate(args: argparse.Namespace) -> int:
    words = _read_csv(args.input)
    canvas = Dimensions(args.width, args.height)
    style = RenderStyle(palette=get_palette(args.palette), typeface=args.font, fps=args.fps)
    spec = EmordleSpec(args.scheme,
                       entropy=_clamped("entropy", args.entropy),
                       speed=_clamped("speed", args.speed),
                       seed=args.seed, palette=args.palette, typeface=args.font)
    registry = SchemeRegistry()
    registry.get(spec.scheme_id)  # fail fast with exit 2 on unknown scheme

    layout = compute_layout(words, canvas, seed=args.seed, typeface=args.font)
    desc = registry.instantiate(layout, spec)

    if args.out.endswith(".descriptor"):
        payload = export_descriptor(desc, layout)
        frames = frame_count_for(desc.duration, style.fps)
    elif args.out.endswith(".gif"):
        try:
            rendered = render_animation(desc, layout, style)
            payload = encode_gif(rendered, style.fps)
        except (MissingGlyph, FontLoadError, DimensionMismatch) as exc:
            print(f"error: {exc}", file=sys.stderr)
            return EXIT_RENDER
        frames = len(rendered)
    else:
        print(f"error: --out must end in .gif or .descriptor, got {args.out!r}", file=sys.stderr)
        return EXIT_INPUT

    with open(args.out, "wb") as f:
        f.write(payload)
    print(f"{len(words)} words, {desc.groups.group_count} groups, "
          f"{desc.duration:g} s loop, {frames} frames -> {args.out}")
    return EXIT_OK


def cmd_stimuli_grid(args: argparse.Namespace) -> int:
    words = _read_csv(args.input)
    canvas = Dimensions(args.width, args.height)
    style = RenderStyle(palette=get_palette(args.palette), typeface=args.font, fps=args.fps)
    registry = SchemeRegistry()

    if args.schemes:
        scheme_ids = [s.strip() for s in args.schemes.split(",") if s.strip()]
    else:
        scheme_ids = [entry["id"] for entry in registry.list_schemes()]
    for scheme_id in scheme_ids:
        registry.get(scheme_id)

    os.makedirs(args.outdir, exist_ok=True)
    # One layout for every condition: stimuli stay geometrically comparable.
    layout = compute_layout(words, canvas, seed=args.seed, typeface=args.font)

    manifest = {"input": os.path.basename(args.input), "seed": args.seed,
                "canvas": {"width": canvas.width, "height": canvas.height},
                "fps": style.fps, "palette": args.palette, "font": args.font,
                "conditions": []}
    for scheme_id in scheme_ids:
        for speed in GRID_LEVELS:
            for entropy in GRID_LEVELS:
                spec = EmordleSpec(scheme_id, entropy=entropy, speed=speed,
                                   seed=args.seed, palette=args.palette, typeface=args.font)
                desc = registry.instantiate(layout, spec)
                try:
                    frames = render_animation(desc, layout, style)
                    gif = encode_gif(frames, style.fps)
                except (MissingGlyph, FontLoadError, DimensionMismatch) as exc:
                    print(f"error: {exc}", file=sys.stderr)
                    return EXIT_RENDER
                name = f"{scheme_id}_s{_LEVEL_TAG[speed]}_e{_LEVEL_TAG[entropy]}.gif"
                with open(os.path.join(args.outdir, name), "wb") as f:
                    f.write(gif)
                manifest["conditions"].append({
                    "file": name, "scheme": scheme_id, "speed": speed,
                    "entropy": entropy, "duration": desc.duration,
                    "frames": len(frames), "groups": desc.groups.group_count,
                })
                print(f"  {name}: {len(frames)} frames, {desc.groups.group_count} groups")
    manifest_path = os.path.join(args.outdir, "manifest.json")
    with open(manifest_path, "w", encoding="utf-8") as f:
        json.dump(manifest, f, indent=2)
        f.write("\n")
    print(f"{len(manifest['conditions'])} GIFs + manifest -> {args.outdir}")
    return EXIT_OK


def cmd_serve(args: argparse.Namespace) -> int:
    import uvicorn

    from .service import create_app

    app = create_app(data_dir=args.data_dir)
    uvicorn.run(app, host=args.host, port=args.port, log_level="info")
    return EXIT_OK


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        if args.command == "generate":
            return cmd_generate(args)
        if args.command == "stimuli-grid":
            return cmd_stimuli_grid(args)
        if args.command == "serve":
            return cmd_serve(args)
        parser.error(f"unknown command {args.command!r}")
    except (MissingGlyph, FontLoadError, DimensionMismatch) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_RENDER
    except (EmordleError, PlacementFailure, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
