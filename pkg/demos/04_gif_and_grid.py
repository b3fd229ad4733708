#!/usr/bin/env python3
"""Render animated GIFs: one-off exports and the full study-style grid.

Writes demo_out/fear_shiver.gif plus a 3x3 speed/entropy sweep of the fade
scheme, then verifies the GIF structure with a decode pass.
"""

import io
import os
import time
from importlib import resources

from PIL import Image

import emordle as em
from emordle.schemes import EmordleSpec

OUT = os.path.join(os.path.dirname(os.path.abspath(__file__)), "demo_out")
os.makedirs(OUT, exist_ok=True)

raw = (resources.files("emordle.assets.wordlists") / "fear.csv").read_bytes()
words = em.parse_wordle_csv(raw)
layout = em.compute_layout(words, em.Dimensions(800, 600), seed=3, typeface="mono")
registry = em.SchemeRegistry()
style = em.RenderStyle(palette=em.get_palette("fear"), typeface="mono", fps=20)

spec = EmordleSpec("shiver", entropy=0.8, speed=0.7, seed=3)
desc = registry.instantiate(layout, spec)
frames = em.render_animation(desc, layout, style)
gif = em.encode_gif(frames, style.fps)
path = os.path.join(OUT, "fear_shiver.gif")
with open(path, "wb") as f:
    f.write(gif)
print(f"{len(frames)} frames -> {path} ({len(gif) / 1024:.0f} KiB)")

decoded = Image.open(io.BytesIO(gif))
print(f"decode check: {decoded.n_frames} frames, loop={decoded.info.get('loop')}, "
      f"{decoded.info.get('duration')} ms per frame")

print("\n3x3 fade sweep (shared layout across all nine conditions):")
started = time.time()
for speed in (0.0, 0.5, 1.0):
    for entropy in (0.0, 0.5, 1.0):
        sweep_spec = EmordleSpec("fade", entropy=entropy, speed=speed, seed=3)
        sweep_desc = registry.instantiate(layout, sweep_spec)
        sweep = em.render_animation(sweep_desc, layout, style)
        name = f"fade_s{speed:g}_e{entropy:g}.gif".replace(".", "", 1)
        with open(os.path.join(OUT, name), "wb") as f:
            f.write(em.encode_gif(sweep, style.fps))
        print(f"  speed={speed:3.1f} entropy={entropy:3.1f}: "
              f"{len(sweep)} frames, {sweep_desc.groups.group_count} groups")
print(f"nine GIFs in {time.time() - started:.1f} s")
print("\n(the full four-scheme grid is one command: "
      "emordle stimuli-grid --input <csv> --seed 3 --outdir grid/)")
