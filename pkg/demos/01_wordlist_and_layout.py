#!/usr/bin/env python3
"""Parse a word list, normalize it, and lay it out on a canvas.

Walks the first half of the pipeline and renders the static word cloud to
demo_out/static.png so you can look at what the animation schemes start
from.
"""

import os
from importlib import resources

import emordle as em

OUT = os.path.join(os.path.dirname(os.path.abspath(__file__)), "demo_out")
os.makedirs(OUT, exist_ok=True)

raw = (resources.files("emordle.assets.wordlists") / "happiness.csv").read_bytes()
words = em.parse_wordle_csv(raw, source_name="happiness")
print(f"parsed {len(words)} words from the happiness sample list")

normalized = em.normalize_weights(words)
print("top five by weight:")
for entry in sorted(normalized.entries, key=lambda e: -e.weight)[:5]:
    print(f"  {entry.text:<14} {entry.weight:.3f}")

canvas = em.Dimensions(800, 600)
layout = em.compute_layout(words, canvas, seed=42)
print(f"\nplaced {len(layout.words)} words on {canvas.width}x{canvas.height}, "
      f"padding {layout.padding_factor}")
print(f"overlapping padded boxes: {em.check_overlap(layout)} (must be [])")

biggest = max(layout.words, key=lambda w: w.font_size)
print(f"biggest word: {biggest.entry.text!r} at {biggest.font_size} px, "
      f"anchor {biggest.anchor}")

# Same inputs, same bytes: the layout is a pure function of its arguments.
again = em.compute_layout(words, canvas, seed=42)
assert em.export_layout(again) == em.export_layout(layout)
print("determinism check: second run is byte-identical")

style = em.RenderStyle(palette=em.get_palette("happiness"))
image = em.render_static(layout, style)
image.to_pil().convert("RGB").save(os.path.join(OUT, "static.png"))
print(f"\nwrote {os.path.join(OUT, 'static.png')}")
