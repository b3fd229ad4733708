#!/usr/bin/env python3
"""Regenerate the shared conformance fixtures.

Each fixture pairs a full animation descriptor document with expected
channel samples at assorted loop times.  The engine's test suite and the
browser player's test suite both load these files; any drift between the
two samplers shows up as a fixture failure on one side or the other.

Run from the repo root:  python conformance/generate_fixtures.py
"""

import json
import os

import emordle as em
from emordle.animation import sample_timeline
from emordle.schemes import EmordleSpec

HERE = os.path.dirname(os.path.abspath(__file__))
FIXTURE_DIR = os.path.join(HERE, "fixtures")

WORDS = "ember,9\nglow,7\ndrift,5\nhush,4\nmurmur,3\nveil,2\n"
SAMPLE_TIMES = [0.0, 0.05, 0.125, 0.2, 0.33, 0.45, 0.5, 0.62, 0.75, 0.85, 0.9, 0.97, 0.999]

CASES = [
    ("dance", dict(entropy=0.5, speed=0.5, seed=11)),
    ("dance", dict(entropy=1.0, speed=1.0, seed=12)),
    ("fade", dict(entropy=0.0, speed=0.5, seed=13)),
    ("fade", dict(entropy=0.75, speed=0.25, seed=14)),
    ("explosion", dict(entropy=0.5, speed=1.0, seed=15)),
    ("shiver", dict(entropy=1.0, speed=0.5, seed=16)),
    ("shiver", dict(entropy=0.25, speed=1.0, seed=17)),
]


def main():
    words = em.parse_wordle_csv(WORDS, source_name="conformance")
    layout = em.compute_layout(words, em.Dimensions(480, 360), seed=99)
    registry = em.SchemeRegistry()
    os.makedirs(FIXTURE_DIR, exist_ok=True)

    for index, (scheme, knobs) in enumerate(CASES):
        spec = EmordleSpec(scheme, **knobs)
        desc = registry.instantiate(layout, spec)
        doc_bytes = em.export_descriptor(desc, layout)
        # Samples are taken from the canonical (rounded) document so both
        # consumers check exactly what the file says.
        imported, _ = em.import_descriptor(doc_bytes)
        samples = []
        for word_index in range(len(imported.words)):
            for t in SAMPLE_TIMES:
                state = sample_timeline(imported.words[word_index], t)
                samples.append({
                    "word": word_index,
                    "t": t,
                    "expected": {
                        "translate_x": state.translate_x,
                        "translate_y": state.translate_y,
                        "rotation": state.rotation,
                        "scale": state.scale,
                        "opacity": state.opacity,
                        "color_shift": state.color_shift,
                        "blur": state.blur,
                    },
                })
        fixture = {
            "name": f"{index:02d}_{scheme}_e{knobs['entropy']}_s{knobs['speed']}",
            "descriptor": json.loads(doc_bytes),
            "samples": samples,
        }
        path = os.path.join(FIXTURE_DIR, f"{fixture['name']}.json")
        with open(path, "w", encoding="utf-8") as f:
            json.dump(fixture, f, indent=1, sort_keys=True)
            f.write("\n")
        print(f"wrote {path} ({len(samples)} samples)")


if __name__ == "__main__":
    main()
