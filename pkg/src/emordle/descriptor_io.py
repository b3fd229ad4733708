"""Canonical serialization of descriptors and layouts.

The exported document is the playback contract: anything that can sample
these channels with the documented easing functions (the bundled browser
player, a future port) reproduces the engine's animation exactly.  The
encoding is canonical JSON: keys sorted, reals rounded to 6 decimals, fixed
separators, so identical inputs produce identical bytes.

Import validates shape and invariants and raises :class:`SchemaError`
naming the path of the offending field.
"""

from __future__ import annotations

import json
from typing import Any

from .animation import Channel, ChannelKind, EasingKind, Keyframe, Timeline
from .errors import SchemaError
from .grouping import GroupAssignment
from .layout import Dimensions, PlacedWord, WordleLayout
from .schemes import AnimationDescriptor
from .wordlist import WordEntry

FORMAT_VERSION = 1
DESCRIPTOR_KIND = "emordle.descriptor"
LAYOUT_KIND = "emordle.layout"


def _canonical(value: Any) -> Any:
    if isinstance(value, float):
        return round(value, 6) + 0.0  # + 0.0 normalizes -0.0
    if isinstance(value, dict):
        return {k: _canonical(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [_canonical(v) for v in value]
    return value


def canonical_json(obj: Any) -> bytes:
    data = _canonical(obj)
    text = json.dumps(data, sort_keys=True, indent=2, ensure_ascii=False)
    return (text + "\n").encode("utf-8")


def _layout_dict(layout: WordleLayout) -> dict:
    return {
        "canvas": {"width": layout.canvas.width, "height": layout.canvas.height},
        "seed": layout.seed,
        "padding_factor": layout.padding_factor,
        "typeface": layout.typeface,
        "words": [
            {
                "text": w.entry.text,
                "weight": w.entry.weight,
                "anchor": [w.anchor[0], w.anchor[1]],
                "font_size": w.font_size,
                "base_rotation": w.base_rotation,
                "bbox": list(w.bbox),
            }
            for w in layout.words
        ],
    }


def _timeline_dict(tl: Timeline) -> dict:
    return {
        "channels": {
            ch.kind.value: [
                {"t": kf.t, "value": kf.value, "easing": kf.easing_out.value}
                for kf in ch.keyframes
            ]
            for ch in tl.channels
        }
    }


def export_layout(layout: WordleLayout) -> bytes:
    doc = {"kind": LAYOUT_KIND, "format_version": FORMAT_VERSION}
    doc.update(_layout_dict(layout))
    return canonical_json(doc)


def export_descriptor(desc: AnimationDescriptor, layout: WordleLayout) -> bytes:
    if len(desc.words) != len(layout.words):
        raise ValueError("descriptor and layout word counts disagree")
    doc = {
        "kind": DESCRIPTOR_KIND,
        "format_version": FORMAT_VERSION,
        "scheme_id": desc.scheme_id,
        "emotion_label": desc.emotion_label,
        "duration": desc.duration,
        "entropy": desc.entropy,
        "speed": desc.speed,
        "seed": desc.seed,
        "groups": {
            "group_count": desc.groups.group_count,
            "group_of": list(desc.groups.group_of),
        },
        "words": [_timeline_dict(tl) for tl in desc.words],
        "layout": _layout_dict(layout),
    }
    return canonical_json(doc)


# ---- import / validation -------------------------------------------------

def _need(doc: dict, key: str, kind, path: str):
    if not isinstance(doc, dict) or key not in doc:
        raise SchemaError(f"{path}{key}" if path else key, "missing")
    value = doc[key]
    if kind is float:
        if not isinstance(value, (int, float)) or isinstance(value, bool):
            raise SchemaError(f"{path}{key}", "expected a number")
        return float(value)
    if not isinstance(value, kind) or (kind is int and isinstance(value, bool)):
        raise SchemaError(f"{path}{key}", f"expected {kind.__name__}")
    return value


def _parse_layout(doc: Any, path: str) -> WordleLayout:
    canvas_doc = _need(doc, "canvas", dict, path)
    canvas_path = f"{path}canvas."
    try:
        canvas = Dimensions(_need(canvas_doc, "width", int, canvas_path),
                            _need(canvas_doc, "height", int, canvas_path))
    except ValueError as exc:
        raise SchemaError(f"{path}canvas", str(exc)) from exc
    seed = _need(doc, "seed", int, path)
    padding = _need(doc, "padding_factor", float, path)
    typeface = doc.get("typeface", "default")
    words_doc = _need(doc, "words", list, path)
    if not words_doc:
        raise SchemaError(f"{path}words", "empty")
    words = []
    for i, wd in enumerate(words_doc):
        wp = f"{path}words[{i}]."
        text = _need(wd, "text", str, wp)
        weight = _need(wd, "weight", float, wp)
        anchor = _need(wd, "anchor", list, wp)
        bbox = _need(wd, "bbox", list, wp)
        if len(anchor) != 2:
            raise SchemaError(f"{wp}anchor", "expected [x, y]")
        if len(bbox) != 4:
            raise SchemaError(f"{wp}bbox", "expected [x0, y0, x1, y1]")
        try:
            words.append(PlacedWord(
                entry=WordEntry(text, weight),
                anchor=(float(anchor[0]), float(anchor[1])),
                font_size=_need(wd, "font_size", int, wp),
                base_rotation=float(wd.get("base_rotation", 0.0)),
                bbox=tuple(float(v) for v in bbox),
            ))
        except (TypeError, ValueError) as exc:
            raise SchemaError(wp.rstrip("."), str(exc)) from exc
    try:
        return WordleLayout(canvas=canvas, words=tuple(words), seed=seed,
                            padding_factor=padding, typeface=typeface)
    except ValueError as exc:
        raise SchemaError(path.rstrip(".") or "layout", str(exc)) from exc


def _parse_timeline(doc: Any, path: str) -> Timeline:
    channels_doc = _need(doc, "channels", dict, path)
    channels = []
    for kind_name, kf_list in channels_doc.items():
        cpath = f"{path}channels.{kind_name}"
        try:
            kind = ChannelKind(kind_name)
        except ValueError:
            raise SchemaError(cpath, "unknown channel kind") from None
        if not isinstance(kf_list, list) or not kf_list:
            raise SchemaError(cpath, "expected a non-empty keyframe list")
        kfs = []
        for j, kf in enumerate(kf_list):
            kpath = f"{cpath}[{j}]."
            t = _need(kf, "t", float, kpath)
            value = _need(kf, "value", float, kpath)
            easing_name = _need(kf, "easing", str, kpath)
            try:
                easing = EasingKind(easing_name)
            except ValueError:
                raise SchemaError(f"{kpath}easing", f"unknown easing {easing_name!r}") from None
            try:
                kfs.append(Keyframe(t=t, value=value, easing_out=easing))
            except ValueError as exc:
                raise SchemaError(kpath.rstrip("."), str(exc)) from exc
        try:
            channels.append(Channel(kind=kind, keyframes=tuple(kfs)))
        except ValueError as exc:
            raise SchemaError(cpath, str(exc)) from exc
    try:
        return Timeline(tuple(channels))
    except ValueError as exc:
        raise SchemaError(path.rstrip(".") or "timeline", str(exc)) from exc


def import_layout(data: bytes | str) -> WordleLayout:
    doc = _load_json(data)
    if doc.get("kind") != LAYOUT_KIND:
        raise SchemaError("kind", f"expected {LAYOUT_KIND!r}")
    _check_version(doc)
    return _parse_layout(doc, "")


def import_descriptor(data: bytes | str) -> tuple[AnimationDescriptor, WordleLayout]:
    """Inverse of :func:`export_descriptor` up to 6-decimal precision."""
    doc = _load_json(data)
    if doc.get("kind") != DESCRIPTOR_KIND:
        raise SchemaError("kind", f"expected {DESCRIPTOR_KIND!r}")
    _check_version(doc)

    scheme_id = _need(doc, "scheme_id", str, "")
    emotion = _need(doc, "emotion_label", str, "")
    duration = _need(doc, "duration", float, "")
    entropy = _need(doc, "entropy", float, "")
    speed = _need(doc, "speed", float, "")
    seed = _need(doc, "seed", int, "")

    groups_doc = _need(doc, "groups", dict, "")
    group_count = _need(groups_doc, "group_count", int, "groups.")
    group_of = _need(groups_doc, "group_of", list, "groups.")
    try:
        groups = GroupAssignment(group_of=tuple(int(g) for g in group_of),
                                 group_count=group_count)
    except (TypeError, ValueError) as exc:
        raise SchemaError("groups", str(exc)) from exc

    words_doc = _need(doc, "words", list, "")
    timelines = tuple(_parse_timeline(wd, f"words[{i}].") for i, wd in enumerate(words_doc))

    layout = _parse_layout(_need(doc, "layout", dict, ""), "layout.")
    if len(timelines) != len(layout.words):
        raise SchemaError("words", "word timeline count does not match layout")

    try:
        desc = AnimationDescriptor(
            scheme_id=scheme_id, emotion_label=emotion, duration=duration,
            words=timelines, groups=groups, entropy=entropy, speed=speed, seed=seed,
        )
    except ValueError as exc:
        raise SchemaError("descriptor", str(exc)) from exc
    return desc, layout


def _load_json(data: bytes | str) -> dict:
    if isinstance(data, bytes):
        try:
            data = data.decode("utf-8")
        except UnicodeDecodeError as exc:
            raise SchemaError("document", f"not UTF-8: {exc.reason}") from exc
    try:
        doc = json.loads(data)
    except json.JSONDecodeError as exc:
        raise SchemaError("document", f"not valid JSON: {exc.msg} at line {exc.lineno}") from exc
    if not isinstance(doc, dict):
        raise SchemaError("document", "top level must be an object")
    return doc


def _check_version(doc: dict) -> None:
    version = _need(doc, "format_version", int, "")
    if version != FORMAT_VERSION:
        raise SchemaError("format_version", f"unsupported version {version}")
