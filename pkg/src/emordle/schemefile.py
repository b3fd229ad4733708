"""Parser for user-authored ``.scheme`` files.

The format is a line-oriented key-value tree (see docs/scheme-format.md for
the grammar): top-level ``key value`` pairs for metadata, ``amplitude``
declarations, and ``channel`` headers each followed by indented keyframe
rows ``t value easing``.  Keyframe values are affine in one amplitude:
``0``, ``distance``, ``-rotation``, ``0.5*drop``, ``1 + burst``.

Structural problems raise :class:`SchemeSyntaxError` with line/column;
violations of template invariants (unknown channel kind, unsorted
keyframes, non-rest start pose) raise :class:`SchemeValidationError`.
"""

from __future__ import annotations

import re

from .animation import ChannelKind, EasingKind
from .errors import SchemeSyntaxError, SchemeValidationError
from .grouping import GroupingStrategy
from .schemes import (AmplitudeDecl, AmplitudeUnit, ChannelSpec, KeyframeSpec,
                      Repeat, SchemeTemplate, ValueExpr)

_NUMBER = r"[+-]?(?:\d+\.?\d*|\.\d+)"
_IDENT = r"[A-Za-z_][A-Za-z0-9_]*"
_EXPR_RE = re.compile(
    rf"^(?:(?P<const>{_NUMBER})\s*(?:(?P<sign>[+-])\s*(?P<coef>{_NUMBER}\s*\*\s*)?(?P<amp>{_IDENT}))?"
    rf"|(?P<nsign>-)?\s*(?P<coef2>{_NUMBER}\s*\*\s*)?(?P<amp2>{_IDENT}))$"
)

_METADATA_KEYS = {"scheme", "emotion", "grouping", "extra_cycles", "tail_hold", "delay"}


def _parse_expr(text: str, lineno: int) -> ValueExpr:
    m = _EXPR_RE.match(text.strip())
    if not m:
        raise SchemeSyntaxError(f"cannot parse value expression {text!r}", lineno)
    if m.group("amp2"):
        coef = 1.0
        if m.group("coef2"):
            coef = float(m.group("coef2").rstrip("* \t"))
        if m.group("nsign"):
            coef = -coef
        return ValueExpr(const=0.0, coef=coef, amp=m.group("amp2"))
    const = float(m.group("const"))
    if m.group("amp"):
        coef = 1.0
        if m.group("coef"):
            coef = float(m.group("coef").rstrip("* \t"))
        if m.group("sign") == "-":
            coef = -coef
        return ValueExpr(const=const, coef=coef, amp=m.group("amp"))
    return ValueExpr(const=const)


def _parse_float(token: str, what: str, lineno: int) -> float:
    try:
        return float(token)
    except ValueError:
        raise SchemeSyntaxError(f"{what} is not a number: {token!r}", lineno) from None


def parse_scheme_file(text: str) -> SchemeTemplate:
    """Parse and validate a scheme definition; returns the ready template."""
    meta: dict[str, str] = {}
    amplitudes: dict[str, AmplitudeDecl] = {}
    channels: list[ChannelSpec] = []

    current_kind: ChannelKind | None = None
    current_repeat: Repeat | None = None
    current_axis: str | None = None
    current_kfs: list[KeyframeSpec] = []

    def flush_channel():
        nonlocal current_kind
        if current_kind is None:
            return
        channels.append(ChannelSpec(kind=current_kind, repeat=current_repeat,
                                    keyframes=tuple(current_kfs),
                                    direction_axis=current_axis))
        current_kind = None

    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].rstrip()
        if not line.strip():
            continue
        indented = line[0] in " \t"
        tokens = line.split()

        if indented:
            if current_kind is None:
                raise SchemeSyntaxError("keyframe row outside a channel block", lineno,
                                        column=len(line) - len(line.lstrip()) + 1)
            if len(tokens) < 3:
                raise SchemeSyntaxError("keyframe row needs: <t> <value> <easing>", lineno)
            t = _parse_float(tokens[0], "keyframe time", lineno)
            easing_name = tokens[-1]
            try:
                easing = EasingKind(easing_name)
            except ValueError:
                raise SchemeValidationError(f"unknown easing kind: {easing_name!r}") from None
            expr = _parse_expr(" ".join(tokens[1:-1]), lineno)
            current_kfs.append(KeyframeSpec(t=t, expr=expr, easing=easing))
            continue

        flush_channel()
        key = tokens[0]

        if key == "channel":
            if len(tokens) < 3:
                raise SchemeSyntaxError("channel header needs: channel <kind> <once|cycle> [direction=x|y]", lineno)
            try:
                current_kind = ChannelKind(tokens[1])
            except ValueError:
                raise SchemeValidationError(f"unknown channel kind: {tokens[1]!r}") from None
            try:
                current_repeat = Repeat(tokens[2])
            except ValueError:
                raise SchemeSyntaxError(f"repeat mode must be once or cycle, got {tokens[2]!r}", lineno) from None
            current_axis = None
            current_kfs = []
            for extra in tokens[3:]:
                if extra.startswith("direction="):
                    current_axis = extra.split("=", 1)[1]
                else:
                    raise SchemeSyntaxError(f"unknown channel option {extra!r}", lineno)
        elif key == "amplitude":
            if len(tokens) < 4:
                raise SchemeSyntaxError("amplitude needs: amplitude <name> <base> <unit> [entropy] [per_group]", lineno)
            name = tokens[1]
            base = _parse_float(tokens[2], "amplitude base", lineno)
            try:
                unit = AmplitudeUnit(tokens[3])
            except ValueError:
                raise SchemeValidationError(f"unknown amplitude unit: {tokens[3]!r}") from None
            flags = set(tokens[4:])
            unknown = flags - {"entropy", "per_group"}
            if unknown:
                raise SchemeSyntaxError(f"unknown amplitude flags: {sorted(unknown)}", lineno)
            amplitudes[name] = AmplitudeDecl(base=base, unit=unit,
                                             entropy_scaled="entropy" in flags,
                                             per_group="per_group" in flags)
        elif key in _METADATA_KEYS:
            if len(tokens) < 2:
                raise SchemeSyntaxError(f"{key} needs a value", lineno)
            meta[key] = " ".join(tokens[1:])
        else:
            raise SchemeSyntaxError(f"unknown directive {key!r}", lineno)

    flush_channel()

    for required in ("scheme", "emotion", "grouping"):
        if required not in meta:
            raise SchemeValidationError(f"missing required key: {required}")
    try:
        strategy = GroupingStrategy(meta["grouping"])
    except ValueError:
        raise SchemeValidationError(f"unknown grouping strategy: {meta['grouping']!r}") from None
    try:
        extra_cycles = int(meta.get("extra_cycles", "0"))
    except ValueError:
        raise SchemeValidationError(f"extra_cycles must be an integer: {meta['extra_cycles']!r}") from None
    try:
        tail_hold = float(meta.get("tail_hold", "0"))
    except ValueError:
        raise SchemeValidationError(f"tail_hold must be a number: {meta['tail_hold']!r}") from None
    delay_flag = meta.get("delay", "off")
    if delay_flag not in ("on", "off"):
        raise SchemeValidationError(f"delay must be on or off, got {delay_flag!r}")

    try:
        return SchemeTemplate(
            id=meta["scheme"],
            emotion_label=meta["emotion"],
            strategy=strategy,
            max_extra_cycles=extra_cycles,
            channels=tuple(channels),
            amplitudes=amplitudes,
            has_delay=delay_flag == "on",
            has_direction=any(c.direction_axis for c in channels),
            tail_hold=tail_hold,
        )
    except ValueError as exc:
        raise SchemeValidationError(str(exc)) from exc
