/**
 * Types and validation for the animation descriptor document
 * (docs/descriptor-format.md). The player never invents animation
 * semantics: everything it draws comes from this document.
 */

export type EasingName =
  | "linear"
  | "bump"
  | "slow_in"
  | "slow_out"
  | "slow_in_out"
  | "fast_in_out";

export type ChannelKind =
  | "translate_x"
  | "translate_y"
  | "rotation"
  | "scale"
  | "opacity"
  | "color_shift"
  | "blur";

export interface Keyframe {
  t: number;
  value: number;
  easing: EasingName;
}

export type Channels = Partial<Record<ChannelKind, Keyframe[]>>;

export interface WordTimeline {
  channels: Channels;
}

export interface PlacedWord {
  text: string;
  weight: number;
  anchor: [number, number];
  font_size: number;
  base_rotation: number;
  bbox: [number, number, number, number];
}

export interface LayoutDoc {
  canvas: { width: number; height: number };
  seed: number;
  padding_factor: number;
  typeface?: string;
  words: PlacedWord[];
}

export interface DescriptorDoc {
  kind: "emordle.descriptor";
  format_version: number;
  scheme_id: string;
  emotion_label: string;
  duration: number;
  entropy: number;
  speed: number;
  seed: number;
  groups: { group_count: number; group_of: number[] };
  words: WordTimeline[];
  layout: LayoutDoc;
}

export const EASING_NAMES: ReadonlySet<string> = new Set([
  "linear", "bump", "slow_in", "slow_out", "slow_in_out", "fast_in_out",
]);

export const CHANNEL_KINDS: ReadonlySet<string> = new Set([
  "translate_x", "translate_y", "rotation", "scale", "opacity", "color_shift", "blur",
]);

export class DescriptorSchemaError extends Error {
  constructor(public path: string, message: string) {
    super(`${path}: ${message}`);
    this.name = "DescriptorSchemaError";
  }
}

function need(obj: unknown, key: string, path: string): unknown {
  if (typeof obj !== "object" || obj === null || !(key in (obj as object))) {
    throw new DescriptorSchemaError(path ? `${path}.${key}` : key, "missing");
  }
  return (obj as Record<string, unknown>)[key];
}

function needNumber(obj: unknown, key: string, path: string): number {
  const v = need(obj, key, path);
  if (typeof v !== "number" || !Number.isFinite(v)) {
    throw new DescriptorSchemaError(path ? `${path}.${key}` : key, "expected a number");
  }
  return v;
}

/** Validate a parsed descriptor document; throws DescriptorSchemaError. */
export function validateDescriptor(doc: unknown): DescriptorDoc {
  if (need(doc, "kind", "") !== "emordle.descriptor") {
    throw new DescriptorSchemaError("kind", "expected emordle.descriptor");
  }
  if (needNumber(doc, "format_version", "") !== 1) {
    throw new DescriptorSchemaError("format_version", "unsupported version");
  }
  const duration = needNumber(doc, "duration", "");
  if (duration < 1.0 || duration > 4.0) {
    throw new DescriptorSchemaError("duration", "outside [1, 4] seconds");
  }
  const words = need(doc, "words", "") as WordTimeline[];
  if (!Array.isArray(words) || words.length === 0) {
    throw new DescriptorSchemaError("words", "expected a non-empty array");
  }
  words.forEach((word, i) => {
    const channels = need(word, "channels", `words[${i}]`) as Channels;
    for (const [kind, keyframes] of Object.entries(channels)) {
      const cpath = `words[${i}].channels.${kind}`;
      if (!CHANNEL_KINDS.has(kind)) {
        throw new DescriptorSchemaError(cpath, "unknown channel kind");
      }
      if (!Array.isArray(keyframes) || keyframes.length === 0) {
        throw new DescriptorSchemaError(cpath, "expected a non-empty keyframe list");
      }
      let previous = -1;
      keyframes.forEach((kf, j) => {
        const kpath = `${cpath}[${j}]`;
        needNumber(kf, "t", kpath);
        needNumber(kf, "value", kpath);
        if (!EASING_NAMES.has(kf.easing)) {
          throw new DescriptorSchemaError(`${kpath}.easing`, `unknown easing ${kf.easing}`);
        }
        if (kf.t <= previous) {
          throw new DescriptorSchemaError(kpath, "keyframes not strictly increasing");
        }
        previous = kf.t;
      });
      if (keyframes[0].t !== 0) {
        throw new DescriptorSchemaError(`${cpath}[0]`, "first keyframe must sit at t = 0");
      }
    }
  });
  const layout = need(doc, "layout", "") as LayoutDoc;
  const layoutWords = need(layout, "words", "layout") as PlacedWord[];
  if (!Array.isArray(layoutWords) || layoutWords.length !== words.length) {
    throw new DescriptorSchemaError("layout.words", "word count mismatch");
  }
  needNumber(layout.canvas, "width", "layout.canvas");
  needNumber(layout.canvas, "height", "layout.canvas");
  return doc as DescriptorDoc;
}
