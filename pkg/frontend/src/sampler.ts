/**
 * Channel sampling, implemented from docs/descriptor-format.md.
 *
 * This file is the conformance surface: tests/sampler.test.ts replays the
 * shared fixture set (conformance/fixtures/) and requires agreement with
 * the engine within 1e-3 per channel.
 */

import type { ChannelKind, Channels, Keyframe, WordTimeline } from "./descriptor.js";

export interface PropertyState {
  translate_x: number;
  translate_y: number;
  rotation: number;
  scale: number;
  opacity: number;
  color_shift: number;
  blur: number;
}

export const REST_STATE: Readonly<PropertyState> = Object.freeze({
  translate_x: 0,
  translate_y: 0,
  rotation: 0,
  scale: 1,
  opacity: 1,
  color_shift: 0,
  blur: 0,
});

const BUMP_C1 = 1.70158;

export function ease(name: string, t: number): number {
  switch (name) {
    case "linear":
      return t;
    case "slow_in":
      return t * t;
    case "slow_out":
      return 1 - (1 - t) * (1 - t);
    case "slow_in_out":
      return t * t * (3 - 2 * t);
    case "fast_in_out": {
      const u = 2 * t - 1;
      const s = u >= 0 ? 1 : -1;
      return 0.5 * (1 + s * Math.sqrt(Math.abs(u)));
    }
    case "bump": {
      const u = t - 1;
      return 1 + (BUMP_C1 + 1) * u * u * u + BUMP_C1 * u * u;
    }
    default:
      throw new Error(`unknown easing: ${name}`);
  }
}

export function sampleKeyframes(keyframes: Keyframe[], t: number): number {
  if (t <= keyframes[0].t) return keyframes[0].value;
  const last = keyframes[keyframes.length - 1];
  if (t >= last.t) return last.value;
  for (let i = 0; i < keyframes.length - 1; i++) {
    const a = keyframes[i];
    const b = keyframes[i + 1];
    if (a.t <= t && t < b.t) {
      const u = (t - a.t) / (b.t - a.t);
      return a.value + ease(a.easing, u) * (b.value - a.value);
    }
  }
  return last.value;
}

export function sampleChannels(channels: Channels, t: number): PropertyState {
  const state: PropertyState = { ...REST_STATE };
  for (const [kind, keyframes] of Object.entries(channels)) {
    if (keyframes) state[kind as ChannelKind] = sampleKeyframes(keyframes, t);
  }
  return state;
}

export function sampleWord(word: WordTimeline, t: number): PropertyState {
  return sampleChannels(word.channels, t);
}

/** Wall-clock milliseconds to loop phase in [0, 1). */
export function loopPhase(elapsedMs: number, durationSeconds: number): number {
  const loopMs = durationSeconds * 1000;
  return ((elapsedMs % loopMs) + loopMs) % loopMs / loopMs;
}
