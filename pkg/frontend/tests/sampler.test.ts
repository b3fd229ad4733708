/**
 * Conformance: the browser sampler must reproduce the shared fixture set
 * (conformance/fixtures/) within 1e-3 per channel, and pausing at t = 0
 * must give the rest pose (the static word cloud).
 */

import { readdirSync, readFileSync } from "node:fs";
import { join } from "node:path";
import { describe, expect, it } from "vitest";

import { validateDescriptor } from "../src/descriptor.js";
import { REST_STATE, ease, loopPhase, sampleWord } from "../src/sampler.js";

const FIXTURE_DIR = join(__dirname, "..", "..", "conformance", "fixtures");
const TOLERANCE = 1e-3;

interface Fixture {
  name: string;
  descriptor: unknown;
  samples: {
    word: number;
    t: number;
    expected: Record<string, number>;
  }[];
}

function fixtures(): Fixture[] {
  return readdirSync(FIXTURE_DIR)
    .filter((name) => name.endsWith(".json"))
    .sort()
    .map((name) => JSON.parse(readFileSync(join(FIXTURE_DIR, name), "utf-8")));
}

describe("conformance fixtures", () => {
  const all = fixtures();

  it("fixture set is present", () => {
    expect(all.length).toBeGreaterThanOrEqual(4);
  });

  for (const fixture of all) {
    it(`matches engine samples: ${fixture.name}`, () => {
      const doc = validateDescriptor(fixture.descriptor);
      for (const sample of fixture.samples) {
        const state = sampleWord(doc.words[sample.word], sample.t);
        for (const [kind, expected] of Object.entries(sample.expected)) {
          const actual = state[kind as keyof typeof state];
          expect(Math.abs(actual - expected),
            `${fixture.name} word ${sample.word} t=${sample.t} ${kind}`)
            .toBeLessThanOrEqual(TOLERANCE);
        }
      }
    });
  }

  it("t = 0 is the rest pose for every fixture word (pause shows the static wordle)", () => {
    for (const fixture of all) {
      const doc = validateDescriptor(fixture.descriptor);
      for (const word of doc.words) {
        const state = sampleWord(word, 0);
        expect(state).toEqual(REST_STATE);
      }
    }
  });
});

describe("easing functions", () => {
  const names = ["linear", "bump", "slow_in", "slow_out", "slow_in_out", "fast_in_out"];

  it("endpoints are exact", () => {
    for (const name of names) {
      expect(ease(name, 0)).toBeCloseTo(0, 9);
      expect(ease(name, 1)).toBeCloseTo(1, 9);
    }
  });

  it("bump midpoint matches the published value", () => {
    expect(Math.abs(ease("bump", 0.5) - 1.0877)).toBeLessThanOrEqual(1e-4);
  });

  it("unknown easing throws", () => {
    expect(() => ease("zigzag", 0.5)).toThrow();
  });
});

describe("loop phase", () => {
  it("wraps wall-clock time into [0, 1)", () => {
    expect(loopPhase(0, 2.5)).toBe(0);
    expect(loopPhase(1250, 2.5)).toBeCloseTo(0.5, 12);
    expect(loopPhase(6250, 2.5)).toBeCloseTo(0.5, 12);
    for (const ms of [0, 100, 2499, 2500, 9999]) {
      const t = loopPhase(ms, 2.5);
      expect(t).toBeGreaterThanOrEqual(0);
      expect(t).toBeLessThan(1);
    }
  });
});
