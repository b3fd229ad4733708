/**
 * Canvas playback of a descriptor document.
 *
 * Geometry comes from the layout block, per-frame property states from the
 * sampler; pausing at phase 0 therefore shows exactly the static word
 * cloud. Colors follow the selected palette (rest color by weight rank,
 * color_shift toward the palette target in Lab space).
 */

import type { DescriptorDoc, PlacedWord } from "./descriptor.js";
import type { PaletteInfo } from "./api.js";
import { PropertyState, loopPhase, sampleWord } from "./sampler.js";
import { RGB, cssColor, shiftColor } from "./color.js";

export interface WordDraw {
  word: PlacedWord;
  state: PropertyState;
  color: RGB;
}

/** Pure per-frame draw parameters; exercised directly by the tests. */
export function frameDraws(doc: DescriptorDoc, palette: PaletteInfo, t: number): WordDraw[] {
  const ranks = weightRanks(doc.layout.words);
  return doc.layout.words.map((word, i) => {
    const state = sampleWord(doc.words[i], t);
    const rest = palette.ramp[ranks[i] % palette.ramp.length];
    const color = state.color_shift > 0
      ? shiftColor(rest, palette.shift_target, state.color_shift)
      : rest;
    return { word, state, color };
  });
}

function weightRanks(words: PlacedWord[]): number[] {
  const order = words.map((w, i) => i)
    .sort((a, b) => words[b].weight - words[a].weight || a - b);
  const ranks = new Array(words.length).fill(0);
  order.forEach((wordIndex, rank) => { ranks[wordIndex] = rank; });
  return ranks;
}

export class Player {
  private doc: DescriptorDoc | null = null;
  private palette: PaletteInfo | null = null;
  private fontFamily = "sans-serif";
  private raf = 0;
  private playing = false;
  private phase = 0;          // current loop phase in [0, 1)
  private lastTick = 0;

  constructor(private canvas: HTMLCanvasElement,
              private onPhase: (t: number) => void = () => {}) {}

  setContent(doc: DescriptorDoc, palette: PaletteInfo, fontFamily: string): void {
    this.doc = doc;
    this.palette = palette;
    this.fontFamily = fontFamily;
    this.canvas.width = doc.layout.canvas.width;
    this.canvas.height = doc.layout.canvas.height;
    this.drawFrame(this.phase);
  }

  get isPlaying(): boolean {
    return this.playing;
  }

  play(): void {
    if (this.playing || !this.doc) return;
    this.playing = true;
    this.lastTick = performance.now();
    const tick = (now: number) => {
      if (!this.playing || !this.doc) return;
      const elapsed = now - this.lastTick;
      this.lastTick = now;
      this.phase = loopPhase(this.phase * this.doc.duration * 1000 + elapsed,
                             this.doc.duration);
      this.drawFrame(this.phase);
      this.raf = requestAnimationFrame(tick);
    };
    this.raf = requestAnimationFrame(tick);
  }

  pause(): void {
    this.playing = false;
    if (this.raf) cancelAnimationFrame(this.raf);
    this.raf = 0;
  }

  /** Pause and rewind to the static word cloud. */
  reset(): void {
    this.pause();
    this.phase = 0;
    this.drawFrame(0);
  }

  seek(t: number): void {
    this.phase = Math.min(Math.max(t, 0), 0.999999);
    this.drawFrame(this.phase);
  }

  private drawFrame(t: number): void {
    if (!this.doc || !this.palette) return;
    const ctx = this.canvas.getContext("2d");
    if (!ctx) return;
    ctx.setTransform(1, 0, 0, 1, 0, 0);
    ctx.filter = "none";
    ctx.globalAlpha = 1;
    ctx.fillStyle = cssColor(this.palette.background);
    ctx.fillRect(0, 0, this.canvas.width, this.canvas.height);

    for (const { word, state, color } of frameDraws(this.doc, this.palette, t)) {
      if (state.opacity <= 0) continue;
      ctx.save();
      ctx.translate(word.anchor[0] + state.translate_x,
                    word.anchor[1] + state.translate_y);
      // Channel rotation is counterclockwise on screen; canvas rotate() is
      // clockwise with +y down.
      ctx.rotate((-state.rotation * Math.PI) / 180);
      ctx.scale(state.scale, state.scale);
      ctx.globalAlpha = Math.min(1, Math.max(0, state.opacity));
      if (state.blur > 0.01) ctx.filter = `blur(${Math.min(state.blur, 8)}px)`;
      ctx.font = `${word.font_size}px ${this.fontFamily}`;
      ctx.textAlign = "center";
      ctx.textBaseline = "middle";
      ctx.fillStyle = cssColor(color);
      ctx.fillText(word.text, 0, 0);
      ctx.restore();
    }
    this.onPhase(t);
  }
}
