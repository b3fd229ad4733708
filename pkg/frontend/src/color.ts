/**
 * CIELAB color interpolation for the color_shift channel, matching the
 * descriptor spec (D65 white point, shift from rest color toward the
 * palette's target).
 */

export type RGB = [number, number, number];

const XN = 0.95047;
const YN = 1.0;
const ZN = 1.08883;

function srgbToLinear(c: number): number {
  return c <= 0.04045 ? c / 12.92 : Math.pow((c + 0.055) / 1.055, 2.4);
}

function linearToSrgb(c: number): number {
  return c <= 0.0031308 ? 12.92 * c : 1.055 * Math.pow(c, 1 / 2.4) - 0.055;
}

function fwd(t: number): number {
  const d = 6 / 29;
  return t > d * d * d ? Math.cbrt(t) : t / (3 * d * d) + 4 / 29;
}

function inv(t: number): number {
  const d = 6 / 29;
  return t > d ? t * t * t : 3 * d * d * (t - 4 / 29);
}

export function srgbToLab([r8, g8, b8]: RGB): [number, number, number] {
  const r = srgbToLinear(r8 / 255);
  const g = srgbToLinear(g8 / 255);
  const b = srgbToLinear(b8 / 255);
  const x = 0.4124564 * r + 0.3575761 * g + 0.1804375 * b;
  const y = 0.2126729 * r + 0.7151522 * g + 0.072175 * b;
  const z = 0.0193339 * r + 0.119192 * g + 0.9503041 * b;
  const fx = fwd(x / XN);
  const fy = fwd(y / YN);
  const fz = fwd(z / ZN);
  return [116 * fy - 16, 500 * (fx - fy), 200 * (fy - fz)];
}

export function labToSrgb([L, a, b]: [number, number, number]): RGB {
  const fy = (L + 16) / 116;
  const fx = fy + a / 500;
  const fz = fy - b / 200;
  const x = inv(fx) * XN;
  const y = inv(fy) * YN;
  const z = inv(fz) * ZN;
  const r = 3.2404542 * x - 1.5371385 * y - 0.4985314 * z;
  const g = -0.9692660 * x + 1.8760108 * y + 0.0415560 * z;
  const bb = 0.0556434 * x - 0.2040259 * y + 1.0572252 * z;
  const clamp = (c: number) => Math.min(255, Math.max(0, Math.floor(linearToSrgb(Math.min(Math.max(c, 0), 1)) * 255 + 0.5)));
  return [clamp(r), clamp(g), clamp(bb)];
}

export function shiftColor(rest: RGB, target: RGB, amount: number): RGB {
  const s = Math.min(1, Math.max(0, amount));
  if (s === 0) return rest;
  if (s === 1) return target;
  const la = srgbToLab(rest);
  const lb = srgbToLab(target);
  const mixed: [number, number, number] = [
    la[0] + s * (lb[0] - la[0]),
    la[1] + s * (lb[1] - la[1]),
    la[2] + s * (lb[2] - la[2]),
  ];
  return labToSrgb(mixed);
}

export function cssColor([r, g, b]: RGB): string {
  return `rgb(${r}, ${g}, ${b})`;
}
