/** Typed client for the engine's HTTP API. */

import { DescriptorDoc, validateDescriptor } from "./descriptor.js";

export interface SchemeInfo {
  id: string;
  emotion_label: string;
  strategy: string;
}

export interface PaletteInfo {
  id: string;
  background: [number, number, number];
  ramp: [number, number, number][];
  shift_target: [number, number, number];
}

export interface FontInfo {
  id: string;
  file: string;
}

export interface UploadResult {
  id: string;
  word_count: number;
  entries: { text: string; weight: number }[];
}

export interface DescriptorParams {
  id: string;
  scheme: string;
  entropy: number;
  speed: number;
  seed: number;
  width: number;
  height: number;
}

export class ApiError extends Error {
  constructor(public status: number, public code: string, message: string,
              public field: string | null = null) {
    super(message);
    this.name = "ApiError";
  }
}

async function reject(response: Response): Promise<never> {
  let code = "http_error";
  let message = `${response.status} ${response.statusText}`;
  let field: string | null = null;
  try {
    const body = await response.json();
    code = body.code ?? code;
    message = body.message ?? message;
    field = body.field ?? null;
  } catch {
    // non-JSON error body, keep the HTTP defaults
  }
  throw new ApiError(response.status, code, message, field);
}

export class ApiClient {
  constructor(private base: string = "") {}

  async uploadWordlist(csv: string | Blob): Promise<UploadResult> {
    const response = await fetch(`${this.base}/api/wordlist`, {
      method: "POST",
      body: csv,
      headers: { "content-type": "text/csv" },
    });
    if (!response.ok) await reject(response);
    return response.json();
  }

  async schemes(): Promise<SchemeInfo[]> {
    const response = await fetch(`${this.base}/api/schemes`);
    if (!response.ok) await reject(response);
    return (await response.json()).schemes;
  }

  async palettes(): Promise<PaletteInfo[]> {
    const response = await fetch(`${this.base}/api/palettes`);
    if (!response.ok) await reject(response);
    return (await response.json()).palettes;
  }

  async fonts(): Promise<FontInfo[]> {
    const response = await fetch(`${this.base}/api/fonts`);
    if (!response.ok) await reject(response);
    return (await response.json()).fonts;
  }

  descriptorUrl(params: DescriptorParams): string {
    const q = new URLSearchParams({
      id: params.id,
      scheme: params.scheme,
      entropy: String(params.entropy),
      speed: String(params.speed),
      seed: String(params.seed),
      width: String(params.width),
      height: String(params.height),
    });
    return `${this.base}/api/descriptor?${q}`;
  }

  async descriptor(params: DescriptorParams, signal?: AbortSignal): Promise<DescriptorDoc> {
    const response = await fetch(this.descriptorUrl(params), { signal });
    if (!response.ok) await reject(response);
    return validateDescriptor(await response.json());
  }

  gifUrl(params: DescriptorParams, fps: number, palette: string, font: string): string {
    const q = new URLSearchParams({
      id: params.id,
      scheme: params.scheme,
      entropy: String(params.entropy),
      speed: String(params.speed),
      seed: String(params.seed),
      width: String(params.width),
      height: String(params.height),
      fps: String(fps),
      palette,
      font,
    });
    return `${this.base}/api/gif?${q}`;
  }

  async gif(params: DescriptorParams, fps: number, palette: string, font: string): Promise<Blob> {
    const response = await fetch(this.gifUrl(params, fps, palette, font));
    if (!response.ok) await reject(response);
    return response.blob();
  }
}
