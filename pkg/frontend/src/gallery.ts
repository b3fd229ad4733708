/**
 * Gallery strip: the four built-in schemes playing side by side on one
 * sample dataset at medium entropy and speed.
 */

import { ApiClient } from "./api.js";
import { Player } from "./player.js";
import { fontFamilyFor } from "./app.js";

const EMOTION_PALETTE: Record<string, string> = {
  dance: "happiness",
  fade: "sadness",
  explosion: "anger",
  shiver: "fear",
};

export async function buildGallery(container: HTMLElement, api: ApiClient,
                                   sampleCsv: string): Promise<void> {
  const upload = await api.uploadWordlist(sampleCsv);
  const schemes = await api.schemes();
  const palettes = await api.palettes();
  container.textContent = "";

  for (const scheme of schemes.slice(0, 4)) {
    const cell = document.createElement("figure");
    cell.className = "gallery-cell";
    const canvas = document.createElement("canvas");
    cell.appendChild(canvas);
    const caption = document.createElement("figcaption");
    caption.textContent = `${scheme.id} - ${scheme.emotion_label}`;
    cell.appendChild(caption);
    container.appendChild(cell);

    const paletteId = EMOTION_PALETTE[scheme.id] ?? "mono";
    const palette = palettes.find((p) => p.id === paletteId) ?? palettes[0];
    const doc = await api.descriptor({
      id: upload.id,
      scheme: scheme.id,
      entropy: 0.5,
      speed: 0.5,
      seed: 7,
      width: 400,
      height: 300,
    });
    const player = new Player(canvas);
    player.setContent(doc, palette, fontFamilyFor("default"));
    player.play();
  }
}
