/**
 * Authoring app: load data, choose style, pick a scheme, tune entropy and
 * speed with a live preview, export a GIF.
 */

import { ApiClient, ApiError, DescriptorParams, PaletteInfo, SchemeInfo } from "./api.js";
import { DescriptorDoc, DescriptorSchemaError } from "./descriptor.js";
import { Player } from "./player.js";
import { RefetchScheduler } from "./refetch.js";
import { buildGallery } from "./gallery.js";

const DETENTS = [0, 0.5, 1];
const DETENT_SNAP = 0.04;

export interface SessionState {
  wordlistId: string | null;
  wordCount: number;
  scheme: string;
  entropy: number;
  speed: number;
  seed: number;
  palette: string;
  font: string;
  playing: boolean;
  descriptor: DescriptorDoc | null;
}

function $(id: string): HTMLElement {
  const el = document.getElementById(id);
  if (!el) throw new Error(`missing element #${id}`);
  return el;
}

function snapDetent(value: number): number {
  for (const d of DETENTS) {
    if (Math.abs(value - d) <= DETENT_SNAP) return d;
  }
  return value;
}

export function startApp(): void {
  const api = new ApiClient("");
  const state: SessionState = {
    wordlistId: null,
    wordCount: 0,
    scheme: "dance",
    entropy: 0.5,
    speed: 0.5,
    seed: 7,
    palette: "mono",
    font: "default",
    playing: true,
    descriptor: null,
  };

  let palettes: PaletteInfo[] = [];
  let schemes: SchemeInfo[] = [];

  const canvas = $("preview") as HTMLCanvasElement;
  const player = new Player(canvas, (t) => {
    ($("phase-readout") as HTMLElement).textContent = `t = ${t.toFixed(2)}`;
  });

  const banner = $("error-banner");
  const toast = $("toast");

  function showBanner(message: string): void {
    banner.textContent = message;
    banner.classList.remove("hidden");
  }

  function clearBanner(): void {
    banner.classList.add("hidden");
  }

  function showToast(message: string): void {
    toast.textContent = message;
    toast.classList.remove("hidden");
    setTimeout(() => toast.classList.add("hidden"), 4000);
  }

  function currentPalette(): PaletteInfo {
    return palettes.find((p) => p.id === state.palette) ?? palettes[0];
  }

  function params(): DescriptorParams {
    if (!state.wordlistId) throw new Error("no word list uploaded");
    return {
      id: state.wordlistId,
      scheme: state.scheme,
      entropy: state.entropy,
      speed: state.speed,
      seed: state.seed,
      width: 800,
      height: 600,
    };
  }

  const refetcher = new RefetchScheduler<DescriptorParams, DescriptorDoc>(
    (p, signal) => api.descriptor(p, signal),
    (doc) => {
      clearBanner();
      state.descriptor = doc;
      ($("group-count") as HTMLElement).textContent =
        `${doc.groups.group_count} group${doc.groups.group_count === 1 ? "" : "s"}`;
      ($("duration-readout") as HTMLElement).textContent = `${doc.duration.toFixed(1)} s loop`;
      player.setContent(doc, currentPalette(), fontFamilyFor(state.font));
      if (state.playing) player.play();
    },
    (error) => {
      if (error instanceof DescriptorSchemaError) {
        showBanner(`Malformed descriptor from service: ${error.message}`);
      } else if (error instanceof ApiError) {
        showBanner(`${error.code}: ${error.message}`);
      } else {
        showBanner(String(error));
      }
    },
  );

  function refetch(settled: boolean): void {
    if (!state.wordlistId) return;
    if (settled) refetcher.fire(params());
    else refetcher.request(params());
  }

  // ---- data step ----
  const fileInput = $("csv-file") as HTMLInputElement;
  fileInput.addEventListener("change", async () => {
    const file = fileInput.files?.[0];
    if (!file) return;
    await upload(await file.text());
  });
  $("load-sample").addEventListener("click", () => upload(SAMPLE_CSV));
  const csvText = $("csv-text") as HTMLTextAreaElement;
  $("load-pasted").addEventListener("click", () => upload(csvText.value));

  async function upload(csv: string): Promise<void> {
    try {
      const result = await api.uploadWordlist(csv);
      state.wordlistId = result.id;
      state.wordCount = result.word_count;
      ($("data-status") as HTMLElement).textContent =
        `${result.word_count} words loaded (id ${result.id})`;
      clearBanner();
      refetch(true);
    } catch (error) {
      if (error instanceof ApiError) showBanner(`${error.code}: ${error.message}`);
      else showBanner(String(error));
    }
  }

  // ---- style step ----
  const paletteSelect = $("palette-select") as HTMLSelectElement;
  paletteSelect.addEventListener("change", () => {
    state.palette = paletteSelect.value;
    if (state.descriptor) {
      player.setContent(state.descriptor, currentPalette(), fontFamilyFor(state.font));
      if (state.playing) player.play();
    }
  });
  const fontSelect = $("font-select") as HTMLSelectElement;
  fontSelect.addEventListener("change", () => {
    state.font = fontSelect.value;
    if (state.descriptor) {
      player.setContent(state.descriptor, currentPalette(), fontFamilyFor(state.font));
      if (state.playing) player.play();
    }
  });

  // ---- scheme step ----
  const schemeBox = $("scheme-buttons");

  function renderSchemeButtons(): void {
    schemeBox.textContent = "";
    for (const scheme of schemes) {
      const button = document.createElement("button");
      button.className = "scheme" + (scheme.id === state.scheme ? " active" : "");
      button.textContent = `${scheme.id} (${scheme.emotion_label})`;
      button.addEventListener("click", () => {
        state.scheme = scheme.id;
        renderSchemeButtons();
        refetch(true);
      });
      schemeBox.appendChild(button);
    }
  }

  // ---- knobs ----
  const entropySlider = $("entropy") as HTMLInputElement;
  const speedSlider = $("speed") as HTMLInputElement;
  const seedInput = $("seed") as HTMLInputElement;

  entropySlider.addEventListener("input", () => {
    state.entropy = snapDetent(parseFloat(entropySlider.value));
    entropySlider.value = String(state.entropy);
    ($("entropy-readout") as HTMLElement).textContent = state.entropy.toFixed(2);
    refetch(false);
  });
  speedSlider.addEventListener("input", () => {
    state.speed = snapDetent(parseFloat(speedSlider.value));
    speedSlider.value = String(state.speed);
    ($("speed-readout") as HTMLElement).textContent = state.speed.toFixed(2);
    refetch(false);
  });
  seedInput.addEventListener("change", () => {
    state.seed = Math.max(0, Math.floor(Number(seedInput.value) || 0));
    refetch(true);
  });
  $("reroll").addEventListener("click", () => {
    state.seed = Math.floor(Math.random() * 1e9);
    seedInput.value = String(state.seed);
    refetch(true);
  });

  // ---- playback ----
  $("play").addEventListener("click", () => {
    state.playing = true;
    player.play();
  });
  $("pause").addEventListener("click", () => {
    state.playing = false;
    player.pause();
  });
  $("reset").addEventListener("click", () => {
    state.playing = false;
    player.reset();  // paused at t = 0: the static word cloud
  });

  // ---- export ----
  const exportButton = $("export") as HTMLButtonElement;
  exportButton.addEventListener("click", async () => {
    if (!state.wordlistId) return;
    exportButton.disabled = true;
    exportButton.textContent = "Rendering GIF...";
    try {
      const blob = await api.gif(params(), 20, state.palette, state.font);
      const url = URL.createObjectURL(blob);
      const link = document.createElement("a");
      link.href = url;
      link.download = `${state.scheme}-e${state.entropy}-s${state.speed}.gif`;
      link.click();
      URL.revokeObjectURL(url);
    } catch (error) {
      showToast(error instanceof ApiError
        ? `GIF export failed: ${error.message}`
        : `GIF export failed: ${error}`);
    } finally {
      exportButton.disabled = false;
      exportButton.textContent = "Export GIF";
    }
  });

  // ---- boot ----
  (async () => {
    try {
      [schemes, palettes] = await Promise.all([api.schemes(), api.palettes()]);
      const fonts = await api.fonts();
      renderSchemeButtons();
      for (const p of palettes) {
        const option = document.createElement("option");
        option.value = p.id;
        option.textContent = p.id;
        paletteSelect.appendChild(option);
      }
      for (const f of fonts) {
        const option = document.createElement("option");
        option.value = f.id;
        option.textContent = f.id;
        fontSelect.appendChild(option);
      }
      await buildGallery($("gallery"), api, SAMPLE_CSV);
    } catch (error) {
      showBanner(`Cannot reach the emordle service: ${error}`);
    }
  })();
}

export function fontFamilyFor(fontId: string): string {
  switch (fontId) {
    case "serif":
      return "'DejaVu Serif', Georgia, serif";
    case "mono":
      return "'DejaVu Sans Mono', Consolas, monospace";
    case "bold":
      return "'DejaVu Sans', Verdana, sans-serif";
    default:
      return "'DejaVu Sans', Verdana, sans-serif";
  }
}

export const SAMPLE_CSV = `text,weight
consectetur,100
adipiscing,92
incididunt,85
eiusmod,78
aliquip,72
tempor,66
dolore,61
veniam,56
labore,52
magna,48
lorem,44
ipsum,40
dolor,37
aliqua,34
minim,31
amet,28
elit,26
sed,24
`;
