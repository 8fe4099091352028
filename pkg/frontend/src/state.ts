/** View state: pan/zoom transform, selection, bindings, cached results.
 * Pure data plus pure update helpers, so rendering stays a function of
 * (server network, server results, local view state). */

import type { NetworkPayload } from "./api.js";

export interface Transform {
  scale: number;
  offsetX: number;
  offsetY: number;
}

export interface SizeBinding {
  kind: "nodeSize";
  source: string; // result key
  range: [number, number];
}

export interface ColorBinding {
  kind: "nodeColor";
  source: string; // result key, values or labels
}

export interface ViewState {
  transform: Transform;
  selected: Set<number>;
  activeLayout: string | null;
  positions: [number, number][] | null;
  sizeBinding: SizeBinding | null;
  colorBinding: ColorBinding | null;
  results: Map<string, ResultEntry>;
}

export type ResultEntry =
  | { kind: "values"; values: number[] }
  | { kind: "labels"; labels: number[]; k: number }
  | { kind: "pairs"; pairs: [number, number, number][] };

export function initialViewState(): ViewState {
  return {
    transform: { scale: 1, offsetX: 0, offsetY: 0 },
    selected: new Set(),
    activeLayout: null,
    positions: null,
    sizeBinding: null,
    colorBinding: null,
    results: new Map(),
  };
}

/** Unit-square coordinates to canvas pixels (y grows downward). */
export function toScreen(
  transform: Transform,
  width: number,
  height: number,
  x: number,
  y: number,
): [number, number] {
  return [
    (x * width + transform.offsetX - width / 2) * transform.scale + width / 2,
    ((1 - y) * height + transform.offsetY - height / 2) * transform.scale + height / 2,
  ];
}

/** Canvas pixels back to unit-square coordinates; inverse of toScreen. */
export function toWorld(
  transform: Transform,
  width: number,
  height: number,
  px: number,
  py: number,
): [number, number] {
  const x = ((px - width / 2) / transform.scale + width / 2 - transform.offsetX) / width;
  const y = 1 - ((py - height / 2) / transform.scale + height / 2 - transform.offsetY) / height;
  return [x, y];
}

export function zoomAt(
  transform: Transform,
  width: number,
  height: number,
  px: number,
  py: number,
  factor: number,
): Transform {
  const next = Math.min(40, Math.max(0.05, transform.scale * factor));
  const effective = next / transform.scale;
  // Keep the world point under the cursor fixed while scaling.
  const cx = width / 2;
  const cy = height / 2;
  return {
    scale: next,
    offsetX: transform.offsetX + (px - cx) * (1 - effective) / next,
    offsetY: transform.offsetY + (py - cy) * (1 - effective) / next,
  };
}

export function panBy(transform: Transform, dxPixels: number, dyPixels: number): Transform {
  return {
    scale: transform.scale,
    offsetX: transform.offsetX + dxPixels / transform.scale,
    offsetY: transform.offsetY + dyPixels / transform.scale,
  };
}

/** Serializable snapshot: replaying it reproduces the same render. */
export interface ViewSnapshot {
  transform: Transform;
  selected: number[];
  activeLayout: string | null;
  positions: [number, number][] | null;
  sizeBinding: SizeBinding | null;
  colorBinding: ColorBinding | null;
  results: [string, ResultEntry][];
}

export function snapshotView(state: ViewState): ViewSnapshot {
  return {
    transform: { ...state.transform },
    selected: [...state.selected].sort((a, b) => a - b),
    activeLayout: state.activeLayout,
    positions: state.positions ? state.positions.map((p) => [...p] as [number, number]) : null,
    sizeBinding: state.sizeBinding ? { ...state.sizeBinding } : null,
    colorBinding: state.colorBinding ? { ...state.colorBinding } : null,
    results: [...state.results.entries()],
  };
}

export function restoreView(snapshot: ViewSnapshot): ViewState {
  return {
    transform: { ...snapshot.transform },
    selected: new Set(snapshot.selected),
    activeLayout: snapshot.activeLayout,
    positions: snapshot.positions
      ? snapshot.positions.map((p) => [...p] as [number, number])
      : null,
    sizeBinding: snapshot.sizeBinding ? { ...snapshot.sizeBinding } : null,
    colorBinding: snapshot.colorBinding ? { ...snapshot.colorBinding } : null,
    results: new Map(snapshot.results),
  };
}

/** Attribute names present on nodes/links, for the Data panel. */
export function attributeNames(network: NetworkPayload): { node: string[]; link: string[] } {
  const node = new Set<string>();
  for (const entry of network.nodes) {
    for (const key of Object.keys(entry)) {
      if (key !== "id") node.add(key);
    }
  }
  const link = new Set<string>();
  for (const entry of network.links) {
    for (const key of Object.keys(entry)) {
      if (key !== "source" && key !== "target") link.add(key);
    }
  }
  return { node: [...node].sort(), link: [...link].sort() };
}
