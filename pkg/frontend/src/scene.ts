/** Pure scene construction: (network, positions, view state) -> draw
 * list.  Keeping this free of canvas calls makes sizing, coloring, and
 * hit-testing directly testable. */

import type { NetworkPayload } from "./api.js";
import type { ViewState } from "./state.js";
import { toScreen } from "./state.js";

export interface NodeShape {
  node: number;
  x: number;
  y: number;
  radius: number;
  color: string;
  selected: boolean;
}

export interface LinkShape {
  source: number;
  target: number;
  x1: number;
  y1: number;
  x2: number;
  y2: number;
  width: number;
  color: string;
}

export interface Scene {
  links: LinkShape[];
  nodes: NodeShape[];
  colorCount: number;
}

export const CATEGORICAL_PALETTE = [
  "#1b9e77", "#d95f02", "#7570b3", "#e7298a", "#66a61e",
  "#e6ab02", "#a6761d", "#666666", "#386cb0", "#f0027f",
];

const DEFAULT_NODE_COLOR = "#4c78a8";
const DEFAULT_LINK_COLOR = "#bbbbbb";
const SELECTED_RING = "#e45756";

export function sizeScale(values: number[], range: [number, number]): number[] {
  const low = Math.min(...values);
  const high = Math.max(...values);
  if (!(high - low > 0)) {
    const mid = (range[0] + range[1]) / 2;
    return values.map(() => mid);
  }
  return values.map((v) => range[0] + ((v - low) / (high - low)) * (range[1] - range[0]));
}

export function labelColors(labels: number[]): string[] {
  return labels.map((label) => CATEGORICAL_PALETTE[label % CATEGORICAL_PALETTE.length]);
}

export function valueColors(values: number[]): string[] {
  const low = Math.min(...values);
  const high = Math.max(...values);
  return values.map((v) => {
    const t = high - low > 0 ? (v - low) / (high - low) : 0.5;
    const r = Math.round(44 + (215 - 44) * t);
    const g = Math.round(123 + (25 - 123) * t);
    const b = Math.round(182 + (28 - 182) * t);
    return `#${r.toString(16).padStart(2, "0")}${g.toString(16).padStart(2, "0")}${b
      .toString(16)
      .padStart(2, "0")}`;
  });
}

export function buildScene(
  network: NetworkPayload,
  state: ViewState,
  width: number,
  height: number,
): Scene {
  const n = network.nodes.length;
  const positions =
    state.positions ??
    network.nodes.map((_, index): [number, number] => {
      const angle = (2 * Math.PI * index) / Math.max(n, 1);
      return [0.5 + 0.45 * Math.cos(angle), 0.5 + 0.45 * Math.sin(angle)];
    });

  let radii: number[] = new Array(n).fill(6);
  if (state.sizeBinding) {
    const entry = state.results.get(state.sizeBinding.source);
    if (entry && entry.kind === "values") {
      radii = sizeScale(entry.values, state.sizeBinding.range);
    }
  }

  let colors: string[] = new Array(n).fill(DEFAULT_NODE_COLOR);
  let colorCount = 1;
  if (state.colorBinding) {
    const entry = state.results.get(state.colorBinding.source);
    if (entry && entry.kind === "labels") {
      colors = labelColors(entry.labels);
      colorCount = new Set(colors).size;
    } else if (entry && entry.kind === "values") {
      colors = valueColors(entry.values);
      colorCount = new Set(colors).size;
    }
  }

  const screen = positions.map(([x, y]) => toScreen(state.transform, width, height, x, y));
  const links: LinkShape[] = network.links.map((link) => {
    const [x1, y1] = screen[link.source];
    const [x2, y2] = screen[link.target];
    return {
      source: link.source,
      target: link.target,
      x1,
      y1,
      x2,
      y2,
      width: Math.max(0.5, state.transform.scale * 0.8),
      color: DEFAULT_LINK_COLOR,
    };
  });
  const nodes: NodeShape[] = network.nodes.map((node, index) => ({
    node: index,
    x: screen[index][0],
    y: screen[index][1],
    radius: radii[index] * Math.sqrt(state.transform.scale),
    color: colors[index],
    selected: state.selected.has(index),
  }));
  return { links, nodes, colorCount };
}

/** Topmost node under the pointer, or null; nodes are drawn last-on-top. */
export function hitTest(scene: Scene, px: number, py: number, slack = 2): number | null {
  for (let index = scene.nodes.length - 1; index >= 0; index -= 1) {
    const shape = scene.nodes[index];
    const dx = shape.x - px;
    const dy = shape.y - py;
    if (dx * dx + dy * dy <= (shape.radius + slack) * (shape.radius + slack)) {
      return shape.node;
    }
  }
  return null;
}

/** Minimal 2-D context surface the painter needs; tests supply a recorder. */
export interface Painter2D {
  clearRect(x: number, y: number, w: number, h: number): void;
  beginPath(): void;
  moveTo(x: number, y: number): void;
  lineTo(x: number, y: number): void;
  arc(x: number, y: number, r: number, a0: number, a1: number): void;
  stroke(): void;
  fill(): void;
  strokeStyle: string | CanvasGradient | CanvasPattern;
  fillStyle: string | CanvasGradient | CanvasPattern;
  lineWidth: number;
}

export function paintScene(ctx: Painter2D, scene: Scene, width: number, height: number): void {
  ctx.clearRect(0, 0, width, height);
  for (const link of scene.links) {
    ctx.beginPath();
    ctx.strokeStyle = link.color;
    ctx.lineWidth = link.width;
    ctx.moveTo(link.x1, link.y1);
    ctx.lineTo(link.x2, link.y2);
    ctx.stroke();
  }
  for (const node of scene.nodes) {
    ctx.beginPath();
    ctx.fillStyle = node.color;
    ctx.arc(node.x, node.y, node.radius, 0, 2 * Math.PI);
    ctx.fill();
    if (node.selected) {
      ctx.beginPath();
      ctx.strokeStyle = SELECTED_RING;
      ctx.lineWidth = 2;
      ctx.arc(node.x, node.y, node.radius + 3, 0, 2 * Math.PI);
      ctx.stroke();
    }
  }
}
